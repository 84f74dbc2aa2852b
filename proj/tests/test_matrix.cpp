#include "doctest.h"

#include "lsa/matrix.hpp"
#include "lsa/rng.hpp"
#include "lsa/subspace.hpp"

using namespace lsa;

namespace {

template <class F>
Matrix<F> random_matrix(const F& f, size_t r, size_t c, Rng& rng) {
    Matrix<F> m(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            long v = (f.spec().kind == FieldSpec::Kind::PrimeField)
                         ? long(rng.below(f.spec().modulus))
                         : rng.int_in(-5, 5);
            m.at(i, j) = f.from_int(v);
        }
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    GFp f2(2);
    Rationals q;
    CHECK(mat_rank(Matrix<GFp>::identity(f2, 3)) == 3);
    CHECK(mat_rank(Matrix<Rationals>(q, 2, 4)) == 0);
    Matrix<Rationals> m(q, 2, 2);
    m.at(0, 0) = q.from_int(1);
    m.at(0, 1) = q.from_int(2);
    m.at(1, 0) = q.from_int(2);
    m.at(1, 1) = q.from_int(4);
    CHECK(mat_rank(m) == 1);
}

TEST_CASE("rank-nullity and rank invariance on random matrices") {
    GFp f5(5);
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        auto m = random_matrix(f5, r, c, rng);
        CHECK(mat_rank(m) + nullspace(m).dim() == c);
        // invertible row/col scaling preserves rank
        auto p = random_matrix(f5, r, r, rng);
        while (mat_rank(p) < r) p = random_matrix(f5, r, r, rng);
        CHECK(mat_rank(p * m) == mat_rank(m));
    }
}

TEST_CASE("rk_dist metric axioms on sampled triples") {
    Rationals q;
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(q, 4, 4, rng);
        auto b = random_matrix(q, 4, 4, rng);
        auto c = random_matrix(q, 4, 4, rng);
        CHECK(rk_dist(a, a) == 0);
        CHECK(rk_dist(a, b) == rk_dist(b, a));
        CHECK(rk_dist(a, c) <= rk_dist(a, b) + rk_dist(b, c));
        if (!(a == b)) CHECK(rk_dist(a, b) > 0);
    }
}

TEST_CASE("truncated shift vs cyclic shift differ in one column") {
    // J_4 (nilpotent shift) and C_4 (companion of x^4-1) differ in rank 1
    GFp f2(2);
    Matrix<GFp> j(f2, 4, 4), c(f2, 4, 4);
    for (size_t i = 0; i + 1 < 4; ++i) {
        j.at(i + 1, i) = 1;
        c.at(i + 1, i) = 1;
    }
    c.at(0, 3) = 1;
    CHECK(rk_dist(j, c) == make_rat(1, 4));
}

TEST_CASE("nullspace over GF(2)") {
    GFp f2(2);
    Matrix<GFp> m(f2, 1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    auto ker = nullspace(m);
    REQUIRE(ker.dim() == 1);
    CHECK(ker.basis().at(0, 0) == 1);
    CHECK(ker.basis().at(1, 0) == 1);
}

TEST_CASE("subspace canonical form is spanning-set independent") {
    Rationals q;
    Rng rng(99);
    for (int t = 0; t < 30; ++t) {
        auto m = random_matrix(q, 5, 3, rng);
        Subspace<Rationals> s1 = Subspace<Rationals>::from_columns(m);
        // re-span by random invertible column mixes
        auto g = random_matrix(q, 3, 3, rng);
        while (mat_rank(g) < 3) g = random_matrix(q, 3, 3, rng);
        Subspace<Rationals> s2 = Subspace<Rationals>::from_columns(m * g);
        CHECK(s1 == s2);
    }
}

TEST_CASE("complete_to_basis keeps inputs and is invertible") {
    GFp f2(2);
    Matrix<GFp> v(f2, 2, 1);
    v.at(0, 0) = 1;
    v.at(1, 0) = 1;
    auto b = complete_to_basis(v);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(1, 1) == 0);
    CHECK(mat_rank(b) == 2);

    Matrix<GFp> dep(f2, 2, 2);
    dep.at(0, 0) = 1;
    dep.at(0, 1) = 1;
    CHECK_THROWS_AS(complete_to_basis(dep), std::invalid_argument);
}

TEST_CASE("subspace sum and intersection dimensions") {
    GFp f3(3);
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        auto a = Subspace<GFp>::from_columns(random_matrix(f3, 5, 2, rng));
        auto b = Subspace<GFp>::from_columns(random_matrix(f3, 5, 3, rng));
        auto s = subspace_sum(a, b);
        auto i = subspace_intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        for (size_t j = 0; j < i.dim(); ++j) {
            CHECK(a.contains(i.basis().col(j)));
            CHECK(b.contains(i.basis().col(j)));
        }
    }
}

TEST_CASE("kron_and_pad block structure") {
    Rationals q;
    auto i2 = Matrix<Rationals>::identity(q, 2);
    CHECK(kron_and_pad(i2, 2, 0) == Matrix<Rationals>::identity(q, 4));
    CHECK(kron_and_pad(i2, 1, 0) == i2);

    Matrix<Rationals> j2(q, 2, 2);
    j2.at(1, 0) = q.one();
    auto big = kron_and_pad(j2, 2, 1);
    CHECK(big.rows() == 5);
    CHECK(mat_rank(big) == 2);
}

TEST_CASE("inverse round-trip and singular detection") {
    GFp f7(7);
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        auto m = random_matrix(f7, 4, 4, rng);
        if (mat_rank(m) < 4) {
            CHECK_THROWS_AS(mat_inverse(m), std::domain_error);
        } else {
            CHECK(m * mat_inverse(m) == Matrix<GFp>::identity(f7, 4));
        }
    }
}

TEST_CASE("rank subadditivity") {
    Rationals q;
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(q, 4, 5, rng);
        auto b = random_matrix(q, 4, 5, rng);
        CHECK(mat_rank(a + b) <= mat_rank(a) + mat_rank(b));
    }
}

TEST_CASE("mul_right_sparse agrees with dense product") {
    GFp f5(5);
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(f5, 4, 3, rng);
        auto b = random_matrix(f5, 3, 6, rng);
        CHECK(mul_right_sparse(a, b) == a * b);
    }
}
