#include "doctest.h"

#include <algorithm>
#include <set>

#include "lsa/element.hpp"
#include "lsa/rng.hpp"
#include "lsa/word.hpp"

using namespace lsa;

namespace {

Word random_word(const AlgebraSpec& alg, Rng& rng, int len = 4) {
    std::vector<int> gens;
    for (int i = 0; i < len; ++i) gens.push_back(int(rng.below(alg.generator_count())));
    return normal_form(alg, gens);
}

// oracle: enumerate every generator sequence of length <= r
std::set<Word> brute_force_ball(const AlgebraSpec& alg, int r) {
    std::set<Word> out{alg.unit_word()};
    std::vector<Word> frontier{alg.unit_word()};
    for (int len = 1; len <= r; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (size_t g = 1; g < alg.generator_count(); ++g) {
                Word p = word_mul(alg, w, alg.generator_word(g));
                next.push_back(p);
                out.insert(p);
            }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("multiplication is associative and unital") {
    Rng rng(42);
    for (const AlgebraSpec& alg :
         {AlgebraSpec::polynomial(2), AlgebraSpec::laurent(2), AlgebraSpec::heisenberg()}) {
        Word e = alg.unit_word();
        for (int t = 0; t < 100; ++t) {
            Word a = random_word(alg, rng), b = random_word(alg, rng), c = random_word(alg, rng);
            CHECK(word_mul(alg, word_mul(alg, a, b), c) == word_mul(alg, a, word_mul(alg, b, c)));
            CHECK(word_mul(alg, a, e) == a);
            CHECK(word_mul(alg, e, a) == a);
        }
    }
}

TEST_CASE("heisenberg relation y x = x y z and central z") {
    AlgebraSpec h = AlgebraSpec::heisenberg();
    Word x = h.generator_word(1), y = h.generator_word(3);
    Word yx = word_mul(h, y, x);
    Word xyz{{1, 1, 1}};
    CHECK(yx == xyz);
    // z = y^-1 x^-1 y x is reachable at length 4 (and x^-1 y^-1 x y = z^-1)
    Word z = normal_form(h, {4, 2, 3, 1});
    CHECK(z == Word{{0, 0, 1}});
    CHECK(normal_form(h, {2, 4, 1, 3}) == Word{{0, 0, -1}});
    for (int t = 0; t < 20; ++t) {
        Rng rng(t);
        Word a = random_word(h, rng);
        CHECK(word_mul(h, a, z) == word_mul(h, z, a));
    }
}

TEST_CASE("ball enumeration matches the all-sequences oracle") {
    for (const AlgebraSpec& alg :
         {AlgebraSpec::polynomial(1), AlgebraSpec::laurent(2), AlgebraSpec::heisenberg()}) {
        for (int r = 0; r <= 4; ++r) {
            Ball b = enumerate_ball(alg, r);
            auto oracle = brute_force_ball(alg, r);
            CHECK(b.words.size() == oracle.size());
            for (const Word& w : b.words) CHECK(oracle.count(w) == 1);
        }
    }
}

TEST_CASE("ball growth: polynomial linear, laurent(2) quadratic") {
    AlgebraSpec p = AlgebraSpec::polynomial(1);
    CHECK(enumerate_ball(p, 5).words.size() == 6);
    AlgebraSpec l = AlgebraSpec::laurent(2);
    // diamond |e1|+|e2| <= r
    CHECK(enumerate_ball(l, 3).words.size() == 2 * 3 * 3 + 2 * 3 + 1);
}

TEST_CASE("balls are nested and sorted") {
    AlgebraSpec h = AlgebraSpec::heisenberg();
    Ball b2 = enumerate_ball(h, 2), b3 = enumerate_ball(h, 3);
    for (const Word& w : b2.words) CHECK(b3.contains(w));
    CHECK(std::is_sorted(b3.words.begin(), b3.words.end(), word_less));
}

TEST_CASE("custom rewriting: commutative pair via rules") {
    // generators a, b with rule ba -> ab
    AlgebraSpec alg = AlgebraSpec::custom({"a", "b"}, {RewriteRule{{2, 1}, {1, 2}}});
    Word ab = normal_form(alg, {1, 2});
    Word ba = normal_form(alg, {2, 1});
    CHECK(ab == ba);
    CHECK(enumerate_ball(alg, 2).words.size() == 6);  // 1, a, b, aa, ab, bb
}

TEST_CASE("custom rewriting budget triggers on divergent rules") {
    // a -> aa grows forever
    AlgebraSpec alg = AlgebraSpec::custom({"a"}, {RewriteRule{{1}, {1, 1}}});
    CHECK_THROWS_AS(normal_form(alg, {1}), non_termination);
}

TEST_CASE("element arithmetic over GF(2)") {
    AlgebraSpec p = AlgebraSpec::polynomial(1);
    GFp f2(2);
    auto x = Element<GFp>::monomial(p, f2, p.generator_word(1), 1);
    auto one = Element<GFp>::unit(p, f2);
    auto s = one + x;
    auto sq = s * s;  // (1+x)^2 = 1 + x^2 over GF(2)
    CHECK(sq.terms().size() == 2);
    CHECK(sq.terms().count(Word{{0}}) == 1);
    CHECK(sq.terms().count(Word{{2}}) == 1);
    CHECK((s - s).is_zero());
}

TEST_CASE("element coords name out-of-span terms") {
    AlgebraSpec p = AlgebraSpec::polynomial(1);
    Rationals q;
    auto big = Element<Rationals>::monomial(p, q, Word{{9}}, q.one());
    Ball b = enumerate_ball(p, 3);
    CHECK_THROWS_WITH_AS(element_coords(big, b), "term outside span: x^9", out_of_ball);
}
