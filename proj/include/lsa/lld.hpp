#pragma once

#include <optional>

#include "lsa/approx.hpp"

namespace lsa {

// Family of linear operators V -> W given as d matrices of one shape b x a.
template <class F>
struct OperatorFamily {
    std::vector<Matrix<F>> ops;

    size_t count() const { return ops.size(); }
    size_t domain_dim() const { return ops.empty() ? 0 : ops[0].cols(); }
    size_t codomain_dim() const { return ops.empty() ? 0 : ops[0].rows(); }

    void validate() const {
        if (ops.empty()) throw std::invalid_argument("empty operator family");
        for (const auto& m : ops)
            if (!m.same_shape(ops[0]))
                throw dimension_mismatch("operator family with mixed shapes");
    }
};

template <class F>
struct LldReport {
    bool lld = false;
    uint64_t points_checked = 0;
    std::string method;
    // a vector where the images are independent, when the family is not LLD
    std::optional<std::vector<typename F::Elem>> witness;
};

namespace detail {

// rank of the d images T_i v, stacked as rows
template <class F>
size_t image_rank(const OperatorFamily<F>& fam, const std::vector<typename F::Elem>& v) {
    Eliminator<F> el(fam.ops[0].field(), fam.codomain_dim());
    for (const auto& t : fam.ops) el.add(t.apply(v));
    return el.dim();
}

}  // namespace detail

// Decides local linear dependence: every v makes {T_1 v .. T_d v} dependent.
// Over GF(q) with q^a within budget the check is exhaustive; over Q it runs
// on the integer grid {0..d*min(a,b)}^a, which determines the d x d minors
// (polynomials of degree d in v) identically.
template <class F>
LldReport<F> is_lld(const OperatorFamily<F>& fam) {
    fam.validate();
    const F& f = fam.ops[0].field();
    const size_t a = fam.domain_dim(), d = fam.count();
    LldReport<F> rep;
    rep.lld = true;
    if (f.spec().kind == FieldSpec::Kind::PrimeField) {
        if (!detail::exhaustive_feasible(f.spec(), a))
            throw precondition_error("domain too large for an exhaustive sweep over GF(q)");
        rep.method = "exhaustive";
        uint32_t q = f.spec().modulus;
        std::vector<uint32_t> c(a, 0);
        while (true) {
            std::vector<typename F::Elem> v(a);
            for (size_t j = 0; j < a; ++j) v[j] = f.from_int(long(c[j]));
            ++rep.points_checked;
            if (detail::image_rank(fam, v) >= d) {
                rep.lld = false;
                rep.witness = std::move(v);
                return rep;
            }
            size_t i = 0;
            while (i < a && c[i] == q - 1) c[i++] = 0;
            if (i == a) break;
            ++c[i];
        }
        return rep;
    }
    // rationals: grid of degree-bound-plus-one points per coordinate
    size_t side = d * std::min(a, size_t(fam.codomain_dim())) + 1;
    rep.method = "grid(" + std::to_string(side) + ")";
    std::vector<size_t> c(a, 0);
    while (true) {
        std::vector<typename F::Elem> v(a);
        for (size_t j = 0; j < a; ++j) v[j] = f.from_int(long(c[j]));
        ++rep.points_checked;
        if (detail::image_rank(fam, v) >= d) {
            rep.lld = false;
            rep.witness = std::move(v);
            return rep;
        }
        size_t i = 0;
        while (i < a && c[i] == side - 1) c[i++] = 0;
        if (i == a) break;
        ++c[i];
    }
    return rep;
}

template <class F>
struct CombinationResult {
    std::vector<typename F::Elem> coeffs;  // not all zero
    size_t rank = 0;                       // rank of sum c_i T_i
    size_t bms_bound = 0;                  // d - 1
    size_t amitsur_bound = 0;              // d(d+1)/2 - 1
    bool within_bms = false;
    bool within_amitsur = false;
};

// Searches for a nonzero combination of minimal rank. Over GF(q) the sweep
// is projective (first nonzero coefficient 1) and exhaustive; over Q the
// coefficients range over a projective integer grid with entries in [-8, 8]
// (supported for d <= 3).
template <class F>
CombinationResult<F> bms_search(const OperatorFamily<F>& fam) {
    fam.validate();
    const F& f = fam.ops[0].field();
    const size_t d = fam.count();
    CombinationResult<F> best;
    best.bms_bound = d - 1;
    best.amitsur_bound = d * (d + 1) / 2 - 1;
    best.rank = SIZE_MAX;

    auto consider = [&](const std::vector<typename F::Elem>& c) {
        Matrix<F> sum(f, fam.codomain_dim(), fam.domain_dim());
        for (size_t i = 0; i < d; ++i)
            if (!f.is_zero(c[i])) sum.add_scaled(fam.ops[i], c[i]);
        size_t r = mat_rank(sum);
        if (r < best.rank) {
            best.rank = r;
            best.coeffs = c;
        }
    };

    if (f.spec().kind == FieldSpec::Kind::PrimeField) {
        uint32_t q = f.spec().modulus;
        // projective points: lead index i with coeff 1, free tail
        for (size_t lead = 0; lead < d; ++lead) {
            size_t tail = d - lead - 1;
            if (!detail::exhaustive_feasible(f.spec(), tail, 1u << 22))
                throw precondition_error("coefficient sweep too large over GF(q)");
            std::vector<uint32_t> t(tail, 0);
            while (true) {
                std::vector<typename F::Elem> c(d, f.zero());
                c[lead] = f.one();
                for (size_t j = 0; j < tail; ++j) c[lead + 1 + j] = f.from_int(long(t[j]));
                consider(c);
                size_t i = 0;
                while (i < tail && t[i] == q - 1) t[i++] = 0;
                if (i == tail) break;
                ++t[i];
            }
        }
    } else {
        if (d > 3)
            throw unsupported_operation("rational coefficient sweep supported for d <= 3");
        const long B = 8;
        for (size_t lead = 0; lead < d; ++lead) {
            size_t tail = d - lead - 1;
            std::vector<long> t(tail, -B);
            while (true) {
                std::vector<typename F::Elem> c(d, f.zero());
                c[lead] = f.one();
                for (size_t j = 0; j < tail; ++j) c[lead + 1 + j] = f.from_int(t[j]);
                consider(c);
                size_t i = 0;
                while (i < tail && t[i] == B) t[i++] = -B;
                if (i == tail) break;
                ++t[i];
            }
        }
    }
    best.within_bms = best.rank <= best.bms_bound;
    best.within_amitsur = best.rank <= best.amitsur_bound;
    return best;
}

struct SweepReport {
    size_t a = 0, b = 0, d = 0;
    FieldSpec field;
    uint64_t families = 0;
    uint64_t lld_families = 0;
    size_t bms_bound = 0;
    size_t amitsur_bound = 0;
    size_t max_min_rank = 0;  // over LLD families, of the best combination
    bool all_within_bms = true;
    bool all_within_amitsur = true;
    std::string first_violation;  // empty when none
};

// Exhausts every d-tuple of b x a matrices over GF(q) (q^(abd) within a
// 2^24 budget), and checks the rank bounds for each LLD family.
inline SweepReport verify_bms_sweep(size_t a, size_t b, size_t d, const FieldSpec& fs) {
    if (fs.kind != FieldSpec::Kind::PrimeField)
        throw unsupported_operation("family sweep requires a finite field");
    if (!detail::exhaustive_feasible(fs, a * b * d, 1u << 24))
        throw precondition_error("family space exceeds the q^(abd) budget");
    GFp f(fs.modulus);
    uint32_t q = fs.modulus;
    SweepReport rep;
    rep.a = a;
    rep.b = b;
    rep.d = d;
    rep.field = fs;
    rep.bms_bound = d - 1;
    rep.amitsur_bound = d * (d + 1) / 2 - 1;

    const size_t cells = a * b * d;
    std::vector<uint32_t> c(cells, 0);
    OperatorFamily<GFp> fam;
    for (size_t i = 0; i < d; ++i) fam.ops.emplace_back(f, b, a);
    while (true) {
        size_t pos = 0;
        for (size_t i = 0; i < d; ++i)
            for (size_t r = 0; r < b; ++r)
                for (size_t col = 0; col < a; ++col) fam.ops[i].at(r, col) = c[pos++];
        ++rep.families;
        if (is_lld(fam).lld) {
            ++rep.lld_families;
            auto comb = bms_search(fam);
            rep.max_min_rank = std::max(rep.max_min_rank, comb.rank);
            if (!comb.within_bms && rep.all_within_bms) {
                rep.all_within_bms = false;
                rep.first_violation = "bms bound at family #" + std::to_string(rep.families);
            }
            if (!comb.within_amitsur && rep.all_within_amitsur) {
                rep.all_within_amitsur = false;
                if (rep.first_violation.empty())
                    rep.first_violation = "amitsur bound at family #" + std::to_string(rep.families);
            }
        }
        size_t i = 0;
        while (i < cells && c[i] == q - 1) c[i++] = 0;
        if (i == cells) break;
        ++c[i];
    }
    return rep;
}

}  // namespace lsa
