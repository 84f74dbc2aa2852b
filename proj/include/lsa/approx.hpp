#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "lsa/element.hpp"
#include "lsa/folner.hpp"
#include "lsa/rng.hpp"
#include "lsa/subspace.hpp"

namespace lsa {

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear map A -> M_n(K) determined by its values on the monomial ball
// Ball(degree_cap); values on basis words are produced on demand from the
// provenance (all built-in provenances yield column-sparse matrices, so the
// full table is never materialized unless loaded from a file).
template <class F>
class ApproxMap {
  public:
    using Elem = typename F::Elem;

    struct FolnerProv {
        FolnerWindow window;
        int d = 0;
        InvarianceReport invariance;  // against (Ball(2d), 1/(d|S^{2d}|))
        std::map<Word, size_t> index;
    };
    struct QuotientProv {
        long long m = 0;
    };
    struct AmplifiedProv {
        std::shared_ptr<const ApproxMap> source;
        size_t copies = 1;
        size_t pad = 0;
    };
    struct TableProv {
        std::map<Word, Matrix<F>> entries;
        std::string origin = "file";
    };
    using Prov = std::variant<FolnerProv, QuotientProv, AmplifiedProv, TableProv>;

    ApproxMap(AlgebraSpec alg, F field, size_t n, int degree_cap, Prov prov)
        : alg_(std::move(alg)),
          field_(std::move(field)),
          n_(n),
          degree_cap_(degree_cap),
          ball_(enumerate_ball(alg_, degree_cap)),
          prov_(std::move(prov)) {}

    const AlgebraSpec& algebra() const { return alg_; }
    const F& field() const { return field_; }
    size_t dim() const { return n_; }
    int degree_cap() const { return degree_cap_; }
    const Ball& ball() const { return ball_; }
    const Prov& provenance() const { return prov_; }

    std::string provenance_name() const {
        if (std::holds_alternative<FolnerProv>(prov_)) return "folner-window";
        if (std::holds_alternative<QuotientProv>(prov_)) return "quotient-rep";
        if (std::holds_alternative<AmplifiedProv>(prov_)) return "amplified";
        return std::get<TableProv>(prov_).origin;
    }

    bool exactly_multiplicative_provenance() const {
        if (std::holds_alternative<QuotientProv>(prov_)) return true;
        if (const auto* a = std::get_if<AmplifiedProv>(&prov_))
            return a->source->exactly_multiplicative_provenance();
        return false;
    }

    // Defined for every basis word: the built-in provenances give a total
    // linear map, only the degree-capped eval and file-backed tables are
    // partial.
    Matrix<F> matrix(const Word& w) const { return matrix_unchecked(w); }

    Matrix<F> eval(const Element<F>& a) const {
        if (!(a.algebra() == alg_)) throw algebra_mismatch("element over a different algebra");
        Matrix<F> r(field_, n_, n_);
        for (const auto& [w, c] : a.terms()) {
            if (!ball_.contains(w))
                throw out_of_ball("term beyond degree cap: " + word_str(alg_, w));
            r.add_scaled(matrix_unchecked(w), c);
        }
        return r;
    }

    // phi(w) * v without materializing phi(w), when cheaply possible.
    std::vector<Elem> apply_word(const Word& w, const std::vector<Elem>& v) const {
        if (const auto* fp = std::get_if<FolnerProv>(&prov_)) {
            std::vector<Elem> r(n_, field_.zero());
            for (size_t j = 0; j < n_; ++j) {
                if (field_.is_zero(v[j])) continue;
                auto it = fp->index.find(word_mul(alg_, w, fp->window.words[j]));
                if (it != fp->index.end()) r[it->second] = field_.add(r[it->second], v[j]);
            }
            return r;
        }
        return matrix_unchecked(w).apply(v);
    }

  private:
    Matrix<F> matrix_unchecked(const Word& w) const {
        if (const auto* fp = std::get_if<FolnerProv>(&prov_)) {
            Matrix<F> m(field_, n_, n_);
            for (size_t j = 0; j < n_; ++j) {
                auto it = fp->index.find(word_mul(alg_, w, fp->window.words[j]));
                if (it != fp->index.end()) m.at(it->second, j) = field_.one();
            }
            return m;
        }
        if (const auto* qp = std::get_if<QuotientProv>(&prov_)) return quotient_matrix(*qp, w);
        if (const auto* ap = std::get_if<AmplifiedProv>(&prov_))
            return kron_and_pad(ap->source->matrix(w), ap->copies, ap->pad);
        const auto& t = std::get<TableProv>(prov_).entries;
        auto it = t.find(w);
        if (it == t.end()) throw out_of_ball("word missing from table: " + word_str(alg_, w));
        return it->second;
    }

    Matrix<F> quotient_matrix(const QuotientProv& qp, const Word& w) const {
        const long long m = qp.m;
        auto mod = [m](long long x) { return ((x % m) + m) % m; };
        Matrix<F> r(field_, n_, n_);
        switch (alg_.kind) {
            case AlgebraSpec::Kind::Polynomial: {
                // companion of x^m - 1: cyclic shift by the exponent
                long long e = mod(w.e[0]);
                for (long long g = 0; g < m; ++g) r.at(size_t(mod(g + e)), size_t(g)) = field_.one();
                return r;
            }
            case AlgebraSpec::Kind::Laurent: {
                // regular representation of (Z/m)^rank
                size_t rank = size_t(alg_.rank);
                std::vector<long long> g(rank, 0);
                for (size_t idx = 0; idx < n_; ++idx) {
                    size_t tgt = 0;
                    for (size_t i = 0; i < rank; ++i) tgt = tgt * size_t(m) + size_t(mod(g[i] + w.e[i]));
                    r.at(tgt, idx) = field_.one();
                    for (size_t i = rank; i-- > 0;) {
                        if (++g[i] < m) break;
                        g[i] = 0;
                    }
                }
                return r;
            }
            case AlgebraSpec::Kind::Heisenberg: {
                // regular representation of the mod-m Heisenberg group
                long long wa = w.e[0], wb = w.e[1], wc = w.e[2];
                for (long long a = 0; a < m; ++a)
                    for (long long b = 0; b < m; ++b)
                        for (long long c = 0; c < m; ++c) {
                            long long ta = mod(wa + a), tb = mod(wb + b),
                                      tc = mod(wc + c + a * wb);
                            size_t src = size_t((a * m + b) * m + c);
                            size_t tgt = size_t((ta * m + tb) * m + tc);
                            r.at(tgt, src) = field_.one();
                        }
                return r;
            }
            case AlgebraSpec::Kind::Custom:
                throw unsupported_operation("no quotient representation for custom algebras");
        }
        throw std::logic_error("unknown algebra kind");
    }

    AlgebraSpec alg_;
    F field_;
    size_t n_;
    int degree_cap_;
    Ball ball_;
    Prov prov_;
};

// Folner-window construction: phi(b) = p . m_b in the window's word basis,
// with p the coordinate projection killing words outside W. degree_cap = 2d.
// The sufficient invariance condition (Ball(2d), 1/(d|S^{2d}|)) is recorded
// in the provenance; with enforce=true a failing window is a hard error.
template <class F>
ApproxMap<F> build_d_approximation(const AlgebraSpec& alg, const FolnerWindow& W, int d,
                                   const F& field, bool enforce_invariance = false) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (!(alg == W.algebra)) throw algebra_mismatch("window over a different algebra");
    Ball v = enumerate_ball(alg, 2 * d);
    Rat eps(1, static_cast<unsigned long>(d) * v.words.size());
    eps.canonicalize();
    InvarianceReport rep = invariance_check(alg, v.words, W, eps);
    if (enforce_invariance && !rep.holds)
        throw precondition_error(
            "window is not (A_<=2d, 1/(d|S^2d|))-invariant: dim VW = " +
            std::to_string(rep.dim_VW) + ", dim W = " + std::to_string(rep.dim_W) +
            ", epsilon = " + rat_str(eps));
    typename ApproxMap<F>::FolnerProv prov{W, d, rep, word_index(W.words)};
    return ApproxMap<F>(alg, field, W.dim(), 2 * d, std::move(prov));
}

template <class F>
ApproxMap<F> build_quotient_representation(const AlgebraSpec& alg, long long m, const F& field,
                                           int degree_cap) {
    if (m < 1) throw std::invalid_argument("quotient parameter must be >= 1");
    size_t n;
    switch (alg.kind) {
        case AlgebraSpec::Kind::Polynomial:
            if (alg.rank != 1)
                throw unsupported_operation("quotient representation needs polynomial(1)");
            n = size_t(m);
            break;
        case AlgebraSpec::Kind::Laurent: {
            n = 1;
            for (int i = 0; i < alg.rank; ++i) n *= size_t(m);
            break;
        }
        case AlgebraSpec::Kind::Heisenberg:
            n = size_t(m) * size_t(m) * size_t(m);
            break;
        default:
            throw unsupported_operation("no quotient representation for custom algebras");
    }
    return ApproxMap<F>(alg, field, n, degree_cap,
                        typename ApproxMap<F>::QuotientProv{m});
}

template <class F>
std::vector<ApproxMap<F>> amplify(const ApproxMap<F>& source,
                                  const std::vector<size_t>& targets) {
    auto src = std::make_shared<const ApproxMap<F>>(source);
    std::vector<ApproxMap<F>> out;
    for (size_t t : targets) {
        if (t < source.dim())
            throw std::invalid_argument("amplification target below source dimension");
        size_t c = t / source.dim(), r = t % source.dim();
        out.emplace_back(source.algebra(), source.field(), t, source.degree_cap(),
                         typename ApproxMap<F>::AmplifiedProv{src, c, r});
    }
    return out;
}

// Exact intersection of ker(phi(ab) - phi(a)phi(b)) over word pairs in L x R,
// computed by repeated kernel intersection. Works for any provenance.
template <class F>
Subspace<F> mult_subspace_pairs_by_kernels(const ApproxMap<F>& phi,
                                           const std::vector<Word>& L,
                                           const std::vector<Word>& R) {
    const F& f = phi.field();
    size_t n = phi.dim();
    Matrix<F> basis = Matrix<F>::identity(f, n);
    for (const Word& wa : L) {
        Matrix<F> ma = phi.matrix(wa);
        for (const Word& wb : R) {
            if (basis.cols() == 0) break;
            Matrix<F> defect = phi.matrix(word_mul(phi.algebra(), wa, wb)) - ma * phi.matrix(wb);
            if (defect.is_zero()) continue;
            Matrix<F> on_basis = defect * basis;
            Subspace<F> ker = nullspace(on_basis);
            if (ker.dim() == basis.cols()) continue;
            basis = basis * ker.basis();
        }
    }
    return Subspace<F>::from_columns(basis);
}

template <class F>
Subspace<F> mult_subspace_by_kernels(const ApproxMap<F>& phi, int d) {
    Ball b = enumerate_ball(phi.algebra(), d);
    return mult_subspace_pairs_by_kernels(phi, b.words, b.words);
}

namespace detail {

// Coordinate subspace spanned by the given window words of a window-built map.
template <class F>
Subspace<F> coordinate_subspace(const ApproxMap<F>& phi,
                                const std::map<Word, size_t>& index,
                                const std::vector<Word>& words) {
    const F& f = phi.field();
    Matrix<F> m(f, phi.dim(), words.size());
    for (size_t j = 0; j < words.size(); ++j) m.at(index.at(words[j]), j) = f.one();
    return Subspace<F>::from_columns(m);
}

}  // namespace detail

// Same subspace as mult_subspace_by_kernels for window-built maps over the
// built-in monomial algebras: each defect kernel is a coordinate subspace
// (e_w drops out iff some pair a,b has b*w leaving the window but a*b*w
// re-entering), so the intersection is computed combinatorially.
template <class F>
Subspace<F> mult_subspace(const ApproxMap<F>& phi, int d) {
    const auto* fp = std::get_if<typename ApproxMap<F>::FolnerProv>(&phi.provenance());
    if (fp && phi.algebra().kind != AlgebraSpec::Kind::Custom) {
        Ball b = enumerate_ball(phi.algebra(), d);
        return detail::coordinate_subspace(
            phi, fp->index,
            multiplicative_words(phi.algebra(), b.words, b.words, fp->window));
    }
    return mult_subspace_by_kernels(phi, d);
}

// Root-vector space for tiling by the window W: vectors on which the map is
// multiplicative for every pair (generator, window word). Exact
// representations give the full space.
template <class F>
Matrix<F> tiling_mult_basis(const ApproxMap<F>& phi, const FolnerWindow& W) {
    if (phi.exactly_multiplicative_provenance())
        return Matrix<F>::identity(phi.field(), phi.dim());
    std::vector<Word> gens = enumerate_ball(phi.algebra(), 1).words;
    const auto* fp = std::get_if<typename ApproxMap<F>::FolnerProv>(&phi.provenance());
    if (fp && phi.algebra().kind != AlgebraSpec::Kind::Custom)
        return detail::coordinate_subspace(
                   phi, fp->index,
                   multiplicative_words(phi.algebra(), gens, W.words, fp->window))
            .basis();
    return mult_subspace_pairs_by_kernels(phi, gens, W.words).basis();
}

struct RankPolicy {
    enum class Kind { Auto, Exhaustive, Random };
    Kind kind = Kind::Auto;
    size_t samples = 256;
};

template <class F>
struct CertReport {
    int d = 0;
    size_t n = 0;
    size_t dim_U = 0;
    Subspace<F> U;
    bool mult_ok = false;
    bool dim_ok = false;
    std::string rank_policy;
    size_t min_rank_seen = 0;
    bool rank_ok = false;
    bool certified = false;
};

namespace detail {

inline bool exhaustive_feasible(const FieldSpec& fs, size_t dim, uint64_t budget = 1u << 20) {
    if (fs.kind != FieldSpec::Kind::PrimeField) return false;
    uint64_t total = 1;
    for (size_t i = 0; i < dim; ++i) {
        if (total > budget / fs.modulus + 1) return false;
        total *= fs.modulus;
        if (total > budget) return false;
    }
    return true;
}

}  // namespace detail

// Certifies the three-part d-approximation definition. Multiplicativity and
// the dimension bound are exact; the rank bullet is exhaustive over GF(q)
// when q^{dim A_<=d} fits the budget and sampled otherwise.
template <class F>
CertReport<F> check_d_approximation(const ApproxMap<F>& phi, int d,
                                    RankPolicy policy = {}, uint64_t seed = 0) {
    const F& f = phi.field();
    const size_t n = phi.dim();
    CertReport<F> rep;
    rep.d = d;
    rep.n = n;
    rep.U = mult_subspace(phi, d);
    rep.dim_U = rep.U.dim();
    // recompute multiplicativity on U basis vectors
    Ball b = enumerate_ball(phi.algebra(), d);
    rep.mult_ok = true;
    for (const Word& wa : b.words) {
        Matrix<F> ma = phi.matrix(wa);
        for (const Word& wb : b.words) {
            Matrix<F> mb = phi.matrix(wb);
            Matrix<F> mab = phi.matrix(word_mul(phi.algebra(), wa, wb));
            for (size_t j = 0; j < rep.U.dim() && rep.mult_ok; ++j) {
                auto u = rep.U.basis().col(j);
                if (mab.apply(u) != ma.apply(mb.apply(u))) rep.mult_ok = false;
            }
        }
        if (!rep.mult_ok) break;
    }
    // dim(U) >= (1 - 1/d) n, exactly
    rep.dim_ok = Rat(static_cast<unsigned long>(rep.dim_U)) * d >=
                 Rat(static_cast<unsigned long>(n)) * (d - 1);

    // rank bullet over nonzero a in A_<=d
    const size_t k = b.words.size();
    std::vector<Matrix<F>> word_mats;
    word_mats.reserve(k);
    for (const Word& w : b.words) word_mats.push_back(phi.matrix(w));
    size_t min_rank = n;
    bool exhaustive =
        policy.kind == RankPolicy::Kind::Exhaustive ||
        (policy.kind == RankPolicy::Kind::Auto &&
         detail::exhaustive_feasible(f.spec(), k));
    if (exhaustive) {
        if (!detail::exhaustive_feasible(f.spec(), k))
            throw precondition_error("exhaustive rank sweep exceeds the q^dim budget");
        rep.rank_policy = "exhaustive";
        uint32_t q = f.spec().modulus;
        std::vector<uint32_t> c(k, 0);
        while (true) {
            size_t i = 0;
            while (i < k && c[i] == q - 1) c[i++] = 0;
            if (i == k) break;
            ++c[i];
            Matrix<F> a(f, n, n);
            for (size_t j = 0; j < k; ++j)
                if (c[j] != 0) a.add_scaled(word_mats[j], f.from_int(long(c[j])));
            min_rank = std::min(min_rank, mat_rank(a));
        }
    } else {
        rep.rank_policy = "basis-plus-random(" + std::to_string(policy.samples) + ", seed=" +
                          std::to_string(seed) + ")";
        for (const auto& m : word_mats) min_rank = std::min(min_rank, mat_rank(m));
        Rng rng = Rng(seed).split("rank-policy");
        for (size_t s = 0; s < policy.samples; ++s) {
            Matrix<F> a(f, n, n);
            bool nonzero = false;
            for (size_t j = 0; j < k; ++j) {
                long cj = (f.spec().kind == FieldSpec::Kind::PrimeField)
                              ? long(rng.below(f.spec().modulus))
                              : rng.int_in(-9, 9);
                if (cj != 0) {
                    a.add_scaled(word_mats[j], f.from_int(cj));
                    nonzero = true;
                }
            }
            if (!nonzero) a.add_scaled(word_mats[0], f.one());
            min_rank = std::min(min_rank, mat_rank(a));
        }
    }
    rep.min_rank_seen = min_rank;
    rep.rank_ok = Rat(static_cast<unsigned long>(min_rank)) * d >=
                  Rat(static_cast<unsigned long>(n)) * (d - 1);
    rep.certified = rep.mult_ok && rep.dim_ok && rep.rank_ok;
    return rep;
}

}  // namespace lsa
