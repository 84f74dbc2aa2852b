#pragma once

#include <optional>

#include "lsa/approx.hpp"

namespace lsa {

struct search_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Greedy linear monotiling of phi by a window W: root vectors v_1..v_l with
// the translates {phi(w)v_j : w in W, j <= l} jointly independent. Column
// j*|W|+i of `translates` is phi(w_i)v_j.
template <class F>
struct Tiling {
    FolnerWindow window;
    std::vector<std::vector<typename F::Elem>> roots;
    Matrix<F> translates;
    size_t n = 0;

    size_t tile_count() const { return roots.size(); }
    size_t covered_dim() const { return translates.cols(); }
};

namespace detail {

template <class F>
std::vector<typename F::Elem> random_combination(const F& f, const Matrix<F>& basis,
                                                 Rng& rng) {
    std::vector<typename F::Elem> c(basis.cols(), f.zero());
    bool nonzero = false;
    for (auto& x : c) {
        long v = (f.spec().kind == FieldSpec::Kind::PrimeField)
                     ? long(rng.below(f.spec().modulus))
                     : rng.int_in(-9, 9);
        if (v != 0) nonzero = true;
        x = f.from_int(v);
    }
    if (!nonzero) c[rng.below(c.size())] = f.one();
    return basis.apply(c);
}

// Tries to extend `el` by the full W-orbit of v; on success el is replaced.
template <class F>
bool try_root(const ApproxMap<F>& phi, const FolnerWindow& W,
              const std::vector<typename F::Elem>& v, Eliminator<F>& el,
              std::vector<std::vector<typename F::Elem>>& orbit_out) {
    Eliminator<F> trial = el;
    std::vector<std::vector<typename F::Elem>> orbit;
    orbit.reserve(W.words.size());
    for (const Word& w : W.words) {
        auto img = phi.apply_word(w, v);
        if (!trial.add(img)) return false;
        orbit.push_back(std::move(img));
    }
    el = std::move(trial);
    orbit_out = std::move(orbit);
    return true;
}

}  // namespace detail

// One greedy root-vector step: random combinations from the multiplicative
// basis, then an exhaustive sweep when the coefficient space is small enough.
// Returns nullopt when no root vector extends the current independent set.
template <class F>
std::optional<std::vector<typename F::Elem>> find_root_vector(
    const ApproxMap<F>& phi, const FolnerWindow& W, const Matrix<F>& mult_basis,
    Eliminator<F>& el, std::vector<std::vector<typename F::Elem>>& orbit_out,
    Rng& rng, size_t random_attempts = 64) {
    const F& f = phi.field();
    if (mult_basis.cols() == 0) return std::nullopt;
    if (el.dim() + W.dim() > phi.dim()) return std::nullopt;
    for (size_t t = 0; t < random_attempts; ++t) {
        auto v = detail::random_combination(f, mult_basis, rng);
        if (detail::try_root(phi, W, v, el, orbit_out)) return v;
    }
    if (detail::exhaustive_feasible(f.spec(), mult_basis.cols())) {
        uint32_t q = f.spec().modulus;
        size_t k = mult_basis.cols();
        std::vector<uint32_t> c(k, 0);
        while (true) {
            size_t i = 0;
            while (i < k && c[i] == q - 1) c[i++] = 0;
            if (i == k) break;
            ++c[i];
            std::vector<typename F::Elem> coef(k);
            for (size_t j = 0; j < k; ++j) coef[j] = f.from_int(long(c[j]));
            auto v = mult_basis.apply(coef);
            if (detail::try_root(phi, W, v, el, orbit_out)) return v;
        }
    }
    return std::nullopt;
}

// Greedy monotiling. Termination is normal once the covered dimension meets
// the guaranteed bound d*covered >= (d-2)n - d*dimW; stopping below it means
// the root-vector search gave out early and is reported as an error.
template <class F>
Tiling<F> monotile(const ApproxMap<F>& phi, const FolnerWindow& W,
                   const Matrix<F>& mult_basis, int d, uint64_t seed) {
    const F& f = phi.field();
    const size_t n = phi.dim();
    if (W.dim() == 0 || W.dim() > n)
        throw std::invalid_argument("tiling window must satisfy 1 <= dim W <= n");
    Tiling<F> t;
    t.window = W;
    t.n = n;
    Eliminator<F> el(f, n);
    std::vector<std::vector<typename F::Elem>> cols;
    Rng rng = Rng(seed).split("monotile");
    while (true) {
        std::vector<std::vector<typename F::Elem>> orbit;
        auto v = find_root_vector(phi, W, mult_basis, el, orbit, rng);
        if (!v) break;
        t.roots.push_back(std::move(*v));
        for (auto& c : orbit) cols.push_back(std::move(c));
    }
    bool guaranteed = Rat(long(d)) * long(el.dim()) >=
                      Rat(long(d) - 2) * long(n) - Rat(long(d)) * long(W.dim());
    if (!guaranteed)
        throw search_failure("monotiling stalled below the guaranteed covered dimension: " +
                             std::to_string(el.dim()) + " of " + std::to_string(n));
    t.translates = Matrix<F>(f, n, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) t.translates.set_col(j, cols[j]);
    return t;
}

template <class F>
struct ConjugacyResult {
    Matrix<F> conjugator;                       // invertible M with M phi M^-1 ~ psi
    FolnerWindow window;                        // common tiling window
    size_t tiles = 0;                           // common tile count l
    std::vector<std::pair<std::string, Rat>> generator_dist;  // rk(M phi(s) M^-1, psi(s))
    Rat achieved;                               // max over generators
    Rat predicted;                              // certified a-priori bound from the tiling
    Rat epsilon;
    bool holds = false;                         // achieved < epsilon
    // paper-style bound 1-(1-eps/4)(1-3/(4d)); asserted only when its
    // coverage hypothesis l*dimW >= (1-3/(4d))n held for both tilings
    Rat proof_bound;
    bool proof_bound_applies = false;
};

namespace detail {

// min over generators s of |{w in W : s*w in W}|
inline size_t min_interior_count(const AlgebraSpec& alg, const FolnerWindow& W) {
    std::set<Word> wset(W.words.begin(), W.words.end());
    size_t best = W.dim();
    for (size_t g = 1; g < alg.generator_count(); ++g) {
        Word s = alg.generator_word(g);
        size_t cnt = 0;
        for (const Word& w : W.words)
            if (wset.count(word_mul(alg, s, w))) ++cnt;
        best = std::min(best, cnt);
    }
    return best;
}

}  // namespace detail

// Distances rk(M phi(s) - psi(s) M)/n per generator; avoids inverting M.
template <class F>
std::vector<std::pair<std::string, Rat>> conjugacy_distances(const ApproxMap<F>& phi,
                                                             const ApproxMap<F>& psi,
                                                             const Matrix<F>& M) {
    const AlgebraSpec& alg = phi.algebra();
    std::vector<std::pair<std::string, Rat>> out;
    for (size_t g = 1; g < alg.generator_count(); ++g) {
        Word s = alg.generator_word(g);
        // word matrices are column-sparse, M is dense
        Matrix<F> d = mul_right_sparse(M, phi.matrix(s)) - psi.matrix(s) * M;
        Rat r(static_cast<unsigned long>(mat_rank(d)), static_cast<unsigned long>(phi.dim()));
        r.canonicalize();
        out.emplace_back(alg.generator_name(g), r);
    }
    return out;
}

template <class F>
ConjugacyResult<F> verify_conjugacy(const ApproxMap<F>& phi, const ApproxMap<F>& psi,
                                    const Matrix<F>& M, const Rat& epsilon) {
    if (phi.dim() != psi.dim() || !(phi.algebra() == psi.algebra()))
        throw dimension_mismatch("conjugacy requires equal dimension over one algebra");
    if (mat_rank(M) != M.rows()) throw std::domain_error("conjugator is singular");
    ConjugacyResult<F> r;
    r.conjugator = M;
    r.epsilon = epsilon;
    r.generator_dist = conjugacy_distances(phi, psi, M);
    r.achieved = Rat(0);
    for (const auto& [name, dist] : r.generator_dist) r.achieved = std::max(r.achieved, dist);
    r.predicted = Rat(1);
    r.holds = r.achieved < epsilon;
    return r;
}

// Builds an invertible M with max_s rk(M phi(s) M^-1, psi(s)) < epsilon by
// tiling both maps with a common ball window, growing the ball until the
// certified bound 1 - l*min_s|{w : s w in W}|/n drops below epsilon.
template <class F>
ConjugacyResult<F> build_conjugator(const ApproxMap<F>& phi, const ApproxMap<F>& psi,
                                    const Rat& epsilon, uint64_t seed,
                                    int max_window_radius = 12) {
    if (phi.dim() != psi.dim() || !(phi.algebra() == psi.algebra()) ||
        !(phi.field() == psi.field()))
        throw dimension_mismatch("conjugation requires one algebra/field/dimension");
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    const F& f = phi.field();
    const AlgebraSpec& alg = phi.algebra();
    const size_t n = phi.dim();
    Rat four_over_eps = Rat(4) / epsilon;
    four_over_eps.canonicalize();
    mpz_class dz = (four_over_eps.get_num() + four_over_eps.get_den() - 1) /
                   four_over_eps.get_den();
    const long d = std::max(2l, dz.get_si());  // ceil(4/epsilon)
    Rng rng(seed);

    // phase 1: tile with growing ball windows until the certified bound
    // 1 - l*interior/n beats epsilon; keep the best window otherwise
    struct Candidate {
        FolnerWindow window;
        Tiling<F> ta, tb;
        size_t l = 0;
        Rat predicted;
    };
    std::optional<Candidate> best;
    for (int c = 1; c <= max_window_radius; ++c) {
        // laurent algebras tile by exponent boxes (no corner loss in rank >= 2,
        // identical to the ball in rank 1); other kinds use monomial balls
        FolnerWindow W = alg.kind == AlgebraSpec::Kind::Laurent
                             ? candidate_window(alg, c)
                             : ball_window(alg, c);
        if (W.dim() > n) break;
        Matrix<F> ua = tiling_mult_basis(phi, W);
        Matrix<F> ub = tiling_mult_basis(psi, W);
        Tiling<F> ta, tb;
        try {
            ta = monotile(phi, W, ua, int(d), rng.split("tile-a").split(uint64_t(c)).next());
            tb = monotile(psi, W, ub, int(d), rng.split("tile-b").split(uint64_t(c)).next());
        } catch (const search_failure&) {
            continue;
        }
        size_t l = std::min(ta.tile_count(), tb.tile_count());
        if (l == 0) continue;
        size_t interior = detail::min_interior_count(alg, W);
        Rat predicted = Rat(1) - Rat(static_cast<unsigned long>(l * interior),
                                     static_cast<unsigned long>(n));
        predicted.canonicalize();
        if (!best || predicted < best->predicted)
            best = Candidate{std::move(W), std::move(ta), std::move(tb), l, predicted};
        if (best->predicted < epsilon) break;
    }
    if (!best) throw search_failure("no tiling window produced a conjugator candidate");

    // phase 2: M maps the translate family phi(w_i)v_j to psi(w_i)u_j,
    // both completed to bases by standard vectors
    const size_t k = best->l * best->window.dim();
    Matrix<F> pa_cols(f, n, k), pb_cols(f, n, k);
    for (size_t j = 0; j < k; ++j) {
        pa_cols.set_col(j, best->ta.translates.col(j));
        pb_cols.set_col(j, best->tb.translates.col(j));
    }
    Matrix<F> PA = complete_to_basis(pa_cols);
    Matrix<F> PB = complete_to_basis(pb_cols);

    ConjugacyResult<F> r;
    r.conjugator = PB * mat_inverse(PA);
    r.window = best->window;
    r.tiles = best->l;
    r.epsilon = epsilon;
    r.predicted = best->predicted;
    r.generator_dist = conjugacy_distances(phi, psi, r.conjugator);
    r.achieved = Rat(0);
    for (const auto& [name, dist] : r.generator_dist)
        r.achieved = std::max(r.achieved, dist);
    r.holds = r.achieved < epsilon;
    r.proof_bound = Rat(1) - (Rat(1) - epsilon / 4) * (Rat(1) - make_rat(3, 4 * d));
    r.proof_bound.canonicalize();
    // hypotheses of the closing inequality: (S, eps/4)-invariant window and
    // coverage l*dimW >= (1 - 3/(4d)) n
    Rat eps4 = epsilon / 4;
    eps4.canonicalize();
    bool s_invariant =
        invariance_check(alg, enumerate_ball(alg, 1).words, r.window, eps4).holds;
    r.proof_bound_applies =
        s_invariant && Rat(static_cast<unsigned long>(r.tiles * r.window.dim())) >=
                           (Rat(1) - make_rat(3, 4 * d)) * Rat(static_cast<unsigned long>(n));
    return r;
}

// Hyperfinite block picture of a tiled map: in the completed tiling basis the
// generators act, up to the reported defects, as l diagonal copies of the
// window shift R_s (e_w -> e_{s w} when s w stays in W, else 0).
template <class F>
struct HyperfiniteDecomposition {
    Matrix<F> basis;       // completed tiling basis P
    size_t blocks = 0;     // l
    size_t block_dim = 0;  // dim W
    std::vector<std::pair<std::string, Rat>> generator_defect;
    Rat max_defect;
};

template <class F>
HyperfiniteDecomposition<F> hyperfinite_decompose(const ApproxMap<F>& phi,
                                                  const Tiling<F>& t) {
    const F& f = phi.field();
    const AlgebraSpec& alg = phi.algebra();
    const size_t n = phi.dim();
    const size_t w = t.window.dim(), l = t.tile_count();
    Matrix<F> P = complete_to_basis(t.translates);

    // window shift model on one block
    auto widx = word_index(t.window.words);
    HyperfiniteDecomposition<F> out;
    out.basis = P;
    out.blocks = l;
    out.block_dim = w;
    out.max_defect = Rat(0);
    for (size_t g = 1; g < alg.generator_count(); ++g) {
        Word s = alg.generator_word(g);
        Matrix<F> model(f, n, n);
        for (size_t j = 0; j < l; ++j)
            for (size_t i = 0; i < w; ++i) {
                auto it = widx.find(word_mul(alg, s, t.window.words[i]));
                if (it != widx.end())
                    model.at(j * w + it->second, j * w + i) = f.one();
            }
        // defect = rk(phi(s) P - P model)/n, i.e. distance in the P frame
        Matrix<F> diff = phi.matrix(s) * P - P * model;
        Rat r(static_cast<unsigned long>(mat_rank(diff)), static_cast<unsigned long>(n));
        r.canonicalize();
        out.max_defect = std::max(out.max_defect, r);
        out.generator_defect.emplace_back(alg.generator_name(g), r);
    }
    return out;
}

}  // namespace lsa
