#pragma once

#include <set>

#include "lsa/field.hpp"
#include "lsa/matrix.hpp"
#include "lsa/word.hpp"

namespace lsa {

// Candidate Folner subspace: a monomial window spanned by distinct words.
struct FolnerWindow {
    AlgebraSpec algebra;
    std::vector<Word> words;   // distinct normal forms, sorted by word_less
    long long size_param = 0;  // generator parameter, 0 for explicit windows

    size_t dim() const { return words.size(); }
};

struct InvarianceReport {
    size_t dim_W = 0;
    size_t dim_VW = 0;
    Rat epsilon;
    bool holds = false;  // dim_VW < (1 + epsilon) * dim_W, exact
};

// Built-in window families: polynomial -> exponent box [0,n)^v;
// laurent -> box [-n,n]^r; heisenberg -> |a|,|b| <= n, |c| <= n^2.
FolnerWindow candidate_window(const AlgebraSpec& alg, long long n);

FolnerWindow window_from_words(const AlgebraSpec& alg, std::vector<Word> words);

// Window spanned by a monomial ball S^r (useful as tiling window).
FolnerWindow ball_window(const AlgebraSpec& alg, int r);

// Monomial counting path: dim(V*W) = number of distinct products v*w.
size_t dim_product_span(const AlgebraSpec& alg, const std::vector<Word>& V,
                        const std::vector<Word>& W);

InvarianceReport invariance_check(const AlgebraSpec& alg, const std::vector<Word>& V,
                                  const FolnerWindow& W, const Rat& epsilon);

// Words of W whose product with every word of V stays in W
// (the monomial multiplicative core used by the builder and the tiler).
std::vector<Word> invariant_core(const AlgebraSpec& alg, const std::vector<Word>& V,
                                 const FolnerWindow& W);

// Exact multiplicative words of the window projection p.m_(-) for the word
// pairs L x R: e_w survives iff no pair (a in L, b in R) has b*w outside W
// but a*b*w back inside. Valid for algebras whose words act injectively
// (all built-in kinds).
std::vector<Word> multiplicative_words(const AlgebraSpec& alg, const std::vector<Word>& L,
                                       const std::vector<Word>& R, const FolnerWindow& W);

// General path for dim(V*W): rank of the coefficient matrix of all products
// in the joint monomial span. Agrees with dim_product_span on monomial
// algebras; kept as an independent cross-check.
template <class F>
size_t dim_product_span_rank(const AlgebraSpec& alg, const F& field,
                             const std::vector<Word>& V, const std::vector<Word>& W) {
    std::set<Word> support;
    std::vector<Word> prods;
    prods.reserve(V.size() * W.size());
    for (const Word& v : V)
        for (const Word& w : W) {
            Word p = word_mul(alg, v, w);
            support.insert(p);
            prods.push_back(p);
        }
    std::vector<Word> basis(support.begin(), support.end());
    auto idx = word_index(basis);
    Matrix<F> m(field, prods.size(), basis.size());
    for (size_t i = 0; i < prods.size(); ++i) m.at(i, idx.at(prods[i])) = field.one();
    return mat_rank(m);
}

}  // namespace lsa
