#include "lsa/folner.hpp"

#include <algorithm>
#include <set>

namespace lsa {

namespace {

void box_words(std::vector<Word>& out, std::vector<long long>& cur, size_t pos,
               const std::vector<std::pair<long long, long long>>& bounds) {
    if (pos == bounds.size()) {
        out.push_back(Word{cur});
        return;
    }
    for (long long v = bounds[pos].first; v <= bounds[pos].second; ++v) {
        cur.push_back(v);
        box_words(out, cur, pos + 1, bounds);
        cur.pop_back();
    }
}

}  // namespace

FolnerWindow candidate_window(const AlgebraSpec& alg, long long n) {
    if (n < 1) throw std::invalid_argument("window size parameter must be >= 1");
    std::vector<std::pair<long long, long long>> bounds;
    switch (alg.kind) {
        case AlgebraSpec::Kind::Polynomial:
            bounds.assign(alg.rank, {0, n - 1});
            break;
        case AlgebraSpec::Kind::Laurent:
            bounds.assign(alg.rank, {-n, n});
            break;
        case AlgebraSpec::Kind::Heisenberg:
            bounds = {{-n, n}, {-n, n}, {-n * n, n * n}};
            break;
        case AlgebraSpec::Kind::Custom:
            throw unsupported_operation(
                "no built-in window family for custom algebras; supply words explicitly");
    }
    std::vector<Word> words;
    std::vector<long long> cur;
    box_words(words, cur, 0, bounds);
    std::sort(words.begin(), words.end(), word_less);
    return FolnerWindow{alg, std::move(words), n};
}

FolnerWindow window_from_words(const AlgebraSpec& alg, std::vector<Word> words) {
    std::sort(words.begin(), words.end(), word_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.empty()) throw std::invalid_argument("window must be nonempty");
    return FolnerWindow{alg, std::move(words), 0};
}

FolnerWindow ball_window(const AlgebraSpec& alg, int r) {
    Ball b = enumerate_ball(alg, r);
    return FolnerWindow{alg, b.words, r};
}

size_t dim_product_span(const AlgebraSpec& alg, const std::vector<Word>& V,
                        const std::vector<Word>& W) {
    std::set<Word> prods;
    for (const Word& v : V)
        for (const Word& w : W) prods.insert(word_mul(alg, v, w));
    return prods.size();
}

InvarianceReport invariance_check(const AlgebraSpec& alg, const std::vector<Word>& V,
                                  const FolnerWindow& W, const Rat& epsilon) {
    if (!(alg == W.algebra)) throw algebra_mismatch("window over a different algebra");
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    InvarianceReport r;
    r.dim_W = W.dim();
    r.dim_VW = dim_product_span(alg, V, W.words);
    r.epsilon = epsilon;
    // dim_VW < (1 + eps) dim_W, exactly
    r.holds = Rat(static_cast<unsigned long>(r.dim_VW)) <
              (1 + epsilon) * Rat(static_cast<unsigned long>(r.dim_W));
    return r;
}

std::vector<Word> invariant_core(const AlgebraSpec& alg, const std::vector<Word>& V,
                                 const FolnerWindow& W) {
    std::set<Word> wset(W.words.begin(), W.words.end());
    std::vector<Word> core;
    for (const Word& w : W.words) {
        bool ok = true;
        for (const Word& v : V)
            if (!wset.count(word_mul(alg, v, w))) { ok = false; break; }
        if (ok) core.push_back(w);
    }
    return core;
}

std::vector<Word> multiplicative_words(const AlgebraSpec& alg, const std::vector<Word>& L,
                                       const std::vector<Word>& R, const FolnerWindow& W) {
    if (alg.kind == AlgebraSpec::Kind::Custom)
        throw unsupported_operation("combinatorial multiplicative words need injective words");
    std::set<Word> wset(W.words.begin(), W.words.end());
    std::vector<Word> out;
    for (const Word& w : W.words) {
        bool ok = true;
        for (const Word& b : R) {
            Word bw = word_mul(alg, b, w);
            if (wset.count(bw)) continue;
            for (const Word& a : L)
                if (wset.count(word_mul(alg, a, bw))) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) out.push_back(w);
    }
    return out;
}

}  // namespace lsa
