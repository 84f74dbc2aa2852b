#pragma once

#include <map>

#include "lsa/field.hpp"
#include "lsa/word.hpp"

namespace lsa {

struct out_of_ball : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of a finitely generated monomial algebra: finite map from basis
// words to nonzero coefficients. The empty map is 0.
template <class F>
class Element {
  public:
    using Elem = typename F::Elem;
    using Terms = std::map<Word, Elem>;

    Element(AlgebraSpec alg, F field) : alg_(std::move(alg)), field_(std::move(field)) {}

    static Element zero(const AlgebraSpec& a, const F& f) { return Element(a, f); }
    static Element monomial(const AlgebraSpec& a, const F& f, const Word& w,
                            typename F::Elem c) {
        Element e(a, f);
        e.add_term(w, c);
        return e;
    }
    static Element unit(const AlgebraSpec& a, const F& f) {
        return monomial(a, f, a.unit_word(), f.one());
    }

    const AlgebraSpec& algebra() const { return alg_; }
    const F& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Elem& c) {
        if (field_.is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        require_compatible(o);
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    Element operator-(const Element& o) const {
        require_compatible(o);
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, field_.neg(c));
        return r;
    }
    Element operator*(const Element& o) const {
        require_compatible(o);
        Element r(alg_, field_);
        for (const auto& [wa, ca] : terms_)
            for (const auto& [wb, cb] : o.terms_)
                r.add_term(word_mul(alg_, wa, wb), field_.mul(ca, cb));
        return r;
    }
    Element scaled(const Elem& c) const {
        Element r(alg_, field_);
        for (const auto& [w, cw] : terms_) r.add_term(w, field_.mul(cw, c));
        return r;
    }

    bool operator==(const Element& o) const {
        if (!(alg_ == o.alg_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [w, c] : terms_) {
            if (!(w == it->first) || !field_.eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }

    // Coefficient vector in the order of the given word list.
    std::vector<Elem> coords(const std::vector<Word>& words) const {
        auto idx = word_index(words);
        std::vector<Elem> v(words.size(), field_.zero());
        for (const auto& [w, c] : terms_) {
            auto it = idx.find(w);
            if (it == idx.end())
                throw out_of_ball("term outside span: " + word_str(alg_, w));
            v[it->second] = c;
        }
        return v;
    }

  private:
    void require_compatible(const Element& o) const {
        if (!(alg_ == o.alg_) || !(field_ == o.field_))
            throw algebra_mismatch("elements over different algebras/fields");
    }

    AlgebraSpec alg_;
    F field_;
    Terms terms_;
};

template <class F>
std::vector<typename F::Elem> element_coords(const Element<F>& a, const Ball& ball) {
    return a.coords(ball.words);
}

}  // namespace lsa
