#include "lsa/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace lsa {

long long word_grade(const Word& w) {
    long long g = 0;
    for (long long x : w.e) g += std::llabs(x);
    return g;
}

bool word_less(const Word& a, const Word& b) {
    long long ga = word_grade(a), gb = word_grade(b);
    if (ga != gb) return ga < gb;
    return a.e < b.e;
}

AlgebraSpec AlgebraSpec::polynomial(int vars) {
    if (vars < 1) throw std::invalid_argument("polynomial algebra needs >= 1 variable");
    AlgebraSpec a;
    a.kind = Kind::Polynomial;
    a.rank = vars;
    return a;
}

AlgebraSpec AlgebraSpec::laurent(int rank) {
    if (rank < 1) throw std::invalid_argument("laurent algebra needs rank >= 1");
    AlgebraSpec a;
    a.kind = Kind::Laurent;
    a.rank = rank;
    return a;
}

AlgebraSpec AlgebraSpec::heisenberg() {
    AlgebraSpec a;
    a.kind = Kind::Heisenberg;
    a.rank = 3;
    return a;
}

AlgebraSpec AlgebraSpec::custom(std::vector<std::string> names, std::vector<RewriteRule> rules) {
    AlgebraSpec a;
    a.kind = Kind::Custom;
    a.rank = static_cast<int>(names.size());
    a.gen_names = std::move(names);
    a.rules = std::move(rules);
    for (const auto& r : a.rules) {
        for (int i : r.lhs)
            if (i < 1 || i > a.rank) throw std::invalid_argument("rewrite rule index out of range");
        for (int i : r.rhs)
            if (i < 1 || i > a.rank) throw std::invalid_argument("rewrite rule index out of range");
        if (r.lhs.empty()) throw std::invalid_argument("empty rewrite rule lhs");
    }
    return a;
}

size_t AlgebraSpec::generator_count() const {
    switch (kind) {
        case Kind::Polynomial: return 1 + rank;
        case Kind::Laurent: return 1 + 2 * rank;
        case Kind::Heisenberg: return 5;  // 1, x, x^-1, y, y^-1
        case Kind::Custom: return 1 + gen_names.size();
    }
    return 0;
}

std::string AlgebraSpec::generator_name(size_t i) const {
    if (i == 0) return "1";
    switch (kind) {
        case Kind::Polynomial:
            return rank == 1 ? "x" : "x" + std::to_string(i);
        case Kind::Laurent: {
            size_t var = (i - 1) / 2 + 1;
            std::string base = rank == 1 ? "t" : "t" + std::to_string(var);
            return (i - 1) % 2 == 0 ? base : base + "^-1";
        }
        case Kind::Heisenberg: {
            static const char* names[] = {"x", "x^-1", "y", "y^-1"};
            return names[i - 1];
        }
        case Kind::Custom:
            return gen_names.at(i - 1);
    }
    return "?";
}

Word AlgebraSpec::unit_word() const {
    switch (kind) {
        case Kind::Polynomial:
        case Kind::Laurent:
            return Word{std::vector<long long>(rank, 0)};
        case Kind::Heisenberg:
            return Word{{0, 0, 0}};
        case Kind::Custom:
            return Word{{}};
    }
    return Word{};
}

Word AlgebraSpec::generator_word(size_t i) const {
    if (i >= generator_count()) throw std::out_of_range("generator index");
    if (i == 0) return unit_word();
    Word w = unit_word();
    switch (kind) {
        case Kind::Polynomial:
            w.e[i - 1] = 1;
            return w;
        case Kind::Laurent:
            w.e[(i - 1) / 2] = ((i - 1) % 2 == 0) ? 1 : -1;
            return w;
        case Kind::Heisenberg:
            // generators: x, x^-1, y, y^-1
            if (i == 1) w.e = {1, 0, 0};
            else if (i == 2) w.e = {-1, 0, 0};
            else if (i == 3) w.e = {0, 1, 0};
            else w.e = {0, -1, 0};
            return w;
        case Kind::Custom:
            return Word{{static_cast<long long>(i)}};
    }
    return w;
}

namespace {

constexpr int kRewriteBudget = 10000;

// Leftmost occurrence of the first matching rule, repeated up to the budget.
Word custom_reduce(const AlgebraSpec& alg, std::vector<long long> seq) {
    for (int step = 0; step < kRewriteBudget; ++step) {
        bool applied = false;
        for (const auto& rule : alg.rules) {
            const size_t L = rule.lhs.size();
            if (L > seq.size()) continue;
            for (size_t pos = 0; pos + L <= seq.size(); ++pos) {
                bool match = true;
                for (size_t k = 0; k < L; ++k)
                    if (seq[pos + k] != rule.lhs[k]) { match = false; break; }
                if (!match) continue;
                std::vector<long long> next;
                next.reserve(seq.size() - L + rule.rhs.size());
                next.insert(next.end(), seq.begin(), seq.begin() + pos);
                for (int g : rule.rhs) next.push_back(g);
                next.insert(next.end(), seq.begin() + pos + L, seq.end());
                seq = std::move(next);
                applied = true;
                break;
            }
            if (applied) break;
        }
        if (!applied) return Word{std::move(seq)};
    }
    throw non_termination("custom rewriting exceeded the step budget");
}

}  // namespace

Word word_mul(const AlgebraSpec& alg, const Word& a, const Word& b) {
    switch (alg.kind) {
        case AlgebraSpec::Kind::Polynomial:
        case AlgebraSpec::Kind::Laurent: {
            Word r = a;
            for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
            return r;
        }
        case AlgebraSpec::Kind::Heisenberg: {
            // x^a y^b z^c * x^a' y^b' z^c' = x^(a+a') y^(b+b') z^(c+c'+a'b)
            return Word{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2] + b.e[0] * a.e[1]}};
        }
        case AlgebraSpec::Kind::Custom: {
            std::vector<long long> seq = a.e;
            seq.insert(seq.end(), b.e.begin(), b.e.end());
            return custom_reduce(alg, std::move(seq));
        }
    }
    throw std::logic_error("unknown algebra kind");
}

Word normal_form(const AlgebraSpec& alg, const std::vector<int>& gen_indices) {
    Word w = alg.unit_word();
    for (int i : gen_indices) {
        if (i < 0 || static_cast<size_t>(i) >= alg.generator_count())
            throw std::out_of_range("generator index " + std::to_string(i));
        w = word_mul(alg, w, alg.generator_word(i));
    }
    return w;
}

std::string word_str(const AlgebraSpec& alg, const Word& w) {
    std::ostringstream os;
    if (alg.kind == AlgebraSpec::Kind::Custom) {
        if (w.e.empty()) return "1";
        for (size_t k = 0; k < w.e.size(); ++k) {
            if (k) os << "*";
            os << alg.generator_name(static_cast<size_t>(w.e[k]));
        }
        return os.str();
    }
    static const char* heis_names[] = {"x", "y", "z"};
    bool any = false;
    for (size_t i = 0; i < w.e.size(); ++i) {
        if (w.e[i] == 0) continue;
        if (any) os << "*";
        any = true;
        if (alg.kind == AlgebraSpec::Kind::Heisenberg) os << heis_names[i];
        else if (alg.kind == AlgebraSpec::Kind::Polynomial)
            os << (alg.rank == 1 ? "x" : "x" + std::to_string(i + 1));
        else
            os << (alg.rank == 1 ? "t" : "t" + std::to_string(i + 1));
        if (w.e[i] != 1) os << "^" << w.e[i];
    }
    return any ? os.str() : "1";
}

size_t Ball::index_of(const Word& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w, word_less);
    if (it == words.end() || !(*it == w)) throw std::out_of_range("word not in ball");
    return static_cast<size_t>(it - words.begin());
}

bool Ball::contains(const Word& w) const {
    auto it = std::lower_bound(words.begin(), words.end(), w, word_less);
    return it != words.end() && *it == w;
}

Ball enumerate_ball(const AlgebraSpec& alg, int r) {
    if (r < 0) throw std::invalid_argument("ball radius must be >= 0");
    std::set<Word> seen;
    std::vector<Word> frontier{alg.unit_word()};
    seen.insert(alg.unit_word());
    for (int len = 1; len <= r; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (size_t g = 1; g < alg.generator_count(); ++g) {
                Word p = word_mul(alg, w, alg.generator_word(g));
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    Ball b;
    b.radius = r;
    b.words.assign(seen.begin(), seen.end());
    std::sort(b.words.begin(), b.words.end(), word_less);
    return b;
}

std::map<Word, size_t> word_index(const std::vector<Word>& words) {
    std::map<Word, size_t> m;
    for (size_t i = 0; i < words.size(); ++i)
        if (!m.emplace(words[i], i).second)
            throw std::invalid_argument("duplicate word in list");
    return m;
}

}  // namespace lsa
