#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsa {

struct non_termination : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct algebra_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unsupported_operation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Canonical basis monomial. For polynomial/laurent kinds, e is the exponent
// vector; for heisenberg, e = (a, b, c) encoding the normal form x^a y^b z^c;
// for custom kinds, e is the reduced generator-index sequence.
struct Word {
    std::vector<long long> e;

    auto operator<=>(const Word&) const = default;
};

// Graded lexicographic: by total grade (sum of |exponents|), then lex.
long long word_grade(const Word& w);
bool word_less(const Word& a, const Word& b);

struct RewriteRule {
    std::vector<int> lhs, rhs;  // generator-index sequences, indices >= 1

    bool operator==(const RewriteRule&) const = default;
};

struct AlgebraSpec {
    enum class Kind { Polynomial, Laurent, Heisenberg, Custom };

    Kind kind = Kind::Polynomial;
    int rank = 1;  // polynomial vars / laurent rank
    std::vector<RewriteRule> rules;        // custom only
    std::vector<std::string> gen_names;    // custom only (excluding the unit)

    static AlgebraSpec polynomial(int vars);
    static AlgebraSpec laurent(int rank);
    static AlgebraSpec heisenberg();
    static AlgebraSpec custom(std::vector<std::string> names, std::vector<RewriteRule> rules);

    // generators[0] is always the unit
    size_t generator_count() const;
    std::string generator_name(size_t i) const;
    Word unit_word() const;
    Word generator_word(size_t i) const;

    bool operator==(const AlgebraSpec&) const = default;
};

// Normal form of a product of generators (by index into the generator list).
// The scalar is 1 for every supported kind: all built-in and custom algebras
// here are monomial with coefficient-free rewriting.
Word normal_form(const AlgebraSpec& alg, const std::vector<int>& gen_indices);

// Normal form of the product of two basis words.
Word word_mul(const AlgebraSpec& alg, const Word& a, const Word& b);

std::string word_str(const AlgebraSpec& alg, const Word& w);

struct Ball {
    int radius = 0;
    std::vector<Word> words;  // sorted by word_less, deduplicated

    size_t index_of(const Word& w) const;  // throws std::out_of_range
    bool contains(const Word& w) const;
};

// All normal forms of products of at most r generators (S^r), sorted.
Ball enumerate_ball(const AlgebraSpec& alg, int r);

// Index lookup map for an arbitrary word list (e.g. a window).
std::map<Word, size_t> word_index(const std::vector<Word>& words);

}  // namespace lsa
