#pragma once

#include "anick/coeff.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anick {

/* A letter is the precedence rank of a generator: letter 0 is the smallest generator. */
using Letter = std::uint8_t;

/* Word in the free monoid; the empty word is 1. Ordered by DEGLEX (length first, then
 * left-to-right by letter rank), so `operator<=>` is the monomial order. */
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix_from(std::size_t pos) const { return subword(pos, size() - pos); }

    bool contains_at(const Word& pattern, std::size_t pos) const;
    std::optional<std::size_t> find(const Word& pattern, std::size_t from = 0) const;
    bool contains(const Word& pattern) const { return find(pattern).has_value(); }
    bool has_suffix(const Word& pattern) const { return pattern.size() <= size() && contains_at(pattern, size() - pattern.size()); }

    Word& operator+=(const Word& rhs);
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    std::strong_ordering operator<=>(const Word& rhs) const;
    bool operator==(const Word& rhs) const = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/* Generator names, in declared order, plus the precedence that defines DEGLEX. */
class Alphabet {
public:
    Alphabet() = default;
    /* `precedence` lists the names from smallest to largest; empty means declared order. */
    explicit Alphabet(std::vector<std::string> names, std::vector<std::string> precedence = {});

    std::size_t size() const { return by_rank_.size(); }
    const std::string& name(Letter letter) const { return by_rank_.at(letter); }
    std::optional<Letter> letter(std::string_view name) const;
    const std::vector<std::string>& declared() const { return declared_; }
    const std::vector<std::string>& by_precedence() const { return by_rank_; }

    /* Parses a word written as generator names joined by '*', or "1". */
    Word word(std::string_view text) const;
    std::string format(const Word& w) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> declared_;
    std::vector<std::string> by_rank_;
};

/* Noncommutative polynomial: finitely supported Word -> Scalar map, iterated in descending order. */
class Poly {
public:
    using Terms = std::map<Word, Scalar, std::greater<Word>>;

    Poly() = default;
    static Poly constant(const Scalar& c) { return monomial(Word{}, c); }
    static Poly monomial(const Word& w, const Scalar& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /* Leading (maximal) word and its coefficient; throws on the zero polynomial. */
    std::pair<const Word&, const Scalar&> leading_term() const;
    const Word& leading_word() const { return leading_term().first; }
    const Scalar& leading_coefficient() const { return leading_term().second; }
    const Scalar* coefficient(const Word& w) const;
    int degree() const { return is_zero() ? -1 : static_cast<int>(leading_word().size()); }
    bool is_constant() const { return is_zero() || (size() == 1 && terms_.begin()->first.empty()); }

    void add_term(const Word& w, const Scalar& c);
    /* this -= c * left * g * right */
    void subtract_multiple(const Scalar& c, const Word& left, const Poly& g, const Word& right);

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly scaled(const Scalar& c) const;
    Poly sandwiched(const Word& left, const Word& right) const;
    Poly monic() const;

    bool operator==(const Poly& rhs) const { return terms_ == rhs.terms_; }

    std::string to_string(const Alphabet& alphabet) const;

private:
    Terms terms_;
};

struct Presentation {
    Alphabet alphabet;
    Field field;
    std::vector<Poly> relations;
    std::string order = "deglex";

    /* Relations nonzero, coefficients in `field`, and killed by the augmentation
     * (no constant term). Throws Error otherwise. */
    void validate() const;
};

/* Parses polynomial text such as "tau*e1*e2 - e1" over `alphabet` and `field`. */
Poly parse_poly(std::string_view text, const Alphabet& alphabet, const Field& field);
Scalar parse_scalar(std::string_view text, const Field& field);

/* Normal form of p modulo a system of monic polynomials. Rewrites the largest reducible
 * term at its leftmost occurrence, preferring the longest leading word on ties. */
Poly reduce(const Poly& p, std::span<const Poly> system);
Poly multiply_normal(const Poly& a, const Poly& b, std::span<const Poly> system);
bool is_normal_word(const Word& w, std::span<const Word> obstructions);
/* All words of length <= max_length with no obstruction as a subword, in DEGLEX order. */
std::vector<Word> normal_words(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t max_length);

}  // namespace anick
