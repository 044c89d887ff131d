#pragma once

#include "anick/chains.hpp"
#include "anick/groebner.hpp"
#include "anick/matrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anick {

struct ModuleTerm {
    std::uint32_t chain = 0;
    Word word;  // normal form

    auto operator<=>(const ModuleTerm&) const = default;
};

/* Element of C_n (x) A: chain index at `level` tensored with a normal word. */
class FreeModuleElement {
public:
    explicit FreeModuleElement(int level = 0) : level_(level) {}

    int level() const { return level_; }
    const std::map<ModuleTerm, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Scalar* coefficient(std::uint32_t chain, const Word& word) const;

    void add(std::uint32_t chain, const Word& word, const Scalar& c);
    void add_scaled(const FreeModuleElement& x, const Scalar& c);

    FreeModuleElement operator-() const;
    FreeModuleElement& operator+=(const FreeModuleElement& rhs);
    FreeModuleElement& operator-=(const FreeModuleElement& rhs);
    friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) { return a += b; }
    friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) { return a -= b; }

    bool operator==(const FreeModuleElement& rhs) const { return level_ == rhs.level_ && terms_ == rhs.terms_; }

    std::string to_string(const ChainSet& chains, const Alphabet& alphabet) const;

private:
    int level_;
    std::map<ModuleTerm, Scalar> terms_;
};

struct DifferentialTable {
    int level = 0;
    std::vector<FreeModuleElement> values;  // d_n(chain (x) 1), by chain index
};

/* Result of check_complex. */
struct ComplexReport {
    struct Composition {
        int level = 0;  // checks d_level o d_{level+1}
        std::size_t generators = 0;
        std::size_t failures = 0;
    };
    struct Exactness {
        int position = 0;  // C_position (x) A, with position -1 the augmentation target side
        std::size_t dimension = 0;
        std::size_t rank_out = 0;  // rank of d_position (epsilon for -1)
        std::size_t rank_in = 0;   // rank of d_{position+1}
        bool exact() const { return rank_out + rank_in == dimension; }
    };
    bool augmentation_ok = false;
    std::vector<Composition> compositions;
    std::vector<Exactness> exactness;
    std::optional<Rational> specialization;
    bool finite_dimensional = false;

    bool ok() const;
};

/* Anick's resolution of the trivial module K over A = free algebra / ideal(basis). */
class Resolution {
public:
    Resolution(const GroebnerBasis& gb, std::size_t alphabet_size, const Field& field, int max_level);

    int max_level() const { return max_level_; }
    const Field& field() const { return field_; }
    std::size_t alphabet_size() const { return alphabet_size_; }
    std::span<const Poly> basis() const { return basis_; }
    const ChainSet& chains(int level) const { return chains_.at(static_cast<std::size_t>(level + 1)); }
    std::span<const ChainSet> all_chains() const { return chains_; }
    const DifferentialTable& table(int n) const { return tables_.at(static_cast<std::size_t>(n)); }

    /* x * w with every algebra part reduced to normal form. */
    FreeModuleElement times(const FreeModuleElement& x, const Word& w) const;
    /* d_n, extended A-linearly, for x at level n >= 0. */
    FreeModuleElement apply(int n, const FreeModuleElement& x) const;
    /* The augmentation on C_{-1} (x) A = A. */
    Scalar augment(const FreeModuleElement& x) const;
    /* i_n on u in ker d_{n-1} (u at level n - 1), n >= 0. Throws Error if u is not in the image. */
    FreeModuleElement split(int n, const FreeModuleElement& u) const;
    /* i_{-1}(c) = c (1 (x) 1). */
    FreeModuleElement split_unit(const Scalar& c) const;
    /* Generator element chain (x) word at the given level. */
    FreeModuleElement element(int level, std::uint32_t chain, const Word& word = Word{}) const;

    /* Leading term under DEGLEX on the concatenated word chain * algebra word, ties by chain index. */
    std::pair<ModuleTerm, Scalar> leading_term(const FreeModuleElement& x) const;

    /* d_n o d_{n+1} = 0 on all generators, eps o d_0 = 0, and, for finite-dimensional A,
     * exactness by ranks at parameter = value. */
    ComplexReport check_complex(const std::optional<Rational>& value) const;

    /* Matrix of d_n (n >= 0) on the K-basis chain (x) normal word, parameter specialized
     * when `value` is set. Row/column order: chain-major, then normal word index. */
    Matrix differential_matrix(int n, std::span<const Word> algebra_basis, const std::optional<Rational>& value) const;

private:
    void build_level(int n);

    std::vector<Poly> basis_;
    std::size_t alphabet_size_;
    Field field_;
    int max_level_;
    std::vector<ChainSet> chains_;
    std::vector<DifferentialTable> tables_;
};

/* K-basis of A when A is finite dimensional (normal words until a length with none). */
std::optional<std::vector<Word>> finite_normal_basis(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t length_limit = 64);

}  // namespace anick
