#pragma once

#include "anick/freealg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace anick {

enum class AmbiguityKind { overlap, inclusion };

/* Ambiguity between two basis elements. For an overlap the right leading word starts at
 * `offset` inside the left one and runs past its end; for an inclusion it lies inside. */
struct Overlap {
    std::size_t left = 0;
    std::size_t right = 0;
    std::size_t offset = 0;
    AmbiguityKind kind = AmbiguityKind::overlap;

    bool operator==(const Overlap&) const = default;
};

enum class AmbiguityScope {
    minimal,  // inclusions + overlaps whose word is an Anick 2-chain
    all,      // every suffix/prefix overlap
};

Word ambiguity_word(const Word& left_lead, const Word& right_lead, std::size_t offset, AmbiguityKind kind);

/* left-multiple * g1 - g2 * right-multiple aligned on the ambiguity word (monic-normalized).
 * Throws Error if the leading words do not meet as described by (offset, kind). */
Poly s_polynomial(const Poly& g1, const Poly& g2, std::size_t offset, AmbiguityKind kind);

/* All ambiguities among the leading words of `basis`, sorted by word degree, then by
 * (left, right, offset). */
std::vector<Overlap> ambiguities(std::span<const Poly> basis, AmbiguityScope scope = AmbiguityScope::minimal);

struct GroebnerBasis {
    std::vector<Poly> elements;
    std::size_t degree_cap = 0;
    bool complete = false;
    /* Smallest degree of an ambiguity left unchecked because it exceeds the cap. */
    std::optional<std::size_t> pending_degree;

    std::vector<Word> obstructions() const;
};

/* Monic, interreduced copy of `polys` with zero elements dropped. */
std::vector<Poly> interreduce(std::vector<Poly> polys);

GroebnerBasis complete(const Presentation& presentation, std::size_t degree_cap);

struct AmbiguityResolution {
    Overlap overlap;
    Word word;
    Poly s_poly;
    Poly remainder;

    bool resolved() const { return remainder.is_zero(); }
};

struct DiamondReport {
    std::vector<AmbiguityResolution> entries;

    bool confluent() const;
};

DiamondReport verify_diamond(std::span<const Poly> basis, AmbiguityScope scope = AmbiguityScope::minimal);

struct NormalWordSeries {
    std::vector<std::size_t> coefficients;  // count of normal words of each length

    std::size_t total() const;
};

NormalWordSeries normal_word_series(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t length_cap);

}  // namespace anick
