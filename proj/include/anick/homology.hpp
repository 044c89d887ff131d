#pragma once

#include "anick/matrix.hpp"
#include "anick/resolution.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anick {

/* Differential of K (x)_A (C_* (x) A) = K C_*, i.e. the part of d_n with algebra word 1.
 * Rows index C_{n-1}, columns C_n, both in canonical chain order. */
struct ReducedDifferential {
    int level = 0;
    Matrix matrix;
};

std::vector<ReducedDifferential> reduce_complex(const Resolution& resolution);

/* nullopt means the generic point (exact arithmetic over the parameter field). */
using Specialization = std::optional<Rational>;

std::string to_string(const Specialization& s);
Specialization parse_specialization(const std::string& text);

/* dims[k] = dim Tor_k(K, K). */
struct BettiTable {
    Specialization specialization;
    std::vector<std::size_t> dims;

    bool operator==(const BettiTable&) const = default;
};

/* Tor_k for k = 0..max level, from the reduced Anick complex: Tor_k is the homology at
 * C_{k-1}, so dim Tor_k = |C_{k-1}| - rank dbar_{k-1} - rank dbar_k. */
BettiTable betti(std::span<const ReducedDifferential> reduced, const Specialization& at);

/* Tor_k for k = 0..max_degree from the normalized bar complex of a finite-dimensional
 * algebra. Throws Error if the algebra is infinite dimensional. */
BettiTable bar_oracle(const GroebnerBasis& gb, std::size_t alphabet_size, const Field& field, int max_degree, const Specialization& at);

struct TauDependenceReport {
    /* levels[n-1]: dbar_n has an entry of positive parameter degree. */
    std::vector<bool> depends;
    /* tables[0] is generic, then one per requested value. */
    std::vector<BettiTable> tables;
    /* differs[j][k]: tables[j].dims[k] != generic dims[k]. */
    std::vector<std::vector<bool>> differs;

    bool all_levels_depend() const;
};

TauDependenceReport tau_dependence_report(const Resolution& resolution, std::span<const Rational> values);

}  // namespace anick
