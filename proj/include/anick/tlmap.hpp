#pragma once

#include "anick/freealg.hpp"
#include "anick/groebner.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anick {

struct PresetId {
    enum class Kind { tl, b3_monoid };
    Kind kind = Kind::tl;
    int n = 3;  // strands, for tl

    /* "tl3", "tl4", ..., "b3-monoid" */
    static PresetId parse(std::string_view text);
    std::string to_string() const;
};

/* Temperley-Lieb tl(n) on e1..e_{n-1} with DEGLEX e1 < e2 < ...; the loop value is the
 * field parameter, or -A^2 - A^-2 when the parameter is "A". The braid monoid preset
 * uses generators s1, s2 with precedence s2 < s1 and rational coefficients. */
Presentation preset(const PresetId& id, const std::string& parameter = "tau");

struct BraidLetter {
    int strand = 1;  // sigma_strand
    int sign = 1;    // +1 or -1

    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strands = 3;
    std::vector<BraidLetter> letters;

    /* "s1 s2 s1", inverses as "s1'" or "s1^-1". */
    static BraidWord parse(std::string_view text, int strands);
    std::string to_string() const;
};

/* Image of w under sigma_i -> A + A^-1 e_i, sigma_i^-1 -> A^-1 + A e_i, reduced after each
 * letter. `tl` must be a tl(n) presentation over Q(A) and `basis` its Groebner basis. */
Poly braid_image(const BraidWord& w, const Presentation& tl, std::span<const Poly> basis);

}  // namespace anick
