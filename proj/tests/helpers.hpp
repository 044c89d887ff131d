#pragma once

#include "anick/freealg.hpp"

#include <random>
#include <string>

namespace testing {

inline anick::Rational random_rational(std::mt19937& rng, int range = 9)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    anick::Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline anick::UPoly random_upoly(std::mt19937& rng, int max_degree = 3)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<anick::Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = random_rational(rng);
    return anick::UPoly::from_coefficients(c);
}

/* Random element of Q(tau); never zero when `nonzero`. */
inline anick::Scalar random_scalar(std::mt19937& rng, const anick::Field& f, bool nonzero = false)
{
    for (;;) {
        anick::UPoly den = random_upoly(rng, 2);
        if (den.is_zero())
            continue;
        anick::Scalar s(anick::RationalFunction(f.parameter, random_upoly(rng), den));
        if (!nonzero || !s.is_zero())
            return s;
    }
}

/* Random word over `letters` generators with length in [0, max_length]. */
inline anick::Word random_word(std::mt19937& rng, std::size_t letters, std::size_t max_length)
{
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(letters) - 1);
    std::vector<anick::Letter> w(len(rng));
    for (auto& l : w)
        l = static_cast<anick::Letter>(letter(rng));
    return anick::Word(w);
}

}  // namespace testing
