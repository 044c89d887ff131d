#pragma once

#include "anick/chains.hpp"
#include "anick/groebner.hpp"
#include "anick/homology.hpp"
#include "anick/resolution.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace anick {

inline constexpr std::string_view engine_name = "anick";
inline constexpr std::string_view engine_version = "1.0.0";

using Json = nlohmann::ordered_json;

/* Presentation file, format 1:
 *   {"format": 1, "generators": [...], "precedence": [...]?, "parameter": "tau"?,
 *    "order": "deglex", "relations": ["e1*e2*e1 - e1", ...]} */
Json presentation_to_json(const Presentation& p);
/* Throws ParseError (with line/column into `text`) or Error on schema problems. */
Presentation presentation_from_json(std::string_view text);

Json groebner_json(const Presentation& p, const GroebnerBasis& gb, const DiamondReport& diamond);
std::string groebner_text(const Presentation& p, const GroebnerBasis& gb, const DiamondReport& diamond);

Json chains_json(const Alphabet& a, std::span<const ChainSet> sets);
std::string chains_text(const Alphabet& a, std::span<const ChainSet> sets);

Json module_element_json(const FreeModuleElement& x, const ChainSet& chains, const Alphabet& a);
Json resolution_json(const Alphabet& a, const Resolution& r, const ComplexReport* check);
std::string resolution_text(const Alphabet& a, const Resolution& r, const ComplexReport* check);

Json reduced_json(const Alphabet& a, const Resolution& r, std::span<const ReducedDifferential> reduced);
Json betti_json(std::span<const BettiTable> tables);
std::string betti_text(std::span<const BettiTable> tables);
Json tau_dependence_json(const TauDependenceReport& report);
std::string tau_dependence_text(const TauDependenceReport& report);

}  // namespace anick
