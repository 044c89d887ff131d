#include "anick/report.hpp"

#include "anick/error.hpp"

#include <iomanip>
#include <sstream>

namespace anick {

/****************************************************
 *                   Presentation files
 ***************************************************/

Json presentation_to_json(const Presentation& p)
{
    Json j;
    j["format"] = 1;
    j["generators"] = p.alphabet.declared();
    j["precedence"] = p.alphabet.by_precedence();
    if (!p.field.is_rational())
        j["parameter"] = p.field.parameter;
    j["order"] = p.order;
    Json rels = Json::array();
    for (const auto& r : p.relations)
        rels.push_back(r.to_string(p.alphabet));
    j["relations"] = std::move(rels);
    return j;
}

namespace {
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        }
        else
            ++col;
    }
    return {line, col};
}

/* Location of the k-th string in the "relations" array, best effort. */
std::size_t relation_offset(std::string_view text, const std::string& relation)
{
    std::size_t key = text.find("\"relations\"");
    if (key == std::string_view::npos)
        return 0;
    std::size_t at = text.find(relation, key);
    return at == std::string_view::npos ? key : at;
}
}  // namespace

Presentation presentation_from_json(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSON", line, col);
    }
    auto fail = [](const std::string& what) -> Presentation { throw ParseError("presentation: " + what, 1, 1); };
    if (!j.is_object())
        return fail("top level must be an object");
    if (!j.contains("format") || j["format"] != 1)
        return fail("missing or unsupported \"format\" (expected 1)");
    if (!j.contains("generators") || !j["generators"].is_array())
        return fail("\"generators\" must be an array of names");
    if (!j.contains("relations") || !j["relations"].is_array())
        return fail("\"relations\" must be an array of polynomial strings");
    Presentation p;
    try {
        std::vector<std::string> gens = j["generators"].get<std::vector<std::string>>();
        std::vector<std::string> prec;
        if (j.contains("precedence"))
            prec = j["precedence"].get<std::vector<std::string>>();
        p.alphabet = Alphabet(gens, prec);
        if (j.contains("parameter") && !j["parameter"].is_null())
            p.field = Field{j["parameter"].get<std::string>()};
        if (j.contains("order"))
            p.order = j["order"].get<std::string>();
    }
    catch (const nlohmann::json::exception& e) {
        return fail(e.what());
    }
    catch (const ParseError&) {
        throw;
    }
    catch (const Error& e) {
        return fail(e.what());
    }
    const auto& rels = j["relations"];
    for (std::size_t k = 0; k < rels.size(); ++k) {
        if (!rels[k].is_string())
            return fail("relation " + std::to_string(k + 1) + " is not a string");
        std::string s = rels[k].get<std::string>();
        try {
            p.relations.push_back(parse_poly(s, p.alphabet, p.field));
        }
        catch (const ParseError& e) {
            auto [line, col] = line_column(text, relation_offset(text, s) + e.column() - 1);
            throw ParseError("relation " + std::to_string(k + 1) + ": " + e.message(), line, col);
        }
    }
    try {
        p.validate();
    }
    catch (const Error& e) {
        return fail(e.what());
    }
    return p;
}

/****************************************************
 *                   Groebner
 ***************************************************/

namespace {
const char* kind_name(AmbiguityKind k)
{
    return k == AmbiguityKind::overlap ? "overlap" : "inclusion";
}
}  // namespace

Json groebner_json(const Presentation& p, const GroebnerBasis& gb, const DiamondReport& diamond)
{
    Json j;
    Json basis = Json::array();
    for (const auto& g : gb.elements)
        basis.push_back(g.to_string(p.alphabet));
    j["basis"] = std::move(basis);
    Json obs = Json::array();
    for (const auto& w : gb.obstructions())
        obs.push_back(p.alphabet.format(w));
    j["obstructions"] = std::move(obs);
    j["degree_cap"] = gb.degree_cap;
    j["complete"] = gb.complete;
    j["pending_degree"] = gb.pending_degree ? Json(*gb.pending_degree) : Json(nullptr);
    Json amb = Json::array();
    for (const auto& e : diamond.entries) {
        Json a;
        a["word"] = p.alphabet.format(e.word);
        a["kind"] = kind_name(e.overlap.kind);
        a["left"] = e.overlap.left;
        a["right"] = e.overlap.right;
        a["offset"] = e.overlap.offset;
        a["s_polynomial"] = e.s_poly.to_string(p.alphabet);
        a["remainder"] = e.remainder.to_string(p.alphabet);
        a["resolved"] = e.resolved();
        amb.push_back(std::move(a));
    }
    j["ambiguities"] = std::move(amb);
    j["confluent"] = diamond.confluent();
    return j;
}

std::string groebner_text(const Presentation& p, const GroebnerBasis& gb, const DiamondReport& diamond)
{
    std::ostringstream out;
    out << "basis (" << gb.elements.size() << " elements, degree cap " << gb.degree_cap << "):\n";
    for (const auto& g : gb.elements)
        out << "  " << g.to_string(p.alphabet) << "\n";
    out << "complete: " << (gb.complete ? "true" : "false");
    if (gb.pending_degree)
        out << " (pending ambiguity of degree " << *gb.pending_degree << ")";
    out << "\nambiguities (" << diamond.entries.size() << "):\n";
    for (const auto& e : diamond.entries)
        out << "  " << p.alphabet.format(e.word) << "  [" << kind_name(e.overlap.kind) << " " << e.overlap.left << "," << e.overlap.right << " @" << e.overlap.offset
            << "]  -> " << e.remainder.to_string(p.alphabet) << (e.resolved() ? "" : "  UNRESOLVED") << "\n";
    out << "confluent: " << (diamond.confluent() ? "true" : "false") << "\n";
    return out.str();
}

/****************************************************
 *                   Chains
 ***************************************************/

Json chains_json(const Alphabet& a, std::span<const ChainSet> sets)
{
    Json levels = Json::array();
    for (const auto& cs : sets) {
        Json l;
        l["level"] = cs.level;
        l["count"] = cs.size();
        Json hist = Json::object();
        for (const auto& [len, count] : cs.degree_histogram)
            hist[std::to_string(len)] = count;
        l["histogram"] = std::move(hist);
        Json chains = Json::array();
        for (const auto& c : cs.chains) {
            Json cj;
            cj["word"] = a.format(c.word);
            cj["length"] = c.word.size();
            cj["tail"] = a.format(c.tail());
            cj["boundaries"] = c.boundaries;
            cj["obstruction_starts"] = c.obstruction_starts;
            chains.push_back(std::move(cj));
        }
        l["chains"] = std::move(chains);
        levels.push_back(std::move(l));
    }
    Json j;
    j["levels"] = std::move(levels);
    return j;
}

std::string chains_text(const Alphabet& a, std::span<const ChainSet> sets)
{
    std::ostringstream out;
    for (const auto& cs : sets) {
        out << "C_" << cs.level << ": " << cs.size() << " chains";
        if (!cs.degree_histogram.empty()) {
            out << "  lengths {";
            bool first = true;
            for (const auto& [len, count] : cs.degree_histogram) {
                out << (first ? "" : ", ") << len << ": " << count;
                first = false;
            }
            out << "}";
        }
        out << "\n";
        for (const auto& c : cs.chains)
            out << "  " << a.format(c.word) << "   tail " << a.format(c.tail()) << "\n";
    }
    return out.str();
}

/****************************************************
 *                   Resolution
 ***************************************************/

Json module_element_json(const FreeModuleElement& x, const ChainSet& chains, const Alphabet& a)
{
    Json terms = Json::array();
    for (const auto& [t, c] : x.terms()) {
        Json tj;
        tj["chain"] = a.format(chains.chains.at(t.chain).word);
        tj["word"] = a.format(t.word);
        tj["coefficient"] = c.to_string();
        terms.push_back(std::move(tj));
    }
    return terms;
}

namespace {
Json check_json(const ComplexReport& c)
{
    Json j;
    j["specialization"] = c.specialization ? Json(to_string(*c.specialization)) : Json("generic");
    j["augmentation_ok"] = c.augmentation_ok;
    Json comp = Json::array();
    for (const auto& x : c.compositions)
        comp.push_back({{"level", x.level}, {"generators", x.generators}, {"failures", x.failures}});
    j["compositions"] = std::move(comp);
    j["finite_dimensional"] = c.finite_dimensional;
    Json ex = Json::array();
    for (const auto& e : c.exactness)
        ex.push_back({{"position", e.position}, {"dimension", e.dimension}, {"rank_out", e.rank_out}, {"rank_in", e.rank_in}, {"exact", e.exact()}});
    j["exactness"] = std::move(ex);
    j["ok"] = c.ok();
    return j;
}
}  // namespace

Json resolution_json(const Alphabet& a, const Resolution& r, const ComplexReport* check)
{
    Json levels = Json::array();
    for (int n = 0; n <= r.max_level(); ++n) {
        Json l;
        l["level"] = n;
        Json ds = Json::array();
        const ChainSet& cs = r.chains(n);
        for (std::size_t g = 0; g < cs.size(); ++g) {
            Json d;
            d["chain"] = a.format(cs.chains[g].word);
            d["image"] = module_element_json(r.table(n).values[g], r.chains(n - 1), a);
            d["text"] = r.table(n).values[g].to_string(r.chains(n - 1), a);
            ds.push_back(std::move(d));
        }
        l["differentials"] = std::move(ds);
        levels.push_back(std::move(l));
    }
    Json j;
    j["levels"] = std::move(levels);
    if (check)
        j["complex_check"] = check_json(*check);
    return j;
}

std::string resolution_text(const Alphabet& a, const Resolution& r, const ComplexReport* check)
{
    std::ostringstream out;
    for (int n = 0; n <= r.max_level(); ++n) {
        out << "d_" << n << ":\n";
        const ChainSet& cs = r.chains(n);
        for (std::size_t g = 0; g < cs.size(); ++g)
            out << "  d_" << n << "(" << a.format(cs.chains[g].word) << " (x) 1) = " << r.table(n).values[g].to_string(r.chains(n - 1), a) << "\n";
    }
    if (check) {
        out << "complex check at " << (check->specialization ? to_string(*check->specialization) : std::string("generic")) << ":\n";
        out << "  eps o d_0 = 0: " << (check->augmentation_ok ? "yes" : "NO") << "\n";
        for (const auto& c : check->compositions)
            out << "  d_" << c.level << " o d_" << c.level + 1 << " = 0 on " << c.generators << " generators: " << (c.failures ? "NO" : "yes") << "\n";
        if (!check->finite_dimensional)
            out << "  exactness: skipped (algebra is not finite dimensional)\n";
        for (const auto& e : check->exactness)
            out << "  position " << e.position << ": dim " << e.dimension << " = rank_out " << e.rank_out << " + rank_in " << e.rank_in << ": "
                << (e.exact() ? "exact" : "NOT EXACT") << "\n";
    }
    return out.str();
}

/****************************************************
 *                   Homology
 ***************************************************/

Json reduced_json(const Alphabet& a, const Resolution& r, std::span<const ReducedDifferential> reduced)
{
    Json out = Json::array();
    for (const auto& rd : reduced) {
        Json l;
        l["level"] = rd.level;
        l["rows"] = rd.matrix.rows();
        l["cols"] = rd.matrix.cols();
        Json cols = Json::array();
        for (std::size_t c = 0; c < rd.matrix.cols(); ++c) {
            Json col;
            col["chain"] = a.format(r.chains(rd.level).chains[c].word);
            Json entries = Json::array();
            for (std::size_t row = 0; row < rd.matrix.rows(); ++row)
                if (!rd.matrix.at(row, c).is_zero())
                    entries.push_back({{"row", a.format(r.chains(rd.level - 1).chains[row].word)}, {"value", rd.matrix.at(row, c).to_string()}});
            col["entries"] = std::move(entries);
            cols.push_back(std::move(col));
        }
        l["columns"] = std::move(cols);
        out.push_back(std::move(l));
    }
    return out;
}

Json betti_json(std::span<const BettiTable> tables)
{
    Json j;
    j["index_map"] = "Tor_k = homology of the reduced complex at C_{k-1}";
    Json cols = Json::array();
    for (const auto& t : tables)
        cols.push_back(to_string(t.specialization));
    j["columns"] = std::move(cols);
    Json rows = Json::array();
    std::size_t degrees = tables.empty() ? 0 : tables.front().dims.size();
    for (std::size_t k = 0; k < degrees; ++k) {
        Json row;
        row["degree"] = k;
        Json dims = Json::array(), differs = Json::array();
        for (const auto& t : tables) {
            dims.push_back(t.dims.at(k));
            differs.push_back(t.dims.at(k) != tables.front().dims.at(k));
        }
        row["dims"] = std::move(dims);
        row["differs_from_first"] = std::move(differs);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string betti_text(std::span<const BettiTable> tables)
{
    std::ostringstream out;
    out << "Tor_k(K,K), k = homological degree (Tor_k is homology at C_{k-1}); '*' marks a value differing from the first column\n";
    out << std::setw(6) << "k";
    for (const auto& t : tables)
        out << std::setw(12) << to_string(t.specialization);
    out << "\n";
    std::size_t degrees = tables.empty() ? 0 : tables.front().dims.size();
    for (std::size_t k = 0; k < degrees; ++k) {
        out << std::setw(6) << k;
        for (const auto& t : tables) {
            std::string cell = std::to_string(t.dims.at(k)) + (t.dims.at(k) != tables.front().dims.at(k) ? "*" : "");
            out << std::setw(12) << cell;
        }
        out << "\n";
    }
    return out.str();
}

Json tau_dependence_json(const TauDependenceReport& report)
{
    Json j;
    Json dep = Json::array();
    for (std::size_t n = 0; n < report.depends.size(); ++n)
        dep.push_back({{"level", n + 1}, {"parameter_dependent", static_cast<bool>(report.depends[n])}});
    j["reduced_differentials"] = std::move(dep);
    j["betti"] = betti_json(report.tables);
    bool any = false;
    for (const auto& row : report.differs)
        for (bool b : row)
            any = any || b;
    j["dimensions_differ"] = any;
    return j;
}

std::string tau_dependence_text(const TauDependenceReport& report)
{
    std::ostringstream out;
    for (std::size_t n = 0; n < report.depends.size(); ++n)
        out << "dbar_" << n + 1 << ": " << (report.depends[n] ? "depends on the parameter" : "parameter free") << "\n";
    out << betti_text(report.tables);
    bool any = false;
    for (const auto& row : report.differs)
        for (bool b : row)
            any = any || b;
    out << "dimensions differ between generic and specialized values: " << (any ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace anick
