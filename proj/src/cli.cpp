#include "anick/cli.hpp"

#include "anick/error.hpp"
#include "anick/report.hpp"
#include "anick/tlmap.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace anick {

namespace {

struct JobConfig {
    std::string command;
    std::string preset;
    std::string file;
    std::size_t degree_cap = 8;
    int max_level = 3;
    std::vector<std::string> tau;
    std::string format = "text";
    std::string output;
    std::string word;
    std::size_t length_cap = 10;
    int max_degree = 3;
    bool check = false;
};

Json config_json(const JobConfig& c)
{
    Json j;
    if (!c.preset.empty())
        j["preset"] = c.preset;
    if (!c.file.empty())
        j["file"] = c.file;
    j["degree_cap"] = c.degree_cap;
    j["max_level"] = c.max_level;
    j["tau"] = c.tau;
    j["format"] = c.format;
    if (c.command == "braid-image")
        j["word"] = c.word;
    if (c.command == "hilbert")
        j["length_cap"] = c.length_cap;
    if (c.command == "oracle")
        j["max_degree"] = c.max_degree;
    if (c.command == "resolution")
        j["check"] = c.check;
    return j;
}

std::string config_line(const JobConfig& c)
{
    std::ostringstream s;
    s << "# " << engine_name << " " << engine_version << " " << c.command;
    if (!c.preset.empty())
        s << " preset=" << c.preset;
    if (!c.file.empty())
        s << " file=" << c.file;
    s << " degree_cap=" << c.degree_cap << " max_level=" << c.max_level;
    for (const auto& t : c.tau)
        s << " tau=" << t;
    if (c.command == "braid-image")
        s << " word=\"" << c.word << "\"";
    if (c.command == "hilbert")
        s << " length_cap=" << c.length_cap;
    if (c.command == "oracle")
        s << " max_degree=" << c.max_degree;
    s << "\n";
    return s.str();
}

Presentation load(const JobConfig& c, const std::string& parameter = "tau")
{
    if (!c.preset.empty() && !c.file.empty())
        throw Error("give either --preset or --file, not both");
    if (!c.preset.empty())
        return preset(PresetId::parse(c.preset), parameter);
    if (c.file.empty())
        throw Error("a presentation is required (--preset or --file)");
    std::ifstream in(c.file);
    if (!in)
        throw Error("cannot read " + c.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return presentation_from_json(buf.str());
}

std::vector<Specialization> specializations(const JobConfig& c)
{
    std::vector<Specialization> out;
    for (const auto& t : c.tau)
        out.push_back(parse_specialization(t));
    return out;
}

/* Completed basis that must be a genuine Groebner basis for the requested work. */
GroebnerBasis complete_or_limit(const Presentation& p, const JobConfig& c)
{
    GroebnerBasis gb = complete(p, c.degree_cap);
    if (!gb.complete)
        throw LimitError("Groebner completion is unfinished at --degree-cap " + std::to_string(c.degree_cap) + " (next ambiguity has degree " +
                         std::to_string(gb.pending_degree.value_or(0)) + "); chains of level " + std::to_string(c.max_level) +
                         " need a complete basis, raise --degree-cap");
    return gb;
}

struct Output {
    std::string text;
    Json json;
};

Output cmd_groebner(const JobConfig& c)
{
    Presentation p = load(c);
    GroebnerBasis gb = complete(p, c.degree_cap);
    DiamondReport diamond = verify_diamond(gb.elements);
    if (!gb.complete) {
        // ambiguities above the cap were never examined by completion
        std::erase_if(diamond.entries, [&](const AmbiguityResolution& e) { return e.word.size() > gb.degree_cap; });
    }
    return {groebner_text(p, gb, diamond), groebner_json(p, gb, diamond)};
}

Output cmd_chains(const JobConfig& c)
{
    Presentation p = load(c);
    GroebnerBasis gb = complete_or_limit(p, c);
    auto obs = gb.obstructions();
    auto sets = enumerate_chains(obs, p.alphabet.size(), c.max_level);
    return {chains_text(p.alphabet, sets), chains_json(p.alphabet, sets)};
}

Output cmd_resolution(const JobConfig& c)
{
    Presentation p = load(c);
    GroebnerBasis gb = complete_or_limit(p, c);
    Resolution r(gb, p.alphabet.size(), p.field, c.max_level);
    std::optional<ComplexReport> check;
    if (c.check) {
        auto specs = specializations(c);
        Specialization at = specs.empty() ? Specialization{} : specs.front();
        if (!p.field.is_rational() && !at)
            at = Rational(3, 2);
        check = r.check_complex(at);
    }
    const ComplexReport* cp = check ? &*check : nullptr;
    return {resolution_text(p.alphabet, r, cp), resolution_json(p.alphabet, r, cp)};
}

Output cmd_homology(const JobConfig& c)
{
    Presentation p = load(c);
    GroebnerBasis gb = complete_or_limit(p, c);
    Resolution r(gb, p.alphabet.size(), p.field, c.max_level);
    auto reduced = reduce_complex(r);
    std::vector<Rational> values;
    for (const auto& s : specializations(c))
        if (s)
            values.push_back(*s);
    TauDependenceReport report = tau_dependence_report(r, values);

    std::ostringstream text;
    for (const auto& rd : reduced) {
        text << "dbar_" << rd.level << ":\n";
        const ChainSet& cols = r.chains(rd.level);
        const ChainSet& rows = r.chains(rd.level - 1);
        for (std::size_t col = 0; col < rd.matrix.cols(); ++col) {
            std::string entry;
            for (std::size_t row = 0; row < rd.matrix.rows(); ++row) {
                const Scalar& v = rd.matrix.at(row, col);
                if (v.is_zero())
                    continue;
                entry += (entry.empty() ? "" : " + ") + std::string("(") + v.to_string() + ")*" + p.alphabet.format(rows.chains[row].word);
            }
            text << "  " << p.alphabet.format(cols.chains[col].word) << " -> " << (entry.empty() ? "0" : entry) << "\n";
        }
    }
    text << tau_dependence_text(report);

    Json j;
    j["reduced"] = reduced_json(p.alphabet, r, reduced);
    j["tau_dependence"] = tau_dependence_json(report);
    return {text.str(), j};
}

Output cmd_oracle(const JobConfig& c)
{
    Presentation p = load(c);
    GroebnerBasis gb = complete_or_limit(p, c);
    auto specs = specializations(c);
    if (specs.empty())
        specs.push_back(Specialization{});
    std::vector<BettiTable> tables;
    for (const auto& s : specs)
        tables.push_back(bar_oracle(gb, p.alphabet.size(), p.field, c.max_degree, s));
    return {betti_text(tables), betti_json(tables)};
}

Output cmd_hilbert(const JobConfig& c)
{
    Presentation p = load(c);
    GroebnerBasis gb = complete(p, c.degree_cap);
    auto obs = gb.obstructions();
    NormalWordSeries s = normal_word_series(obs, p.alphabet.size(), c.length_cap);
    std::ostringstream text;
    text << "normal words by length (0.." << c.length_cap << "):";
    for (auto v : s.coefficients)
        text << " " << v;
    text << "\ncomplete basis: " << (gb.complete ? "yes" : "no, counts are upper bounds beyond the cap") << "\n";
    Json j;
    j["coefficients"] = s.coefficients;
    j["complete"] = gb.complete;
    return {text.str(), j};
}

Output cmd_braid_image(const JobConfig& c)
{
    if (c.preset.empty())
        throw Error("braid-image needs --preset tlN");
    PresetId id = PresetId::parse(c.preset);
    if (id.kind != PresetId::Kind::tl)
        throw Error("braid-image needs a Temperley-Lieb preset");
    Presentation p = preset(id, "A");
    GroebnerBasis gb = complete_or_limit(p, c);
    BraidWord w = BraidWord::parse(c.word, id.n);
    Poly image = braid_image(w, p, gb.elements);
    Json j;
    j["word"] = w.to_string();
    j["image"] = image.to_string(p.alphabet);
    return {image.to_string(p.alphabet) + "\n", j};
}

Output cmd_presentation(const JobConfig& c)
{
    Presentation p = load(c);
    Json j = presentation_to_json(p);
    return {j.dump(2) + "\n", j};
}

Output dispatch(const JobConfig& c)
{
    if (c.command == "groebner")
        return cmd_groebner(c);
    if (c.command == "chains")
        return cmd_chains(c);
    if (c.command == "resolution")
        return cmd_resolution(c);
    if (c.command == "homology")
        return cmd_homology(c);
    if (c.command == "oracle")
        return cmd_oracle(c);
    if (c.command == "hilbert")
        return cmd_hilbert(c);
    if (c.command == "braid-image")
        return cmd_braid_image(c);
    return cmd_presentation(c);
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Noncommutative Groebner bases, Anick resolutions and Tor for finitely presented algebras", "anick"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(engine_version));

    JobConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--preset", cfg.preset, "built-in presentation: tl3, tl4, ..., b3-monoid");
        sub->add_option("--file", cfg.file, "presentation JSON file");
        sub->add_option("--degree-cap", cfg.degree_cap, "maximal ambiguity degree examined by completion")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", cfg.output, "write the report to this file");
    };
    auto add_level = [&](CLI::App* sub) { sub->add_option("--max-level", cfg.max_level, "highest chain level")->check(CLI::NonNegativeNumber); };
    auto add_tau = [&](CLI::App* sub) { sub->add_option("--tau", cfg.tau, "specialization: 'generic' or a rational, repeatable"); };

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"groebner", "complete to a Groebner basis and report every ambiguity"},
        {"chains", "enumerate Anick chains"},
        {"resolution", "build the differentials of Anick's resolution"},
        {"homology", "reduced complex, Betti numbers and parameter dependence"},
        {"oracle", "Tor dimensions from the normalized bar complex"},
        {"hilbert", "count normal words by length"},
        {"braid-image", "image of a braid word in the Temperley-Lieb algebra"},
        {"presentation", "print a presentation as JSON"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        std::string name = s.name;
        if (name == "chains" || name == "resolution" || name == "homology")
            add_level(sub);
        if (name == "resolution" || name == "homology" || name == "oracle")
            add_tau(sub);
        if (name == "resolution")
            sub->add_flag("--check", cfg.check, "verify d o d = 0 and exactness (at the first --tau, default 3/2)");
        if (name == "oracle")
            sub->add_option("--max-degree", cfg.max_degree, "highest homological degree")->check(CLI::NonNegativeNumber);
        if (name == "hilbert")
            sub->add_option("--length-cap", cfg.length_cap, "longest word counted");
        if (name == "braid-image")
            sub->add_option("--word", cfg.word, "braid word, e.g. \"s1 s2' s1^-1\"")->required();
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Output result = dispatch(cfg);
        std::string payload;
        if (cfg.format == "json") {
            Json j;
            j["engine"] = {{"name", engine_name}, {"version", engine_version}};
            j["command"] = cfg.command;
            j["config"] = config_json(cfg);
            j["result"] = std::move(result.json);
            payload = j.dump(2) + "\n";
        }
        else
            payload = config_line(cfg) + result.text;
        if (cfg.output.empty())
            out << payload;
        else {
            std::ofstream f(cfg.output, std::ios::binary);
            if (!f)
                throw Error("cannot write " + cfg.output);
            f << payload;
        }
        return 0;
    }
    catch (const ParseError& e) {
        err << "anick: parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
        return 1;
    }
    catch (const LimitError& e) {
        err << "anick: limit: " << e.what() << "\n";
        return 2;
    }
    catch (const InternalError& e) {
        err << "anick: internal error: " << e.what() << "\n";
        return 3;
    }
    catch (const Error& e) {
        err << "anick: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        err << "anick: internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace anick
