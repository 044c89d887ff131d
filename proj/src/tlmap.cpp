#include "anick/tlmap.hpp"

#include "anick/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace anick {

PresetId PresetId::parse(std::string_view text)
{
    if (text == "b3-monoid" || text == "b3_monoid")
        return PresetId{Kind::b3_monoid, 3};
    if (text.size() > 2 && text.substr(0, 2) == "tl") {
        std::string digits(text.substr(2));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) && digits.size() < 4) {
            int n = std::stoi(digits);
            if (n < 2)
                throw Error("tl(n) needs n >= 2");
            return PresetId{Kind::tl, n};
        }
    }
    throw Error("unknown preset '" + std::string(text) + "' (expected tlN or b3-monoid)");
}

std::string PresetId::to_string() const
{
    return kind == Kind::b3_monoid ? "b3-monoid" : "tl" + std::to_string(n);
}

Presentation preset(const PresetId& id, const std::string& parameter)
{
    Presentation p;
    if (id.kind == PresetId::Kind::b3_monoid) {
        p.alphabet = Alphabet({"s1", "s2"}, {"s2", "s1"});
        p.relations.push_back(parse_poly("s1*s2*s1 - s2*s1*s2", p.alphabet, p.field));
        p.validate();
        return p;
    }
    if (id.n < 2)
        throw Error("tl(n) needs n >= 2");
    std::vector<std::string> names;
    for (int i = 1; i < id.n; ++i)
        names.push_back("e" + std::to_string(i));
    p.alphabet = Alphabet(names);
    p.field = Field{parameter};
    Scalar loop = parameter == "A" ? tau_from_A() : Scalar::parameter(p.field);
    Scalar one = Scalar::one(p.field);
    auto gen = [&](int i) { return Poly::monomial(Word{static_cast<Letter>(i - 1)}, one); };
    const int m = id.n - 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(i - j) == 1)
                p.relations.push_back(gen(i) * gen(j) * gen(i) - gen(i));
    for (int i = 1; i <= m; ++i)
        p.relations.push_back(gen(i) * gen(i) - gen(i).scaled(loop));
    for (int i = 1; i <= m; ++i)
        for (int j = i + 2; j <= m; ++j)
            p.relations.push_back(gen(j) * gen(i) - gen(i) * gen(j));
    p.validate();
    return p;
}

BraidWord BraidWord::parse(std::string_view text, int strands)
{
    BraidWord w;
    w.strands = strands;
    std::istringstream in{std::string(text)};
    std::string tok;
    std::size_t seen = 0;
    while (in >> tok) {
        std::size_t column = text.find(tok, seen) + 1;
        seen = column - 1 + tok.size();
        std::size_t pos = 0;
        if (tok.empty() || (tok[0] != 's' && tok[0] != 'S'))
            throw ParseError("bad braid letter '" + tok + "'", 1, column);
        pos = 1;
        std::size_t start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("bad braid letter '" + tok + "'", 1, column);
        BraidLetter l;
        l.strand = std::stoi(tok.substr(start, pos - start));
        std::string rest = tok.substr(pos);
        if (rest.empty())
            l.sign = 1;
        else if (rest == "'" || rest == "^-1")
            l.sign = -1;
        else if (rest == "^1")
            l.sign = 1;
        else
            throw ParseError("bad braid letter '" + tok + "'", 1, column);
        if (l.strand < 1 || l.strand > strands - 1)
            throw ParseError("strand index " + std::to_string(l.strand) + " out of range for " + std::to_string(strands) + " strands", 1, column);
        w.letters.push_back(l);
    }
    return w;
}

std::string BraidWord::to_string() const
{
    std::string out;
    for (const auto& l : letters) {
        if (!out.empty())
            out += ' ';
        out += "s" + std::to_string(l.strand) + (l.sign < 0 ? "^-1" : "");
    }
    return out.empty() ? "1" : out;
}

Poly braid_image(const BraidWord& w, const Presentation& tl, std::span<const Poly> basis)
{
    if (tl.field.parameter != "A")
        throw Error("braid image needs a tl(n) presentation over Q(A)");
    Scalar a = Scalar::parameter(tl.field);
    Scalar a_inv = a.inverse();
    Poly result = Poly::constant(Scalar::one(tl.field));
    for (const auto& l : w.letters) {
        auto e = tl.alphabet.letter("e" + std::to_string(l.strand));
        if (!e || l.strand > w.strands - 1)
            throw Error("strand index " + std::to_string(l.strand) + " out of range");
        Poly image = Poly::constant(l.sign > 0 ? a : a_inv) + Poly::monomial(Word{*e}, l.sign > 0 ? a_inv : a);
        result = multiply_normal(result, image, basis);
    }
    return result;
}

}  // namespace anick
