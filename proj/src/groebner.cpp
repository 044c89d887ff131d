#include "anick/groebner.hpp"

#include "anick/error.hpp"

#include <algorithm>
#include <tuple>

namespace anick {

Word ambiguity_word(const Word& left_lead, const Word& right_lead, std::size_t offset, AmbiguityKind kind)
{
    if (kind == AmbiguityKind::inclusion)
        return left_lead;
    return left_lead + right_lead.suffix_from(left_lead.size() - offset);
}

namespace {
bool valid_overlap(const Word& l1, const Word& l2, std::size_t offset, AmbiguityKind kind)
{
    if (kind == AmbiguityKind::inclusion)
        return offset + l2.size() <= l1.size() && l1.contains_at(l2, offset);
    if (offset == 0 || offset >= l1.size() || offset + l2.size() <= l1.size())
        return false;
    return l2.prefix(l1.size() - offset) == l1.suffix_from(offset);
}
}  // namespace

Poly s_polynomial(const Poly& g1, const Poly& g2, std::size_t offset, AmbiguityKind kind)
{
    const Word& l1 = g1.leading_word();
    const Word& l2 = g2.leading_word();
    if (!valid_overlap(l1, l2, offset, kind))
        throw Error("invalid overlap: leading words do not meet at offset " + std::to_string(offset));
    Poly a = g1.monic();
    Poly b = g2.monic();
    if (kind == AmbiguityKind::inclusion)
        return a - b.sandwiched(l1.prefix(offset), l1.suffix_from(offset + l2.size()));
    return a.sandwiched(Word{}, l2.suffix_from(l1.size() - offset)) - b.sandwiched(l1.prefix(offset), Word{});
}

namespace {
/* An overlap word l1 u = v l2 is a 2-chain iff no other leading word ends strictly
 * between the end of l1 and the end of the word. */
bool is_minimal_overlap(const Word& w, std::size_t left_end, std::span<const Poly> basis)
{
    for (const Poly& g : basis) {
        const Word& o = g.leading_word();
        for (auto pos = w.find(o); pos; pos = w.find(o, *pos + 1)) {
            std::size_t end = *pos + o.size();
            if (end > left_end && end < w.size())
                return false;
        }
    }
    return true;
}
}  // namespace

std::vector<Overlap> ambiguities(std::span<const Poly> basis, AmbiguityScope scope)
{
    std::vector<std::pair<std::size_t, Overlap>> found;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Word& l1 = basis[i].leading_word();
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const Word& l2 = basis[j].leading_word();
            for (std::size_t off = 1; off < l1.size(); ++off) {
                if (!valid_overlap(l1, l2, off, AmbiguityKind::overlap))
                    continue;
                Word w = ambiguity_word(l1, l2, off, AmbiguityKind::overlap);
                if (scope == AmbiguityScope::minimal && !is_minimal_overlap(w, l1.size(), basis))
                    continue;
                found.push_back({w.size(), Overlap{i, j, off, AmbiguityKind::overlap}});
            }
            if (i == j)
                continue;
            for (auto pos = l1.find(l2); pos; pos = l1.find(l2, *pos + 1))
                found.push_back({l1.size(), Overlap{i, j, *pos, AmbiguityKind::inclusion}});
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second.left, a.second.right, a.second.offset) <
               std::tie(b.first, b.second.left, b.second.right, b.second.offset);
    });
    std::vector<Overlap> out;
    out.reserve(found.size());
    for (auto& f : found)
        out.push_back(f.second);
    return out;
}

std::vector<Word> GroebnerBasis::obstructions() const
{
    std::vector<Word> out;
    out.reserve(elements.size());
    for (const Poly& g : elements)
        out.push_back(g.leading_word());
    return out;
}

std::vector<Poly> interreduce(std::vector<Poly> polys)
{
    std::erase_if(polys, [](const Poly& p) { return p.is_zero(); });
    for (auto& p : polys)
        p = p.monic();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            std::vector<Poly> others;
            others.reserve(polys.size() - 1);
            for (std::size_t j = 0; j < polys.size(); ++j)
                if (j != i)
                    others.push_back(polys[j]);
            Poly r = reduce(polys[i], others);
            if (r.is_zero()) {
                polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (!(r == polys[i])) {
                polys[i] = std::move(r);
                changed = true;
            }
        }
    }
    return polys;
}

namespace {
std::size_t ambiguity_degree(const Overlap& ov, std::span<const Poly> basis)
{
    return ambiguity_word(basis[ov.left].leading_word(), basis[ov.right].leading_word(), ov.offset, ov.kind).size();
}
}  // namespace

GroebnerBasis complete(const Presentation& presentation, std::size_t degree_cap)
{
    presentation.validate();
    GroebnerBasis gb;
    gb.degree_cap = degree_cap;
    gb.elements = interreduce(presentation.relations);
    for (;;) {
        bool added = false;
        for (const Overlap& ov : ambiguities(gb.elements)) {
            if (ambiguity_degree(ov, gb.elements) > degree_cap)
                break;
            Poly s = s_polynomial(gb.elements[ov.left], gb.elements[ov.right], ov.offset, ov.kind);
            Poly r = reduce(s, gb.elements);
            if (!r.is_zero()) {
                gb.elements.push_back(r.monic());
                gb.elements = interreduce(std::move(gb.elements));
                added = true;
                break;
            }
        }
        if (!added)
            break;
    }
    for (const Overlap& ov : ambiguities(gb.elements)) {
        std::size_t d = ambiguity_degree(ov, gb.elements);
        if (d > degree_cap) {
            gb.pending_degree = d;
            break;
        }
    }
    gb.complete = !gb.pending_degree.has_value();
    return gb;
}

bool DiamondReport::confluent() const
{
    return std::all_of(entries.begin(), entries.end(), [](const AmbiguityResolution& e) { return e.resolved(); });
}

DiamondReport verify_diamond(std::span<const Poly> basis, AmbiguityScope scope)
{
    DiamondReport report;
    for (const Overlap& ov : ambiguities(basis, scope)) {
        const Poly& g1 = basis[ov.left];
        const Poly& g2 = basis[ov.right];
        AmbiguityResolution e{ov, ambiguity_word(g1.leading_word(), g2.leading_word(), ov.offset, ov.kind), s_polynomial(g1, g2, ov.offset, ov.kind), {}};
        e.remainder = reduce(e.s_poly, basis);
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::size_t NormalWordSeries::total() const
{
    std::size_t n = 0;
    for (auto c : coefficients)
        n += c;
    return n;
}

NormalWordSeries normal_word_series(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t length_cap)
{
    NormalWordSeries series;
    std::vector<Word> layer{Word{}};
    series.coefficients.push_back(1);
    for (std::size_t len = 1; len <= length_cap; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (std::size_t l = 0; l < alphabet_size; ++l) {
                Word v = w + Word{static_cast<Letter>(l)};
                if (std::none_of(obstructions.begin(), obstructions.end(), [&](const Word& o) { return v.has_suffix(o); }))
                    next.push_back(std::move(v));
            }
        series.coefficients.push_back(next.size());
        layer = std::move(next);
    }
    return series;
}

}  // namespace anick
