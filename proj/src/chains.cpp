#include "anick/chains.hpp"

#include "anick/error.hpp"

#include <algorithm>
#include <set>

namespace anick {

Word Chain::tail() const
{
    if (boundaries.empty())
        return Word{};
    std::size_t start = boundaries.size() >= 2 ? boundaries[boundaries.size() - 2] : 0;
    return word.suffix_from(start);
}

Word Chain::head() const
{
    if (boundaries.size() < 2)
        return Word{};
    return word.prefix(boundaries[boundaries.size() - 2]);
}

std::optional<std::size_t> ChainSet::find(const Word& w) const
{
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> ChainSet::longest_prefix(const Word& w) const
{
    for (std::size_t len = w.size() + 1; len-- > 0;)
        if (auto k = find(w.prefix(len)))
            return k;
    return std::nullopt;
}

void ChainSet::build_index()
{
    index_.clear();
    degree_histogram.clear();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        index_.emplace(chains[i].word, i);
        ++degree_histogram[chains[i].word.size()];
    }
}

bool is_antichain(std::span<const Word> words)
{
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            if (i != j && words[i].contains(words[j]))
                return false;
    return true;
}

namespace {
/* Extensions u -> u v where u v has exactly one obstruction occurrence, as its suffix. */
std::vector<std::pair<Word, std::size_t>> extensions(const Word& u, std::span<const Word> obstructions)
{
    std::vector<std::pair<Word, std::size_t>> out;
    std::set<Word> seen;
    for (const Word& o : obstructions) {
        for (std::size_t s = 0; s < u.size(); ++s) {
            std::size_t overlap = u.size() - s;
            if (overlap >= o.size() || !o.contains_at(u.suffix_from(s), 0))
                continue;
            Word v = o.suffix_from(overlap);
            Word x = u + v;
            bool unique = true;
            for (const Word& q : obstructions) {
                for (auto pos = x.find(q); pos; pos = x.find(q, *pos + 1))
                    if (*pos + q.size() < x.size()) {
                        unique = false;
                        break;
                    }
                if (!unique)
                    break;
            }
            if (unique && seen.insert(v).second)
                out.emplace_back(std::move(v), s);
        }
    }
    return out;
}
}  // namespace

std::vector<ChainSet> enumerate_chains(std::span<const Word> obstructions, std::size_t alphabet_size, int max_level)
{
    if (!is_antichain(obstructions))
        throw Error("obstruction set is not an antichain; interreduce the basis first");
    std::vector<ChainSet> sets;
    ChainSet unit;
    unit.level = -1;
    unit.chains.push_back(Chain{Word{}, -1, {}, {}});
    unit.build_index();
    sets.push_back(std::move(unit));
    if (max_level < 0)
        return sets;

    ChainSet gens;
    gens.level = 0;
    for (std::size_t l = 0; l < alphabet_size; ++l)
        gens.chains.push_back(Chain{Word{static_cast<Letter>(l)}, 0, {1}, {}});
    gens.build_index();
    sets.push_back(std::move(gens));

    for (int level = 1; level <= max_level; ++level) {
        ChainSet next;
        next.level = level;
        for (const Chain& c : sets.back().chains) {
            Word u = c.tail();
            std::size_t tail_start = c.word.size() - u.size();
            for (auto& [v, s] : extensions(u, obstructions)) {
                Chain d;
                d.word = c.word + v;
                d.level = level;
                d.boundaries = c.boundaries;
                d.boundaries.push_back(d.word.size());
                d.obstruction_starts = c.obstruction_starts;
                d.obstruction_starts.push_back(tail_start + s);
                next.chains.push_back(std::move(d));
            }
        }
        std::sort(next.chains.begin(), next.chains.end(), [](const Chain& a, const Chain& b) { return a.word < b.word; });
        next.build_index();
        if (next.find(Word{}) || std::adjacent_find(next.chains.begin(), next.chains.end(), [](const Chain& a, const Chain& b) { return a.word == b.word; }) != next.chains.end())
            throw InternalError("duplicate chain word at level " + std::to_string(level));
        sets.push_back(std::move(next));
    }
    return sets;
}

std::vector<std::size_t> chain_counts(std::span<const Word> obstructions, std::size_t alphabet_size, int max_level)
{
    std::vector<std::size_t> out;
    for (const auto& cs : enumerate_chains(obstructions, alphabet_size, max_level))
        out.push_back(cs.size());
    return out;
}

DegreeRange degree_range(const ChainSet& cs)
{
    DegreeRange r;
    for (const auto& [len, count] : cs.degree_histogram)
        if (count > 0)
            r.lengths.push_back(len);
    if (!r.lengths.empty()) {
        r.min_length = r.lengths.front();
        r.max_length = r.lengths.back();
    }
    return r;
}

std::vector<long long> chain_series(std::span<const ChainSet> sets, std::size_t length_cap)
{
    std::vector<long long> out(length_cap + 1, 0);
    for (const ChainSet& cs : sets) {
        long long sign = (cs.level + 1) % 2 == 0 ? 1 : -1;
        for (const auto& [len, count] : cs.degree_histogram)
            if (len <= length_cap)
                out[len] += sign * static_cast<long long>(count);
    }
    return out;
}

}  // namespace anick
