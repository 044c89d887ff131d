#pragma once

#include "anick/freealg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace anick {

/* Anick n-chain. The word splits into pieces x t_1 ... t_n: x a generator, each t_k
 * nonempty, and obstruction k ends exactly at the end of t_k. */
struct Chain {
    Word word;
    int level = -1;
    /* End position of each piece; size level + 1 (empty for the level -1 chain). */
    std::vector<std::size_t> boundaries;
    /* Start position of obstruction k, k = 1..level. */
    std::vector<std::size_t> obstruction_starts;

    Word tail() const;
    /* The underlying (level - 1)-chain word. */
    Word head() const;
};

struct ChainSet {
    int level = -1;
    std::vector<Chain> chains;  // DEGLEX order
    std::map<std::size_t, std::size_t> degree_histogram;

    std::size_t size() const { return chains.size(); }
    std::optional<std::size_t> find(const Word& w) const;
    /* Longest prefix of w that is a chain of this level. */
    std::optional<std::size_t> longest_prefix(const Word& w) const;

    void build_index();

private:
    std::unordered_map<Word, std::size_t, WordHash> index_;
};

/* Chain sets for levels -1..max_level (element k holds level k - 1).
 * Requires the obstructions to form an antichain under the subword order. */
std::vector<ChainSet> enumerate_chains(std::span<const Word> obstructions, std::size_t alphabet_size, int max_level);

/* |C_n| for n = -1..max_level. */
std::vector<std::size_t> chain_counts(std::span<const Word> obstructions, std::size_t alphabet_size, int max_level);

struct DegreeRange {
    std::size_t min_length = 0;
    std::size_t max_length = 0;
    std::vector<std::size_t> lengths;
};

DegreeRange degree_range(const ChainSet& cs);

/* Coefficients of sum_{n>=-1} (-1)^(n+1) C_n(t) truncated at length_cap, where C_n(t)
 * counts n-chains by length. For a complete set of chains this is the inverse of the
 * normal-word series. */
std::vector<long long> chain_series(std::span<const ChainSet> sets, std::size_t length_cap);

bool is_antichain(std::span<const Word> words);

}  // namespace anick
