#include "anick/homology.hpp"

#include "anick/error.hpp"

#include <algorithm>
#include <map>

namespace anick {

std::vector<ReducedDifferential> reduce_complex(const Resolution& resolution)
{
    std::vector<ReducedDifferential> out;
    for (int n = 0; n <= resolution.max_level(); ++n) {
        const ChainSet& src = resolution.chains(n);
        const ChainSet& dst = resolution.chains(n - 1);
        ReducedDifferential r{n, Matrix(dst.size(), src.size(), resolution.field())};
        const auto& values = resolution.table(n).values;
        for (std::size_t g = 0; g < values.size(); ++g)
            for (const auto& [t, c] : values[g].terms())
                if (t.word.empty())
                    r.matrix.at(t.chain, g) = c;
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_string(const Specialization& s)
{
    return s ? anick::to_string(*s) : std::string("generic");
}

Specialization parse_specialization(const std::string& text)
{
    if (text == "generic")
        return std::nullopt;
    return parse_rational(text);
}

namespace {
std::size_t rank_at(const Matrix& m, const Specialization& at)
{
    return rank(at ? m.specialize(*at) : m);
}
}  // namespace

BettiTable betti(std::span<const ReducedDifferential> reduced, const Specialization& at)
{
    BettiTable t;
    t.specialization = at;
    std::vector<std::size_t> ranks;
    for (const auto& r : reduced)
        ranks.push_back(rank_at(r.matrix, at));
    // Tor_0 lives at C_{-1}, which has one element and no outgoing differential.
    t.dims.push_back(1 - (ranks.empty() ? 0 : ranks[0]));
    for (std::size_t k = 1; k < reduced.size(); ++k) {
        std::size_t size = reduced[k - 1].matrix.cols();
        t.dims.push_back(size - ranks[k - 1] - ranks[k]);
    }
    return t;
}

BettiTable bar_oracle(const GroebnerBasis& gb, std::size_t alphabet_size, const Field& field, int max_degree, const Specialization& at)
{
    std::vector<Word> obstructions = gb.obstructions();
    auto words = finite_normal_basis(obstructions, alphabet_size);
    if (!words)
        throw Error("bar complex oracle needs a finite-dimensional algebra");
    // Augmentation ideal basis: nonempty normal words.
    std::vector<Word> ideal(words->begin() + 1, words->end());
    const std::size_t dim = ideal.size();
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < dim; ++i)
        index.emplace(ideal[i], i);

    const Field target = at ? Field{} : field;
    auto coerce = [&](const Scalar& c) { return at ? Scalar(c.specialize(*at)) : c; };

    // product[i][j]: coordinates of ideal[i] * ideal[j] in the ideal basis.
    std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> product(dim, std::vector<std::vector<std::pair<std::size_t, Scalar>>>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Poly p = reduce(Poly::monomial(ideal[i] + ideal[j], Scalar::one(field)), gb.elements);
            for (const auto& [w, c] : p.terms()) {
                if (w.empty())
                    throw Error("augmentation ideal is not closed under multiplication");
                Scalar s = coerce(c);
                if (!s.is_zero())
                    product[i][j].emplace_back(index.at(w), s);
            }
        }

    auto power = [](std::size_t base, int e) {
        std::size_t r = 1;
        for (int i = 0; i < e; ++i)
            r *= base;
        return r;
    };

    // rank of b'_n : Abar^{(x)n} -> Abar^{(x)n-1}, n >= 2
    auto bar_rank = [&](int n) -> std::size_t {
        if (n <= 1 || dim == 0)
            return 0;
        Matrix m(power(dim, n - 1), power(dim, n), target);
        std::vector<std::size_t> digits(static_cast<std::size_t>(n));
        for (std::size_t col = 0; col < m.cols(); ++col) {
            std::size_t rest = col;
            for (int k = n - 1; k >= 0; --k) {
                digits[static_cast<std::size_t>(k)] = rest % dim;
                rest /= dim;
            }
            for (int i = 1; i < n; ++i) {
                // (-1)^i a_1|...|a_i a_{i+1}|...|a_n
                const auto& prod = product[digits[static_cast<std::size_t>(i - 1)]][digits[static_cast<std::size_t>(i)]];
                for (const auto& [w, c] : prod) {
                    std::size_t row = 0;
                    for (int k = 0; k < n; ++k) {
                        if (k == i)
                            continue;
                        std::size_t d = k == i - 1 ? w : digits[static_cast<std::size_t>(k)];
                        row = row * dim + d;
                    }
                    if (i % 2)
                        m.at(row, col) -= c;
                    else
                        m.at(row, col) += c;
                }
            }
        }
        return rank(std::move(m));
    };

    BettiTable t;
    t.specialization = at;
    t.dims.push_back(1);
    std::size_t rank_prev = bar_rank(1);
    for (int n = 1; n <= max_degree; ++n) {
        std::size_t rank_next = bar_rank(n + 1);
        t.dims.push_back(power(dim, n) - rank_prev - rank_next);
        rank_prev = rank_next;
    }
    return t;
}

bool TauDependenceReport::all_levels_depend() const
{
    return std::all_of(depends.begin(), depends.end(), [](bool b) { return b; });
}

TauDependenceReport tau_dependence_report(const Resolution& resolution, std::span<const Rational> values)
{
    TauDependenceReport report;
    auto reduced = reduce_complex(resolution);
    for (std::size_t n = 1; n < reduced.size(); ++n)
        report.depends.push_back(reduced[n].matrix.max_parameter_degree() > 0);
    report.tables.push_back(betti(reduced, std::nullopt));
    for (const auto& v : values)
        report.tables.push_back(betti(reduced, v));
    for (const auto& t : report.tables) {
        std::vector<bool> row;
        for (std::size_t k = 0; k < t.dims.size(); ++k)
            row.push_back(t.dims[k] != report.tables.front().dims[k]);
        report.differs.push_back(std::move(row));
    }
    return report;
}

}  // namespace anick
