#include "anick/resolution.hpp"

#include "anick/error.hpp"

#include <algorithm>

namespace anick {

/****************************************************
 *                   FreeModuleElement
 ***************************************************/

const Scalar* FreeModuleElement::coefficient(std::uint32_t chain, const Word& word) const
{
    auto it = terms_.find(ModuleTerm{chain, word});
    return it == terms_.end() ? nullptr : &it->second;
}

void FreeModuleElement::add(std::uint32_t chain, const Word& word, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(ModuleTerm{chain, word}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void FreeModuleElement::add_scaled(const FreeModuleElement& x, const Scalar& c)
{
    if (x.level_ != level_)
        throw InternalError("adding module elements of different levels");
    for (const auto& [t, a] : x.terms_)
        add(t.chain, t.word, a * c);
}

FreeModuleElement FreeModuleElement::operator-() const
{
    FreeModuleElement r = *this;
    for (auto& [t, c] : r.terms_)
        c = -c;
    return r;
}

FreeModuleElement& FreeModuleElement::operator+=(const FreeModuleElement& rhs)
{
    if (rhs.level_ != level_)
        throw InternalError("adding module elements of different levels");
    for (const auto& [t, c] : rhs.terms_)
        add(t.chain, t.word, c);
    return *this;
}

FreeModuleElement& FreeModuleElement::operator-=(const FreeModuleElement& rhs)
{
    if (rhs.level_ != level_)
        throw InternalError("subtracting module elements of different levels");
    for (const auto& [t, c] : rhs.terms_)
        add(t.chain, t.word, -c);
    return *this;
}

std::string FreeModuleElement::to_string(const ChainSet& chains, const Alphabet& alphabet) const
{
    if (terms_.empty())
        return "0";
    // leading term first: descending on the concatenated word, ties by chain index
    std::vector<std::pair<Word, const std::pair<const ModuleTerm, Scalar>*>> order;
    for (const auto& entry : terms_)
        order.emplace_back(chains.chains.at(entry.first.chain).word + entry.first.word, &entry);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second->first.chain > b.second->first.chain;
    });
    std::string out;
    bool first = true;
    for (const auto& [full, entry] : order) {
        const auto& [t, c] = *entry;
        std::string basis = alphabet.format(chains.chains.at(t.chain).word) + " (x) " + alphabet.format(t.word);
        std::string term;
        if (c.is_one())
            term = basis;
        else if ((-c).is_one())
            term = "-" + basis;
        else {
            std::string s = c.to_string();
            bool sum = !c.is_rational() && c.function().denominator() == UPoly(Rational(1)) && c.function().numerator().term_count() > 1;
            term = (sum ? "(" + s + ")" : s) + "*" + basis;
        }
        if (first)
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
        first = false;
    }
    return out;
}

/****************************************************
 *                   Resolution
 ***************************************************/

Resolution::Resolution(const GroebnerBasis& gb, std::size_t alphabet_size, const Field& field, int max_level)
    : basis_(gb.elements), alphabet_size_(alphabet_size), field_(field), max_level_(max_level)
{
    if (max_level < 0)
        throw Error("max level must be nonnegative");
    std::vector<Word> obstructions = gb.obstructions();
    chains_ = enumerate_chains(obstructions, alphabet_size, max_level);
    for (int n = 0; n <= max_level; ++n)
        build_level(n);
}

FreeModuleElement Resolution::element(int level, std::uint32_t chain, const Word& word) const
{
    FreeModuleElement x(level);
    x.add(chain, word, Scalar::one(field_));
    return x;
}

FreeModuleElement Resolution::times(const FreeModuleElement& x, const Word& w) const
{
    if (w.empty())
        return x;
    FreeModuleElement out(x.level());
    for (const auto& [t, c] : x.terms()) {
        Poly p = reduce(Poly::monomial(t.word + w, Scalar::one(field_)), basis_);
        for (const auto& [u, a] : p.terms())
            out.add(t.chain, u, c * a);
    }
    return out;
}

FreeModuleElement Resolution::apply(int n, const FreeModuleElement& x) const
{
    if (x.level() != n)
        throw InternalError("d_" + std::to_string(n) + " applied to an element of level " + std::to_string(x.level()));
    const DifferentialTable& d = table(n);
    FreeModuleElement out(n - 1);
    for (const auto& [t, c] : x.terms())
        out.add_scaled(times(d.values.at(t.chain), t.word), c);
    return out;
}

Scalar Resolution::augment(const FreeModuleElement& x) const
{
    if (x.level() != -1)
        throw InternalError("augmentation applied above level -1");
    const Scalar* c = x.coefficient(0, Word{});
    return c ? *c : Scalar::zero(field_);
}

FreeModuleElement Resolution::split_unit(const Scalar& c) const
{
    FreeModuleElement x(-1);
    x.add(0, Word{}, c);
    return x;
}

std::pair<ModuleTerm, Scalar> Resolution::leading_term(const FreeModuleElement& x) const
{
    if (x.is_zero())
        throw Error("leading term of the zero module element");
    const ChainSet& cs = chains(x.level());
    const std::pair<const ModuleTerm, Scalar>* best = nullptr;
    Word best_word;
    for (const auto& entry : x.terms()) {
        Word full = cs.chains.at(entry.first.chain).word + entry.first.word;
        if (!best || full > best_word || (full == best_word && entry.first.chain > best->first.chain)) {
            best = &entry;
            best_word = std::move(full);
        }
    }
    return {best->first, best->second};
}

FreeModuleElement Resolution::split(int n, const FreeModuleElement& u) const
{
    if (u.level() != n - 1)
        throw InternalError("i_" + std::to_string(n) + " applied to an element of level " + std::to_string(u.level()));
    const ChainSet& lower = chains(n - 1);
    const ChainSet& upper = chains(n);
    FreeModuleElement result(n);
    FreeModuleElement residual = u;
    std::optional<std::pair<Word, std::uint32_t>> previous;
    while (!residual.is_zero()) {
        auto [t, alpha] = leading_term(residual);
        Word full = lower.chains.at(t.chain).word + t.word;
        std::pair<Word, std::uint32_t> key{full, t.chain};
        if (previous && !(key.first < previous->first || (key.first == previous->first && key.second < previous->second)))
            throw InternalError("splitting map i_" + std::to_string(n) + " failed to decrease the leading term");
        previous = key;
        auto g = upper.longest_prefix(full);
        if (!g)
            throw Error("i_" + std::to_string(n) + ": argument is not in ker d_" + std::to_string(n - 1) + " (leading word has no " +
                        std::to_string(n) + "-chain prefix)");
        Word c = full.suffix_from(upper.chains[*g].word.size());
        result.add(static_cast<std::uint32_t>(*g), c, alpha);
        residual.add_scaled(apply(n, element(n, static_cast<std::uint32_t>(*g), c)), -alpha);
    }
    return result;
}

void Resolution::build_level(int n)
{
    DifferentialTable d;
    d.level = n;
    const ChainSet& cs = chains(n);
    for (const Chain& chain : cs.chains) {
        if (n == 0) {
            d.values.push_back(element(-1, 0, chain.word));
            continue;
        }
        auto g = chains(n - 1).find(chain.head());
        if (!g)
            throw InternalError("chain head is not a chain one level down");
        FreeModuleElement x = element(n - 1, static_cast<std::uint32_t>(*g), chain.tail());
        d.values.push_back(x - split(n - 1, apply(n - 1, x)));
    }
    tables_.push_back(std::move(d));
}

Matrix Resolution::differential_matrix(int n, std::span<const Word> algebra_basis, const std::optional<Rational>& value) const
{
    std::map<Word, std::size_t> word_index;
    for (std::size_t i = 0; i < algebra_basis.size(); ++i)
        word_index.emplace(algebra_basis[i], i);
    const std::size_t dim = algebra_basis.size();
    const ChainSet& src = chains(n);
    const ChainSet& dst = chains(n - 1);
    Matrix m(dst.size() * dim, src.size() * dim, value ? Field{} : field_);
    for (std::size_t g = 0; g < src.size(); ++g)
        for (std::size_t w = 0; w < dim; ++w) {
            FreeModuleElement image = times(table(n).values[g], algebra_basis[w]);
            for (const auto& [t, c] : image.terms()) {
                auto it = word_index.find(t.word);
                if (it == word_index.end())
                    throw InternalError("normal word outside the algebra basis");
                m.at(t.chain * dim + it->second, g * dim + w) = value ? Scalar(c.specialize(*value)) : c;
            }
        }
    return m;
}

bool ComplexReport::ok() const
{
    if (!augmentation_ok)
        return false;
    for (const auto& c : compositions)
        if (c.failures)
            return false;
    for (const auto& e : exactness)
        if (!e.exact())
            return false;
    return true;
}

ComplexReport Resolution::check_complex(const std::optional<Rational>& value) const
{
    ComplexReport report;
    report.specialization = value;
    report.augmentation_ok = true;
    for (const auto& d0 : table(0).values)
        if (!augment(d0).is_zero())
            report.augmentation_ok = false;
    for (int n = 0; n < max_level_; ++n) {
        ComplexReport::Composition c{n, table(n + 1).values.size(), 0};
        for (const auto& x : table(n + 1).values)
            if (!apply(n, x).is_zero())
                ++c.failures;
        report.compositions.push_back(c);
    }

    std::vector<Word> obstructions;
    for (const auto& g : basis_)
        obstructions.push_back(g.leading_word());
    auto algebra_basis = finite_normal_basis(obstructions, alphabet_size_);
    report.finite_dimensional = algebra_basis.has_value();
    if (!algebra_basis)
        return report;
    const std::size_t dim = algebra_basis->size();
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= max_level_; ++n)
        ranks.push_back(rank(differential_matrix(n, *algebra_basis, value)));
    // epsilon: C_{-1} (x) A = A -> K is onto.
    std::size_t eps_rank = dim > 0 ? 1 : 0;
    for (int p = -1; p < max_level_; ++p) {
        ComplexReport::Exactness e;
        e.position = p;
        e.dimension = chains(p).size() * dim;
        e.rank_out = p < 0 ? eps_rank : ranks[static_cast<std::size_t>(p)];
        e.rank_in = ranks[static_cast<std::size_t>(p + 1)];
        report.exactness.push_back(e);
    }
    return report;
}

std::optional<std::vector<Word>> finite_normal_basis(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t length_limit)
{
    std::vector<Word> all{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= length_limit; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (std::size_t l = 0; l < alphabet_size; ++l) {
                Word v = w + Word{static_cast<Letter>(l)};
                if (std::none_of(obstructions.begin(), obstructions.end(), [&](const Word& o) { return v.has_suffix(o); }))
                    next.push_back(std::move(v));
            }
        if (next.empty())
            return all;
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return std::nullopt;
}

}  // namespace anick
