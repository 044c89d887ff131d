#include "anick/freealg.hpp"

#include "anick/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace anick {

/****************************************************
 *                   Word
 ***************************************************/

Word Word::subword(std::size_t pos, std::size_t len) const
{
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos), letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::contains_at(const Word& pattern, std::size_t pos) const
{
    if (pos + pattern.size() > size())
        return false;
    return std::equal(pattern.letters_.begin(), pattern.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> Word::find(const Word& pattern, std::size_t from) const
{
    for (std::size_t pos = from; pos + pattern.size() <= size(); ++pos)
        if (contains_at(pattern, pos))
            return pos;
    return std::nullopt;
}

Word& Word::operator+=(const Word& rhs)
{
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const
{
    if (auto c = size() <=> rhs.size(); c != 0)
        return c;
    return letters_ <=> rhs.letters_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : w.letters())
        h = (h ^ l) * 1099511628211ULL;
    return h ^ w.size();
}

/****************************************************
 *                   Alphabet
 ***************************************************/

namespace {
bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}
}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::vector<std::string> precedence)
    : declared_(std::move(names))
{
    if (declared_.size() > 255)
        throw Error("too many generators");
    std::set<std::string> seen;
    for (const auto& n : declared_) {
        if (!is_identifier(n))
            throw Error("invalid generator name '" + n + "'");
        if (!seen.insert(n).second)
            throw Error("duplicate generator name '" + n + "'");
    }
    if (precedence.empty())
        by_rank_ = declared_;
    else {
        std::set<std::string> p(precedence.begin(), precedence.end());
        if (p != seen || precedence.size() != declared_.size())
            throw Error("precedence must be a permutation of the generators");
        by_rank_ = std::move(precedence);
    }
}

std::optional<Letter> Alphabet::letter(std::string_view name) const
{
    for (std::size_t i = 0; i < by_rank_.size(); ++i)
        if (by_rank_[i] == name)
            return static_cast<Letter>(i);
    return std::nullopt;
}

Word Alphabet::word(std::string_view text) const
{
    std::vector<Letter> letters;
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t == "1" || t.empty())
        return Word{};
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t star = t.find('*', pos);
        std::string name = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        auto l = letter(name);
        if (!l)
            throw ParseError("unknown generator '" + name + "'", 1, pos + 1);
        letters.push_back(*l);
        if (star == std::string::npos)
            break;
        pos = star + 1;
    }
    return Word(std::move(letters));
}

std::string Alphabet::format(const Word& w) const
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '*';
        out += name(w[i]);
    }
    return out;
}

/****************************************************
 *                   Poly
 ***************************************************/

Poly Poly::monomial(const Word& w, const Scalar& c)
{
    Poly p;
    if (!c.is_zero())
        p.terms_.emplace(w, c);
    return p;
}

std::pair<const Word&, const Scalar&> Poly::leading_term() const
{
    if (terms_.empty())
        throw Error("leading term of the zero polynomial");
    auto it = terms_.begin();
    return {it->first, it->second};
}

const Scalar* Poly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
}

void Poly::add_term(const Word& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Poly::subtract_multiple(const Scalar& c, const Word& left, const Poly& g, const Word& right)
{
    for (const auto& [u, a] : g.terms_)
        add_term(left + u + right, -(c * a));
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& [w, c] : p.terms_)
        c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    Poly p;
    for (const auto& [u, a] : lhs.terms_)
        for (const auto& [v, b] : rhs.terms_)
            p.add_term(u + v, a * b);
    return p;
}

Poly Poly::scaled(const Scalar& c) const
{
    Poly p;
    if (c.is_zero())
        return p;
    for (const auto& [w, a] : terms_)
        p.terms_.emplace(w, a * c);
    return p;
}

Poly Poly::sandwiched(const Word& left, const Word& right) const
{
    Poly p;
    for (const auto& [w, a] : terms_)
        p.terms_.emplace(left + w + right, a);
    return p;
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    return scaled(leading_coefficient().inverse());
}

namespace {
bool is_top_level_sum(const Scalar& c)
{
    if (c.is_rational())
        return false;
    const auto& f = c.function();
    return f.denominator() == UPoly(Rational(1)) && f.numerator().term_count() > 1;
}
}  // namespace

std::string Poly::to_string(const Alphabet& alphabet) const
{
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string term;
        if (w.empty()) {
            term = c.to_string();
            if (is_top_level_sum(c))
                term = "(" + term + ")";
        }
        else {
            std::string word = alphabet.format(w);
            if (c.is_one())
                term = word;
            else if ((-c).is_one())
                term = "-" + word;
            else {
                std::string s = c.to_string();
                term = (is_top_level_sum(c) ? "(" + s + ")" : s) + "*" + word;
            }
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

void Presentation::validate() const
{
    if (order != "deglex")
        throw Error("unsupported monomial order '" + order + "'");
    for (const auto& name : alphabet.declared())
        if (!field.is_rational() && name == field.parameter)
            throw Error("generator name clashes with parameter '" + name + "'");
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const Poly& r = relations[i];
        if (r.is_zero())
            throw Error("relation " + std::to_string(i + 1) + " is zero");
        for (const auto& [w, c] : r.terms()) {
            if (c.field() != field)
                throw FieldMismatch("relation " + std::to_string(i + 1) + " has coefficients outside " + field.to_string());
            for (Letter l : w.letters())
                if (l >= alphabet.size())
                    throw Error("relation " + std::to_string(i + 1) + " uses an unknown generator");
        }
        if (r.coefficient(Word{}) != nullptr)
            throw Error("relation " + std::to_string(i + 1) + " is not killed by the augmentation (nonzero constant term)");
    }
}

/****************************************************
 *                   Parser
 ***************************************************/

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const Alphabet& alphabet, const Field& field)
        : text_(text), alphabet_(alphabet), field_(field)
    {
    }

    Poly parse()
    {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, 1, at + 1); }
    [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        Poly p = term();
        for (;;) {
            if (accept('+'))
                p += term();
            else if (accept('-'))
                p -= term();
            else
                return p;
        }
    }

    Poly term()
    {
        Poly p = unary();
        for (;;) {
            if (accept('*'))
                p = p * unary();
            else if (accept('/')) {
                std::size_t at = pos_;
                Poly d = unary();
                p = p.scaled(as_scalar(d, at, "divisor").inverse());
            }
            else
                return p;
        }
    }

    Poly unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    Poly power()
    {
        std::size_t at = pos_;
        Poly base = atom();
        if (!accept('^'))
            return base;
        bool negative = accept('-');
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer exponent");
        unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
        if (e > 1000)
            fail("exponent too large", start);
        if (negative)
            base = Poly::constant(as_scalar(base, at, "base of a negative power").inverse());
        Poly result = Poly::constant(Scalar::one(field_));
        for (unsigned long i = 0; i < e; ++i)
            result = result * base;
        return result;
    }

    Poly atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')'))
                fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Poly::constant(Scalar::constant(field_, Rational(mpz_class(std::string(text_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (!field_.is_rational() && name == field_.parameter)
                return Poly::constant(Scalar::parameter(field_));
            if (auto l = alphabet_.letter(name))
                return Poly::monomial(Word{*l}, Scalar::one(field_));
            fail("unknown identifier '" + name + "'", start);
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Scalar as_scalar(const Poly& p, std::size_t at, const char* role) const
    {
        if (!p.is_constant())
            fail(std::string(role) + " must be a scalar", at);
        if (p.is_zero())
            fail("division by zero", at);
        return p.leading_coefficient();
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    const Field& field_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Alphabet& alphabet, const Field& field)
{
    return PolyParser(text, alphabet, field).parse();
}

Scalar parse_scalar(std::string_view text, const Field& field)
{
    Alphabet none;
    Poly p = PolyParser(text, none, field).parse();
    if (p.is_zero())
        return Scalar::zero(field);
    return p.leading_coefficient();
}

/****************************************************
 *                   Reduction
 ***************************************************/

namespace {
/* Leftmost occurrence of any leading word of `system` in w; longest pattern on ties. */
std::optional<std::pair<std::size_t, std::size_t>> find_reducer(const Word& w, std::span<const Poly> system)
{
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < system.size(); ++k) {
            const Word& lw = system[k].leading_word();
            if (w.contains_at(lw, pos) && (!best || lw.size() > system[*best].leading_word().size()))
                best = k;
        }
        if (best)
            return std::make_pair(pos, *best);
    }
    return std::nullopt;
}
}  // namespace

Poly reduce(const Poly& p, std::span<const Poly> system)
{
    Poly result;
    Poly work = p;
    while (!work.is_zero()) {
        auto [lw, lc] = work.leading_term();
        Word w = lw;
        Scalar c = lc;
        if (auto hit = find_reducer(w, system)) {
            auto [pos, k] = *hit;
            const Poly& g = system[k];
            work.subtract_multiple(c, w.prefix(pos), g, w.suffix_from(pos + g.leading_word().size()));
        }
        else {
            result.add_term(w, c);
            work.add_term(w, -c);
        }
    }
    return result;
}

Poly multiply_normal(const Poly& a, const Poly& b, std::span<const Poly> system)
{
    return reduce(a * b, system);
}

bool is_normal_word(const Word& w, std::span<const Word> obstructions)
{
    return std::none_of(obstructions.begin(), obstructions.end(), [&](const Word& o) { return w.contains(o); });
}

std::vector<Word> normal_words(std::span<const Word> obstructions, std::size_t alphabet_size, std::size_t max_length)
{
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (std::size_t l = 0; l < alphabet_size; ++l) {
                Word v = w + Word{static_cast<Letter>(l)};
                bool ok = std::none_of(obstructions.begin(), obstructions.end(), [&](const Word& o) { return v.has_suffix(o); });
                if (ok)
                    next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace anick
