#include "anick/error.hpp"
#include "anick/resolution.hpp"
#include "anick/tlmap.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace anick;

namespace {

const Field Qt{"tau"};

struct Tl3 {
    Presentation p = preset(PresetId::parse("tl3"));
    GroebnerBasis gb = complete(p, 6);
    Resolution r{gb, 2, p.field, 4};

    std::string d(int n, const std::string& chain) const
    {
        auto idx = r.chains(n).find(p.alphabet.word(chain));
        REQUIRE(idx);
        return r.table(n).values[*idx].to_string(r.chains(n - 1), p.alphabet);
    }
};

const Tl3& tl3()
{
    static const Tl3 t;
    return t;
}

/* e1 <-> e2 on words. */
Word swap(const Word& w)
{
    std::vector<Letter> l;
    for (std::size_t i = 0; i < w.size(); ++i)
        l.push_back(static_cast<Letter>(1 - w[i]));
    return Word(l);
}

}  // namespace

TEST_CASE("low differentials of TL3")
{
    const Tl3& t = tl3();
    CHECK(t.d(0, "e1") == "1 (x) e1");
    CHECK(t.d(1, "e1*e2*e1") == "e1 (x) e2*e1 - e1 (x) 1");
    CHECK(t.d(1, "e1*e1") == "e1 (x) e1 - tau*e1 (x) 1");
    CHECK(t.d(2, "e1*e2*e1*e2") == "e1*e2*e1 (x) e2");
    CHECK(t.d(2, "e1*e1*e2*e1") == "e1*e1 (x) e2*e1 + tau*e1*e2*e1 (x) 1 - e1*e1 (x) 1");
    CHECK(t.d(3, "e1*e2*e1*e1*e2*e1") == "e1*e2*e1*e1 (x) e2*e1 + tau*e1*e2*e1*e2 (x) e1 - e1*e2*e1*e1 (x) 1 - e1*e1*e2*e1 (x) 1");
    CHECK(t.d(3, "e1*e1*e2*e1*e1") == "e1*e1*e2*e1 (x) e1 - tau*e1*e2*e1*e1 (x) 1 - tau*e1*e1*e2*e1 (x) 1 + e1*e1*e1 (x) 1");
    // computed value; the reference print omits the tau, which breaks d2 o d3 = 0
    CHECK(t.d(3, "e1*e1*e1*e1") == "e1*e1*e1 (x) e1 - tau*e1*e1*e1 (x) 1");
}

TEST_CASE("leading term of a differential is chain tail (x) word")
{
    const Tl3& t = tl3();
    for (int n = 1; n <= 4; ++n)
        for (std::size_t g = 0; g < t.r.chains(n).size(); ++g) {
            const Chain& c = t.r.chains(n).chains[g];
            auto [term, coeff] = t.r.leading_term(t.r.table(n).values[g]);
            CHECK(coeff.is_one());
            CHECK(t.r.chains(n - 1).chains[term.chain].word + term.word == c.word);
            CHECK(term.word == c.tail());
        }
}

TEST_CASE("d o d = 0 generically through level 4")
{
    const Tl3& t = tl3();
    for (int n = 0; n < 4; ++n)
        for (const auto& v : t.r.table(n + 1).values)
            CHECK(t.r.apply(n, v).is_zero());
    for (const auto& v : t.r.table(0).values)
        CHECK(t.r.augment(v).is_zero());
}

TEST_CASE("e1 <-> e2 symmetry of the differentials")
{
    const Tl3& t = tl3();
    for (int n = 0; n <= 4; ++n)
        for (std::size_t g = 0; g < t.r.chains(n).size(); ++g) {
            auto h = t.r.chains(n).find(swap(t.r.chains(n).chains[g].word));
            REQUIRE(h);
            const FreeModuleElement& a = t.r.table(n).values[g];
            FreeModuleElement mirrored(n - 1);
            for (const auto& [term, c] : a.terms())
                mirrored.add(static_cast<std::uint32_t>(*t.r.chains(n - 1).find(swap(t.r.chains(n - 1).chains[term.chain].word))), swap(term.word), c);
            CHECK(mirrored == t.r.table(n).values[*h]);
        }
}

TEST_CASE("splitting maps invert the differential on its image")
{
    const Tl3& t = tl3();
    std::mt19937 rng(23);
    auto basis = *finite_normal_basis(t.gb.obstructions(), 2);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
            // random element of C_n (x) A, pushed to the kernel of d_{n-1} via d_n
            FreeModuleElement x(n);
            for (int k = 0; k < 3; ++k) {
                std::uniform_int_distribution<std::size_t> gi(0, t.r.chains(n).size() - 1), wi(0, basis.size() - 1);
                x.add(static_cast<std::uint32_t>(gi(rng)), basis[wi(rng)], testing::random_scalar(rng, Qt));
            }
            FreeModuleElement u = t.r.apply(n, x);
            FreeModuleElement s = t.r.split(n, u);
            CHECK(t.r.apply(n, s) == u);
        }
    }
    CHECK(t.r.apply(0, t.r.split(0, t.r.element(-1, 0, t.p.alphabet.word("e2*e1")))) == t.r.element(-1, 0, t.p.alphabet.word("e2*e1")));
}

TEST_CASE("split rejects elements outside the image")
{
    const Tl3& t = tl3();
    FreeModuleElement one = t.r.element(-1, 0);
    CHECK_THROWS_AS(t.r.split(0, one), Error);
}

TEST_CASE("complex check with exactness at specializations")
{
    const Tl3& t = tl3();
    for (const Rational& v : {Rational(3, 2), Rational(0), Rational(-5, 3)}) {
        ComplexReport c = t.r.check_complex(v);
        CHECK(c.ok());
        CHECK(c.finite_dimensional);
        REQUIRE(c.exactness.size() == 5);
        CHECK(c.exactness[0].dimension == 5);
        CHECK(c.exactness[1].dimension == 10);
        CHECK(c.exactness[2].dimension == 20);
    }
}

TEST_CASE("polynomial ring K[x, y]: Koszul shape")
{
    Alphabet a({"x", "y"});
    Presentation p{a, Field{}, {parse_poly("y*x - x*y", a, Field{})}};
    GroebnerBasis gb = complete(p, 6);
    REQUIRE(gb.complete);
    Resolution r(gb, 2, p.field, 3);
    CHECK(r.chains(1).size() == 1);
    CHECK(r.chains(2).size() == 0);
    CHECK(r.table(1).values[0].to_string(r.chains(0), a) == "y (x) x - x (x) y");
    ComplexReport c = r.check_complex(std::nullopt);
    CHECK(c.ok());
    CHECK_FALSE(c.finite_dimensional);
}

TEST_CASE("K[x]/(x^2 - tau x): one chain per level")
{
    Alphabet a({"x"});
    Presentation p{a, Qt, {parse_poly("x*x - tau*x", a, Qt)}};
    GroebnerBasis gb = complete(p, 6);
    Resolution r(gb, 1, p.field, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(r.chains(n).size() == 1);
    CHECK(r.table(2).values[0].to_string(r.chains(1), a) == "x*x (x) x");
    CHECK(r.table(3).values[0].to_string(r.chains(2), a) == "x*x*x (x) x - tau*x*x*x (x) 1");
    CHECK(r.check_complex(Rational(0)).ok());
    CHECK(r.check_complex(Rational(2)).ok());
}
