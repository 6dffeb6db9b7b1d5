#include "check.hpp"
#include "util.hpp"

#include <stdexcept>

using namespace plyalg;
using namespace testutil;

static void rationals()
{
    REQUIRE_EQ(to_string(Rational(2, 3) + Rational(1, 3)), std::string("1"));
    REQUIRE_EQ(to_string(parse_rational("-6/4")), std::string("-3/2"));
    REQUIRE(parse_rational("-3/2") == Rational(-3, 2));
    REQUIRE(parse_rational("7") == Rational(7));
    bool threw = false;
    try {
        parse_rational("1/0");
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    REQUIRE(threw);
    REQUIRE(factorial(0) == 1);
    REQUIRE(factorial(6) == 720);
}

static void linear_combinations()
{
    Bhat a = Bhat::gen(0);
    LBhat x;
    x.add(a, Rational(2, 3));
    x.add(a, Rational(1, 3));
    REQUIRE(x == LBhat(a));
    LBhat y = x - x;
    REQUIRE(y.empty());
    REQUIRE((Rational(0) * x).empty());
    x.add(a, -1);
    REQUIRE(x.size() == 0);
}

static void alphabets()
{
    Alphabet s = Alphabet::standard(28);
    REQUIRE_EQ(s.name(0), std::string("a"));
    REQUIRE_EQ(s.name(25), std::string("z"));
    REQUIRE_EQ(s.name(26), std::string("g26"));
    REQUIRE(s.find("c") == 2);
    REQUIRE(s.find("nope") == -1);
    bool threw = false;
    try {
        Alphabet({"x", "x"});
    } catch (const std::exception&) {
        threw = true;
    }
    REQUIRE(threw);
}

static void natural_basis()
{
    Bhat a = Bhat::gen(0);
    Bhat chain2 = Bhat::graft({a}, a);
    Bhat ab = Bhat::brk(a, a);
    Bhat t = Bhat::graft({a}, ab);
    REQUIRE(a.vertex_count() == 1);
    REQUIRE(chain2.vertex_count() == 2);
    REQUIRE(t.vertex_count() == 3);
    REQUIRE(a.bracket_count() == 0);
    REQUIRE(ab.bracket_count() == 1);
    REQUIRE(t.bracket_count() == 1);
    // Interning: structurally equal values are the same handle.
    REQUIRE(Bhat::graft({a}, a) == chain2);
    REQUIRE(Bhat::graft({}, a) == a);
    REQUIRE(cmp_struct(ab, chain2) < 0);
    bool threw = false;
    try {
        Bhat::graft({a}, chain2);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    REQUIRE(threw);
}

static void counting()
{
    const char* cat1[] = {"1", "1", "2", "5", "14", "42"};
    const char* beta1[] = {"1", "2", "8", "40", "224", "1344"};
    for (unsigned n = 1; n <= 6; ++n) {
        REQUIRE_EQ(catalan_count(n, 1).get_str(), std::string(cat1[n - 1]));
        REQUIRE_EQ(beta(n, 1).get_str(), std::string(beta1[n - 1]));
    }
    REQUIRE_EQ(beta(4, 2).get_str(), std::string("640"));
}

int main()
{
    rationals();
    linear_combinations();
    alphabets();
    natural_basis();
    counting();
    return check::finish("core");
}
