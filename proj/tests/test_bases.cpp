#include "check.hpp"
#include "properties.hpp"
#include "util.hpp"

#include "plyalg/checks.hpp"

using namespace plyalg;
using namespace testutil;

static const Alphabet& one()
{
    static const Alphabet a = Alphabet::standard(1);
    return a;
}

static void census()
{
    const std::size_t S1[] = {1, 1, 2, 5, 14};
    const std::size_t beta1[] = {1, 2, 8, 40, 224};
    const std::size_t beta2[] = {2, 8, 64, 640};
    for (unsigned n = 1; n <= 5; ++n) {
        REQUIRE(enumerate_S(n, 1).size() == S1[n - 1]);
        REQUIRE(enumerate_Bhat(n, 1).size() == beta1[n - 1]);
        REQUIRE(enumerate_Shat(n, 1).size() == beta1[n - 1]);
        REQUIRE(enumerate_T(n, 1).size() == beta1[n - 1]);
    }
    for (unsigned n = 1; n <= 4; ++n) {
        REQUIRE(enumerate_Bhat(n, 2).size() == beta2[n - 1]);
        REQUIRE(enumerate_Shat(n, 2).size() == beta2[n - 1]);
        REQUIRE(enumerate_T(n, 2).size() == beta2[n - 1]);
    }
    SuiteReport r = check_census_suite(5, 2);
    REQUIRE_MSG(r.ok(), report_json(r));
}

static void conversions()
{
    // Two branches x > y on a generator: s(x y) |> c + 1/2 [x,y] |> c.
    LShat got = sval("gr(gr(a; a), a; a)", one());
    LShat want(shat("sg(gr(a; a), a; a)", one()));
    want.add(shat("tri(w(lb(gr(a; a), a)), a)", one()), Rational(1, 2));
    REQUIRE(got == want);
    // Expanding the symmetric graft: 1/2 of each planar order.
    REQUIRE(from_shat(shat("sg(gr(a; a), a; a)", one())) ==
            Rational(1, 2) * (alg("gr(gr(a; a), a; a)", one()) + alg("gr(a, gr(a; a); a)", one())));
    for (unsigned n = 1; n <= 5; ++n)
        for (Bhat x : enumerate_Bhat(n, 1)) REQUIRE(from_shat(to_shat(x)) == LBhat(x));
    for (unsigned n = 1; n <= 4; ++n)
        for (Bhat x : enumerate_Bhat(n, 2)) {
            REQUIRE(from_shat(to_shat(x)) == LBhat(x));
            REQUIRE(eval_T(to_T(LBhat(x))) == LBhat(x));
        }
    // Graded invariants are preserved by every conversion.
    for (Bhat x : enumerate_Bhat(5, 1)) {
        for (const auto& [s, c] : to_shat(x)) {
            REQUIRE(s.vertex_count() == x.vertex_count());
            REQUIRE(s.bracket_count() == x.bracket_count());
        }
        for (const auto& [t, c] : to_T(LBhat(x))) {
            REQUIRE(t.vertex_count() == x.vertex_count());
            REQUIRE(t.bracket_count() == x.bracket_count());
        }
    }
}

static void automorphism()
{
    REQUIRE(phi(Shat::gen(0)) == TElem::gen(0));
    TElem tri3 = telem("tb(gr(a; a), a, a)", one());
    REQUIRE(tri3.is_bare_triple());
    REQUIRE(phi(shat("tri(w(lb(gr(a; a), a)), a)", one())) == tri3);
    REQUIRE(phi(shat("sg(gr(a; a), a; a)", one())) == telem("sg(gr(a; a), a; a)", one()));
    // cherry.a - a.cherry acting on a, decomposed then mapped.
    REQUIRE(phi_on_A(alg("gr(gr(a; a), a; a) - gr(a, gr(a; a); a)", one())) == LT(tri3));

    props::Tally t = props::phi_properties(5, 1);
    REQUIRE_MSG(t.ok(), t.first_failure);
    t = props::phi_properties(4, 2);
    REQUIRE_MSG(t.ok(), t.first_failure);
}

static void lemmas()
{
    props::Tally t = props::lemma_S(200, 11, 6, 2);
    REQUIRE_MSG(t.ok(), t.first_failure);
    t = props::corollary_S(200, 12, 6, 2);
    REQUIRE_MSG(t.ok(), t.first_failure);
    t = props::lemma_TB_largest_term(200, 13, 6, 2);
    REQUIRE_MSG(t.ok(), t.first_failure);
}

int main()
{
    census();
    conversions();
    automorphism();
    lemmas();
    return check::finish("bases");
}
