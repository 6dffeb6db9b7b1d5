#include "check.hpp"
#include "listings.hpp"
#include "util.hpp"

#include <algorithm>

using namespace plyalg;
using namespace testutil;

namespace {

struct LetterCmp {
    int operator()(char a, char b) const { return (a > b) - (a < b); }
};

std::vector<char> w(const char* s) { return std::vector<char>(s, s + std::char_traits<char>::length(s)); }

const Alphabet& one()
{
    static const Alphabet a = Alphabet::standard(1);
    return a;
}

template <class E>
std::vector<std::string> printed(const std::vector<E>& xs)
{
    std::vector<std::string> out;
    for (const E& x : xs) out.push_back(print(x, one()));
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

static void word_orders()
{
    LetterCmp c;
    REQUIRE(cmp_hall(w("ab"), w("a"), c) > 0);
    REQUIRE(cmp_hall(w("ab"), w("aa"), c) > 0);
    REQUIRE(cmp_hall(w("abc"), w("abc"), c) == 0);

    using B = Block<char>;
    OSBBWord<char> s_x, s_xy, br_xy, br_xz;
    s_x.blocks = {B{{'x'}, std::nullopt}};
    s_xy.blocks = {B{{'y', 'x'}, std::nullopt}};
    br_xy.blocks = {B{{}, std::make_pair('x', 'y')}, B{}};
    br_xz.blocks = {B{{}, std::make_pair('x', 'z')}, B{}};
    REQUIRE(cmp_delta(s_xy, s_x, c) > 0);
    // At equal length a commutator block is not greater than a symmetric one.
    REQUIRE(cmp_delta(s_xy, br_xy, c) > 0);
    // Commutator blocks compare their second entries first.
    REQUIRE(cmp_delta(br_xz, br_xy, c) > 0);
}

static void basis_orders()
{
    const Alphabet& a = one();
    REQUIRE(cmp_shat(shat("bk(a, a)", a), shat("gr(a; a)", a)) < 0);
    REQUIRE(cmp_shat(shat("bk(bk(a, a), a)", a), shat("bk(a, bk(a, a))", a)) > 0);
    REQUIRE(cmp_shat(shat("gr(bk(a, bk(a, a)); a)", a), shat("gr(a; bk(a, bk(a, a)))", a)) > 0);
    REQUIRE(cmp_shat(shat("gr(a; a)", a), shat("gr(a; a)", a)) == 0);

    TElem ca = telem("bk(gr(a; a), a)", a), x = telem("a", a), tr = telem("tb(gr(a; a), a, a)", a);
    REQUIRE(cmp_T(ca, x) > 0);
    REQUIRE(cmp_H(ca, x) > 0);
    REQUIRE(h_foliage(ca).size() == 1);
    REQUIRE(h_foliage(tr).size() == 3);
    REQUIRE(cmp_H(tr, telem("gr(gr(gr(a; a); a); a)", a)) > 0);
    HView hv = h_view(tr);
    REQUIRE(hv.sign == 1);
    REQUIRE(cmp_H(hv.p, hv.q) > 0);
}

static void printed_listings()
{
    for (unsigned n = 1; n <= 5; ++n) {
        auto got = printed(enumerate_S(n, 1));
        // Through four vertices element for element in order; five vertices as a set.
        if (n <= 4)
            REQUIRE_MSG(got == listings::kS[n - 1], "S listing, n = " << n);
        else
            REQUIRE_MSG(sorted(got) == sorted(listings::kS[n - 1]), "S listing, n = " << n);
    }
    for (unsigned n = 1; n <= 4; ++n) REQUIRE_MSG(printed(enumerate_Shat(n, 1)) == listings::kShat[n - 1], "Shat listing, n = " << n);
    for (unsigned n = 1; n <= 5; ++n) {
        auto got = printed(enumerate_B(n, 1));
        if (n <= 4)
            REQUIRE_MSG(got == listings::kB[n - 1], "B listing, n = " << n);
        else
            REQUIRE_MSG(sorted(got) == sorted(listings::kB[n - 1]), "B listing, n = " << n);
    }
    // Every listing is strictly increasing in its own order.
    for (unsigned n = 1; n <= 5; ++n) {
        const auto& s = enumerate_Shat(n, 2);
        for (std::size_t i = 1; i < s.size(); ++i) REQUIRE(cmp_shat(s[i - 1], s[i]) < 0);
        const auto& t = enumerate_T(n, 2);
        for (std::size_t i = 1; i < t.size(); ++i) REQUIRE(cmp_T(t[i - 1], t[i]) < 0);
    }
}

int main()
{
    word_orders();
    basis_orders();
    printed_listings();
    return check::finish("orders");
}
