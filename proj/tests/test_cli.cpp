#include "check.hpp"
#include "util.hpp"

#include "plyalg/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace plyalg;
using namespace testutil;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

template <class F>
bool throws_parse_error(F f, std::size_t line, std::size_t column)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.line == line && e.column == column;
    }
    return false;
}

} // namespace

static void parsing()
{
    const Alphabet& A = abc();
    REQUIRE(alg("bk(a,a)") == LBhat(Bhat::brk(Bhat::gen(0), Bhat::gen(0))));
    REQUIRE(alg("gr(a; a)") == LBhat(Bhat::graft({Bhat::gen(0)}, Bhat::gen(0))));
    BhatDElem lin = eval(parse("1/2 * w(a,b) + -1/2 * w(b,a)", A));
    BhatDElem want(BhatWord{Bhat::gen(0), Bhat::gen(1)}, Rational(1, 2));
    want.add(BhatWord{Bhat::gen(1), Bhat::gen(0)}, Rational(-1, 2));
    REQUIRE(lin == want);
    REQUIRE(alg(" bk ( a ,\n b ) ") == alg("bk(a,b)"));
    REQUIRE(alg("tri(a, b)") == alg("gr(a; b)"));
    REQUIRE(alg("tb(a, b, c)") == triple_bracket(alg("a"), alg("b"), alg("c")));

    REQUIRE(throws_parse_error([&] { parse("bk(a,", A); }, 1, 6));
    REQUIRE(throws_parse_error([&] { parse("bk(a,\n  zz)", A); }, 2, 3));
    REQUIRE(throws_parse_error([&] { parse("bk(a)", A); }, 1, 1));
    bool threw = false;
    try {
        alg("gr(a; gr(a; a))");
    } catch (const EvalError&) {
        threw = true;
    }
    REQUIRE(threw);
}

static void printing()
{
    const Alphabet& A = abc();
    REQUIRE_EQ(print(LT{}, A), std::string("0"));
    REQUIRE_EQ(print(telem("bk(gr(a; a), a)"), A), std::string("bk(gr(a; a), a)"));
    // parse o print is the identity on the enumerated bases.
    const Alphabet one = Alphabet::standard(1), two = Alphabet::standard(2);
    for (unsigned n = 1; n <= 5; ++n) {
        for (TElem x : enumerate_B(n, 1)) REQUIRE(to_T(alg(print(x, one), one)) == LT(x));
        for (TElem x : enumerate_B(n, 2)) REQUIRE(to_T(alg(print(x, two), two)) == LT(x));
        for (Shat x : enumerate_Shat(n, 1)) REQUIRE(to_shat(alg(print(x, one), one)) == LShat(x));
        for (Bhat x : enumerate_Bhat(n, 1)) REQUIRE(alg(print(x, one), one) == LBhat(x));
    }
    LT combo = tval("bk(gr(a; a), b) - 2/3 * tb(gr(a; b), a, c)");
    REQUIRE(tval(print(combo, A)) == combo);
}

static void commands()
{
    Run r = run({"dims", "--basis", "B", "--max-n", "5", "--gens", "1"});
    REQUIRE(r.code == kExitOk);
    REQUIRE_EQ(r.out, std::string("1 1 3 9 31\n"));
    REQUIRE_EQ(run({"dims", "--basis", "Shat", "--max-n", "4", "--gens", "1"}).out, std::string("1 2 8 40\n"));
    REQUIRE_EQ(run({"dims", "--basis", "S", "--max-n", "5"}).out, std::string("1 1 2 5 14\n"));
    REQUIRE_EQ(run({"normalize", "bk(a, gr(a;a))"}).out, std::string("-1 * bk(gr(a; a), a)\n"));

    r = run({"normalize", "bk(a, gr(a;a))", "--json"});
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["terms"].size() == 1);
    REQUIRE(j["terms"][0]["coeff"] == "-1");
    REQUIRE(j["terms"][0]["expr"] == "bk(gr(a; a), a)");

    r = run({"enum", "--basis", "B", "--n", "3", "--gens", "1"});
    REQUIRE_EQ(r.out, std::string("bk(gr(a; a), a)\ngr(gr(a; a); a)\nsg(a, a; a)\n"));
    r = run({"enum", "--basis", "LAT", "--n", "4", "--json"});
    j = nlohmann::json::parse(r.out);
    REQUIRE(j["count"] == 5);

    REQUIRE_EQ(run({"phi", "gr(gr(a;a), a; a) - gr(a, gr(a;a); a)"}).out, std::string("1 * tb(gr(a; a), a, a)\n"));
    REQUIRE_EQ(run({"phi-inv", "tb(gr(a;a), a, a)"}).out, std::string("1 * tri(w(lb(gr(a; a), a)), a)\n"));
    REQUIRE_EQ(run({"osbb", "w(b, a)"}).out, std::string("1/2 * w(lb(b, a)) + 1 * w(s(b, a))\n"));
    REQUIRE_EQ(run({"ly", "gr(a;a)", "a", "a"}).out,
               std::string("1 * gr(bk(gr(a; a), a); a) + -1 * tb(gr(a; a), a, a)\n"));
    REQUIRE_EQ(run({"ly", "a", "gr(a;a)"}).out, std::string("-1 * bk(gr(a; a), a)\n"));
    // Generators can be named explicitly, in increasing order.
    REQUIRE_EQ(run({"normalize", "bk(x, y)", "--gens", "y,x"}).out, std::string("1 * bk(x, y)\n"));
    REQUIRE_EQ(run({"normalize", "bk(x, y)"}).out, std::string("-1 * bk(y, x)\n"));
}

static void exit_codes()
{
    REQUIRE(run({}).code == kExitUsage);
    REQUIRE(run({"frobnicate"}).code == kExitUsage);
    REQUIRE(run({"--help"}).code == kExitOk);
    Run r = run({"normalize", "bk(a,"});
    REQUIRE(r.code == kExitUsage);
    REQUIRE(r.err.find("1:6") != std::string::npos);
    REQUIRE(run({"normalize", "gr(a; gr(a; a))"}).code == kExitUsage);
    REQUIRE(run({"normalize", "q", "--gens", "a,b"}).code == kExitUsage);
    REQUIRE(run({"enum", "--basis", "X", "--n", "2"}).code == kExitUsage);
    REQUIRE(run({"normalize", "gr(a; bk(a, gr(a; a))) + tb(a, gr(a; a), a)", "--fuel", "1"}).code == kExitFuel);
}

static void check_suites()
{
    Run a = run({"check", "--suite", "ply-axioms", "--max-vertices", "5", "--samples", "30", "--seed", "5"});
    Run b = run({"check", "--suite", "ply-axioms", "--max-vertices", "5", "--samples", "30", "--seed", "5"});
    REQUIRE(a.code == kExitOk);
    REQUIRE(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    REQUIRE(j["suite"] == "ply-axioms");
    REQUIRE(j["failed"] == 0);
    REQUIRE(j["total"] == 180);
    for (const char* s : {"ly-axioms", "lts-hall", "osbb-roundtrip", "census"}) {
        Run r = run({"check", "--suite", s, "--max-vertices", "4"});
        REQUIRE_MSG(r.code == kExitOk, s << ": " << r.out);
    }
}

static void trace_file()
{
    auto path = std::filesystem::temp_directory_path() / "plyc_test_trace.jsonl";
    Run r = run({"normalize", "gr(a; bk(a, gr(a; a))) + tb(a, gr(a; a), a)", "--trace", path.string()});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(path);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.contains("witnesses"));
        ++lines;
    }
    REQUIRE(lines > 0);
    std::filesystem::remove(path);
}

int main()
{
    parsing();
    printing();
    commands();
    exit_codes();
    check_suites();
    trace_file();
    return check::finish("cli");
}
