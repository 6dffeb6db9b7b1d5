#include "check.hpp"
#include "properties.hpp"
#include "util.hpp"

#include "plyalg/checks.hpp"

#include <json.hpp>

#include <sstream>

using namespace plyalg;
using namespace testutil;

static const Alphabet& one()
{
    static const Alphabet a = Alphabet::standard(1);
    return a;
}

static void basis_predicate()
{
    TElem a = TElem::gen(0);
    TElem cherry = telem("gr(a; a)", one());
    REQUIRE(is_B(TElem::brk(cherry, a)));
    REQUIRE(!is_B(TElem::brk(a, cherry)));
    REQUIRE(!is_B(TElem::brk(a, a)));
    REQUIRE(is_B(TElem::triple({}, cherry, a, a)));
    REQUIRE(is_B(telem("sg(gr(a; a), a; a)", one())));
    // A symmetric graft onto a bracket is not a basis element.
    REQUIRE(!is_B(telem("gr(a; bk(gr(a; a), a))", one())));
    const std::size_t dims[] = {1, 1, 3, 9, 31, 106};
    for (unsigned n = 1; n <= 6; ++n) {
        REQUIRE(graded_dim(n, 1) == dims[n - 1]);
        for (TElem x : enumerate_B(n, 1)) REQUIRE(is_B(x));
    }
    // The strict reading of the side conditions loses elements from five
    // vertices on, starting with the listed [[[cherry,a]],a,a].
    for (unsigned n = 1; n <= 4; ++n)
        for (TElem x : enumerate_B(n, 1)) REQUIRE(is_B_strict(x));
    REQUIRE(!is_B_strict(telem("tb(bk(gr(a; a), a), a, a)", one())));
    REQUIRE(is_B(telem("tb(bk(gr(a; a), a), a, a)", one())));
    std::size_t strict6 = 0;
    for (TElem x : enumerate_B(6, 1)) strict6 += is_B_strict(x);
    REQUIRE(strict6 == 100);
    REQUIRE(graded_dim(5, 2) == 1128);
}

static void normal_forms()
{
    REQUIRE_EQ(nf("bk(a, gr(a; a))", one()), std::string("-1 * bk(gr(a; a), a)"));
    REQUIRE_EQ(nf("gr(a; bk(a, a))", one()), std::string("0"));
    REQUIRE_EQ(nf("bk(a, a)", one()), std::string("0"));
    REQUIRE_EQ(nf("tb(a, gr(a; a), a)", one()), std::string("-1 * tb(gr(a; a), a, a)"));
    // Basis elements are fixed with an empty trace.
    for (TElem x : enumerate_B(5, 1)) {
        NormalizeResult r = normalize(LT(x));
        REQUIRE(r.value == LT(x));
        REQUIRE(r.trace && r.trace->steps.empty());
    }
    // Normal forms are idempotent and linear.
    LT x = tval("bk(a, sg(a, a; a)) + 2 * tb(a, gr(a; a), gr(a; a))", one());
    LT y = tval("gr(a; bk(a, gr(a; a))) - 1/3 * bk(gr(a; a), gr(a; a))", one());
    LT nx = normal_form(x), ny = normal_form(y);
    REQUIRE(normal_form(nx) == nx);
    REQUIRE(normal_form(x + Rational(5) * y) == nx + Rational(5) * ny);
    for (const auto& [t, c] : nx) REQUIRE(is_B(t));
}

static void fuel()
{
    LT x = tval("gr(a; bk(a, gr(a; a))) + tb(a, gr(a; a), a)", one());
    NormalizeOptions opt;
    opt.fuel = 1;
    NormalizeResult r = normalize(x, opt);
    // The partial value is the input after the steps that were paid for.
    REQUIRE(!r.complete);
    REQUIRE(r.steps == 1);
    REQUIRE(r.value != x);
    REQUIRE(normal_form(r.value) == normal_form(x));
    opt.fuel = 1000000;
    REQUIRE(normalize(x, opt).complete);
}

static void traces()
{
    Trace empty;
    REQUIRE(check_trace(empty).ok);

    LT x = tval("tb(a, gr(a; a), gr(a; a)) + gr(a; bk(gr(a; a), a))", one());
    NormalizeResult r = normalize(x);
    REQUIRE(r.trace != nullptr);
    REQUIRE(!r.trace->steps.empty());
    TraceCheck ck = check_trace(*r.trace);
    REQUIRE_MSG(ck.ok, ck.error);

    // One tampered step coefficient breaks the replay.
    Trace bad = *r.trace;
    bad.steps[0].coef += 1;
    REQUIRE(!check_trace(bad).ok);
    // A tampered witness coefficient breaks the step equation.
    Trace bad2 = *r.trace;
    for (auto& s : bad2.steps)
        if (!s.witnesses.empty()) {
            s.witnesses[0].coef *= 2;
            break;
        }
    REQUIRE(!check_trace(bad2).ok);
    // A wrong claimed output is caught.
    Trace bad3 = *r.trace;
    bad3.output.add(TElem::gen(0), 1);
    REQUIRE(!check_trace(bad3).ok);

    // JSON lines: one object per step, depth-first, with stable hashes.
    std::string jl = trace_jsonl(*r.trace, one());
    std::istringstream in(jl);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.contains("rule") && j.contains("coef") && j.contains("before") && j.contains("after"));
        REQUIRE(j["before_hash"].get<std::string>().size() == 16);
        ++lines;
    }
    REQUIRE(lines >= r.trace->steps.size());
    REQUIRE(trace_jsonl(*normalize(x).trace, one()) == jl);
    REQUIRE(text_hash("") == 0xcbf29ce484222325ULL);
}

static void relations()
{
    REQUIRE(std::string(rule_name(Rule::PLY4)) == "PLY4");
    REQUIRE(rule_from_name("PLY6") == Rule::PLY6);
    REQUIRE(!rule_from_name("PLY7"));
    REQUIRE(rule_vars(Rule::PLY6).size() == 5);
    SuiteReport r1 = check_ply_suite(5, 0, 1, 1);
    REQUIRE_MSG(r1.ok(), report_json(r1));
    SuiteReport r2 = check_ply_suite(4, 0, 1, 2);
    REQUIRE_MSG(r2.ok(), report_json(r2));
    SuiteReport r3 = check_ply_suite(5, 40, 3, 2);
    REQUIRE_MSG(r3.ok(), report_json(r3));
}

static void lat()
{
    LT x = tval("bk(gr(a; a), a) + tb(gr(a; a), a, a) + sg(gr(a; a), a; a)", one());
    REQUIRE(lat_project(x) == tval("tb(gr(a; a), a, a) + sg(gr(a; a), a; a)", one()));
    for (unsigned n = 1; n <= 5; ++n)
        for (TElem t : enumerate_LAT(n, 1)) REQUIRE(is_B(t) && t.bracket_count() == 0);
    props::Tally t = props::lat_commutes(60, 5, 5, 2);
    REQUIRE_MSG(t.ok(), t.first_failure);
    t = props::strategies_agree(60, 6, 5, 2);
    REQUIRE_MSG(t.ok(), t.first_failure);
}

int main()
{
    basis_predicate();
    normal_forms();
    fuel();
    traces();
    relations();
    lat();
    return check::finish("ply");
}
