#include "plyalg/cli.hpp"

#include "plyalg/checks.hpp"
#include "plyalg/ly.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace plyalg {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "--gens 3" means a, b, c; "--gens x,y" lists names in increasing order;
// without the flag the identifiers of the inputs are used, sorted.
Alphabet make_alphabet(const std::string& gens, const std::vector<std::string>& texts)
{
    if (!gens.empty()) {
        if (std::all_of(gens.begin(), gens.end(), [](unsigned char c) { return std::isdigit(c); }))
            return Alphabet::standard(static_cast<unsigned>(std::stoul(gens)));
        std::vector<std::string> names;
        std::stringstream ss(gens);
        for (std::string n; std::getline(ss, n, ',');) {
            n.erase(0, n.find_first_not_of(" \t"));
            n.erase(n.find_last_not_of(" \t") + 1);
            if (n.empty()) throw UsageError("empty generator name in --gens");
            names.push_back(n);
        }
        return Alphabet(std::move(names));
    }
    std::vector<std::string> names;
    for (const auto& t : texts)
        for (auto& n : identifiers(t)) names.push_back(std::move(n));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    if (names.empty()) names.push_back("a");
    return Alphabet(std::move(names));
}

unsigned gens_count(const std::string& gens, unsigned fallback)
{
    if (gens.empty()) return fallback;
    if (!std::all_of(gens.begin(), gens.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw UsageError("--gens must be a number here");
    return static_cast<unsigned>(std::stoul(gens));
}

template <class K, class Printer>
std::string terms_json(const std::vector<std::pair<K, Rational>>& terms, Printer pr)
{
    json arr = json::array();
    for (const auto& [k, c] : terms) arr.push_back({{"coeff", to_string(c)}, {"expr", pr(k)}});
    return json{{"terms", arr}}.dump();
}

std::string lt_json(const LT& x, const Alphabet& a)
{
    return terms_json(x.sorted(TLess{}), [&](TElem t) { return print(t, a); });
}

std::string lshat_json(const LShat& x, const Alphabet& a)
{
    return terms_json(x.sorted(ShatLess{}), [&](Shat t) { return print(t, a); });
}

std::string osbb_json(const OSBBComb<Shat>& x, const Alphabet& a)
{
    auto less = [](const OSBBWord<Shat>& p, const OSBBWord<Shat>& q) { return cmp_delta(p, q, ShatCmp{}) < 0; };
    return terms_json(x.sorted(less), [&](const OSBBWord<Shat>& w) { return print(w, a); });
}

LBhat algebra_value(const std::string& text, const Alphabet& a) { return eval_algebra(parse(text, a)); }

template <class E, class Printer>
void list_elements(const std::vector<E>& xs, bool as_json, const std::string& basis, unsigned n, Printer pr,
                   std::ostream& out)
{
    if (as_json) {
        json arr = json::array();
        for (const E& x : xs) arr.push_back(pr(x));
        out << json{{"basis", basis}, {"n", n}, {"count", xs.size()}, {"elements", arr}}.dump() << '\n';
        return;
    }
    for (const E& x : xs) out << pr(x) << '\n';
}

std::size_t basis_size(const std::string& basis, unsigned n, unsigned k)
{
    if (basis == "S") return enumerate_S(n, k).size();
    if (basis == "Bhat") return enumerate_Bhat(n, k).size();
    if (basis == "Shat") return enumerate_Shat(n, k).size();
    if (basis == "T") return enumerate_T(n, k).size();
    if (basis == "B") return enumerate_B(n, k).size();
    if (basis == "LAT") return enumerate_LAT(n, k).size();
    throw UsageError("unknown basis " + basis);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact normal forms in the free post-Lie-Yamaguti algebra", "plyc"};
    app.require_subcommand(1);
    const std::vector<std::string> bases{"S", "Bhat", "Shat", "T", "B", "LAT"};

    std::string expr, gens, trace_file;
    std::size_t fuel = 1000000;
    bool as_json = false;
    auto* cmd_norm = app.add_subcommand("normalize", "Normal form of an expression in the basis B");
    cmd_norm->add_option("expr", expr, "Expression")->required();
    cmd_norm->add_option("--gens", gens, "Generator names (a,b,...) or their number");
    cmd_norm->add_option("--fuel", fuel, "Maximum number of rewriting steps");
    cmd_norm->add_option("--trace", trace_file, "Write the rewrite trace (JSON lines) to this file");
    cmd_norm->add_flag("--json", as_json, "JSON output");

    std::string basis;
    unsigned n = 1, max_n = 1;
    auto* cmd_enum = app.add_subcommand("enum", "List a basis in one degree");
    cmd_enum->add_option("--basis", basis)->required()->check(CLI::IsMember(bases));
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_option("--gens", gens);
    cmd_enum->add_flag("--json", as_json);

    auto* cmd_dims = app.add_subcommand("dims", "Graded dimensions of a basis");
    cmd_dims->add_option("--basis", basis)->required()->check(CLI::IsMember(bases));
    cmd_dims->add_option("--max-n", max_n)->required();
    cmd_dims->add_option("--gens", gens);

    auto* cmd_osbb = app.add_subcommand("osbb", "Decompose a word into ordered symmetric-bracket-block words");
    cmd_osbb->add_option("expr", expr)->required();
    cmd_osbb->add_option("--gens", gens);
    cmd_osbb->add_flag("--json", as_json);

    auto* cmd_phi = app.add_subcommand("phi", "Image under the automorphism, in the triple-bracket basis");
    cmd_phi->add_option("expr", expr)->required();
    cmd_phi->add_option("--gens", gens);
    cmd_phi->add_flag("--json", as_json);

    auto* cmd_phi_inv = app.add_subcommand("phi-inv", "Preimage under the automorphism, in the refined basis");
    cmd_phi_inv->add_option("expr", expr)->required();
    cmd_phi_inv->add_option("--gens", gens);
    cmd_phi_inv->add_flag("--json", as_json);

    std::vector<std::string> ly_args;
    auto* cmd_ly = app.add_subcommand("ly", "Lie-Yamaguti operations: x o y (two arguments) or {x,y,z}");
    cmd_ly->add_option("args", ly_args)->required()->expected(2, 3);
    cmd_ly->add_option("--gens", gens);
    cmd_ly->add_flag("--json", as_json);

    std::string suite;
    unsigned max_vertices = 5, samples = 0;
    std::uint64_t seed = 1;
    auto* cmd_check = app.add_subcommand("check", "Run a verification suite");
    cmd_check->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"ply-axioms", "ly-axioms", "lts-hall", "osbb-roundtrip", "census"}));
    cmd_check->add_option("--max-vertices", max_vertices, "Size bound (vertices, leaves, or word length)");
    cmd_check->add_option("--samples", samples, "Seeded samples per identity; 0 = exhaustive");
    cmd_check->add_option("--seed", seed);
    cmd_check->add_option("--gens", gens, "Number of generators (letters)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*cmd_norm) {
            Alphabet a = make_alphabet(gens, {expr});
            NormalizeOptions opt;
            opt.fuel = fuel;
            opt.record_trace = !trace_file.empty();
            NormalizeResult r = normalize(to_T(algebra_value(expr, a)), opt);
            if (!r.complete) {
                err << "error: fuel exhausted after " << r.steps << " steps\n";
                return kExitFuel;
            }
            if (r.trace) {
                std::ofstream f(trace_file);
                if (!f) throw UsageError("cannot write " + trace_file);
                f << trace_jsonl(*r.trace, a);
            }
            out << (as_json ? lt_json(r.value, a) : print(r.value, a)) << '\n';
            return kExitOk;
        }
        if (*cmd_enum) {
            unsigned k = gens_count(gens, 1);
            Alphabet a = Alphabet::standard(k);
            auto pt = [&](auto x) { return print(x, a); };
            if (basis == "S") list_elements(enumerate_S(n, k), as_json, basis, n, pt, out);
            else if (basis == "Bhat") list_elements(enumerate_Bhat(n, k), as_json, basis, n, pt, out);
            else if (basis == "Shat") list_elements(enumerate_Shat(n, k), as_json, basis, n, pt, out);
            else if (basis == "T") list_elements(enumerate_T(n, k), as_json, basis, n, pt, out);
            else if (basis == "B") list_elements(enumerate_B(n, k), as_json, basis, n, pt, out);
            else list_elements(enumerate_LAT(n, k), as_json, basis, n, pt, out);
            return kExitOk;
        }
        if (*cmd_dims) {
            unsigned k = gens_count(gens, 1);
            for (unsigned i = 1; i <= max_n; ++i) out << (i > 1 ? " " : "") << basis_size(basis, i, k);
            out << '\n';
            return kExitOk;
        }
        if (*cmd_osbb) {
            Alphabet a = make_alphabet(gens, {expr});
            static OsbbDecomposer<Shat, ShatCmp> dec;
            OSBBComb<Shat> result;
            for (const auto& [word, c] : eval(parse(expr, a))) {
                std::vector<LShat> letters;
                for (Bhat b : word) letters.push_back(to_shat(b));
                result.add(dec.decompose(expand_letters<Shat>(letters)), c);
            }
            out << (as_json ? osbb_json(result, a) : print(result, a)) << '\n';
            return kExitOk;
        }
        if (*cmd_phi) {
            Alphabet a = make_alphabet(gens, {expr});
            LT r = phi_on_A(algebra_value(expr, a));
            out << (as_json ? lt_json(r, a) : print(r, a)) << '\n';
            return kExitOk;
        }
        if (*cmd_phi_inv) {
            Alphabet a = make_alphabet(gens, {expr});
            LShat r = phi_inv_on_A(algebra_value(expr, a));
            out << (as_json ? lshat_json(r, a) : print(r, a)) << '\n';
            return kExitOk;
        }
        if (*cmd_ly) {
            Alphabet a = make_alphabet(gens, ly_args);
            std::vector<LT> xs;
            for (const auto& t : ly_args) xs.push_back(to_T(algebra_value(t, a)));
            LT r = xs.size() == 2 ? ly_binary(xs[0], xs[1]) : ly_triple(xs[0], xs[1], xs[2]);
            out << (as_json ? lt_json(r, a) : print(r, a)) << '\n';
            return kExitOk;
        }
        if (*cmd_check) {
            SuiteReport rep;
            if (suite == "ply-axioms") rep = check_ply_suite(max_vertices, samples, seed, gens_count(gens, 1));
            else if (suite == "ly-axioms") rep = check_ly_suite(max_vertices, samples, seed, gens_count(gens, 1));
            else if (suite == "lts-hall") rep = check_lts_hall_suite(max_vertices, samples, seed, gens_count(gens, 3));
            else if (suite == "osbb-roundtrip") rep = check_osbb_suite(max_vertices, gens_count(gens, 3));
            else rep = check_census_suite(max_vertices, gens_count(gens, 1));
            out << report_json(rep) << '\n';
            return rep.ok() ? kExitOk : kExitCheckFailed;
        }
    } catch (const FuelExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kExitFuel;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EvalError& e) {
        err << "elaboration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace plyalg
