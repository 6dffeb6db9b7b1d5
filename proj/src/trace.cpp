#include "plyalg/ply.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <unordered_set>

namespace plyalg {

namespace {

LBhat witness_value(const Witness& w)
{
    return eval_algebra(substitute(w.context, relation(w.rule, w.args)));
}

struct Checker {
    std::unordered_set<const Trace*> done;

    TraceCheck fail(std::size_t depth, std::size_t index, const std::string& what)
    {
        return {false, "depth " + std::to_string(depth) + ", step " + std::to_string(index) + ": " + what};
    }

    TraceCheck check(const Trace& t, std::size_t depth)
    {
        if (!done.insert(&t).second) return {};
        LT state = t.input;
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            const TraceStep& s = t.steps[i];
            if (state.coeff(s.before) != s.coef) return fail(depth, i, "coefficient of the rewritten term differs");
            state.add(s.before, -s.coef);
            state.add(s.after, s.coef);

            LBhat diff = eval_T(s.before);
            diff -= eval_T(s.after);
            LBhat justified;
            try {
                if (s.sub) {
                    if (!s.context || !has_hole(s.context)) return fail(depth, i, "inner step without a context");
                    ExprP delta = ex::sum({{Rational(1), ex::of(s.sub->input)}, {Rational(-1), ex::of(s.sub->output)}});
                    justified = eval_algebra(substitute(s.context, delta));
                    TraceCheck sub = check(*s.sub, depth + 1);
                    if (!sub.ok) return sub;
                } else {
                    for (const Witness& w : s.witnesses) justified.add(witness_value(w), w.coef);
                }
            } catch (const std::exception& e) {
                return fail(depth, i, std::string("cannot evaluate witness: ") + e.what());
            }
            if (diff != justified) return fail(depth, i, "step '" + s.label + "' is not justified by its witnesses");
        }
        if (state != t.output) return fail(depth, t.steps.size(), "replay does not reach the recorded output");
        return {};
    }
};

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit(const Trace& t, const Alphabet& a, std::size_t depth, std::ostringstream& out)
{
    using nlohmann::json;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& s = t.steps[i];
        const std::string before = print(s.before, a), after = print(s.after, a);
        json j;
        j["depth"] = depth;
        j["step"] = i;
        j["rule"] = s.label;
        j["coef"] = to_string(s.coef);
        j["before"] = before;
        j["after"] = after;
        j["before_hash"] = hex64(text_hash(before));
        j["after_hash"] = hex64(text_hash(after));
        if (s.context) j["context"] = print(s.context, a);
        json ws = json::array();
        for (const Witness& w : s.witnesses) {
            json jw;
            jw["rule"] = rule_name(w.rule);
            jw["coef"] = to_string(w.coef);
            jw["context"] = print(w.context, a);
            json b = json::object();
            const auto& vars = rule_vars(w.rule);
            for (std::size_t k = 0; k < vars.size(); ++k) b[vars[k]] = print(w.args[k], a);
            jw["bindings"] = b;
            ws.push_back(jw);
        }
        j["witnesses"] = ws;
        out << j.dump() << '\n';
        if (s.sub) emit(*s.sub, a, depth + 1, out);
    }
}

} // namespace

TraceCheck check_trace(const Trace& t)
{
    Checker c;
    return c.check(t, 0);
}

std::string trace_jsonl(const Trace& t, const Alphabet& alphabet)
{
    std::ostringstream out;
    emit(t, alphabet, 0, out);
    return out.str();
}

std::uint64_t text_hash(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace plyalg
