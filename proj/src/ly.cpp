#include "plyalg/ly.hpp"

#include "sampling.hpp"

#include <functional>
#include <stdexcept>

namespace plyalg {

LT ly_binary(const LT& x, const LT& y) { return normal_form(brk_T(x, y)); }

LT ly_triple(const LT& x, const LT& y, const LT& z)
{
    LBhat ex = eval_T(x), ey = eval_T(y), ez = eval_T(z);
    LBhat v = tri(brk(ex, ey), ez);
    v -= triple_bracket(ex, ey, ez);
    return normal_form(to_T(v));
}

unsigned ly_arity(int axiom)
{
    static const unsigned arity[] = {0, 1, 2, 3, 4, 4, 5};
    if (axiom < 1 || axiom > 6) throw std::invalid_argument("unknown axiom");
    return arity[axiom];
}

LT ly_residual(int axiom, const std::vector<TElem>& args)
{
    if (args.size() != ly_arity(axiom)) throw std::invalid_argument("wrong number of arguments");
    std::vector<LT> a;
    for (TElem t : args) a.emplace_back(t);
    auto bin = [](const LT& p, const LT& q) { return ly_binary(p, q); };
    auto tri3 = [](const LT& p, const LT& q, const LT& r) { return ly_triple(p, q, r); };
    switch (axiom) {
    case 1: return bin(a[0], a[0]);
    case 2: return tri3(a[0], a[0], a[1]);
    case 3: {
        LT r;
        for (int i = 0; i < 3; ++i) {
            const LT &x = a[i], &y = a[(i + 1) % 3], &z = a[(i + 2) % 3];
            r += tri3(x, y, z);
            r += bin(bin(x, y), z);
        }
        return r;
    }
    case 4: {
        LT r;
        for (int i = 0; i < 3; ++i) r += tri3(bin(a[i], a[(i + 1) % 3]), a[(i + 2) % 3], a[3]);
        return r;
    }
    case 5: {
        const LT &x = a[0], &y = a[1], &z = a[2], &w = a[3];
        LT r = tri3(x, y, bin(z, w));
        r -= bin(tri3(x, y, z), w);
        r -= bin(z, tri3(x, y, w));
        return r;
    }
    case 6: {
        const LT &x = a[0], &y = a[1], &u = a[2], &v = a[3], &w = a[4];
        LT r = tri3(x, y, tri3(u, v, w));
        r -= tri3(tri3(x, y, u), v, w);
        r -= tri3(u, tri3(x, y, v), w);
        r -= tri3(u, v, tri3(x, y, w));
        return r;
    }
    }
    return {};
}

using Pool = std::function<const std::vector<TElem>&(unsigned)>;
using detail::for_each_tuple;

std::vector<LYReport> check_ly_axioms(unsigned max_vertices, unsigned samples, std::uint64_t seed,
                                      unsigned alphabet_size)
{
    std::vector<LYReport> out;
    Pool pool = [&](unsigned n) -> const std::vector<TElem>& { return enumerate_B(n, alphabet_size); };
    for (int ax = 1; ax <= 6; ++ax)
        for_each_tuple<TElem>(ly_arity(ax), max_vertices, samples, seed + ax, pool, [&](const std::vector<TElem>& args) {
            LYReport r{"LY" + std::to_string(ax), args, ly_residual(ax, args), false};
            r.pass = r.residual.empty();
            out.push_back(std::move(r));
        });
    return out;
}

std::vector<LYReport> check_lat_degeneration(unsigned max_vertices, unsigned samples, std::uint64_t seed,
                                             unsigned alphabet_size)
{
    std::vector<LYReport> out;
    Pool pool = [&](unsigned n) -> const std::vector<TElem>& { return enumerate_LAT(n, alphabet_size); };
    for_each_tuple<TElem>(2, max_vertices, samples, seed, pool, [&](const std::vector<TElem>& a) {
        LYReport r{"LAT-binary", a, lat_project(ly_binary(LT(a[0]), LT(a[1]))), false};
        r.pass = r.residual.empty();
        out.push_back(std::move(r));
    });
    for_each_tuple<TElem>(3, max_vertices, samples, seed + 1, pool, [&](const std::vector<TElem>& a) {
        LT lhs = lat_project(ly_triple(LT(a[0]), LT(a[1]), LT(a[2])));
        LT rhs = -lat_project(normal_form(triple_T(a[0], a[1], a[2])));
        LYReport r{"LAT-triple", a, lhs - rhs, false};
        r.pass = r.residual.empty();
        out.push_back(std::move(r));
    });
    return out;
}

} // namespace plyalg
