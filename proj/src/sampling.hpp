#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace plyalg::detail {

// Tuples of m elements drawn from graded pools (pool(s) holds the elements of
// size s) with total size <= max_size: all of them when samples == 0,
// otherwise `samples` seeded random draws (total size uniform, then a random
// composition, then uniform elements).
template <class E>
void for_each_tuple(unsigned m, unsigned max_size, unsigned samples, std::uint64_t seed,
                    const std::function<const std::vector<E>&(unsigned)>& pool,
                    const std::function<void(const std::vector<E>&)>& f)
{
    if (m == 0 || m > max_size) return;
    if (samples == 0) {
        std::vector<E> cur;
        std::function<void(unsigned)> rec = [&](unsigned left) {
            if (cur.size() == m) {
                f(cur);
                return;
            }
            unsigned rest = m - static_cast<unsigned>(cur.size()) - 1;
            for (unsigned s = 1; s + rest <= left; ++s)
                for (const E& t : pool(s)) {
                    cur.push_back(t);
                    rec(left - s);
                    cur.pop_back();
                }
        };
        rec(max_size);
        return;
    }
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < samples; ++i) {
        std::uniform_int_distribution<unsigned> total(m, max_size);
        unsigned n = total(rng);
        std::vector<unsigned> sizes(m, 1);
        std::uniform_int_distribution<unsigned> slot(0, m - 1);
        for (unsigned j = m; j < n; ++j) ++sizes[slot(rng)];
        std::vector<E> tuple;
        bool ok = true;
        for (unsigned s : sizes) {
            const auto& p = pool(s);
            if (p.empty()) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
            tuple.push_back(p[pick(rng)]);
        }
        if (ok) f(tuple);
    }
}

} // namespace plyalg::detail
