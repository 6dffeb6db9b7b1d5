#pragma once

#include "plyalg/dalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace plyalg {

// s(x1...xn), optionally followed by a commutator [y,z]. With a commutator
// the block is ordered when y > z and every xi >= z.
template <class L>
struct Block {
    std::vector<L> sym; // sorted descending in the letter order
    std::optional<std::pair<L, L>> brk;

    std::size_t length() const { return sym.size() + (brk ? 2 : 0); }
    bool operator==(const Block& o) const { return sym == o.sym && brk == o.brk; }
};

// Ordered symmetric-bracket-block word: every block but the last carries a
// commutator, the last one is purely symmetric (possibly empty).
template <class L>
struct OSBBWord {
    std::vector<Block<L>> blocks{Block<L>{}};

    std::size_t length() const
    {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.length();
        return n;
    }
    bool empty() const { return length() == 0; }
    bool operator==(const OSBBWord& o) const { return blocks == o.blocks; }
    // All letters, block by block.
    std::vector<L> letters() const
    {
        std::vector<L> out;
        for (const auto& b : blocks) {
            out.insert(out.end(), b.sym.begin(), b.sym.end());
            if (b.brk) { out.push_back(b.brk->first); out.push_back(b.brk->second); }
        }
        return out;
    }
};

template <class L, class H = std::hash<L>>
struct OSBBHash {
    std::size_t operator()(const OSBBWord<L>& w) const
    {
        std::size_t h = 0x0b5b;
        H hh;
        for (const auto& b : w.blocks) {
            h = hash_combine(h, b.sym.size());
            for (const auto& x : b.sym) h = hash_combine(h, hh(x));
            if (b.brk) h = hash_combine(hash_combine(h ^ 0x77, hh(b.brk->first)), hh(b.brk->second));
        }
        return h;
    }
};

template <class L, class H = std::hash<L>>
using OSBBComb = LinComb<OSBBWord<L>, OSBBHash<L, H>>;

template <class L, class Cmp>
bool is_ordered(const OSBBWord<L>& w, Cmp cmp)
{
    if (w.blocks.empty() || w.blocks.back().brk) return false;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        const auto& b = w.blocks[i];
        if (i + 1 < w.blocks.size() && !b.brk) return false;
        for (std::size_t j = 1; j < b.sym.size(); ++j)
            if (cmp(b.sym[j - 1], b.sym[j]) < 0) return false;
        if (b.brk) {
            if (cmp(b.brk->first, b.brk->second) <= 0) return false;
            for (const auto& x : b.sym)
                if (cmp(x, b.brk->second) < 0) return false;
        }
    }
    return true;
}

template <class L, class H = std::hash<L>>
DElem<L, H> osbb_expand(const OSBBWord<L>& w)
{
    DElem<L, H> out = unit_word<L, H>();
    for (const auto& b : w.blocks) {
        if (!b.sym.empty()) out = tensor_mul(out, symmetrize<L, H>(b.sym));
        if (b.brk) {
            DElem<L, H> c(Word<L>{b.brk->first, b.brk->second});
            c.add(Word<L>{b.brk->second, b.brk->first}, Rational(-1));
            out = tensor_mul(out, c);
        }
    }
    return out;
}

template <class L, class H = std::hash<L>>
DElem<L, H> osbb_expand(const OSBBComb<L, H>& x)
{
    DElem<L, H> out;
    for (const auto& [w, c] : x) out.add(osbb_expand<L, H>(w), c);
    return out;
}

// All OSBB words whose letters form the given multiset.
template <class L, class Cmp>
std::vector<OSBBWord<L>> enumerate_osbb(std::vector<L> letters, Cmp cmp)
{
    std::sort(letters.begin(), letters.end(), [&](const L& a, const L& b) { return cmp(a, b) > 0; });
    std::vector<L> distinct;
    std::vector<unsigned> count;
    for (const auto& x : letters) {
        if (distinct.empty() || !(distinct.back() == x)) { distinct.push_back(x); count.push_back(0); }
        ++count.back();
    }
    const std::size_t d = distinct.size();
    std::vector<OSBBWord<L>> out;
    std::vector<Block<L>> prefix;

    auto sym_of = [&](const std::vector<unsigned>& cnt) {
        std::vector<L> s;
        for (std::size_t i = 0; i < d; ++i)
            for (unsigned k = 0; k < cnt[i]; ++k) s.push_back(distinct[i]);
        return s;
    };

    std::function<void(std::vector<unsigned>&)> rec = [&](std::vector<unsigned>& cnt) {
        // Close with a symmetric block holding everything left.
        OSBBWord<L> w;
        w.blocks = prefix;
        w.blocks.push_back(Block<L>{sym_of(cnt), std::nullopt});
        out.push_back(std::move(w));
        // Or open another commutator block. distinct[] is descending, so
        // y > z means index(y) < index(z).
        for (std::size_t zi = 0; zi < d; ++zi) {
            if (!cnt[zi]) continue;
            --cnt[zi];
            for (std::size_t yi = 0; yi < zi; ++yi) {
                if (!cnt[yi]) continue;
                --cnt[yi];
                // Symmetric part: any sub-multiset of letters >= z.
                std::vector<unsigned> take(d, 0);
                std::function<void(std::size_t)> pick = [&](std::size_t i) {
                    if (i > zi) {
                        Block<L> b{sym_of(take), std::make_pair(distinct[yi], distinct[zi])};
                        for (std::size_t k = 0; k <= zi; ++k) cnt[k] -= take[k];
                        prefix.push_back(std::move(b));
                        rec(cnt);
                        prefix.pop_back();
                        for (std::size_t k = 0; k <= zi; ++k) cnt[k] += take[k];
                        return;
                    }
                    for (unsigned t = 0; t <= cnt[i]; ++t) {
                        take[i] = t;
                        pick(i + 1);
                    }
                    take[i] = 0;
                };
                pick(0);
                ++cnt[yi];
            }
            ++cnt[zi];
        }
    };
    rec(count);
    return out;
}

// Unique expansion of a plain word in OSBB words. Solved per letter multiset
// by exact Gauss-Jordan elimination on the (square) matrix expressing the OSBB
// words of that multiset in the rearrangements of the multiset; the inverse
// is cached per multiset.
template <class L, class Cmp, class H = std::hash<L>>
class OsbbDecomposer {
public:
    const OSBBComb<L, H>& decompose(const Word<L>& w)
    {
        Word<L> key = w;
        std::sort(key.begin(), key.end(), [](const L& a, const L& b) { return cmp_(a, b) > 0; });
        const Component& comp = component(key);
        auto it = comp.inverse.find(w);
        if (it == comp.inverse.end()) throw std::logic_error("osbb: word not found in its component");
        return it->second;
    }

    OSBBComb<L, H> decompose(const DElem<L, H>& x)
    {
        OSBBComb<L, H> out;
        for (const auto& [w, c] : x) out.add(decompose(w), c);
        return out;
    }

    // Number of OSBB words and of rearrangements for the multiset of w.
    std::pair<std::size_t, std::size_t> component_shape(const Word<L>& w)
    {
        Word<L> key = w;
        std::sort(key.begin(), key.end(), [](const L& a, const L& b) { return cmp_(a, b) > 0; });
        const Component& comp = component(key);
        return {comp.osbb_count, comp.inverse.size()};
    }

private:
    struct Component {
        std::size_t osbb_count = 0;
        std::unordered_map<Word<L>, OSBBComb<L, H>, SeqHash<L, H>> inverse;
    };

    static inline Cmp cmp_{};

    const Component& component(const Word<L>& key)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return *it->second;
        }
        auto comp = std::make_unique<Component>(build(key));
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = cache_.try_emplace(key, std::move(comp));
        return *it->second;
    }

    static Component build(const Word<L>& key)
    {
        std::vector<OSBBWord<L>> words = enumerate_osbb(key, cmp_);
        // Rearrangements, indexed in the order they appear.
        std::unordered_map<Word<L>, std::size_t, SeqHash<L, H>> index;
        std::vector<Word<L>> arr;
        std::vector<DElem<L, H>> cols;
        for (const auto& w : words) {
            cols.push_back(osbb_expand<L, H>(w));
            for (const auto& [u, c] : cols.back())
                if (index.try_emplace(u, arr.size()).second) arr.push_back(u);
        }
        const std::size_t m = words.size();
        if (arr.size() != m)
            throw std::logic_error("osbb: component is not square (" + std::to_string(m) + " words, " +
                                   std::to_string(arr.size()) + " rearrangements)");
        // Augmented matrix [E | I], E[i][j] = coefficient of arr[i] in word j.
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(2 * m, Rational(0)));
        for (std::size_t j = 0; j < m; ++j)
            for (const auto& [u, c] : cols[j]) a[index.at(u)][j] = c;
        for (std::size_t i = 0; i < m; ++i) a[i][m + i] = 1;
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t piv = col;
            while (piv < m && a[piv][col] == 0) ++piv;
            if (piv == m) throw std::logic_error("osbb: singular component");
            std::swap(a[piv], a[col]);
            Rational inv = 1 / a[col][col];
            for (std::size_t k = 0; k < 2 * m; ++k)
                if (a[col][k] != 0) a[col][k] *= inv;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == col || a[r][col] == 0) continue;
                Rational f = a[r][col];
                for (std::size_t k = col; k < 2 * m; ++k)
                    if (a[col][k] != 0) a[r][k] -= f * a[col][k];
            }
        }
        // Now a[:, m:] = E^{-1}; arrangement i decomposes as sum_j Einv[j][i] word_j.
        Component comp;
        comp.osbb_count = m;
        for (std::size_t i = 0; i < m; ++i) {
            OSBBComb<L, H> d;
            for (std::size_t j = 0; j < m; ++j) d.add(words[j], a[j][m + i]);
            comp.inverse.emplace(arr[i], std::move(d));
        }
        return comp;
    }

    std::mutex mutex_;
    std::unordered_map<Word<L>, std::unique_ptr<Component>, SeqHash<L, H>> cache_;
};

} // namespace plyalg
