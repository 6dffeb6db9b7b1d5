#pragma once

#include <mutex>
#include <unordered_map>

namespace plyalg::detail {

// Process-wide memo table. Values are computed outside the lock (the
// computation may recurse into the same table); a racing duplicate insert
// keeps the first value, which is equal by construction.
template <class K, class V, class Hash = std::hash<K>>
class Memo {
public:
    template <class F>
    const V& get(const K& key, F&& compute)
    {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        V value = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

    const V* find(const K& key)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

private:
    std::mutex mutex_;
    std::unordered_map<K, V, Hash> map_;
};

} // namespace plyalg::detail
