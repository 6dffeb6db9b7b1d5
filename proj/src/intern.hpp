#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <unordered_set>

namespace plyalg::detail {

// Hash-consing table. Nodes live for the whole process; the structural
// hash must already be stored in `node.hash`, and `Same` compares the
// structural fields (children are interned, so shallow comparison suffices).
template <class Node, class Same>
class Interner {
public:
    const Node* intern(Node&& node)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = set_.find(&node);
        if (it != set_.end()) return *it;
        node.id = next_id_++;
        store_.push_back(std::move(node));
        const Node* p = &store_.back();
        set_.insert(p);
        return p;
    }

private:
    struct Hash {
        std::size_t operator()(const Node* n) const { return n->hash; }
    };
    struct Eq {
        bool operator()(const Node* a, const Node* b) const { return a->hash == b->hash && Same{}(*a, *b); }
    };
    std::mutex mutex_;
    std::unordered_set<const Node*, Hash, Eq> set_;
    std::deque<Node> store_;
    std::uint64_t next_id_ = 1;
};

} // namespace plyalg::detail
