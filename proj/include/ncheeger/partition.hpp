#pragma once

#include <set>
#include <string>
#include <vector>

#include "ncheeger/domain.hpp"

namespace ncheeger {

// Which vertex set a partition splits.
enum class Universe { Omega, Closure, Graph };

inline const char* universe_name(Universe u) {
    switch (u) {
        case Universe::Omega: return "omega";
        case Universe::Closure: return "closure";
        case Universe::Graph: return "graph";
    }
    return "?";
}

// An unordered two-block split {S, S^v} of a universe. The constructed side
// is kept as given; equality and ordering go through the canonical key, the
// side that does not contain the smallest universe vertex.
class Partition {
public:
    // side and members must be sorted; side must be a nonempty proper subset.
    Partition(Universe universe, std::vector<int> side, std::vector<int> members)
        : universe_(universe), side_(std::move(side)), members_(std::move(members)) {
        if (side_.empty() || side_.size() >= members_.size()) {
            throw EmptyOrFullSubsetError("partition side must be a nonempty proper subset of its universe");
        }
    }

    static Partition of_omega(const Domain& d, const std::set<std::string>& side_names) {
        return Partition(Universe::Omega, member_indices(d, side_names, d.omega()), d.omega());
    }

    static Partition of_closure(const Domain& d, const std::set<std::string>& side_names) {
        return Partition(Universe::Closure, member_indices(d, side_names, d.closure()), d.closure());
    }

    static Partition of_graph(const WeightedGraph& g, const std::set<std::string>& side_names) {
        std::vector<int> members(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v) members[static_cast<std::size_t>(v)] = v;
        std::vector<int> side;
        for (const auto& name : side_names) side.push_back(g.index_of(name));
        std::sort(side.begin(), side.end());
        return Partition(Universe::Graph, std::move(side), std::move(members));
    }

    Universe universe() const { return universe_; }
    const std::vector<int>& side() const { return side_; }
    const std::vector<int>& members() const { return members_; }

    std::vector<int> complement() const {
        std::vector<int> out;
        out.reserve(members_.size() - side_.size());
        std::set_difference(members_.begin(), members_.end(), side_.begin(), side_.end(),
                            std::back_inserter(out));
        return out;
    }

    bool side_contains(int v) const {
        return std::binary_search(side_.begin(), side_.end(), v);
    }

    // The side not containing the smallest universe vertex.
    std::vector<int> canonical_key() const {
        if (!side_.empty() && side_.front() == members_.front()) return complement();
        return side_;
    }

    // Same orientation, canonical side stored as the side.
    Partition canonical() const {
        return Partition(universe_, canonical_key(), members_);
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.universe_ == b.universe_ && a.members_ == b.members_ &&
               a.canonical_key() == b.canonical_key();
    }

    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        if (a.members_ != b.members_) return a.members_ < b.members_;
        return a.canonical_key() < b.canonical_key();
    }

private:
    static std::vector<int> member_indices(const Domain& d, const std::set<std::string>& names,
                                           const std::vector<int>& universe_members) {
        std::vector<int> out;
        out.reserve(names.size());
        for (const auto& name : names) {
            const int v = d.graph().index_of(name);
            if (!std::binary_search(universe_members.begin(), universe_members.end(), v)) {
                throw WrongUniverseError("vertex '" + name + "' is not in the partition universe");
            }
            out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Universe universe_;
    std::vector<int> side_;
    std::vector<int> members_;
};

}  // namespace ncheeger
