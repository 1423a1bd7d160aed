#pragma once

// Independent oracles used only by tests: brute-force subgroup enumeration,
// elementwise permutability, divisor formulas. These deliberately avoid the
// code paths they are checking.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "grouplat/group.hpp"
#include "grouplat/lattice.hpp"

namespace oracle {

using grouplat::ElementSet;
using grouplat::GroupTable;

// every subset containing the identity that is closed under multiplication
// (finite, so closure under products implies inverses); |G| <= 16 only
inline std::set<std::vector<int>> all_subgroups_exhaustive(const GroupTable& g) {
    const int n = g.order;
    std::set<std::vector<int>> subs;
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {  // bit 0 = identity
        bool closed = true;
        for (int a = 0; a < n && closed; ++a) {
            if (!((mask >> a) & 1)) continue;
            for (int b = 0; b < n && closed; ++b) {
                if (!((mask >> b) & 1)) continue;
                if (!((mask >> g.at(a, b)) & 1)) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<int> members;
        for (int a = 0; a < n; ++a)
            if ((mask >> a) & 1) members.push_back(a);
        subs.insert(members);
    }
    return subs;
}

// subgroups generated by at most two elements, then pairwise joins to the
// fixpoint; complete for any finite group, usable up to order ~24 in tests
inline std::set<std::vector<int>> all_subgroups_two_generated(const GroupTable& g) {
    std::set<std::vector<int>> subs;
    std::vector<ElementSet> list;
    auto add = [&](const ElementSet& s) {
        if (subs.insert(s.to_vector()).second) list.push_back(s);
    };
    for (int x = 0; x < g.order; ++x)
        for (int y = x; y < g.order; ++y) add(grouplat::generated_subgroup(g, std::vector<int>{x, y}));
    for (size_t b = 0; b < list.size(); ++b)
        for (size_t a = 0; a < b; ++a)
            add(grouplat::generated_subgroup(g, list[a] | list[b]));
    return subs;
}

inline std::set<std::vector<int>> lattice_as_set(const grouplat::SubgroupLattice& l) {
    std::set<std::vector<int>> subs;
    for (int i = 0; i < l.size(); ++i) subs.insert(l.at(i).members.to_vector());
    return subs;
}

// subgroup count of the dihedral group of order 2n: d(n) + sigma(n)
inline int dihedral_subgroup_count(int n) {
    int divisors = 0, sigma = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) {
            ++divisors;
            sigma += d;
        }
    return divisors + sigma;
}

inline std::vector<int> product_set(const GroupTable& g, const ElementSet& a,
                                    const ElementSet& b) {
    std::set<int> out;
    a.for_each([&](int x) { b.for_each([&](int y) { out.insert(g.at(x, y)); }); });
    return {out.begin(), out.end()};
}

// literal definition: HK == KH elementwise for every subgroup K
inline bool is_permutable_elementwise(const GroupTable& g, const grouplat::SubgroupLattice& l,
                                      int h) {
    for (int k = 0; k < l.size(); ++k) {
        if (product_set(g, l.at(h).members, l.at(k).members) !=
            product_set(g, l.at(k).members, l.at(h).members))
            return false;
    }
    return true;
}

// invariant profile standing in for isomorphism checks: order, abelianness,
// element-order multiset, centre size
struct Profile {
    int order;
    bool abelian;
    std::map<int, int> order_multiset;
    int center_size;
    bool operator==(const Profile&) const = default;
};

inline Profile profile(const GroupTable& g) {
    Profile p{g.order, g.is_abelian(), {}, 0};
    for (int x = 0; x < g.order; ++x) ++p.order_multiset[g.elem_order[static_cast<size_t>(x)]];
    p.center_size = grouplat::centralizing_set(g, g.all_elements()).count();
    return p;
}

}  // namespace oracle
