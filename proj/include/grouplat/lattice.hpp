#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouplat/exec.hpp"
#include "grouplat/group.hpp"

namespace grouplat {

struct Subgroup {
    ElementSet members;
    int order = 0;
};

struct LatticeCaps {
    int max_order = 200;      // largest group whose lattice we enumerate
    int max_subgroups = 5000;
};

struct LatticeOptions {
    LatticeCaps caps;
    Exec exec = Exec::parallel;
};

// The complete subgroup lattice of one GroupTable, with every derived table
// the classifiers lean on precomputed: containment, meet, join, conjugation,
// normal cores and closures. Immutable after enumeration; safe to share.
//
// Subgroups are listed in canonical order: ascending order, then canonical
// set order. Index 0 is the trivial subgroup, the last index is the whole
// group.
class SubgroupLattice {
public:
    std::vector<Subgroup> subs;
    int trivial_index = 0;
    int top_index = 0;

    int size() const { return static_cast<int>(subs.size()); }
    const Subgroup& at(int i) const { return subs[static_cast<size_t>(i)]; }

    // -1 when the set is not a subgroup of the parent
    int index_of(const ElementSet& s) const {
        auto it = index_.find(s);
        return it == index_.end() ? -1 : it->second;
    }

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * subs.size() + b] != 0; }
    int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * subs.size() + b]; }
    int join(int a, int b) const { return join_[static_cast<size_t>(a) * subs.size() + b]; }

    // index of g H g^-1
    int conj_sub(int g, int h) const { return conj_[static_cast<size_t>(g) * subs.size() + h]; }

    bool is_normal(int h) const { return normal_[static_cast<size_t>(h)] != 0; }
    int core(int h) const { return core_[static_cast<size_t>(h)]; }
    int normal_closure(int h) const { return closure_[static_cast<size_t>(h)]; }

    std::vector<int> normal_subgroups() const;

    friend SubgroupLattice enumerate_subgroups(const GroupTable&, const LatticeOptions&);

private:
    std::unordered_map<ElementSet, int, ElementSetHash> index_;
    std::vector<uint8_t> leq_;
    std::vector<int32_t> meet_, join_;
    std::vector<int32_t> conj_;
    std::vector<uint8_t> normal_;
    std::vector<int32_t> core_, closure_;
};

// Seeds with all cyclic subgroups, then closes under pairwise joins.
// Completeness: every subgroup is a join of cyclic subgroups.
SubgroupLattice enumerate_subgroups(const GroupTable& g, const LatticeOptions& opts = {});

// Straight-line serial reference of the same fixpoint (no rounds, no
// parallelism); returns the canonical sorted member sets. Kept for tests and
// the benchmark.
std::vector<ElementSet> enumerate_subgroups_reference(const GroupTable& g,
                                                      const LatticeCaps& caps = {});

// meet/join on explicit subgroups (looked up by member set)
Subgroup meet(const SubgroupLattice& l, const Subgroup& a, const Subgroup& b);
Subgroup join(const SubgroupLattice& l, const Subgroup& a, const Subgroup& b);

// largest normal subgroup of g contained in H (intersection of conjugates)
int normal_core(const GroupTable& g, const SubgroupLattice& l, int h);
// smallest normal subgroup of g containing H (join of conjugates)
int normal_closure(const GroupTable& g, const SubgroupLattice& l, int h);

// {x : x commutes with all elements}, as a lattice index
int center_subgroup(const GroupTable& g, const SubgroupLattice& l);

}  // namespace grouplat
