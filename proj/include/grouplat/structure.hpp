#pragma once

#include <utility>
#include <vector>

#include "grouplat/lattice.hpp"

namespace grouplat {

struct PrimeFactorization {
    std::vector<std::pair<int, int>> pairs;  // (prime, exponent), primes ascending

    bool has_prime(int p) const {
        for (auto& [q, e] : pairs)
            if (q == p) return true;
        return false;
    }
    int exponent_of(int p) const {
        for (auto& [q, e] : pairs)
            if (q == p) return e;
        return 0;
    }
};

PrimeFactorization factorize(int n);
bool is_prime(int n);
int radical(int n);  // product of the distinct primes of n
bool is_squarefree(int n);
int prime_power_part(int n, int p);  // largest power of p dividing n

struct BasicPredicates {
    bool is_abelian = false;
    bool is_cyclic = false;
};
BasicPredicates basic_predicates(const GroupTable& g);

struct SylowResult {
    int index = -1;  // lattice index of the first Sylow p-subgroup
    int count = 0;   // number of Sylow p-subgroups
};
// Throws ValidationError when p does not divide |G|.
SylowResult sylow_subgroup(const GroupTable& g, const SubgroupLattice& l, int p);

// A subgroup (given by its member set) is nilpotent iff, for each prime p,
// its p-elements form a subgroup. No sub-lattice needed.
bool is_nilpotent_set(const GroupTable& g, const ElementSet& members);

// Whole-group nilpotency via Sylow counts (all equal to 1). The set-based
// route above is the cross-check; tests assert they agree.
bool is_nilpotent(const GroupTable& g, const SubgroupLattice& l);

// Recursive definition: trivial groups are supersoluble; otherwise G must
// have a normal subgroup of prime order with supersoluble quotient. (If any
// such subgroup works, all of them do, so one recursion suffices.)
bool is_supersoluble(const GroupTable& g);

// Per-lattice-index structural flags, computed in one (parallel) pass.
struct SubgroupProperties {
    std::vector<uint8_t> abelian, cyclic, nilpotent;
};
SubgroupProperties analyze_subgroups(const GroupTable& g, const SubgroupLattice& l,
                                     Exec exec = Exec::parallel);

// subgroup generated by all commutators inside `within`
ElementSet derived_set(const GroupTable& g, const ElementSet& within);

int derived_subgroup(const GroupTable& g, const SubgroupLattice& l);
int derived_subgroup_in(const GroupTable& g, const SubgroupLattice& l, int h);

// intersection of the maximal subgroups of h (of G when h = top)
int frattini_subgroup(const GroupTable& g, const SubgroupLattice& l);
int frattini_subgroup_in(const GroupTable& g, const SubgroupLattice& l, int h);

// Largest normal nilpotent subgroup. Scans normal subgroups by descending
// order; asserts that every other normal nilpotent subgroup is contained in
// the winner (uniqueness), else throws InternalCheckError.
int fitting_subgroup(const GroupTable& g, const SubgroupLattice& l);

// Smallest normal subgroup with quotient abelian of squarefree exponent
// (equivalently: abelian with elementary abelian Sylow subgroups). Asserts
// that the intersection itself qualifies.
int abelian_squarefree_residual(const GroupTable& g, const SubgroupLattice& l);
int abelian_squarefree_residual_in(const GroupTable& g, const SubgroupLattice& l, int h);

// true iff h/n is abelian of squarefree exponent, for n normal in h
bool quotient_is_abelian_squarefree(const GroupTable& g, const ElementSet& h, const ElementSet& n);

}  // namespace grouplat
