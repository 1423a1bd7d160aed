#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grouplat/bitset.hpp"
#include "grouplat/perm.hpp"

namespace grouplat {

struct GroupCaps {
    int max_order = 1000;
};

// A finite group as a dense multiplication table over element indices.
// Element 0 is always the identity. Immutable after construction.
struct GroupTable {
    int order = 0;
    std::string label;
    std::vector<int> mul;         // order x order, row-major: mul[a*order+b] = a*b
    std::vector<int> inv;         // two-sided inverses
    std::vector<int> elem_order;  // least k >= 1 with x^k = identity

    static constexpr int kIdentity = 0;

    int at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }

    // g x g^-1
    int conj(int g, int x) const { return at(at(g, x), inv[static_cast<size_t>(g)]); }

    // x^k for k >= 0
    int power(int x, int k) const {
        int r = kIdentity;
        for (int i = 0; i < k; ++i) r = at(r, x);
        return r;
    }

    bool is_abelian() const;
    bool is_cyclic() const;

    ElementSet all_elements() const {
        ElementSet s;
        for (int i = 0; i < order; ++i) s.set(i);
        return s;
    }
};

// least k >= 1 with x^k = identity (recomputed from the table)
int element_order(const GroupTable& g, int x);

// Checks identity/inverse/element-order consistency, and full associativity
// for order <= 200. Throws InternalCheckError on violation. Construction
// paths call this; it is also exposed for tests.
void validate_table(const GroupTable& g, bool force_assoc = false);

// Builds a GroupTable from a raw multiplication table. Element 0 must be the
// identity; inverses and element orders are derived and validated.
GroupTable table_from_mul(int order, std::vector<int> mul, std::string label);

// Breadth-first closure of the generators: identity is element 0, the rest
// are discovered in BFS order (right-multiplication, generators in the
// listed order). Deterministic: identical inputs give identical tables.
GroupTable closure_from_generators(const std::vector<Permutation>& gens, int degree,
                                   std::string label, const GroupCaps& caps = {});

// Pair indexing (a,b) -> a*|H| + b, componentwise multiplication.
GroupTable direct_product(const GroupTable& g, const GroupTable& h, const GroupCaps& caps = {});

// The construction A x| Q. action[q] is the permutation of A's element
// indices induced by q; it must be an automorphism of A for every q, and
// q -> action[q] must be a homomorphism. Validated, not assumed.
struct SemidirectSpec {
    GroupTable base;    // A, the normal factor
    GroupTable acting;  // Q
    std::vector<std::vector<int>> action;
};

// (a1,q1)(a2,q2) = (a1 * action[q1](a2), q1 q2); indexing (a,q) -> a*|Q|+q.
GroupTable semidirect_product(const SemidirectSpec& spec, const GroupCaps& caps = {});

struct QuotientMap {
    GroupTable quotient;
    std::vector<int> projection;  // element of G -> element of quotient
};

// Coset table of G/N. Cosets are indexed by their minimal member, ascending.
// Throws ValidationError if N is not normal (or not a subgroup).
QuotientMap quotient_by(const GroupTable& g, const ElementSet& normal_subgroup);

// The members of `sub` as a group in their own right (local indices in
// ascending parent order; parent identity becomes local 0).
struct SubTable {
    GroupTable table;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // -1 outside the subgroup
};
SubTable subgroup_table(const GroupTable& g, const ElementSet& sub);

// Extends gens[i] -> images[i] to an automorphism of g, if one exists.
// Returns the full index map, or nullopt when the assignment is inconsistent
// or not bijective. Requires that gens generate g.
std::optional<std::vector<int>> extend_automorphism(const GroupTable& g,
                                                    const std::vector<int>& gens,
                                                    const std::vector<int>& images);

// Closure of a set of elements inside g (subgroup generated by them).
// An empty seed yields the trivial subgroup.
ElementSet generated_subgroup(const GroupTable& g, const std::vector<int>& seed);
ElementSet generated_subgroup(const GroupTable& g, const ElementSet& seed);

// {x in `within` : x commutes with every member of `within`}
ElementSet centralizing_set(const GroupTable& g, const ElementSet& within);

GroupTable cyclic_group(int n);

}  // namespace grouplat
