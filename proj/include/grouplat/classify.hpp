#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grouplat/structure.hpp"

namespace grouplat {

// Decomposition S = P x| Q of a Schmidt group: P the normal Sylow
// p-subgroup, Q = <y> a cyclic non-normal Sylow q-subgroup. Every witness is
// validated on construction: S' = P, y^q central, Phi(S) = Phi(P) x <y^q>.
struct SchmidtWitness {
    int sub_p = -1;  // lattice index of P
    int sub_q = -1;  // lattice index of Q
    int p = 0;
    int q = 0;
    int y = -1;  // generator of Q (smallest element index of full order)
};

// Detection: S non-nilpotent with every maximal subgroup nilpotent. Witness
// validation failure is an engine bug and throws InternalCheckError.
// `props` is an optional precomputed flag table (else computed locally).
std::optional<SchmidtWitness> schmidt_analyze(const GroupTable& g, const SubgroupLattice& l,
                                              int s, const SubgroupProperties* props = nullptr);

// P-group in the lattice-theory sense: elementary abelian, or elementary
// abelian A extended by a prime-order element inducing x -> x^k on all of A.
struct PGroupWitness {
    enum class Kind { elementary_abelian, nonabelian };
    Kind kind = Kind::elementary_abelian;
    int p = 0;
    int n = 0;               // elementary: |G| = p^(n+1); nonabelian: |A| = p^n
    int q = 0;               // nonabelian only
    int power_exponent = 0;  // nonabelian only; k with a^y = a^k, k != 1 mod p
};
std::optional<PGroupWitness> p_group_class(const GroupTable& g);

struct SubnormalResult {
    bool subnormal = false;
    int defect = -1;  // number of strict steps in the closure chain
};
// Iterated normal closures: H0 = G, H_{i+1} = closure of H inside H_i.
SubnormalResult is_subnormal(const GroupTable& g, const SubgroupLattice& l, int h);

// HK = KH for every subgroup K. Decided via |<H,K>| * |H meet K| = |H| * |K|
// on the precomputed tables; the elementwise product-set route is kept as a
// test oracle.
bool is_permutable(const GroupTable& g, const SubgroupLattice& l, int h);

// Modular element of the subgroup lattice, standard two-identity form:
//   (i)  X <= Z  =>  <X,M> meet Z = <X, M meet Z>
//   (ii) M <= Z  =>  <M,X> meet Z = <M, X meet Z>
// quantified over all X, Z in the lattice.
bool is_modular_direct(const GroupTable& g, const SubgroupLattice& l, int m);

// The decomposition found by the characterization route: G/K is the direct
// product of factors S_i/K (non-abelian P-groups of pairwise coprime order)
// and a tail T/K coprime to all of them, M/K splitting accordingly with
// M meet T permutable in G. Orders are quotient orders; the *_index fields
// are parent-lattice indices of the preimages (the over-groups of the core).
struct ModularDecomposition {
    int r = 0;
    int core_order = 1;
    std::vector<int> factor_orders;
    std::vector<int> factor_sylow_orders;  // |(M meet S_i)/K|
    int tail_order = 1;                    // |T/K|
    std::vector<int> factor_indices;       // S_i as subgroups of G
    std::vector<int> sylow_indices;        // M meet S_i as subgroups of G
    int tail_index = -1;                   // T as a subgroup of G
};

struct ModularityVerdict {
    bool direct = false;
    bool characterized = false;
    std::optional<ModularDecomposition> decomposition;
};

// Per-core quotient context shared by all subgroups with the same normal
// core: the quotient, its lattice, and its qualifying normal factors.
struct QuotientContext;

class QuotientContextCache {
public:
    QuotientContextCache(const GroupTable& g, const SubgroupLattice& l);
    ~QuotientContextCache();
    // Builds on first use; safe for concurrent callers.
    const QuotientContext& get(int core_index);

private:
    const GroupTable& g_;
    const SubgroupLattice& l_;
    std::mutex mu_;
    std::unordered_map<int, std::unique_ptr<QuotientContext>> ctx_;
};

// Runs both modularity routes and asserts they agree (a disagreement is a
// hard failure: InternalCheckError). `cache` may be shared across subgroups
// of the same lattice; pass nullptr for a one-shot private context.
ModularityVerdict modularity_verdict(const GroupTable& g, const SubgroupLattice& l, int m,
                                     QuotientContextCache* cache = nullptr);

// Characterization route alone (no agreement assertion).
ModularityVerdict is_modular_characterized(const GroupTable& g, const SubgroupLattice& l, int m,
                                           QuotientContextCache* cache = nullptr);

}  // namespace grouplat
