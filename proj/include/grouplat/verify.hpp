#pragma once

#include <string>
#include <vector>

#include "grouplat/classify.hpp"

namespace grouplat {

// Per-subgroup predicate flags for a whole lattice, computed in one pass.
struct ClassificationScan {
    std::vector<uint8_t> permutable, modular, subnormal;
    std::vector<int> defect;  // -1 when not subnormal
};
ClassificationScan classify_all_subgroups(const GroupTable& g, const SubgroupLattice& l,
                                          Exec exec = Exec::parallel);

struct SchmidtClassification {
    int sub_index = -1;
    int order = 0;
    std::vector<int> members;
    SchmidtWitness witness;
    int p_order = 0;  // |P|
    int q_order = 0;  // |Q|
    bool subnormal = false;
    int defect = -1;
    bool modular = false;
    bool permutable = false;
    bool normal = false;
};

struct LemmaOutcome {
    bool pass = true;
    bool vacuous = false;  // nothing bound by the hypothesis
    int checked = 0;
    std::vector<std::string> failures;
};

// Everything one group's verification produces. Serialized reports are
// byte-stable: identical inputs give identical documents.
struct TheoremReport {
    std::string spec;
    std::string label;
    int order = 0;
    bool skipped = false;
    std::string skip_reason;

    int subgroup_count = 0;
    int fitting_order = 0;
    int quotient_order = 0;  // |G / F(G)|
    bool quotient_cyclic = false;

    std::vector<SchmidtClassification> schmidt;
    bool hypothesis_holds = false;   // every Schmidt subgroup subnormal or modular
    bool hypothesis_vacuous = false; // no Schmidt subgroups at all
    bool conclusion_holds = false;   // G/F(G) cyclic
    bool theorem_respected = false;  // hypothesis -> conclusion

    // lemma suites; lsch2 is the modularity cross-oracle, bounded by
    // cross_check_bound (0 = unbounded; Schmidt subgroups always checked)
    LemmaOutcome lsch, lsch2, lm1, tsch, vedernikov, implications;
    int cross_check_bound = 0;

    int modular_not_permutable = 0;
    int permutable_not_normal = 0;
    std::string first_modular_not_permutable;  // "#idx order N"
    std::string first_permutable_not_normal;

    std::vector<std::string> failure_witnesses;

    bool all_pass() const;
};

struct VerifyOptions {
    GroupCaps group_caps;
    LatticeCaps lattice_caps;
    Exec exec = Exec::parallel;
    int cross_max_order = 48;  // modularity cross-oracle bound; 0 = unbounded
};

// Runs every suite on one group. Capacity problems mark the report skipped;
// internal-check failures are recorded as failure witnesses, never silently
// dropped.
TheoremReport verify_group(const GroupTable& g, const std::string& spec, const VerifyOptions& opts = {});

struct ScanSummary {
    int groups_total = 0;
    int groups_processed = 0;
    int groups_skipped = 0;
    bool all_pass = true;
    int schmidt_total = 0;
    int modular_not_permutable_total = 0;
    int permutable_not_normal_total = 0;
    std::string first_modular_not_permutable;  // "spec #idx order N"
    std::string first_permutable_not_normal;
};

struct ScanReport {
    std::vector<TheoremReport> reports;  // in input spec order
    ScanSummary summary;
};

// Builds and verifies every spec. Construction or capacity failures become
// skipped-with-reason entries; the scan itself never aborts.
ScanReport scan_catalog(const std::vector<std::string>& specs, const VerifyOptions& opts = {});

}  // namespace grouplat
