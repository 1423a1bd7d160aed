#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "grouplat/catalog.hpp"
#include "grouplat/errors.hpp"
#include "grouplat/report_json.hpp"
#include "grouplat/verify.hpp"
#include "grouplat/version.hpp"

namespace {

using namespace grouplat;

struct CommonOpts {
    int threads = 0;
    bool serial = false;
    int cross_max_order = 48;

    VerifyOptions verify_options() const {
        VerifyOptions o;
        o.exec = serial ? Exec::serial : Exec::parallel;
        o.cross_max_order = cross_max_order;
        return o;
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--threads", c.threads, "worker thread count (0 = library default)");
    cmd->add_flag("--serial", c.serial, "run the serial reference path");
    cmd->add_option("--cross-max-order", c.cross_max_order,
                    "largest group order for the full modularity cross-oracle (0 = unlimited)");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const TheoremReport& r, std::ostream& os) {
    os << "group " << r.spec << "  order " << r.order << "  subgroups " << r.subgroup_count
       << "\n";
    os << "  fitting order " << r.fitting_order << "  |G/F| " << r.quotient_order
       << "  cyclic: " << yes_no(r.quotient_cyclic) << "\n";
    os << "  Schmidt subgroups: " << r.schmidt.size();
    if (r.hypothesis_vacuous) os << " (none: hypothesis vacuous)";
    os << "\n";
    for (const auto& c : r.schmidt) {
        os << "    #" << c.sub_index << " order " << c.order << "  p=" << c.witness.p
           << " q=" << c.witness.q << " |P|=" << c.p_order << " |Q|=" << c.q_order
           << "  subnormal " << yes_no(c.subnormal);
        if (c.subnormal) os << " (defect " << c.defect << ")";
        os << "  modular " << yes_no(c.modular) << "  permutable " << yes_no(c.permutable)
           << "  normal " << yes_no(c.normal) << "\n";
    }
    os << "  hypothesis holds: " << yes_no(r.hypothesis_holds)
       << "   conclusion holds: " << yes_no(r.conclusion_holds)
       << "   respected: " << yes_no(r.theorem_respected) << "\n";
    auto suite = [&](const char* name, const LemmaOutcome& o) {
        os << "  suite " << name << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.checked
           << " checked" << (o.vacuous ? ", vacuous" : "") << ")\n";
        for (const auto& f : o.failures) os << "      " << f << "\n";
    };
    suite("lsch", r.lsch);
    suite("lsch2", r.lsch2);
    suite("lm1", r.lm1);
    suite("tsch", r.tsch);
    suite("vedernikov", r.vedernikov);
    suite("implications", r.implications);
    if (r.modular_not_permutable > 0)
        os << "  modular-not-permutable witnesses: " << r.modular_not_permutable << " (first "
           << r.first_modular_not_permutable << ")\n";
    if (r.permutable_not_normal > 0)
        os << "  permutable-not-normal witnesses: " << r.permutable_not_normal << " (first "
           << r.first_permutable_not_normal << ")\n";
    os << "result: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
}

void write_json(const std::string& path, const ScanReport& sr) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << emit_report(make_document(sr));
}

ScanReport wrap_single(TheoremReport rep) {
    ScanReport sr;
    sr.reports.push_back(std::move(rep));
    ScanSummary& s = sr.summary;
    const TheoremReport& r = sr.reports[0];
    s.groups_total = 1;
    s.groups_processed = r.skipped ? 0 : 1;
    s.groups_skipped = r.skipped ? 1 : 0;
    s.all_pass = r.skipped ? true : r.all_pass();
    s.schmidt_total = static_cast<int>(r.schmidt.size());
    s.modular_not_permutable_total = r.modular_not_permutable;
    s.permutable_not_normal_total = r.permutable_not_normal;
    if (r.modular_not_permutable > 0)
        s.first_modular_not_permutable = r.spec + " " + r.first_modular_not_permutable;
    if (r.permutable_not_normal > 0)
        s.first_permutable_not_normal = r.spec + " " + r.first_permutable_not_normal;
    return sr;
}

int cmd_verify(const std::string& spec, const std::string& json_path, const CommonOpts& common) {
    const GroupTable g = build_group_spec(spec);
    const TheoremReport rep = verify_group(g, spec, common.verify_options());
    if (rep.skipped) throw CapacityError(rep.skip_reason);
    print_report(rep, std::cout);
    if (!json_path.empty()) write_json(json_path, wrap_single(rep));
    return rep.all_pass() ? 0 : 1;
}

int cmd_scan(int max_order, int max_dihedral, const std::string& json_path,
             const CommonOpts& common) {
    const std::vector<std::string> specs = builtin_catalog(max_order, max_dihedral);
    const ScanReport sr = scan_catalog(specs, common.verify_options());
    for (const auto& r : sr.reports) {
        if (r.skipped)
            std::cout << "SKIP " << r.spec << " (" << r.skip_reason << ")\n";
        else
            std::cout << (r.all_pass() ? "PASS " : "FAIL ") << r.spec << "  order " << r.order
                      << "  subgroups " << r.subgroup_count << "  schmidt " << r.schmidt.size()
                      << "\n";
    }
    const ScanSummary& s = sr.summary;
    std::cout << "scan: " << s.groups_processed << "/" << s.groups_total << " processed, "
              << s.groups_skipped << " skipped, " << s.schmidt_total
              << " Schmidt subgroups, all pass: " << yes_no(s.all_pass) << "\n";
    if (!s.first_modular_not_permutable.empty())
        std::cout << "first modular-not-permutable: " << s.first_modular_not_permutable << "\n";
    if (!s.first_permutable_not_normal.empty())
        std::cout << "first permutable-not-normal: " << s.first_permutable_not_normal << "\n";
    if (!json_path.empty()) write_json(json_path, sr);
    return s.all_pass ? 0 : 1;
}

int cmd_classify(const std::string& spec, bool all_subgroups, const CommonOpts& common) {
    const GroupTable g = build_group_spec(spec);
    VerifyOptions opts = common.verify_options();
    const SubgroupLattice l = enumerate_subgroups(g, LatticeOptions{opts.lattice_caps, opts.exec});
    const SubgroupProperties props = analyze_subgroups(g, l, opts.exec);

    std::cout << "group " << spec << "  order " << g.order << "  subgroups " << l.size() << "\n";
    const BasicPredicates bp = basic_predicates(g);
    std::cout << "  abelian " << yes_no(bp.is_abelian) << "  cyclic " << yes_no(bp.is_cyclic)
              << "  nilpotent " << yes_no(is_nilpotent(g, l)) << "  supersoluble "
              << yes_no(is_supersoluble(g)) << "\n";
    std::cout << "  derived order " << l.at(derived_subgroup(g, l)).order << "  frattini order "
              << l.at(frattini_subgroup(g, l)).order << "  fitting order "
              << l.at(fitting_subgroup(g, l)).order << "  center order "
              << l.at(center_subgroup(g, l)).order << "  residual order "
              << l.at(abelian_squarefree_residual(g, l)).order << "\n";
    if (!all_subgroups) return 0;

    const ClassificationScan scan = classify_all_subgroups(g, l, opts.exec);
    QuotientContextCache cache(g, l);
    std::cout << "  idx order normal perm modular modchar subnormal defect nilp abel cyc schmidt\n";
    int rc = 0;
    for (int i = 0; i < l.size(); ++i) {
        bool modchar = false;
        try {
            modchar = modularity_verdict(g, l, i, &cache).characterized;
        } catch (const InternalCheckError& e) {
            std::cerr << "cross-oracle failure: " << e.what() << "\n";
            rc = 1;
        }
        const auto w = schmidt_analyze(g, l, i, &props);
        std::cout << "  " << i << " " << l.at(i).order << " " << yes_no(l.is_normal(i)) << " "
                  << yes_no(scan.permutable[static_cast<size_t>(i)]) << " "
                  << yes_no(scan.modular[static_cast<size_t>(i)]) << " " << yes_no(modchar) << " "
                  << yes_no(scan.subnormal[static_cast<size_t>(i)]) << " "
                  << scan.defect[static_cast<size_t>(i)] << " "
                  << yes_no(props.nilpotent[static_cast<size_t>(i)]) << " "
                  << yes_no(props.abelian[static_cast<size_t>(i)]) << " "
                  << yes_no(props.cyclic[static_cast<size_t>(i)]) << " "
                  << (w ? ("p=" + std::to_string(w->p) + ",q=" + std::to_string(w->q)) : "-")
                  << "\n";
    }
    return rc;
}

int cmd_lemma(const std::string& name, const std::string& spec, CommonOpts common) {
    if (name == "lsch2") common.cross_max_order = 0;  // explicit request: no bound
    const GroupTable g = build_group_spec(spec);
    const TheoremReport rep = verify_group(g, spec, common.verify_options());
    if (rep.skipped) throw CapacityError(rep.skip_reason);
    const LemmaOutcome* o = nullptr;
    if (name == "lsch") o = &rep.lsch;
    else if (name == "lsch2") o = &rep.lsch2;
    else if (name == "lm1") o = &rep.lm1;
    else if (name == "tsch") o = &rep.tsch;
    else throw ValidationError("unknown lemma suite '" + name + "'");
    std::cout << "lemma " << name << " on " << spec << ": " << (o->pass ? "PASS" : "FAIL") << " ("
              << o->checked << " checked" << (o->vacuous ? ", vacuous" : "") << ")\n";
    for (const auto& f : o->failures) std::cout << "  " << f << "\n";
    return o->pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group lattice engine: Schmidt subgroups, modularity, subnormality"};
    app.set_version_flag("--version", grouplat::kEngineVersion);
    app.require_subcommand(1);

    CommonOpts common;
    std::string spec, json_path, lemma_name;
    int max_order = 60, max_dihedral = 200;
    bool all_subgroups = false;

    CLI::App* verify = app.add_subcommand("verify", "run every suite on one group");
    verify->add_option("--group", spec, "group spec")->required();
    verify->add_option("--json", json_path, "write the report document here");
    add_common(verify, common);

    CLI::App* scan = app.add_subcommand("scan", "run every suite on the built-in catalog");
    scan->add_option("--max-order", max_order, "largest catalog order (default 60)");
    scan->add_option("--max-dihedral", max_dihedral, "largest dihedral order (default 200)");
    scan->add_option("--json", json_path, "write the report document here");
    add_common(scan, common);

    CLI::App* classify = app.add_subcommand("classify", "per-subgroup predicate table");
    classify->add_option("--group", spec, "group spec")->required();
    classify->add_flag("--all-subgroups", all_subgroups, "list every subgroup");
    add_common(classify, common);

    CLI::App* lemma = app.add_subcommand("lemma", "run one suite: lsch, lsch2, lm1 or tsch");
    lemma->add_option("--name", lemma_name, "suite name")
        ->required()
        ->check(CLI::IsMember({"lsch", "lsch2", "lm1", "tsch"}));
    lemma->add_option("--group", spec, "group spec")->required();
    add_common(lemma, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    grouplat::set_thread_count(common.threads);
    try {
        if (app.got_subcommand(verify)) return cmd_verify(spec, json_path, common);
        if (app.got_subcommand(scan)) return cmd_scan(max_order, max_dihedral, json_path, common);
        if (app.got_subcommand(classify)) return cmd_classify(spec, all_subgroups, common);
        if (app.got_subcommand(lemma)) return cmd_lemma(lemma_name, spec, common);
    } catch (const grouplat::InternalCheckError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const grouplat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
