#include "grouplat/verify.hpp"

#include <algorithm>

#include "grouplat/catalog.hpp"
#include "grouplat/errors.hpp"

namespace grouplat {

namespace {

std::string sub_tag(const SubgroupLattice& l, int i) {
    return "#" + std::to_string(i) + " order " + std::to_string(l.at(i).order);
}

}  // namespace

ClassificationScan classify_all_subgroups(const GroupTable& g, const SubgroupLattice& l,
                                          Exec exec) {
    const int n = l.size();
    ClassificationScan s;
    s.permutable.assign(static_cast<size_t>(n), 0);
    s.modular.assign(static_cast<size_t>(n), 0);
    s.subnormal.assign(static_cast<size_t>(n), 0);
    s.defect.assign(static_cast<size_t>(n), -1);
    par_for(exec, n, [&](int i) {
        s.permutable[static_cast<size_t>(i)] = is_permutable(g, l, i) ? 1 : 0;
        s.modular[static_cast<size_t>(i)] = is_modular_direct(g, l, i) ? 1 : 0;
        const SubnormalResult r = is_subnormal(g, l, i);
        s.subnormal[static_cast<size_t>(i)] = r.subnormal ? 1 : 0;
        s.defect[static_cast<size_t>(i)] = r.defect;
    });
    return s;
}

bool TheoremReport::all_pass() const {
    if (skipped) return false;
    return failure_witnesses.empty() && theorem_respected && lsch.pass && lsch2.pass && lm1.pass &&
           tsch.pass && vedernikov.pass && implications.pass;
}

TheoremReport verify_group(const GroupTable& g, const std::string& spec,
                           const VerifyOptions& opts) {
    TheoremReport rep;
    rep.spec = spec;
    rep.label = g.label;
    rep.order = g.order;
    rep.cross_check_bound = opts.cross_max_order;

    SubgroupLattice l;
    try {
        l = enumerate_subgroups(g, LatticeOptions{opts.lattice_caps, opts.exec});
    } catch (const CapacityError& e) {
        rep.skipped = true;
        rep.skip_reason = e.what();
        return rep;
    }
    const int n = l.size();
    rep.subgroup_count = n;

    const SubgroupProperties props = analyze_subgroups(g, l, opts.exec);
    const ClassificationScan scan = classify_all_subgroups(g, l, opts.exec);

    // -- Schmidt detection over every subgroup, the whole group included
    std::vector<std::optional<SchmidtWitness>> witnesses(static_cast<size_t>(n));
    std::vector<std::string> schmidt_errors(static_cast<size_t>(n));
    par_for(opts.exec, n, [&](int i) {
        try {
            witnesses[static_cast<size_t>(i)] = schmidt_analyze(g, l, i, &props);
        } catch (const InternalCheckError& e) {
            schmidt_errors[static_cast<size_t>(i)] = e.what();
        }
    });

    // -- modularity cross-oracle; Schmidt subgroups always get both routes
    QuotientContextCache cache(g, l);
    const bool full_cross = opts.cross_max_order == 0 || g.order <= opts.cross_max_order;
    std::vector<uint8_t> cross_ran(static_cast<size_t>(n), 0);
    std::vector<std::string> cross_errors(static_cast<size_t>(n));
    par_for(opts.exec, n, [&](int i) {
        if (!full_cross && !witnesses[static_cast<size_t>(i)]) return;
        cross_ran[static_cast<size_t>(i)] = 1;
        try {
            modularity_verdict(g, l, i, &cache);
        } catch (const InternalCheckError& e) {
            cross_errors[static_cast<size_t>(i)] = e.what();
        }
    });

    for (int i = 0; i < n; ++i) {
        if (!witnesses[static_cast<size_t>(i)]) continue;
        const SchmidtWitness& w = *witnesses[static_cast<size_t>(i)];
        SchmidtClassification c;
        c.sub_index = i;
        c.order = l.at(i).order;
        c.members = l.at(i).members.to_vector();
        c.witness = w;
        c.p_order = l.at(w.sub_p).order;
        c.q_order = l.at(w.sub_q).order;
        c.subnormal = scan.subnormal[static_cast<size_t>(i)] != 0;
        c.defect = scan.defect[static_cast<size_t>(i)];
        c.modular = scan.modular[static_cast<size_t>(i)] != 0;
        c.permutable = scan.permutable[static_cast<size_t>(i)] != 0;
        c.normal = l.is_normal(i);
        rep.schmidt.push_back(std::move(c));
    }

    bool schmidt_detection_clean = true;
    for (int i = 0; i < n; ++i)
        if (!schmidt_errors[static_cast<size_t>(i)].empty()) {
            schmidt_detection_clean = false;
            rep.failure_witnesses.push_back("schmidt " + sub_tag(l, i) + ": " +
                                            schmidt_errors[static_cast<size_t>(i)]);
        }

    rep.hypothesis_vacuous = rep.schmidt.empty() && schmidt_detection_clean;
    rep.hypothesis_holds = true;
    for (const auto& c : rep.schmidt)
        if (!c.subnormal && !c.modular) rep.hypothesis_holds = false;

    // -- Fitting subgroup and the conclusion
    int fit_idx = -1;
    try {
        fit_idx = fitting_subgroup(g, l);
        rep.fitting_order = l.at(fit_idx).order;
        const QuotientMap qm = quotient_by(g, l.at(fit_idx).members);
        rep.quotient_order = qm.quotient.order;
        rep.quotient_cyclic = qm.quotient.is_cyclic();
    } catch (const InternalCheckError& e) {
        rep.failure_witnesses.push_back(std::string("fitting: ") + e.what());
    }
    rep.conclusion_holds = rep.quotient_cyclic;
    rep.theorem_respected = !rep.hypothesis_holds || rep.conclusion_holds;

    // -- suite: Schmidt structure facts plus the supersolubility criterion
    rep.lsch.checked = static_cast<int>(rep.schmidt.size());
    rep.lsch.vacuous = rep.schmidt.empty();
    if (!schmidt_detection_clean) {
        rep.lsch.pass = false;
        rep.lsch.failures.push_back("witness validation failed (see failure witnesses)");
    }
    for (const auto& c : rep.schmidt) {
        const SchmidtWitness& w = c.witness;
        const ElementSet& s_members = l.at(c.sub_index).members;
        if (derived_subgroup_in(g, l, c.sub_index) != w.sub_p) {
            rep.lsch.pass = false;
            rep.lsch.failures.push_back(sub_tag(l, c.sub_index) + ": S' != P");
        }
        const int yq = g.power(w.y, w.q);
        bool central = true;
        s_members.for_each([&](int x) {
            if (g.at(x, yq) != g.at(yq, x)) central = false;
        });
        if (!central) {
            rep.lsch.pass = false;
            rep.lsch.failures.push_back(sub_tag(l, c.sub_index) + ": y^q not central");
        }
        ElementSet yq_span = ElementSet::single(GroupTable::kIdentity);
        for (int v = yq; v != GroupTable::kIdentity; v = g.at(v, yq)) yq_span.set(v);
        ElementSet prod;
        l.at(frattini_subgroup_in(g, l, w.sub_p)).members.for_each([&](int a) {
            yq_span.for_each([&](int b) { prod.set(g.at(a, b)); });
        });
        if (!(prod == l.at(frattini_subgroup_in(g, l, c.sub_index)).members)) {
            rep.lsch.pass = false;
            rep.lsch.failures.push_back(sub_tag(l, c.sub_index) + ": Phi(S) != Phi(P) x <y^q>");
        }
        const bool supersoluble = is_supersoluble(subgroup_table(g, s_members).table);
        const bool criterion = c.p_order == w.p && (w.p - 1) % w.q == 0;
        if (supersoluble != criterion) {
            rep.lsch.pass = false;
            rep.lsch.failures.push_back(sub_tag(l, c.sub_index) +
                                        ": supersolubility criterion mismatch");
        }
    }

    // -- suite: modularity cross-oracle
    for (int i = 0; i < n; ++i) {
        if (cross_ran[static_cast<size_t>(i)]) ++rep.lsch2.checked;
        if (!cross_errors[static_cast<size_t>(i)].empty()) {
            rep.lsch2.pass = false;
            rep.lsch2.failures.push_back(cross_errors[static_cast<size_t>(i)]);
        }
    }
    rep.lsch2.vacuous = rep.lsch2.checked == 0;

    // -- suite: derived subgroup and residual of modular subgroups subnormal
    {
        std::vector<std::string> fails(static_cast<size_t>(n));
        std::vector<uint8_t> counted(static_cast<size_t>(n), 0);
        par_for(opts.exec, n, [&](int i) {
            if (!scan.modular[static_cast<size_t>(i)]) return;
            counted[static_cast<size_t>(i)] = 1;
            try {
                const int d = derived_subgroup_in(g, l, i);
                const int r = abelian_squarefree_residual_in(g, l, i);
                std::string why;
                if (!scan.subnormal[static_cast<size_t>(d)])
                    why = "derived subgroup " + sub_tag(l, d) + " not subnormal";
                else if (!scan.subnormal[static_cast<size_t>(r)])
                    why = "residual " + sub_tag(l, r) + " not subnormal";
                if (!why.empty())
                    fails[static_cast<size_t>(i)] = "modular " + sub_tag(l, i) + ": " + why;
            } catch (const InternalCheckError& e) {
                fails[static_cast<size_t>(i)] = "modular " + sub_tag(l, i) + ": " + e.what();
            }
        });
        for (int i = 0; i < n; ++i) {
            if (counted[static_cast<size_t>(i)]) ++rep.lm1.checked;
            if (!fails[static_cast<size_t>(i)].empty()) {
                rep.lm1.pass = false;
                rep.lm1.failures.push_back(fails[static_cast<size_t>(i)]);
            }
        }
        rep.lm1.vacuous = rep.lm1.checked == 0;
    }

    // -- suite: modular Schmidt subgroups sit over the Fitting subgroup, and
    //    the non-subnormal ones force a non-abelian P-group quotient
    for (const auto& c : rep.schmidt) {
        if (!c.modular) continue;
        ++rep.tsch.checked;
        const SchmidtWitness& w = c.witness;
        if (fit_idx < 0) {
            rep.tsch.pass = false;
            rep.tsch.failures.push_back(sub_tag(l, c.sub_index) + ": no Fitting subgroup");
            continue;
        }
        const int yq = g.power(w.y, w.q);
        ElementSet yq_span = ElementSet::single(GroupTable::kIdentity);
        for (int v = yq; v != GroupTable::kIdentity; v = g.at(v, yq)) yq_span.set(v);
        ElementSet prod;
        l.at(w.sub_p).members.for_each(
            [&](int a) { yq_span.for_each([&](int b) { prod.set(g.at(a, b)); }); });
        if (!prod.subset_of(l.at(fit_idx).members)) {
            rep.tsch.pass = false;
            rep.tsch.failures.push_back(sub_tag(l, c.sub_index) + ": P x <y^q> not inside F(G)");
        }
        if (!c.subnormal) {
            const QuotientMap qm = quotient_by(g, l.at(l.core(c.sub_index)).members);
            const auto pg = p_group_class(qm.quotient);
            std::string why;
            if (!pg || pg->kind != PGroupWitness::Kind::nonabelian)
                why = "G/core is not a non-abelian P-group";
            else if (pg->q != w.q)
                why = "G/core has the wrong Sylow prime";
            else if (pg->p <= w.q)
                why = "p1 <= q in G/core";
            else if (static_cast<long long>(c.order) * (qm.quotient.order / pg->q) != g.order)
                why = "|G| != |M| * p1^n";
            if (!why.empty()) {
                rep.tsch.pass = false;
                rep.tsch.failures.push_back("non-subnormal modular " + sub_tag(l, c.sub_index) +
                                            ": " + why);
            }
        }
    }
    rep.tsch.vacuous = rep.tsch.checked == 0;

    // -- suite: the subnormal-only special case, reported separately
    {
        bool all_subnormal = true;
        for (const auto& c : rep.schmidt)
            if (!c.subnormal) all_subnormal = false;
        const bool applicable = !rep.schmidt.empty() && all_subnormal && schmidt_detection_clean;
        rep.vedernikov.checked = static_cast<int>(rep.schmidt.size());
        rep.vedernikov.vacuous = !applicable;
        if (applicable && !rep.conclusion_holds) {
            rep.vedernikov.pass = false;
            rep.vedernikov.failures.push_back(
                "all Schmidt subgroups subnormal but G/F(G) is not cyclic");
        }
    }

    // -- suite: implication chain over every subgroup
    rep.implications.checked = n;
    for (int i = 0; i < n; ++i) {
        const bool normal = l.is_normal(i);
        const bool permutable = scan.permutable[static_cast<size_t>(i)] != 0;
        const bool modular = scan.modular[static_cast<size_t>(i)] != 0;
        const bool subnormal = scan.subnormal[static_cast<size_t>(i)] != 0;
        if (normal && !permutable) {
            rep.implications.pass = false;
            rep.implications.failures.push_back(sub_tag(l, i) + ": normal but not permutable");
        }
        if (permutable && !modular) {
            rep.implications.pass = false;
            rep.implications.failures.push_back(sub_tag(l, i) + ": permutable but not modular");
        }
        if (permutable && !subnormal) {
            rep.implications.pass = false;
            rep.implications.failures.push_back(sub_tag(l, i) + ": permutable but not subnormal");
        }
        if (normal && (!subnormal || scan.defect[static_cast<size_t>(i)] > 1)) {
            rep.implications.pass = false;
            rep.implications.failures.push_back(sub_tag(l, i) + ": normal with defect > 1");
        }
        if (modular && !permutable) {
            if (rep.modular_not_permutable == 0)
                rep.first_modular_not_permutable = sub_tag(l, i);
            ++rep.modular_not_permutable;
        }
        if (permutable && !normal) {
            if (rep.permutable_not_normal == 0) rep.first_permutable_not_normal = sub_tag(l, i);
            ++rep.permutable_not_normal;
        }
    }

    for (const auto* suite : {&rep.lsch, &rep.lsch2, &rep.lm1, &rep.tsch, &rep.vedernikov,
                              &rep.implications})
        for (const auto& f : suite->failures) rep.failure_witnesses.push_back(f);
    if (!rep.theorem_respected)
        rep.failure_witnesses.push_back(
            "theorem violated: hypothesis holds but G/F(G) is not cyclic");
    return rep;
}

ScanReport scan_catalog(const std::vector<std::string>& specs, const VerifyOptions& opts) {
    ScanReport out;
    out.reports.resize(specs.size());
    par_for(opts.exec, static_cast<int>(specs.size()), [&](int i) {
        const std::string& spec = specs[static_cast<size_t>(i)];
        TheoremReport& rep = out.reports[static_cast<size_t>(i)];
        try {
            const GroupTable g = build_group_spec(spec, opts.group_caps);
            rep = verify_group(g, spec, opts);
        } catch (const InternalCheckError& e) {
            // engine defect, not a capacity skip: keep it as a failed report
            rep = TheoremReport{};
            rep.spec = spec;
            rep.label = spec;
            rep.failure_witnesses.push_back(e.what());
        } catch (const Error& e) {
            rep = TheoremReport{};
            rep.spec = spec;
            rep.label = spec;
            rep.skipped = true;
            rep.skip_reason = e.what();
        }
    });

    ScanSummary& s = out.summary;
    s.groups_total = static_cast<int>(specs.size());
    for (const auto& rep : out.reports) {
        if (rep.skipped) {
            ++s.groups_skipped;
            continue;
        }
        ++s.groups_processed;
        if (!rep.all_pass()) s.all_pass = false;
        s.schmidt_total += static_cast<int>(rep.schmidt.size());
        if (rep.modular_not_permutable > 0 && s.modular_not_permutable_total == 0)
            s.first_modular_not_permutable = rep.spec + " " + rep.first_modular_not_permutable;
        if (rep.permutable_not_normal > 0 && s.permutable_not_normal_total == 0)
            s.first_permutable_not_normal = rep.spec + " " + rep.first_permutable_not_normal;
        s.modular_not_permutable_total += rep.modular_not_permutable;
        s.permutable_not_normal_total += rep.permutable_not_normal;
    }
    return out;
}

}  // namespace grouplat
