#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grouplat/catalog.hpp"
#include "grouplat/classify.hpp"
#include "grouplat/errors.hpp"
#include "oracles.hpp"

using namespace grouplat;

namespace {

struct Ctx {
    GroupTable g;
    SubgroupLattice l;
    SubgroupProperties props;
    explicit Ctx(const std::string& spec)
        : g(build_group_spec(spec)), l(enumerate_subgroups(g)), props(analyze_subgroups(g, l)) {}

    std::vector<int> schmidt_indices() {
        std::vector<int> v;
        for (int i = 0; i < l.size(); ++i)
            if (schmidt_analyze(g, l, i, &props)) v.push_back(i);
        return v;
    }
};

int first_of_order(const SubgroupLattice& l, int order, bool normal_required = false) {
    for (int i = 0; i < l.size(); ++i)
        if (l.at(i).order == order && (!normal_required || l.is_normal(i))) return i;
    return -1;
}

}  // namespace

TEST_CASE("schmidt detection on whole groups") {
    Ctx s3("symmetric:3");
    const auto w = schmidt_analyze(s3.g, s3.l, s3.l.top_index, &s3.props);
    REQUIRE(w.has_value());
    CHECK(w->p == 3);
    CHECK(w->q == 2);
    CHECK(s3.l.at(w->sub_p).order == 3);
    CHECK(s3.l.at(w->sub_q).order == 2);
    CHECK(s3.g.elem_order[static_cast<size_t>(w->y)] == 2);

    Ctx a4("alternating:4");
    const auto wa = schmidt_analyze(a4.g, a4.l, a4.l.top_index, &a4.props);
    REQUIRE(wa.has_value());
    CHECK(wa->p == 2);
    CHECK(wa->q == 3);
    CHECK(a4.l.at(wa->sub_p).order == 4);

    // nilpotent groups are never Schmidt groups
    Ctx c6("cyclic:6");
    CHECK_FALSE(schmidt_analyze(c6.g, c6.l, c6.l.top_index, &c6.props).has_value());
    const GroupTable q8 = quaternion_group();
    const SubgroupLattice lq = enumerate_subgroups(q8);
    CHECK_FALSE(schmidt_analyze(q8, lq, lq.top_index).has_value());

    // the order-30 dihedral group contains a non-nilpotent proper subgroup
    Ctx d30("dihedral:30");
    CHECK_FALSE(schmidt_analyze(d30.g, d30.l, d30.l.top_index, &d30.props).has_value());
}

TEST_CASE("schmidt groups with a nontrivial central factor or nonabelian kernel") {
    Ctx q12("semidirect:3:4:2");  // C3 x| C4, y^2 central
    const auto w = schmidt_analyze(q12.g, q12.l, q12.l.top_index, &q12.props);
    REQUIRE(w.has_value());
    CHECK(w->p == 3);
    CHECK(w->q == 2);
    CHECK(q12.l.at(w->sub_q).order == 4);
    CHECK(q12.g.elem_order[static_cast<size_t>(q12.g.power(w->y, 2))] == 2);

    Ctx sl23("semidirect:sl23");  // Q8 x| C3, Phi(P) = Z(Q8) nontrivial
    const auto w2 = schmidt_analyze(sl23.g, sl23.l, sl23.l.top_index, &sl23.props);
    REQUIRE(w2.has_value());
    CHECK(w2->p == 2);
    CHECK(w2->q == 3);
    CHECK(sl23.l.at(w2->sub_p).order == 8);

    Ctx f21("semidirect:7:3:2");
    const auto w3 = schmidt_analyze(f21.g, f21.l, f21.l.top_index, &f21.props);
    REQUIRE(w3.has_value());
    CHECK(w3->p == 7);
    CHECK(w3->q == 3);
}

TEST_CASE("schmidt subgroup scan of D30 finds five of order 6 and three of order 10") {
    Ctx d30("dihedral:30");
    int order6 = 0, order10 = 0, other = 0;
    for (int i : d30.schmidt_indices()) {
        const int o = d30.l.at(i).order;
        if (o == 6) ++order6;
        else if (o == 10) ++order10;
        else ++other;
    }
    CHECK(order6 == 5);
    CHECK(order10 == 3);
    CHECK(other == 0);
}

TEST_CASE("maximal-subgroup detection equals the all-proper-subgroups scan") {
    for (const char* spec : {"symmetric:4", "dihedral:30", "dihedral:48", "semidirect:sl23",
                             "alternating:4", "cyclic:48", "semidirect:5:4:2"}) {
        Ctx c(spec);
        REQUIRE(c.g.order <= 48);
        for (int i = 0; i < c.l.size(); ++i) {
            bool all_proper_nilpotent = true;
            for (int j = 0; j < c.l.size(); ++j)
                if (j != i && c.l.leq(j, i) && !c.props.nilpotent[static_cast<size_t>(j)])
                    all_proper_nilpotent = false;
            const bool schmidt_by_definition =
                !c.props.nilpotent[static_cast<size_t>(i)] && all_proper_nilpotent;
            CHECK(schmidt_by_definition == schmidt_analyze(c.g, c.l, i, &c.props).has_value());
        }
    }
}

TEST_CASE("p_group_class") {
    const GroupTable v4 = build_group_spec("product:cyclic:2,cyclic:2");
    const auto wv = p_group_class(v4);
    REQUIRE(wv.has_value());
    CHECK(wv->kind == PGroupWitness::Kind::elementary_abelian);
    CHECK(wv->p == 2);
    CHECK(wv->n == 1);

    const auto ws = p_group_class(symmetric_group(3));
    REQUIRE(ws.has_value());
    CHECK(ws->kind == PGroupWitness::Kind::nonabelian);
    CHECK(ws->p == 3);
    CHECK(ws->n == 1);
    CHECK(ws->q == 2);
    CHECK(ws->power_exponent == 2);  // inversion

    const auto wd = p_group_class(dihedral_group(10));
    REQUIRE(wd.has_value());
    CHECK(wd->p == 5);
    CHECK(wd->power_exponent == 4);

    const auto wf = p_group_class(build_group_spec("semidirect:7:3:2"));
    REQUIRE(wf.has_value());
    CHECK(wf->p == 7);
    CHECK(wf->q == 3);
    CHECK(wf->power_exponent == 2);

    // A4: the 3-element permutes the involutions, no power map
    CHECK_FALSE(p_group_class(alternating_group(4)).has_value());
    // D8: one prime, not elementary abelian
    CHECK_FALSE(p_group_class(dihedral_group(8)).has_value());
    CHECK_FALSE(p_group_class(cyclic_group(6)).has_value());
    CHECK_FALSE(p_group_class(cyclic_group(1)).has_value());
    CHECK_FALSE(p_group_class(build_group_spec("semidirect:5:4:2")).has_value());
    CHECK_FALSE(p_group_class(build_group_spec("semidirect:3:4:2")).has_value());
}

TEST_CASE("power exponent is uniform across the base") {
    for (const char* spec : {"symmetric:3", "dihedral:10", "dihedral:14", "semidirect:7:3:2"}) {
        const GroupTable g = build_group_spec(spec);
        const auto w = p_group_class(g);
        REQUIRE(w.has_value());
        REQUIRE(w->kind == PGroupWitness::Kind::nonabelian);
        int y = -1;
        for (int x = 0; x < g.order && y < 0; ++x)
            if (g.elem_order[static_cast<size_t>(x)] == w->q) {
                // outside the p-part
                const int o = g.elem_order[static_cast<size_t>(x)];
                if (o % w->p != 0) y = x;
            }
        REQUIRE(y >= 0);
        for (int a = 0; a < g.order; ++a) {
            const int o = g.elem_order[static_cast<size_t>(a)];
            if (prime_power_part(o, w->p) != o) continue;
            CHECK(g.conj(y, a) == g.power(a, w->power_exponent));
        }
    }
}

TEST_CASE("subnormality") {
    Ctx s4("symmetric:4");
    // normal subgroups have defect <= 1
    for (int i : s4.l.normal_subgroups()) {
        const SubnormalResult r = is_subnormal(s4.g, s4.l, i);
        CHECK(r.subnormal);
        CHECK(r.defect <= 1);
    }
    CHECK(is_subnormal(s4.g, s4.l, s4.l.top_index).defect == 0);

    // a double transposition subgroup has defect 2, via the Klein subgroup
    bool saw_defect2 = false, saw_nonsub = false;
    for (int i = 0; i < s4.l.size(); ++i) {
        if (s4.l.at(i).order == 2) {
            const SubnormalResult r = is_subnormal(s4.g, s4.l, i);
            if (r.subnormal) {
                CHECK(r.defect == 2);
                saw_defect2 = true;
            }
        }
        if (s4.l.at(i).order == 6) {
            CHECK_FALSE(is_subnormal(s4.g, s4.l, i).subnormal);
            saw_nonsub = true;
        }
    }
    CHECK(saw_defect2);
    CHECK(saw_nonsub);

    // D6 inside D30 is not subnormal
    Ctx d30("dihedral:30");
    for (int i = 0; i < d30.l.size(); ++i)
        if (d30.l.at(i).order == 6) CHECK_FALSE(is_subnormal(d30.g, d30.l, i).subnormal);
}

TEST_CASE("permutability matches the elementwise oracle") {
    for (const char* spec : {"symmetric:3", "symmetric:4", "dihedral:16", "semidirect:8:2:5",
                             "semidirect:3:4:2", "cyclic:24", "alternating:4"}) {
        Ctx c(spec);
        for (int i = 0; i < c.l.size(); ++i)
            CHECK(is_permutable(c.g, c.l, i) == oracle::is_permutable_elementwise(c.g, c.l, i));
    }
}

TEST_CASE("permutability basics") {
    Ctx c12("cyclic:12");
    for (int i = 0; i < c12.l.size(); ++i) CHECK(is_permutable(c12.g, c12.l, i));

    Ctx s3("symmetric:3");
    const int t = first_of_order(s3.l, 2);
    CHECK_FALSE(is_permutable(s3.g, s3.l, t));
    CHECK(oracle::product_set(s3.g, s3.l.at(t).members,
                              s3.l.at(first_of_order(s3.l, 2) + 1).members)
              .size() == 4);

    // the modular group of order 16 has every subgroup permutable, some not normal
    Ctx m16("semidirect:8:2:5");
    int permutable_not_normal = 0;
    for (int i = 0; i < m16.l.size(); ++i) {
        CHECK(is_permutable(m16.g, m16.l, i));
        if (!m16.l.is_normal(i)) ++permutable_not_normal;
    }
    CHECK(permutable_not_normal > 0);
}

TEST_CASE("direct modularity: knowns") {
    Ctx s3("symmetric:3");
    for (int i = 0; i < s3.l.size(); ++i) CHECK(is_modular_direct(s3.g, s3.l, i));

    Ctx s4("symmetric:4");
    int transpositions_checked = 0;
    for (int i = 0; i < s4.l.size(); ++i) {
        if (s4.l.is_normal(i)) CHECK(is_modular_direct(s4.g, s4.l, i));
        // transpositions: order-2 subgroups whose closure is all of S4
        if (s4.l.at(i).order == 2 && s4.l.normal_closure(i) == s4.l.top_index) {
            CHECK_FALSE(is_modular_direct(s4.g, s4.l, i));
            ++transpositions_checked;
        }
        if (s4.l.at(i).order == 6) CHECK_FALSE(is_modular_direct(s4.g, s4.l, i));
    }
    CHECK(transpositions_checked == 6);

    Ctx d30("dihedral:30");
    for (int i = 0; i < d30.l.size(); ++i)
        if (d30.l.at(i).order == 6 || d30.l.at(i).order == 10)
            CHECK(is_modular_direct(d30.g, d30.l, i));
}

TEST_CASE("characterized modularity: D6 inside D30") {
    Ctx d30("dihedral:30");
    QuotientContextCache cache(d30.g, d30.l);
    bool saw = false;
    for (int i = 0; i < d30.l.size(); ++i) {
        if (d30.l.at(i).order != 6) continue;
        const ModularityVerdict v = modularity_verdict(d30.g, d30.l, i, &cache);
        CHECK(v.direct);
        CHECK(v.characterized);
        REQUIRE(v.decomposition.has_value());
        CHECK(v.decomposition->r == 1);
        CHECK(v.decomposition->core_order == 3);
        CHECK(v.decomposition->factor_orders == std::vector<int>{10});
        CHECK(v.decomposition->factor_sylow_orders == std::vector<int>{2});
        CHECK(v.decomposition->tail_order == 1);
        // over-groups of the core in G: S1 is all of G, Q1 is M itself, T is the core
        CHECK(v.decomposition->factor_indices == std::vector<int>{d30.l.top_index});
        CHECK(v.decomposition->sylow_indices == std::vector<int>{i});
        CHECK(v.decomposition->tail_index == d30.l.core(i));
        saw = true;
    }
    CHECK(saw);

    // D10 copies: core C5, quotient of order 6
    for (int i = 0; i < d30.l.size(); ++i) {
        if (d30.l.at(i).order != 10) continue;
        const ModularityVerdict v = modularity_verdict(d30.g, d30.l, i, &cache);
        CHECK(v.characterized);
        REQUIRE(v.decomposition.has_value());
        CHECK(v.decomposition->core_order == 5);
        CHECK(v.decomposition->factor_orders == std::vector<int>{6});
    }
}

TEST_CASE("characterized modularity: permutable subgroups take the r = 0 branch") {
    Ctx m16("semidirect:8:2:5");
    QuotientContextCache cache(m16.g, m16.l);
    for (int i = 0; i < m16.l.size(); ++i) {
        const ModularityVerdict v = modularity_verdict(m16.g, m16.l, i, &cache);
        CHECK(v.characterized);
        REQUIRE(v.decomposition.has_value());
        CHECK(v.decomposition->r == 0);
    }
}

TEST_CASE("the Sylow 2-subgroups of S4 are modular but not permutable") {
    // Core V4; S4/V4 is the order-6 non-abelian P-group and D8/V4 its
    // non-normal Sylow 2-subgroup, so both routes agree on modularity.
    Ctx s4("symmetric:4");
    QuotientContextCache cache(s4.g, s4.l);
    int checked = 0;
    for (int i = 0; i < s4.l.size(); ++i) {
        if (s4.l.at(i).order != 8) continue;
        ++checked;
        CHECK_FALSE(s4.l.is_normal(i));
        CHECK_FALSE(is_permutable(s4.g, s4.l, i));
        CHECK(is_modular_direct(s4.g, s4.l, i));
        const ModularityVerdict v = modularity_verdict(s4.g, s4.l, i, &cache);
        CHECK(v.characterized);
        REQUIRE(v.decomposition.has_value());
        CHECK(v.decomposition->r == 1);
        CHECK(v.decomposition->core_order == 4);
        CHECK(v.decomposition->factor_orders == std::vector<int>{6});
    }
    CHECK(checked == 3);
}

TEST_CASE("characterized modularity rejects S3 inside S4") {
    Ctx s4("symmetric:4");
    QuotientContextCache cache(s4.g, s4.l);
    for (int i = 0; i < s4.l.size(); ++i) {
        if (s4.l.at(i).order != 6) continue;
        const ModularityVerdict v = modularity_verdict(s4.g, s4.l, i, &cache);
        CHECK_FALSE(v.characterized);
        CHECK_FALSE(v.decomposition.has_value());
    }
}

TEST_CASE("cross-oracle: both modularity routes agree on every subgroup") {
    for (const char* spec :
         {"cyclic:6", "symmetric:3", "dihedral:8", "cyclic:12", "alternating:4", "dihedral:12",
          "semidirect:3:4:2", "semidirect:8:2:5", "semidirect:5:4:2", "semidirect:7:3:2",
          "symmetric:4", "semidirect:sl23", "dihedral:30", "dihedral:18",
          "product:cyclic:2,cyclic:2", "product:cyclic:2,symmetric:3", "cyclic:48",
          "product:cyclic:3,symmetric:3"}) {
        Ctx c(spec);
        QuotientContextCache cache(c.g, c.l);
        for (int i = 0; i < c.l.size(); ++i) CHECK_NOTHROW(modularity_verdict(c.g, c.l, i, &cache));
    }
}

TEST_CASE("implication chain on a mixed sample") {
    for (const char* spec : {"symmetric:4", "dihedral:30", "semidirect:8:2:5", "semidirect:sl23",
                             "alternating:5"}) {
        Ctx c(spec);
        for (int i = 0; i < c.l.size(); ++i) {
            const bool normal = c.l.is_normal(i);
            const bool permutable = is_permutable(c.g, c.l, i);
            const bool modular = is_modular_direct(c.g, c.l, i);
            const SubnormalResult sn = is_subnormal(c.g, c.l, i);
            if (normal) CHECK(permutable);
            if (permutable) CHECK(modular);
            if (permutable) CHECK(sn.subnormal);
            if (normal) CHECK(sn.defect <= 1);
        }
    }
}

TEST_CASE("degenerate inputs: the trivial subgroup and the whole group") {
    Ctx s4("symmetric:4");
    for (int i : {s4.l.trivial_index, s4.l.top_index}) {
        CHECK(s4.l.is_normal(i));
        CHECK(is_permutable(s4.g, s4.l, i));
        CHECK(is_modular_direct(s4.g, s4.l, i));
        const SubnormalResult r = is_subnormal(s4.g, s4.l, i);
        CHECK(r.subnormal);
        CHECK(r.defect <= 1);
    }
    CHECK_FALSE(schmidt_analyze(s4.g, s4.l, s4.l.trivial_index, &s4.props).has_value());
}
