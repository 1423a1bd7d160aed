#include "grouplat/lattice.hpp"

#include <algorithm>

#include "grouplat/errors.hpp"

namespace grouplat {

namespace {

ElementSet cyclic_span(const GroupTable& g, int x) {
    ElementSet s = ElementSet::single(GroupTable::kIdentity);
    int p = x;
    while (p != GroupTable::kIdentity) {
        s.set(p);
        p = g.at(p, x);
    }
    return s;
}

// closure of the union of two subgroups
ElementSet join_sets(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
    if (b.subset_of(a)) return a;
    if (a.subset_of(b)) return b;
    return generated_subgroup(g, a | b);
}

void check_sub_cap(size_t count, int cap, const std::string& label) {
    if (static_cast<int>(count) > cap)
        throw CapacityError("subgroup count of '" + label + "' exceeds cap " + std::to_string(cap));
}

}  // namespace

SubgroupLattice enumerate_subgroups(const GroupTable& g, const LatticeOptions& opts) {
    if (g.order > opts.caps.max_order)
        throw CapacityError("group '" + g.label + "' of order " + std::to_string(g.order) +
                            " exceeds lattice order cap " + std::to_string(opts.caps.max_order));
    if (opts.caps.max_order > ElementSet::kCapacity)
        throw CapacityError("lattice order cap exceeds element set capacity");

    // seed: trivial subgroup plus every cyclic subgroup
    std::unordered_map<ElementSet, int, ElementSetHash> known;
    std::vector<ElementSet> all;
    auto add = [&](const ElementSet& s) -> bool {
        if (known.emplace(s, static_cast<int>(all.size())).second) {
            all.push_back(s);
            return true;
        }
        return false;
    };
    add(ElementSet::single(GroupTable::kIdentity));
    for (int x = 1; x < g.order; ++x) add(cyclic_span(g, x));
    check_sub_cap(all.size(), opts.caps.max_subgroups, g.label);

    // close under pairwise joins, frontier round by round
    size_t old_count = 0;
    while (old_count < all.size()) {
        const size_t frontier_begin = old_count;
        old_count = all.size();
        std::vector<std::pair<int, int>> pairs;
        for (size_t b = frontier_begin; b < old_count; ++b)
            for (size_t a = 0; a < b; ++a)
                pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));

        std::vector<ElementSet> results(pairs.size());
        par_for(opts.exec, static_cast<int>(pairs.size()), [&](int i) {
            const auto [a, b] = pairs[static_cast<size_t>(i)];
            results[static_cast<size_t>(i)] =
                join_sets(g, all[static_cast<size_t>(a)], all[static_cast<size_t>(b)]);
        });
        for (const ElementSet& s : results) {
            add(s);
            check_sub_cap(all.size(), opts.caps.max_subgroups, g.label);
        }
    }

    SubgroupLattice lat;
    std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
        const int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return ElementSet::compare(a, b) < 0;
    });
    lat.subs.reserve(all.size());
    for (const ElementSet& s : all) lat.subs.push_back(Subgroup{s, s.count()});
    const int n = lat.size();
    for (int i = 0; i < n; ++i) lat.index_.emplace(lat.subs[static_cast<size_t>(i)].members, i);
    lat.trivial_index = 0;
    lat.top_index = n - 1;
    if (lat.at(0).order != 1 || lat.at(n - 1).order != g.order)
        throw InternalCheckError("lattice missing trivial subgroup or whole group: " + g.label);

    // containment matrix
    lat.leq_.assign(static_cast<size_t>(n) * n, 0);
    par_for(opts.exec, n, [&](int a) {
        for (int b = 0; b < n; ++b)
            lat.leq_[static_cast<size_t>(a) * n + b] =
                lat.at(a).members.subset_of(lat.at(b).members) ? 1 : 0;
    });

    // meet and join tables
    lat.meet_.assign(static_cast<size_t>(n) * n, -1);
    lat.join_.assign(static_cast<size_t>(n) * n, -1);
    par_for(opts.exec, n, [&](int a) {
        for (int b = 0; b <= a; ++b) {
            int m, j;
            if (lat.leq(a, b)) {
                m = a;
                j = b;
            } else if (lat.leq(b, a)) {
                m = b;
                j = a;
            } else {
                m = lat.index_of(lat.at(a).members & lat.at(b).members);
                j = lat.index_of(join_sets(g, lat.at(a).members, lat.at(b).members));
            }
            if (m < 0 || j < 0) throw InternalCheckError("meet/join fell outside lattice: " + g.label);
            lat.meet_[static_cast<size_t>(a) * n + b] = m;
            lat.meet_[static_cast<size_t>(b) * n + a] = m;
            lat.join_[static_cast<size_t>(a) * n + b] = j;
            lat.join_[static_cast<size_t>(b) * n + a] = j;
        }
    });

    // conjugation action of every element on the lattice
    lat.conj_.assign(static_cast<size_t>(g.order) * n, -1);
    par_for(opts.exec, n, [&](int h) {
        for (int e = 0; e < g.order; ++e) {
            ElementSet c;
            lat.at(h).members.for_each([&](int x) { c.set(g.conj(e, x)); });
            const int idx = lat.index_of(c);
            if (idx < 0) throw InternalCheckError("conjugate fell outside lattice: " + g.label);
            lat.conj_[static_cast<size_t>(e) * n + h] = idx;
        }
    });

    // normality, cores, normal closures
    lat.normal_.assign(static_cast<size_t>(n), 0);
    lat.core_.assign(static_cast<size_t>(n), -1);
    lat.closure_.assign(static_cast<size_t>(n), -1);
    par_for(opts.exec, n, [&](int h) {
        bool normal = true;
        int core = h, clo = h;
        for (int e = 0; e < g.order; ++e) {
            const int c = lat.conj_sub(e, h);
            if (c != h) normal = false;
            core = lat.meet(core, c);
            clo = lat.join(clo, c);
        }
        lat.normal_[static_cast<size_t>(h)] = normal ? 1 : 0;
        lat.core_[static_cast<size_t>(h)] = core;
        lat.closure_[static_cast<size_t>(h)] = clo;
    });
    return lat;
}

std::vector<ElementSet> enumerate_subgroups_reference(const GroupTable& g, const LatticeCaps& caps) {
    if (g.order > caps.max_order)
        throw CapacityError("group order exceeds lattice order cap");
    std::unordered_map<ElementSet, int, ElementSetHash> known;
    std::vector<ElementSet> all;
    auto add = [&](const ElementSet& s) {
        if (known.emplace(s, static_cast<int>(all.size())).second) {
            all.push_back(s);
            check_sub_cap(all.size(), caps.max_subgroups, g.label);
        }
    };
    add(ElementSet::single(GroupTable::kIdentity));
    for (int x = 1; x < g.order; ++x) add(cyclic_span(g, x));
    for (size_t b = 1; b < all.size(); ++b)
        for (size_t a = 0; a < b; ++a) add(join_sets(g, all[a], all[b]));
    std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
        const int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return ElementSet::compare(a, b) < 0;
    });
    return all;
}

std::vector<int> SubgroupLattice::normal_subgroups() const {
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
        if (is_normal(i)) v.push_back(i);
    return v;
}

Subgroup meet(const SubgroupLattice& l, const Subgroup& a, const Subgroup& b) {
    const int ia = l.index_of(a.members), ib = l.index_of(b.members);
    if (ia < 0 || ib < 0) throw ValidationError("meet of sets not in the lattice");
    return l.at(l.meet(ia, ib));
}

Subgroup join(const SubgroupLattice& l, const Subgroup& a, const Subgroup& b) {
    const int ia = l.index_of(a.members), ib = l.index_of(b.members);
    if (ia < 0 || ib < 0) throw ValidationError("join of sets not in the lattice");
    return l.at(l.join(ia, ib));
}

int normal_core(const GroupTable&, const SubgroupLattice& l, int h) { return l.core(h); }

int normal_closure(const GroupTable&, const SubgroupLattice& l, int h) {
    return l.normal_closure(h);
}

int center_subgroup(const GroupTable& g, const SubgroupLattice& l) {
    const int idx = l.index_of(centralizing_set(g, g.all_elements()));
    if (idx < 0) throw InternalCheckError("center not found in lattice");
    return idx;
}

}  // namespace grouplat
