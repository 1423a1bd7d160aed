#include "grouplat/structure.hpp"

#include <algorithm>

#include "grouplat/errors.hpp"

namespace grouplat {

PrimeFactorization factorize(int n) {
    PrimeFactorization f;
    if (n <= 0) throw ValidationError("factorize expects a positive integer");
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.pairs.emplace_back(p, e);
    }
    if (n > 1) f.pairs.emplace_back(n, 1);
    return f;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int radical(int n) {
    int r = 1;
    for (auto& [p, e] : factorize(n).pairs) r *= p;
    return r;
}

bool is_squarefree(int n) { return radical(n) == n; }

int prime_power_part(int n, int p) {
    int r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

BasicPredicates basic_predicates(const GroupTable& g) {
    return BasicPredicates{g.is_abelian(), g.is_cyclic()};
}

SylowResult sylow_subgroup(const GroupTable& g, const SubgroupLattice& l, int p) {
    if (!is_prime(p) || g.order % p != 0)
        throw ValidationError("sylow: " + std::to_string(p) + " is not a prime divisor of " +
                              std::to_string(g.order));
    const int part = prime_power_part(g.order, p);
    SylowResult r;
    for (int i = 0; i < l.size(); ++i)
        if (l.at(i).order == part) {
            if (r.index < 0) r.index = i;
            ++r.count;
        }
    if (r.index < 0) throw InternalCheckError("no Sylow subgroup found (lattice incomplete?)");
    return r;
}

bool is_nilpotent_set(const GroupTable& g, const ElementSet& members) {
    const int n = members.count();
    if (n == 1) return true;
    for (auto& [p, e] : factorize(n).pairs) {
        ElementSet part;
        members.for_each([&](int x) {
            const int o = g.elem_order[static_cast<size_t>(x)];
            if (prime_power_part(o, p) == o) part.set(x);
        });
        if (part.count() != prime_power_part(n, p)) return false;
        bool closed = true;
        part.for_each([&](int x) {
            if (!closed) return;
            part.for_each([&](int y) {
                if (closed && !part.test(g.at(x, y))) closed = false;
            });
        });
        if (!closed) return false;
    }
    return true;
}

bool is_nilpotent(const GroupTable& g, const SubgroupLattice& l) {
    for (auto& [p, e] : factorize(g.order).pairs)
        if (sylow_subgroup(g, l, p).count != 1) return false;
    return true;
}

bool is_supersoluble(const GroupTable& g) {
    if (g.order == 1) return true;
    // any normal subgroup of prime order will do: if one has a supersoluble
    // quotient they all have, and a supersoluble group always has one
    for (int x = 1; x < g.order; ++x) {
        if (!is_prime(g.elem_order[static_cast<size_t>(x)])) continue;
        bool normal = true;
        ElementSet n;
        int p = x;
        while (p != GroupTable::kIdentity) {
            n.set(p);
            p = g.at(p, x);
        }
        n.set(GroupTable::kIdentity);
        for (int e = 0; e < g.order && normal; ++e)
            if (!n.test(g.conj(e, x))) normal = false;
        if (normal) return is_supersoluble(quotient_by(g, n).quotient);
    }
    return false;
}

SubgroupProperties analyze_subgroups(const GroupTable& g, const SubgroupLattice& l, Exec exec) {
    const int n = l.size();
    SubgroupProperties props;
    props.abelian.assign(static_cast<size_t>(n), 0);
    props.cyclic.assign(static_cast<size_t>(n), 0);
    props.nilpotent.assign(static_cast<size_t>(n), 0);
    par_for(exec, n, [&](int i) {
        const Subgroup& s = l.at(i);
        bool abelian = true;
        s.members.for_each([&](int x) {
            if (!abelian) return;
            s.members.for_each([&](int y) {
                if (abelian && g.at(x, y) != g.at(y, x)) abelian = false;
            });
        });
        bool cyclic = false;
        s.members.for_each([&](int x) {
            if (g.elem_order[static_cast<size_t>(x)] == s.order) cyclic = true;
        });
        props.abelian[static_cast<size_t>(i)] = abelian ? 1 : 0;
        props.cyclic[static_cast<size_t>(i)] = cyclic ? 1 : 0;
        props.nilpotent[static_cast<size_t>(i)] = is_nilpotent_set(g, s.members) ? 1 : 0;
    });
    return props;
}

ElementSet derived_set(const GroupTable& g, const ElementSet& within) {
    std::vector<int> comms;
    within.for_each([&](int x) {
        within.for_each([&](int y) {
            // [x,y] = x y x^-1 y^-1
            comms.push_back(g.at(g.at(g.at(x, y), g.inv[static_cast<size_t>(x)]),
                                 g.inv[static_cast<size_t>(y)]));
        });
    });
    return generated_subgroup(g, comms);
}

int derived_subgroup(const GroupTable& g, const SubgroupLattice& l) {
    return derived_subgroup_in(g, l, l.top_index);
}

int derived_subgroup_in(const GroupTable& g, const SubgroupLattice& l, int h) {
    const int idx = l.index_of(derived_set(g, l.at(h).members));
    if (idx < 0) throw InternalCheckError("derived subgroup not in lattice");
    return idx;
}

int frattini_subgroup(const GroupTable& g, const SubgroupLattice& l) {
    return frattini_subgroup_in(g, l, l.top_index);
}

int frattini_subgroup_in(const GroupTable&, const SubgroupLattice& l, int h) {
    // maximal subgroups of h: proper subgroups of h not below another one
    std::vector<int> below;
    for (int i = 0; i < l.size(); ++i)
        if (i != h && l.leq(i, h)) below.push_back(i);
    int frat = h;  // h itself when there is no proper subgroup (trivial h)
    bool any = false;
    for (int i : below) {
        bool maximal = true;
        for (int j : below)
            if (j != i && l.leq(i, j)) {
                maximal = false;
                break;
            }
        if (maximal) {
            frat = any ? l.meet(frat, i) : i;
            any = true;
        }
    }
    return frat;
}

int fitting_subgroup(const GroupTable& g, const SubgroupLattice& l) {
    int fit = -1;
    for (int i = l.size() - 1; i >= 0; --i)
        if (l.is_normal(i) && is_nilpotent_set(g, l.at(i).members)) {
            fit = i;
            break;
        }
    if (fit < 0) throw InternalCheckError("no normal nilpotent subgroup (not even the trivial one)");
    for (int i = 0; i < l.size(); ++i)
        if (l.is_normal(i) && !l.leq(i, fit) && is_nilpotent_set(g, l.at(i).members))
            throw InternalCheckError("Fitting subgroup not unique: found normal nilpotent subgroup "
                                     "outside the largest one");
    return fit;
}

bool quotient_is_abelian_squarefree(const GroupTable& g, const ElementSet& h, const ElementSet& n) {
    if (!derived_set(g, h).subset_of(n)) return false;  // abelian quotient
    bool ok = true;
    h.for_each([&](int x) {
        if (!ok) return;
        // order of xN divides rad(order of x); squarefree iff this power dies
        if (!n.test(g.power(x, radical(g.elem_order[static_cast<size_t>(x)])))) ok = false;
    });
    return ok;
}

int abelian_squarefree_residual(const GroupTable& g, const SubgroupLattice& l) {
    const int r = abelian_squarefree_residual_in(g, l, l.top_index);
    // independent route: build the quotient and test it directly
    const QuotientMap qm = quotient_by(g, l.at(r).members);
    bool ok = qm.quotient.is_abelian();
    for (int x = 0; x < qm.quotient.order && ok; ++x)
        if (!is_squarefree(qm.quotient.elem_order[static_cast<size_t>(x)])) ok = false;
    if (!ok)
        throw InternalCheckError("residual quotient is not abelian of squarefree exponent");
    return r;
}

int abelian_squarefree_residual_in(const GroupTable& g, const SubgroupLattice& l, int h) {
    const ElementSet& hs = l.at(h).members;
    int res = h;
    for (int i = 0; i < l.size(); ++i) {
        if (!l.leq(i, h)) continue;
        // normal inside h?
        bool normal = true;
        hs.for_each([&](int e) {
            if (normal && l.conj_sub(e, i) != i) normal = false;
        });
        if (!normal) continue;
        if (quotient_is_abelian_squarefree(g, hs, l.at(i).members)) res = l.meet(res, i);
    }
    if (!quotient_is_abelian_squarefree(g, hs, l.at(res).members))
        throw InternalCheckError("residual intersection fell out of the class");
    return res;
}

}  // namespace grouplat
