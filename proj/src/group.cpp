#include "grouplat/group.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "grouplat/errors.hpp"

namespace grouplat {

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (at(a, b) != at(b, a)) return false;
    return true;
}

bool GroupTable::is_cyclic() const {
    for (int x = 0; x < order; ++x)
        if (elem_order[static_cast<size_t>(x)] == order) return true;
    return false;
}

int element_order(const GroupTable& g, int x) {
    int k = 1;
    int p = x;
    while (p != GroupTable::kIdentity) {
        p = g.at(p, x);
        ++k;
        if (k > g.order) throw InternalCheckError("element order exceeds group order");
    }
    return k;
}

void validate_table(const GroupTable& g, bool force_assoc) {
    const int n = g.order;
    if (n <= 0) throw InternalCheckError("empty group table");
    if (g.mul.size() != static_cast<size_t>(n) * n || g.inv.size() != static_cast<size_t>(n) ||
        g.elem_order.size() != static_cast<size_t>(n))
        throw InternalCheckError("group table shape mismatch: " + g.label);
    for (int v : g.mul)
        if (v < 0 || v >= n) throw InternalCheckError("table entry out of range: " + g.label);
    for (int x = 0; x < n; ++x) {
        if (g.at(GroupTable::kIdentity, x) != x || g.at(x, GroupTable::kIdentity) != x)
            throw InternalCheckError("element 0 is not a two-sided identity: " + g.label);
        const int ix = g.inv[static_cast<size_t>(x)];
        if (g.at(x, ix) != GroupTable::kIdentity || g.at(ix, x) != GroupTable::kIdentity)
            throw InternalCheckError("inverse table wrong at " + std::to_string(x) + ": " + g.label);
        if (g.elem_order[static_cast<size_t>(x)] != element_order(g, x))
            throw InternalCheckError("element order table wrong: " + g.label);
        if (n % g.elem_order[static_cast<size_t>(x)] != 0)
            throw InternalCheckError("element order does not divide group order: " + g.label);
    }
    if (n <= 200 || force_assoc) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = g.at(a, b);
                for (int c = 0; c < n; ++c)
                    if (g.at(ab, c) != g.at(a, g.at(b, c)))
                        throw InternalCheckError("associativity fails: " + g.label);
            }
    }
}

static void finish_table(GroupTable& g) {
    const int n = g.order;
    g.inv.assign(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g.at(x, y) == GroupTable::kIdentity && g.at(y, x) == GroupTable::kIdentity) {
                g.inv[static_cast<size_t>(x)] = y;
                break;
            }
    for (int x = 0; x < n; ++x)
        if (g.inv[static_cast<size_t>(x)] < 0)
            throw InternalCheckError("no inverse for element " + std::to_string(x) + ": " + g.label);
    g.elem_order.resize(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) g.elem_order[static_cast<size_t>(x)] = element_order(g, x);
    validate_table(g);
}

GroupTable table_from_mul(int order, std::vector<int> mul, std::string label) {
    GroupTable g;
    g.order = order;
    g.label = std::move(label);
    g.mul = std::move(mul);
    finish_table(g);
    return g;
}

GroupTable closure_from_generators(const std::vector<Permutation>& gens, int degree,
                                   std::string label, const GroupCaps& caps) {
    if (degree <= 0) throw ValidationError("permutation degree must be positive");
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree() != degree)
            throw ValidationError("generator " + std::to_string(i + 1) + " has wrong degree");
        if (!gens[i].is_bijection())
            throw ValidationError("generator " + std::to_string(i + 1) + " is not a bijection");
    }

    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::map<Permutation, int> index{{elems[0], 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
        const Permutation cur = elems[head];  // copy: elems may reallocate
        for (const Permutation& gen : gens) {
            Permutation next = cur.compose(gen);
            if (index.emplace(next, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (static_cast<int>(elems.size()) > caps.max_order)
                    throw CapacityError("closure of '" + label + "' exceeds order cap " +
                                        std::to_string(caps.max_order));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    GroupTable g;
    g.order = n;
    g.label = std::move(label);
    g.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(elems[static_cast<size_t>(a)].compose(elems[static_cast<size_t>(b)]));
            if (it == index.end()) throw InternalCheckError("closure not closed: " + g.label);
            g.mul[static_cast<size_t>(a) * n + b] = it->second;
        }
    finish_table(g);
    return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, const GroupCaps& caps) {
    const long long n = static_cast<long long>(g.order) * h.order;
    if (n > caps.max_order)
        throw CapacityError("direct product order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(caps.max_order));
    GroupTable p;
    p.order = static_cast<int>(n);
    p.label = "product:" + g.label + "," + h.label;
    p.mul.resize(static_cast<size_t>(n) * n);
    const int m = h.order;
    for (int a1 = 0; a1 < g.order; ++a1)
        for (int b1 = 0; b1 < m; ++b1)
            for (int a2 = 0; a2 < g.order; ++a2)
                for (int b2 = 0; b2 < m; ++b2)
                    p.mul[static_cast<size_t>(a1 * m + b1) * n + (a2 * m + b2)] =
                        g.at(a1, a2) * m + h.at(b1, b2);
    finish_table(p);
    return p;
}

static void validate_semidirect(const SemidirectSpec& spec) {
    const GroupTable& a = spec.base;
    const GroupTable& q = spec.acting;
    if (static_cast<int>(spec.action.size()) != q.order)
        throw ValidationError("semidirect action must have one entry per acting element");
    for (int e = 0; e < q.order; ++e) {
        const auto& img = spec.action[static_cast<size_t>(e)];
        Permutation perm{img};
        if (perm.degree() != a.order || !perm.is_bijection())
            throw ValidationError("action of element " + std::to_string(e) +
                                  " is not a permutation of the base group");
        for (int x = 0; x < a.order; ++x)
            for (int y = 0; y < a.order; ++y)
                if (img[static_cast<size_t>(a.at(x, y))] !=
                    a.at(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]))
                    throw ValidationError("action of element " + std::to_string(e) +
                                          " is not an automorphism of the base group");
    }
    for (int x = 0; x < a.order; ++x)
        if (spec.action[GroupTable::kIdentity][static_cast<size_t>(x)] != x)
            throw ValidationError("action of the identity is not the identity map");
    for (int e1 = 0; e1 < q.order; ++e1)
        for (int e2 = 0; e2 < q.order; ++e2) {
            const auto& a1 = spec.action[static_cast<size_t>(e1)];
            const auto& a2 = spec.action[static_cast<size_t>(e2)];
            const auto& a12 = spec.action[static_cast<size_t>(q.at(e1, e2))];
            for (int x = 0; x < a.order; ++x)
                if (a12[static_cast<size_t>(x)] != a1[static_cast<size_t>(a2[static_cast<size_t>(x)])])
                    throw ValidationError("action is not a homomorphism into Aut(base)");
        }
}

GroupTable semidirect_product(const SemidirectSpec& spec, const GroupCaps& caps) {
    validate_semidirect(spec);
    const GroupTable& a = spec.base;
    const GroupTable& q = spec.acting;
    const long long n = static_cast<long long>(a.order) * q.order;
    if (n > caps.max_order)
        throw CapacityError("semidirect product order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(caps.max_order));
    GroupTable g;
    g.order = static_cast<int>(n);
    g.label = "semidirect:" + a.label + ":" + q.label;
    g.mul.resize(static_cast<size_t>(n) * n);
    const int m = q.order;
    for (int a1 = 0; a1 < a.order; ++a1)
        for (int q1 = 0; q1 < m; ++q1)
            for (int a2 = 0; a2 < a.order; ++a2)
                for (int q2 = 0; q2 < m; ++q2) {
                    const int moved = spec.action[static_cast<size_t>(q1)][static_cast<size_t>(a2)];
                    g.mul[static_cast<size_t>(a1 * m + q1) * n + (a2 * m + q2)] =
                        a.at(a1, moved) * m + q.at(q1, q2);
                }
    finish_table(g);
    return g;
}

static bool set_is_subgroup(const GroupTable& g, const ElementSet& s) {
    if (!s.test(GroupTable::kIdentity)) return false;
    bool ok = true;
    s.for_each([&](int x) {
        if (!ok) return;
        s.for_each([&](int y) {
            if (ok && !s.test(g.at(x, y))) ok = false;
        });
    });
    return ok;
}

QuotientMap quotient_by(const GroupTable& g, const ElementSet& n) {
    if (!set_is_subgroup(g, n)) throw ValidationError("quotient kernel is not a subgroup");
    bool normal = true;
    n.for_each([&](int x) {
        if (!normal) return;
        for (int e = 0; e < g.order && normal; ++e)
            if (!n.test(g.conj(e, x))) normal = false;
    });
    if (!normal) throw ValidationError("quotient by a non-normal subgroup");

    const std::vector<int> members = n.to_vector();
    std::vector<int> coset(static_cast<size_t>(g.order), -1);
    std::vector<int> rep;
    for (int x = 0; x < g.order; ++x) {
        if (coset[static_cast<size_t>(x)] >= 0) continue;
        const int id = static_cast<int>(rep.size());
        rep.push_back(x);
        for (int m : members) coset[static_cast<size_t>(g.at(m, x))] = id;
    }

    const int qn = static_cast<int>(rep.size());
    GroupTable q;
    q.order = qn;
    q.label = g.label + "/N" + std::to_string(n.count());
    q.mul.resize(static_cast<size_t>(qn) * qn);
    for (int a = 0; a < qn; ++a)
        for (int b = 0; b < qn; ++b)
            q.mul[static_cast<size_t>(a) * qn + b] =
                coset[static_cast<size_t>(g.at(rep[static_cast<size_t>(a)], rep[static_cast<size_t>(b)]))];
    finish_table(q);
    return QuotientMap{std::move(q), std::move(coset)};
}

SubTable subgroup_table(const GroupTable& g, const ElementSet& sub) {
    if (!set_is_subgroup(g, sub)) throw ValidationError("subgroup table of a non-closed set");
    SubTable st;
    st.to_parent = sub.to_vector();
    st.from_parent.assign(static_cast<size_t>(g.order), -1);
    for (size_t i = 0; i < st.to_parent.size(); ++i)
        st.from_parent[static_cast<size_t>(st.to_parent[i])] = static_cast<int>(i);
    const int n = static_cast<int>(st.to_parent.size());
    st.table.order = n;
    st.table.label = g.label + "[" + std::to_string(n) + "]";
    st.table.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            st.table.mul[static_cast<size_t>(a) * n + b] = st.from_parent[static_cast<size_t>(
                g.at(st.to_parent[static_cast<size_t>(a)], st.to_parent[static_cast<size_t>(b)]))];
    finish_table(st.table);
    return st;
}

std::optional<std::vector<int>> extend_automorphism(const GroupTable& g,
                                                    const std::vector<int>& gens,
                                                    const std::vector<int>& images) {
    if (gens.size() != images.size()) return std::nullopt;
    std::vector<int> phi(static_cast<size_t>(g.order), -1);
    phi[GroupTable::kIdentity] = GroupTable::kIdentity;
    std::deque<int> todo{GroupTable::kIdentity};
    while (!todo.empty()) {
        const int x = todo.front();
        todo.pop_front();
        for (size_t i = 0; i < gens.size(); ++i) {
            const int xg = g.at(x, gens[i]);
            const int img = g.at(phi[static_cast<size_t>(x)], images[i]);
            int& slot = phi[static_cast<size_t>(xg)];
            if (slot < 0) {
                slot = img;
                todo.push_back(xg);
            } else if (slot != img) {
                return std::nullopt;
            }
        }
    }
    for (int v : phi)
        if (v < 0) return std::nullopt;  // gens do not generate g
    Permutation p{phi};
    if (!p.is_bijection()) return std::nullopt;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            if (phi[static_cast<size_t>(g.at(x, y))] !=
                g.at(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]))
                return std::nullopt;
    return phi;
}

ElementSet generated_subgroup(const GroupTable& g, const std::vector<int>& seed) {
    ElementSet set = ElementSet::single(GroupTable::kIdentity);
    std::vector<int> members{GroupTable::kIdentity};
    std::vector<int> frontier;
    for (int x : seed)
        if (!set.test(x)) {
            set.set(x);
            members.push_back(x);
            frontier.push_back(x);
        }
    // grow by products with the new elements until stable
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int f : frontier) {
            const size_t upto = members.size();
            for (size_t i = 0; i < upto; ++i) {
                for (int p : {g.at(f, members[i]), g.at(members[i], f)}) {
                    if (!set.test(p)) {
                        set.set(p);
                        members.push_back(p);
                        next.push_back(p);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return set;
}

ElementSet generated_subgroup(const GroupTable& g, const ElementSet& seed) {
    return generated_subgroup(g, seed.to_vector());
}

ElementSet centralizing_set(const GroupTable& g, const ElementSet& within) {
    ElementSet z;
    within.for_each([&](int x) {
        bool central = true;
        within.for_each([&](int y) {
            if (central && g.at(x, y) != g.at(y, x)) central = false;
        });
        if (central) z.set(x);
    });
    return z;
}

GroupTable cyclic_group(int n) {
    if (n <= 0) throw ValidationError("cyclic group order must be positive");
    GroupTable g;
    g.order = n;
    g.label = "cyclic:" + std::to_string(n);
    g.mul.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
    finish_table(g);
    return g;
}

}  // namespace grouplat
