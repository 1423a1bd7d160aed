#include "grouplat/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "grouplat/errors.hpp"

namespace grouplat {

GroupTable dihedral_group(int order, const GroupCaps& caps) {
    if (order < 4 || order % 2 != 0)
        throw ValidationError("dihedral order must be even and >= 4, got " + std::to_string(order));
    const int n = order / 2;
    const std::string label = "dihedral:" + std::to_string(order);
    if (n == 2) {
        // the Klein group; two disjoint transpositions keep the action faithful
        Permutation a{{1, 0, 2, 3}}, b{{0, 1, 3, 2}};
        return closure_from_generators({a, b}, 4, label, caps);
    }
    Permutation rot, refl;
    rot.images.resize(static_cast<size_t>(n));
    refl.images.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot.images[static_cast<size_t>(i)] = (i + 1) % n;
        refl.images[static_cast<size_t>(i)] = (n - i) % n;
    }
    return closure_from_generators({rot, refl}, n, label, caps);
}

GroupTable symmetric_group(int n, const GroupCaps& caps) {
    if (n < 1) throw ValidationError("symmetric degree must be >= 1");
    const std::string label = "symmetric:" + std::to_string(n);
    if (n == 1) return closure_from_generators({}, 1, label, caps);
    Permutation swap = Permutation::identity(n), cyc = Permutation::identity(n);
    swap.images[0] = 1;
    swap.images[1] = 0;
    for (int i = 0; i < n; ++i) cyc.images[static_cast<size_t>(i)] = (i + 1) % n;
    return closure_from_generators({swap, cyc}, n, label, caps);
}

GroupTable alternating_group(int n, const GroupCaps& caps) {
    if (n < 3) throw ValidationError("alternating degree must be >= 3");
    const std::string label = "alternating:" + std::to_string(n);
    Permutation tri = Permutation::identity(n);
    tri.images[0] = 1;
    tri.images[1] = 2;
    tri.images[2] = 0;
    if (n == 3) return closure_from_generators({tri}, 3, label, caps);
    Permutation cyc = Permutation::identity(n);
    if (n % 2) {
        for (int i = 0; i < n; ++i) cyc.images[static_cast<size_t>(i)] = (i + 1) % n;
    } else {
        for (int i = 1; i < n; ++i) cyc.images[static_cast<size_t>(i)] = i == n - 1 ? 1 : i + 1;
    }
    return closure_from_generators({tri, cyc}, n, label, caps);
}

GroupTable cyclic_semidirect(int n, int m, int k, const GroupCaps& caps) {
    if (n < 1 || m < 1 || k < 0 || k >= n)
        throw ValidationError("semidirect:N:M:K needs N,M >= 1 and 0 <= K < N");
    if (std::gcd(k, n) != 1)
        throw ValidationError("semidirect action x -> x^" + std::to_string(k) +
                              " is not invertible mod " + std::to_string(n));
    long long km = 1;
    for (int i = 0; i < m; ++i) km = (km * k) % n;
    if (km % n != 1 % n)
        throw ValidationError("semidirect action order does not divide " + std::to_string(m) +
                              " (K^M != 1 mod N)");
    SemidirectSpec spec;
    spec.base = cyclic_group(n);
    spec.acting = cyclic_group(m);
    spec.action.resize(static_cast<size_t>(m));
    long long kj = 1;
    for (int j = 0; j < m; ++j) {
        auto& img = spec.action[static_cast<size_t>(j)];
        img.resize(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) img[static_cast<size_t>(x)] = static_cast<int>((x * kj) % n);
        kj = (kj * k) % n;
    }
    GroupTable g = semidirect_product(spec, caps);
    g.label = "semidirect:" + std::to_string(n) + ":" + std::to_string(m) + ":" + std::to_string(k);
    return g;
}

GroupTable quaternion_group() {
    // left-regular action of Q8 on itself, elements 1,-1,i,-i,j,-j,k,-k
    Permutation pi{{2, 3, 1, 0, 6, 7, 5, 4}};
    Permutation pj{{4, 5, 7, 6, 1, 0, 2, 3}};
    GroupTable q8 = closure_from_generators({pi, pj}, 8, "quaternion:8");
    // BFS discovers the generators first: element 1 is i, element 2 is j
    if (q8.order != 8 || q8.elem_order[1] != 4 || q8.elem_order[2] != 4)
        throw InternalCheckError("quaternion construction produced a wrong table");
    return q8;
}

namespace {

GroupTable v4_semidirect_c3(const GroupCaps& caps) {
    SemidirectSpec spec;
    spec.base = direct_product(cyclic_group(2), cyclic_group(2), caps);
    spec.acting = cyclic_group(3);
    const std::vector<int> alpha{0, 2, 3, 1};  // cycles the three involutions
    std::vector<int> alpha2(4);
    for (int i = 0; i < 4; ++i) alpha2[static_cast<size_t>(i)] = alpha[static_cast<size_t>(alpha[static_cast<size_t>(i)])];
    spec.action = {{0, 1, 2, 3}, alpha, alpha2};
    GroupTable g = semidirect_product(spec, caps);
    g.label = "semidirect:a4";
    return g;
}

GroupTable q8_semidirect_c3(const GroupCaps& caps) {
    SemidirectSpec spec;
    spec.base = quaternion_group();
    spec.acting = cyclic_group(3);
    const int idx_i = 1, idx_j = 2;
    const int idx_k = spec.base.at(idx_i, idx_j);
    auto alpha = extend_automorphism(spec.base, {idx_i, idx_j}, {idx_j, idx_k});
    if (!alpha) throw InternalCheckError("i->j->k does not extend to an automorphism of Q8");
    std::vector<int> alpha2(8);
    for (int i = 0; i < 8; ++i)
        alpha2[static_cast<size_t>(i)] = (*alpha)[static_cast<size_t>((*alpha)[static_cast<size_t>(i)])];
    std::vector<int> id(8);
    std::iota(id.begin(), id.end(), 0);
    spec.action = {id, *alpha, alpha2};
    GroupTable g = semidirect_product(spec, caps);
    g.label = "semidirect:sl23";
    return g;
}

// --- spec-string parser (recursive descent) --------------------------------

struct SpecParser {
    const std::string& s;
    size_t pos = 0;
    const GroupCaps& caps;

    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("bad group spec '" + s + "': " + why);
    }

    bool eat(const std::string& word) {
        if (s.compare(pos, word.size(), word) == 0) {
            pos += word.size();
            return true;
        }
        return false;
    }

    int number() {
        size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected a number at position " + std::to_string(start));
        if (pos - start > 9) fail("number too large");
        return std::stoi(s.substr(start, pos - start));
    }

    void expect(char c) {
        if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    GroupTable parse() {
        if (eat("cyclic:")) {
            const int n = number();
            if (n < 1) fail("cyclic order must be >= 1");
            if (n > caps.max_order) throw CapacityError("cyclic:" + std::to_string(n) + " exceeds order cap");
            return cyclic_group(n);
        }
        if (eat("dihedral:")) return dihedral_group(number(), caps);
        if (eat("symmetric:")) return symmetric_group(number(), caps);
        if (eat("alternating:")) return alternating_group(number(), caps);
        if (eat("product:")) {
            GroupTable a = parse();
            expect(',');
            GroupTable b = parse();
            return direct_product(a, b, caps);
        }
        if (eat("semidirect:")) {
            if (eat("a4")) return v4_semidirect_c3(caps);
            if (eat("sl23")) return q8_semidirect_c3(caps);
            const int n = number();
            expect(':');
            const int m = number();
            expect(':');
            const int k = number();
            return cyclic_semidirect(n, m, k, caps);
        }
        if (eat("file:")) {
            const std::string path = s.substr(pos);
            pos = s.size();
            auto [degree, gens] = parse_generator_file(path);
            return closure_from_generators(gens, degree, "file:" + path, caps);
        }
        fail("unknown construction at position " + std::to_string(pos));
    }
};

}  // namespace

GroupTable build_group_spec(const std::string& spec, const GroupCaps& caps) {
    SpecParser p{spec, 0, caps};
    GroupTable g = p.parse();
    if (p.pos != spec.size()) p.fail("trailing characters after position " + std::to_string(p.pos));
    return g;
}

std::pair<int, std::vector<Permutation>> parse_generator_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int degree = -1;
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (degree < 0) {
            std::string word;
            if (!(ls >> word)) continue;  // blank/comment before the header
            int n;
            if (word != "degree" || !(ls >> n) || n < 1)
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": expected header 'degree N'");
            std::string extra;
            if (ls >> extra)
                throw ValidationError("line " + std::to_string(lineno) + ": trailing tokens after header");
            degree = n;
            continue;
        }
        std::vector<int> images;
        int v;
        while (ls >> v) images.push_back(v);
        if (images.empty()) continue;
        if (static_cast<int>(images.size()) != degree)
            throw ValidationError("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(degree) + " images, got " +
                                  std::to_string(images.size()));
        Permutation p;
        p.images.resize(images.size());
        for (size_t i = 0; i < images.size(); ++i) {
            if (images[i] < 1 || images[i] > degree)
                throw ValidationError("line " + std::to_string(lineno) + ": image " +
                                      std::to_string(images[i]) + " out of range 1.." +
                                      std::to_string(degree));
            p.images[i] = images[i] - 1;
        }
        if (!p.is_bijection())
            throw ValidationError("line " + std::to_string(lineno) + ": not a bijection");
        gens.push_back(std::move(p));
    }
    if (degree < 0) throw ValidationError("missing 'degree N' header");
    return {degree, std::move(gens)};
}

std::pair<int, std::vector<Permutation>> parse_generator_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot read generator file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_generator_text(buf.str());
}

std::vector<std::string> builtin_catalog(int max_order, int max_dihedral) {
    std::vector<std::string> specs;
    std::vector<std::pair<std::string, int>> pool;  // (spec, order) for products

    for (int n = 1; n <= max_order; ++n) {
        specs.push_back("cyclic:" + std::to_string(n));
        if (n >= 2) pool.emplace_back(specs.back(), n);
    }
    for (int d = 4; d <= max_dihedral; d += 2) {
        specs.push_back("dihedral:" + std::to_string(d));
        pool.emplace_back(specs.back(), d);
    }
    const std::pair<const char*, int> named[] = {
        {"symmetric:3", 6},      {"symmetric:4", 24},      {"alternating:4", 12},
        {"alternating:5", 60},   {"semidirect:3:2:2", 6},  {"semidirect:3:4:2", 12},
        {"semidirect:a4", 12},   {"semidirect:8:2:5", 16}, {"semidirect:5:4:2", 20},
        {"semidirect:7:3:2", 21}, {"semidirect:sl23", 24}, {"semidirect:15:2:14", 30},
    };
    for (auto& [spec, order] : named)
        if (order <= max_order) {
            specs.push_back(spec);
            pool.emplace_back(spec, order);
        }

    std::erase_if(pool, [&](auto& e) { return e.second > max_order / 2; });
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i; j < pool.size(); ++j)
            if (pool[i].second * pool[j].second <= max_order)
                specs.push_back("product:" + pool[i].first + "," + pool[j].first);
    return specs;
}

}  // namespace grouplat
