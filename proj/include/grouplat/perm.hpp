#pragma once

#include <vector>

namespace grouplat {

// A permutation of {0..degree-1}, stored as the image table.
struct Permutation {
    std::vector<int> images;  // images[i] = where i goes

    int degree() const { return static_cast<int>(images.size()); }

    static Permutation identity(int degree) {
        Permutation p;
        p.images.resize(static_cast<size_t>(degree));
        for (int i = 0; i < degree; ++i) p.images[static_cast<size_t>(i)] = i;
        return p;
    }

    bool is_bijection() const {
        const int n = degree();
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int v : images) {
            if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
        return true;
    }

    // (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& b) const {
        Permutation r;
        r.images.resize(images.size());
        for (size_t i = 0; i < images.size(); ++i)
            r.images[i] = images[static_cast<size_t>(b.images[i])];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images.resize(images.size());
        for (size_t i = 0; i < images.size(); ++i)
            r.images[static_cast<size_t>(images[i])] = static_cast<int>(i);
        return r;
    }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images < o.images; }
};

}  // namespace grouplat
