#pragma once

// Exhaustive oracles over raw Cayley tables. They never call the library's search code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "charcat/groups/group.hpp"

namespace oracle {

using charcat::groups::Elem;
using charcat::groups::FiniteGroup;

inline bool is_hom_map(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& m) {
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
            if (m[g.mul(a, b)] != h.mul(m[a], m[b])) return false;
    return true;
}

/// Every bijection G -> G that respects the table (|G| <= 8).
inline std::vector<std::vector<Elem>> brute_automorphisms(const FiniteGroup& g) {
    std::vector<Elem> perm(g.order());
    std::iota(perm.begin(), perm.end(), Elem{0});
    std::vector<std::vector<Elem>> out;
    do
        if (is_hom_map(g, g, perm)) out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Every map G -> H respecting the table (|H|^|G| <= ~10^6).
inline std::vector<std::vector<Elem>> brute_homs(const FiniteGroup& g, const FiniteGroup& h) {
    std::vector<Elem> m(g.order(), 0);
    std::vector<std::vector<Elem>> out;
    for (;;) {
        if (is_hom_map(g, h, m)) out.push_back(m);
        std::size_t i = 0;
        while (i < m.size() && ++m[i] == h.order()) m[i++] = 0;
        if (i == m.size()) break;
    }
    return out;
}

inline std::vector<Elem> brute_center(const FiniteGroup& g) {
    std::vector<Elem> z;
    for (Elem a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

/// Multiplicative closure of a set by repeated products until nothing new appears.
inline std::vector<Elem> brute_closure(const FiniteGroup& g, std::vector<Elem> s) {
    std::vector<bool> in(g.order(), false);
    s.push_back(g.identity());
    for (Elem x : s) in[x] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        const auto cur = s;
        for (Elem a : cur)
            for (Elem b : cur)
                if (!in[g.mul(a, b)]) {
                    in[g.mul(a, b)] = true;
                    s.push_back(g.mul(a, b));
                    grew = true;
                }
    }
    std::vector<Elem> out;
    for (Elem a = 0; a < g.order(); ++a)
        if (in[a]) out.push_back(a);
    return out;
}

inline std::vector<Elem> brute_derived(const FiniteGroup& g) {
    std::vector<Elem> c;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) {
            // x^-1 y^-1 x y computed by scanning for inverses in the table
            Elem ia = 0, ib = 0;
            for (Elem t = 0; t < g.order(); ++t) {
                if (g.mul(a, t) == g.identity()) ia = t;
                if (g.mul(b, t) == g.identity()) ib = t;
            }
            c.push_back(g.mul(g.mul(ia, ib), g.mul(a, b)));
        }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return brute_closure(g, c);
}

} // namespace oracle
