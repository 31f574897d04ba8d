#include "charcat/groups/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "charcat/core/errors.hpp"

namespace charcat::groups {

namespace {

std::string power_label(const std::string& gen, std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return gen;
    return gen + "^" + std::to_string(k);
}

std::string word_label(const std::vector<std::pair<std::string, std::size_t>>& parts) {
    std::string s;
    for (const auto& [g, k] : parts) s += power_label(g, k);
    return s.empty() ? "1" : s;
}

using Perm = std::vector<std::uint8_t>;

std::string cycle_notation(const Perm& p) {
    std::string s;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        s += "(";
        std::size_t j = i;
        while (!done[j]) {
            done[j] = true;
            s += std::to_string(j + 1);
            j = p[j];
        }
        s += ")";
    }
    return s.empty() ? "1" : s;
}

bool is_even(const Perm& p) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

FiniteGroup perm_group(std::string id, std::vector<Perm> perms) {
    std::map<Perm, Elem> index;
    for (Elem i = 0; i < perms.size(); ++i) index[perms[i]] = i;
    // x^(ab) = (x^a)^b: apply a first.
    return from_rule(
        std::move(id), perms.size(), [&](Elem i) { return cycle_notation(perms[i]); },
        [&](Elem a, Elem b) {
            Perm c(perms[a].size());
            for (std::size_t x = 0; x < c.size(); ++x) c[x] = perms[b][perms[a][x]];
            return index.at(c);
        });
}

std::vector<Perm> all_perms(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

ff::Vec decode_vector(std::uint64_t value, std::uint64_t q, std::size_t m) {
    ff::Vec v(m);
    for (std::size_t k = 0; k < m; ++k) {
        v[k] = value % q;
        value /= q;
    }
    return v;
}

std::uint64_t encode_vector(const ff::Vec& v, std::uint64_t q) {
    std::uint64_t x = 0;
    for (std::size_t k = v.size(); k-- > 0;) x = x * q + v[k] % q;
    return x;
}

FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw InvalidInput("cyclic group needs n >= 1");
    return from_rule(
        "C" + std::to_string(n), n, [](Elem i) { return word_label({{"a", i}}); },
        [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); });
}

FiniteGroup metacyclic(std::string id, std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
    if (m == 0 || n == 0) throw InvalidInput("metacyclic parameters must be positive");
    // b^j a^k = a^(k r^j) b^j
    std::vector<std::size_t> rpow(n + 1, 1 % m);
    for (std::size_t j = 1; j <= n; ++j) rpow[j] = rpow[j - 1] * r % m;
    if (rpow[n] != 1 % m) throw InvalidInput("metacyclic: r^n must be 1 mod m");
    return from_rule(
        std::move(id), m * n,
        [m](Elem x) { return word_label({{"a", x % m}, {"b", x / m}}); },
        [m, n, s, rpow](Elem x, Elem y) {
            const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
            std::size_t ai = (i + k * rpow[j]) % m;
            std::size_t bj = j + l;
            if (bj >= n) {
                bj -= n;
                ai = (ai + s) % m;
            }
            return static_cast<Elem>(ai + m * bj);
        });
}

FiniteGroup dihedral(std::size_t n) {
    if (n < 1) throw InvalidInput("dihedral group needs n >= 1");
    return metacyclic("D" + std::to_string(n), n, 2, n - 1, 0);
}

FiniteGroup dicyclic(std::size_t n) {
    if (n < 1) throw InvalidInput("dicyclic group needs n >= 1");
    std::string id = n == 2 ? "Q8" : n == 4 ? "Q16" : "Dic" + std::to_string(n);
    return metacyclic(std::move(id), 2 * n, 2, 2 * n - 1, n);
}

FiniteGroup quaternion8() { return dicyclic(2); }

FiniteGroup symmetric(std::size_t n) {
    if (n < 1 || n > 5) throw InvalidInput("symmetric group supported for 1 <= n <= 5");
    return perm_group("S" + std::to_string(n), all_perms(n));
}

FiniteGroup alternating(std::size_t n) {
    if (n < 1 || n > 5) throw InvalidInput("alternating group supported for 1 <= n <= 5");
    auto perms = all_perms(n);
    std::erase_if(perms, [](const Perm& p) { return !is_even(p); });
    return perm_group("A" + std::to_string(n), std::move(perms));
}

FiniteGroup abelian(const std::vector<std::size_t>& orders) {
    if (orders.empty()) return cyclic(1);
    std::size_t n = 1;
    std::string id;
    for (auto o : orders) {
        if (o == 0) throw InvalidInput("cyclic factor order must be positive");
        n *= o;
        id += (id.empty() ? "C" : "xC") + std::to_string(o);
    }
    auto decode = [orders](Elem x) {
        std::vector<std::size_t> c;
        for (auto o : orders) {
            c.push_back(x % o);
            x /= static_cast<Elem>(o);
        }
        return c;
    };
    auto encode = [orders](const std::vector<std::size_t>& c) {
        Elem x = 0;
        for (std::size_t k = orders.size(); k-- > 0;) x = static_cast<Elem>(x * orders[k] + c[k]);
        return x;
    };
    return from_rule(
        std::move(id), n,
        [&](Elem x) {
            if (orders.size() == 1) return word_label({{"a", x}});
            const auto c = decode(x);
            std::string s = "(";
            for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
            return s + ")";
        },
        [&](Elem x, Elem y) {
            auto a = decode(x);
            const auto b = decode(y);
            for (std::size_t k = 0; k < a.size(); ++k) a[k] = (a[k] + b[k]) % orders[k];
            return encode(a);
        });
}

FiniteGroup elementary_abelian(std::uint64_t p, std::size_t m) {
    FiniteGroup g = abelian(std::vector<std::size_t>(m, p));
    std::string id = m == 1 ? "C" + std::to_string(p) : "C" + std::to_string(p) + "^" + std::to_string(m);
    return relabel(g, id, [&] {
        std::vector<Elem> id_perm(g.order());
        std::iota(id_perm.begin(), id_perm.end(), Elem{0});
        return id_perm;
    }());
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string id) {
    if (id.empty()) id = g.id() + "x" + h.id();
    const std::size_t nh = h.order();
    return from_rule(
        std::move(id), g.order() * nh,
        [&](Elem x) { return "(" + g.label(static_cast<Elem>(x / nh)) + "," + h.label(static_cast<Elem>(x % nh)) + ")"; },
        [&](Elem x, Elem y) {
            const Elem a = g.mul(static_cast<Elem>(x / nh), static_cast<Elem>(y / nh));
            const Elem b = h.mul(static_cast<Elem>(x % nh), static_cast<Elem>(y % nh));
            return static_cast<Elem>(a * nh + b);
        });
}

FiniteGroup heisenberg(std::uint64_t p) {
    ff::require_prime_modulus(p);
    const std::uint64_t p2 = p * p;
    return from_rule(
        "Heis" + std::to_string(p), p * p2,
        [p, p2](Elem x) {
            return "[" + std::to_string(x % p) + "," + std::to_string(x / p % p) + "," + std::to_string(x / p2) + "]";
        },
        [p, p2](Elem x, Elem y) {
            const std::uint64_t a = x % p, b = x / p % p, c = x / p2;
            const std::uint64_t a2 = y % p, b2 = y / p % p, c2 = y / p2;
            return static_cast<Elem>((a + a2) % p + p * ((b + b2) % p) + p2 * ((c + c2 + a * b2) % p));
        });
}

FiniteGroup cyclic_on_vectors(std::string id, std::uint64_t p, const ff::Mat& theta) {
    if (!theta.square()) throw InvalidInput("theta must be square");
    if (!theta.pow(p).is_identity()) throw InvalidInput("theta^p must be the identity");
    const std::uint64_t q = theta.modulus();
    const std::size_t m = theta.rows();
    std::uint64_t qm = 1;
    for (std::size_t k = 0; k < m; ++k) qm *= q;
    const auto inv = theta.inverse();
    if (!inv) throw InvalidInput("theta must be invertible");
    std::vector<ff::Mat> neg_powers{ff::Mat::identity(q, m)};
    for (std::uint64_t j = 1; j < p; ++j) neg_powers.push_back(neg_powers.back() * *inv);
    std::vector<ff::Vec> vecs(qm);
    for (std::uint64_t x = 0; x < qm; ++x) vecs[x] = decode_vector(x, q, m);
    // Precompute theta^-j v for every j and v.
    std::vector<std::uint64_t> acted(p * qm);
    for (std::uint64_t j = 0; j < p; ++j)
        for (std::uint64_t x = 0; x < qm; ++x) acted[j * qm + x] = encode_vector(neg_powers[j] * vecs[x], q);
    return from_rule(
        std::move(id), p * qm,
        [&](Elem x) {
            const auto& v = vecs[x % qm];
            std::string s = "t" + std::to_string(x / qm) + "|(";
            for (std::size_t k = 0; k < m; ++k) s += (k ? "," : "") + std::to_string(v[k]);
            return s + ")";
        },
        [&](Elem x, Elem y) {
            const std::uint64_t i = x / qm, j = y / qm;
            const ff::Vec& w = vecs[y % qm];
            ff::Vec sum = vecs[acted[j * qm + x % qm]];
            for (std::size_t k = 0; k < m; ++k) sum[k] = (sum[k] + w[k]) % q;
            return static_cast<Elem>(((i + j) % p) * qm + encode_vector(sum, q));
        });
}

FiniteGroup pauli() {
    // index = k + 4a + 8b
    return from_rule(
        "Pauli", 16,
        [](Elem x) { return "(" + std::to_string(x % 4) + "," + std::to_string(x / 4 % 2) + "," + std::to_string(x / 8) + ")"; },
        [](Elem x, Elem y) {
            const Elem k1 = x % 4, a = x / 4 % 2, b = x / 8;
            const Elem k2 = y % 4, c = y / 4 % 2, d = y / 8;
            return static_cast<Elem>((k1 + k2 + 2 * b * c) % 4 + 4 * ((a + c) % 2) + 8 * ((b + d) % 2));
        });
}

FiniteGroup c2sq_rtimes_c4() {
    // index = v0 + 2 v1 + 4 j; the generator t of C4 swaps v0 and v1.
    return from_rule(
        "C2^2:C4", 16,
        [](Elem x) { return "(" + std::to_string(x % 2) + std::to_string(x / 2 % 2) + "," + power_label("t", x / 4) + ")"; },
        [](Elem x, Elem y) {
            Elem v0 = x % 2, v1 = x / 2 % 2;
            const Elem j = x / 4;
            Elem w0 = y % 2, w1 = y / 2 % 2;
            const Elem l = y / 4;
            if (j % 2 == 1) std::swap(w0, w1);
            v0 ^= w0;
            v1 ^= w1;
            return static_cast<Elem>(v0 + 2 * v1 + 4 * ((j + l) % 4));
        });
}

std::vector<GroupRef> small_groups(std::size_t max_order) {
    if (max_order > 16) throw Unsupported("the built-in catalog stops at order 16");
    std::vector<FiniteGroup> gs;
    auto add = [&](std::size_t order, auto make) {
        if (order <= max_order) gs.push_back(make());
    };
    auto renamed = [](FiniteGroup g, const std::string& id) {
        std::vector<Elem> perm(g.order());
        std::iota(perm.begin(), perm.end(), Elem{0});
        return relabel(g, id, perm);
    };
    add(1, [] { return cyclic(1); });
    add(2, [] { return cyclic(2); });
    add(3, [] { return cyclic(3); });
    add(4, [] { return cyclic(4); });
    add(4, [] { return elementary_abelian(2, 2); });
    add(5, [] { return cyclic(5); });
    add(6, [] { return cyclic(6); });
    add(6, [] { return symmetric(3); });
    add(7, [] { return cyclic(7); });
    add(8, [] { return cyclic(8); });
    add(8, [] { return abelian({2, 4}); });
    add(8, [] { return elementary_abelian(2, 3); });
    add(8, [] { return dihedral(4); });
    add(8, [] { return quaternion8(); });
    add(9, [] { return cyclic(9); });
    add(9, [] { return elementary_abelian(3, 2); });
    add(10, [] { return cyclic(10); });
    add(10, [] { return dihedral(5); });
    add(11, [] { return cyclic(11); });
    add(12, [] { return cyclic(12); });
    add(12, [] { return abelian({2, 6}); });
    add(12, [] { return dihedral(6); });
    add(12, [] { return alternating(4); });
    add(12, [] { return dicyclic(3); });
    add(13, [] { return cyclic(13); });
    add(14, [] { return cyclic(14); });
    add(14, [] { return dihedral(7); });
    add(15, [] { return cyclic(15); });
    add(16, [] { return cyclic(16); });
    add(16, [] { return abelian({4, 4}); });
    add(16, [] { return abelian({2, 8}); });
    add(16, [] { return abelian({2, 2, 4}); });
    add(16, [] { return elementary_abelian(2, 4); });
    add(16, [] { return dihedral(8); });
    add(16, [] { return dicyclic(4); });
    add(16, [] { return metacyclic("SD16", 8, 2, 3, 0); });
    add(16, [] { return metacyclic("M16", 8, 2, 5, 0); });
    add(16, [] { return metacyclic("C4:C4", 4, 4, 3, 0); });
    add(16, [&] { return renamed(direct_product(cyclic(2), dihedral(4)), "C2xD4"); });
    add(16, [&] { return renamed(direct_product(cyclic(2), quaternion8()), "C2xQ8"); });
    add(16, [] { return pauli(); });
    add(16, [] { return c2sq_rtimes_c4(); });
    std::vector<GroupRef> out;
    for (auto& g : gs) out.push_back(make_ref(std::move(g)));
    return out;
}

} // namespace charcat::groups
