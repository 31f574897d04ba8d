#include "charcat/counitals/characteristic.hpp"

#include <algorithm>
#include <numeric>

#include "charcat/core/errors.hpp"
#include "charcat/groups/homs.hpp"

namespace charcat::counitals {

namespace {

std::string kind_name(CertKind k) { return k == CertKind::Automorphisms ? "characteristic" : "fully_invariant"; }

CertKind parse_kind(const std::string& s) {
    if (s == "characteristic") return CertKind::Automorphisms;
    if (s == "fully_invariant") return CertKind::Endomorphisms;
    throw InvalidInput("unknown certificate kind '" + s + "'");
}

/// Checks every map against the members; fills either the certificate or the counterexample.
StabilityResult stability(const Subgroup& h, const std::vector<GroupHom>& maps, CertKind kind, std::uint64_t count) {
    StabilityResult r;
    CharCertificate cert;
    cert.group = h.parent()->id();
    cert.subgroup = h.members();
    cert.kind = kind;
    cert.map_count = count;
    for (const auto& phi : maps) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        pairs.reserve(h.size());
        for (std::size_t j = 0; j < h.size(); ++j) {
            const Elem k = phi(h.members()[j]);
            if (!h.contains(k)) {
                r.counterexample = Counterexample{phi, h.members()[j]};
                return r;
            }
            pairs.emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(h.position(k)));
        }
        cert.maps.push_back(phi.map);
        cert.witnesses.push_back(std::move(pairs));
    }
    r.holds = true;
    r.certificate = std::move(cert);
    return r;
}

using Perm = std::vector<Elem>;

/// Deterministic Schreier-Sims: each level keeps a base point, its strong generators and an
/// orbit transversal u_x with u_x(base) = x.
class StabChain {
public:
    explicit StabChain(std::size_t n) : n_(n) {}

    void add_generator(const Perm& g) {
        rebuild();
        auto [residue, level] = sift(g, 0);
        if (is_identity(residue)) return;
        insert(std::move(residue), level);
        complete();
    }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const auto& l : levels_) o *= l.orbit.size();
        return o;
    }

private:
    struct Level {
        Elem base = 0;
        std::vector<Elem> orbit;
        std::vector<std::ptrdiff_t> slot;  // point -> index into trans, or -1
        std::vector<Perm> trans;
        std::vector<Perm> trans_inv;
        std::vector<std::size_t> gens;     // indices into strong_ fixing every earlier base point
    };

    static bool is_identity(const Perm& p) {
        for (Elem i = 0; i < p.size(); ++i)
            if (p[i] != i) return false;
        return true;
    }
    static Perm mul(const Perm& a, const Perm& b) {  // a after b
        Perm r(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
        return r;
    }
    static Perm invert(const Perm& a) {
        Perm r(a.size());
        for (Elem i = 0; i < a.size(); ++i) r[a[i]] = i;
        return r;
    }

    /// Strips g through the levels from `from`; returns the residue and the level it stopped at.
    std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            const auto& l = levels_[i];
            const auto s = l.slot[g[l.base]];
            if (s < 0) return {std::move(g), i};
            g = mul(l.trans_inv[static_cast<std::size_t>(s)], g);
        }
        return {std::move(g), levels_.size()};
    }

    // A residue that fixes every base point extends the base by its first moved point.
    void insert(Perm g, std::size_t level) {
        if (level == bases_.size()) {
            Elem b = 0;
            while (g[b] == b) ++b;
            bases_.push_back(b);
        }
        strong_.push_back(std::move(g));
        rebuild();
    }

    void rebuild() {
        levels_.assign(bases_.size(), Level{});
        Perm id(n_);
        std::iota(id.begin(), id.end(), Elem{0});
        for (std::size_t k = 0; k < bases_.size(); ++k) {
            Level& l = levels_[k];
            l.base = bases_[k];
            for (std::size_t s = 0; s < strong_.size(); ++s) {
                bool fixes = true;
                for (std::size_t j = 0; j < k && fixes; ++j) fixes = strong_[s][bases_[j]] == bases_[j];
                if (fixes) l.gens.push_back(s);
            }
            l.orbit = {l.base};
            l.slot.assign(n_, -1);
            l.trans = {id};
            l.trans_inv = {id};
            l.slot[l.base] = 0;
            for (std::size_t q = 0; q < l.orbit.size(); ++q) {
                const Elem x = l.orbit[q];
                for (std::size_t s : l.gens) {
                    const Elem y = strong_[s][x];
                    if (l.slot[y] >= 0) continue;
                    l.slot[y] = static_cast<std::ptrdiff_t>(l.trans.size());
                    l.trans.push_back(mul(strong_[s], l.trans[static_cast<std::size_t>(l.slot[x])]));
                    l.trans_inv.push_back(invert(l.trans.back()));
                    l.orbit.push_back(y);
                }
            }
        }
    }

    // Schreier's lemma: the chain is complete once every Schreier generator of every level
    // sifts to the identity through the deeper levels.
    void complete() {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t k = bases_.size(); k-- > 0 && !changed;) {
                const Level& l = levels_[k];
                for (std::size_t q = 0; q < l.orbit.size() && !changed; ++q)
                    for (std::size_t s : l.gens) {
                        const Elem x = l.orbit[q];
                        const Elem y = strong_[s][x];
                        Perm schreier = mul(l.trans_inv[static_cast<std::size_t>(l.slot[y])],
                                            mul(strong_[s], l.trans[static_cast<std::size_t>(l.slot[x])]));
                        auto [residue, level] = sift(std::move(schreier), k + 1);
                        if (is_identity(residue)) continue;
                        insert(std::move(residue), level);
                        changed = true;
                        break;
                    }
            }
        }
    }

    std::size_t n_;
    std::vector<Elem> bases_;
    std::vector<Perm> strong_;
    std::vector<Level> levels_;
};

std::vector<Elem> small_generating_set(const Subgroup& h) {
    std::vector<Elem> gens;
    Subgroup cur = groups::trivial_subgroup(h.parent());
    for (Elem x : h.members()) {
        if (cur.contains(x)) continue;
        gens.push_back(x);
        cur = groups::subgroup_closure(h.parent(), gens);
        if (cur.size() == h.size()) break;
    }
    return gens;
}

} // namespace

nlohmann::json CharCertificate::to_json() const {
    nlohmann::json w = nlohmann::json::array();
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [j, k] : witnesses[i]) pairs.push_back({j, k});
        w.push_back({{"gen", i}, {"pairs", std::move(pairs)}});
    }
    return {{"group", group}, {"subgroup", subgroup}, {"kind", kind_name(kind)},
            {"aut_gens", maps}, {"witnesses", w},     {"map_count", map_count}};
}

CharCertificate CharCertificate::from_json(const nlohmann::json& j) {
    try {
        CharCertificate c;
        c.group = j.at("group").get<std::string>();
        c.subgroup = j.at("subgroup").get<std::vector<Elem>>();
        c.kind = parse_kind(j.at("kind").get<std::string>());
        c.maps = j.at("aut_gens").get<std::vector<std::vector<Elem>>>();
        for (const auto& row : j.at("witnesses")) {
            if (row.at("gen").get<std::size_t>() != c.witnesses.size())
                throw InvalidInput("witness rows must be listed in generator order");
            std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
            for (const auto& p : row.at("pairs"))
                pairs.emplace_back(p.at(0).get<std::uint32_t>(), p.at(1).get<std::uint32_t>());
            c.witnesses.push_back(std::move(pairs));
        }
        c.map_count = j.at("map_count").get<std::uint64_t>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

nlohmann::json Counterexample::to_json() const {
    return {{"group", map.dom->id()},
            {"map", map.map},
            {"h", map.dom->label(h)},
            {"image", map.cod->label(map(h))}};
}

StabilityResult is_characteristic(const Subgroup& h, const Config& cfg) {
    const auto aut = groups::automorphism_generators(h.parent(), cfg);
    return stability(h, aut.gens, CertKind::Automorphisms, aut.order);
}

StabilityResult is_fully_invariant(const Subgroup& h, const Config& cfg) {
    const auto endos = groups::hom_enumerate(h.parent(), h.parent(), false, cfg);
    return stability(h, endos, CertKind::Endomorphisms, endos.size());
}

std::uint64_t permutation_group_order(const std::vector<std::vector<Elem>>& gens, std::size_t n) {
    StabChain chain(n);
    for (const auto& g : gens) chain.add_generator(g);
    return chain.order();
}

Report verify_certificate(const CharCertificate& cert, const groups::FiniteGroup& g) {
    Report r("certificate for " + cert.group);
    const std::size_t n = g.order();
    const auto& table = g.table();
    auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };

    r.record("group id matches", cert.group == g.id(), {cert.group, g.id()});

    std::vector<char> in_h(n, 0);
    bool members_ok = std::is_sorted(cert.subgroup.begin(), cert.subgroup.end()) &&
                      std::adjacent_find(cert.subgroup.begin(), cert.subgroup.end()) == cert.subgroup.end();
    for (Elem x : cert.subgroup) {
        if (x >= n) members_ok = false;
        else in_h[x] = 1;
    }
    r.record("subgroup members are valid", members_ok);
    if (!members_ok) return r;
    bool closed = !cert.subgroup.empty();
    for (Elem a : cert.subgroup)
        for (Elem b : cert.subgroup)
            if (!in_h[mul(a, b)]) closed = false;
    r.record("subgroup is closed", closed);

    const bool autos = cert.kind == CertKind::Automorphisms;
    r.law("maps are homomorphisms");
    if (autos) r.law("maps are bijective");
    for (std::size_t i = 0; i < cert.maps.size(); ++i) {
        const auto& m = cert.maps[i];
        bool valid = m.size() == n && std::all_of(m.begin(), m.end(), [n](Elem x) { return x < n; });
        bool hom = valid;
        for (Elem a = 0; hom && a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (m[mul(a, b)] != mul(m[a], m[b])) {
                    hom = false;
                    break;
                }
        r.record("maps are homomorphisms", hom, {"map " + std::to_string(i)});
        if (autos) {
            std::vector<char> hit(n, 0);
            if (valid)
                for (Elem x : m) hit[x] = 1;
            r.record("maps are bijective", valid && std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }),
                     {"map " + std::to_string(i)});
        }
    }
    if (!r.ok()) return r;

    r.record("one witness row per map", cert.witnesses.size() == cert.maps.size());
    r.law("witness equations hold");
    r.law("every member is witnessed");
    const std::size_t hs = cert.subgroup.size();
    for (std::size_t i = 0; i < cert.witnesses.size() && i < cert.maps.size(); ++i) {
        std::vector<char> seen(hs, 0);
        for (const auto& [j, k] : cert.witnesses[i]) {
            const bool ok = j < hs && k < hs && cert.maps[i][cert.subgroup[j]] == cert.subgroup[k];
            r.record("witness equations hold", ok,
                     {"map " + std::to_string(i), std::to_string(j), std::to_string(k)});
            if (j < hs) seen[j] = 1;
        }
        r.record("every member is witnessed", std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }),
                 {"map " + std::to_string(i)});
    }

    if (autos) {
        const auto order = permutation_group_order(cert.maps, n);
        r.record("maps generate a group of the stated order", order == cert.map_count,
                 {std::to_string(order), std::to_string(cert.map_count)});
    } else {
        r.record("map list has the stated length", cert.maps.size() == cert.map_count);
    }
    return r;
}

bool brute_force_characteristic(const Subgroup& h, const Config& cfg) {
    const auto& g = *h.parent();
    for (Elem x : small_generating_set(h)) {
        const auto seq = groups::generating_sequence(g, {x});
        for (Elem y = 0; y < g.order(); ++y) {
            if (h.contains(y) || g.elem_order(y) != g.elem_order(x) ||
                g.centralizer_size(y) != g.centralizer_size(x) ||
                g.cyclic_normalizer_size(y) != g.cyclic_normalizer_size(x))
                continue;
            groups::HomSearch opts;
            opts.kind = groups::HomKind::Iso;
            opts.node_budget = cfg.aut_budget;
            opts.allowed.assign(seq.gens.size(), {});
            opts.allowed[0] = {y};
            bool moved = false;
            groups::hom_search(g, g, seq, opts, [&](const std::vector<Elem>&) {
                moved = true;
                return false;
            });
            if (moved) return false;
        }
    }
    return true;
}

Subgroup transport(const Subgroup& h, const GroupHom& alpha) {
    if (alpha.dom->id() != h.parent()->id()) throw InvalidInput("transport: map does not start at the parent group");
    if (!alpha.is_isomorphism()) throw InvalidInput("transport: map is not an isomorphism");
    return groups::image(alpha, h);
}

} // namespace charcat::counitals
