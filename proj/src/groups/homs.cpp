#include "charcat/groups/homs.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "charcat/core/errors.hpp"

namespace charcat::groups {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

/// Closure of `base` (a subgroup, as a membership mask plus list) with one more element.
std::size_t closure_size_with(const FiniteGroup& g, const std::vector<Elem>& gens, Elem extra) {
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto visit = [&](Elem s) {
            const Elem y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        };
        for (Elem s : gens) visit(s);
        visit(extra);
    }
    return members.size();
}

void build_levels(const FiniteGroup& g, GeneratingSequence& seq) {
    const std::size_t k = seq.gens.size();
    seq.level_of.assign(g.order(), kUnset);
    seq.level_of[g.identity()] = k;
    seq.tree.assign(k, {});
    seq.checks.assign(k, {});
    std::vector<Elem> order_list{g.identity()};  // S_{j-1} in discovery order
    std::vector<bool> tree_edge;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<bool> in(g.order(), false);
        for (Elem x : order_list) in[x] = true;
        const std::size_t old_count = order_list.size();
        std::vector<std::pair<Elem, std::size_t>> tree_edges;
        for (std::size_t pos = 0; pos < order_list.size(); ++pos) {
            const Elem y = order_list[pos];
            for (std::size_t i = 0; i <= j; ++i) {
                const Elem z = g.mul(y, seq.gens[i]);
                if (in[z]) continue;
                in[z] = true;
                order_list.push_back(z);
                seq.level_of[z] = j;
                seq.tree[j].push_back({z, y, i});
                tree_edges.emplace_back(y, i);
            }
        }
        std::set<std::pair<Elem, std::size_t>> is_tree(tree_edges.begin(), tree_edges.end());
        for (std::size_t pos = 0; pos < order_list.size(); ++pos) {
            const Elem x = order_list[pos];
            for (std::size_t i = 0; i <= j; ++i) {
                if (pos < old_count && i < j) continue;
                if (is_tree.count({x, i}) != 0) continue;
                seq.checks[j].emplace_back(x, i);
            }
        }
    }
    if (order_list.size() != g.order()) throw InvalidInput("generating sequence does not generate the group");
}

} // namespace

GeneratingSequence generating_sequence(const FiniteGroup& g, const std::vector<Elem>& prefix) {
    GeneratingSequence seq;
    std::size_t size = 1;
    for (Elem p : prefix) {
        const std::size_t s = closure_size_with(g, seq.gens, p);
        if (s > size) {
            seq.gens.push_back(p);
            size = s;
        }
    }
    while (size < g.order()) {
        std::size_t best = 0;
        Elem best_x = kUnset;
        std::vector<bool> in(g.order(), false);
        {
            std::vector<Elem> cur{g.identity()};
            in[g.identity()] = true;
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (Elem s : seq.gens) {
                    const Elem y = g.mul(cur[i], s);
                    if (!in[y]) {
                        in[y] = true;
                        cur.push_back(y);
                    }
                }
        }
        for (Elem x = 0; x < g.order(); ++x) {
            if (in[x]) continue;
            const std::size_t s = closure_size_with(g, seq.gens, x);
            if (s > best) {
                best = s;
                best_x = x;
                if (s == g.order()) break;
            }
        }
        seq.gens.push_back(best_x);
        size = best;
    }
    build_levels(g, seq);
    return seq;
}

GeneratingSequence generating_sequence(const FiniteGroup& g) { return generating_sequence(g, {}); }

std::uint64_t hom_search(const FiniteGroup& g, const FiniteGroup& h, const GeneratingSequence& seq,
                         const HomSearch& opts, const std::function<bool(const std::vector<Elem>&)>& on_hom) {
    const bool iso = opts.kind == HomKind::Iso;
    if (iso && g.order() != h.order()) return 0;
    const std::size_t k = seq.gens.size();
    std::vector<std::vector<Elem>> cands(k);
    for (std::size_t j = 0; j < k; ++j) {
        const Elem gj = seq.gens[j];
        std::vector<bool> allowed_mask;
        if (j < opts.allowed.size() && !opts.allowed[j].empty()) {
            allowed_mask.assign(h.order(), false);
            for (Elem a : opts.allowed[j])
                if (a < h.order()) allowed_mask[a] = true;
        }
        for (Elem c = 0; c < h.order(); ++c) {
            if (!allowed_mask.empty() && !allowed_mask[c]) continue;
            if (iso) {
                if (h.elem_order(c) != g.elem_order(gj) || h.centralizer_size(c) != g.centralizer_size(gj) ||
                    h.cyclic_normalizer_size(c) != g.cyclic_normalizer_size(gj))
                    continue;
            } else if (g.elem_order(gj) % h.elem_order(c) != 0) {
                continue;
            }
            cands[j].push_back(c);
        }
    }
    std::vector<Elem> phi(g.order(), kUnset);
    std::vector<bool> used(h.order(), false);
    phi[g.identity()] = h.identity();
    used[h.identity()] = true;
    std::uint64_t nodes = 0;
    bool stop = false;
    std::vector<Elem> img(k, kUnset);

    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == k) {
            if (!on_hom(phi)) stop = true;
            return;
        }
        for (Elem c : cands[j]) {
            if (++nodes > opts.node_budget) throw BudgetExceeded("homomorphism search exceeded its node budget");
            img[j] = c;
            std::size_t assigned = 0;
            bool ok = true;
            const auto& steps = seq.tree[j];
            for (; assigned < steps.size(); ++assigned) {
                const auto& st = steps[assigned];
                const Elem v = h.mul(phi[st.parent], img[st.gen]);
                if (iso && used[v]) {
                    ok = false;
                    break;
                }
                phi[st.elem] = v;
                if (iso) used[v] = true;
            }
            if (ok)
                for (const auto& [x, i] : seq.checks[j])
                    if (phi[g.mul(x, seq.gens[i])] != h.mul(phi[x], img[i])) {
                        ok = false;
                        break;
                    }
            if (ok) rec(j + 1);
            for (std::size_t a = 0; a < assigned; ++a) {
                const Elem e = steps[a].elem;
                if (iso) used[phi[e]] = false;
                phi[e] = kUnset;
            }
            if (stop) return;
        }
    };
    rec(0);
    return nodes;
}

std::vector<GroupHom> hom_enumerate(const GroupRef& g, const GroupRef& h, bool iso_only, const Config& cfg) {
    if (iso_only) {
        if (g->order() > cfg.iso_limit) throw BudgetExceeded("isomorphism enumeration above the configured order limit");
        if (!same_invariants(*g, *h)) return {};
    } else if (g->order() > cfg.exhaustive_limit) {
        throw BudgetExceeded("homomorphism enumeration above the configured order limit");
    }
    const auto seq = generating_sequence(*g);
    std::vector<GroupHom> out;
    HomSearch opts;
    opts.kind = iso_only ? HomKind::Iso : HomKind::All;
    opts.node_budget = cfg.aut_budget;
    hom_search(*g, *h, seq, opts, [&](const std::vector<Elem>& m) {
        out.push_back(GroupHom{g, h, m});
        return true;
    });
    return out;
}

bool same_invariants(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.order() != h.order() || g.exponent() != h.exponent()) return false;
    auto stats = [](const FiniteGroup& x) {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> s;
        for (Elem a = 0; a < x.order(); ++a)
            s.emplace_back(x.elem_order(a), x.centralizer_size(a), x.cyclic_normalizer_size(a));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (stats(g) != stats(h)) return false;
    // center size is implied by the centralizer statistics; derived size is not
    auto gr = std::make_shared<FiniteGroup>(g);
    auto hr = std::make_shared<FiniteGroup>(h);
    return derived_subgroup(gr).size() == derived_subgroup(hr).size();
}

std::optional<GroupHom> find_isomorphism(const GroupRef& g, const GroupRef& h, const Config& cfg) {
    if (g->order() > cfg.iso_limit) throw BudgetExceeded("isomorphism search above the configured order limit");
    if (!same_invariants(*g, *h)) return std::nullopt;
    const auto seq = generating_sequence(*g);
    std::optional<GroupHom> found;
    HomSearch opts;
    opts.kind = HomKind::Iso;
    opts.node_budget = cfg.aut_budget;
    hom_search(*g, *h, seq, opts, [&](const std::vector<Elem>& m) {
        found = GroupHom{g, h, m};
        return false;
    });
    return found;
}

AutGenerators automorphism_generators(const GroupRef& g, const Config& cfg) {
    if (g->order() > cfg.iso_limit) throw BudgetExceeded("automorphism search above the configured order limit");
    AutGenerators out;
    out.seq = generating_sequence(*g);
    const auto& gens = out.seq.gens;
    const std::size_t k = gens.size();
    std::vector<std::vector<Elem>> t_maps;
    for (std::size_t i = k; i-- > 0;) {
        const Elem gi = gens[i];
        std::vector<bool> orbit(g->order(), false);
        std::vector<Elem> orbit_list;
        auto grow = [&](Elem start) {
            if (orbit[start]) return;
            orbit[start] = true;
            orbit_list.push_back(start);
        };
        auto close_orbit = [&] {
            for (std::size_t pos = 0; pos < orbit_list.size(); ++pos)
                for (const auto& t : t_maps) grow(t[orbit_list[pos]]);
        };
        grow(gi);
        close_orbit();
        HomSearch opts;
        opts.kind = HomKind::Iso;
        opts.node_budget = cfg.aut_budget;
        opts.allowed.assign(k, {});
        for (std::size_t a = 0; a < i; ++a) opts.allowed[a] = {gens[a]};
        for (Elem y = 0; y < g->order(); ++y) {
            if (orbit[y]) continue;
            if (g->elem_order(y) != g->elem_order(gi) || g->centralizer_size(y) != g->centralizer_size(gi) ||
                g->cyclic_normalizer_size(y) != g->cyclic_normalizer_size(gi))
                continue;
            if (out.seq.level_of[y] < i || y == g->identity()) continue;  // fixed pointwise by the stabilizer
            opts.allowed[i] = {y};
            std::vector<Elem> found;
            out.nodes += hom_search(*g, *g, out.seq, opts, [&](const std::vector<Elem>& m) {
                found = m;
                return false;
            });
            if (out.nodes > cfg.aut_budget) throw BudgetExceeded("automorphism search exceeded its node budget");
            if (found.empty()) continue;
            t_maps.push_back(std::move(found));
            grow(y);
            close_orbit();
        }
        out.order *= orbit_list.size();
    }
    for (auto& m : t_maps) out.gens.push_back(GroupHom{g, g, std::move(m)});
    return out;
}

std::vector<GroupHom> automorphism_closure(const std::vector<GroupHom>& gens, const GroupRef& g, std::size_t limit) {
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> list;
    std::vector<Elem> id(g->order());
    for (Elem i = 0; i < g->order(); ++i) id[i] = i;
    seen.insert(id);
    list.push_back(id);
    for (std::size_t pos = 0; pos < list.size(); ++pos)
        for (const auto& t : gens) {
            std::vector<Elem> c(g->order());
            for (Elem x = 0; x < g->order(); ++x) c[x] = t.map[list[pos][x]];
            if (seen.insert(c).second) {
                if (list.size() >= limit) throw BudgetExceeded("automorphism closure exceeded its limit");
                list.push_back(std::move(c));
            }
        }
    std::vector<GroupHom> out;
    for (auto& m : list) out.push_back(GroupHom{g, g, std::move(m)});
    return out;
}

} // namespace charcat::groups
