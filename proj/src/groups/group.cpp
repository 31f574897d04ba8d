#include "charcat/groups/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "charcat/core/errors.hpp"

namespace charcat::groups {

namespace {

std::uint64_t fnv1a(std::span<const Elem> xs) {
    std::uint64_t h = 1469598103934665603ULL;
    for (Elem x : xs) {
        for (int k = 0; k < 4; ++k) {
            h ^= (x >> (8 * k)) & 0xFFU;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

std::string hex8(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(8, '0');
    for (int i = 7; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[h & 0xFU];
        h >>= 4U;
    }
    return s;
}

void require_same(const GroupRef& a, const GroupRef& b, const char* what) {
    if (a->id() != b->id()) throw InvalidInput(std::string(what) + ": group mismatch " + a->id() + " vs " + b->id());
}

} // namespace

FiniteGroup::FiniteGroup(std::string id, std::vector<std::string> labels, std::vector<Elem> table)
    : id_(std::move(id)), n_(labels.size()), labels_(std::move(labels)), table_(std::move(table)) {
    if (n_ == 0) throw InvalidInput("group must be nonempty");
    if (table_.size() != n_ * n_) throw InvalidInput("table size does not match element count");
    for (Elem x : table_)
        if (x >= n_) throw InvalidInput("table entry out of range");
    {
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != n_) throw InvalidInput("element labels must be distinct");
    }
    // identity: the element whose row is the identity permutation
    bool found = false;
    for (Elem e = 0; e < n_ && !found; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw InvalidInput("table has no identity element");
    inverse_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
        std::vector<bool> row(n_, false), col(n_, false);
        bool has_inv = false;
        for (Elem b = 0; b < n_; ++b) {
            row[mul(a, b)] = true;
            col[mul(b, a)] = true;
            if (mul(a, b) == identity_) {
                if (mul(b, a) != identity_) throw InvalidInput("one-sided inverse in table");
                inverse_[a] = b;
                has_inv = true;
            }
        }
        if (!has_inv) throw InvalidInput("element " + labels_[a] + " has no inverse");
        if (std::find(row.begin(), row.end(), false) != row.end() ||
            std::find(col.begin(), col.end(), false) != col.end())
            throw InvalidInput("table is not a Latin square");
    }
    if (n_ <= 256) {
        for (Elem a = 0; a < n_; ++a)
            for (Elem b = 0; b < n_; ++b) {
                const Elem ab = mul(a, b);
                for (Elem c = 0; c < n_; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw InvalidInput("table is not associative at (" + labels_[a] + "," + labels_[b] + "," +
                                           labels_[c] + ")");
            }
    }
    orders_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
        std::uint32_t k = 1;
        Elem x = a;
        while (x != identity_) {
            x = mul(x, a);
            ++k;
        }
        orders_[a] = k;
    }
    centralizer_sizes_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
        std::uint32_t c = 0;
        for (Elem b = 0; b < n_; ++b)
            if (mul(a, b) == mul(b, a)) ++c;
        centralizer_sizes_[a] = c;
    }
    cyclic_normalizers_.assign(n_, 0);
    std::vector<bool> in_cyclic(n_, false);
    for (Elem a = 0; a < n_; ++a) {
        std::vector<Elem> powers;
        Elem x = identity_;
        do {
            powers.push_back(x);
            in_cyclic[x] = true;
            x = mul(x, a);
        } while (x != identity_);
        std::uint32_t c = 0;
        for (Elem g = 0; g < n_; ++g)
            if (in_cyclic[mul(mul(inverse_[g], a), g)]) ++c;
        cyclic_normalizers_[a] = c;
        for (Elem y : powers) in_cyclic[y] = false;
    }
}

Elem FiniteGroup::index_of(const std::string& label) const {
    for (Elem i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    throw InvalidInput("no element labelled '" + label + "' in " + id_);
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
    const auto ord = static_cast<std::int64_t>(orders_[a]);
    k %= ord;
    if (k < 0) k += ord;
    Elem r = identity_;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::uint32_t FiniteGroup::exponent() const {
    std::uint32_t e = 1;
    for (auto o : orders_) e = std::lcm(e, o);
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (auto c : centralizer_sizes_)
        if (c != n_) return false;
    return true;
}

GroupRef make_ref(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// ---------------------------------------------------------------------------

bool GroupHom::is_homomorphism() const {
    if (map.size() != dom->order()) return false;
    for (Elem x : map)
        if (x >= cod->order()) return false;
    for (Elem a = 0; a < dom->order(); ++a)
        for (Elem b = 0; b < dom->order(); ++b)
            if (map[dom->mul(a, b)] != cod->mul(map[a], map[b])) return false;
    return true;
}

bool GroupHom::is_injective() const {
    std::vector<bool> hit(cod->order(), false);
    for (Elem x : map) {
        if (hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<bool> hit(cod->order(), false);
    for (Elem x : map) hit[x] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool GroupHom::operator==(const GroupHom& o) const {
    return dom->id() == o.dom->id() && cod->id() == o.cod->id() && map == o.map;
}

GroupHom identity_hom(const GroupRef& g) {
    std::vector<Elem> m(g->order());
    std::iota(m.begin(), m.end(), Elem{0});
    return GroupHom{g, g, std::move(m)};
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
    require_same(g.cod, f.dom, "compose");
    std::vector<Elem> m(g.map.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = f.map[g.map[i]];
    return GroupHom{g.dom, f.cod, std::move(m)};
}

GroupHom inverse_hom(const GroupHom& iso) {
    if (!iso.is_isomorphism()) throw InvalidInput("inverse of a non-isomorphism");
    std::vector<Elem> m(iso.map.size());
    for (Elem i = 0; i < iso.map.size(); ++i) m[iso.map[i]] = i;
    return GroupHom{iso.cod, iso.dom, std::move(m)};
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupRef parent, std::vector<Elem> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent_->order(), false);
    for (Elem m : members_) {
        if (m >= parent_->order()) throw InvalidInput("subgroup member out of range");
        mask_[m] = true;
    }
    if (members_.empty() || !mask_[parent_->identity()]) throw InvalidInput("subgroup must contain the identity");
    for (Elem a : members_)
        for (Elem b : members_)
            if (!mask_[parent_->mul(a, b)]) throw InvalidInput("subset is not closed under the product");
}

std::size_t Subgroup::position(Elem a) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it == members_.end() || *it != a) throw InvalidInput("element is not a member of the subgroup");
    return static_cast<std::size_t>(it - members_.begin());
}

bool Subgroup::is_normal() const {
    for (Elem h : members_)
        for (Elem g = 0; g < parent_->order(); ++g)
            if (!mask_[parent_->conj(h, g)]) return false;
    return true;
}

bool Subgroup::operator==(const Subgroup& o) const {
    return parent_->id() == o.parent_->id() && members_ == o.members_;
}

bool Subgroup::is_subgroup_of(const Subgroup& o) const {
    if (parent_->id() != o.parent_->id()) return false;
    return std::all_of(members_.begin(), members_.end(), [&](Elem a) { return o.contains(a); });
}

std::string Subgroup::tag() const {
    return parent_->id() + "<" + std::to_string(members_.size()) + ":" + hex8(fnv1a(members_)) + ">";
}

GroupRef Subgroup::as_group() const {
    if (induced_) return induced_;
    if (members_.size() == parent_->order()) {
        induced_ = parent_;
        return induced_;
    }
    const std::size_t k = members_.size();
    std::vector<std::string> labels;
    labels.reserve(k);
    for (Elem m : members_) labels.push_back(parent_->label(m));
    std::vector<Elem> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table[i * k + j] = static_cast<Elem>(position(parent_->mul(members_[i], members_[j])));
    induced_ = make_ref(FiniteGroup(tag(), std::move(labels), std::move(table)));
    return induced_;
}

GroupHom Subgroup::inclusion() const {
    if (members_.size() == parent_->order()) return identity_hom(parent_);
    return GroupHom{as_group(), parent_, members_};
}

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup(g, {g->identity()}); }

Subgroup whole_group(const GroupRef& g) {
    std::vector<Elem> all(g->order());
    std::iota(all.begin(), all.end(), Elem{0});
    return Subgroup(g, std::move(all));
}

Subgroup subgroup_closure(const GroupRef& g, std::span<const Elem> seed) {
    std::vector<bool> in(g->order(), false);
    std::vector<Elem> members{g->identity()};
    in[g->identity()] = true;
    std::vector<Elem> gens;
    for (Elem s : seed) {
        if (s >= g->order()) throw InvalidInput("seed element out of range");
        if (s != g->identity()) gens.push_back(s);
    }
    // Right-multiplying the closure by generators reaches every product in a finite group.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Elem s : gens) {
            const Elem y = g->mul(members[i], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    return Subgroup(g, std::move(members));
}

Subgroup center(const GroupRef& g) {
    std::vector<Elem> z;
    for (Elem a = 0; a < g->order(); ++a)
        if (g->centralizer_size(a) == g->order()) z.push_back(a);
    return Subgroup(g, std::move(z));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
    require_same(a.parent(), b.parent(), "commutator_subgroup");
    const auto& g = a.parent();
    std::vector<bool> seen(g->order(), false);
    std::vector<Elem> comms;
    for (Elem x : a.members())
        for (Elem y : b.members()) {
            const Elem c = g->commutator(x, y);
            if (!seen[c]) {
                seen[c] = true;
                comms.push_back(c);
            }
        }
    return subgroup_closure(g, comms);
}

Subgroup derived_subgroup(const GroupRef& g) {
    const Subgroup w = whole_group(g);
    return commutator_subgroup(w, w);
}

Subgroup normal_closure(const GroupRef& g, std::span<const Elem> seed) {
    std::vector<bool> seen(g->order(), false);
    std::vector<Elem> conjugates;
    for (Elem s : seed)
        for (Elem x = 0; x < g->order(); ++x) {
            const Elem c = g->conj(s, x);
            if (!seen[c]) {
                seen[c] = true;
                conjugates.push_back(c);
            }
        }
    return subgroup_closure(g, conjugates);
}

Subgroup image(const GroupHom& f, const Subgroup& h) {
    require_same(h.parent(), f.dom, "image");
    std::vector<Elem> out;
    for (Elem a : h.members()) out.push_back(f.map[a]);
    return Subgroup(f.cod, std::move(out));
}

Subgroup image(const GroupHom& f) { return image(f, whole_group(f.dom)); }

Subgroup kernel(const GroupHom& f) {
    std::vector<Elem> k;
    for (Elem a = 0; a < f.dom->order(); ++a)
        if (f.map[a] == f.cod->identity()) k.push_back(a);
    return Subgroup(f.dom, std::move(k));
}

Subgroup preimage(const GroupHom& f, const Subgroup& k) {
    require_same(k.parent(), f.cod, "preimage");
    std::vector<Elem> out;
    for (Elem a = 0; a < f.dom->order(); ++a)
        if (k.contains(f.map[a])) out.push_back(a);
    return Subgroup(f.dom, std::move(out));
}

std::vector<Subgroup> subgroups_of_order(const GroupRef& g, std::size_t order) {
    if (g->order() > 1000) throw BudgetExceeded("subgroup enumeration is limited to order 1000");
    if (g->order() % order != 0) return {};
    // Every subgroup is a join of cyclic subgroups; grow joins to a fixpoint, keeping only
    // subgroups whose order divides the target.
    std::set<std::vector<Elem>> found;
    std::vector<Subgroup> cyclic;
    {
        std::set<std::vector<Elem>> seen;
        for (Elem a = 0; a < g->order(); ++a) {
            if (order % g->elem_order(a) != 0) continue;
            const Elem seed[] = {a};
            Subgroup s = subgroup_closure(g, seed);
            if (seen.insert(s.members()).second) cyclic.push_back(std::move(s));
        }
    }
    std::vector<Subgroup> frontier = cyclic;
    for (const auto& c : cyclic) found.insert(c.members());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& s : frontier)
            for (const auto& c : cyclic) {
                if (c.is_subgroup_of(s)) continue;
                std::vector<Elem> seed = s.members();
                seed.insert(seed.end(), c.members().begin(), c.members().end());
                Subgroup j = subgroup_closure(g, seed);
                if (order % j.size() != 0) continue;
                if (found.insert(j.members()).second) next.push_back(std::move(j));
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto& m : found)
        if (m.size() == order) out.emplace_back(g, m);
    return out;
}

Quotient quotient(const Subgroup& n) {
    const auto& g = n.parent();
    if (!n.is_normal()) throw InvalidInput("quotient by a non-normal subgroup");
    const std::size_t order = g->order();
    std::vector<Elem> coset_of(order, static_cast<Elem>(-1));
    std::vector<Elem> reps;
    for (Elem a = 0; a < order; ++a) {
        if (coset_of[a] != static_cast<Elem>(-1)) continue;
        const auto c = static_cast<Elem>(reps.size());
        reps.push_back(a);
        for (Elem m : n.members()) coset_of[g->mul(a, m)] = c;
    }
    const std::size_t k = reps.size();
    std::vector<Elem> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset_of[g->mul(reps[i], reps[j])];
    std::vector<std::string> labels;
    for (Elem r : reps) labels.push_back("[" + g->label(r) + "]");
    const std::string id = n.size() == 1 ? g->id() + "/1" : g->id() + "/" + n.tag();
    GroupRef q = make_ref(FiniteGroup(id, std::move(labels), std::move(table)));
    return Quotient{q, GroupHom{g, q, std::move(coset_of)}};
}

NoetherFactorization noether_factor(const GroupHom& f) {
    const Subgroup k = kernel(f);
    const Subgroup im = image(f);
    Quotient q = k.size() == 1 ? Quotient{f.dom, identity_hom(f.dom)} : quotient(k);
    const GroupRef img = im.as_group();
    std::vector<Elem> psi(q.group->order(), 0);
    for (Elem a = 0; a < f.dom->order(); ++a) {
        const Elem target = im.size() == f.cod->order() ? f.map[a] : static_cast<Elem>(im.position(f.map[a]));
        psi[q.proj.map[a]] = target;
    }
    return NoetherFactorization{q.proj, GroupHom{q.group, img, std::move(psi)}, im.inclusion()};
}

GroupHom restrict_hom(const GroupHom& phi, const Subgroup& a, const Subgroup& b) {
    require_same(a.parent(), phi.dom, "restrict_hom");
    require_same(b.parent(), phi.cod, "restrict_hom");
    const GroupRef ga = a.as_group(), gb = b.as_group();
    std::vector<Elem> m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Elem y = phi.map[a.members()[i]];
        if (!b.contains(y)) throw InvalidInput("restriction does not land in the target subgroup");
        m[i] = b.size() == phi.cod->order() ? y : static_cast<Elem>(b.position(y));
    }
    if (a.size() == phi.dom->order()) {
        std::vector<Elem> full(phi.dom->order());
        for (std::size_t i = 0; i < a.size(); ++i) full[a.members()[i]] = m[i];
        return GroupHom{ga, gb, std::move(full)};
    }
    return GroupHom{ga, gb, std::move(m)};
}

GroupHom induced_on_quotients(const GroupHom& phi, const Quotient& qn, const Quotient& qm) {
    require_same(qn.proj.dom, phi.dom, "induced_on_quotients");
    require_same(qm.proj.dom, phi.cod, "induced_on_quotients");
    std::vector<Elem> m(qn.group->order(), static_cast<Elem>(-1));
    for (Elem a = 0; a < phi.dom->order(); ++a) {
        const Elem c = qn.proj.map[a];
        const Elem v = qm.proj.map[phi.map[a]];
        if (m[c] == static_cast<Elem>(-1))
            m[c] = v;
        else if (m[c] != v)
            throw InvalidInput("map does not descend to the quotients");
    }
    return GroupHom{qn.group, qm.group, std::move(m)};
}

FiniteGroup from_rule(std::string id, std::size_t n, const std::function<std::string(Elem)>& label,
                      const std::function<Elem(Elem, Elem)>& mul) {
    std::vector<std::string> labels(n);
    for (Elem i = 0; i < n; ++i) labels[i] = label(i);
    std::vector<Elem> table(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = mul(a, b);
    return FiniteGroup(std::move(id), std::move(labels), std::move(table));
}

FiniteGroup relabel(const FiniteGroup& g, std::string id, std::span<const Elem> perm,
                    const std::function<std::string(const std::string&)>& rename) {
    const std::size_t n = g.order();
    if (perm.size() != n) throw InvalidInput("relabel permutation has the wrong length");
    std::vector<Elem> back(n, static_cast<Elem>(-1));
    for (Elem i = 0; i < n; ++i) {
        if (perm[i] >= n || back[perm[i]] != static_cast<Elem>(-1)) throw InvalidInput("relabel map is not a permutation");
        back[perm[i]] = i;
    }
    std::vector<std::string> labels(n);
    std::vector<Elem> table(n * n);
    for (Elem i = 0; i < n; ++i) {
        labels[i] = rename ? rename(g.label(back[i])) : g.label(back[i]);
        for (Elem j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = perm[g.mul(back[i], back[j])];
    }
    return FiniteGroup(std::move(id), std::move(labels), std::move(table));
}

} // namespace charcat::groups
