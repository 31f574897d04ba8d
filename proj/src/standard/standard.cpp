#include "charcat/standard/standard.hpp"

#include <algorithm>

#include "charcat/core/errors.hpp"
#include "charcat/ff/fp.hpp"
#include "charcat/ff/matrix.hpp"
#include "charcat/groups/constructors.hpp"
#include "charcat/groups/homs.hpp"

namespace charcat::standard {

namespace {

using abscat::MorId;
using abscat::MorphismClass;

void require_budget(const groups::FiniteGroup& g, std::size_t arity, const Config& cfg) {
    if (g.order() > cfg.tuple_budget)
        throw BudgetExceeded("word scans need |G| <= " + std::to_string(cfg.tuple_budget) + ", got " +
                             std::to_string(g.order()) + " for " + g.id());
    if (arity > cfg.max_word_arity)
        throw BudgetExceeded("word arity " + std::to_string(arity) + " exceeds " + std::to_string(cfg.max_word_arity));
}

/// Calls fn on every tuple in G^arity, in lexicographic order with the first entry slowest.
template <class Fn>
void for_each_tuple(std::size_t order, std::size_t arity, Fn&& fn) {
    std::vector<Elem> t(arity, 0);
    for (;;) {
        fn(t);
        std::size_t i = arity;
        while (i > 0 && ++t[i - 1] == order) t[--i] = 0;
        if (i == 0) return;
    }
}

/// Word values on every tuple, indexed by the base-|G| number with the first entry most significant.
std::vector<Elem> value_table(const groups::FiniteGroup& g, const CompiledWord& cw) {
    std::vector<Elem> vals;
    for_each_tuple(g.order(), cw.arity(), [&](const std::vector<Elem>& t) { vals.push_back(cw(g, t)); });
    return vals;
}

/// True when right-multiplying any argument by z never changes the value.
bool is_marginal(const groups::FiniteGroup& g, const CompiledWord& cw, const std::vector<Elem>& vals, Elem z) {
    const std::size_t n = g.order(), arity = cw.arity();
    std::vector<std::size_t> weight(arity, 1);
    for (std::size_t i = arity; i-- > 1;) weight[i - 1] = weight[i] * n;
    std::size_t idx = 0;
    bool ok = true;
    for_each_tuple(n, arity, [&](const std::vector<Elem>& t) {
        if (ok)
            for (std::size_t i = 0; i < arity; ++i) {
                const std::size_t moved = idx + (static_cast<std::size_t>(g.mul(t[i], z)) - t[i]) * weight[i];
                if (vals[moved] != vals[idx]) {
                    ok = false;
                    break;
                }
            }
        ++idx;
    });
    return ok;
}

} // namespace

Subgroup verbal_subgroup(const GroupRef& g, const std::vector<Word>& words, const Config& cfg) {
    std::vector<char> hit(g->order(), 0);
    for (const auto& w : words) {
        const CompiledWord cw(w);
        require_budget(*g, cw.arity(), cfg);
        for_each_tuple(g->order(), cw.arity(), [&](const std::vector<Elem>& t) { hit[cw(*g, t)] = 1; });
    }
    std::vector<Elem> values;
    for (Elem x = 0; x < g->order(); ++x)
        if (hit[x]) values.push_back(x);
    return groups::subgroup_closure(g, values);
}

bool in_variety(const GroupRef& g, const std::vector<Word>& words, const Config& cfg) {
    return verbal_subgroup(g, words, cfg).size() == 1;
}

Subgroup marginal_subgroup(const GroupRef& g, const Word& w, const Config& cfg) {
    const CompiledWord cw(w);
    require_budget(*g, cw.arity(), cfg);
    const auto vals = value_table(*g, cw);
    std::vector<Elem> members;
    for (Elem z = 0; z < g->order(); ++z)
        if (is_marginal(*g, cw, vals, z)) members.push_back(z);
    return Subgroup(g, std::move(members));
}

bool word_factors_through(const Subgroup& m, const Word& w, const Config& cfg) {
    const auto& g = *m.parent();
    const CompiledWord cw(w);
    require_budget(g, cw.arity(), cfg);
    const auto vals = value_table(g, cw);
    return std::all_of(m.members().begin(), m.members().end(),
                       [&](Elem z) { return is_marginal(g, cw, vals, z); });
}

std::shared_ptr<const abscat::GroupCategory> iso_core(const std::vector<GroupRef>& catalog, const Config& cfg) {
    return abscat::build_catalog_cat(catalog, MorphismClass::Isos, cfg);
}

std::shared_ptr<const abscat::GroupCategory> all_homs(const std::vector<GroupRef>& catalog, const Config& cfg) {
    return abscat::build_catalog_cat(catalog, MorphismClass::AllHoms, cfg);
}

Counital center_counital(std::shared_ptr<const abscat::GroupCategory> isocore) {
    auto c = counitals::subgroup_counital("center", std::move(isocore), [](const GroupRef& g) { return groups::center(g); });
    c.isosceles = c.flat = true;
    return c;
}

Counital derived_counit(std::shared_ptr<const abscat::GroupCategory> domain) {
    auto c = counitals::subgroup_counital("derived", std::move(domain),
                                          [](const GroupRef& g) { return groups::derived_subgroup(g); });
    c.isosceles = c.flat = true;
    return c;
}

Unital abelianization_unit(std::shared_ptr<const abscat::GroupCategory> domain) {
    return counitals::quotient_unital("abelianization", std::move(domain),
                                      [](const GroupRef& g) { return groups::derived_subgroup(g); });
}

Counital verbal_counit(std::shared_ptr<const abscat::GroupCategory> domain, std::vector<Word> words, const Config& cfg) {
    auto c = counitals::subgroup_counital("verbal", std::move(domain), [words = std::move(words), cfg](const GroupRef& g) {
        return verbal_subgroup(g, words, cfg);
    });
    c.isosceles = c.flat = true;
    return c;
}

Unital verbal_unit(std::shared_ptr<const abscat::GroupCategory> domain, std::vector<Word> words, const Config& cfg) {
    return counitals::quotient_unital("verbal quotient", std::move(domain),
                                      [words = std::move(words), cfg](const GroupRef& g) {
                                          return verbal_subgroup(g, words, cfg);
                                      });
}

Counital marginal_counital(std::shared_ptr<const abscat::GroupCategory> domain, Word w, const Config& cfg) {
    auto c = counitals::subgroup_counital("marginal", std::move(domain), [w = std::move(w), cfg](const GroupRef& g) {
        return marginal_subgroup(g, w, cfg);
    });
    c.isosceles = true;
    return c;
}

// ---------------------------------------------------------------------------

AbelianizationAdjunction::AbelianizationAdjunction(std::vector<GroupRef> groups_in, std::vector<GroupRef> abelian,
                                                   const Config& cfg)
    : cfg_(cfg) {
    for (const auto& u : groups_in) {
        groups::Quotient q = u->is_abelian() ? groups::Quotient{u, groups::identity_hom(u)}
                                             : groups::quotient(groups::derived_subgroup(u));
        source_of_[q.group->id()] = u->id();
        refl_.emplace(u->id(), std::move(q));
    }
    for (const auto& v : abelian)
        if (!v->is_abelian()) throw InvalidInput("adjunction target " + v->id() + " is not abelian");

    auto& d = data_;
    d.a = &ab_;
    d.b = &grp_;
    d.f = abscat::Functor{"abelianization", &grp_, &ab_, [this](MorId b) -> abscat::MorTerm {
                              const auto& phi = grp_.payload(b);
                              return ab_.intern(groups::induced_on_quotients(phi, reflection(phi.dom),
                                                                             reflection(phi.cod)));
                          }};
    d.g = abscat::Functor{"inclusion", &ab_, &grp_,
                          [this](MorId a) -> abscat::MorTerm { return grp_.intern(ab_.payload(a)); }};
    for (const auto& u : groups_in) d.b_objects.push_back(grp_.identity(u));
    for (const auto& v : abelian) d.a_objects.push_back(ab_.identity(v));
    d.hom_a = [this](MorId s, MorId t) {
        return ab_.homs(ab_.payload(s).dom, ab_.payload(t).dom, false, cfg_);
    };
    d.hom_b = [this](MorId s, MorId t) {
        return grp_.homs(grp_.payload(s).dom, grp_.payload(t).dom, false, cfg_);
    };
    d.psi = [this](MorId x) -> abscat::MorTerm {
        const auto& phi = ab_.payload(x);
        auto it = source_of_.find(phi.dom->id());
        if (it == source_of_.end()) return abscat::Bot;
        return grp_.intern(groups::compose(phi, refl_.at(it->second).proj));
    };
    d.psi_inv = [this](MorId y) -> abscat::MorTerm {
        const auto& phi = grp_.payload(y);
        if (!phi.cod->is_abelian()) return abscat::Bot;
        const auto& q = reflection(phi.dom);
        std::vector<Elem> m(q.group->order(), static_cast<Elem>(-1));
        for (Elem u = 0; u < phi.dom->order(); ++u) {
            Elem& slot = m[q.proj(u)];
            if (slot == static_cast<Elem>(-1)) slot = phi(u);
            else if (slot != phi(u)) return abscat::Bot;
        }
        return ab_.intern(GroupHom{q.group, phi.cod, std::move(m)});
    };
}

const groups::Quotient& AbelianizationAdjunction::reflection(const GroupRef& u) const {
    auto it = refl_.find(u->id());
    if (it == refl_.end()) throw InvalidInput(u->id() + " is not an object of the adjunction");
    return it->second;
}

// ---------------------------------------------------------------------------

void RottlaenderSpec::validate() const {
    if (!ff::is_prime(p) || !ff::is_prime(q)) throw InvalidInput("p and q must be prime");
    if (eigenvalues.empty()) throw InvalidInput("at least one eigenvalue is required");
    if (m() >= p) throw InvalidInput("m must be smaller than p");
    if (q % p != 1) throw InvalidInput("q must be 1 mod p");
    for (auto a : eigenvalues) {
        if (a % q == 1) throw InvalidInput("eigenvalue " + std::to_string(a) + " equals 1");
        if (a % q == 0 || ff::pow_mod(a % q, p, q) != 1)
            throw InvalidInput("eigenvalue " + std::to_string(a) + " does not have order p in F_q");
    }
    for (std::size_t i = 0; i < m(); ++i)
        for (std::size_t j = 0; j < m(); ++j) {
            if (i == j) continue;
            for (std::uint64_t u = 1; u < p; ++u) {
                if (ff::pow_mod(eigenvalues[i] % q, u, q) != eigenvalues[j] % q) continue;
                for (std::uint64_t k = 1; k <= m(); ++k)
                    if ((ff::pow_mod(u, k, p) + p - 1) % p == 0)
                        throw InvalidInput("eigenvalues " + std::to_string(eigenvalues[i]) + " and " +
                                           std::to_string(eigenvalues[j]) + " violate the exponent condition at u=" +
                                           std::to_string(u) + ", k=" + std::to_string(k));
            }
        }
}

std::string RottlaenderSpec::id() const {
    std::string s = "Rott(" + std::to_string(p) + "," + std::to_string(q) + ";";
    for (std::size_t i = 0; i < m(); ++i) s += (i ? "," : "") + std::to_string(eigenvalues[i]);
    return s + ")";
}

GroupRef rottlaender_group(const RottlaenderSpec& spec) {
    spec.validate();
    std::vector<ff::Residue> diag;
    for (auto a : spec.eigenvalues) diag.push_back(a % spec.q);
    return groups::make_ref(groups::cyclic_on_vectors(spec.id(), spec.p, ff::Mat::diagonal(spec.q, diag)));
}

Subgroup rottlaender_eigenspace(const GroupRef& g, const RottlaenderSpec& spec, std::size_t k) {
    if (k >= spec.m()) throw InvalidInput("eigenvalue index out of range");
    std::uint64_t step = 1;
    for (std::size_t i = 0; i < k; ++i) step *= spec.q;
    std::vector<Elem> members;
    for (std::uint64_t c = 0; c < spec.q; ++c) members.push_back(static_cast<Elem>(c * step));
    std::sort(members.begin(), members.end());
    return Subgroup(g, std::move(members));
}

std::vector<Counital> rottlaender_counitals(const RottlaenderSpec& spec, const Config& cfg) {
    const GroupRef g = rottlaender_group(spec);
    auto core = abscat::build_catalog_cat({g}, MorphismClass::Isos, cfg, "Aut(" + g->id() + ")");
    std::vector<Counital> out;
    for (std::size_t k = 0; k < spec.m(); ++k) {
        auto c = counitals::subgroup_counital("eigenspace " + std::to_string(spec.eigenvalues[k]), core,
                                              [spec, k](const GroupRef& x) { return rottlaender_eigenspace(x, spec, k); });
        c.isosceles = true;
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------

IsoclinismData isoclinism_data(const GroupRef& g) {
    IsoclinismData d{groups::quotient(groups::center(g)), groups::derived_subgroup(g), {}, true};
    const std::size_t n = d.quotient.group->order();
    std::vector<Elem> rep(n, static_cast<Elem>(-1));
    for (Elem x = 0; x < g->order(); ++x)
        if (rep[d.quotient.proj(x)] == static_cast<Elem>(-1)) rep[d.quotient.proj(x)] = x;
    d.table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            d.table[a * n + b] = static_cast<Elem>(d.derived.position(g->commutator(rep[a], rep[b])));
    for (Elem x = 0; x < g->order(); ++x)
        for (Elem y = 0; y < g->order(); ++y)
            if (d.table[d.quotient.proj(x) * n + d.quotient.proj(y)] != d.derived.position(g->commutator(x, y)))
                d.square_commutes = false;
    return d;
}

std::optional<Isoclinism> find_isoclinism(const GroupRef& g, const GroupRef& h, const Config& cfg) {
    const auto dg = isoclinism_data(g), dh = isoclinism_data(h);
    const std::size_t n = dg.quotient.group->order();
    if (n != dh.quotient.group->order() || dg.derived.size() != dh.derived.size()) return std::nullopt;
    const auto alphas = groups::hom_enumerate(dg.quotient.group, dh.quotient.group, true, cfg);
    const auto betas = groups::hom_enumerate(dg.derived.as_group(), dh.derived.as_group(), true, cfg);
    for (const auto& alpha : alphas)
        for (const auto& beta : betas) {
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                for (std::size_t b = 0; b < n && ok; ++b)
                    ok = beta(dg.table[a * n + b]) == dh.table[alpha(static_cast<Elem>(a)) * n + alpha(static_cast<Elem>(b))];
            if (ok) return Isoclinism{alpha, beta};
        }
    return std::nullopt;
}

} // namespace charcat::standard
