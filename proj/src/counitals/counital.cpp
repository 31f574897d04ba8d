#include "charcat/counitals/counital.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "charcat/core/errors.hpp"

namespace charcat::counitals {

namespace {

using groups::Quotient;

/// A rule defined on the objects of `domain` only, looked up by group id.
SubgroupRule indexed_rule(std::shared_ptr<const GroupCategory> domain, std::vector<Subgroup> subs) {
    auto shared = std::make_shared<const std::vector<Subgroup>>(std::move(subs));
    return [domain = std::move(domain), shared](const GroupRef& g) { return shared->at(domain->object_index(g->id())); };
}

bool maps_into(const GroupHom& phi, const Subgroup& a, const Subgroup& b) {
    return std::all_of(a.members().begin(), a.members().end(), [&](Elem x) { return b.contains(phi(x)); });
}

/// Visits every morphism of the domain, or cfg.sample_count seeded draws past cfg.pair_budget.
template <class Fn>
bool visit_morphisms(const GroupCategory& d, const Config& cfg, Fn&& fn) {
    const auto all = d.morphisms();
    if (all.size() <= cfg.pair_budget) {
        for (MorId f : all) fn(f);
        return true;
    }
    Sampler s(cfg.seed);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) fn(all[s.below(all.size())]);
    return false;
}

/// Visits composable pairs (f, g) with src f = tgt g, exhaustively within cfg.pair_budget.
template <class Fn>
bool visit_composable(const GroupCategory& d, const Config& cfg, Fn&& fn) {
    const auto all = d.morphisms();
    std::vector<std::vector<MorId>> by_tgt(d.object_count());
    for (MorId g : all) by_tgt[GroupCategory::tgt_obj(g)].push_back(g);
    std::uint64_t pairs = 0;
    for (MorId f : all) pairs += by_tgt[GroupCategory::src_obj(f)].size();
    if (pairs <= cfg.pair_budget) {
        for (MorId f : all)
            for (MorId g : by_tgt[GroupCategory::src_obj(f)]) fn(f, g);
        return true;
    }
    Sampler s(cfg.seed + 1);
    for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
        const MorId f = all[s.below(all.size())];
        const auto& gs = by_tgt[GroupCategory::src_obj(f)];
        fn(f, gs[s.below(gs.size())]);
    }
    return false;
}

std::vector<std::string> names(const GroupCategory& d, std::initializer_list<MorId> fs) {
    std::vector<std::string> out;
    for (MorId f : fs) out.push_back(d.name(f));
    return out;
}

/// The induced map X/N -> im(phi) of a hom phi constant on the cosets of N.
std::optional<GroupHom> factor_through(const GroupHom& phi, const Quotient& q, const Subgroup& target) {
    const GroupHom co = groups::restrict_hom(phi, groups::whole_group(phi.dom), target);
    std::vector<Elem> m(q.group->order(), static_cast<Elem>(-1));
    for (Elem x = 0; x < phi.dom->order(); ++x) {
        Elem& slot = m[q.proj(x)];
        if (slot == static_cast<Elem>(-1)) slot = co(x);
        else if (slot != co(x)) return std::nullopt;
    }
    return GroupHom{q.group, co.cod, std::move(m)};
}

} // namespace

Subgroup Counital::image_at(std::size_t obj) const { return groups::image(components.at(obj)); }

Counital subgroup_counital(std::string name, std::shared_ptr<const GroupCategory> domain, SubgroupRule rule) {
    auto subs = std::make_shared<std::vector<Subgroup>>();
    for (const auto& x : domain->objects()) subs->push_back(rule(x));
    Counital c;
    c.name = std::move(name);
    c.domain = domain;
    for (const auto& s : *subs) c.components.push_back(s.inclusion());
    c.c_mor = [domain, subs](MorId f) -> std::optional<GroupHom> {
        const auto& a = (*subs)[GroupCategory::src_obj(f)];
        const auto& b = (*subs)[GroupCategory::tgt_obj(f)];
        const auto& phi = domain->payload(f);
        if (!maps_into(phi, a, b)) return std::nullopt;
        return groups::restrict_hom(phi, a, b);
    };
    c.monic = true;
    c.rule = std::move(rule);
    return c;
}

Unital quotient_unital(std::string name, std::shared_ptr<const GroupCategory> domain, SubgroupRule rule) {
    auto subs = std::make_shared<std::vector<Subgroup>>();
    auto quots = std::make_shared<std::vector<Quotient>>();
    for (const auto& x : domain->objects()) {
        subs->push_back(rule(x));
        quots->push_back(groups::quotient(subs->back()));
    }
    Unital u;
    u.name = std::move(name);
    u.domain = domain;
    for (const auto& q : *quots) u.components.push_back(q.proj);
    u.u_mor = [domain, subs, quots](MorId f) -> std::optional<GroupHom> {
        const auto s = GroupCategory::src_obj(f), t = GroupCategory::tgt_obj(f);
        const auto& phi = domain->payload(f);
        if (!maps_into(phi, (*subs)[s], (*subs)[t])) return std::nullopt;
        return groups::induced_on_quotients(phi, (*quots)[s], (*quots)[t]);
    };
    u.epic = true;
    return u;
}

Report check_counital(const Counital& eta, const Config& cfg) {
    Report r("counital " + eta.name);
    r.seed = cfg.seed;
    const auto& d = *eta.domain;
    const auto& objs = d.objects();
    r.record("one component per object", eta.components.size() == objs.size());
    if (eta.components.size() != objs.size()) return r;

    bool all_injective = true;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const auto& c = eta.components[i];
        r.record("eta_X : C(X) -> X", c.cod->id() == objs[i]->id() && c.is_homomorphism(), {objs[i]->id()});
        all_injective = all_injective && c.is_injective();
    }
    r.record("monic flag matches the components", eta.monic == all_injective,
             {eta.monic ? "flagged monic" : "not flagged monic"});

    for (MorId e : d.identities()) {
        const auto c = eta.c_mor(e);
        const auto& cx = eta.components[GroupCategory::src_obj(e)].dom;
        r.record("C(id) = id", c && *c == groups::identity_hom(cx), {d.name(e)});
    }

    r.law("C(phi) is defined");
    r.law("C(phi) : C(X) -> C(Y)");
    r.law("eta_Y C(phi) = phi eta_X");
    const bool ex1 = visit_morphisms(d, cfg, [&](MorId f) {
        const auto c = eta.c_mor(f);
        r.record("C(phi) is defined", c.has_value(), {d.name(f)});
        if (!c) return;
        const auto& ex = eta.components[GroupCategory::src_obj(f)];
        const auto& ey = eta.components[GroupCategory::tgt_obj(f)];
        const bool typed = c->dom->id() == ex.dom->id() && c->cod->id() == ey.dom->id();
        r.record("C(phi) : C(X) -> C(Y)", typed, {d.name(f)});
        if (typed)
            r.record("eta_Y C(phi) = phi eta_X",
                     groups::compose(ey, *c) == groups::compose(d.payload(f), ex), {d.name(f)});
    });

    r.law("C(fg) = C(f)C(g)");
    const bool ex2 = visit_composable(d, cfg, [&](MorId f, MorId g) {
        const auto fg = d.compose(f, g);
        if (!fg) return;
        const auto cf = eta.c_mor(f), cg = eta.c_mor(g), cfg_ = eta.c_mor(*fg);
        if (!cf || !cg || !cfg_) return;
        if (cg->cod->id() != cf->dom->id()) return;
        r.record("C(fg) = C(f)C(g)", *cfg_ == groups::compose(*cf, *cg), names(d, {f, g}));
    });
    r.exhaustive = ex1 && ex2;
    if (!r.exhaustive) r.notes.push_back("morphisms sampled with seed " + std::to_string(cfg.seed));
    return r;
}

Report check_unital(const Unital& eta, const Config& cfg) {
    Report r("unital " + eta.name);
    r.seed = cfg.seed;
    const auto& d = *eta.domain;
    const auto& objs = d.objects();
    r.record("one component per object", eta.components.size() == objs.size());
    if (eta.components.size() != objs.size()) return r;

    bool all_surjective = true;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const auto& c = eta.components[i];
        r.record("eta_X : X -> U(X)", c.dom->id() == objs[i]->id() && c.is_homomorphism(), {objs[i]->id()});
        all_surjective = all_surjective && c.is_surjective();
    }
    r.record("epic flag matches the components", eta.epic == all_surjective,
             {eta.epic ? "flagged epic" : "not flagged epic"});

    for (MorId e : d.identities()) {
        const auto u = eta.u_mor(e);
        const auto& ux = eta.components[GroupCategory::src_obj(e)].cod;
        r.record("U(id) = id", u && *u == groups::identity_hom(ux), {d.name(e)});
    }

    r.law("U(phi) is defined");
    r.law("U(phi) eta_X = eta_Y phi");
    const bool ex1 = visit_morphisms(d, cfg, [&](MorId f) {
        const auto u = eta.u_mor(f);
        r.record("U(phi) is defined", u.has_value(), {d.name(f)});
        if (!u) return;
        const auto& ex = eta.components[GroupCategory::src_obj(f)];
        const auto& ey = eta.components[GroupCategory::tgt_obj(f)];
        if (u->dom->id() != ex.cod->id() || u->cod->id() != ey.cod->id()) {
            r.record("U(phi) eta_X = eta_Y phi", false, {d.name(f)}, "U(phi) has the wrong type");
            return;
        }
        r.record("U(phi) eta_X = eta_Y phi", groups::compose(*u, ex) == groups::compose(ey, d.payload(f)),
                 {d.name(f)});
    });

    r.law("U(fg) = U(f)U(g)");
    const bool ex2 = visit_composable(d, cfg, [&](MorId f, MorId g) {
        const auto fg = d.compose(f, g);
        if (!fg) return;
        const auto uf = eta.u_mor(f), ug = eta.u_mor(g), ufg = eta.u_mor(*fg);
        if (!uf || !ug || !ufg || ug->cod->id() != uf->dom->id()) return;
        r.record("U(fg) = U(f)U(g)", *ufg == groups::compose(*uf, *ug), names(d, {f, g}));
    });
    r.exhaustive = ex1 && ex2;
    return r;
}

Extension extend_to_isocore(std::shared_ptr<const GroupCategory> isocore, std::size_t g, const Subgroup& h,
                            const Config& cfg) {
    if (isocore->kind() != abscat::MorphismClass::Isos) throw InvalidInput("extension needs an iso-core category");
    const auto& objs = isocore->objects();
    if (g >= objs.size() || objs[g]->id() != h.parent()->id())
        throw InvalidInput("subgroup parent is not the chosen object of " + isocore->id());

    Extension ext;
    ext.report.set_subject("extension of " + h.tag() + " over " + isocore->id());
    ext.certified = is_characteristic(h, cfg).holds;
    if (!ext.certified) ext.report.notes.push_back("subgroup is not characteristic; transport independence not asserted");

    const auto gi = static_cast<std::uint32_t>(g);
    for (std::uint32_t j = 0; j < objs.size(); ++j) {
        const auto& isos = isocore->homs(gi, j);
        if (isos.empty()) {
            ext.sigma.push_back(groups::trivial_subgroup(objs[j]));
            continue;
        }
        std::vector<Elem> seed;
        const Subgroup first = transport(h, isos.front());
        for (const auto& alpha : isos) {
            const Subgroup img = transport(h, alpha);
            if (ext.certified)
                ext.report.record("transport is the same for every iso", img == first, {objs[j]->id()});
            seed.insert(seed.end(), img.members().begin(), img.members().end());
        }
        ext.sigma.push_back(groups::subgroup_closure(objs[j], seed));
    }

    ext.counital = subgroup_counital("extension of " + h.tag(), isocore, indexed_rule(isocore, ext.sigma));
    ext.counital.isosceles = true;
    ext.report.merge(check_counital(ext.counital, cfg), "counital: ");

    // lambda_G : H -> sigma(G) with rho_G = sigma_G lambda_G.
    const Subgroup& sg = ext.sigma[g];
    if (!maps_into(groups::identity_hom(h.parent()), h, sg)) {
        ext.report.record("lambda_G : H -> sigma(G) exists", false, {h.tag()});
        return ext;
    }
    const GroupHom lambda = groups::restrict_hom(groups::identity_hom(h.parent()), h, sg);
    ext.report.record("lambda_G is an isomorphism", lambda.is_isomorphism(), {h.tag(), sg.tag()});
    ext.report.record("rho_G = sigma_G lambda_G", groups::compose(sg.inclusion(), lambda) == h.inclusion(), {h.tag()});

    ext.report.law("lambda_G R(a) = S(a) lambda_G");
    const auto& auts = isocore->homs(gi, gi);
    auto check_aut = [&](std::uint32_t k) {
        const MorId a = GroupCategory::pack(gi, gi, k);
        const auto& phi = auts[k];
        const auto s = ext.counital.c_mor(a);
        if (!maps_into(phi, h, h) || !s) {
            ext.report.record("lambda_G R(a) = S(a) lambda_G", false, {isocore->name(a)}, "R(a) or S(a) undefined");
            return;
        }
        const GroupHom ra = groups::restrict_hom(phi, h, h);
        ext.report.record("lambda_G R(a) = S(a) lambda_G",
                          groups::compose(lambda, ra) == groups::compose(*s, lambda), {isocore->name(a)});
    };
    if (auts.size() <= cfg.pair_budget) {
        for (std::uint32_t k = 0; k < auts.size(); ++k) check_aut(k);
    } else {
        Sampler s(cfg.seed);
        for (std::uint64_t i = 0; i < cfg.sample_count; ++i) check_aut(static_cast<std::uint32_t>(s.below(auts.size())));
        ext.report.exhaustive = false;
    }
    return ext;
}

Internalization internalize(const Counital& eta, const abscat::GrpCat& ambient, std::size_t limit, const Config& cfg) {
    if (!eta.rule) throw InvalidInput("internalize needs a counital with a subgroup rule");
    Internalization out;
    out.report.set_subject("internalization of " + eta.name);

    std::map<std::string, Subgroup> sub;
    out.objects = eta.domain->objects();
    for (std::size_t i = 0; i < out.objects.size(); ++i) {
        const auto& x = out.objects[i];
        if (sub.count(x->id())) continue;
        Subgroup s = eta.rule(x);
        const GroupRef cx = s.as_group();
        sub.emplace(x->id(), std::move(s));
        if (!std::any_of(out.objects.begin(), out.objects.end(), [&](const GroupRef& o) { return o->id() == cx->id(); }))
            out.objects.push_back(cx);
        if (out.objects.size() > limit) throw BudgetExceeded("internalization objects exceed the limit");
    }

    std::set<MorId> seen;
    auto add = [&](MorId f) {
        if (seen.insert(f).second) out.morphisms.push_back(f);
        if (out.morphisms.size() > limit) throw BudgetExceeded("internalization morphisms exceed the limit");
    };
    for (MorId f : eta.domain->morphisms()) add(ambient.intern(eta.domain->payload(f)));
    for (const auto& x : out.objects) {
        add(ambient.identity(x));
        add(ambient.intern(sub.at(x->id()).inclusion()));
    }
    for (std::size_t done = 0; done < out.morphisms.size(); ++done) {
        // Compose the newest unprocessed morphism with everything seen so far, on both sides.
        const MorId f = out.morphisms[done];
        for (std::size_t k = 0; k <= done; ++k) {
            const MorId g = out.morphisms[k];
            if (auto fg = ambient.compose(f, g)) add(*fg);
            if (auto gf = ambient.compose(g, f)) add(*gf);
        }
    }
    std::sort(out.morphisms.begin(), out.morphisms.end());

    auto members = std::make_shared<const std::set<MorId>>(seen);
    abscat::VirtualCat::Ops ops;
    ops.morphisms = [list = out.morphisms] { return list; };
    ops.src = [&ambient](MorId f) { return ambient.src(f); };
    ops.tgt = [&ambient](MorId f) { return ambient.tgt(f); };
    ops.compose = [&ambient, members](MorId f, MorId g) -> abscat::MorTerm {
        auto fg = ambient.compose(f, g);
        return fg && members->count(*fg) ? fg : abscat::Bot;
    };
    ops.name = [&ambient](MorId f) { return ambient.name(f); };
    out.category = std::make_unique<abscat::VirtualCat>("internal(" + eta.name + ")", std::move(ops));

    // D(f) is the restriction of f to the rule's subgroups.
    auto d_of = [&](MorId f) -> std::optional<GroupHom> {
        const auto& phi = ambient.payload(f);
        const auto& a = sub.at(phi.dom->id());
        const auto& b = sub.at(phi.cod->id());
        if (!maps_into(phi, a, b)) return std::nullopt;
        return groups::restrict_hom(phi, a, b);
    };
    auto& r = out.report;
    r.law("D(f) is defined");
    r.law("eta_Y D(f) = f eta_X");
    r.law("D(fg) = D(f)D(g)");
    for (MorId f : out.morphisms) {
        const auto df = d_of(f);
        r.record("D(f) is defined", df.has_value(), {ambient.name(f)});
        if (!df) continue;
        const auto& phi = ambient.payload(f);
        r.record("eta_Y D(f) = f eta_X",
                 groups::compose(sub.at(phi.cod->id()).inclusion(), *df) ==
                     groups::compose(phi, sub.at(phi.dom->id()).inclusion()),
                 {ambient.name(f)});
    }
    std::uint64_t pairs = 0;
    for (MorId f : out.morphisms) {
        for (MorId g : out.morphisms) {
            if (pairs >= cfg.pair_budget) break;
            const auto fg = ambient.compose(f, g);
            if (!fg) continue;
            ++pairs;
            const auto df = d_of(f), dg = d_of(g), dfg = d_of(*fg);
            if (df && dg && dfg) r.record("D(fg) = D(f)D(g)", *dfg == groups::compose(*df, *dg), {ambient.name(f), ambient.name(g)});
        }
    }
    r.exhaustive = pairs < cfg.pair_budget;
    for (std::size_t i = 0; i < eta.domain->object_count(); ++i) {
        const auto& x = eta.domain->objects()[i];
        const GroupHom& inc = sub.at(x->id()).inclusion();
        const auto d = d_of(ambient.intern(inc));
        const GroupRef cx = inc.dom;
        r.record("D(eta_X) = eta_{C(X)}", d && *d == sub.at(cx->id()).inclusion(), {x->id()});
    }
    return out;
}

Counital compose_triangle(const Counital& mu, const Counital& eta) {
    if (!mu.rule) throw InvalidInput("compose_triangle needs the outer counital's subgroup rule");
    auto inner = std::make_shared<std::vector<Subgroup>>();
    Counital c;
    c.name = eta.name + " then " + mu.name;
    c.domain = eta.domain;
    for (const auto& e : eta.components) {
        inner->push_back(mu.rule(e.dom));
        c.components.push_back(groups::compose(e, inner->back().inclusion()));
    }
    c.c_mor = [inner, base = eta.c_mor](MorId f) -> std::optional<GroupHom> {
        const auto cf = base(f);
        if (!cf) return std::nullopt;
        const auto& a = (*inner)[GroupCategory::src_obj(f)];
        const auto& b = (*inner)[GroupCategory::tgt_obj(f)];
        if (!maps_into(*cf, a, b)) return std::nullopt;
        return groups::restrict_hom(*cf, a, b);
    };
    c.monic = mu.monic && eta.monic;
    if (eta.rule)
        c.rule = [outer = eta.rule, rule = mu.rule](const GroupRef& x) {
            const Subgroup s = outer(x);
            return groups::image(s.inclusion(), rule(s.as_group()));
        };
    return c;
}

Counital kernel_of_unital(const Unital& pi) {
    std::vector<Subgroup> ks;
    for (const auto& c : pi.components) ks.push_back(groups::kernel(c));
    return subgroup_counital("ker(" + pi.name + ")", pi.domain, indexed_rule(pi.domain, std::move(ks)));
}

Unital cokernel_of_counital(const Counital& iota) {
    std::vector<Subgroup> ims;
    for (const auto& c : iota.components) ims.push_back(groups::image(c));
    return quotient_unital("coker(" + iota.name + ")", iota.domain, indexed_rule(iota.domain, std::move(ims)));
}

Report check_kernel_duality(const Unital& pi, const Counital& iota) {
    Report r("kernel duality for " + pi.name + " and " + iota.name);
    const auto& objs = pi.domain->objects();
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const auto& p = pi.components[i];
        const Quotient q = groups::quotient(groups::kernel(p));
        const auto mu = factor_through(p, q, groups::image(p));
        r.record("mu_X is well defined", mu.has_value(), {objs[i]->id()});
        if (!mu) continue;
        r.record("mu_X is an isomorphism", mu->is_isomorphism(), {objs[i]->id()});
        const GroupHom co = groups::restrict_hom(p, groups::whole_group(p.dom), groups::image(p));
        r.record("mu_X coker(ker pi)_X = pi_X onto its image", groups::compose(*mu, q.proj) == co, {objs[i]->id()});
    }

    const Unital q = cokernel_of_counital(iota);
    const Counital kq = kernel_of_unital(q);
    for (std::size_t i = 0; i < iota.domain->object_count(); ++i) {
        const auto& io = iota.components[i];
        const Subgroup im = groups::image(io);
        const GroupHom tau = groups::restrict_hom(io, groups::whole_group(io.dom), im);
        const auto& id = iota.domain->objects()[i]->id();
        r.record("tau_X is an isomorphism", tau.is_isomorphism(), {id});
        r.record("ker(coker iota)_X tau_X = iota_X", groups::compose(kq.components[i], tau) == io, {id});
    }
    return r;
}

capsules::NatTrans as_nattrans(const Counital& eta, const abscat::GrpCat& ambient) {
    const GroupCategory* d = eta.domain.get();
    capsules::NatTrans mu;
    mu.name = eta.name;
    mu.f = abscat::Functor{"I", d, &ambient, [d, &ambient](MorId f) -> abscat::MorTerm {
                               return ambient.intern(d->payload(f));
                           }};
    mu.g = abscat::Functor{"JC", d, &ambient, [&ambient, c = eta.c_mor](MorId f) -> abscat::MorTerm {
                               const auto h = c(f);
                               if (!h) return abscat::Bot;
                               return ambient.intern(*h);
                           }};
    for (MorId e : d->identities())
        mu.components[e] = ambient.intern(eta.components[GroupCategory::src_obj(e)]);
    return mu;
}

} // namespace charcat::counitals
