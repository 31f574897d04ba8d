#include "charcat/capsules/capsule.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "charcat/core/errors.hpp"

namespace charcat::capsules {

using abscat::comp;
using abscat::term_name;

namespace {

using List = std::vector<MorId>;

const List& empty_list() {
    static const List none;
    return none;
}

/// Groups a morphism list by a key function.
class Buckets {
public:
    Buckets() = default;
    Buckets(const List& items, const std::function<MorId(MorId)>& key) {
        for (MorId x : items) map_[key(x)].push_back(x);
    }
    const List& at(MorId k) const {
        auto it = map_.find(k);
        return it == map_.end() ? empty_list() : it->second;
    }

private:
    std::unordered_map<MorId, List> map_;
};

/// Visits pairs (x, y) with y in next(x): every pair when there are at most `budget` of them,
/// otherwise `samples` seeded draws (x uniform, then y uniform in next(x)). Returns exhaustiveness.
bool visit_pairs(const List& first, const std::function<const List&(MorId)>& next, const Config& cfg,
                 Sampler& rng, const std::function<void(MorId, MorId)>& visit) {
    std::uint64_t count = 0;
    for (MorId x : first) count += next(x).size();
    if (count <= cfg.pair_budget) {
        for (MorId x : first)
            for (MorId y : next(x)) visit(x, y);
        return true;
    }
    if (first.empty()) return true;
    for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
        const MorId x = first[rng.below(first.size())];
        const auto& ys = next(x);
        if (!ys.empty()) visit(x, ys[rng.below(ys.size())]);
    }
    return false;
}

/// Triples (x, y, z) with y in next1(x), z in next2(x, y); exhaustive within budget, else sampled.
bool visit_triples(const List& first, const std::function<const List&(MorId)>& next1,
                   const std::function<const List&(MorId, MorId)>& next2, const Config& cfg, Sampler& rng,
                   const std::function<void(MorId, MorId, MorId)>& visit) {
    std::uint64_t count = 0;
    for (MorId x : first) {
        for (MorId y : next1(x)) {
            count += next2(x, y).size();
            if (count > cfg.pair_budget) break;
        }
        if (count > cfg.pair_budget) break;
    }
    if (count <= cfg.pair_budget) {
        for (MorId x : first)
            for (MorId y : next1(x))
                for (MorId z : next2(x, y)) visit(x, y, z);
        return true;
    }
    if (first.empty()) return true;
    for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
        const MorId x = first[rng.below(first.size())];
        const auto& ys = next1(x);
        if (ys.empty()) continue;
        const MorId y = ys[rng.below(ys.size())];
        const auto& zs = next2(x, y);
        if (!zs.empty()) visit(x, y, zs[rng.below(zs.size())]);
    }
    return false;
}

std::string carrier_label(const CatAction& act, MorTerm x) {
    if (!x) return "bot";
    if (act.carrier_name) return act.carrier_name(*x);
    if (act.carrier_cat) return act.carrier_cat->name(*x);
    return std::to_string(*x);
}

MorTerm lift_act(const CatAction& act, MorTerm a, MorTerm x) { return a && x ? act.act(*a, *x) : Bot; }

void require_action(const CatAction& act) {
    if (!act.actor || !act.actor_guard || !act.carrier_guard || !act.act)
        throw InvalidInput("category action '" + act.name + "' is incomplete");
}

} // namespace

// ---------------------------------------------------------------------------

Report check_action(const CatAction& act, const Config& cfg) {
    require_action(act);
    const bool left = act.side == Side::Left;
    const Category& A = *act.actor;
    Report r((left ? "left action " : "right action ") + act.name);
    r.seed = cfg.seed;
    const char* r1 = "(1) a.x defined iff guards agree";
    const char* r2a = "(2) guard respects the identity of a";
    const char* r2b = "(2) identities act trivially";
    const char* r3 = left ? "(3) (ab).x -> a.(b.x)" : "(3) x.(ab) -> (x.a).b";
    const char* full = "full";
    for (const char* n : {r1, r2a, r2b, r3, full}) r.law(n);

    Sampler rng(cfg.seed);
    const auto ms = A.morphisms();
    const Buckets by_guard(act.carrier, act.carrier_guard);
    auto an = [&](MorId a) { return A.name(a); };
    auto xn = [&](MorTerm x) { return carrier_label(act, x); };

    // Rule (1) over all (a, x), or sampled pairs plus every guard-matched pair.
    if (ms.size() * act.carrier.size() <= cfg.pair_budget) {
        for (MorId a : ms)
            for (MorId x : act.carrier) {
                const bool defined = act.act(a, x).has_value();
                r.check(r1, defined == (act.actor_guard(a) == act.carrier_guard(x)),
                        [&] { return std::vector<std::string>{an(a), xn(x)}; });
            }
    } else if (!act.carrier.empty() && !ms.empty()) {
        r.exhaustive = false;
        for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
            const MorId a = ms[rng.below(ms.size())];
            const MorId x = act.carrier[rng.below(act.carrier.size())];
            r.check(r1, act.act(a, x).has_value() == (act.actor_guard(a) == act.carrier_guard(x)),
                    [&] { return std::vector<std::string>{an(a), xn(x)}; });
        }
    }
    const auto matched = [&](MorId a) -> const List& { return by_guard.at(act.actor_guard(a)); };
    r.exhaustive &= visit_pairs(ms, matched, cfg, rng, [&](MorId a, MorId x) {
        r.check(r1, act.act(a, x).has_value(), [&] { return std::vector<std::string>{an(a), xn(x)}; });
    });

    // Rule (2) and fullness.
    for (MorId a : ms) {
        const MorId e = left ? A.src(a) : A.tgt(a);
        r.check(r2a, act.actor_guard(e) == act.actor_guard(a), [&] { return std::vector<std::string>{an(a)}; });
        r.check(full, !matched(a).empty(), [&] { return std::vector<std::string>{an(a)}; });
    }
    for (MorId e : A.identities())
        for (MorId x : matched(e)) {
            const MorTerm ex = act.act(e, x);
            r.check(r2b, !ex || *ex == x, [&] { return std::vector<std::string>{an(e), xn(x)}; });
        }

    // Rule (3) over composable (a, b) and x matching the guard of ab.
    const Buckets by_tgt(ms, [&](MorId m) { return A.tgt(m); });
    const auto composable = [&](MorId a) -> const List& { return by_tgt.at(A.src(a)); };
    const auto guard_of_ab = [&](MorId a, MorId b) -> const List& {
        const MorTerm ab = A.compose(a, b);
        return ab ? matched(*ab) : empty_list();
    };
    r.exhaustive &= visit_triples(ms, composable, guard_of_ab, cfg, rng, [&](MorId a, MorId b, MorId x) {
        const MorTerm ab = A.compose(a, b);
        const MorTerm lhs = lift_act(act, ab, x);
        const MorTerm rhs = left ? lift_act(act, a, lift_act(act, b, x)) : lift_act(act, b, lift_act(act, a, x));
        r.check(r3, !lhs || lhs == rhs, [&] { return std::vector<std::string>{an(a), an(b), xn(x)}; });
    });

    if (act.carrier_cat) {
        const Category& X = *act.carrier_cat;
        const char* ca = left ? "capsule: <x = tgt x" : "capsule: x< = src x";
        const char* cb = left ? "capsule: a.(xy) = (a.x)y" : "capsule: (xy).b = x(y.b)";
        r.law(ca);
        r.law(cb);
        for (MorId x : act.carrier)
            r.check(ca, act.carrier_guard(x) == (left ? X.tgt(x) : X.src(x)),
                    [&] { return std::vector<std::string>{xn(x)}; });
        const Buckets carrier_by_src(act.carrier, [&](MorId m) { return X.src(m); });
        const Buckets actors_by_guard(ms, act.actor_guard);
        // Left: x, then y with tgt y = src x, then a with a< = <x. Right: y, then x with src x = tgt y, then b with <b = y<.
        if (left) {
            const Buckets carrier_by_tgt(act.carrier, [&](MorId m) { return X.tgt(m); });
            const auto ys = [&](MorId x) -> const List& { return carrier_by_tgt.at(X.src(x)); };
            const auto as = [&](MorId x, MorId) -> const List& { return actors_by_guard.at(act.carrier_guard(x)); };
            r.exhaustive &= visit_triples(act.carrier, ys, as, cfg, rng, [&](MorId x, MorId y, MorId a) {
                const MorTerm xy = X.compose(x, y);
                const MorTerm lhs = lift_act(act, a, xy);
                const MorTerm rhs = comp(X, act.act(a, x), y);
                r.check(cb, lhs == rhs, [&] { return std::vector<std::string>{an(a), xn(x), xn(y)}; });
            });
        } else {
            const auto xs = [&](MorId y) -> const List& { return carrier_by_src.at(X.tgt(y)); };
            const auto bs = [&](MorId, MorId y) -> const List& { return actors_by_guard.at(act.carrier_guard(y)); };
            r.exhaustive &= visit_triples(act.carrier, xs, bs, cfg, rng, [&](MorId y, MorId x, MorId b) {
                const MorTerm xy = X.compose(x, y);
                const MorTerm lhs = lift_act(act, b, xy);
                const MorTerm rhs = comp(X, MorTerm(x), act.act(b, y));
                r.check(cb, lhs == rhs, [&] { return std::vector<std::string>{xn(x), xn(y), an(b)}; });
            });
        }
    }
    return r;
}

CatAction induced_action(const Functor& f, Side side, std::vector<MorId> carrier) {
    if (!f.dom || !f.cod) throw InvalidInput("functor '" + f.name + "' has no domain or codomain");
    const Category* X = f.cod;
    CatAction act;
    act.name = f.name;
    act.actor = f.dom;
    act.side = side;
    act.carrier = carrier.empty() ? X->morphisms() : std::move(carrier);
    act.carrier_cat = X;
    auto fmap = f.map;
    if (side == Side::Left) {
        act.actor_guard = [X, fmap](MorId a) -> MorId {
            const MorTerm fa = fmap(a);
            return fa ? X->src(*fa) : ~MorId{0};
        };
        act.carrier_guard = [X](MorId x) { return X->tgt(x); };
        act.act = [X, fmap](MorId a, MorId x) { return comp(*X, fmap(a), MorTerm(x)); };
    } else {
        act.actor_guard = [X, fmap](MorId a) -> MorId {
            const MorTerm fa = fmap(a);
            return fa ? X->tgt(*fa) : ~MorId{0};
        };
        act.carrier_guard = [X](MorId x) { return X->src(x); };
        act.act = [X, fmap](MorId a, MorId x) { return comp(*X, MorTerm(x), fmap(a)); };
    }
    return act;
}

CatAction regular_action(const Category& c, Side side) { return induced_action(abscat::identity_functor(c), side); }

Functor functor_from_capsule(const CatAction& act) {
    require_action(act);
    if (!act.carrier_cat) throw InvalidInput("action '" + act.name + "' is not on a category");
    CatAction copy = act;
    const Category* X = act.carrier_cat;
    return Functor{"F[" + act.name + "]", act.actor, X, [copy, X](MorId a) -> MorTerm {
                       // The unique identity e of X with a< = <e is e = a< itself when <e is tgt e or src e.
                       const MorId e = copy.actor_guard(a);
                       if (!X->is_identity(e) || copy.carrier_guard(e) != e)
                           throw InvalidInput("no identity matches the guard of " + copy.actor->name(a));
                       return copy.act(a, e);
                   }};
}

// ---------------------------------------------------------------------------

Bicapsule functor_bicapsule(const Functor& f, const Functor& g, std::vector<MorId> carrier) {
    if (f.cod != g.cod) throw InvalidInput("bicapsule functors must share a codomain");
    Bicapsule b;
    b.name = f.name + "|" + g.name;
    b.left = induced_action(f, Side::Left, carrier);
    b.right = induced_action(g, Side::Right, std::move(carrier));
    return b;
}

Bicapsule regular_bicapsule(const Category& c) {
    const auto id = abscat::identity_functor(c);
    Bicapsule b = functor_bicapsule(id, id);
    b.name = "regular " + c.id();
    return b;
}

Report check_bicapsule(const Bicapsule& b, const Config& cfg) {
    Report r("bicapsule " + b.name);
    r.seed = cfg.seed;
    r.merge(check_action(b.left, cfg), "left ");
    r.merge(check_action(b.right, cfg), "right ");
    const char* mid = "a.(x.b) = (a.x).b";
    r.law(mid);
    require_action(b.left);
    require_action(b.right);
    Sampler rng(cfg.seed);
    const auto la = b.left.actor->morphisms();
    const auto ra = b.right.actor->morphisms();
    const Buckets left_by_guard(la, b.left.actor_guard);
    const Buckets right_by_guard(ra, b.right.actor_guard);
    r.exhaustive &= visit_triples(
        b.left.carrier, [&](MorId x) -> const List& { return left_by_guard.at(b.left.carrier_guard(x)); },
        [&](MorId x, MorId) -> const List& { return right_by_guard.at(b.right.carrier_guard(x)); }, cfg, rng,
        [&](MorId x, MorId a, MorId c) {
            const MorTerm lhs = lift_act(b.left, a, b.right.act(c, x));
            const MorTerm rhs = lift_act(b.right, c, b.left.act(a, x));
            r.check(mid, lhs == rhs, [&] {
                return std::vector<std::string>{b.left.actor->name(a), carrier_label(b.left, x),
                                                b.right.actor->name(c)};
            });
        });
    return r;
}

Report check_bimorphism(const Bimorphism& m, const Config& cfg) {
    if (!m.dom || !m.cod || !m.map) throw InvalidInput("bimorphism '" + m.name + "' is incomplete");
    const Bicapsule& D = *m.dom;
    const Bicapsule& E = *m.cod;
    if (D.left.actor != E.left.actor || D.right.actor != E.right.actor)
        throw InvalidInput("bimorphism '" + m.name + "' joins bicapsules over different actors");
    Report r("bimorphism " + m.name);
    r.seed = cfg.seed;
    const char* defined = "M defined on A.X.B";
    const char* lq = "M(a.x) = a.M(x)";
    const char* rq = "M(x.b) = M(x).b";
    const char* both = "M(a.x.b) = a.M(x).b";
    for (const char* n : {defined, lq, rq, both}) r.law(n);

    Sampler rng(cfg.seed);
    const Category& A = *D.left.actor;
    const Category& B = *D.right.actor;
    const auto la = A.morphisms();
    const auto ra = B.morphisms();
    const Buckets left_by_guard(la, D.left.actor_guard);
    const Buckets right_by_guard(ra, D.right.actor_guard);
    auto xn = [&](MorTerm x) { return carrier_label(D.left, x); };
    auto yn = [&](MorTerm y) { return carrier_label(E.left, y); };

    for (MorId x : D.left.carrier)
        r.check(defined, m.map(x).has_value(), [&] { return std::vector<std::string>{xn(x)}; });
    const auto lefts = [&](MorId x) -> const List& { return left_by_guard.at(D.left.carrier_guard(x)); };
    const auto rights = [&](MorId x) -> const List& { return right_by_guard.at(D.right.carrier_guard(x)); };
    auto mapped = [&](MorTerm x) { return x ? m.map(*x) : Bot; };

    r.exhaustive &= visit_pairs(D.left.carrier, lefts, cfg, rng, [&](MorId x, MorId a) {
        const MorTerm ax = D.left.act(a, x);
        const MorTerm lhs = mapped(ax);
        const MorTerm rhs = lift_act(E.left, a, m.map(x));
        r.check(lq, ax && lhs && lhs == rhs, [&] {
            return std::vector<std::string>{A.name(a), xn(x), yn(lhs), yn(rhs)};
        });
    });
    r.exhaustive &= visit_pairs(D.left.carrier, rights, cfg, rng, [&](MorId x, MorId b) {
        const MorTerm xb = D.right.act(b, x);
        const MorTerm lhs = mapped(xb);
        const MorTerm rhs = lift_act(E.right, b, m.map(x));
        r.check(rq, xb && lhs && lhs == rhs, [&] {
            return std::vector<std::string>{xn(x), B.name(b), yn(lhs), yn(rhs)};
        });
    });
    Config tri = cfg;
    tri.pair_budget = std::min<std::uint64_t>(cfg.pair_budget, cfg.sample_count);
    r.exhaustive &= visit_triples(
        D.left.carrier, lefts, [&](MorId x, MorId) -> const List& { return rights(x); }, tri, rng,
        [&](MorId x, MorId a, MorId b) {
            const MorTerm axb = lift_act(D.right, b, D.left.act(a, x));
            const MorTerm lhs = mapped(axb);
            const MorTerm rhs = lift_act(E.right, b, lift_act(E.left, a, m.map(x)));
            r.check(both, lhs && lhs == rhs, [&] {
                return std::vector<std::string>{A.name(a), xn(x), B.name(b), yn(lhs), yn(rhs)};
            });
        });
    return r;
}

// ---------------------------------------------------------------------------

MorTerm NatTrans::at(MorId e) const {
    auto it = components.find(e);
    return it == components.end() ? Bot : it->second;
}

Report check_nattrans(const NatTrans& mu, const Config& cfg) {
    if (!mu.f.dom || mu.f.dom != mu.g.dom || mu.f.cod != mu.g.cod)
        throw InvalidInput("natural transformation '" + mu.name + "' needs parallel functors");
    const Category& A = *mu.f.dom;
    const Category& X = *mu.f.cod;
    Report r("natural transformation " + mu.name);
    r.seed = cfg.seed;
    const char* slice = "mu_e : G(e) -> F(e)";
    const char* nat = "F(a) mu_{src a} = mu_{tgt a} G(a)";
    r.law(slice);
    r.law(nat);
    for (MorId e : A.identities()) {
        const MorTerm c = mu.at(e);
        r.check(slice, c && X.src(*c) == mu.g.map(e) && X.tgt(*c) == mu.f.map(e),
                [&] { return std::vector<std::string>{A.name(e), term_name(X, c)}; });
    }
    for (MorId a : A.morphisms()) {
        const MorTerm lhs = comp(X, mu.f.map(a), mu.at(A.src(a)));
        const MorTerm rhs = comp(X, mu.at(A.tgt(a)), mu.g.map(a));
        r.check(nat, lhs && lhs == rhs,
                [&] { return std::vector<std::string>{A.name(a), term_name(X, lhs), term_name(X, rhs)}; });
    }
    return r;
}

std::vector<MorId> cyclic_bicapsule(const NatTrans& mu, std::size_t limit) {
    const Category& A = *mu.f.dom;
    const Category& X = *mu.f.cod;
    const auto ms = A.morphisms();
    const Buckets by_src(ms, [&](MorId m) { return A.src(m); });
    const Buckets by_tgt(ms, [&](MorId m) { return A.tgt(m); });
    std::set<MorId> out;
    for (MorId e : A.identities()) {
        const MorTerm c = mu.at(e);
        if (!c) continue;
        for (MorId a : by_src.at(e)) {
            const MorTerm ac = comp(X, mu.f.map(a), c);
            for (MorId b : by_tgt.at(e)) {
                const MorTerm acb = comp(X, ac, mu.g.map(b));
                if (acb) out.insert(*acb);
                if (out.size() > limit) throw BudgetExceeded("cyclic bicapsule exceeds " + std::to_string(limit));
            }
        }
    }
    return {out.begin(), out.end()};
}

NatTransBimorphism bimorphism_from_nattrans(const NatTrans& mu, const Config& cfg) {
    const Report nat = check_nattrans(mu, cfg);
    if (!nat.ok()) throw InvalidInput("not natural: " + nat.summary());
    const Category& A = *mu.f.dom;
    NatTransBimorphism out;
    out.dom = std::make_unique<Bicapsule>(regular_bicapsule(A));
    std::vector<MorId> carrier;
    try {
        carrier = cyclic_bicapsule(mu, cfg.pair_budget);
    } catch (const BudgetExceeded&) {
        // Fall back to the images M(a), which still cover every value the bimorphism takes.
        std::set<MorId> img;
        for (MorId a : A.morphisms())
            if (auto v = comp(*mu.f.cod, mu.f.map(a), mu.at(A.src(a)))) img.insert(*v);
        carrier.assign(img.begin(), img.end());
    }
    out.cod = std::make_unique<Bicapsule>(functor_bicapsule(mu.f, mu.g, std::move(carrier)));
    const Category* X = mu.f.cod;
    const Category* Ap = &A;
    auto f = mu.f.map;
    auto comps = mu.components;
    out.m = Bimorphism{"M[" + mu.name + "]", out.dom.get(), out.cod.get(), [X, Ap, f, comps](MorId a) -> MorTerm {
                           auto it = comps.find(Ap->src(a));
                           if (it == comps.end()) return Bot;
                           return comp(*X, f(a), it->second);
                       }};
    return out;
}

NatTrans nattrans_from_bimorphism(const Bimorphism& m, const Category& a) {
    if (!m.cod) throw InvalidInput("bimorphism '" + m.name + "' has no codomain");
    NatTrans mu;
    mu.name = "mu[" + m.name + "]";
    mu.f = functor_from_capsule(m.cod->left);
    mu.g = functor_from_capsule(m.cod->right);
    const Category& X = *mu.f.cod;
    for (MorId e : a.identities()) {
        const MorTerm c = m.map(e);
        const MorTerm want_src = mu.g.map(e);
        const MorTerm want_tgt = mu.f.map(e);
        if (!c || MorTerm(X.src(*c)) != want_src || MorTerm(X.tgt(*c)) != want_tgt)
            throw InvalidInput("M(" + a.name(e) + ") = " + term_name(X, c) + " is not in the slice F(e) X G(e)");
        mu.components[e] = c;
    }
    return mu;
}

// ---------------------------------------------------------------------------

CounitData counit_from_bimorphism(const Bicapsule& a_bicap, const Bicapsule& b_bicap, const Bimorphism& n,
                                  const Category& a, const Category& b, Report& report, const Config& cfg) {
    report.merge(check_bimorphism(n, cfg), "N: ");
    CounitData out;
    out.f = functor_from_capsule(a_bicap.right);
    out.g = functor_from_capsule(b_bicap.left);
    if (out.f.cod != &a || out.g.cod != &b) throw InvalidInput("bicapsule carriers do not match A and B");
    for (MorId e : a.identities()) {
        const MorTerm ge = out.g.map(e);
        out.nu[e] = ge ? n.map(*ge) : Bot;
    }
    auto nu = [&](MorId e) -> MorTerm {
        auto it = out.nu.find(e);
        return it == out.nu.end() ? Bot : it->second;
    };
    const Functor fg = abscat::compose_functors(out.f, out.g);
    const char* nat = "counit: a nu_{src a} = nu_{tgt a} FG(a)";
    report.law(nat);
    for (MorId x : a.morphisms()) {
        const MorTerm lhs = comp(a, MorTerm(x), nu(a.src(x)));
        const MorTerm rhs = comp(a, nu(a.tgt(x)), fg.map(x));
        report.check(nat, lhs && lhs == rhs, [&] {
            return std::vector<std::string>{a.name(x), term_name(a, lhs), term_name(a, rhs)};
        });
    }

    // Reverse construction on the bicapsules a.y.b = G(a)yb over B and a.x.b = FG(a)xFGF(b) over A.
    const Functor fgf = abscat::compose_functors(fg, out.f);
    const Bicapsule b2 = functor_bicapsule(out.g, abscat::identity_functor(b), b_bicap.left.carrier);
    const Bicapsule a2 = functor_bicapsule(fg, fgf, a_bicap.left.carrier);
    const Functor f = out.f;
    const Bimorphism n2{"N'", &b2, &a2, [&a, f, nu](MorId y) -> MorTerm {
                            const MorTerm fy = f.map(y);
                            return fy ? comp(a, fy, nu(a.src(*fy))) : Bot;
                        }};
    report.merge(check_bimorphism(n2, cfg), "N': ");
    const char* back = "N'G(e) = nu_{FG(e)}";
    report.law(back);
    for (MorId e : a.identities()) {
        const MorTerm ge = out.g.map(e);
        const MorTerm fge = fg.map(e);
        const MorTerm lhs = ge ? n2.map(*ge) : Bot;
        const MorTerm rhs = fge ? nu(*fge) : Bot;
        report.check(back, lhs && lhs == rhs, [&] { return std::vector<std::string>{a.name(e)}; });
    }
    return out;
}

// ---------------------------------------------------------------------------

Report check_adjoint(const AdjointData& d, const Config& cfg) {
    if (!d.a || !d.b || !d.psi || !d.psi_inv) throw InvalidInput("adjoint data is incomplete");
    const Category& A = *d.a;
    const Category& B = *d.b;
    Report r("adjunction " + d.f.name + " -| " + d.g.name);
    r.seed = cfg.seed;
    const char* bij = "Psi_UV is a bijection A(FU,V) -> B(U,GV)";
    const char* nl = "Psi(a x) = G(a) Psi(x)";
    const char* nr = "Psi(x F(b)) = Psi(x) b";
    const char* nboth = "Psi(a x F(b)) = G(a) Psi(x) b";
    const char* mnm = "MNM = M";
    const char* nmn = "NMN = N";
    for (const char* n : {bij, nl, nr, nboth, mnm, nmn}) r.law(n);

    std::map<std::pair<MorId, MorId>, List> cache_a, cache_b;
    auto hom = [](std::map<std::pair<MorId, MorId>, List>& cache, const auto& fn, const Category& c, MorId s,
                  MorId t) -> const List& {
        auto [it, fresh] = cache.try_emplace({s, t});
        if (fresh) it->second = fn ? fn(s, t) : c.hom(s, t);
        return it->second;
    };
    auto hom_a = [&](MorId s, MorId t) -> const List& { return hom(cache_a, d.hom_a, A, s, t); };
    auto hom_b = [&](MorId s, MorId t) -> const List& { return hom(cache_b, d.hom_b, B, s, t); };

    List xs;  // every x : FU -> V
    for (MorId u : d.b_objects) {
        const MorTerm fu = d.f.map(u);
        for (MorId v : d.a_objects) {
            const MorTerm gv = d.g.map(v);
            if (!fu || !gv) {
                r.record(bij, false, {B.name(u), A.name(v)}, "F(U) or G(V) undefined");
                continue;
            }
            const List& left = hom_a(*fu, v);
            const List& right = hom_b(u, *gv);
            const std::set<MorId> lset(left.begin(), left.end()), rset(right.begin(), right.end());
            std::set<MorId> hit;
            for (MorId x : left) {
                const MorTerm y = d.psi(x);
                const bool ok = y && rset.count(*y) && d.psi_inv(*y) == MorTerm(x);
                if (y) hit.insert(*y);
                r.check(bij, ok, [&] { return std::vector<std::string>{A.name(x), term_name(B, y)}; });
                const MorTerm nmy = y ? d.psi_inv(*y) : Bot;
                const MorTerm mnm_x = nmy ? d.psi(*nmy) : Bot;
                r.check(mnm, y && mnm_x == y, [&] { return std::vector<std::string>{A.name(x)}; });
                xs.push_back(x);
            }
            for (MorId y : right) {
                const MorTerm x = d.psi_inv(y);
                r.check(bij, x && lset.count(*x) && d.psi(*x) == MorTerm(y),
                        [&] { return std::vector<std::string>{B.name(y), term_name(A, x)}; });
                const MorTerm mx = x ? d.psi(*x) : Bot;
                const MorTerm nmn_y = mx ? d.psi_inv(*mx) : Bot;
                r.check(nmn, x && nmn_y == x, [&] { return std::vector<std::string>{B.name(y)}; });
            }
            r.check(bij, hit.size() == rset.size() && left.size() == right.size(),
                    [&] { return std::vector<std::string>{B.name(u), A.name(v)}; });
        }
    }

    // Naturality: x : FU -> V, a : V -> Y and b : X -> U over the listed objects.
    std::map<MorId, MorId> u_of_x;  // x -> U, recovered through F on the listed objects
    for (MorId u : d.b_objects)
        for (MorId v : d.a_objects)
            if (auto fu = d.f.map(u))
                for (MorId x : hom_a(*fu, v)) u_of_x.emplace(x, u);
    std::map<MorId, List> outs, ins;
    for (MorId v : d.a_objects)
        for (MorId y : d.a_objects) {
            const List& h = hom_a(v, y);
            outs[v].insert(outs[v].end(), h.begin(), h.end());
        }
    for (MorId u : d.b_objects)
        for (MorId x : d.b_objects) {
            const List& h = hom_b(x, u);
            ins[u].insert(ins[u].end(), h.begin(), h.end());
        }
    auto at = [](const std::map<MorId, List>& m, MorId k) -> const List& {
        auto it = m.find(k);
        return it == m.end() ? empty_list() : it->second;
    };
    Sampler rng(cfg.seed);
    r.exhaustive &= visit_pairs(xs, [&](MorId x) -> const List& { return at(outs, A.tgt(x)); }, cfg, rng,
                                [&](MorId x, MorId a) {
                                    const MorTerm ax = comp(A, MorTerm(a), MorTerm(x));
                                    const MorTerm lhs = ax ? d.psi(*ax) : Bot;
                                    const MorTerm rhs = comp(B, d.g.map(a), d.psi(x));
                                    r.check(nl, lhs && lhs == rhs,
                                            [&] { return std::vector<std::string>{A.name(a), A.name(x)}; });
                                });
    r.exhaustive &= visit_pairs(xs, [&](MorId x) -> const List& { return at(ins, u_of_x.at(x)); }, cfg, rng,
                                [&](MorId x, MorId b) {
                                    const MorTerm xfb = comp(A, MorTerm(x), d.f.map(b));
                                    const MorTerm lhs = xfb ? d.psi(*xfb) : Bot;
                                    const MorTerm rhs = comp(B, d.psi(x), MorTerm(b));
                                    r.check(nr, lhs && lhs == rhs,
                                            [&] { return std::vector<std::string>{A.name(x), B.name(b)}; });
                                });
    Config tri = cfg;
    tri.pair_budget = std::min<std::uint64_t>(cfg.pair_budget, cfg.sample_count);
    r.exhaustive &= visit_triples(
        xs, [&](MorId x) -> const List& { return at(outs, A.tgt(x)); },
        [&](MorId x, MorId) -> const List& { return at(ins, u_of_x.at(x)); }, tri, rng,
        [&](MorId x, MorId a, MorId b) {
            const MorTerm axfb = comp(A, comp(A, MorTerm(a), MorTerm(x)), d.f.map(b));
            const MorTerm lhs = axfb ? d.psi(*axfb) : Bot;
            const MorTerm rhs = comp(B, comp(B, d.g.map(a), d.psi(x)), MorTerm(b));
            r.check(nboth, lhs && lhs == rhs,
                    [&] { return std::vector<std::string>{A.name(a), A.name(x), B.name(b)}; });
        });
    return r;
}

// ---------------------------------------------------------------------------

Report check_natural_map(const NaturalMap& nm, const Config& cfg) {
    if (!nm.n || !nm.a || !nm.b || !nm.dot || !nm.bullet) throw InvalidInput("natural map is incomplete");
    const Category& N = *nm.n;
    const Category& A = *nm.a;
    const Category& B = *nm.b;
    Report r("natural map of " + N.id());
    r.seed = cfg.seed;
    const char* c1 = "(1) e.(xy) -> (e.x)(e.y)";
    const char* c2 = "(2) e.(src x) = src(e.x), e.(tgt x) = tgt(e.x)";
    const char* c3 = "(3) (s*tgt x)((src s).x) = ((tgt s).x)(s*src x)";
    const char* c4 = "(4) (st)*f -> (s*f)(t*f)";
    for (const char* n : {c1, c2, c3, c4}) r.law(n);

    Sampler rng(cfg.seed);
    const auto ns = N.morphisms();
    const auto as = A.morphisms();
    const auto n_ids = N.identities();
    const auto a_ids = A.identities();
    auto dot = [&](MorTerm e, MorTerm x) { return e && x ? nm.dot(*e, *x) : Bot; };
    auto bullet = [&](MorTerm s, MorTerm f) { return s && f ? nm.bullet(*s, *f) : Bot; };

    const Buckets a_by_tgt(as, [&](MorId m) { return A.tgt(m); });
    r.exhaustive &= visit_triples(
        n_ids, [&](MorId) -> const List& { return as; },
        [&](MorId, MorId x) -> const List& { return a_by_tgt.at(A.src(x)); }, cfg, rng,
        [&](MorId e, MorId x, MorId y) {
            const MorTerm xy = A.compose(x, y);
            if (!xy) return;
            const MorTerm lhs = dot(e, xy);
            const MorTerm rhs = comp(B, dot(e, x), dot(e, y));
            r.check(c1, lhs && lhs == rhs,
                    [&] { return std::vector<std::string>{N.name(e), A.name(x), A.name(y)}; });
        });
    r.exhaustive &= visit_pairs(n_ids, [&](MorId) -> const List& { return as; }, cfg, rng, [&](MorId e, MorId x) {
        const MorTerm ex = dot(e, x);
        r.check(c2,
                ex && dot(e, A.src(x)) == abscat::src(B, ex) && dot(e, A.tgt(x)) == abscat::tgt(B, ex),
                [&] { return std::vector<std::string>{N.name(e), A.name(x)}; });
    });
    r.exhaustive &= visit_pairs(ns, [&](MorId) -> const List& { return as; }, cfg, rng, [&](MorId s, MorId x) {
        const MorTerm lhs = comp(B, bullet(s, A.tgt(x)), dot(N.src(s), x));
        const MorTerm rhs = comp(B, dot(N.tgt(s), x), bullet(s, A.src(x)));
        r.check(c3, lhs && lhs == rhs, [&] { return std::vector<std::string>{N.name(s), A.name(x)}; });
    });
    const Buckets n_by_tgt(ns, [&](MorId m) { return N.tgt(m); });
    r.exhaustive &= visit_triples(
        a_ids, [&](MorId) -> const List& { return ns; },
        [&](MorId, MorId s) -> const List& { return n_by_tgt.at(N.src(s)); }, cfg, rng,
        [&](MorId f, MorId s, MorId t) {
            const MorTerm st = N.compose(s, t);
            if (!st) return;
            const MorTerm lhs = bullet(st, f);
            const MorTerm rhs = comp(B, bullet(s, f), bullet(t, f));
            r.check(c4, lhs && lhs == rhs,
                    [&] { return std::vector<std::string>{N.name(s), N.name(t), A.name(f)}; });
        });
    return r;
}

} // namespace charcat::capsules
