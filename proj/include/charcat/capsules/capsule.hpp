#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "charcat/abscat/category.hpp"
#include "charcat/core/config.hpp"
#include "charcat/core/report.hpp"

namespace charcat::capsules {

using abscat::Bot;
using abscat::Category;
using abscat::Functor;
using abscat::MorId;
using abscat::MorTerm;

enum class Side { Left, Right };

/// A category action of `actor` on a finite carrier. For a left action act(a, x) = a.x with
/// guards a< and <x; for a right action act(a, x) = x.a with guards <a and x<.
/// Guard values live in a common guard type, encoded as MorId.
struct CatAction {
    std::string name;
    const Category* actor = nullptr;
    Side side = Side::Left;
    std::vector<MorId> carrier;
    std::function<std::string(MorId)> carrier_name;
    std::function<MorId(MorId)> actor_guard;
    std::function<MorId(MorId)> carrier_guard;
    std::function<MorTerm(MorId a, MorId x)> act;
    /// Set when the carrier is the morphism set of a category; enables the capsule laws.
    const Category* carrier_cat = nullptr;
};

/// Rules (1)-(3) of a category action, fullness, and the capsule laws when carrier_cat is set:
/// <x = tgt x and a.(xy) = (a.x)y for left actions; x< = src x and (xy).b = x(y.b) for right ones.
Report check_action(const CatAction& act, const Config& cfg = default_config());

/// The capsule induced by a morphism F : A -> X: a.x = F(a)x (left) or x.a = xF(a) (right).
/// The carrier is `carrier`, or all of X when empty.
CatAction induced_action(const Functor& f, Side side, std::vector<MorId> carrier = {});
/// The regular action of a category on itself.
CatAction regular_action(const Category& c, Side side);

/// The unique functor F with a.x = F(a)x, via F(a) = a.e for the identity e with a< = <e.
/// Throws InvalidInput when no such identity exists.
Functor functor_from_capsule(const CatAction& left_or_right);

struct Bicapsule {
    std::string name;
    CatAction left;   // left action on the carrier
    CatAction right;  // right action on the same carrier
};

/// Both capsule reports plus the middle law a.(x.b) = (a.x).b.
Report check_bicapsule(const Bicapsule& b, const Config& cfg = default_config());
Bicapsule regular_bicapsule(const Category& c);
/// X as an A-bicapsule via a.x.a' = F(a) x G(a'); the carrier is `carrier` or all of X.
Bicapsule functor_bicapsule(const Functor& f, const Functor& g, std::vector<MorId> carrier = {});

/// A partial map between bicapsule carriers; empty results mean undefined.
struct Bimorphism {
    std::string name;
    const Bicapsule* dom = nullptr;
    const Bicapsule* cod = nullptr;
    std::function<MorTerm(MorId)> map;
};

/// M(a.x.b) = a.M(x).b whenever a< = <x and x< = <b. Checked as left and right equivariance
/// over all guard-compatible pairs within budget, plus seeded two-sided triples.
Report check_bimorphism(const Bimorphism& m, const Config& cfg = default_config());

/// A transformation G => F between functors A -> X, indexed by the identities of A.
struct NatTrans {
    std::string name;
    Functor f;
    Functor g;
    std::map<MorId, MorTerm> components;

    MorTerm at(MorId e) const;
};

/// Components lie in the right hom-slices and F(a) mu_{src a} = mu_{tgt a} G(a) for all a.
Report check_nattrans(const NatTrans& mu, const Config& cfg = default_config());

/// The bimorphism M(a) = a.mu_{src a} from the regular A-bicapsule into X with a.x.a' = F(a)xG(a').
/// The returned object owns both bicapsules.
struct NatTransBimorphism {
    std::unique_ptr<Bicapsule> dom;
    std::unique_ptr<Bicapsule> cod;
    Bimorphism m;
};
NatTransBimorphism bimorphism_from_nattrans(const NatTrans& mu, const Config& cfg = default_config());

/// F(a) = a.1, G(a) = 1.a and mu_e = M(e). Throws InvalidInput when some M(e) leaves its slice.
NatTrans nattrans_from_bimorphism(const Bimorphism& m, const Category& a);

/// The cyclic bicapsule A.mu.A = {a.mu_e.a'} as a sorted carrier; BudgetExceeded past `limit`.
std::vector<MorId> cyclic_bicapsule(const NatTrans& mu, std::size_t limit);

/// Counit data from an (A,B)-morphism N : B -> A between the bicapsules A and B.
struct CounitData {
    Functor f;  // B -> A, F(b) = 1_A . b
    Functor g;  // A -> B, G(a) = a . 1_B
    std::map<MorId, MorTerm> nu;  // nu_e = N(G(e)) for identities e of A
};
/// `a_bicap` has carrier A, `b_bicap` carrier B. Verifies counit naturality
/// a nu_{src a} = nu_{tgt a} FG(a), then that N'(b) = F(b) nu_{src F(b)} is an (A,B)-morphism
/// with N'G(e) = nu_{FG(e)}.
CounitData counit_from_bimorphism(const Bicapsule& a_bicap, const Bicapsule& b_bicap, const Bimorphism& n,
                                  const Category& a, const Category& b, Report& report,
                                  const Config& cfg = default_config());

/// An adjunction candidate F : B -> A, G : A -> B with Psi_UV : A(FU, V) -> B(U, GV).
struct AdjointData {
    const Category* a = nullptr;
    const Category* b = nullptr;
    Functor f;
    Functor g;
    std::vector<MorId> b_objects;  // identities U of B
    std::vector<MorId> a_objects;  // identities V of A
    /// Hom-set enumerators by identities; default to Category::hom.
    std::function<std::vector<MorId>(MorId, MorId)> hom_a;
    std::function<std::vector<MorId>(MorId, MorId)> hom_b;
    std::function<MorTerm(MorId)> psi;
    std::function<MorTerm(MorId)> psi_inv;
};
/// Bijectivity per object pair, Psi(a x F(b)) = G(a) Psi(x) b, and MNM = M, NMN = N for
/// M = Psi, N = Psi^-1.
Report check_adjoint(const AdjointData& d, const Config& cfg = default_config());

/// A natural map of N from A to B: e.x for identities e of N, s*f for identities f of A.
struct NaturalMap {
    const Category* n = nullptr;
    const Category* a = nullptr;
    const Category* b = nullptr;
    std::function<MorTerm(MorId e, MorId x)> dot;
    std::function<MorTerm(MorId s, MorId f)> bullet;
};
/// Conditions: e.(xy) -> (e.x)(e.y); guards preserved; (s*tgt x)((src s).x) = ((tgt s).x)(s*src x);
/// (st)*f -> (s*f)(t*f).
Report check_natural_map(const NaturalMap& nm, const Config& cfg = default_config());

} // namespace charcat::capsules
