#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charcat/abscat/category.hpp"
#include "charcat/abscat/concrete.hpp"
#include "charcat/capsules/capsule.hpp"
#include "charcat/core/config.hpp"
#include "charcat/core/report.hpp"
#include "charcat/counitals/characteristic.hpp"
#include "charcat/groups/group.hpp"

namespace charcat::counitals {

using abscat::GroupCategory;
using abscat::MorId;

/// A rule choosing one subgroup of every group; used to extend counitals past their domain.
using SubgroupRule = std::function<Subgroup(const GroupRef&)>;

/// A transformation JC => I over a category of groups: components[i] : C(X_i) -> X_i for the
/// i-th object of the domain, and C on morphisms (empty where C(phi) does not exist).
struct Counital {
    std::string name;
    std::shared_ptr<const GroupCategory> domain;
    std::vector<GroupHom> components;
    std::function<std::optional<GroupHom>(MorId)> c_mor;
    bool monic = false;
    bool isosceles = false;
    bool flat = false;
    bool internal = false;
    /// Present for subgroup counitals: the rule X |-> C(X) as a subgroup of X.
    SubgroupRule rule;

    const GroupHom& at(std::size_t obj) const { return components.at(obj); }
    /// im(eta_X) as a subgroup of X.
    Subgroup image_at(std::size_t obj) const;
};

/// The dual: components[i] : X_i -> U(X_i) and U on morphisms.
struct Unital {
    std::string name;
    std::shared_ptr<const GroupCategory> domain;
    std::vector<GroupHom> components;
    std::function<std::optional<GroupHom>(MorId)> u_mor;
    bool epic = false;
};

/// Components are the inclusions of rule(X); C(phi) is the restriction of phi, defined when
/// phi(rule(X)) <= rule(Y).
Counital subgroup_counital(std::string name, std::shared_ptr<const GroupCategory> domain, SubgroupRule rule);
/// Components are the projections X -> X/rule(X); rule(X) must be normal.
/// U(phi) is the induced map, defined when phi(rule(X)) <= rule(Y).
Unital quotient_unital(std::string name, std::shared_ptr<const GroupCategory> domain, SubgroupRule rule);

/// Functoriality of C, the naturality square eta_Y C(phi) = phi eta_X for every domain
/// morphism, and the monic flag against the components.
Report check_counital(const Counital& eta, const Config& cfg = default_config());
/// U(phi) eta_X = eta_Y phi, functoriality of U and the epic flag.
Report check_unital(const Unital& eta, const Config& cfg = default_config());

/// Result of extending a subgroup H <= G over the iso-core of a catalog.
struct Extension {
    Counital counital;
    std::vector<Subgroup> sigma;  // per object of the iso-core
    bool certified = false;       // H was certified characteristic
    Report report;
};
/// sigma(X) = <alpha(H) : alpha : G -> X iso>, trivial when no such iso exists. Checks that
/// transport is the same for every iso, that lambda_G : H -> sigma(G) is an iso with
/// rho_G = sigma_G lambda_G, and that lambda_G R(a) = S(a) lambda_G on Aut(G).
/// `isocore` must be an Isos category; `g` indexes its objects.
Extension extend_to_isocore(std::shared_ptr<const GroupCategory> isocore, std::size_t g, const Subgroup& h,
                            const Config& cfg = default_config());

/// The category generated by the domain morphisms and the components, closed under
/// composition inside `ambient`, and the extension D of C to it by the counital's rule.
struct Internalization {
    std::vector<MorId> morphisms;  // ids in the ambient category
    std::vector<GroupRef> objects;
    std::unique_ptr<abscat::VirtualCat> category;
    Report report;
};
/// Requires eta.rule. Objects are closed under the rule; BudgetExceeded past `limit` morphisms.
Internalization internalize(const Counital& eta, const abscat::GrpCat& ambient, std::size_t limit,
                            const Config& cfg = default_config());

/// (mu after eta)_X = eta_X mu_{C(X)} where mu is applied through its rule to C(X).
Counital compose_triangle(const Counital& mu, const Counital& eta);

/// C(X) = ker(pi_X) with its inclusion.
Counital kernel_of_unital(const Unital& pi);
/// X -> X / im(iota_X); images must be normal.
Unital cokernel_of_counital(const Counital& iota);
/// coker(ker pi)_X followed by an iso mu_X onto im(pi_X) equals the corestriction of pi_X,
/// and ker(coker iota)_X = iota_X tau_X for an iso tau_X (iota monic).
Report check_kernel_duality(const Unital& pi, const Counital& iota);

/// The transformation JC => I as a NatTrans of functors into `ambient`, with components
/// indexed by the identities of the domain.
capsules::NatTrans as_nattrans(const Counital& eta, const abscat::GrpCat& ambient);

} // namespace charcat::counitals
