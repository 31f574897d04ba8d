#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "charcat/core/config.hpp"
#include "charcat/core/report.hpp"
#include "charcat/counitals/characteristic.hpp"
#include "charcat/ff/algebra.hpp"
#include "charcat/ff/bilinear.hpp"
#include "charcat/ff/matrix.hpp"
#include "charcat/groups/group.hpp"
#include "json.hpp"

namespace charcat::baer {

using groups::Elem;
using groups::GroupHom;
using groups::GroupRef;
using groups::Subgroup;

/// |G| is a power of p, G has exponent p and [G,G] <= Z(G). p must be an odd prime.
bool is_class2_exponent_p(const groups::FiniteGroup& g, std::uint64_t p);

/// The commutator bimap b_G : G/[G,G] x G/[G,G] -> [G,G] with the coordinates used to build it.
/// v_lifts are elements of G whose cosets form the basis of V; w_basis spans [G,G].
struct BaerCoordinates {
    GroupRef group;
    std::uint64_t p = 0;
    std::vector<Elem> v_lifts;
    std::vector<Elem> w_basis;
    std::vector<ff::Vec> v_coord;  // per element of G: coordinates of its coset
    std::vector<ff::Vec> w_coord;  // per element of G: coordinates when in [G,G], else empty
    Subgroup derived;
    ff::BilinearMap b;

    /// (alpha, beta) induced by an automorphism: alpha on V, beta on W, acting on columns.
    std::pair<ff::Mat, ff::Mat> induced(const GroupHom& phi) const;
};
BaerCoordinates bimap_from_group(const GroupRef& g, std::uint64_t p);

/// V x W with (v1,w1)(v2,w2) = (v1+v2, w1+w2+b(v1,v2)/2). Element index is
/// sum v_i p^i + p^dim(V) sum w_k p^k. Requires an odd prime and an alternating b.
groups::FiniteGroup group_from_bimap(const ff::BilinearMap& b, std::string id);

/// A(b) = {f : b(fu, v) = b(u, f* v) for some f*}, with one adjoint chosen per basis element.
struct AdjointAlgebra {
    ff::MatrixAlgebra algebra;
    std::vector<std::pair<ff::Mat, ff::Mat>> pairs;  // (f, f*) spanning the solution space
};
AdjointAlgebra adjoint_algebra(const ff::BilinearMap& b);

/// A deliberately wrong action used as a negative control.
enum class Perturbation { None, TransposeAlpha, TransposeBeta };

/// Every listed automorphism induces a bimap morphism, the induced map respects
/// composition on pairs of listed automorphisms, and conjugation by alpha maps adjoint
/// pairs of A(b) to adjoint pairs.
Report baer_morphism_checks(const BaerCoordinates& c, const std::vector<GroupHom>& auts,
                            Perturbation perturb = Perturbation::None);

struct PipelineResult {
    BaerCoordinates coords;
    AdjointAlgebra adjoint;
    ff::Subspace radical;  // inside F_p^{n*n}
    ff::Subspace jv;       // J.V inside V
    Subgroup h;            // preimage of J.V in G
    counitals::StabilityResult certificate;
    bool brute_force = false;
    Report checks;

    nlohmann::json to_json() const;
};
/// b_G, A(b_G), J = J(A), H = preimage of J.V, then H certified by is_characteristic and
/// independently by brute force.
PipelineResult pipeline(const GroupRef& g, std::uint64_t p, const Config& cfg = default_config());

} // namespace charcat::baer
