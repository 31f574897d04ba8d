#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charcat/core/config.hpp"
#include "charcat/core/report.hpp"
#include "charcat/groups/group.hpp"
#include "json.hpp"

namespace charcat::counitals {

using groups::Elem;
using groups::GroupHom;
using groups::GroupRef;
using groups::Subgroup;

enum class CertKind { Automorphisms, Endomorphisms };

/// Evidence that a subgroup is stable under a family of maps. For every listed map phi and
/// every member h, witnesses[i][j] = (j, k) records phi(h_j) = h_k as positions in `subgroup`.
/// For Automorphisms the maps generate Aut(G), whose order is `map_count`; for
/// Endomorphisms the list is every endomorphism and `map_count` its length.
struct CharCertificate {
    std::string group;
    std::vector<Elem> subgroup;
    CertKind kind = CertKind::Automorphisms;
    std::vector<std::vector<Elem>> maps;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> witnesses;
    std::uint64_t map_count = 0;

    nlohmann::json to_json() const;
    static CharCertificate from_json(const nlohmann::json& j);
};

/// A map phi and a member h with phi(h) outside the subgroup.
struct Counterexample {
    GroupHom map;
    Elem h = 0;

    nlohmann::json to_json() const;
};

struct StabilityResult {
    bool holds = false;
    std::optional<CharCertificate> certificate;
    std::optional<Counterexample> counterexample;
};

/// phi(H) = H for every automorphism phi, decided on a generating set of Aut(G).
StabilityResult is_characteristic(const Subgroup& h, const Config& cfg = default_config());

/// psi(H) <= H for every endomorphism psi; |G| must be within cfg.exhaustive_limit.
StabilityResult is_fully_invariant(const Subgroup& h, const Config& cfg = default_config());

/// Re-checks a certificate against the group table without any automorphism search: the
/// subgroup is closed, every map is a homomorphism (bijective for Automorphisms), every
/// witness equation holds, and for Automorphisms the maps generate a group of exactly
/// map_count permutations (Schreier-Sims).
Report verify_certificate(const CharCertificate& cert, const groups::FiniteGroup& g);

/// Decides characteristicity by searching, for each generator h of H and each candidate
/// y outside H with the invariants of h, for an automorphism sending h to y.
/// Shares no code with is_characteristic beyond the backtracking hom search.
bool brute_force_characteristic(const Subgroup& h, const Config& cfg = default_config());

/// alpha(H) for an isomorphism alpha out of the parent of H.
Subgroup transport(const Subgroup& h, const GroupHom& alpha);

/// Order of the permutation group generated by `gens` on 0..n-1.
std::uint64_t permutation_group_order(const std::vector<std::vector<Elem>>& gens, std::size_t n);

} // namespace charcat::counitals
