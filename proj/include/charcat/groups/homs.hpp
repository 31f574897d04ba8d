#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "charcat/core/config.hpp"
#include "charcat/groups/group.hpp"

namespace charcat::groups {

/// Greedy generating sequence g_0..g_k (each step adds the element that enlarges the
/// closure most, ties to the lowest index) with a breadth-first spanning structure per level.
struct GeneratingSequence {
    std::vector<Elem> gens;
    /// level_of[x] = least j with x in <g_0..g_j>; identity has level -1 stored as gens.size().
    std::vector<std::size_t> level_of;
    struct Step {
        Elem elem;
        Elem parent;
        std::size_t gen;  // elem = parent * gens[gen]
    };
    /// New elements of level j, in breadth-first order.
    std::vector<std::vector<Step>> tree;
    /// Edges (x, i) checked at level j: x in S_j, i <= j, excluding tree edges and old edges.
    std::vector<std::vector<std::pair<Elem, std::size_t>>> checks;
};

GeneratingSequence generating_sequence(const FiniteGroup& g);
/// A generating sequence with a prescribed prefix, completed greedily.
GeneratingSequence generating_sequence(const FiniteGroup& g, const std::vector<Elem>& prefix);

enum class HomKind { All, Iso };

struct HomSearch {
    HomKind kind = HomKind::All;
    std::uint64_t node_budget = 10'000'000;
    /// Optional per-generator candidate lists (empty list = unrestricted).
    std::vector<std::vector<Elem>> allowed;
};

/// Streams every homomorphism (or isomorphism) G -> H in a deterministic order.
/// The callback returns false to stop early. Throws BudgetExceeded past node_budget.
/// Returns the number of search nodes used.
std::uint64_t hom_search(const FiniteGroup& g, const FiniteGroup& h, const GeneratingSequence& seq,
                         const HomSearch& opts, const std::function<bool(const std::vector<Elem>&)>& on_hom);

/// All homomorphisms (or isomorphisms when iso_only) as GroupHom values.
/// All-homs searches require |G| <= cfg.exhaustive_limit; iso searches |G| <= cfg.iso_limit.
std::vector<GroupHom> hom_enumerate(const GroupRef& g, const GroupRef& h, bool iso_only,
                                    const Config& cfg = default_config());

/// Cheap isomorphism invariants: order statistics, center, derived subgroup, exponent.
bool same_invariants(const FiniteGroup& g, const FiniteGroup& h);

std::optional<GroupHom> find_isomorphism(const GroupRef& g, const GroupRef& h, const Config& cfg = default_config());

/// Generators of Aut(G) from a stabilizer chain along the generating sequence, with |Aut(G)|.
struct AutGenerators {
    GeneratingSequence seq;
    std::vector<GroupHom> gens;
    std::uint64_t order = 1;
    std::uint64_t nodes = 0;
};
AutGenerators automorphism_generators(const GroupRef& g, const Config& cfg = default_config());

/// Elements of the group generated by the given automorphisms; throws BudgetExceeded above limit.
std::vector<GroupHom> automorphism_closure(const std::vector<GroupHom>& gens, const GroupRef& g, std::size_t limit);

} // namespace charcat::groups
