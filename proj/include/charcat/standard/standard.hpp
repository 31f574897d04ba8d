#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charcat/abscat/concrete.hpp"
#include "charcat/capsules/capsule.hpp"
#include "charcat/core/config.hpp"
#include "charcat/counitals/counital.hpp"
#include "charcat/groups/group.hpp"
#include "charcat/standard/words.hpp"

namespace charcat::standard {

using counitals::Counital;
using counitals::Unital;
using groups::GroupHom;
using groups::GroupRef;
using groups::Subgroup;

/// The subgroup generated by every value of every word. |G| must be within
/// cfg.tuple_budget and each word's arity within cfg.max_word_arity (BudgetExceeded otherwise).
Subgroup verbal_subgroup(const GroupRef& g, const std::vector<Word>& words, const Config& cfg = default_config());
/// Every word takes only the identity value on G.
bool in_variety(const GroupRef& g, const std::vector<Word>& words, const Config& cfg = default_config());
/// Hall's marginal subgroup: z with w(.., g_i z, ..) = w(.., g_i, ..) for every position i and tuple.
Subgroup marginal_subgroup(const GroupRef& g, const Word& w, const Config& cfg = default_config());
/// The induced word map on (G/M)^n is well defined: values are constant on M-cosets in each argument.
bool word_factors_through(const Subgroup& m, const Word& w, const Config& cfg = default_config());

std::shared_ptr<const abscat::GroupCategory> iso_core(const std::vector<GroupRef>& catalog,
                                                      const Config& cfg = default_config());
std::shared_ptr<const abscat::GroupCategory> all_homs(const std::vector<GroupRef>& catalog,
                                                      const Config& cfg = default_config());

/// Inclusions of the centers over the iso-core of the catalog.
Counital center_counital(std::shared_ptr<const abscat::GroupCategory> isocore);
/// Inclusions of the derived subgroups over any catalog category.
Counital derived_counit(std::shared_ptr<const abscat::GroupCategory> domain);
/// Projections G -> G/[G,G].
Unital abelianization_unit(std::shared_ptr<const abscat::GroupCategory> domain);
Counital verbal_counit(std::shared_ptr<const abscat::GroupCategory> domain, std::vector<Word> words,
                       const Config& cfg = default_config());
Unital verbal_unit(std::shared_ptr<const abscat::GroupCategory> domain, std::vector<Word> words,
                   const Config& cfg = default_config());
Counital marginal_counital(std::shared_ptr<const abscat::GroupCategory> domain, Word w,
                           const Config& cfg = default_config());

/// Abelianization F : Grp -> Ab left adjoint to the inclusion G, with
/// Psi(phi : F(U) -> V) = phi proj_U. F(U) is U itself when U is abelian and U/[U,U] otherwise.
class AbelianizationAdjunction {
public:
    /// `groups` are the objects U, `abelian` the objects V (each must be abelian).
    AbelianizationAdjunction(std::vector<GroupRef> groups, std::vector<GroupRef> abelian,
                             const Config& cfg = default_config());
    AbelianizationAdjunction(const AbelianizationAdjunction&) = delete;
    AbelianizationAdjunction& operator=(const AbelianizationAdjunction&) = delete;

    const capsules::AdjointData& data() const { return data_; }
    const abscat::GrpCat& ab() const { return ab_; }
    const abscat::GrpCat& grp() const { return grp_; }
    /// U -> F(U).
    const groups::Quotient& reflection(const GroupRef& u) const;

private:
    abscat::GrpCat ab_{"Ab"};
    abscat::GrpCat grp_{"Grp"};
    Config cfg_;
    std::map<std::string, groups::Quotient> refl_;   // by id of U
    std::map<std::string, std::string> source_of_;   // id of F(U) -> id of U
    capsules::AdjointData data_;
};

/// C_p acting on F_q^m through diag(eigenvalues).
struct RottlaenderSpec {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> eigenvalues;

    std::size_t m() const { return eigenvalues.size(); }
    /// m < p, p and q prime, q = 1 mod p, each eigenvalue of order p, and for i != j and every
    /// u with a_i^u = a_j, p does not divide u^k - 1 for k = 1..m. Throws InvalidInput naming
    /// the violated condition, including the (u, k) pair.
    void validate() const;
    std::string id() const;
};

GroupRef rottlaender_group(const RottlaenderSpec& spec);
/// The eigenline of the k-th eigenvalue, {c e_k} inside the normal q-part.
Subgroup rottlaender_eigenspace(const GroupRef& g, const RottlaenderSpec& spec, std::size_t k);
/// One counital per eigenvalue over the one-object automorphism category of the group.
std::vector<Counital> rottlaender_counitals(const RottlaenderSpec& spec, const Config& cfg = default_config());

/// The commutator map on G/Z(G) x G/Z(G) -> [G,G].
struct IsoclinismData {
    groups::Quotient quotient;           // G -> G/Z(G)
    Subgroup derived;                    // [G,G] in G
    std::vector<Elem> table;             // table[a*n+b] = position in `derived` of [a, b]
    bool square_commutes = false;        // [x,y] depends only on the cosets of x and y
};
IsoclinismData isoclinism_data(const GroupRef& g);
/// Isomorphisms alpha : G/Z -> H/Z and beta : [G,G] -> [H,H] with beta(a*b) = alpha(a)*alpha(b).
struct Isoclinism {
    GroupHom alpha;
    GroupHom beta;
};
std::optional<Isoclinism> find_isoclinism(const GroupRef& g, const GroupRef& h, const Config& cfg = default_config());

} // namespace charcat::standard
