#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace charcat::groups {

using Elem = std::uint32_t;

/// A finite group given by its Cayley table. Element 0 need not be the identity.
class FiniteGroup {
public:
    /// table is row-major n*n with table[a*n+b] = ab. Validates closure, identity,
    /// inverses and (for n <= 256) associativity.
    FiniteGroup(std::string id, std::vector<std::string> labels, std::vector<Elem> table);

    const std::string& id() const { return id_; }
    std::size_t order() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Elem a) const { return labels_[a]; }
    /// Index of a label; throws InvalidInput when absent.
    Elem index_of(const std::string& label) const;

    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem identity() const { return identity_; }
    Elem pow(Elem a, std::int64_t k) const;
    /// [x,y] = x^-1 y^-1 x y.
    Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
    Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }  // x^g

    std::uint32_t elem_order(Elem a) const { return orders_[a]; }
    std::uint32_t centralizer_size(Elem a) const { return centralizer_sizes_[a]; }
    /// |N_G(<a>)|, an automorphism invariant used to prune searches.
    std::uint32_t cyclic_normalizer_size(Elem a) const { return cyclic_normalizers_[a]; }
    std::uint32_t exponent() const;
    bool is_abelian() const;
    const std::vector<Elem>& table() const { return table_; }

private:
    std::string id_;
    std::size_t n_;
    std::vector<std::string> labels_;
    std::vector<Elem> table_;
    Elem identity_ = 0;
    std::vector<Elem> inverse_;
    std::vector<std::uint32_t> orders_;
    std::vector<std::uint32_t> centralizer_sizes_;
    std::vector<std::uint32_t> cyclic_normalizers_;
};

using GroupRef = std::shared_ptr<const FiniteGroup>;

GroupRef make_ref(FiniteGroup g);

/// Homomorphism dom -> cod as an index map.
struct GroupHom {
    GroupRef dom;
    GroupRef cod;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
    bool is_homomorphism() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
    bool operator==(const GroupHom& o) const;
};

GroupHom identity_hom(const GroupRef& g);
/// (f after g): requires g.cod to be f.dom (by id).
GroupHom compose(const GroupHom& f, const GroupHom& g);
GroupHom inverse_hom(const GroupHom& iso);

/// A subgroup as a sorted member set of its parent.
class Subgroup {
public:
    Subgroup() = default;
    /// members must be closed; validated.
    Subgroup(GroupRef parent, std::vector<Elem> members);

    const GroupRef& parent() const { return parent_; }
    const std::vector<Elem>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Elem a) const { return mask_[a]; }
    /// Position of a member in the sorted list.
    std::size_t position(Elem a) const;
    bool is_normal() const;
    bool operator==(const Subgroup& o) const;
    bool is_subgroup_of(const Subgroup& o) const;

    /// Stable id derived from the parent id, the size and a hash of the members.
    std::string tag() const;
    /// The induced group on the members; labels are the parent labels.
    GroupRef as_group() const;
    /// Monic inclusion as_group() -> parent.
    GroupHom inclusion() const;

private:
    GroupRef parent_;
    std::vector<Elem> members_;
    std::vector<bool> mask_;
    mutable GroupRef induced_;
};

Subgroup trivial_subgroup(const GroupRef& g);
Subgroup whole_group(const GroupRef& g);
Subgroup subgroup_closure(const GroupRef& g, std::span<const Elem> seed);
Subgroup center(const GroupRef& g);
/// [A, B] generated by commutators.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const GroupRef& g);
Subgroup normal_closure(const GroupRef& g, std::span<const Elem> seed);
Subgroup image(const GroupHom& f, const Subgroup& h);
Subgroup image(const GroupHom& f);
Subgroup kernel(const GroupHom& f);
/// Preimage of a subgroup of the codomain.
Subgroup preimage(const GroupHom& f, const Subgroup& k);
/// All subgroups of the given order (by closure of small generating sets); |G| <= 1000.
std::vector<Subgroup> subgroups_of_order(const GroupRef& g, std::size_t order);

struct Quotient {
    GroupRef group;
    GroupHom proj;
};
/// G/N with cosets ordered by their least element; that element's label names the coset.
Quotient quotient(const Subgroup& n);

struct NoetherFactorization {
    GroupHom coim;  // G ->> G/ker
    GroupHom psi;   // G/ker -> im, invertible
    GroupHom im;    // im >-> H
};
NoetherFactorization noether_factor(const GroupHom& f);

/// Restriction of phi : G -> H to subgroups A <= G, B <= H with phi(A) <= B, as a hom of induced groups.
GroupHom restrict_hom(const GroupHom& phi, const Subgroup& a, const Subgroup& b);
/// Hom G/N -> H/M induced by phi with phi(N) <= M.
GroupHom induced_on_quotients(const GroupHom& phi, const Quotient& qn, const Quotient& qm);

/// Builds a group from a multiplication rule on indices 0..n-1.
FiniteGroup from_rule(std::string id, std::size_t n, const std::function<std::string(Elem)>& label,
                      const std::function<Elem(Elem, Elem)>& mul);
/// Renames the elements by a permutation: new index perm[i] holds old element i.
FiniteGroup relabel(const FiniteGroup& g, std::string id, std::span<const Elem> perm,
                    const std::function<std::string(const std::string&)>& rename = {});

} // namespace charcat::groups
