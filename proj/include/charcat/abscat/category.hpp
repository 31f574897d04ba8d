#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "charcat/core/config.hpp"
#include "charcat/core/report.hpp"
#include "charcat/groups/group.hpp"
#include "json.hpp"

namespace charcat::abscat {

using MorId = std::uint64_t;
/// A morphism term: a morphism or bottom (empty).
using MorTerm = std::optional<MorId>;
inline constexpr std::nullopt_t Bot = std::nullopt;

/// An abstract category: a partial algebra of morphisms with src/tgt guards.
/// Implementations report raw operations; the law checker decides whether they obey the laws.
class Category {
public:
    virtual ~Category() = default;
    virtual const std::string& id() const = 0;
    /// Every morphism, in a deterministic order.
    virtual std::vector<MorId> morphisms() const = 0;
    virtual MorId src(MorId f) const = 0;
    virtual MorId tgt(MorId f) const = 0;
    virtual MorTerm compose(MorId f, MorId g) const = 0;
    virtual std::string name(MorId f) const = 0;
    /// Morphisms with the given source and target identities; default filters morphisms().
    virtual std::vector<MorId> hom(MorId src_id, MorId tgt_id) const;
    /// Identities: {src a}. Default derives them from morphisms().
    virtual std::vector<MorId> identities() const;
    bool is_identity(MorId f) const { return src(f) == f; }
};

// Bottom-lifted operations.
MorTerm src(const Category& c, MorTerm f);
MorTerm tgt(const Category& c, MorTerm f);
MorTerm comp(const Category& c, MorTerm f, MorTerm g);
std::string term_name(const Category& c, MorTerm f);

/// A category given by a finite multiplication table.
class FinAbsCat final : public Category {
public:
    FinAbsCat(std::string id, std::vector<std::string> names, std::vector<MorId> src, std::vector<MorId> tgt,
              std::vector<MorTerm> table);
    /// {"morphisms": [...], "src": [...], "tgt": [...], "compose": [[name|null]]}; rows are the left factor.
    static FinAbsCat from_json(const nlohmann::json& j, std::string id = "table");
    nlohmann::json to_json() const;

    const std::string& id() const override { return id_; }
    std::vector<MorId> morphisms() const override;
    MorId src(MorId f) const override { return src_.at(f); }
    MorId tgt(MorId f) const override { return tgt_.at(f); }
    MorTerm compose(MorId f, MorId g) const override { return table_.at(f * n_ + g); }
    std::string name(MorId f) const override { return names_.at(f); }

    std::size_t size() const { return n_; }
    MorId index_of(const std::string& name) const;
    /// Copy with one table cell replaced.
    FinAbsCat with_cell(MorId f, MorId g, MorTerm value) const;

private:
    std::string id_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::vector<MorId> src_, tgt_;
    std::vector<MorTerm> table_;
};

/// Morphisms given by callbacks over an explicit finite morphism list.
class VirtualCat final : public Category {
public:
    struct Ops {
        std::function<std::vector<MorId>()> morphisms;
        std::function<MorId(MorId)> src, tgt;
        std::function<MorTerm(MorId, MorId)> compose;
        std::function<std::string(MorId)> name;
    };
    VirtualCat(std::string id, Ops ops) : id_(std::move(id)), ops_(std::move(ops)) {}
    const std::string& id() const override { return id_; }
    std::vector<MorId> morphisms() const override { return ops_.morphisms(); }
    MorId src(MorId f) const override { return ops_.src(f); }
    MorId tgt(MorId f) const override { return ops_.tgt(f); }
    MorTerm compose(MorId f, MorId g) const override { return ops_.compose(f, g); }
    std::string name(MorId f) const override { return ops_.name(f); }

private:
    std::string id_;
    Ops ops_;
};

enum class MorphismClass { AllHoms, Isos, Epis, Monos };
std::string to_string(MorphismClass k);

/// Groups of a catalog as objects, homomorphisms of one class as morphisms, enumerated
/// lazily per object pair and cached. A morphism id packs (src object, tgt object, index).
class GroupCategory final : public Category {
public:
    GroupCategory(std::string id, std::vector<groups::GroupRef> objects, MorphismClass kind,
                  const Config& cfg = default_config());

    const std::string& id() const override { return id_; }
    std::vector<MorId> morphisms() const override;
    MorId src(MorId f) const override { return identity(src_obj(f)); }
    MorId tgt(MorId f) const override { return identity(tgt_obj(f)); }
    MorTerm compose(MorId f, MorId g) const override;
    std::string name(MorId f) const override;
    std::vector<MorId> hom(MorId src_id, MorId tgt_id) const override;
    std::vector<MorId> identities() const override;

    MorphismClass kind() const { return kind_; }
    const std::vector<groups::GroupRef>& objects() const { return objects_; }
    std::size_t object_count() const { return objects_.size(); }
    std::size_t object_index(const std::string& group_id) const;
    static std::uint32_t src_obj(MorId f) { return static_cast<std::uint32_t>(f >> 48); }
    static std::uint32_t tgt_obj(MorId f) { return static_cast<std::uint32_t>((f >> 32) & 0xFFFFU); }
    static std::uint32_t local(MorId f) { return static_cast<std::uint32_t>(f & 0xFFFFFFFFU); }
    static MorId pack(std::uint32_t s, std::uint32_t t, std::uint32_t k) {
        return (MorId{s} << 48) | (MorId{t} << 32) | k;
    }

    MorId identity(std::uint32_t obj) const;
    /// Homs src -> tgt in this class, in enumeration order.
    const std::vector<groups::GroupHom>& homs(std::uint32_t s, std::uint32_t t) const;
    const groups::GroupHom& payload(MorId f) const;
    /// The morphism id carrying this group hom; throws when not in the class.
    MorId find(const groups::GroupHom& h) const;

private:
    struct HomSet {
        std::vector<groups::GroupHom> homs;
        std::map<std::vector<groups::Elem>, std::uint32_t> index;
    };
    const HomSet& homset(std::uint32_t s, std::uint32_t t) const;

    std::string id_;
    std::vector<groups::GroupRef> objects_;
    MorphismClass kind_;
    Config cfg_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<HomSet>> cache_;
};

std::shared_ptr<GroupCategory> build_catalog_cat(const std::vector<groups::GroupRef>& catalog, MorphismClass kind,
                                                 const Config& cfg = default_config(), std::string id = {});

/// Law report for the abstract-category axioms. Exhaustive when the triple count is within
/// cfg.pair_budget * 100; otherwise seeded sampling of guard-composable chains and raw triples.
Report check_abscat_laws(const Category& c, const Config& cfg = default_config());

struct PeirceSlices {
    std::vector<MorId> left;   // eA = {a : tgt a = e}
    std::vector<MorId> right;  // Af = {a : src a = f}
    std::vector<MorId> hom;    // eAf
};
PeirceSlices peirce(const Category& c, MorId e, MorId f);
/// Checks that the slices eAf over all identity pairs partition the morphisms.
bool peirce_partition(const Category& c);

/// A morphism map between two categories.
struct Functor {
    std::string name;
    const Category* dom = nullptr;
    const Category* cod = nullptr;
    std::function<MorTerm(MorId)> map;

    MorTerm operator()(MorTerm f) const { return f ? map(*f) : Bot; }
};

/// Identity preservation, guard commutation and the directional law F(cc') = F(c)F(c') when cc' is defined.
Report check_functor(const Functor& f, const Config& cfg = default_config());

Functor identity_functor(const Category& c);
Functor compose_functors(const Functor& f, const Functor& g);

} // namespace charcat::abscat
