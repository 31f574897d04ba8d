#pragma once

#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "charcat/abscat/category.hpp"
#include "charcat/core/config.hpp"
#include "charcat/groups/group.hpp"

namespace charcat::abscat {

/// The concrete category of finite groups. Morphisms are homomorphisms interned on first
/// use, so morphisms() lists exactly what has been touched so far, in interning order.
/// Objects are identified by group id.
class GrpCat final : public Category {
public:
    explicit GrpCat(std::string id = "Grp") : id_(std::move(id)) {}

    const std::string& id() const override { return id_; }
    std::vector<MorId> morphisms() const override;
    MorId src(MorId f) const override { return identity(payload(f).dom); }
    MorId tgt(MorId f) const override { return identity(payload(f).cod); }
    MorTerm compose(MorId f, MorId g) const override;
    std::string name(MorId f) const override;

    /// The id of h; the map is not re-validated.
    MorId intern(const groups::GroupHom& h) const;
    MorId identity(const groups::GroupRef& g) const;
    const groups::GroupHom& payload(MorId f) const;
    /// Every homomorphism (or isomorphism) g -> h, interned, in enumeration order.
    std::vector<MorId> homs(const groups::GroupRef& g, const groups::GroupRef& h, bool iso_only,
                            const Config& cfg = default_config()) const;

private:
    std::string id_;
    mutable std::mutex mu_;
    mutable std::deque<groups::GroupHom> homs_;
    mutable std::unordered_map<std::string, MorId> index_;
};

} // namespace charcat::abscat
