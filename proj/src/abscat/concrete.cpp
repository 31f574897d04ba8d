#include "charcat/abscat/concrete.hpp"

#include "charcat/groups/homs.hpp"

namespace charcat::abscat {

namespace {
std::string key_of(const groups::GroupHom& h) {
    std::string k = h.dom->id();
    k.push_back('\0');
    k += h.cod->id();
    k.push_back('\0');
    k.append(reinterpret_cast<const char*>(h.map.data()), h.map.size() * sizeof(groups::Elem));
    return k;
}
} // namespace

MorId GrpCat::intern(const groups::GroupHom& h) const {
    auto k = key_of(h);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, fresh] = index_.try_emplace(std::move(k), homs_.size());
    if (fresh) homs_.push_back(h);
    return it->second;
}

MorId GrpCat::identity(const groups::GroupRef& g) const { return intern(groups::identity_hom(g)); }

const groups::GroupHom& GrpCat::payload(MorId f) const {
    std::lock_guard<std::mutex> lock(mu_);
    return homs_.at(f);
}

std::vector<MorId> GrpCat::morphisms() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<MorId> out(homs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

MorTerm GrpCat::compose(MorId f, MorId g) const {
    const auto& hf = payload(f);
    const auto& hg = payload(g);
    if (hf.dom->id() != hg.cod->id()) return Bot;
    return intern(groups::compose(hf, hg));
}

std::string GrpCat::name(MorId f) const {
    const auto& h = payload(f);
    if (h.dom->id() == h.cod->id() && f == identity(h.dom)) return "id_" + h.dom->id();
    return h.dom->id() + "->" + h.cod->id() + "#" + std::to_string(f);
}

std::vector<MorId> GrpCat::homs(const groups::GroupRef& g, const groups::GroupRef& h, bool iso_only,
                                const Config& cfg) const {
    std::vector<MorId> out;
    for (const auto& f : groups::hom_enumerate(g, h, iso_only, cfg)) out.push_back(intern(f));
    return out;
}

} // namespace charcat::abscat
