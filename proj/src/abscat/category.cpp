#include "charcat/abscat/category.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "charcat/core/errors.hpp"
#include "charcat/groups/homs.hpp"

namespace charcat::abscat {

std::vector<MorId> Category::hom(MorId src_id, MorId tgt_id) const {
    std::vector<MorId> out;
    for (MorId f : morphisms())
        if (src(f) == src_id && tgt(f) == tgt_id) out.push_back(f);
    return out;
}

std::vector<MorId> Category::identities() const {
    std::set<MorId> ids;
    for (MorId f : morphisms()) ids.insert(src(f));
    return {ids.begin(), ids.end()};
}

MorTerm src(const Category& c, MorTerm f) { return f ? MorTerm(c.src(*f)) : Bot; }
MorTerm tgt(const Category& c, MorTerm f) { return f ? MorTerm(c.tgt(*f)) : Bot; }
MorTerm comp(const Category& c, MorTerm f, MorTerm g) { return f && g ? c.compose(*f, *g) : Bot; }
std::string term_name(const Category& c, MorTerm f) { return f ? c.name(*f) : "bot"; }

// ---------------------------------------------------------------------------

FinAbsCat::FinAbsCat(std::string id, std::vector<std::string> names, std::vector<MorId> src, std::vector<MorId> tgt,
                     std::vector<MorTerm> table)
    : id_(std::move(id)), n_(names.size()), names_(std::move(names)), src_(std::move(src)), tgt_(std::move(tgt)),
      table_(std::move(table)) {
    if (src_.size() != n_ || tgt_.size() != n_ || table_.size() != n_ * n_)
        throw InvalidInput("category table dimensions do not match the morphism count");
    for (std::size_t i = 0; i < n_; ++i)
        if (src_[i] >= n_ || tgt_[i] >= n_) throw InvalidInput("guard refers to an unknown morphism");
    for (const auto& t : table_)
        if (t && *t >= n_) throw InvalidInput("composition refers to an unknown morphism");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n_) throw InvalidInput("morphism names must be distinct");
}

MorId FinAbsCat::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    throw InvalidInput("unknown morphism '" + name + "'");
}

FinAbsCat FinAbsCat::from_json(const nlohmann::json& j, std::string id) {
    try {
        const auto names = j.at("morphisms").get<std::vector<std::string>>();
        const std::size_t n = names.size();
        auto lookup = [&](const std::string& s) -> MorId {
            auto it = std::find(names.begin(), names.end(), s);
            if (it == names.end()) throw InvalidInput("unknown morphism '" + s + "'");
            return static_cast<MorId>(it - names.begin());
        };
        std::vector<MorId> src, tgt;
        for (const auto& s : j.at("src")) src.push_back(lookup(s.get<std::string>()));
        for (const auto& s : j.at("tgt")) tgt.push_back(lookup(s.get<std::string>()));
        const auto& rows = j.at("compose");
        if (rows.size() != n) throw InvalidInput("compose table must have one row per morphism");
        std::vector<MorTerm> table;
        for (const auto& row : rows) {
            if (row.size() != n) throw InvalidInput("compose table rows must have one entry per morphism");
            for (const auto& cell : row) table.push_back(cell.is_null() ? Bot : MorTerm(lookup(cell.get<std::string>())));
        }
        if (j.contains("id")) id = j.at("id").get<std::string>();
        return FinAbsCat(std::move(id), names, std::move(src), std::move(tgt), std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed category JSON: ") + e.what());
    }
}

nlohmann::json FinAbsCat::to_json() const {
    nlohmann::json j;
    j["id"] = id_;
    j["morphisms"] = names_;
    std::vector<std::string> s, t;
    for (std::size_t i = 0; i < n_; ++i) {
        s.push_back(names_[src_[i]]);
        t.push_back(names_[tgt_[i]]);
    }
    j["src"] = s;
    j["tgt"] = t;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < n_; ++k) {
            const auto& cell = table_[i * n_ + k];
            row.push_back(cell ? nlohmann::json(names_[*cell]) : nlohmann::json(nullptr));
        }
        rows.push_back(row);
    }
    j["compose"] = rows;
    return j;
}

std::vector<MorId> FinAbsCat::morphisms() const {
    std::vector<MorId> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = i;
    return out;
}

FinAbsCat FinAbsCat::with_cell(MorId f, MorId g, MorTerm value) const {
    FinAbsCat c = *this;
    c.table_.at(f * n_ + g) = value;
    return c;
}

// ---------------------------------------------------------------------------

std::string to_string(MorphismClass k) {
    switch (k) {
        case MorphismClass::AllHoms: return "homs";
        case MorphismClass::Isos: return "isos";
        case MorphismClass::Epis: return "epis";
        case MorphismClass::Monos: return "monos";
    }
    return "?";
}

GroupCategory::GroupCategory(std::string id, std::vector<groups::GroupRef> objects, MorphismClass kind, const Config& cfg)
    : id_(std::move(id)), objects_(std::move(objects)), kind_(kind), cfg_(cfg) {
    if (objects_.size() >= 0xFFFFU) throw Unsupported("too many objects for a catalog category");
    std::set<std::string> ids;
    for (const auto& g : objects_)
        if (!ids.insert(g->id()).second) throw InvalidInput("duplicate group id '" + g->id() + "' in catalog");
}

std::size_t GroupCategory::object_index(const std::string& group_id) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (objects_[i]->id() == group_id) return i;
    throw InvalidInput("group '" + group_id + "' is not an object of " + id_);
}

const GroupCategory::HomSet& GroupCategory::homset(std::uint32_t s, std::uint32_t t) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = cache_[{s, t}];
    if (!slot) {
        auto hs = std::make_unique<HomSet>();
        const auto& g = objects_.at(s);
        const auto& h = objects_.at(t);
        if (kind_ == MorphismClass::Isos) {
            hs->homs = groups::hom_enumerate(g, h, true, cfg_);
        } else {
            for (auto& f : groups::hom_enumerate(g, h, false, cfg_)) {
                if (kind_ == MorphismClass::Epis && !f.is_surjective()) continue;
                if (kind_ == MorphismClass::Monos && !f.is_injective()) continue;
                hs->homs.push_back(std::move(f));
            }
        }
        for (std::uint32_t k = 0; k < hs->homs.size(); ++k) hs->index[hs->homs[k].map] = k;
        slot = std::move(hs);
    }
    return *slot;
}

const std::vector<groups::GroupHom>& GroupCategory::homs(std::uint32_t s, std::uint32_t t) const {
    return homset(s, t).homs;
}

MorId GroupCategory::identity(std::uint32_t obj) const {
    const auto& hs = homset(obj, obj);
    std::vector<groups::Elem> id(objects_.at(obj)->order());
    for (groups::Elem i = 0; i < id.size(); ++i) id[i] = i;
    return pack(obj, obj, hs.index.at(id));
}

std::vector<MorId> GroupCategory::morphisms() const {
    std::vector<MorId> out;
    for (std::uint32_t s = 0; s < objects_.size(); ++s)
        for (std::uint32_t t = 0; t < objects_.size(); ++t) {
            const auto n = homs(s, t).size();
            for (std::uint32_t k = 0; k < n; ++k) out.push_back(pack(s, t, k));
        }
    return out;
}

std::vector<MorId> GroupCategory::hom(MorId src_id, MorId tgt_id) const {
    const auto s = src_obj(src_id), t = src_obj(tgt_id);
    std::vector<MorId> out;
    const auto n = homs(s, t).size();
    for (std::uint32_t k = 0; k < n; ++k) out.push_back(pack(s, t, k));
    return out;
}

std::vector<MorId> GroupCategory::identities() const {
    std::vector<MorId> out;
    for (std::uint32_t s = 0; s < objects_.size(); ++s) out.push_back(identity(s));
    return out;
}

const groups::GroupHom& GroupCategory::payload(MorId f) const { return homs(src_obj(f), tgt_obj(f)).at(local(f)); }

MorId GroupCategory::find(const groups::GroupHom& h) const {
    const auto s = static_cast<std::uint32_t>(object_index(h.dom->id()));
    const auto t = static_cast<std::uint32_t>(object_index(h.cod->id()));
    const auto& hs = homset(s, t);
    auto it = hs.index.find(h.map);
    if (it == hs.index.end()) throw InvalidInput("homomorphism is not a morphism of " + id_);
    return pack(s, t, it->second);
}

MorTerm GroupCategory::compose(MorId f, MorId g) const {
    if (src_obj(f) != tgt_obj(g)) return Bot;
    const auto& hf = payload(f);
    const auto& hg = payload(g);
    std::vector<groups::Elem> m(hg.map.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = hf.map[hg.map[i]];
    const auto& hs = homset(src_obj(g), tgt_obj(f));
    auto it = hs.index.find(m);
    if (it == hs.index.end()) throw InvalidInput("composite left the morphism class of " + id_);
    return pack(src_obj(g), tgt_obj(f), it->second);
}

std::string GroupCategory::name(MorId f) const {
    const auto s = src_obj(f), t = tgt_obj(f);
    if (s == t && f == identity(s)) return "id_" + objects_[s]->id();
    return objects_[s]->id() + "->" + objects_[t]->id() + "#" + std::to_string(local(f));
}

std::shared_ptr<GroupCategory> build_catalog_cat(const std::vector<groups::GroupRef>& catalog, MorphismClass kind,
                                                 const Config& cfg, std::string id) {
    if (id.empty()) id = "catalog/" + to_string(kind);
    return std::make_shared<GroupCategory>(std::move(id), catalog, kind, cfg);
}

// ---------------------------------------------------------------------------

namespace {

/// Morphisms grouped by their source identity, for enumerating guard-composable chains.
struct SliceIndex {
    std::unordered_map<MorId, std::vector<MorId>> by_src;
    explicit SliceIndex(const Category& c, const std::vector<MorId>& ms) {
        for (MorId f : ms) by_src[c.src(f)].push_back(f);
    }
    const std::vector<MorId>& with_src(MorId e) const {
        static const std::vector<MorId> none;
        auto it = by_src.find(e);
        return it == by_src.end() ? none : it->second;
    }
};

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r = r > (UINT64_MAX / (b ? b : 1)) ? UINT64_MAX : r * b;
    return r;
}

class LawChecker {
public:
    LawChecker(const Category& c, Report& r) : c_(c), r_(r) {}

    void unary(MorTerm f) {
        auto w = [&] { return std::vector<std::string>{term_name(c_, f)}; };
        r_.check("tgt(src f) = src f", tgt(c_, src(c_, f)) == src(c_, f), w);
        r_.check("src(tgt f) = tgt f", src(c_, tgt(c_, f)) == tgt(c_, f), w);
        r_.check("(tgt f) f = f", comp(c_, tgt(c_, f), f) == f, w);
        r_.check("f (src f) = f", comp(c_, f, src(c_, f)) == f, w);
        r_.check("guards are idempotent",
                 src(c_, src(c_, f)) == src(c_, f) && tgt(c_, tgt(c_, f)) == tgt(c_, f), w);
        if (!f) r_.check("src bot = tgt bot = bot", !src(c_, f) && !tgt(c_, f), w);
    }

    void binary(MorTerm f, MorTerm g) {
        auto w = [&] { return std::vector<std::string>{term_name(c_, f), term_name(c_, g)}; };
        const MorTerm fg = comp(c_, f, g);
        r_.check("tgt(fg) = tgt(f (tgt g))", tgt(c_, fg) == tgt(c_, comp(c_, f, tgt(c_, g))), w);
        r_.check("src(fg) = src((src f) g)", src(c_, fg) == src(c_, comp(c_, src(c_, f), g)), w);
        if (!f || !g) r_.check("f bot = bot f = bot", !fg, w);
        r_.check("tgt(fg) -> tgt f", !fg || tgt(c_, fg) == tgt(c_, f), w);
        r_.check("src(fg) -> src g", !fg || src(c_, fg) == src(c_, g), w);
        if (f && g) r_.check("fg defined iff src f = tgt g", fg.has_value() == (c_.src(*f) == c_.tgt(*g)), w);
    }

    void ternary(MorTerm f, MorTerm g, MorTerm h) {
        auto w = [&] { return std::vector<std::string>{term_name(c_, f), term_name(c_, g), term_name(c_, h)}; };
        r_.check("f(gh) = (fg)h", comp(c_, f, comp(c_, g, h)) == comp(c_, comp(c_, f, g), h), w);
    }

private:
    const Category& c_;
    Report& r_;
};

} // namespace

Report check_abscat_laws(const Category& c, const Config& cfg) {
    Report r("abstract category " + c.id());
    r.seed = cfg.seed;
    LawChecker lc(c, r);
    for (const char* name :
         {"f(gh) = (fg)h", "tgt(src f) = src f", "src(tgt f) = tgt f", "(tgt f) f = f", "f (src f) = f",
          "tgt(fg) = tgt(f (tgt g))", "src(fg) = src((src f) g)", "src bot = tgt bot = bot", "f bot = bot f = bot",
          "guards are idempotent", "tgt(fg) -> tgt f", "src(fg) -> src g", "fg defined iff src f = tgt g"})
        r.law(name);

    const auto ms = c.morphisms();
    std::vector<MorTerm> terms{Bot};
    for (MorId m : ms) terms.emplace_back(m);
    const std::uint64_t n = terms.size();
    const std::uint64_t raw_budget = cfg.pair_budget * 10;

    for (const auto& f : terms) lc.unary(f);

    Sampler rng(cfg.seed);
    auto pick = [&] { return terms[rng.below(n)]; };

    if (ipow(n, 2) <= raw_budget) {
        for (const auto& f : terms)
            for (const auto& g : terms) lc.binary(f, g);
    } else {
        r.exhaustive = false;
        for (std::uint64_t s = 0; s < cfg.sample_count; ++s) lc.binary(pick(), pick());
    }
    if (ipow(n, 3) <= raw_budget) {
        for (const auto& f : terms)
            for (const auto& g : terms)
                for (const auto& h : terms) lc.ternary(f, g, h);
    } else {
        r.exhaustive = false;
        for (std::uint64_t s = 0; s < cfg.sample_count; ++s) lc.ternary(pick(), pick(), pick());
    }

    // Guard-composable pairs and chains: exhaustive up to the budget, sampled beyond it.
    if (ipow(n, 2) > raw_budget || ipow(n, 3) > raw_budget) {
        const SliceIndex idx(c, ms);
        std::uint64_t pairs = 0;
        for (MorId g : ms) pairs += idx.with_src(c.tgt(g)).size();
        if (pairs <= cfg.pair_budget) {
            for (MorId g : ms)
                for (MorId f : idx.with_src(c.tgt(g))) lc.binary(f, g);
            std::uint64_t chains = 0;
            for (MorId h : ms)
                for (MorId g : idx.with_src(c.tgt(h))) chains += idx.with_src(c.tgt(g)).size();
            if (chains <= cfg.pair_budget) {
                for (MorId h : ms)
                    for (MorId g : idx.with_src(c.tgt(h)))
                        for (MorId f : idx.with_src(c.tgt(g))) lc.ternary(f, g, h);
            } else {
                r.notes.push_back("composable triples sampled");
                for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
                    const MorId h = ms[rng.below(ms.size())];
                    const auto& gs = idx.with_src(c.tgt(h));
                    if (gs.empty()) continue;
                    const MorId g = gs[rng.below(gs.size())];
                    const auto& fs = idx.with_src(c.tgt(g));
                    if (fs.empty()) continue;
                    lc.ternary(fs[rng.below(fs.size())], g, h);
                }
            }
        } else {
            r.notes.push_back("composable pairs and triples sampled");
            for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
                const MorId h = ms[rng.below(ms.size())];
                const auto& gs = idx.with_src(c.tgt(h));
                if (gs.empty()) continue;
                const MorId g = gs[rng.below(gs.size())];
                lc.binary(g, h);
                const auto& fs = idx.with_src(c.tgt(g));
                if (fs.empty()) continue;
                lc.ternary(fs[rng.below(fs.size())], g, h);
            }
        }
    }
    return r;
}

PeirceSlices peirce(const Category& c, MorId e, MorId f) {
    if (!c.is_identity(e) || !c.is_identity(f)) throw InvalidInput("Peirce slices need identity arguments");
    PeirceSlices out;
    for (MorId a : c.morphisms()) {
        const bool l = c.tgt(a) == e, r = c.src(a) == f;
        if (l) out.left.push_back(a);
        if (r) out.right.push_back(a);
        if (l && r) out.hom.push_back(a);
    }
    return out;
}

bool peirce_partition(const Category& c) {
    const auto ids = c.identities();
    std::set<MorId> seen;
    std::size_t total = 0;
    for (MorId e : ids)
        for (MorId f : ids)
            for (MorId a : peirce(c, e, f).hom) {
                ++total;
                seen.insert(a);
            }
    return total == seen.size() && seen.size() == c.morphisms().size();
}

// ---------------------------------------------------------------------------

Report check_functor(const Functor& F, const Config& cfg) {
    Report r("functor " + F.name);
    r.seed = cfg.seed;
    const Category& A = *F.dom;
    const Category& B = *F.cod;
    for (const char* name : {"F(bot) = bot", "F(c) defined", "F(identity) is an identity", "F(src c) = src F(c)",
                             "F(tgt c) = tgt F(c)", "F(cc') = F(c)F(c')"})
        r.law(name);
    r.check("F(bot) = bot", !F(Bot), [] { return std::vector<std::string>{"bot"}; });
    const auto ms = A.morphisms();
    std::vector<MorTerm> image(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const MorId c = ms[i];
        const MorTerm fc = F.map(c);
        image[i] = fc;
        auto w = [&] { return std::vector<std::string>{A.name(c), term_name(B, fc)}; };
        r.check("F(c) defined", fc.has_value(), w);
        if (!fc) continue;
        if (A.is_identity(c)) r.check("F(identity) is an identity", B.is_identity(*fc), w);
        r.check("F(src c) = src F(c)", F.map(A.src(c)) == src(B, fc), w);
        r.check("F(tgt c) = tgt F(c)", F.map(A.tgt(c)) == tgt(B, fc), w);
    }
    const SliceIndex idx(A, ms);
    std::uint64_t pairs = 0;
    for (MorId g : ms) pairs += idx.with_src(A.tgt(g)).size();
    auto law = [&](MorId f, MorId g) {
        const MorTerm fg = A.compose(f, g);
        if (!fg) return;
        const MorTerm lhs = F.map(*fg);
        const MorTerm rhs = comp(B, F.map(f), F.map(g));
        r.check("F(cc') = F(c)F(c')", lhs.has_value() && lhs == rhs, [&] {
            return std::vector<std::string>{A.name(f), A.name(g), term_name(B, lhs), term_name(B, rhs)};
        });
    };
    if (pairs <= cfg.pair_budget) {
        for (MorId g : ms)
            for (MorId f : idx.with_src(A.tgt(g))) law(f, g);
    } else {
        r.exhaustive = false;
        Sampler rng(cfg.seed);
        for (std::uint64_t s = 0; s < cfg.sample_count; ++s) {
            const MorId g = ms[rng.below(ms.size())];
            const auto& fs = idx.with_src(A.tgt(g));
            if (!fs.empty()) law(fs[rng.below(fs.size())], g);
        }
    }
    return r;
}

Functor identity_functor(const Category& c) {
    return Functor{"id_" + c.id(), &c, &c, [](MorId f) { return MorTerm(f); }};
}

Functor compose_functors(const Functor& f, const Functor& g) {
    if (g.cod != f.dom) throw InvalidInput("functor composition: codomain/domain mismatch");
    return Functor{f.name + "*" + g.name, g.dom, f.cod, [f, g](MorId x) { return f(g.map(x)); }};
}

} // namespace charcat::abscat
