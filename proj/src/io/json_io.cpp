#include "charcat/io/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "charcat/core/errors.hpp"

namespace charcat::io {

namespace fs = std::filesystem;

namespace {

std::string file_stem_for(const std::string& id) {
    std::string out;
    for (char c : id) out += std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ? c : '_';
    return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
    }
}

} // namespace

nlohmann::json read_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_json_file(const fs::path& path, const nlohmann::json& j) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << dump(j);
}

nlohmann::json to_json(const ff::Mat& m) {
    return {{"p", m.modulus()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}};
}

ff::Mat mat_from_json(const nlohmann::json& j) {
    return guarded("matrix", [&] {
        return ff::Mat(j.at("p").get<std::uint64_t>(), j.at("rows").get<std::size_t>(),
                       j.at("cols").get<std::size_t>(), j.at("entries").get<std::vector<ff::Residue>>());
    });
}

nlohmann::json to_json(const ff::Subspace& s) {
    ff::Mat m(s.modulus(), s.dim(), s.ambient_dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.ambient_dim(); ++c) m(r, c) = s.basis()[r][c];
    return to_json(m);
}

ff::Subspace subspace_from_json(const nlohmann::json& j) {
    const ff::Mat m = mat_from_json(j);
    return m.row_space();
}

nlohmann::json to_json(const groups::FiniteGroup& g) {
    const std::size_t n = g.order();
    auto rows = nlohmann::json::array();
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<groups::Elem> row(g.table().begin() + static_cast<std::ptrdiff_t>(a * n),
                                      g.table().begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
        rows.push_back(row);
    }
    return {{"id", g.id()}, {"order", n}, {"elements", g.labels()}, {"table", rows}};
}

groups::FiniteGroup group_from_json(const nlohmann::json& j) {
    return guarded("group", [&] {
        const auto n = j.at("order").get<std::size_t>();
        auto labels = j.at("elements").get<std::vector<std::string>>();
        const auto rows = j.at("table").get<std::vector<std::vector<groups::Elem>>>();
        if (labels.size() != n || rows.size() != n) throw InvalidInput("group table does not match its order");
        std::vector<groups::Elem> table;
        table.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n) throw InvalidInput("group table row has the wrong length");
            table.insert(table.end(), row.begin(), row.end());
        }
        return groups::FiniteGroup(j.at("id").get<std::string>(), std::move(labels), std::move(table));
    });
}

std::string dump_group(const groups::FiniteGroup& g) {
    const std::size_t n = g.order();
    std::string out = "{\n  \"elements\": " + nlohmann::json(g.labels()).dump() + ",\n  \"id\": " +
                      nlohmann::json(g.id()).dump() + ",\n  \"order\": " + std::to_string(n) + ",\n  \"table\": [\n";
    for (std::size_t a = 0; a < n; ++a) {
        const std::vector<groups::Elem> row(g.table().begin() + static_cast<std::ptrdiff_t>(a * n),
                                            g.table().begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
        out += "    " + nlohmann::json(row).dump() + (a + 1 < n ? ",\n" : "\n");
    }
    return out + "  ]\n}\n";
}

void write_group_file(const fs::path& path, const groups::FiniteGroup& g) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << dump_group(g);
}

groups::GroupRef load_group(const fs::path& path) { return groups::make_ref(group_from_json(read_json_file(path))); }

void write_catalog(const fs::path& dir, const std::vector<groups::GroupRef>& groups) {
    auto index = nlohmann::json::array();
    for (const auto& g : groups) {
        const std::string file = file_stem_for(g->id()) + ".json";
        write_group_file(dir / file, *g);
        index.push_back({{"id", g->id()}, {"file", file}});
    }
    write_json_file(dir / "index.json", {{"groups", index}});
}

std::vector<groups::GroupRef> load_catalog(const fs::path& dir) {
    const auto index = read_json_file(dir / "index.json");
    std::vector<groups::GroupRef> out;
    guarded("catalog index", [&] {
        for (const auto& entry : index.at("groups")) {
            auto g = load_group(dir / entry.at("file").get<std::string>());
            if (g->id() != entry.at("id").get<std::string>())
                throw InvalidInput("catalog entry " + entry.at("id").get<std::string>() + " has id " + g->id());
            out.push_back(std::move(g));
        }
        return 0;
    });
    return out;
}

groups::Subgroup parse_subgroup(const groups::GroupRef& g, const std::string& spec) {
    if (spec == "whole") return groups::whole_group(g);
    if (spec == "trivial") return groups::trivial_subgroup(g);
    if (spec == "center") return groups::center(g);
    if (spec == "derived") return groups::derived_subgroup(g);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        for (std::string item; std::getline(ss, item, sep);)
            if (!item.empty()) parts.push_back(item);
        return parts;
    };
    if (spec.rfind("gens:", 0) == 0) {
        std::vector<groups::Elem> seed;
        for (const auto& l : split(spec.substr(5), '|')) seed.push_back(g->index_of(l));
        return groups::subgroup_closure(g, seed);
    }
    if (spec.rfind("members:", 0) == 0) {
        std::vector<groups::Elem> members;
        for (const auto& t : split(spec.substr(8), ',')) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(t, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != t.size() || v >= g->order()) throw InvalidInput("bad element index '" + t + "'");
            members.push_back(static_cast<groups::Elem>(v));
        }
        return groups::Subgroup(g, std::move(members));
    }
    throw InvalidInput("unknown subgroup spec '" + spec + "'");
}

nlohmann::json member_labels(const groups::Subgroup& h) {
    auto out = nlohmann::json::array();
    for (groups::Elem x : h.members()) out.push_back(h.parent()->label(x));
    return out;
}

} // namespace charcat::io
