#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "charcat/ff/matrix.hpp"
#include "charcat/groups/group.hpp"
#include "json.hpp"

namespace charcat::io {

/// Parses a JSON file; throws InvalidInput when the file is missing or malformed.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes `j` pretty-printed with a trailing newline. Keys come out sorted.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
std::string dump(const nlohmann::json& j);

/// {"p", "rows", "cols", "entries"} with row-major entries.
nlohmann::json to_json(const ff::Mat& m);
ff::Mat mat_from_json(const nlohmann::json& j);
/// A subspace as the matrix whose rows are its RREF basis.
nlohmann::json to_json(const ff::Subspace& s);
ff::Subspace subspace_from_json(const nlohmann::json& j);

/// {"id", "order", "elements", "table"} with table[a][b] = ab.
nlohmann::json to_json(const groups::FiniteGroup& g);
groups::FiniteGroup group_from_json(const nlohmann::json& j);
/// Same content as to_json(g) with one table row per line.
std::string dump_group(const groups::FiniteGroup& g);
void write_group_file(const std::filesystem::path& path, const groups::FiniteGroup& g);
groups::GroupRef load_group(const std::filesystem::path& path);

/// A catalog directory holds one file per group plus index.json = {"groups": [{"id", "file"}]}.
void write_catalog(const std::filesystem::path& dir, const std::vector<groups::GroupRef>& groups);
std::vector<groups::GroupRef> load_catalog(const std::filesystem::path& dir);

/// "whole", "trivial", "center", "derived", "gens:l1|l2|..." (element labels) or
/// "members:i,j,..." (element indices; must be closed).
groups::Subgroup parse_subgroup(const groups::GroupRef& g, const std::string& spec);

/// Member labels in index order.
nlohmann::json member_labels(const groups::Subgroup& h);

} // namespace charcat::io
