#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "charcat/core/config.hpp"
#include "json.hpp"

namespace charcat::io {

/// Stable process exit codes.
enum ExitCode : int { kPass = 0, kPropertyFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

struct CommandResult {
    int exit_code = kPass;
    nlohmann::json output;
};

/// Runs `body`, mapping InvalidInput / Unsupported / JSON errors to kInputError and
/// BudgetExceeded to kBudgetExceeded with {"error": message} as output.
CommandResult guarded_command(const std::function<CommandResult()>& body);

/// Abstract-category laws of a finite category JSON file.
CommandResult cmd_check_laws(const std::filesystem::path& category, const Config& cfg);
/// Generators and order of Aut(G).
CommandResult cmd_aut(const std::filesystem::path& group, const Config& cfg);
/// Members, order and normality of a subgroup given by a parse_subgroup spec.
CommandResult cmd_subgroup(const std::filesystem::path& group, const std::string& spec);
/// Certificate or counterexample; with `brute_force` the independent decision is included
/// and must agree.
CommandResult cmd_characteristic(const std::filesystem::path& group, const std::string& spec, bool brute_force,
                                 const Config& cfg);
CommandResult cmd_fully_invariant(const std::filesystem::path& group, const std::string& spec, const Config& cfg);

struct CounitalParams {
    std::string name;                 // derived | center | verbal | marginal | rottlaender | baer
    std::filesystem::path catalog;    // catalog directory (derived, center, verbal, marginal)
    std::string morphisms;            // isos | epis | all; empty picks isos for center, epis for marginal
                                      // and all otherwise
    std::size_t max_order = 0;        // 0 keeps every catalog group
    std::vector<std::string> words;   // verbal
    std::string word = "[x,y]";       // marginal
    std::uint64_t p = 0;              // rottlaender, baer
    std::uint64_t q = 0;              // rottlaender
    std::vector<std::uint64_t> eigs;  // rottlaender
    std::filesystem::path group;      // baer
};
/// Builds the named counital, runs check_counital and certifies every component.
CommandResult cmd_counital(const CounitalParams& params, const Config& cfg);

/// Extends a subgroup of one catalog group over the iso-core of the catalog.
CommandResult cmd_extend(const std::filesystem::path& catalog, const std::string& group_id, const std::string& spec,
                         const Config& cfg);
CommandResult cmd_baer(const std::filesystem::path& group, std::uint64_t p, const Config& cfg);

/// Re-checks a certificate file against a group file. Accepts a bare certificate, a command
/// output holding "certificate", or a command output holding "counterexample".
CommandResult cmd_verify(const std::filesystem::path& certificate, const std::filesystem::path& group);

/// Writes small_groups(max_order) (or only the abelian ones) as a catalog directory.
CommandResult cmd_write_catalog(const std::filesystem::path& dir, std::size_t max_order, bool abelian_only);
/// Writes one constructed group: kind is cyclic, dihedral, symmetric, quaternion, elementary,
/// heisenberg, heisenberg-times-cyclic or rottlaender.
CommandResult cmd_make_group(const std::filesystem::path& out, const std::string& kind,
                             const std::vector<std::uint64_t>& params);

} // namespace charcat::io
