#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charcat/io/commands.hpp"
#include "charcat/io/json_io.hpp"

using namespace charcat;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"Characteristic subgroups, counitals and their certificates over finite group catalogs"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    std::string out_path;
    unsigned threads = 1;
    app.add_option("--seed", cfg.seed, "Seed for every sampled check")->capture_default_str();
    app.add_option("--exhaustive-limit", cfg.exhaustive_limit, "Max |G| for enumerating all homomorphisms")
        ->capture_default_str();
    app.add_option("--aut-budget", cfg.aut_budget, "Search nodes per backtracking run")->capture_default_str();
    app.add_option("--sample-count", cfg.sample_count, "Samples when a check is too large to exhaust")
        ->capture_default_str();
    app.add_option("--pair-budget", cfg.pair_budget, "Exhaustive below this many tuples")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("-o,--out", out_path, "Write the JSON result here instead of stdout");

    std::optional<std::function<io::CommandResult()>> run;
    auto bind = [&](CLI::App* sub, std::function<io::CommandResult()> f) {
        sub->callback([&run, f = std::move(f)] { run = f; });
    };

    std::string file, group, spec = "whole", group_id, certificate;
    bool brute = false;

    auto* laws = app.add_subcommand("check-laws", "Check the abstract-category laws of a finite category file");
    laws->add_option("category", file, "Category JSON")->required()->check(CLI::ExistingFile);
    bind(laws, [&] { return io::cmd_check_laws(file, cfg); });

    auto* aut = app.add_subcommand("aut", "Generators and order of Aut(G)");
    aut->add_option("group", file, "Group JSON")->required()->check(CLI::ExistingFile);
    bind(aut, [&] { return io::cmd_aut(file, cfg); });

    const std::string spec_help = "whole | trivial | center | derived | gens:l1|l2 | members:i,j";
    auto* sub = app.add_subcommand("subgroup", "Describe a subgroup");
    sub->add_option("group", file, "Group JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("-s,--subgroup", spec, spec_help)->capture_default_str();
    bind(sub, [&] { return io::cmd_subgroup(file, spec); });

    auto* chr = app.add_subcommand("characteristic", "Certificate or counterexample for phi(H) = H over Aut(G)");
    chr->add_option("group", file, "Group JSON")->required()->check(CLI::ExistingFile);
    chr->add_option("-s,--subgroup", spec, spec_help)->capture_default_str();
    chr->add_flag("--brute-force", brute, "Also decide by the independent search");
    bind(chr, [&] { return io::cmd_characteristic(file, spec, brute, cfg); });

    auto* fi = app.add_subcommand("fully-invariant", "Certificate or counterexample for psi(H) <= H over End(G)");
    fi->add_option("group", file, "Group JSON")->required()->check(CLI::ExistingFile);
    fi->add_option("-s,--subgroup", spec, spec_help)->capture_default_str();
    bind(fi, [&] { return io::cmd_fully_invariant(file, spec, cfg); });

    io::CounitalParams cp;
    std::string catalog;
    auto* cou = app.add_subcommand("counital", "Build and check a named counital");
    cou->add_option("name", cp.name, "derived | center | verbal | marginal | rottlaender | baer")
        ->required()
        ->check(CLI::IsMember({"derived", "center", "verbal", "marginal", "rottlaender", "baer"}));
    cou->add_option("--catalog", catalog, "Catalog directory");
    cou->add_option("--morphisms", cp.morphisms, "isos | epis | all")->check(CLI::IsMember({"isos", "epis", "all"}));
    cou->add_option("--max-order", cp.max_order, "Only catalog groups up to this order");
    cou->add_option("--words", cp.words, "Words for the verbal counital");
    cou->add_option("--word", cp.word, "Word for the marginal counital")->capture_default_str();
    cou->add_option("--p", cp.p, "Prime p");
    cou->add_option("--q", cp.q, "Prime q");
    cou->add_option("--eigs", cp.eigs, "Eigenvalues")->delimiter(',');
    cou->add_option("--group", group, "Group JSON (baer)");
    bind(cou, [&] {
        cp.catalog = catalog;
        cp.group = group;
        return io::cmd_counital(cp, cfg);
    });

    auto* ext = app.add_subcommand("extend", "Extend a subgroup of one catalog group over the iso-core");
    ext->add_option("--catalog", catalog, "Catalog directory")->required();
    ext->add_option("--group", group_id, "Id of the catalog group")->required();
    ext->add_option("-s,--subgroup", spec, spec_help)->capture_default_str();
    bind(ext, [&] { return io::cmd_extend(catalog, group_id, spec, cfg); });

    std::uint64_t p = 0;
    auto* baer = app.add_subcommand("baer", "Bimap, adjoint algebra, radical and certified subgroup");
    baer->add_option("group", file, "Group JSON")->required()->check(CLI::ExistingFile);
    baer->add_option("--p", p, "Odd prime")->required();
    bind(baer, [&] { return io::cmd_baer(file, p, cfg); });

    auto* ver = app.add_subcommand("verify", "Re-check a certificate against a group table");
    ver->add_option("certificate", certificate, "Certificate JSON")->required()->check(CLI::ExistingFile);
    ver->add_option("--group", group, "Group JSON")->required()->check(CLI::ExistingFile);
    bind(ver, [&] { return io::cmd_verify(certificate, group); });

    std::size_t max_order = 16;
    bool abelian_only = false;
    auto* cat = app.add_subcommand("write-catalog", "Write the small-group catalog as a directory");
    cat->add_option("dir", file, "Output directory")->required();
    cat->add_option("--max-order", max_order)->capture_default_str();
    cat->add_flag("--abelian", abelian_only, "Only abelian groups");
    bind(cat, [&] { return io::cmd_write_catalog(file, max_order, abelian_only); });

    std::string kind;
    std::vector<std::uint64_t> params;
    auto* mk = app.add_subcommand("make-group", "Write one constructed group");
    mk->add_option("kind", kind, "cyclic | dihedral | symmetric | quaternion | elementary | heisenberg | "
                                 "heisenberg-times-cyclic | rottlaender")
        ->required();
    mk->add_option("params", params, "Integer parameters");
    mk->add_option("--file", file, "Output file")->required();
    bind(mk, [&] { return io::cmd_make_group(file, kind, params); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? io::kPass : io::kInputError;
    }

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io::kInputError;
    }
    const auto result = io::guarded_command(*run);
    if (out_path.empty()) {
        std::cout << io::dump(result.output);
    } else {
        io::write_json_file(out_path, result.output);
    }
    if (result.output.contains("error")) std::cerr << "error: " << result.output["error"].get<std::string>() << "\n";
    return result.exit_code;
}
