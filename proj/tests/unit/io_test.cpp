#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "charcat/abscat/examples.hpp"
#include "charcat/core/errors.hpp"
#include "charcat/groups/constructors.hpp"
#include "charcat/io/commands.hpp"
#include "charcat/io/json_io.hpp"

using namespace charcat;
using namespace charcat::io;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = CHARCAT_FIXTURES;

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "charcat_io_test";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("matrices and subspaces round trip") {
    const auto m = ff::Mat::from_ints(7, 2, 3, {1, 2, 3, -1, 0, 5});
    const auto j = to_json(m);
    CHECK(j["entries"] == nlohmann::json{1, 2, 3, 6, 0, 5});
    CHECK(mat_from_json(j) == m);
    const auto s = ff::Subspace::span(5, 3, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});
    CHECK(subspace_from_json(to_json(s)) == s);
    CHECK(to_json(s)["rows"] == 2);
    CHECK_THROWS_AS(mat_from_json(nlohmann::json{{"p", 4}, {"rows", 1}, {"cols", 1}, {"entries", {1}}}), InvalidInput);
    CHECK_THROWS_AS(mat_from_json(nlohmann::json{{"p", 5}}), InvalidInput);
}

TEST_CASE("group files round trip") {
    for (const auto& g : groups::small_groups(12)) {
        const auto back = group_from_json(nlohmann::json::parse(dump_group(*g)));
        CHECK(back.id() == g->id());
        CHECK(back.table() == g->table());
        CHECK(back.labels() == g->labels());
        CHECK(nlohmann::json::parse(dump_group(*g)) == to_json(*g));
    }
    auto bad = to_json(groups::cyclic(3));
    bad["table"][1][1] = 1;
    CHECK_THROWS_AS(group_from_json(bad), InvalidInput);
    bad = to_json(groups::cyclic(3));
    bad["order"] = 4;
    CHECK_THROWS_AS(group_from_json(bad), InvalidInput);
}

TEST_CASE("shipped fixtures match the constructors") {
    const auto small = load_catalog(kFixtures / "small");
    const auto expected = groups::small_groups(16);
    REQUIRE(small.size() == 42);
    for (std::size_t i = 0; i < small.size(); ++i) {
        CHECK(small[i]->id() == expected[i]->id());
        CHECK(small[i]->table() == expected[i]->table());
    }
    const auto ab = load_catalog(kFixtures / "abelian");
    CHECK(ab.size() == 25);
    for (const auto& g : ab) CHECK(g->is_abelian());
    CHECK(read_json_file(kFixtures / "table2.json") == abscat::table2_category().to_json());
    CHECK(load_group(kFixtures / "heisenberg_5.json")->table() == groups::heisenberg(5).table());
    CHECK(load_group(kFixtures / "rottlaender_5_11.json")->order() == 605);
}

TEST_CASE("subgroup specs") {
    const auto s3 = groups::make_ref(groups::symmetric(3));
    CHECK(parse_subgroup(s3, "whole").size() == 6);
    CHECK(parse_subgroup(s3, "trivial").size() == 1);
    CHECK(parse_subgroup(s3, "derived").size() == 3);
    CHECK(parse_subgroup(s3, "center").size() == 1);
    CHECK(parse_subgroup(s3, "gens:(12)|(13)").size() == 6);
    CHECK(parse_subgroup(s3, "members:0").size() == 1);
    CHECK_THROWS_AS(parse_subgroup(s3, "gens:(45)"), InvalidInput);
    CHECK_THROWS_AS(parse_subgroup(s3, "members:0,x"), InvalidInput);
    CHECK_THROWS_AS(parse_subgroup(s3, "members:0,2,3"), InvalidInput);
    CHECK_THROWS_AS(parse_subgroup(s3, "sylow"), InvalidInput);
}

TEST_CASE("check-laws exit codes") {
    const Config cfg;
    CHECK(cmd_check_laws(kFixtures / "table2.json", cfg).exit_code == kPass);
    const auto broken = cmd_check_laws(kFixtures / "table2_broken.json", cfg);
    CHECK(broken.exit_code == kPropertyFailure);
    bool has_witness = false;
    for (const auto& l : broken.output["laws"])
        if (!l["pass"].get<bool>()) has_witness = has_witness || !l["witness"].empty();
    CHECK(has_witness);
    CHECK(cmd_check_laws(kFixtures / "empty_category.json", cfg).exit_code == kPass);

    const auto garbage = scratch("garbage.json");
    std::ofstream(garbage) << "{ not json";
    const auto r = guarded_command([&] { return cmd_check_laws(garbage, cfg); });
    CHECK(r.exit_code == kInputError);
    CHECK(guarded_command([&] { return cmd_check_laws(scratch("missing.json"), cfg); }).exit_code == kInputError);
}

TEST_CASE("characteristic certificates through files") {
    const Config cfg;
    const auto d4 = kFixtures / "d4.json";
    const auto s3 = kFixtures / "s3.json";
    const auto cert = cmd_characteristic(d4, "center", true, cfg);
    REQUIRE(cert.exit_code == kPass);
    CHECK(cert.output["certificate"]["kind"] == "characteristic");
    CHECK(cert.output["certificate"]["map_count"] == 8);
    write_json_file(scratch("d4_center.json"), cert.output);
    CHECK(cmd_verify(scratch("d4_center.json"), d4).exit_code == kPass);
    write_json_file(scratch("d4_center_bare.json"), cert.output["certificate"]);
    CHECK(cmd_verify(scratch("d4_center_bare.json"), d4).exit_code == kPass);
    CHECK(cmd_verify(scratch("d4_center.json"), s3).exit_code == kPropertyFailure);

    auto tampered = cert.output;
    tampered["certificate"]["map_count"] = 4;
    write_json_file(scratch("tampered.json"), tampered);
    CHECK(cmd_verify(scratch("tampered.json"), d4).exit_code == kPropertyFailure);

    const auto ce = cmd_characteristic(s3, "gens:(12)", true, cfg);
    CHECK(ce.exit_code == kPropertyFailure);
    CHECK(ce.output.contains("counterexample"));
    CHECK(ce.output["brute_force"] == false);
    write_json_file(scratch("s3_ce.json"), ce.output);
    CHECK(cmd_verify(scratch("s3_ce.json"), s3).exit_code == kPass);
    auto fake = ce.output;
    fake["counterexample"]["h"] = "1";
    write_json_file(scratch("s3_fake.json"), fake);
    CHECK(cmd_verify(scratch("s3_fake.json"), s3).exit_code == kPropertyFailure);

    for (const auto& entry : fs::directory_iterator(kFixtures / "small")) {
        if (entry.path().filename() == "index.json") continue;
        CHECK(cmd_characteristic(entry.path(), "whole", false, cfg).exit_code == kPass);
    }

    const auto fi = cmd_fully_invariant(s3, "derived", cfg);
    CHECK(fi.exit_code == kPass);
    CHECK(fi.output["certificate"]["kind"] == "fully_invariant");
}

TEST_CASE("budget and input errors map to exit codes") {
    Config tight;
    tight.aut_budget = 1;
    const auto r = guarded_command([&] { return cmd_aut(kFixtures / "rottlaender_5_11.json", tight); });
    CHECK(r.exit_code == kBudgetExceeded);
    CHECK(r.output.contains("error"));
    const auto bad_prime = guarded_command([&] { return cmd_baer(kFixtures / "d4.json", 2, Config{}); });
    CHECK(bad_prime.exit_code == kInputError);
    CounitalParams bad;
    bad.name = "rottlaender";
    bad.p = 3;
    bad.q = 7;
    bad.eigs = {2, 4};
    const auto rv = guarded_command([&] { return cmd_counital(bad, Config{}); });
    CHECK(rv.exit_code == kInputError);
    CHECK(rv.output["error"].get<std::string>().find("u=2, k=2") != std::string::npos);
    CHECK(guarded_command([&] { return cmd_make_group(scratch("x.json"), "klein", {}); }).exit_code == kInputError);
}

TEST_CASE("counital commands") {
    const Config cfg;
    CounitalParams derived;
    derived.name = "derived";
    derived.catalog = kFixtures / "small";
    derived.max_order = 12;
    const auto d = cmd_counital(derived, cfg);
    CHECK(d.exit_code == kPass);
    CHECK(d.output["all_certified"] == true);
    CHECK(d.output["objects"].size() == 24);

    CounitalParams verbal;
    verbal.name = "verbal";
    verbal.catalog = kFixtures / "abelian";
    verbal.words = {"[x,y]"};
    const auto v = cmd_counital(verbal, cfg);
    CHECK(v.exit_code == kPass);
    for (const auto& o : v.output["objects"]) CHECK(o["order"] == 1);

    CounitalParams center = derived;
    center.name = "center";
    CHECK(cmd_counital(center, cfg).exit_code == kPass);
    center.morphisms = "all";
    CHECK(cmd_counital(center, cfg).exit_code == kPropertyFailure);

    CounitalParams rott;
    rott.name = "rottlaender";
    rott.p = 5;
    rott.q = 11;
    rott.eigs = {3, 9};
    const auto r = cmd_counital(rott, cfg);
    CHECK(r.exit_code == kPass);
    CHECK(r.output["order_q_subgroups"] == 12);
    CHECK(r.output["characteristic_count"] == 2);
    CHECK(r.output["counitals"].size() == 2);
}

TEST_CASE("outputs are deterministic") {
    const Config cfg;
    const auto a = cmd_baer(kFixtures / "heisenberg_5.json", 5, cfg);
    const auto b = cmd_baer(kFixtures / "heisenberg_5.json", 5, cfg);
    CHECK(a.exit_code == kPass);
    CHECK(dump(a.output) == dump(b.output));
    const auto e1 = cmd_extend(kFixtures / "small", "D4", "center", cfg);
    const auto e2 = cmd_extend(kFixtures / "small", "D4", "center", cfg);
    CHECK(e1.exit_code == kPass);
    CHECK(dump(e1.output) == dump(e2.output));
}

}
