#include "doctest.h"

#include <set>

#include "../oracles/group_oracles.hpp"
#include "charcat/core/errors.hpp"
#include "charcat/groups/constructors.hpp"
#include "charcat/groups/homs.hpp"

using namespace charcat;
using namespace charcat::groups;

TEST_SUITE("groups") {

TEST_CASE("constructors and basic invariants") {
    auto c5 = make_ref(cyclic(5));
    CHECK(c5->order() == 5);
    for (Elem a = 0; a < 5; ++a)
        if (a != c5->identity()) CHECK(c5->elem_order(a) == 5);
    auto d4 = make_ref(dihedral(4));
    CHECK(d4->order() == 8);
    CHECK(center(d4).members() == oracle::brute_center(*d4));
    CHECK(center(d4).size() == 2);
    CHECK(symmetric(4).order() == 24);
    CHECK(alternating(4).order() == 12);
    CHECK(heisenberg(5).order() == 125);
    CHECK_THROWS_AS(metacyclic("bad", 5, 2, 2, 0), InvalidInput);
    CHECK_THROWS_AS(FiniteGroup("bad", {"a", "b"}, {0, 0, 0, 1}), InvalidInput);
}

TEST_CASE("closure, center and derived subgroups agree with table scans") {
    for (const auto& g : small_groups(16)) {
        CHECK(center(g).members() == oracle::brute_center(*g));
        CHECK(derived_subgroup(g).members() == oracle::brute_derived(*g));
    }
    auto s3 = make_ref(symmetric(3));
    const Elem r[] = {s3->index_of("(123)")};
    CHECK(subgroup_closure(s3, r).size() == 3);
    CHECK(subgroup_closure(s3, {}).size() == 1);
    auto d4 = make_ref(dihedral(4));
    const Elem rs[] = {d4->index_of("a"), d4->index_of("b")};
    CHECK(subgroup_closure(d4, rs).size() == 8);
    const auto sub = subgroup_closure(d4, std::span<const Elem>(rs, 1));
    CHECK(subgroup_closure(d4, sub.members()) == sub);
}

TEST_CASE("catalog has one group per isomorphism type") {
    const auto cat = small_groups(16);
    CHECK(cat.size() == 42);
    CHECK(small_groups(15).size() == 28);
    std::size_t order16 = 0;
    for (const auto& g : cat) order16 += g->order() == 16 ? 1 : 0;
    CHECK(order16 == 14);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            if (cat[i]->order() == cat[j]->order())
                CHECK_MESSAGE(!find_isomorphism(cat[i], cat[j]).has_value(), cat[i]->id() << " ~ " << cat[j]->id());
}

TEST_CASE("homomorphism enumeration matches exhaustive maps") {
    auto c5 = make_ref(cyclic(5));
    auto s3 = make_ref(symmetric(3));
    auto c6 = make_ref(cyclic(6));
    CHECK(hom_enumerate(c5, c5, true).size() == 4);
    CHECK(hom_enumerate(s3, s3, true).size() == oracle::brute_automorphisms(*s3).size());
    CHECK(hom_enumerate(s3, s3, true).size() == 6);
    CHECK(hom_enumerate(c6, s3, true).empty());
    CHECK(hom_enumerate(s3, s3, false).size() == oracle::brute_homs(*s3, *s3).size());
    CHECK(hom_enumerate(s3, s3, false).size() == 10);
    auto d4 = make_ref(dihedral(4));
    auto q8 = make_ref(quaternion8());
    CHECK(hom_enumerate(d4, d4, false).size() == oracle::brute_homs(*d4, *d4).size());
    CHECK(hom_enumerate(d4, d4, false).size() == 36);
    CHECK(hom_enumerate(d4, d4, true).size() == oracle::brute_automorphisms(*d4).size());
    CHECK(hom_enumerate(q8, d4, false).size() == oracle::brute_homs(*q8, *d4).size());
    for (const auto& h : hom_enumerate(s3, c6, false)) CHECK(h.is_homomorphism());
    Config tiny;
    tiny.exhaustive_limit = 4;
    CHECK_THROWS_AS(hom_enumerate(s3, s3, false, tiny), BudgetExceeded);
    tiny.aut_budget = 3;
    tiny.exhaustive_limit = 16;
    CHECK_THROWS_AS(hom_enumerate(d4, d4, false, tiny), BudgetExceeded);
}

TEST_CASE("automorphisms are closed under composition") {
    auto d4 = make_ref(dihedral(4));
    const auto auts = hom_enumerate(d4, d4, true);
    std::set<std::vector<Elem>> maps;
    for (const auto& a : auts) maps.insert(a.map);
    for (const auto& a : auts)
        for (const auto& b : auts) CHECK(maps.count(compose(a, b).map) == 1);
}

TEST_CASE("stabilizer-chain generators give the full automorphism group") {
    for (const auto& g : small_groups(16)) {
        const auto gens = automorphism_generators(g);
        const auto all = hom_enumerate(g, g, true);
        CHECK_MESSAGE(gens.order == all.size(), g->id());
        CHECK(automorphism_closure(gens.gens, g, 100000).size() == all.size());
    }
}

TEST_CASE("quotients and Noether factorization") {
    auto s3 = make_ref(symmetric(3));
    const auto q = quotient(derived_subgroup(s3));
    CHECK(q.group->order() == 2);
    CHECK(kernel(q.proj) == derived_subgroup(s3));
    const auto qt = quotient(trivial_subgroup(s3));
    CHECK(qt.group->order() == 6);
    CHECK(qt.proj.is_isomorphism());
    auto d4 = make_ref(dihedral(4));
    const auto qz = quotient(center(d4));
    CHECK(qz.group->order() == 4);
    CHECK(qz.group->exponent() == 2);
    const Elem refl[] = {s3->index_of("(12)")};
    CHECK_THROWS_AS(quotient(subgroup_closure(s3, refl)), InvalidInput);

    const auto idf = noether_factor(identity_hom(d4));
    CHECK(idf.coim.is_isomorphism());
    CHECK(idf.psi.is_isomorphism());
    CHECK(compose(idf.im, compose(idf.psi, idf.coim)).map == identity_hom(d4).map);

    auto c4 = make_ref(cyclic(4));
    auto c2 = make_ref(cyclic(2));
    GroupHom mod2{c4, c2, {0, 1, 0, 1}};
    REQUIRE(mod2.is_homomorphism());
    const auto f = noether_factor(mod2);
    CHECK(kernel(mod2).size() == 2);
    CHECK(f.coim.is_surjective());
    CHECK(f.psi.is_isomorphism());
    CHECK(f.im.is_injective());
    CHECK(compose(f.im, compose(f.psi, f.coim)).map == mod2.map);

    GroupHom sign{s3, c2, {}};
    for (Elem a = 0; a < 6; ++a) sign.map.push_back(derived_subgroup(s3).contains(a) ? 0 : 1);
    REQUIRE(sign.is_homomorphism());
    const auto fs = noether_factor(sign);
    CHECK(kernel(sign) == derived_subgroup(s3));
    CHECK(fs.coim.cod->order() == 2);
    CHECK(compose(fs.im, compose(fs.psi, fs.coim)).map == sign.map);
}

TEST_CASE("subgroups of a given order") {
    auto s3 = make_ref(symmetric(3));
    CHECK(subgroups_of_order(s3, 2).size() == 3);
    CHECK(subgroups_of_order(s3, 3).size() == 1);
    auto c2sq = make_ref(elementary_abelian(2, 2));
    CHECK(subgroups_of_order(c2sq, 2).size() == 3);
    auto d4 = make_ref(dihedral(4));
    CHECK(subgroups_of_order(d4, 4).size() == 3);
}

TEST_CASE("relabelled presentations are isomorphic") {
    auto d4 = make_ref(dihedral(4));
    std::vector<Elem> perm{3, 1, 7, 0, 2, 6, 5, 4};
    auto other = make_ref(relabel(*d4, "D4b", perm, [](const std::string& s) { return s + "'"; }));
    const auto iso = find_isomorphism(d4, other);
    REQUIRE(iso.has_value());
    CHECK(iso->is_isomorphism());
    CHECK(iso->is_homomorphism());
}

}  // TEST_SUITE
