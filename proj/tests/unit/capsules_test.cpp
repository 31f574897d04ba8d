#include <doctest.h>

#include "charcat/abscat/category.hpp"
#include "charcat/abscat/concrete.hpp"
#include "charcat/abscat/examples.hpp"
#include "charcat/capsules/capsule.hpp"
#include "charcat/core/errors.hpp"
#include "charcat/groups/constructors.hpp"
#include "charcat/groups/homs.hpp"

using namespace charcat;
using namespace charcat::abscat;
using namespace charcat::capsules;

namespace {

/// Two objects joined by mutually inverse arrows u : e1 -> e2 and v : e2 -> e1.
FinAbsCat two_object_groupoid() {
    nlohmann::json j = {
        {"morphisms", {"e1", "e2", "u", "v"}},
        {"src", {"e1", "e2", "e1", "e2"}},
        {"tgt", {"e1", "e2", "e2", "e1"}},
        {"compose",
         {{"e1", nullptr, nullptr, "v"}, {nullptr, "e2", "u", nullptr}, {"u", nullptr, nullptr, "e2"},
          {nullptr, "v", "e1", nullptr}}},
    };
    return FinAbsCat::from_json(j, "groupoid2");
}

} // namespace

TEST_SUITE("capsules") {

TEST_CASE("regular actions are full capsules") {
    const auto c = table2_category();
    for (Side side : {Side::Left, Side::Right}) {
        const auto r = check_action(regular_action(c, side));
        CHECK(r.ok());
        CHECK(r.exhaustive);
        CHECK(r.passed("full"));
    }
    CHECK(check_bicapsule(regular_bicapsule(c)).ok());
}

TEST_CASE("a broken guard violates rule (1)") {
    const auto g = two_object_groupoid();
    CHECK(check_abscat_laws(g).ok());
    auto act = regular_action(g, Side::Left);
    act.actor_guard = [&g](MorId a) { return g.tgt(a); };
    const auto r = check_action(act);
    CHECK_FALSE(r.passed("(1) a.x defined iff guards agree"));
    CHECK_FALSE(r.find("(1) a.x defined iff guards agree")->witness.empty());
}

TEST_CASE("functor recovered from a capsule") {
    const auto c = table2_category();
    const auto f = functor_from_capsule(regular_action(c, Side::Left));
    for (MorId a : c.morphisms()) CHECK(f.map(a) == MorTerm(a));

    // Inclusion of the iso-core into the all-homs category of {S3, C6}.
    auto s3 = groups::make_ref(groups::symmetric(3));
    auto c6 = groups::make_ref(groups::cyclic(6));
    GroupCategory core("core", {s3, c6}, MorphismClass::Isos);
    GroupCategory all("all", {s3, c6}, MorphismClass::AllHoms);
    Functor inc{"inc", &core, &all, [&](MorId a) { return MorTerm(all.find(core.payload(a))); }};
    CHECK(check_functor(inc).ok());
    const auto act = induced_action(inc, Side::Left);
    CHECK(check_action(act).ok());
    const auto back = functor_from_capsule(act);
    for (MorId a : core.morphisms()) CHECK(back.map(a) == inc.map(a));
}

TEST_CASE("identity transformation round trip") {
    const auto c = table2_category();
    const auto id = identity_functor(c);
    NatTrans mu{"1", id, id, {}};
    for (MorId e : c.identities()) mu.components[e] = e;
    CHECK(check_nattrans(mu).ok());
    const auto bm = bimorphism_from_nattrans(mu);
    CHECK(check_bimorphism(bm.m).ok());
    for (MorId a : c.morphisms()) CHECK(bm.m.map(a) == MorTerm(a));
    const auto back = nattrans_from_bimorphism(bm.m, c);
    CHECK(back.components == mu.components);
    CHECK(cyclic_bicapsule(mu, 1000).size() == c.morphisms().size());
}

TEST_CASE("a bimorphism leaving its slice is rejected") {
    const auto c = table2_category();
    const auto reg = regular_bicapsule(c);
    Bimorphism bad{"bad", &reg, &reg, [&](MorId a) -> MorTerm {
                       if (c.name(a) == "e1") return c.index_of("e2");
                       return a;
                   }};
    CHECK_FALSE(check_bimorphism(bad).ok());
    CHECK_THROWS_AS(nattrans_from_bimorphism(bad, c), InvalidInput);
}

TEST_CASE("counit from the identity bimorphism") {
    const auto c = table2_category();
    const auto reg = regular_bicapsule(c);
    Bimorphism n{"id", &reg, &reg, [](MorId a) { return MorTerm(a); }};
    Report r("counit");
    const auto data = counit_from_bimorphism(reg, reg, n, c, c, r);
    CHECK(r.ok());
    for (const auto& [e, v] : data.nu) CHECK(v == MorTerm(e));

    Bimorphism skew{"skew", &reg, &reg, [&](MorId a) -> MorTerm {
                        if (c.name(a) == "a13") return c.index_of("a'13");
                        return a;
                    }};
    Report bad("skew");
    counit_from_bimorphism(reg, reg, skew, c, c, bad);
    CHECK_FALSE(bad.ok());
}

TEST_CASE("identity adjunction and a broken one") {
    const auto c = table2_category();
    const auto id = identity_functor(c);
    AdjointData d;
    d.a = d.b = &c;
    d.f = d.g = id;
    d.a_objects = d.b_objects = c.identities();
    d.psi = d.psi_inv = [](MorId x) { return MorTerm(x); };
    CHECK(check_adjoint(d).ok());
    d.psi = [&](MorId x) -> MorTerm {
        if (c.name(x) == "a'13") return Bot;
        return x;
    };
    CHECK_FALSE(check_adjoint(d).passed("Psi_UV is a bijection A(FU,V) -> B(U,GV)"));
}

TEST_CASE("natural map of a single functor") {
    const auto c = table2_category();
    // N has one object and no other morphisms: the identity functor of c.
    nlohmann::json j = {{"morphisms", {"I"}}, {"src", {"I"}}, {"tgt", {"I"}}, {"compose", {{"I"}}}};
    const auto n = FinAbsCat::from_json(j, "N");
    NaturalMap nm{&n, &c, &c, [](MorId, MorId x) { return MorTerm(x); }, [](MorId, MorId f) { return MorTerm(f); }};
    CHECK(check_natural_map(nm).ok());
    nm.bullet = [&](MorId, MorId f) -> MorTerm {
        if (c.name(f) == "e3") return c.index_of("a13");
        return f;
    };
    CHECK_FALSE(check_natural_map(nm).passed("(3) (s*tgt x)((src s).x) = ((tgt s).x)(s*src x)"));
}

TEST_CASE("concrete category of groups") {
    GrpCat grp;
    auto s3 = groups::make_ref(groups::symmetric(3));
    auto c2 = groups::make_ref(groups::cyclic(2));
    const auto homs = grp.homs(s3, c2, false);
    CHECK(homs.size() == 2);
    const auto back = grp.homs(c2, s3, false);
    CHECK(back.size() == 4);
    for (MorId f : homs)
        for (MorId g : back) {
            const auto fg = grp.compose(f, g);
            REQUIRE(fg);
            CHECK(grp.payload(*fg).dom->id() == "C2");
        }
    CHECK_FALSE(grp.compose(homs[0], homs[1]));
    CHECK(grp.intern(groups::identity_hom(s3)) == grp.identity(s3));
}

}
