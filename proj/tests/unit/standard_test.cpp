#include "doctest.h"

#include <algorithm>

#include "../oracles/group_oracles.hpp"
#include "charcat/abscat/concrete.hpp"
#include "charcat/abscat/category.hpp"
#include "charcat/core/errors.hpp"
#include "charcat/groups/constructors.hpp"
#include "charcat/groups/homs.hpp"
#include "charcat/standard/standard.hpp"

using namespace charcat;
using namespace charcat::groups;
using namespace charcat::standard;
using abscat::MorId;
using abscat::MorTerm;

namespace {

std::vector<GroupRef> catalog_upto(std::size_t n) { return small_groups(n); }

/// x^-1 y^-1 x y straight from the table.
Elem table_commutator(const FiniteGroup& g, Elem x, Elem y) {
    Elem xi = 0, yi = 0;
    for (Elem a = 0; a < g.order(); ++a) {
        if (g.mul(x, a) == g.identity()) xi = a;
        if (g.mul(y, a) == g.identity()) yi = a;
    }
    return g.mul(g.mul(g.mul(xi, yi), x), y);
}

} // namespace

TEST_SUITE("standard") {

TEST_CASE("word parsing and evaluation") {
    auto s3 = make_ref(symmetric(3));
    const Elem x = s3->index_of("(12)"), y = s3->index_of("(13)");
    const Word c = parse_word("[x,y]");
    CHECK(c.variables() == std::vector<std::string>{"x", "y"});
    const Elem v = eval_word(c, *s3, {{"x", x}, {"y", y}});
    CHECK(v == table_commutator(*s3, x, y));
    CHECK(s3->elem_order(v) == 3);
    CHECK(s3->label(v) == "(132)");
    CHECK(eval_word(parse_word("1"), *s3, {}) == s3->identity());
    for (Elem a = 0; a < 6; ++a) CHECK(eval_word(parse_word("x x^-1"), *s3, {{"x", a}}) == s3->identity());
    CHECK(eval_word(parse_word("(x y)^2"), *s3, {{"x", x}, {"y", y}}) == s3->mul(s3->mul(x, y), s3->mul(x, y)));
    CHECK(parse_word("[x,y,z]").variables().size() == 3);
    CHECK_THROWS_AS(eval_word(c, *s3, {{"x", x}}), InvalidInput);
    CHECK_THROWS_AS(parse_word("[x]"), InvalidInput);
    CHECK_THROWS_AS(parse_word("x^"), InvalidInput);
    CHECK_THROWS_AS(parse_word(""), InvalidInput);
    CHECK_THROWS_AS(parse_word("(x"), InvalidInput);
    const CompiledWord cw(c);
    CHECK(cw({*s3}, {x, y}) == v);
}

TEST_CASE("verbal subgroups and varieties") {
    auto s3 = make_ref(symmetric(3));
    const Word comm = parse_word("[x,y]");
    CHECK(verbal_subgroup(s3, {comm}).members() == derived_subgroup(s3).members());
    CHECK(verbal_subgroup(s3, {comm}).size() == 3);
    CHECK(verbal_subgroup(s3, {parse_word("x")}).size() == 6);
    CHECK(verbal_subgroup(s3, {parse_word("x^6")}).size() == 1);
    CHECK(in_variety(make_ref(cyclic(6)), {comm}));
    CHECK_FALSE(in_variety(s3, {comm}));
    CHECK(in_variety(s3, {}));
    Config small;
    small.tuple_budget = 4;
    CHECK_THROWS_AS(verbal_subgroup(s3, {comm}, small), BudgetExceeded);
    small = Config{};
    small.max_word_arity = 1;
    CHECK_THROWS_AS(verbal_subgroup(s3, {comm}, small), BudgetExceeded);
}

TEST_CASE("verbal subgroups are fully invariant") {
    const std::vector<Word> words{parse_word("[x,y]"), parse_word("x^2"), parse_word("[x,y]^2 z^4")};
    std::size_t checked = 0;
    for (const auto& g : catalog_upto(12)) {
        if (g->order() < 4) continue;
        for (const auto& w : words) {
            const auto v = verbal_subgroup(g, {w});
            CHECK(v.is_normal());
            CHECK_MESSAGE(counitals::is_fully_invariant(v).holds, g->id() << " " << w.to_string());
        }
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("marginal subgroups") {
    const Word comm = parse_word("[x,y]");
    for (const auto& g : catalog_upto(16)) {
        const auto m = marginal_subgroup(g, comm);
        CHECK_MESSAGE(m.members() == oracle::brute_center(*g), g->id());
        CHECK(word_factors_through(m, comm));
    }
    auto d4 = make_ref(dihedral(4));
    CHECK(marginal_subgroup(d4, parse_word("x")).size() == 1);
    auto c6 = make_ref(cyclic(6));
    CHECK(marginal_subgroup(c6, comm).size() == 6);
    CHECK_FALSE(word_factors_through(whole_group(d4), comm));

    // Preserved by every surjective endomorphism.
    const Word sq = parse_word("x^2");
    for (const auto& g : {d4, make_ref(quaternion8()), make_ref(symmetric(3)), make_ref(dihedral(6))}) {
        const auto m = marginal_subgroup(g, sq);
        CHECK(m.is_normal());
        for (const auto& e : hom_enumerate(g, g, false))
            if (e.is_surjective())
                for (Elem z : m.members()) CHECK(m.contains(e(z)));
    }
}

TEST_CASE("standard counitals and units") {
    auto s3 = make_ref(symmetric(3));
    const auto d = derived_counit(all_homs({s3}));
    CHECK(d.components[0].dom->order() == 3);
    CHECK(image(d.components[0]) == derived_subgroup(s3));
    const auto z = center_counital(iso_core({make_ref(cyclic(8))}));
    CHECK(z.components[0].is_isomorphism());
    const auto ab = abelianization_unit(all_homs({s3}));
    CHECK(ab.components[0].cod->order() == 2);
    CHECK(ab.components[0].is_surjective());

    const auto cat = all_homs(catalog_upto(12));
    const auto dc = derived_counit(cat);
    CHECK(counitals::check_counital(dc).ok());
    const auto au = abelianization_unit(cat);
    CHECK(counitals::check_unital(au).ok());
    const auto k = counitals::kernel_of_unital(au);
    for (std::size_t i = 0; i < cat->object_count(); ++i) CHECK(k.image_at(i) == dc.image_at(i));

    const auto vc = verbal_counit(cat, {parse_word("[x,y]")});
    for (std::size_t i = 0; i < cat->object_count(); ++i) CHECK(vc.image_at(i) == dc.image_at(i));
    const auto vu = verbal_unit(all_homs({s3, make_ref(dihedral(4))}), {parse_word("x^2")});
    CHECK(counitals::check_unital(vu).ok());
    CHECK(counitals::check_counital(counitals::kernel_of_unital(vu)).ok());

    const auto abcat = all_homs({make_ref(cyclic(4)), make_ref(groups::abelian({2, 2}))});
    const auto trivial = verbal_counit(abcat, {parse_word("[x,y]")});
    for (const auto& c : trivial.components) CHECK(c.dom->order() == 1);

    const auto mc = marginal_counital(iso_core(catalog_upto(8)), parse_word("[x,y]"));
    CHECK(counitals::check_counital(mc).ok());
}

TEST_CASE("Rottlaender specifications") {
    RottlaenderSpec bad{3, 7, {2, 4}};
    try {
        bad.validate();
        FAIL("expected rejection");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("u=2, k=2") != std::string::npos);
    }
    CHECK_THROWS_AS((RottlaenderSpec{5, 11, {1, 3}}.validate()), InvalidInput);
    CHECK_THROWS_AS((RottlaenderSpec{5, 11, {3, 3}}.validate()), InvalidInput);
    CHECK_THROWS_AS((RottlaenderSpec{5, 11, {3, 4}}.validate()), InvalidInput);    // 4 = 3^-1
    CHECK_THROWS_AS((RottlaenderSpec{5, 13, {3, 9}}.validate()), InvalidInput);    // 13 != 1 mod 5
    CHECK_THROWS_AS((RottlaenderSpec{3, 7, {2, 4, 2}}.validate()), InvalidInput);  // m >= p
    CHECK_NOTHROW((RottlaenderSpec{5, 11, {3, 9}}.validate()));
}

TEST_CASE("Rottlaender eigenspaces are characteristic") {
    const RottlaenderSpec spec{5, 11, {3, 9}};
    const auto g = rottlaender_group(spec);
    CHECK(g->order() == 605);
    const auto cs = rottlaender_counitals(spec);
    REQUIRE(cs.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(cs[k].image_at(0) == rottlaender_eigenspace(g, spec, k));
        CHECK(counitals::is_characteristic(cs[k].image_at(0)).holds);
    }
}

TEST_CASE("isoclinism") {
    auto d4 = make_ref(dihedral(4)), q8 = make_ref(quaternion8()), s3 = make_ref(symmetric(3));
    CHECK(isoclinism_data(s3).square_commutes);
    const auto ab = isoclinism_data(make_ref(cyclic(6)));
    CHECK(ab.quotient.group->order() == 1);
    CHECK(ab.table.size() == 1);
    CHECK(find_isoclinism(d4, q8).has_value());
    CHECK_FALSE(find_isoclinism(d4, s3).has_value());
    CHECK(find_isoclinism(make_ref(cyclic(4)), make_ref(cyclic(6))).has_value());
}

TEST_CASE("abelianization is left adjoint to the inclusion") {
    std::vector<GroupRef> abel;
    for (const auto& g : catalog_upto(4))
        if (g->is_abelian()) abel.push_back(g);
    const AbelianizationAdjunction adj(catalog_upto(6), abel);
    Config cfg;
    cfg.sample_count = cfg.pair_budget;
    const auto r = capsules::check_adjoint(adj.data(), cfg);
    CHECK(r.ok());
    CHECK(r.exhaustive);
    CHECK_THROWS_AS(AbelianizationAdjunction({}, {make_ref(symmetric(3))}), InvalidInput);
}

TEST_CASE("derived and center counitals through bimorphisms") {
    abscat::GrpCat grp;
    const auto cat = all_homs(catalog_upto(8));
    for (const auto& eta : {derived_counit(cat), center_counital(iso_core(catalog_upto(8)))}) {
        const auto mu = counitals::as_nattrans(eta, grp);
        const auto bm = capsules::bimorphism_from_nattrans(mu);
        CHECK(capsules::check_bimorphism(bm.m).ok());
        const auto back = capsules::nattrans_from_bimorphism(bm.m, *eta.domain);
        CHECK(back.components == mu.components);
    }
}

TEST_CASE("the derived restriction functor is recovered from its capsule") {
    abscat::GrpCat grp;
    const auto cat = all_homs(catalog_upto(6));
    const auto d = derived_counit(cat);
    const auto mu = counitals::as_nattrans(d, grp);
    std::vector<MorId> carrier;
    for (MorId a : cat->morphisms()) carrier.push_back(*mu.g.map(a));
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    const auto act = capsules::induced_action(mu.g, capsules::Side::Left, carrier);
    const auto rep = capsules::check_action(act);
    CHECK_MESSAGE(rep.ok(), rep.summary());
    const auto f = capsules::functor_from_capsule(act);
    for (MorId a : cat->morphisms()) CHECK(f.map(a) == mu.g.map(a));
}

TEST_CASE("the natural map of {I, D, lambda}") {
    abscat::GrpCat grp;
    const auto cat = all_homs(catalog_upto(8));
    const auto d = derived_counit(cat);
    const auto mu = counitals::as_nattrans(d, grp);
    const nlohmann::json nj = {{"morphisms", {"I", "D", "lambda"}},
                               {"src", {"I", "D", "D"}},
                               {"tgt", {"I", "D", "I"}},
                               {"compose", {{"I", nullptr, "lambda"}, {nullptr, "D", nullptr}, {nullptr, "lambda", nullptr}}}};
    const auto n = abscat::FinAbsCat::from_json(nj, "N");
    REQUIRE(abscat::check_abscat_laws(n).ok());
    const MorId I = 0, D = 1, lambda = 2;
    (void)D;
    capsules::NaturalMap nm;
    nm.n = &n;
    nm.a = cat.get();
    nm.b = &grp;
    nm.dot = [&](MorId e, MorId x) -> MorTerm { return e == I ? mu.f.map(x) : mu.g.map(x); };
    nm.bullet = [&](MorId s, MorId f) -> MorTerm {
        if (s == lambda) return mu.at(f);
        return s == I ? mu.f.map(f) : mu.g.map(f);
    };
    CHECK(capsules::check_natural_map(nm).ok());

    // A perturbed component breaks the interchange law.
    const MorId victim = cat->identities()[3];
    nm.bullet = [&](MorId s, MorId f) -> MorTerm {
        if (s == lambda) return f == victim ? mu.f.map(f) : mu.at(f);
        return s == I ? mu.f.map(f) : mu.g.map(f);
    };
    CHECK_FALSE(capsules::check_natural_map(nm).ok());
}

}  // TEST_SUITE
