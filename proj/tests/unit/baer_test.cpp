#include "doctest.h"

#include "../oracles/group_oracles.hpp"
#include "../oracles/radical_oracle.hpp"
#include "charcat/baer/baer.hpp"
#include "charcat/core/errors.hpp"
#include "charcat/groups/constructors.hpp"
#include "charcat/groups/homs.hpp"

using namespace charcat;
using namespace charcat::groups;
using namespace charcat::baer;
using ff::Mat;

namespace {

GroupRef heis5() { return make_ref(heisenberg(5)); }
GroupRef heis5_c5() { return make_ref(direct_product(heisenberg(5), cyclic(5), "Heis5xC5")); }

ff::BilinearMap symplectic(std::uint64_t p) {
    return ff::BilinearMap(p, 2, 1, {Mat::from_ints(p, 2, 2, {0, 1, -1, 0})});
}

} // namespace

TEST_SUITE("baer") {

TEST_CASE("class two exponent p recognition") {
    CHECK(is_class2_exponent_p(*heis5(), 5));
    CHECK(is_class2_exponent_p(elementary_abelian(3, 2), 3));
    CHECK_FALSE(is_class2_exponent_p(cyclic(25), 5));
    CHECK_FALSE(is_class2_exponent_p(cyclic(15), 5));
    CHECK_THROWS_AS(is_class2_exponent_p(dihedral(4), 2), InvalidInput);
    CHECK_THROWS_AS(bimap_from_group(make_ref(cyclic(25)), 5), InvalidInput);
}

TEST_CASE("commutator bimap of small groups") {
    const auto c = bimap_from_group(heis5(), 5);
    CHECK(c.b.v_dim == 2);
    CHECK(c.b.w_dim == 1);
    CHECK(c.b.is_alternating());
    CHECK(ff::bimap_radical(c.b).is_zero());
    CHECK(c.derived.members() == oracle::brute_derived(*heis5()));

    const auto a = bimap_from_group(make_ref(elementary_abelian(3, 3)), 3);
    CHECK(a.b.v_dim == 3);
    CHECK(a.b.w_dim == 0);

    // Coordinates are consistent with the group law: v(xy) = v(x) + v(y).
    const auto& g = *c.group;
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y)
            for (std::size_t i = 0; i < 2; ++i)
                REQUIRE(c.v_coord[g.mul(x, y)][i] == (c.v_coord[x][i] + c.v_coord[y][i]) % 5);
}

TEST_CASE("group from bimap round trips") {
    for (const auto& g : {heis5(), heis5_c5(), make_ref(elementary_abelian(5, 2))}) {
        const auto c = bimap_from_group(g, 5);
        const auto back = make_ref(group_from_bimap(c.b, "back"));
        CHECK(back->order() == g->order());
        CHECK(find_isomorphism(g, back).has_value());
    }
    const auto sym = make_ref(group_from_bimap(symplectic(7), "H7"));
    CHECK(sym->order() == 343);
    CHECK(center(sym).size() == 7);
    CHECK(sym->exponent() == 7);
    CHECK_THROWS_AS(group_from_bimap(ff::BilinearMap(5, 2, 1, {Mat::identity(5, 2)}), "x"), InvalidInput);
}

TEST_CASE("adjoint algebras") {
    const auto full = adjoint_algebra(symplectic(5));
    CHECK(full.algebra.dim() == 4);
    const auto zero = adjoint_algebra(ff::BilinearMap::zero(5, 3, 1));
    CHECK(zero.algebra.dim() == 9);

    const auto sum = symplectic(5).direct_sum(ff::BilinearMap::zero(5, 1, 0));
    const auto a = adjoint_algebra(sum);
    CHECK(a.algebra.dim() == 7);
    const auto j = ff::jacobson_radical(a.algebra);
    CHECK(j == oracle::brute_force_radical(a.algebra));
    CHECK(j == oracle::span_of(5, 3, {Mat::unit(5, 3, 2, 0), Mat::unit(5, 3, 2, 1)}));
    for (const auto& [f, fs] : a.pairs)
        for (std::size_t u = 0; u < 3; ++u)
            for (std::size_t v = 0; v < 3; ++v) {
                ff::Vec eu(3, 0), ev(3, 0);
                eu[u] = ev[v] = 1;
                CHECK(sum.eval(f * std::span<const ff::Residue>(eu), ev) ==
                      sum.eval(eu, fs * std::span<const ff::Residue>(ev)));
            }
}

TEST_CASE("pipeline on Heisenberg over F5") {
    const auto g = heis5();
    const auto r = pipeline(g, 5);
    CHECK(r.radical.is_zero());
    CHECK(r.h == derived_subgroup(g));
    CHECK(r.certificate.holds);
    CHECK(r.brute_force);
    CHECK_MESSAGE(r.checks.ok(), r.checks.summary());
    CHECK(r.checks.passed("G(b_G) is isomorphic to G"));
}

TEST_CASE("pipeline on Heisenberg times C5") {
    const auto g = heis5_c5();
    const auto r = pipeline(g, 5);
    CHECK(r.adjoint.algebra.dim() == 7);
    CHECK(r.radical.dim() == 2);
    CHECK(r.jv.dim() == 1);
    CHECK(r.h.size() == 25);
    CHECK(r.h.members() == oracle::brute_center(*g));
    CHECK(r.certificate.holds);
    REQUIRE(r.certificate.certificate);
    CHECK(counitals::verify_certificate(*r.certificate.certificate, *g).ok());
    CHECK(r.brute_force);
    CHECK_MESSAGE(r.checks.ok(), r.checks.summary());
    const auto j = r.to_json();
    CHECK(j["subgroup"].size() == 25);
    CHECK(j.dump() == pipeline(g, 5).to_json().dump());
}

TEST_CASE("induced action is functorial and the transposed action is rejected") {
    for (const auto& g : {heis5(), heis5_c5()}) {
        const auto c = bimap_from_group(g, 5);
        const auto auts = automorphism_generators(g);
        CHECK(baer_morphism_checks(c, auts.gens).ok());
        const auto bad = baer_morphism_checks(c, auts.gens, Perturbation::TransposeAlpha);
        CHECK_FALSE(bad.ok());
    }
}

}
