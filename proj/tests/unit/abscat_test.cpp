#include <doctest.h>

#include <algorithm>

#include "charcat/abscat/category.hpp"
#include "charcat/abscat/examples.hpp"
#include "charcat/core/errors.hpp"
#include "charcat/groups/constructors.hpp"

using namespace charcat;
using namespace charcat::abscat;

TEST_SUITE("abscat") {

TEST_CASE("table2 satisfies every law exhaustively") {
    const auto c = table2_category();
    const auto r = check_abscat_laws(c);
    CHECK(r.ok());
    CHECK(r.exhaustive);
    CHECK(r.find("f(gh) = (fg)h")->checked == 13 * 13 * 13);
    CHECK(peirce_partition(c));
}

TEST_CASE("table2 products") {
    const auto c = table2_category();
    auto id = [&](const char* s) { return c.index_of(s); };
    CHECK(c.compose(id("a12"), id("a23")) == MorTerm(id("a13")));
    CHECK(c.compose(id("b45"), id("b54")) == MorTerm(id("e4")));
    CHECK(c.compose(id("b54"), id("b45")) == MorTerm(id("e5")));
    CHECK(c.compose(id("a13"), id("a'13")) == Bot);
    CHECK(c.compose(id("e1"), id("a13")) == MorTerm(id("a13")));
    CHECK(c.compose(id("a23"), id("e3")) == MorTerm(id("a23")));
    CHECK(c.compose(id("a23"), id("e2")) == Bot);
}

TEST_CASE("Peirce slice e1 A e3") {
    const auto c = table2_category();
    const auto p = peirce(c, c.index_of("e1"), c.index_of("e3"));
    std::vector<std::string> names;
    for (auto a : p.hom) names.push_back(c.name(a));
    CHECK(names == std::vector<std::string>{"a13", "a'13"});
    CHECK(p.left.size() == 4);   // e1, a12, a13, a'13
    CHECK(p.right.size() == 4);  // e3, a23, a13, a'13
}

TEST_CASE("each single-cell mutation is detected") {
    const auto base = table2_category();
    for (const auto& m : table2_mutations()) {
        CAPTURE(m.f);
        CAPTURE(m.g);
        const auto r = check_abscat_laws(apply(base, m));
        CHECK_FALSE(r.ok());
        CHECK_FALSE(r.failures().empty());
    }
}

TEST_CASE("json round trip") {
    const auto c = table2_category();
    const auto d = FinAbsCat::from_json(c.to_json());
    CHECK(d.to_json() == c.to_json());
    auto j = c.to_json();
    j["compose"][0][0] = "nope";
    CHECK_THROWS_AS(FinAbsCat::from_json(j), InvalidInput);
}

TEST_CASE("group categories") {
    auto s3 = groups::make_ref(groups::symmetric(3));
    auto c6 = groups::make_ref(groups::cyclic(6));
    GroupCategory homs("S3", {s3}, MorphismClass::AllHoms);
    CHECK(homs.morphisms().size() == 10);
    CHECK(check_abscat_laws(homs).ok());

    GroupCategory isos("iso", {c6, s3}, MorphismClass::Isos);
    CHECK(isos.morphisms().size() == 2 + 6);
    CHECK(isos.hom(isos.identity(0), isos.identity(1)).empty());
    CHECK(check_abscat_laws(isos).ok());
    CHECK(isos.name(isos.identity(1)) == "id_S3");

    GroupCategory epis("epi", {s3, c6, groups::make_ref(groups::cyclic(2))}, MorphismClass::Epis);
    // S3 ->> C2 once; C6 ->> C2 once; C6 ->> C6 twice; S3 ->> S3 six times; C2 ->> C2 once.
    CHECK(epis.morphisms().size() == 11);
    CHECK(check_abscat_laws(epis).ok());

    const auto f = identity_functor(isos);
    CHECK(check_functor(f).ok());
}

TEST_CASE("functor violations are reported") {
    const auto c = table2_category();
    Functor bad{"swap", &c, &c, [&](MorId f) {
                    if (c.name(f) == "a13") return MorTerm(c.index_of("a'13"));
                    return MorTerm(f);
                }};
    const auto r = check_functor(bad);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.passed("F(cc') = F(c)F(c')"));
}

}
