#include "charcat/abscat/examples.hpp"

namespace charcat::abscat {

namespace {
const std::vector<std::string> kNames = {"e1", "e2", "e3", "e4", "e5", "e6",
                                         "a12", "a23", "a13", "a'13", "b45", "b54"};
}

FinAbsCat table2_category() {
    const std::size_t n = kNames.size();
    auto at = [](const std::string& s) -> MorId {
        for (std::size_t i = 0; i < kNames.size(); ++i)
            if (kNames[i] == s) return i;
        return 0;
    };
    std::vector<MorId> src(n), tgt(n);
    for (MorId i = 0; i < 6; ++i) src[i] = tgt[i] = i;
    auto arrow = [&](const std::string& x, int i, int j) {
        tgt[at(x)] = i - 1;
        src[at(x)] = j - 1;
    };
    arrow("a12", 1, 2);
    arrow("a23", 2, 3);
    arrow("a13", 1, 3);
    arrow("a'13", 1, 3);
    arrow("b45", 4, 5);
    arrow("b54", 5, 4);

    std::vector<MorTerm> table(n * n, Bot);
    auto set = [&](MorId f, MorId g, MorId v) { table[f * n + g] = v; };
    for (MorId x = 0; x < n; ++x) {
        set(tgt[x], x, x);
        set(x, src[x], x);
    }
    set(at("a12"), at("a23"), at("a13"));
    set(at("b45"), at("b54"), at("e4"));
    set(at("b54"), at("b45"), at("e5"));
    return FinAbsCat("table2", kNames, std::move(src), std::move(tgt), std::move(table));
}

std::vector<CellMutation> table2_mutations() {
    auto m = [](const std::string& v) { return MorTerm(table2_category().index_of(v)); };
    return {
        {"a12", "a23", Bot},      {"a12", "a23", m("a12")}, {"b45", "b54", m("e5")},  {"e1", "a12", Bot},
        {"a13", "e3", m("a'13")}, {"a23", "a12", m("a13")}, {"b54", "b45", m("b54")}, {"e2", "e2", Bot},
        {"a12", "e1", m("a12")},  {"b45", "b54", m("b45")}, {"a'13", "e3", m("a13")}, {"e4", "b45", m("b54")},
    };
}

FinAbsCat apply(const FinAbsCat& c, const CellMutation& m) {
    return c.with_cell(c.index_of(m.f), c.index_of(m.g), m.value);
}

} // namespace charcat::abscat
