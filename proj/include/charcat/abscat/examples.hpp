#pragma once

#include <string>
#include <vector>

#include "charcat/abscat/category.hpp"

namespace charcat::abscat {

/// Six identities e1..e6 with a12, a23, a13, a'13 (x_ij : e_j -> e_i), b45 and b54 mutually
/// inverse, a12 a23 = a13, and every other non-identity product bottom.
FinAbsCat table2_category();

struct CellMutation {
    std::string f, g;
    MorTerm value;  // replaces the product fg
};
/// Twelve single-cell edits of table2_category(), each of which breaks at least one law.
std::vector<CellMutation> table2_mutations();
FinAbsCat apply(const FinAbsCat& c, const CellMutation& m);

} // namespace charcat::abscat
