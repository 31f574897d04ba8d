#pragma once

#include <cstdint>
#include <vector>

#include "charcat/ff/matrix.hpp"

namespace charcat::ff {

/// A product-closed subspace of M_deg(F_p). The basis is the RREF basis of the
/// row-major flattenings, so equal algebras have identical bases.
struct MatrixAlgebra {
    std::uint64_t p = 2;
    std::size_t deg = 0;
    std::vector<Mat> basis;
    bool has_unit = false;

    std::size_t dim() const { return basis.size(); }
    /// The algebra as a subspace of F_p^{deg*deg}.
    Subspace as_subspace() const;
    bool contains(const Mat& m) const;
};

/// Smallest product-closed subspace containing gens (and I when with_unit).
/// Empty gens without a unit give the zero algebra.
MatrixAlgebra algebra_closure(std::uint64_t p, std::size_t deg, const std::vector<Mat>& gens, bool with_unit);

/// J(A) as a subspace of F_p^{deg*deg}, computed as the trace-form radical of A + F_p I
/// intersected with A. Requires p > deg.
Subspace jacobson_radical(const MatrixAlgebra& a);

/// Product-closed check: every pairwise basis product lies in the span.
bool is_product_closed(const MatrixAlgebra& a);

std::vector<Mat> subspace_matrices(const Subspace& s, std::size_t deg);

} // namespace charcat::ff
