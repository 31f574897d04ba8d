#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charcat/ff/fp.hpp"

namespace charcat::ff {

class Subspace;

/// Dense row-major matrix over F_p.
class Mat {
public:
    Mat() = default;
    Mat(std::uint64_t p, std::size_t rows, std::size_t cols);
    Mat(std::uint64_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries);
    /// Entries given as signed integers, reduced mod p.
    static Mat from_ints(std::uint64_t p, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& entries);
    static Mat identity(std::uint64_t p, std::size_t n);
    static Mat diagonal(std::uint64_t p, const std::vector<Residue>& diag);
    /// Elementary matrix unit E_{ij} (0-based indices).
    static Mat unit(std::uint64_t p, std::size_t n, std::size_t i, std::size_t j);
    static Mat from_rows(std::uint64_t p, std::size_t cols, const std::vector<Vec>& rows);

    std::uint64_t modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<Residue>& entries() const { return a_; }

    Residue operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Residue& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Vec operator*(std::span<const Residue> v) const;
    Mat scaled(Residue s) const;
    Mat transpose() const;
    Mat pow(std::uint64_t e) const;
    Residue trace() const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Mat& o) const = default;
    auto operator<=>(const Mat& o) const = default;

    /// Reduced row-echelon form; pivot columns are returned through `pivots` when given.
    Mat rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    /// Null space {v : M v = 0} as a canonical subspace of F_p^cols.
    Subspace kernel() const;
    /// Row space as a canonical subspace of F_p^cols.
    Subspace row_space() const;
    std::optional<Mat> inverse() const;
    bool invertible() const { return square() && rank() == rows_; }

    /// Row-major flattening into a vector of length rows*cols.
    Vec flatten() const { return a_; }
    static Mat unflatten(std::uint64_t p, std::size_t rows, std::size_t cols, std::span<const Residue> v);

    std::string to_string() const;

private:
    void same_shape(const Mat& o) const;
    std::uint64_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> a_;
};

/// Subspace of F_p^n, stored as the unique reduced row-echelon basis.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::uint64_t p, std::size_t ambient_dim);  // zero subspace
    static Subspace full(std::uint64_t p, std::size_t n);
    static Subspace span(std::uint64_t p, std::size_t n, const std::vector<Vec>& vectors);

    std::uint64_t modulus() const { return p_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }
    Mat basis_matrix() const;

    bool contains(std::span<const Residue> v) const;
    /// Coordinates of v with respect to the RREF basis, if v lies in the subspace.
    std::optional<Vec> coordinates(std::span<const Residue> v) const;
    bool is_subspace_of(const Subspace& o) const;
    Subspace join(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Image under a linear map given as a matrix acting on column vectors.
    Subspace image_under(const Mat& m) const;

    bool operator==(const Subspace& o) const = default;

private:
    std::uint64_t p_ = 2;
    std::size_t n_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// ker(theta - a I).
Subspace eigenspace(const Mat& theta, const Fp& a);

/// Incremental echelon basis used when spans are grown one vector at a time.
class EchelonBuilder {
public:
    EchelonBuilder(std::uint64_t p, std::size_t n) : p_(p), n_(n) {}
    /// Reduces v against the current rows; returns true and stores it when independent.
    bool insert(Vec v);
    bool contains(Vec v) const;
    std::size_t rank() const { return rows_.size(); }
    Subspace subspace() const;
    /// Vectors exactly as inserted (only the independent ones), in insertion order.
    const std::vector<Vec>& inserted() const { return inserted_; }

private:
    Vec reduce(Vec v) const;
    std::uint64_t p_;
    std::size_t n_;
    std::vector<Vec> rows_;             // echelon rows with pivot 1
    std::vector<std::size_t> pivots_;
    std::vector<Vec> inserted_;
};

} // namespace charcat::ff
