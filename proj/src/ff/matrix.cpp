#include "charcat/ff/matrix.hpp"

#include <sstream>

#include "charcat/core/errors.hpp"

namespace charcat::ff {

Mat::Mat(std::uint64_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    require_prime_modulus(p);
}

Mat::Mat(std::uint64_t p, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
    : p_(p), rows_(rows), cols_(cols), a_(std::move(entries)) {
    require_prime_modulus(p);
    if (a_.size() != rows * cols) throw InvalidInput("matrix entry count does not match shape");
    for (auto& x : a_) x %= p;
}

Mat Mat::from_ints(std::uint64_t p, std::size_t rows, std::size_t cols,
                   const std::vector<std::int64_t>& entries) {
    if (entries.size() != rows * cols) throw InvalidInput("matrix entry count does not match shape");
    std::vector<Residue> r(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) r[i] = reduce(entries[i], p);
    return Mat(p, rows, cols, std::move(r));
}

Mat Mat::identity(std::uint64_t p, std::size_t n) {
    Mat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::diagonal(std::uint64_t p, const std::vector<Residue>& diag) {
    Mat m(p, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i] % p;
    return m;
}

Mat Mat::unit(std::uint64_t p, std::size_t n, std::size_t i, std::size_t j) {
    Mat m(p, n, n);
    m(i, j) = 1;
    return m;
}

Mat Mat::from_rows(std::uint64_t p, std::size_t cols, const std::vector<Vec>& rows) {
    Mat m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
    }
    return m;
}

Vec Mat::row(std::size_t r) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Mat::same_shape(const Mat& o) const {
    if (o.p_ != p_) throw InvalidInput("modulus mismatch");
    if (o.rows_ != rows_ || o.cols_ != cols_) throw InvalidInput("shape mismatch");
}

Mat Mat::operator+(const Mat& o) const {
    same_shape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = add_mod(a_[i], o.a_[i], p_);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    same_shape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = sub_mod(a_[i], o.a_[i], p_);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (o.p_ != p_) throw InvalidInput("modulus mismatch");
    if (cols_ != o.rows_) throw InvalidInput("inner dimensions differ");
    Mat r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Residue x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = (r(i, j) + x * o(k, j)) % p_;
        }
    return r;
}

Vec Mat::operator*(std::span<const Residue> v) const {
    if (v.size() != cols_) throw InvalidInput("vector length mismatch");
    Vec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Residue acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) acc = (acc + (*this)(i, k) * (v[k] % p_)) % p_;
        r[i] = acc;
    }
    return r;
}

Mat Mat::scaled(Residue s) const {
    Mat r = *this;
    for (auto& x : r.a_) x = mul_mod(x, s % p_, p_);
    return r;
}

Mat Mat::transpose() const {
    Mat r(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::pow(std::uint64_t e) const {
    if (!square()) throw InvalidInput("power of a non-square matrix");
    Mat r = identity(p_, rows_);
    Mat b = *this;
    while (e > 0) {
        if (e & 1U) r = r * b;
        b = b * b;
        e >>= 1U;
    }
    return r;
}

Residue Mat::trace() const {
    if (!square()) throw InvalidInput("trace of a non-square matrix");
    Residue t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t = add_mod(t, (*this)(i, i), p_);
    return t;
}

bool Mat::is_zero() const {
    for (auto x : a_)
        if (x != 0) return false;
    return true;
}

bool Mat::is_identity() const { return square() && *this == identity(p_, rows_); }

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
    Mat m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(r, j));
        const Residue inv = inv_mod(m(r, c), p_);
        for (std::size_t j = 0; j < cols_; ++j) m(r, j) = mul_mod(m(r, j), inv, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Residue f = m(i, c);
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = sub_mod(m(i, j), mul_mod(f, m(r, j), p_), p_);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots != nullptr) *pivots = std::move(piv);
    return m;
}

std::size_t Mat::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

Subspace Mat::kernel() const {
    std::vector<std::size_t> piv;
    const Mat r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec> vecs;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = neg_mod(r(i, f), p_);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(p_, cols_, vecs);
}

Subspace Mat::row_space() const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row(i));
    return Subspace::span(p_, cols_, rows);
}

std::optional<Mat> Mat::inverse() const {
    if (!square()) return std::nullopt;
    const std::size_t n = rows_;
    Mat aug(p_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    const Mat r = aug.rref(&piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(p_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

Mat Mat::unflatten(std::uint64_t p, std::size_t rows, std::size_t cols, std::span<const Residue> v) {
    return Mat(p, rows, cols, std::vector<Residue>(v.begin(), v.end()));
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ";" : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::uint64_t p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) {
    require_prime_modulus(p);
}

Subspace Subspace::full(std::uint64_t p, std::size_t n) {
    std::vector<Vec> e;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n, 0);
        v[i] = 1;
        e.push_back(std::move(v));
    }
    return span(p, n, e);
}

Subspace Subspace::span(std::uint64_t p, std::size_t n, const std::vector<Vec>& vectors) {
    Subspace s(p, n);
    if (vectors.empty()) return s;
    const Mat m = Mat::from_rows(p, n, vectors);
    std::vector<std::size_t> piv;
    const Mat r = m.rref(&piv);
    for (std::size_t i = 0; i < piv.size(); ++i) s.basis_.push_back(r.row(i));
    s.pivots_ = std::move(piv);
    return s;
}

Mat Subspace::basis_matrix() const { return basis_.empty() ? Mat(p_, 0, n_) : Mat::from_rows(p_, n_, basis_); }

std::optional<Vec> Subspace::coordinates(std::span<const Residue> v) const {
    if (v.size() != n_) throw InvalidInput("vector length does not match ambient dimension");
    Vec rest(v.begin(), v.end());
    for (auto& x : rest) x %= p_;
    Vec coords(basis_.size(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Residue c = rest[pivots_[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) rest[j] = sub_mod(rest[j], mul_mod(c, basis_[i][j], p_), p_);
    }
    for (auto x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Subspace::contains(std::span<const Residue> v) const { return coordinates(v).has_value(); }

bool Subspace::is_subspace_of(const Subspace& o) const {
    if (o.n_ != n_ || o.p_ != p_) return false;
    for (const auto& b : basis_)
        if (!o.contains(b)) return false;
    return true;
}

Subspace Subspace::join(const Subspace& o) const {
    if (o.n_ != n_ || o.p_ != p_) throw InvalidInput("ambient space mismatch");
    auto all = basis_;
    all.insert(all.end(), o.basis_.begin(), o.basis_.end());
    return span(p_, n_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.n_ != n_ || o.p_ != p_) throw InvalidInput("ambient space mismatch");
    // Solve sum_i x_i a_i - sum_j y_j b_j = 0; the x-part of each solution spans the intersection.
    const std::size_t da = dim(), db = o.dim();
    if (da == 0 || db == 0) return Subspace(p_, n_);
    Mat m(p_, n_, da + db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t r = 0; r < n_; ++r) m(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t r = 0; r < n_; ++r) m(r, da + j) = neg_mod(o.basis_[j][r], p_);
    const Subspace k = m.kernel();
    std::vector<Vec> vecs;
    for (const auto& sol : k.basis()) {
        Vec v(n_, 0);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t r = 0; r < n_; ++r) v[r] = add_mod(v[r], mul_mod(sol[i], basis_[i][r], p_), p_);
        vecs.push_back(std::move(v));
    }
    return span(p_, n_, vecs);
}

Subspace Subspace::image_under(const Mat& m) const {
    if (m.cols() != n_) throw InvalidInput("map domain does not match ambient dimension");
    std::vector<Vec> vecs;
    for (const auto& b : basis_) vecs.push_back(m * b);
    return span(p_, m.rows(), vecs);
}

Subspace eigenspace(const Mat& theta, const Fp& a) {
    if (!theta.square()) throw InvalidInput("eigenspace of a non-square matrix");
    if (theta.modulus() != a.modulus()) throw InvalidInput("modulus mismatch between matrix and scalar");
    const Mat shifted = theta - Mat::identity(theta.modulus(), theta.rows()).scaled(a.value());
    return shifted.kernel();
}

// ---------------------------------------------------------------------------

Vec EchelonBuilder::reduce(Vec v) const {
    for (auto& x : v) x %= p_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Residue c = v[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) v[j] = sub_mod(v[j], mul_mod(c, rows_[i][j], p_), p_);
    }
    return v;
}

bool EchelonBuilder::insert(Vec v) {
    if (v.size() != n_) throw InvalidInput("vector length mismatch");
    Vec original = v;
    Vec r = reduce(std::move(v));
    std::size_t piv = n_;
    for (std::size_t j = 0; j < n_; ++j)
        if (r[j] != 0) {
            piv = j;
            break;
        }
    if (piv == n_) return false;
    const Residue inv = inv_mod(r[piv], p_);
    for (auto& x : r) x = mul_mod(x, inv, p_);
    // Keep rows fully reduced so later reductions stay single-pass.
    for (auto& row : rows_) {
        const Residue c = row[piv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) row[j] = sub_mod(row[j], mul_mod(c, r[j], p_), p_);
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    inserted_.push_back(std::move(original));
    return true;
}

bool EchelonBuilder::contains(Vec v) const {
    const Vec r = reduce(std::move(v));
    for (auto x : r)
        if (x != 0) return false;
    return true;
}

Subspace EchelonBuilder::subspace() const { return Subspace::span(p_, n_, rows_); }

} // namespace charcat::ff
