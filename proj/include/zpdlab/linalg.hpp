#pragma once

#include "zpdlab/scalar.hpp"

#include <string>
#include <vector>

namespace zpdlab {

using Vec = std::vector<Scalar>;

Vec zero_vec(int dim);
Vec unit_vec(int dim, int k);
bool vzero(const Vec& v);
Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vneg(Vec v);
Vec vscale(const Scalar& c, Vec v);
bool vec_eq(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);  // "[a, b, ...]" with canonical scalar forms

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    Vec apply(const Vec& x) const;  // matrix * column vector
    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

class Subspace;

// Incremental reduced row echelon accumulator. Rows are kept fully reduced
// (unit pivots, zeros above and below, pivots strictly increasing), so the
// stored rows are the canonical basis of the row space at every point.
class RrefBuilder {
public:
    explicit RrefBuilder(int cols);

    // Reduces the row against the current basis; returns true iff the rank grew.
    bool add_row(Vec row);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Subspace row_space() const;
    Subspace kernel() const;  // nullspace of the accumulated rows as a matrix

private:
    int cols_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

// A subspace of F^ambient stored by its canonical RREF basis, so equality of
// subspaces is plain equality of the stored rows.
class Subspace {
public:
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace from_rows(int ambient, const std::vector<Vec>& rows);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return dim() == ambient_; }
    bool contains_vector(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    friend class RrefBuilder;
    int ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& outer, const Subspace& inner);

int rank(const Matrix& m);
Subspace kernel(const Matrix& m);            // {x : m x = 0}
Subspace solve_homogeneous(const Matrix& constraints);  // alias of kernel

}  // namespace zpdlab
