#include "zpdlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zpdlab {

Vec zero_vec(int dim) { return Vec(static_cast<std::size_t>(dim)); }

Vec unit_vec(int dim, int k) {
    Vec v = zero_vec(dim);
    v[static_cast<std::size_t>(k)] = Scalar(1);
    return v;
}

bool vzero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

Vec vadd(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vadd: dimension mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vsub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vsub: dimension mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vneg(Vec v) {
    for (Scalar& c : v) c = -c;
    return v;
}

Vec vscale(const Scalar& c, Vec v) {
    for (Scalar& x : v) x *= c;
    return v;
}

bool vec_eq(const Vec& a, const Vec& b) { return a == b; }

std::string vec_str(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

namespace {

// y -= c * x, skipping zero entries of x.
void row_axpy_sub(Vec& y, const Scalar& c, const Vec& x) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] -= c * x[i];
}

}  // namespace

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols)
            throw std::invalid_argument("matrix: row length mismatch");
        for (int j = 0; j < cols; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

Vec Matrix::row(int i) const {
    Vec v(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) v[static_cast<std::size_t>(j)] = (*this)(i, j);
    return v;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix apply: dimension mismatch");
    Vec y = zero_vec(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& m = (*this)(i, j);
            if (!m.is_zero() && !x[static_cast<std::size_t>(j)].is_zero())
                y[static_cast<std::size_t>(i)] += m * x[static_cast<std::size_t>(j)];
        }
    return y;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& m = (*this)(i, k);
            if (m.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) out(i, j) += m * o(k, j);
        }
    return out;
}

Matrix Matrix::add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: dimension mismatch");
    Matrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) += o(i, j);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) *= c;
    return out;
}

RrefBuilder::RrefBuilder(int cols) : cols_(cols) {
    if (cols < 0) throw std::invalid_argument("rref: negative width");
}

bool RrefBuilder::add_row(Vec row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("rref: row width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = row[static_cast<std::size_t>(pivots_[r])];
        row_axpy_sub(row, c, rows_[r]);
    }
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
        if (!row[static_cast<std::size_t>(j)].is_zero()) {
            lead = j;
            break;
        }
    if (lead < 0) return false;

    const Scalar inv = row[static_cast<std::size_t>(lead)].inverse();
    for (Scalar& c : row) c *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = rows_[r][static_cast<std::size_t>(lead)];
        row_axpy_sub(rows_[r], c, row);
    }

    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < lead) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), lead);
    return true;
}

Subspace RrefBuilder::row_space() const {
    Subspace s;
    s.ambient_ = cols_;
    s.basis_ = rows_;
    s.pivots_ = pivots_;
    return s;
}

Subspace RrefBuilder::kernel() const {
    std::vector<char> is_pivot(static_cast<std::size_t>(cols_), 0);
    for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Vec v = zero_vec(cols_);
        v[static_cast<std::size_t>(f)] = Scalar(1);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            v[static_cast<std::size_t>(pivots_[r])] = -rows_[r][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    // the raw basis is not echelonized; canonicalize for syntactic equality
    return Subspace::from_rows(cols_, basis);
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient_ = ambient;
    for (int i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vec(ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::from_rows(int ambient, const std::vector<Vec>& rows) {
    RrefBuilder b(ambient);
    for (const Vec& r : rows) b.add_row(r);
    return b.row_space();
}

bool Subspace::contains_vector(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("subspace: vector dimension mismatch");
    Vec w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Scalar c = w[static_cast<std::size_t>(pivots_[r])];
        if (!c.is_zero())
            for (std::size_t i = 0; i < w.size(); ++i)
                if (!basis_[r][i].is_zero()) w[i] -= c * basis_[r][i];
    }
    return vzero(w);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace sum: ambient mismatch");
    RrefBuilder builder(a.ambient());
    for (const Vec& r : a.basis()) builder.add_row(r);
    for (const Vec& r : b.basis()) builder.add_row(r);
    return builder.row_space();
}

// Zassenhaus: echelonize rows [x|x] for x in a and [y|0] for y in b; the rows
// whose left half vanished carry the intersection in their right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace intersect: ambient mismatch");
    const int n = a.ambient();
    RrefBuilder builder(2 * n);
    for (const Vec& x : a.basis()) {
        Vec row = zero_vec(2 * n);
        for (int j = 0; j < n; ++j) {
            row[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(n + j)] = x[static_cast<std::size_t>(j)];
        }
        builder.add_row(std::move(row));
    }
    for (const Vec& y : b.basis()) {
        Vec row = zero_vec(2 * n);
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = y[static_cast<std::size_t>(j)];
        builder.add_row(std::move(row));
    }
    std::vector<Vec> inter;
    const std::vector<Vec>& rows = builder.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (builder.pivots()[r] < n) continue;
        inter.emplace_back(rows[r].begin() + n, rows[r].end());
    }
    return Subspace::from_rows(n, inter);
}

bool contains(const Subspace& outer, const Subspace& inner) {
    if (outer.ambient() != inner.ambient()) throw std::invalid_argument("subspace contains: ambient mismatch");
    return std::all_of(inner.basis().begin(), inner.basis().end(),
                       [&](const Vec& v) { return outer.contains_vector(v); });
}

int rank(const Matrix& m) {
    RrefBuilder b(m.cols());
    for (int i = 0; i < m.rows(); ++i) b.add_row(m.row(i));
    return b.rank();
}

Subspace kernel(const Matrix& m) {
    RrefBuilder b(m.cols());
    for (int i = 0; i < m.rows(); ++i) b.add_row(m.row(i));
    return b.kernel();
}

Subspace solve_homogeneous(const Matrix& constraints) { return kernel(constraints); }

}  // namespace zpdlab
