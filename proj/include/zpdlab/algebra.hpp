#pragma once

#include "zpdlab/certificate.hpp"
#include "zpdlab/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zpdlab {

// Present when the basis consists of matrix units inside M_ambient;
// pos[b] is the (row, col) of basis element b, 0-based.
struct MatrixUnits {
    int ambient = 0;
    std::vector<std::pair<int, int>> pos;
};

// Finite-dimensional unital associative algebra over Q(i), given by structure
// constants: e_i e_j = sum_k c[i][j][k] e_k. Elements are coordinate vectors.
struct Algebra {
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<Scalar> structure;  // index (i*dim + j)*dim + k
    Vec unit;
    std::optional<MatrixUnits> units;

    const Scalar& c(int i, int j, int k) const {
        return structure[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    Scalar& c(int i, int j, int k) {
        return structure[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    Vec basis_product(int i, int j) const;
    std::optional<int> label_index(const std::string& label) const;
};

Vec multiply(const Algebra& A, const Vec& a, const Vec& b);
Vec jordan(const Algebra& A, const Vec& a, const Vec& b);  // ab + ba
Matrix left_mult_matrix(const Algebra& A, const Vec& a);   // x -> a x
Matrix right_mult_matrix(const Algebra& A, const Vec& a);  // x -> x a

// Unit laws and associativity checked on all basis pairs/triples; complete by
// multilinearity. Refuted certificates carry the offending labels.
Certificate verify_algebra(const Algebra& A);

// Bimodule over A given by action tensors: e_i . m_j = sum_k left[i][j][k] m_k
// and m_j . e_i = sum_k right[j][i][k] m_k.
struct Bimodule {
    int alg_dim = 0;
    int dim = 0;
    std::vector<Scalar> left;   // index (i*dim + j)*dim + k
    std::vector<Scalar> right;  // index (j*alg_dim + i)*dim + k

    const Scalar& l(int i, int j, int k) const {
        return left[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    Scalar& l(int i, int j, int k) { return left[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
    const Scalar& r(int j, int i, int k) const {
        return right[(static_cast<std::size_t>(j) * alg_dim + i) * dim + k];
    }
    Scalar& r(int j, int i, int k) { return right[(static_cast<std::size_t>(j) * alg_dim + i) * dim + k]; }
};

Vec act_left(const Bimodule& M, const Vec& a, const Vec& m);   // a . m
Vec act_right(const Bimodule& M, const Vec& m, const Vec& a);  // m . a
Vec module_jordan(const Bimodule& M, const Vec& a, const Vec& m);  // am + ma

// Jordan triple brackets; fixed parenthesizations (left actions first).
Vec bracket_amb(const Bimodule& M, const Vec& a, const Vec& m, const Vec& b);  // amb + bma
Vec bracket_abm(const Bimodule& M, const Vec& a, const Vec& b, const Vec& m);  // abm + mba

enum class Side { left, right };
Matrix act_matrix(const Bimodule& M, const Vec& a, Side side);  // m -> a.m resp. m -> m.a

// Associativity of both actions, compatibility, and unit laws on basis triples.
Certificate verify_bimodule(const Algebra& A, const Bimodule& M);

// A acting on itself by multiplication.
Bimodule regular_bimodule(const Algebra& A);

// The full ambient matrix space M_N as a bimodule over a matrix-unit algebra
// (requires A.units). Module basis: E_kl of M_N, row-major.
Bimodule ambient_matrix_bimodule(const Algebra& A);

// Builders. Basis: matrix units E_rc, row-major over the allowed positions,
// labels "E<r+1><c+1>". All carry MatrixUnits metadata and verify clean.
Algebra matrix_algebra(int n);
Algebra triangular_algebra(int n);
// Block upper triangular in M_N, N = sum(partition); position (r, c) allowed
// iff block(r) <= block(c). matrix_algebra(n) == block_triangular({n}),
// triangular_algebra(n) == block_triangular({1,...,1}).
Algebra block_triangular(const std::vector<int>& partition);

// The 2x2 upper triangular algebra acting on a 1-dimensional module by
// a . m = a_22 m and m . a = m a_11. A one-dimensional stage for maps that
// are Jordan derivations but not derivations.
struct RemarkSetting {
    Algebra algebra;
    Bimodule bimodule;
};
RemarkSetting remark_bimodule();

// Linear map between coordinate spaces; column j of mat is the image of
// source basis vector j.
struct LinearMap {
    int src_dim = 0;
    int tgt_dim = 0;
    Matrix mat;

    Vec apply(const Vec& x) const { return mat.apply(x); }
    // column-major by source index: component j*tgt_dim + k is mat(k, j)
    Vec vectorize() const;
    static LinearMap from_vector(int src_dim, int tgt_dim, const Vec& v);
    static LinearMap identity(int dim);

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.src_dim == b.src_dim && a.tgt_dim == b.tgt_dim && a.mat == b.mat;
    }
};

// Bilinear map A x A -> F^tgt_dim by values on basis pairs.
struct BilinearMap {
    int src_dim = 0;
    int tgt_dim = 0;
    std::vector<Scalar> coeff;  // index (i*src_dim + j)*tgt_dim + k = phi(e_i, e_j)_k

    const Scalar& at(int i, int j, int k) const {
        return coeff[(static_cast<std::size_t>(i) * src_dim + j) * tgt_dim + k];
    }
    Scalar& at(int i, int j, int k) {
        return coeff[(static_cast<std::size_t>(i) * src_dim + j) * tgt_dim + k];
    }
    Vec eval(const Vec& a, const Vec& b) const;
    static BilinearMap zero(int src_dim, int tgt_dim);
    // coordinates in the same order as coeff
    Vec vectorize() const { return coeff; }
    static BilinearMap from_vector(int src_dim, int tgt_dim, const Vec& v);
};

}  // namespace zpdlab
