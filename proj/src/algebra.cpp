#include "zpdlab/algebra.hpp"

#include <numeric>
#include <stdexcept>

namespace zpdlab {

Vec Algebra::basis_product(int i, int j) const {
    Vec v = zero_vec(dim);
    for (int k = 0; k < dim; ++k) v[static_cast<std::size_t>(k)] = c(i, j, k);
    return v;
}

std::optional<int> Algebra::label_index(const std::string& label) const {
    for (int i = 0; i < dim; ++i)
        if (labels[static_cast<std::size_t>(i)] == label) return i;
    return std::nullopt;
}

Vec multiply(const Algebra& A, const Vec& a, const Vec& b) {
    if (static_cast<int>(a.size()) != A.dim || static_cast<int>(b.size()) != A.dim)
        throw std::invalid_argument("multiply: element dimension mismatch");
    Vec out = zero_vec(A.dim);
    for (int i = 0; i < A.dim; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < A.dim; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            const Scalar w = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            for (int k = 0; k < A.dim; ++k) {
                const Scalar& ck = A.c(i, j, k);
                if (!ck.is_zero()) out[static_cast<std::size_t>(k)] += w * ck;
            }
        }
    }
    return out;
}

Vec jordan(const Algebra& A, const Vec& a, const Vec& b) {
    return vadd(multiply(A, a, b), multiply(A, b, a));
}

Matrix left_mult_matrix(const Algebra& A, const Vec& a) {
    Matrix m(A.dim, A.dim);
    for (int j = 0; j < A.dim; ++j)
        for (int i = 0; i < A.dim; ++i) {
            const Scalar& ai = a[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int k = 0; k < A.dim; ++k)
                if (!A.c(i, j, k).is_zero()) m(k, j) += ai * A.c(i, j, k);
        }
    return m;
}

Matrix right_mult_matrix(const Algebra& A, const Vec& a) {
    Matrix m(A.dim, A.dim);
    for (int j = 0; j < A.dim; ++j)
        for (int i = 0; i < A.dim; ++i) {
            const Scalar& ai = a[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int k = 0; k < A.dim; ++k)
                if (!A.c(j, i, k).is_zero()) m(k, j) += ai * A.c(j, i, k);
        }
    return m;
}

namespace {

std::string basis_label(const Algebra& A, int i) {
    if (i >= 0 && i < static_cast<int>(A.labels.size())) return A.labels[static_cast<std::size_t>(i)];
    return "e" + std::to_string(i + 1);
}

}  // namespace

Certificate verify_algebra(const Algebra& A) {
    Certificate cert;
    if (A.dim <= 0 || static_cast<int>(A.unit.size()) != A.dim ||
        A.structure.size() != static_cast<std::size_t>(A.dim) * A.dim * A.dim ||
        (!A.labels.empty() && static_cast<int>(A.labels.size()) != A.dim)) {
        cert.outcome = Outcome::refuted;
        cert.detail = "malformed algebra: dim/unit/structure sizes disagree";
        return cert;
    }
    for (int i = 0; i < A.dim; ++i) {
        const Vec e = unit_vec(A.dim, i);
        if (multiply(A, A.unit, e) != e || multiply(A, e, A.unit) != e) {
            cert.outcome = Outcome::refuted;
            cert.detail = "unit law fails at " + basis_label(A, i);
            cert.witness.push_back(e);
            return cert;
        }
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const Vec ij = A.basis_product(i, j);
            for (int k = 0; k < A.dim; ++k) {
                const Vec lhs = multiply(A, ij, unit_vec(A.dim, k));
                const Vec rhs = multiply(A, unit_vec(A.dim, i), A.basis_product(j, k));
                if (lhs != rhs) {
                    cert.outcome = Outcome::refuted;
                    cert.detail = "associativity fails at (" + basis_label(A, i) + ", " + basis_label(A, j) +
                                  ", " + basis_label(A, k) + ")";
                    cert.witness_pair.emplace_back(lhs, rhs);
                    return cert;
                }
            }
        }
    cert.outcome = Outcome::certified;
    cert.detail = "unit laws and associativity hold on all basis triples";
    cert.dims["dim"] = A.dim;
    return cert;
}

Vec act_left(const Bimodule& M, const Vec& a, const Vec& m) {
    if (static_cast<int>(a.size()) != M.alg_dim || static_cast<int>(m.size()) != M.dim)
        throw std::invalid_argument("act_left: dimension mismatch");
    Vec out = zero_vec(M.dim);
    for (int i = 0; i < M.alg_dim; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < M.dim; ++j) {
            if (m[static_cast<std::size_t>(j)].is_zero()) continue;
            const Scalar w = a[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(j)];
            for (int k = 0; k < M.dim; ++k)
                if (!M.l(i, j, k).is_zero()) out[static_cast<std::size_t>(k)] += w * M.l(i, j, k);
        }
    }
    return out;
}

Vec act_right(const Bimodule& M, const Vec& m, const Vec& a) {
    if (static_cast<int>(a.size()) != M.alg_dim || static_cast<int>(m.size()) != M.dim)
        throw std::invalid_argument("act_right: dimension mismatch");
    Vec out = zero_vec(M.dim);
    for (int j = 0; j < M.dim; ++j) {
        if (m[static_cast<std::size_t>(j)].is_zero()) continue;
        for (int i = 0; i < M.alg_dim; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero()) continue;
            const Scalar w = m[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(i)];
            for (int k = 0; k < M.dim; ++k)
                if (!M.r(j, i, k).is_zero()) out[static_cast<std::size_t>(k)] += w * M.r(j, i, k);
        }
    }
    return out;
}

Vec module_jordan(const Bimodule& M, const Vec& a, const Vec& m) {
    return vadd(act_left(M, a, m), act_right(M, m, a));
}

Vec bracket_amb(const Bimodule& M, const Vec& a, const Vec& m, const Vec& b) {
    return vadd(act_right(M, act_left(M, a, m), b), act_right(M, act_left(M, b, m), a));
}

Vec bracket_abm(const Bimodule& M, const Vec& a, const Vec& b, const Vec& m) {
    return vadd(act_left(M, a, act_left(M, b, m)), act_right(M, act_right(M, m, b), a));
}

Matrix act_matrix(const Bimodule& M, const Vec& a, Side side) {
    if (static_cast<int>(a.size()) != M.alg_dim) throw std::invalid_argument("act_matrix: dimension mismatch");
    Matrix out(M.dim, M.dim);
    for (int j = 0; j < M.dim; ++j)
        for (int i = 0; i < M.alg_dim; ++i) {
            const Scalar& ai = a[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int k = 0; k < M.dim; ++k) {
                const Scalar& t = (side == Side::left) ? M.l(i, j, k) : M.r(j, i, k);
                if (!t.is_zero()) out(k, j) += ai * t;
            }
        }
    return out;
}

Certificate verify_bimodule(const Algebra& A, const Bimodule& M) {
    Certificate cert;
    if (M.alg_dim != A.dim || M.dim <= 0 ||
        M.left.size() != static_cast<std::size_t>(A.dim) * M.dim * M.dim ||
        M.right.size() != static_cast<std::size_t>(M.dim) * A.dim * M.dim) {
        cert.outcome = Outcome::refuted;
        cert.detail = "malformed bimodule: tensor sizes disagree with dimensions";
        return cert;
    }
    for (int k = 0; k < M.dim; ++k) {
        const Vec m = unit_vec(M.dim, k);
        if (act_left(M, A.unit, m) != m || act_right(M, m, A.unit) != m) {
            cert.outcome = Outcome::refuted;
            cert.detail = "module unit law fails at m" + std::to_string(k + 1);
            cert.witness.push_back(m);
            return cert;
        }
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const Vec ei = unit_vec(A.dim, i), ej = unit_vec(A.dim, j);
            const Vec eij = A.basis_product(i, j);
            for (int k = 0; k < M.dim; ++k) {
                const Vec m = unit_vec(M.dim, k);
                const char* which = nullptr;
                if (act_left(M, eij, m) != act_left(M, ei, act_left(M, ej, m)))
                    which = "left action is not associative";
                else if (act_right(M, m, eij) != act_right(M, act_right(M, m, ei), ej))
                    which = "right action is not associative";
                else if (act_right(M, act_left(M, ei, m), ej) != act_left(M, ei, act_right(M, m, ej)))
                    which = "left and right actions do not commute";
                if (which) {
                    cert.outcome = Outcome::refuted;
                    cert.detail = std::string(which) + " at (" + basis_label(A, i) + ", " + basis_label(A, j) +
                                  ", m" + std::to_string(k + 1) + ")";
                    return cert;
                }
            }
        }
    cert.outcome = Outcome::certified;
    cert.detail = "bimodule axioms hold on all basis triples";
    cert.dims["alg_dim"] = A.dim;
    cert.dims["mod_dim"] = M.dim;
    return cert;
}

Bimodule regular_bimodule(const Algebra& A) {
    Bimodule M;
    M.alg_dim = A.dim;
    M.dim = A.dim;
    M.left.assign(static_cast<std::size_t>(A.dim) * A.dim * A.dim, Scalar(0));
    M.right.assign(static_cast<std::size_t>(A.dim) * A.dim * A.dim, Scalar(0));
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int k = 0; k < A.dim; ++k) {
                M.l(i, j, k) = A.c(i, j, k);
                M.r(j, i, k) = A.c(j, i, k);
            }
    return M;
}

Bimodule ambient_matrix_bimodule(const Algebra& A) {
    if (!A.units) throw std::invalid_argument("ambient bimodule: algebra has no matrix-unit basis");
    const int N = A.units->ambient;
    Bimodule M;
    M.alg_dim = A.dim;
    M.dim = N * N;
    M.left.assign(static_cast<std::size_t>(A.dim) * M.dim * M.dim, Scalar(0));
    M.right.assign(static_cast<std::size_t>(M.dim) * A.dim * M.dim, Scalar(0));
    for (int i = 0; i < A.dim; ++i) {
        const auto [r, c] = A.units->pos[static_cast<std::size_t>(i)];
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                const int m = k * N + l;
                // E_rc . E_kl = delta_ck E_rl
                if (c == k) M.l(i, m, r * N + l) += Scalar(1);
                // E_kl . E_rc = delta_lr E_kc
                if (l == r) M.r(m, i, k * N + c) += Scalar(1);
            }
    }
    return M;
}

namespace {

Algebra matrix_unit_algebra(int ambient, const std::vector<std::pair<int, int>>& pos) {
    Algebra A;
    A.dim = static_cast<int>(pos.size());
    A.units = MatrixUnits{ambient, pos};
    A.structure.assign(static_cast<std::size_t>(A.dim) * A.dim * A.dim, Scalar(0));
    A.unit = zero_vec(A.dim);
    for (int i = 0; i < A.dim; ++i) {
        const auto [r, c] = pos[static_cast<std::size_t>(i)];
        A.labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
        if (r == c) A.unit[static_cast<std::size_t>(i)] = Scalar(1);
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const auto [r, c] = pos[static_cast<std::size_t>(i)];
            const auto [s, t] = pos[static_cast<std::size_t>(j)];
            if (c != s) continue;
            for (int k = 0; k < A.dim; ++k)
                if (pos[static_cast<std::size_t>(k)] == std::make_pair(r, t)) A.c(i, j, k) = Scalar(1);
        }
    const Certificate cert = verify_algebra(A);
    if (!cert.certified()) throw std::logic_error("matrix-unit algebra failed verification: " + cert.detail);
    return A;
}

}  // namespace

Algebra block_triangular(const std::vector<int>& partition) {
    if (partition.empty()) throw std::invalid_argument("block_triangular: empty partition");
    for (int s : partition)
        if (s <= 0) throw std::invalid_argument("block_triangular: block sizes must be positive");
    const int N = std::accumulate(partition.begin(), partition.end(), 0);
    std::vector<int> block(static_cast<std::size_t>(N));
    {
        int at = 0, b = 0;
        for (int s : partition) {
            for (int k = 0; k < s; ++k) block[static_cast<std::size_t>(at++)] = b;
            ++b;
        }
    }
    std::vector<std::pair<int, int>> pos;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (block[static_cast<std::size_t>(r)] <= block[static_cast<std::size_t>(c)]) pos.emplace_back(r, c);
    return matrix_unit_algebra(N, pos);
}

Algebra matrix_algebra(int n) {
    if (n <= 0) throw std::invalid_argument("matrix_algebra: order must be positive");
    return block_triangular({n});
}

Algebra triangular_algebra(int n) {
    if (n <= 0) throw std::invalid_argument("triangular_algebra: order must be positive");
    return block_triangular(std::vector<int>(static_cast<std::size_t>(n), 1));
}

RemarkSetting remark_bimodule() {
    RemarkSetting s;
    s.algebra = triangular_algebra(2);
    Bimodule M;
    M.alg_dim = 3;
    M.dim = 1;
    M.left.assign(3, Scalar(0));
    M.right.assign(3, Scalar(0));
    for (int i = 0; i < 3; ++i) {
        const auto [r, c] = s.algebra.units->pos[static_cast<std::size_t>(i)];
        if (r == 1 && c == 1) M.l(i, 0, 0) = Scalar(1);  // a . m = a_22 m
        if (r == 0 && c == 0) M.r(0, i, 0) = Scalar(1);  // m . a = m a_11
    }
    const Certificate cert = verify_bimodule(s.algebra, M);
    if (!cert.certified()) throw std::logic_error("remark bimodule failed verification: " + cert.detail);
    s.bimodule = std::move(M);
    return s;
}

Vec LinearMap::vectorize() const {
    Vec v = zero_vec(src_dim * tgt_dim);
    for (int j = 0; j < src_dim; ++j)
        for (int k = 0; k < tgt_dim; ++k) v[static_cast<std::size_t>(j) * tgt_dim + k] = mat(k, j);
    return v;
}

LinearMap LinearMap::from_vector(int src_dim, int tgt_dim, const Vec& v) {
    if (static_cast<int>(v.size()) != src_dim * tgt_dim)
        throw std::invalid_argument("linear map: coordinate vector has wrong length");
    LinearMap f;
    f.src_dim = src_dim;
    f.tgt_dim = tgt_dim;
    f.mat = Matrix(tgt_dim, src_dim);
    for (int j = 0; j < src_dim; ++j)
        for (int k = 0; k < tgt_dim; ++k) f.mat(k, j) = v[static_cast<std::size_t>(j) * tgt_dim + k];
    return f;
}

LinearMap LinearMap::identity(int dim) {
    LinearMap f;
    f.src_dim = f.tgt_dim = dim;
    f.mat = Matrix::identity(dim);
    return f;
}

Vec BilinearMap::eval(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != src_dim || static_cast<int>(b.size()) != src_dim)
        throw std::invalid_argument("bilinear map: argument dimension mismatch");
    Vec out = zero_vec(tgt_dim);
    for (int i = 0; i < src_dim; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < src_dim; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            const Scalar w = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
            for (int k = 0; k < tgt_dim; ++k)
                if (!at(i, j, k).is_zero()) out[static_cast<std::size_t>(k)] += w * at(i, j, k);
        }
    }
    return out;
}

BilinearMap BilinearMap::zero(int src_dim, int tgt_dim) {
    BilinearMap p;
    p.src_dim = src_dim;
    p.tgt_dim = tgt_dim;
    p.coeff.assign(static_cast<std::size_t>(src_dim) * src_dim * tgt_dim, Scalar(0));
    return p;
}

BilinearMap BilinearMap::from_vector(int src_dim, int tgt_dim, const Vec& v) {
    if (v.size() != static_cast<std::size_t>(src_dim) * src_dim * tgt_dim)
        throw std::invalid_argument("bilinear map: coordinate vector has wrong length");
    BilinearMap p = zero(src_dim, tgt_dim);
    p.coeff = v;
    return p;
}

}  // namespace zpdlab
