#include "zpdlab/zpd.hpp"

#include "zpdlab/rng.hpp"

#include <stdexcept>

namespace zpdlab {

std::string product_kind_str(ProductKind k) { return k == ProductKind::ordinary ? "ordinary" : "jordan"; }

Subspace mult_kernel(const Algebra& A, ProductKind kind) {
    const int n = A.dim;
    Matrix mu(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec prod = (kind == ProductKind::ordinary) ? A.basis_product(i, j)
                                                             : vadd(A.basis_product(i, j), A.basis_product(j, i));
            for (int k = 0; k < n; ++k) mu(k, i * n + j) = prod[static_cast<std::size_t>(k)];
        }
    return kernel(mu);
}

Vec pair_tensor(const Vec& a, const Vec& b) {
    Vec t = zero_vec(static_cast<int>(a.size() * b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) t[i * b.size() + j] = a[i] * b[j];
    }
    return t;
}

Subspace zero_pair_span(const ZeroPairSet& pairs) {
    RrefBuilder b(pairs.dim * pairs.dim);
    for (const auto& [x, y] : pairs.pairs) b.add_row(pair_tensor(x, y));
    return b.row_space();
}

Certificate check_zpd(const Algebra& A, ProductKind kind, std::uint64_t seed, int budget,
                      const IdempotentFamily& fam) {
    const PairMode mode = (kind == ProductKind::ordinary) ? PairMode::one_sided : PairMode::jordan;
    const ZeroPairSet pairs = generate_pairs(A, mode, seed, budget, fam);
    const Subspace ker = mult_kernel(A, kind);

    Certificate cert;
    cert.seed = seed;
    cert.dims["kernel_dim"] = ker.dim();
    cert.dims["budget"] = budget;
    cert.dims["pairs_generated"] = static_cast<long long>(pairs.pairs.size());

    RrefBuilder span(A.dim * A.dim);
    int used = 0;
    for (const auto& [x, y] : pairs.pairs) {
        if (span.rank() == ker.dim()) break;
        span.add_row(pair_tensor(x, y));
        ++used;
    }
    const Subspace got = span.row_space();
    if (!contains(ker, got))
        throw std::logic_error("zero-pair span escaped the multiplication kernel; generator is unsound");

    cert.dims["span_dim"] = got.dim();
    cert.generators_used = used;
    if (got.dim() == ker.dim()) {
        cert.outcome = Outcome::certified;
        cert.detail = "sampled zero-product pairs span the full " + product_kind_str(kind) +
                      " multiplication kernel";
        cert.generators.assign(pairs.pairs.begin(), pairs.pairs.begin() + static_cast<std::ptrdiff_t>(used));
    } else {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "span stopped at dimension " + std::to_string(got.dim()) + " of " +
                      std::to_string(ker.dim()) + "; a larger budget may close the gap";
    }
    return cert;
}

Certificate check_zpd(const Algebra& A, ProductKind kind, std::uint64_t seed, int budget) {
    return check_zpd(A, kind, seed, budget, default_family(A));
}

LinearMap factor_through_product(const Algebra& A, const BilinearMap& phi, ProductKind kind,
                                 const ZeroPairSet& pairs) {
    if (phi.src_dim != A.dim) throw std::invalid_argument("factor: bilinear map is over the wrong algebra");
    const PairMode want = (kind == ProductKind::ordinary) ? PairMode::one_sided : PairMode::jordan;
    if (pairs.mode != want)
        throw std::invalid_argument("factor: pair set mode " + pair_mode_str(pairs.mode) +
                                    " does not match product kind " + product_kind_str(kind));
    for (const auto& [a, b] : pairs.pairs)
        if (!vzero(phi.eval(a, b)))
            throw std::invalid_argument("factor: the bilinear map does not vanish at the zero-product pair " +
                                        vec_str(a) + ", " + vec_str(b));

    LinearMap T;
    T.src_dim = A.dim;
    T.tgt_dim = phi.tgt_dim;
    T.mat = Matrix(phi.tgt_dim, A.dim);
    const Scalar half = Scalar::rational(1, 2);
    for (int j = 0; j < A.dim; ++j) {
        Vec col = phi.eval(unit_vec(A.dim, j), A.unit);
        if (kind == ProductKind::jordan) col = vscale(half, std::move(col));
        for (int k = 0; k < phi.tgt_dim; ++k) T.mat(k, j) = col[static_cast<std::size_t>(k)];
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const Vec ei = unit_vec(A.dim, i), ej = unit_vec(A.dim, j);
            const Vec prod = (kind == ProductKind::ordinary) ? multiply(A, ei, ej) : jordan(A, ei, ej);
            if (phi.eval(ei, ej) != T.apply(prod))
                throw std::runtime_error("factor: phi(a, b) != T(" +
                                         std::string(kind == ProductKind::ordinary ? "ab" : "a o b") +
                                         ") at basis pair (" + std::to_string(i + 1) + ", " +
                                         std::to_string(j + 1) + "); the pair set does not span the kernel");
        }
    return T;
}

Certificate verify_ds_identities(const Algebra& A, const BilinearMap& phi, const IdempotentFamily& fam,
                                 int samples, std::uint64_t seed) {
    Certificate cert;
    cert.seed = seed;
    const ZeroPairSet pairs = generate_pairs(A, PairMode::two_sided, seed, default_budget(A), fam);
    for (const auto& [a, b] : pairs.pairs)
        if (!vzero(phi.eval(a, b)))
            throw std::invalid_argument("ds identities: the map does not vanish at the two-sided pair " +
                                        vec_str(a) + ", " + vec_str(b));

    for (const Vec& x : fam.elements)
        if (phi.eval(x, A.unit) != phi.eval(A.unit, x)) {
            cert.outcome = Outcome::refuted;
            cert.detail = "phi(x, 1) != phi(1, x) at the witness pair";
            cert.witness_pair.emplace_back(x, A.unit);
            return cert;
        }

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Vec a = rng.vec(A.dim);
        for (const Vec& x : fam.elements) {
            const Vec lhs = vadd(phi.eval(a, x), phi.eval(x, a));
            const Vec rhs = vadd(phi.eval(multiply(A, a, x), A.unit), phi.eval(A.unit, multiply(A, x, a)));
            if (lhs != rhs) {
                cert.outcome = Outcome::refuted;
                cert.detail = "phi(a, x) + phi(x, a) != phi(ax, 1) + phi(1, xa) at the witness pair";
                cert.witness_pair.emplace_back(a, x);
                return cert;
            }
        }
    }
    cert.outcome = Outcome::certified;
    cert.detail = "symmetrized factorization identity holds at all sampled points";
    cert.dims["samples"] = samples;
    cert.dims["idempotents"] = static_cast<long long>(fam.elements.size());
    return cert;
}

Subspace solve_bilinear_space(const Algebra& A, int tgt_dim, PairMode mode, std::uint64_t seed, int budget,
                              bool symmetric) {
    const int n = A.dim;
    const ZeroPairSet pairs = generate_pairs(A, mode, seed, budget);
    RrefBuilder b(n * n * tgt_dim);
    if (symmetric) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = 0; k < tgt_dim; ++k) {
                    Vec row = zero_vec(n * n * tgt_dim);
                    row[(static_cast<std::size_t>(i) * n + j) * tgt_dim + k] = Scalar(1);
                    row[(static_cast<std::size_t>(j) * n + i) * tgt_dim + k] = Scalar(-1);
                    b.add_row(std::move(row));
                }
    }
    for (const auto& [x, y] : pairs.pairs) {
        // phi(x, y) = 0: one constraint row per target coordinate
        for (int k = 0; k < tgt_dim; ++k) {
            Vec row = zero_vec(n * n * tgt_dim);
            for (int i = 0; i < n; ++i) {
                if (x[static_cast<std::size_t>(i)].is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    if (!y[static_cast<std::size_t>(j)].is_zero())
                        row[(static_cast<std::size_t>(i) * n + j) * tgt_dim + k] =
                            x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            }
            b.add_row(std::move(row));
        }
    }
    return b.kernel();
}

Subspace jordan_factor_space(const Algebra& A, int tgt_dim) {
    const int n = A.dim;
    std::vector<Vec> rows;
    // generator for T = (unit l-th coordinate map into target slot k)
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < tgt_dim; ++k) {
            Vec row = zero_vec(n * n * tgt_dim);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Vec prod = jordan(A, unit_vec(n, i), unit_vec(n, j));
                    if (!prod[static_cast<std::size_t>(l)].is_zero())
                        row[(static_cast<std::size_t>(i) * n + j) * tgt_dim + k] = prod[static_cast<std::size_t>(l)];
                }
            rows.push_back(std::move(row));
        }
    return Subspace::from_rows(n * n * tgt_dim, rows);
}

Certificate check_prop_n(const Algebra& A, int tgt_dim, std::uint64_t seed, int budget) {
    Certificate cert;
    cert.seed = seed;
    const Certificate span_cert = check_full_idempotent_span(A, default_family(A));
    if (!span_cert.certified()) {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "hypothesis not established: no spanning idempotent family available";
        return cert;
    }
    const Subspace sym = solve_bilinear_space(A, tgt_dim, PairMode::two_sided, seed, budget, true);
    const Subspace jor = solve_bilinear_space(A, tgt_dim, PairMode::jordan, seed, budget, false);
    const Subspace fac = jordan_factor_space(A, tgt_dim);
    if (!contains(sym, fac) || !contains(jor, fac))
        throw std::logic_error("jordan factor maps must vanish on all sampled pairs; generator is unsound");
    cert.dims["symmetric_two_sided_dim"] = sym.dim();
    cert.dims["jordan_dim"] = jor.dim();
    cert.dims["factor_dim"] = fac.dim();
    if (sym == fac && jor == fac) {
        cert.outcome = Outcome::certified;
        cert.detail = "both sampled solution spaces equal the space of maps T(a o b)";
    } else {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "sampled solution spaces are still larger than the factor space; a larger budget may close the gap";
    }
    return cert;
}

}  // namespace zpdlab
