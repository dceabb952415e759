#pragma once

#include "zpdlab/certificate.hpp"
#include "zpdlab/zero_products.hpp"

#include <cstdint>

namespace zpdlab {

enum class ProductKind { ordinary, jordan };

std::string product_kind_str(ProductKind k);

// Kernel of the product seen as a linear map A (x) A -> A; coordinates on
// A (x) A are t[i*n + j] = a_i b_j. For a unital algebra the ordinary kernel
// has dimension n^2 - n.
Subspace mult_kernel(const Algebra& A, ProductKind kind);

Vec pair_tensor(const Vec& a, const Vec& b);  // a (x) b

Subspace zero_pair_span(const ZeroPairSet& pairs);

// Certifies that the span of sampled zero-product pairs (ordinary: ab = 0;
// jordan: a o b = 0) reaches the full multiplication kernel. Stops early once
// the span stops growing for 3*dim consecutive pairs. Never refutes:
// exhausting the budget is inconclusive. Certified results list the
// generating pairs actually used.
Certificate check_zpd(const Algebra& A, ProductKind kind, std::uint64_t seed, int budget);
Certificate check_zpd(const Algebra& A, ProductKind kind, std::uint64_t seed, int budget,
                      const IdempotentFamily& fam);

// Given phi vanishing on a certified generating set, returns T with
// phi(a, b) = T(ab) (ordinary) resp. T(a o b) (jordan); T is phi(., 1)
// resp. half of it. Throws std::invalid_argument if phi fails to vanish on a
// listed pair, std::runtime_error if the factorization identity fails on a
// basis pair (the certificate did not actually span the kernel).
LinearMap factor_through_product(const Algebra& A, const BilinearMap& phi, ProductKind kind,
                                 const ZeroPairSet& pairs);

// For phi vanishing on sampled two-sided pairs, checks the symmetrized
// factorization identity phi(a, x) + phi(x, a) = phi(ax, 1) + phi(1, xa) at
// `samples` random a against every family idempotent x (then by linearity all
// x in the family's span). Refuted with a concrete (a, x) witness otherwise.
Certificate verify_ds_identities(const Algebra& A, const BilinearMap& phi, const IdempotentFamily& fam,
                                 int samples, std::uint64_t seed);

// Space of bilinear maps A x A -> F^tgt_dim vanishing on all sampled pairs of
// the given mode; coordinates (i*n + j)*tgt_dim + k. With symmetric set,
// phi(a, b) = phi(b, a) is imposed on top.
Subspace solve_bilinear_space(const Algebra& A, int tgt_dim, PairMode mode, std::uint64_t seed, int budget,
                              bool symmetric = false);

// Maps of the form (a, b) -> T(a o b); dimension tgt_dim * dim for unital A.
Subspace jordan_factor_space(const Algebra& A, int tgt_dim);

// Compares: (i) symmetric maps vanishing on two-sided pairs, (ii) maps
// vanishing on jordan pairs, (iii) the jordan factor space. (iii) is always
// inside (i) and (ii); certified iff all three sampled spaces coincide.
Certificate check_prop_n(const Algebra& A, int tgt_dim, std::uint64_t seed, int budget);

}  // namespace zpdlab
