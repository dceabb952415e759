#pragma once

#include "zpdlab/algebra.hpp"
#include "zpdlab/idempotents.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace zpdlab {

// Relation a pair (a, b) is required to satisfy:
//   one_sided: ab = 0;  two_sided: ab = ba = 0;  jordan: ab + ba = 0.
enum class PairMode { one_sided, two_sided, jordan };

std::string pair_mode_str(PairMode m);

struct ZeroPairSet {
    int dim = 0;
    PairMode mode = PairMode::one_sided;
    std::vector<std::pair<Vec, Vec>> pairs;
};

Subspace right_annihilator(const Algebra& A, const Vec& a);      // {b : ab = 0}
Subspace left_annihilator(const Algebra& A, const Vec& a);       // {b : ba = 0}
Subspace two_sided_annihilator(const Algebra& A, const Vec& a);  // {b : ab = ba = 0}
Subspace jordan_annihilator(const Algebra& A, const Vec& a);     // {b : ab + ba = 0}

bool pair_satisfies(const Algebra& A, PairMode mode, const Vec& a, const Vec& b);

int default_budget(const Algebra& A);  // 50 * dim

// Deterministic stream of verified nonzero pairs in the given relation, in
// order: complementary idempotent pairs (p, 1-p), a sweep of structured
// shapes built from each family idempotent and each basis element, then
// random rounds mixing structured shapes with annihilator-sampled pairs.
// The stream is a function of (algebra, mode, family, seed) alone, so a
// larger budget extends the smaller budget's list. Every emitted pair is
// re-verified; both components nonzero; exact duplicates dropped.
ZeroPairSet generate_pairs(const Algebra& A, PairMode mode, std::uint64_t seed, int budget,
                           const IdempotentFamily& fam);
ZeroPairSet generate_pairs(const Algebra& A, PairMode mode, std::uint64_t seed, int budget);

}  // namespace zpdlab
