#pragma once

#include "zpdlab/certificate.hpp"
#include "zpdlab/idempotents.hpp"
#include "zpdlab/zero_products.hpp"

#include <cstdint>
#include <string>

namespace zpdlab {

// d1..d4 are the zero-product conditions on a linear map D : A -> M:
//   d1: ab = 0          =>  a D(b) + D(a) b = 0
//   d2: ab = ba = 0     =>  a D(b) + D(a) b = 0   (imposed in both orderings)
//   d3: a o b = 0       =>  a . D(b) + D(a) . b = 0   (. the Jordan action)
//   d4: ab = ba = 0     =>  a . D(b) + D(a) . b = 0
// The remaining tags are defining identities quantified over all pairs.
enum class ConditionTag {
    d1,
    d2,
    d3,
    d4,
    derivation,
    jordan_derivation,
    gen_derivation,
    gen_jordan_derivation,
    anti_derivation,
    central_d1,
};

std::string condition_tag_str(ConditionTag t);
ConditionTag condition_tag_parse(const std::string& name);  // throws std::invalid_argument

// Space of linear maps A -> M, as vectors with coordinate j*mod_dim + k being
// the k-th component of D(e_j).
struct MapSpace {
    int alg_dim = 0;
    int mod_dim = 0;
    Subspace space;

    LinearMap map_at(int i) const {
        return LinearMap::from_vector(alg_dim, mod_dim, space.basis()[static_cast<std::size_t>(i)]);
    }
};

// Exact solution space of the tag's defining identity, imposed on all basis
// pairs (complete by bilinearity). Accepts the five definition tags.
MapSpace definition_space(const Algebra& A, const Bimodule& M, ConditionTag tag);

// {D : a D(1) = D(1) a for all a}.
MapSpace central_d1_space(const Algebra& A, const Bimodule& M);

// Solution space of the tag's constraint imposed on every generated pair of
// the matching mode (d1: one_sided, d2/d4: two_sided, d3: jordan followed by
// the full two_sided stream, so the d3 space is contained in the d4 space
// syntactically). budget bounds each stream. Over-approximates the true
// condition space from above; certification happens in the verify_* ops.
MapSpace condition_space(const Algebra& A, const Bimodule& M, ConditionTag tag, std::uint64_t seed,
                         int budget, const IdempotentFamily& fam);
MapSpace condition_space(const Algebra& A, const Bimodule& M, ConditionTag tag, std::uint64_t seed,
                         int budget);

// Residual of the tag's identity for a concrete map at (a, b); zero iff the
// identity holds there. For d1/d2 the residual is a D(b) + D(a) b (meaningful
// at zero-product pairs), for d3/d4 the Jordan-action version, for central_d1
// a D(1) - D(1) a (b ignored).
Vec condition_residual(const Algebra& A, const Bimodule& M, ConditionTag tag, const LinearMap& D,
                       const Vec& a, const Vec& b);

// certified iff {m : x m y + y m x = 0 for all x, y in J} = {0}; this is the
// polarization of "x m x = 0 for all x in J", equivalent in characteristic 0.
// Refuted with a nonzero witness m. dims also report the weaker system
// {m : x m = m x = 0 for all x in J}.
Certificate check_condition_m(const Algebra& A, const Bimodule& M, const IdealSpec& J);

// a -> D(a) - a D(1); the output kills the unit.
LinearMap delta_transform(const Algebra& A, const Bimodule& M, const LinearMap& D);

// Sandwich certifications. The definition side is always contained in the
// sampled condition space (checked, a violation throws std::logic_error);
// certified when the two coincide, inconclusive when a gap remains or a
// hypothesis could not be established (detail says which).
//
// d1: condition_space(d1) vs definition_space(gen_derivation) ^ central_d1,
//     under the hypothesis {m : x m = m x = 0 for all x in J} = {0} with J an
//     ideal inside the family's span.
Certificate verify_theorem_d1(const Algebra& A, const Bimodule& M, const Subspace& J,
                              const IdempotentFamily& fam, std::uint64_t seed, int budget);
// d2: condition_space(d3) = condition_space(d4) = gen_jordan ^ central_d1,
//     under condition m on J.
Certificate verify_theorem_d2(const Algebra& A, const Bimodule& M, const Subspace& J,
                              const IdempotentFamily& fam, std::uint64_t seed, int budget);
// dd2: condition_space(d2) lands inside gen_jordan ^ central_d1 and contains
//     all anti-derivations; equality is not asserted in either direction.
Certificate verify_theorem_dd2(const Algebra& A, const Bimodule& M, const Subspace& J,
                               const IdempotentFamily& fam, std::uint64_t seed, int budget);

// Checks the four Jordan triple-bracket expansions (the last with both of its
// right-hand forms) on random (a, b, c, m); refuted with the witness tuple.
Certificate verify_lemma_f(const Algebra& A, const Bimodule& M, int samples, std::uint64_t seed);

}  // namespace zpdlab
