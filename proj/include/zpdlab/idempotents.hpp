#pragma once

#include "zpdlab/algebra.hpp"
#include "zpdlab/certificate.hpp"

#include <vector>

namespace zpdlab {

struct IdempotentFamily {
    std::vector<Vec> elements;
};

bool is_idempotent(const Algebra& A, const Vec& p);

// Span of the family; throws std::invalid_argument naming the first member
// with p*p != p.
Subspace idempotent_span(const Algebra& A, const IdempotentFamily& fam);

// For matrix-unit algebras: all E_rr plus E_rr + E_rc for every off-diagonal
// basis position (r, c). Spans the whole algebra for the built families.
// Throws std::invalid_argument when the algebra has no matrix-unit metadata.
IdempotentFamily standard_family(const Algebra& A);

// standard_family when metadata is present, empty family otherwise.
IdempotentFamily default_family(const Algebra& A);

// certified iff span(family) is the whole algebra; inconclusive otherwise
// (a family never proves a negative).
Certificate check_full_idempotent_span(const Algebra& A, const IdempotentFamily& fam);

// certified iff J is a two-sided ideal; refuted with witness (basis element,
// ideal generator) and the offending product otherwise.
Certificate check_ideal(const Algebra& A, const Subspace& J);

// Wrapper type proving the contained subspace passed check_ideal.
struct IdealSpec {
    Subspace space;
};
IdealSpec validate_ideal(const Algebra& A, const Subspace& J);  // throws std::invalid_argument if refuted

// certified iff J is an ideal and J is contained in span(family).
Certificate check_ideal_in_span(const Algebra& A, const Subspace& J, const IdempotentFamily& fam);

}  // namespace zpdlab
