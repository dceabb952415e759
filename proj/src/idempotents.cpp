#include "zpdlab/idempotents.hpp"

#include <stdexcept>

namespace zpdlab {

bool is_idempotent(const Algebra& A, const Vec& p) { return multiply(A, p, p) == p; }

Subspace idempotent_span(const Algebra& A, const IdempotentFamily& fam) {
    for (std::size_t i = 0; i < fam.elements.size(); ++i)
        if (!is_idempotent(A, fam.elements[i]))
            throw std::invalid_argument("idempotent_span: element " + std::to_string(i + 1) +
                                        " is not idempotent: " + vec_str(fam.elements[i]));
    return Subspace::from_rows(A.dim, fam.elements);
}

IdempotentFamily standard_family(const Algebra& A) {
    if (!A.units)
        throw std::invalid_argument("standard_family: algebra has no matrix-unit basis; supply idempotents explicitly");
    IdempotentFamily fam;
    std::vector<int> diag_of(static_cast<std::size_t>(A.units->ambient), -1);
    for (int b = 0; b < A.dim; ++b) {
        const auto [r, c] = A.units->pos[static_cast<std::size_t>(b)];
        if (r == c) {
            diag_of[static_cast<std::size_t>(r)] = b;
            fam.elements.push_back(unit_vec(A.dim, b));
        }
    }
    for (int b = 0; b < A.dim; ++b) {
        const auto [r, c] = A.units->pos[static_cast<std::size_t>(b)];
        if (r == c) continue;
        const int d = diag_of[static_cast<std::size_t>(r)];
        if (d < 0) throw std::invalid_argument("standard_family: basis lacks the diagonal unit E" +
                                               std::to_string(r + 1) + std::to_string(r + 1));
        // (E_rr + E_rc)^2 = E_rr + E_rc for r != c
        fam.elements.push_back(vadd(unit_vec(A.dim, d), unit_vec(A.dim, b)));
    }
    for (const Vec& p : fam.elements)
        if (!is_idempotent(A, p)) throw std::logic_error("standard_family: non-idempotent member " + vec_str(p));
    return fam;
}

IdempotentFamily default_family(const Algebra& A) {
    if (A.units) return standard_family(A);
    return {};
}

Certificate check_full_idempotent_span(const Algebra& A, const IdempotentFamily& fam) {
    Certificate cert;
    const Subspace span = idempotent_span(A, fam);
    cert.dims["span_dim"] = span.dim();
    cert.dims["alg_dim"] = A.dim;
    if (span.is_full()) {
        cert.outcome = Outcome::certified;
        cert.detail = "the idempotent family spans the algebra";
    } else {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "the family spans a proper subspace; a larger family may still span";
    }
    return cert;
}

Certificate check_ideal(const Algebra& A, const Subspace& J) {
    Certificate cert;
    if (J.ambient() != A.dim) {
        cert.outcome = Outcome::refuted;
        cert.detail = "ideal: ambient dimension differs from the algebra";
        return cert;
    }
    for (const Vec& x : J.basis())
        for (int i = 0; i < A.dim; ++i) {
            const Vec e = unit_vec(A.dim, i);
            const Vec ex = multiply(A, e, x);
            if (!J.contains_vector(ex)) {
                cert.outcome = Outcome::refuted;
                cert.detail = "not a left ideal: " + A.labels[static_cast<std::size_t>(i)] + " * " + vec_str(x) +
                              " = " + vec_str(ex) + " leaves the subspace";
                cert.witness_pair.emplace_back(e, x);
                cert.witness.push_back(ex);
                return cert;
            }
            const Vec xe = multiply(A, x, e);
            if (!J.contains_vector(xe)) {
                cert.outcome = Outcome::refuted;
                cert.detail = "not a right ideal: " + vec_str(x) + " * " + A.labels[static_cast<std::size_t>(i)] +
                              " = " + vec_str(xe) + " leaves the subspace";
                cert.witness_pair.emplace_back(x, e);
                cert.witness.push_back(xe);
                return cert;
            }
        }
    cert.outcome = Outcome::certified;
    cert.detail = "closed under left and right multiplication by all basis elements";
    cert.dims["ideal_dim"] = J.dim();
    return cert;
}

IdealSpec validate_ideal(const Algebra& A, const Subspace& J) {
    const Certificate cert = check_ideal(A, J);
    if (!cert.certified()) throw std::invalid_argument("validate_ideal: " + cert.detail);
    return IdealSpec{J};
}

Certificate check_ideal_in_span(const Algebra& A, const Subspace& J, const IdempotentFamily& fam) {
    Certificate cert = check_ideal(A, J);
    if (!cert.certified()) return cert;
    const Subspace span = idempotent_span(A, fam);
    cert.dims["span_dim"] = span.dim();
    if (!contains(span, J)) {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "the ideal is not inside the span of the given idempotents";
        return cert;
    }
    cert.detail = "two-sided ideal inside the idempotent span";
    return cert;
}

}  // namespace zpdlab
