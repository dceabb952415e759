#include "zpdlab/zero_products.hpp"

#include "zpdlab/rng.hpp"

#include <set>
#include <stdexcept>

namespace zpdlab {

std::string pair_mode_str(PairMode m) {
    switch (m) {
        case PairMode::one_sided: return "one_sided";
        case PairMode::two_sided: return "two_sided";
        default: return "jordan";
    }
}

Subspace right_annihilator(const Algebra& A, const Vec& a) { return kernel(left_mult_matrix(A, a)); }

Subspace left_annihilator(const Algebra& A, const Vec& a) { return kernel(right_mult_matrix(A, a)); }

Subspace two_sided_annihilator(const Algebra& A, const Vec& a) {
    const Matrix l = left_mult_matrix(A, a), r = right_mult_matrix(A, a);
    RrefBuilder b(A.dim);
    for (int i = 0; i < A.dim; ++i) b.add_row(l.row(i));
    for (int i = 0; i < A.dim; ++i) b.add_row(r.row(i));
    return b.kernel();
}

Subspace jordan_annihilator(const Algebra& A, const Vec& a) {
    return kernel(left_mult_matrix(A, a).add(right_mult_matrix(A, a)));
}

bool pair_satisfies(const Algebra& A, PairMode mode, const Vec& a, const Vec& b) {
    switch (mode) {
        case PairMode::one_sided: return vzero(multiply(A, a, b));
        case PairMode::two_sided: return vzero(multiply(A, a, b)) && vzero(multiply(A, b, a));
        default: return vzero(jordan(A, a, b));
    }
}

int default_budget(const Algebra& A) { return 50 * A.dim; }

namespace {

std::string pair_key(const Vec& a, const Vec& b) { return vec_str(a) + "|" + vec_str(b); }

class PairCollector {
public:
    PairCollector(const Algebra& A, PairMode mode, int budget) : A_(A), mode_(mode), budget_(budget) {
        out_.dim = A.dim;
        out_.mode = mode;
    }

    bool full() const { return static_cast<int>(out_.pairs.size()) >= budget_; }

    void emit(const Vec& a, const Vec& b) {
        if (full() || vzero(a) || vzero(b)) return;
        if (!seen_.insert(pair_key(a, b)).second) return;
        if (!pair_satisfies(A_, mode_, a, b))
            throw std::logic_error("pair generator produced a pair violating its relation: " + pair_key(a, b));
        out_.pairs.emplace_back(a, b);
    }

    ZeroPairSet take() { return std::move(out_); }

private:
    const Algebra& A_;
    PairMode mode_;
    int budget_;
    std::set<std::string> seen_;
    ZeroPairSet out_;
};

// Shapes instantiating the zero-product identities available from an
// idempotent p, its complement q = 1 - p, and an arbitrary element a:
//   pq = qp = 0, (aq)p = (ap)q = 0, p(qa) = q(pa) = 0,
//   (pap)q = q(pap) = 0, (qaq)p = p(qaq) = 0,
//   paq o (p - q) = 0, qap o (p - q) = 0,
//   (p + paq)(q - paq) = (q - paq)(p + paq) = 0 and the qap variant.
void structured_shapes(PairCollector& col, const Algebra& A, PairMode mode, const Vec& p, const Vec& a) {
    const Vec q = vsub(A.unit, p);
    const Vec pap = multiply(A, p, multiply(A, a, p));
    const Vec qaq = multiply(A, q, multiply(A, a, q));
    switch (mode) {
        case PairMode::one_sided: {
            col.emit(multiply(A, a, q), p);
            col.emit(multiply(A, a, p), q);
            col.emit(p, multiply(A, q, a));
            col.emit(q, multiply(A, p, a));
            col.emit(pap, q);
            col.emit(qaq, p);
            break;
        }
        case PairMode::jordan: {
            const Vec paq = multiply(A, p, multiply(A, a, q));
            const Vec qap = multiply(A, q, multiply(A, a, p));
            const Vec pmq = vsub(p, q);
            col.emit(paq, pmq);
            col.emit(pmq, paq);
            col.emit(qap, pmq);
            col.emit(pmq, qap);
            col.emit(pap, q);
            col.emit(q, pap);
            col.emit(qaq, p);
            col.emit(p, qaq);
            break;
        }
        case PairMode::two_sided: {
            const Vec paq = multiply(A, p, multiply(A, a, q));
            const Vec qap = multiply(A, q, multiply(A, a, p));
            col.emit(vadd(p, paq), vsub(q, paq));
            col.emit(vsub(q, paq), vadd(p, paq));
            col.emit(vadd(p, qap), vsub(q, qap));
            col.emit(vsub(q, qap), vadd(p, qap));
            col.emit(pap, q);
            col.emit(q, pap);
            col.emit(qaq, p);
            col.emit(p, qaq);
            break;
        }
    }
}

void annihilator_pairs(PairCollector& col, const Algebra& A, PairMode mode, const Vec& a) {
    if (vzero(a)) return;
    switch (mode) {
        case PairMode::one_sided: {
            const Subspace r = right_annihilator(A, a);
            for (const Vec& b : r.basis()) col.emit(a, b);
            const Subspace l = left_annihilator(A, a);
            for (const Vec& b : l.basis()) col.emit(b, a);
            break;
        }
        case PairMode::two_sided: {
            const Subspace t = two_sided_annihilator(A, a);
            for (const Vec& b : t.basis()) {
                col.emit(a, b);
                col.emit(b, a);
            }
            break;
        }
        case PairMode::jordan: {
            const Subspace j = jordan_annihilator(A, a);
            for (const Vec& b : j.basis()) {
                col.emit(a, b);
                col.emit(b, a);
            }
            break;
        }
    }
}

}  // namespace

ZeroPairSet generate_pairs(const Algebra& A, PairMode mode, std::uint64_t seed, int budget,
                           const IdempotentFamily& fam) {
    if (budget < 0) throw std::invalid_argument("generate_pairs: negative budget");
    for (const Vec& p : fam.elements)
        if (!is_idempotent(A, p))
            throw std::invalid_argument("generate_pairs: family element is not idempotent: " + vec_str(p));

    PairCollector col(A, mode, budget);
    if (budget == 0) return col.take();

    // complementary pairs: a-independent, always valid in every mode
    for (const Vec& p : fam.elements) {
        const Vec q = vsub(A.unit, p);
        col.emit(p, q);
        col.emit(q, p);
        if (col.full()) return col.take();
    }

    // deterministic sweep: every structured shape at every basis element
    for (int i = 0; i < A.dim && !col.full(); ++i)
        for (const Vec& p : fam.elements) {
            structured_shapes(col, A, mode, p, unit_vec(A.dim, i));
            if (col.full()) break;
        }

    // random rounds; bounded so algebras with no nonzero pairs terminate
    Rng rng(seed);
    for (int round = 0; round < budget && !col.full(); ++round) {
        const Vec a = rng.vec(A.dim);
        for (const Vec& p : fam.elements) {
            structured_shapes(col, A, mode, p, a);
            if (col.full()) break;
        }
        if (col.full()) break;
        if (mode == PairMode::one_sided) {
            // (xp)(qy) = x(pq)y = 0 for any x, y: two independent random
            // factors reach directions the single-element shapes miss.
            const Vec b = rng.vec(A.dim);
            for (const Vec& p : fam.elements) {
                const Vec q = vsub(A.unit, p);
                col.emit(multiply(A, a, p), multiply(A, q, b));
                col.emit(multiply(A, a, q), multiply(A, p, b));
                if (col.full()) break;
            }
            if (col.full()) break;
        }
        annihilator_pairs(col, A, mode, rng.vec(A.dim));
    }
    return col.take();
}

ZeroPairSet generate_pairs(const Algebra& A, PairMode mode, std::uint64_t seed, int budget) {
    return generate_pairs(A, mode, seed, budget, default_family(A));
}

}  // namespace zpdlab
