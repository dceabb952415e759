#include "zpdlab/deriv.hpp"

#include "zpdlab/rng.hpp"

#include <stdexcept>

namespace zpdlab {

std::string condition_tag_str(ConditionTag t) {
    switch (t) {
        case ConditionTag::d1: return "d1";
        case ConditionTag::d2: return "d2";
        case ConditionTag::d3: return "d3";
        case ConditionTag::d4: return "d4";
        case ConditionTag::derivation: return "derivation";
        case ConditionTag::jordan_derivation: return "jordan_derivation";
        case ConditionTag::gen_derivation: return "gen_derivation";
        case ConditionTag::gen_jordan_derivation: return "gen_jordan_derivation";
        case ConditionTag::anti_derivation: return "anti_derivation";
        default: return "central_d1";
    }
}

ConditionTag condition_tag_parse(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "d1") return ConditionTag::d1;
    if (s == "d2") return ConditionTag::d2;
    if (s == "d3") return ConditionTag::d3;
    if (s == "d4") return ConditionTag::d4;
    if (s == "derivation") return ConditionTag::derivation;
    if (s == "jordan_derivation") return ConditionTag::jordan_derivation;
    if (s == "gen_derivation") return ConditionTag::gen_derivation;
    if (s == "gen_jordan_derivation") return ConditionTag::gen_jordan_derivation;
    if (s == "anti_derivation") return ConditionTag::anti_derivation;
    if (s == "central_d1") return ConditionTag::central_d1;
    throw std::invalid_argument("unknown condition tag '" + name + "'");
}

namespace {

// One summand op * D(arg) of a linear expression in the unknown map D.
struct Term {
    Matrix op;  // mod_dim x mod_dim
    Vec arg;    // algebra element
};

// Emits the mod_dim constraint rows of  sum_t op_t * D(arg_t) = 0  over the
// vectorized unknown (coordinate j*m + k = k-th component of D(e_j)).
void add_expression(RrefBuilder& b, int n, int m, const std::vector<Term>& terms) {
    std::vector<Vec> rows(static_cast<std::size_t>(m), zero_vec(n * m));
    for (const Term& t : terms)
        for (int j = 0; j < n; ++j) {
            const Scalar& aj = t.arg[static_cast<std::size_t>(j)];
            if (aj.is_zero()) continue;
            for (int k = 0; k < m; ++k)
                for (int k2 = 0; k2 < m; ++k2) {
                    const Scalar& p = t.op(k, k2);
                    if (!p.is_zero()) rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j) * m + k2] += aj * p;
                }
        }
    for (Vec& r : rows) b.add_row(std::move(r));
}

struct ActionCache {
    const Algebra& A;
    const Bimodule& M;
    Matrix left(const Vec& a) const { return act_matrix(M, a, Side::left); }
    Matrix right(const Vec& a) const { return act_matrix(M, a, Side::right); }
    Matrix bullet(const Vec& a) const { return left(a).add(right(a)); }
};

std::vector<Term> definition_terms(const ActionCache& ctx, ConditionTag tag, const Vec& a, const Vec& b) {
    const Algebra& A = ctx.A;
    const Scalar minus(-1);
    switch (tag) {
        case ConditionTag::derivation:
            // D(ab) - a D(b) - D(a) b
            return {{Matrix::identity(ctx.M.dim), multiply(A, a, b)},
                    {ctx.left(a).scaled(minus), b},
                    {ctx.right(b).scaled(minus), a}};
        case ConditionTag::jordan_derivation:
            // D(a o b) - a . D(b) - D(a) . b
            return {{Matrix::identity(ctx.M.dim), jordan(A, a, b)},
                    {ctx.bullet(a).scaled(minus), b},
                    {ctx.bullet(b).scaled(minus), a}};
        case ConditionTag::gen_derivation:
            // D(ab) - a D(b) - D(a) b + a D(1) b
            return {{Matrix::identity(ctx.M.dim), multiply(A, a, b)},
                    {ctx.left(a).scaled(minus), b},
                    {ctx.right(b).scaled(minus), a},
                    {ctx.left(a).mul(ctx.right(b)), A.unit}};
        case ConditionTag::gen_jordan_derivation:
            // D(a o b) - a . D(b) - D(a) . b + a D(1) b + b D(1) a
            return {{Matrix::identity(ctx.M.dim), jordan(A, a, b)},
                    {ctx.bullet(a).scaled(minus), b},
                    {ctx.bullet(b).scaled(minus), a},
                    {ctx.left(a).mul(ctx.right(b)), A.unit},
                    {ctx.left(b).mul(ctx.right(a)), A.unit}};
        case ConditionTag::anti_derivation:
            // D(ab) - D(b) a - b D(a)
            return {{Matrix::identity(ctx.M.dim), multiply(A, a, b)},
                    {ctx.right(a).scaled(minus), b},
                    {ctx.left(b).scaled(minus), a}};
        default:
            throw std::invalid_argument("definition_space: tag " + condition_tag_str(tag) +
                                        " is not a defining identity");
    }
}

std::vector<Term> pair_condition_terms(const ActionCache& ctx, bool bullet, const Vec& a, const Vec& b) {
    if (bullet)
        // a . D(b) + D(a) . b
        return {{ctx.bullet(a), b}, {ctx.bullet(b), a}};
    // a D(b) + D(a) b
    return {{ctx.left(a), b}, {ctx.right(b), a}};
}

}  // namespace

MapSpace definition_space(const Algebra& A, const Bimodule& M, ConditionTag tag) {
    const ActionCache ctx{A, M};
    RrefBuilder b(A.dim * M.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            add_expression(b, A.dim, M.dim, definition_terms(ctx, tag, unit_vec(A.dim, i), unit_vec(A.dim, j)));
    return MapSpace{A.dim, M.dim, b.kernel()};
}

MapSpace central_d1_space(const Algebra& A, const Bimodule& M) {
    const ActionCache ctx{A, M};
    RrefBuilder b(A.dim * M.dim);
    for (int i = 0; i < A.dim; ++i) {
        const Vec e = unit_vec(A.dim, i);
        // a D(1) - D(1) a
        add_expression(b, A.dim, M.dim, {{ctx.left(e).add(ctx.right(e).scaled(Scalar(-1))), A.unit}});
    }
    return MapSpace{A.dim, M.dim, b.kernel()};
}

MapSpace condition_space(const Algebra& A, const Bimodule& M, ConditionTag tag, std::uint64_t seed,
                         int budget, const IdempotentFamily& fam) {
    const ActionCache ctx{A, M};
    RrefBuilder b(A.dim * M.dim);
    const auto ingest = [&](PairMode mode, bool bullet, bool both_orders) {
        const ZeroPairSet pairs = generate_pairs(A, mode, seed, budget, fam);
        for (const auto& [x, y] : pairs.pairs) {
            add_expression(b, A.dim, M.dim, pair_condition_terms(ctx, bullet, x, y));
            if (both_orders) add_expression(b, A.dim, M.dim, pair_condition_terms(ctx, bullet, y, x));
        }
    };
    switch (tag) {
        case ConditionTag::d1: ingest(PairMode::one_sided, false, false); break;
        case ConditionTag::d2: ingest(PairMode::two_sided, false, true); break;
        case ConditionTag::d3:
            ingest(PairMode::jordan, true, false);
            ingest(PairMode::two_sided, true, false);
            break;
        case ConditionTag::d4: ingest(PairMode::two_sided, true, false); break;
        default:
            throw std::invalid_argument("condition_space: tag " + condition_tag_str(tag) +
                                        " is not a sampled condition");
    }
    return MapSpace{A.dim, M.dim, b.kernel()};
}

MapSpace condition_space(const Algebra& A, const Bimodule& M, ConditionTag tag, std::uint64_t seed,
                         int budget) {
    return condition_space(A, M, tag, seed, budget, default_family(A));
}

Vec condition_residual(const Algebra& A, const Bimodule& M, ConditionTag tag, const LinearMap& D,
                       const Vec& a, const Vec& b) {
    const Vec Da = D.apply(a), Db = D.apply(b), D1 = D.apply(A.unit);
    switch (tag) {
        case ConditionTag::d1:
        case ConditionTag::d2:
            return vadd(act_left(M, a, Db), act_right(M, Da, b));
        case ConditionTag::d3:
        case ConditionTag::d4:
            return vadd(module_jordan(M, a, Db), module_jordan(M, b, Da));
        case ConditionTag::derivation:
            return vsub(D.apply(multiply(A, a, b)), vadd(act_right(M, Da, b), act_left(M, a, Db)));
        case ConditionTag::jordan_derivation:
            return vsub(D.apply(jordan(A, a, b)), vadd(module_jordan(M, b, Da), module_jordan(M, a, Db)));
        case ConditionTag::gen_derivation:
            return vadd(vsub(D.apply(multiply(A, a, b)), vadd(act_right(M, Da, b), act_left(M, a, Db))),
                        act_right(M, act_left(M, a, D1), b));
        case ConditionTag::gen_jordan_derivation: {
            Vec res = vsub(D.apply(jordan(A, a, b)), vadd(module_jordan(M, b, Da), module_jordan(M, a, Db)));
            res = vadd(res, act_right(M, act_left(M, a, D1), b));
            return vadd(res, act_right(M, act_left(M, b, D1), a));
        }
        case ConditionTag::anti_derivation:
            return vsub(D.apply(multiply(A, a, b)), vadd(act_right(M, Db, a), act_left(M, b, Da)));
        default:
            return vsub(act_left(M, a, D1), act_right(M, D1, a));
    }
}

Certificate check_condition_m(const Algebra& /*A*/, const Bimodule& M, const IdealSpec& J) {
    Certificate cert;
    const auto& basis = J.space.basis();
    RrefBuilder sandwich(M.dim);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Matrix lr = act_matrix(M, basis[r], Side::left);
        for (std::size_t s = r; s < basis.size(); ++s) {
            const Matrix ls = act_matrix(M, basis[s], Side::left);
            const Matrix rs = act_matrix(M, basis[s], Side::right);
            const Matrix rr = act_matrix(M, basis[r], Side::right);
            // m -> x_r m x_s + x_s m x_r
            const Matrix p = rs.mul(lr).add(rr.mul(ls));
            for (int i = 0; i < M.dim; ++i) sandwich.add_row(p.row(i));
        }
    }
    const Subspace sol = sandwich.kernel();

    RrefBuilder weak(M.dim);
    for (const Vec& x : basis) {
        const Matrix l = act_matrix(M, x, Side::left), r = act_matrix(M, x, Side::right);
        for (int i = 0; i < M.dim; ++i) {
            weak.add_row(l.row(i));
            weak.add_row(r.row(i));
        }
    }
    cert.dims["sandwich_solution_dim"] = sol.dim();
    cert.dims["annihilator_solution_dim"] = weak.kernel().dim();
    cert.dims["ideal_dim"] = J.space.dim();
    if (sol.is_zero()) {
        cert.outcome = Outcome::certified;
        cert.detail = "only m = 0 satisfies x m y + y m x = 0 over the ideal";
    } else {
        cert.outcome = Outcome::refuted;
        cert.detail = "a nonzero m has x m x = 0 for every x in the ideal";
        cert.witness.push_back(sol.basis().front());
    }
    return cert;
}

LinearMap delta_transform(const Algebra& A, const Bimodule& M, const LinearMap& D) {
    if (D.src_dim != A.dim || D.tgt_dim != M.dim)
        throw std::invalid_argument("delta_transform: map shape does not match the bimodule");
    const Vec D1 = D.apply(A.unit);
    LinearMap delta = D;
    for (int j = 0; j < A.dim; ++j) {
        const Vec corr = act_left(M, unit_vec(A.dim, j), D1);
        for (int k = 0; k < M.dim; ++k) delta.mat(k, j) -= corr[static_cast<std::size_t>(k)];
    }
    if (!vzero(delta.apply(A.unit))) throw std::logic_error("delta_transform: output does not kill the unit");
    return delta;
}

namespace {

// Common hypothesis screen for the theorem verifiers. Returns false and fills
// the certificate when a hypothesis cannot be established.
bool theorem_hypotheses(const Algebra& A, const Bimodule& M, const Subspace& J, const IdempotentFamily& fam,
                        bool need_condition_m, Certificate& cert) {
    const Certificate ideal_cert = check_ideal(A, J);
    if (!ideal_cert.certified()) {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "hypothesis failed: " + ideal_cert.detail;
        cert.witness = ideal_cert.witness;
        cert.witness_pair = ideal_cert.witness_pair;
        return false;
    }
    const Subspace span = idempotent_span(A, fam);
    if (!contains(span, J)) {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "hypothesis failed: the ideal is not inside the span of the idempotent family";
        return false;
    }
    if (need_condition_m) {
        const Certificate m_cert = check_condition_m(A, M, IdealSpec{J});
        if (!m_cert.certified()) {
            cert.outcome = Outcome::inconclusive;
            cert.detail = "hypothesis failed: " + m_cert.detail;
            cert.witness = m_cert.witness;
            return false;
        }
    } else {
        RrefBuilder weak(M.dim);
        for (const Vec& x : J.basis()) {
            const Matrix l = act_matrix(M, x, Side::left), r = act_matrix(M, x, Side::right);
            for (int i = 0; i < M.dim; ++i) {
                weak.add_row(l.row(i));
                weak.add_row(r.row(i));
            }
        }
        const Subspace sol = weak.kernel();
        if (!sol.is_zero()) {
            cert.outcome = Outcome::inconclusive;
            cert.detail = "hypothesis failed: a nonzero m has x m = m x = 0 for every x in the ideal";
            cert.witness.push_back(sol.basis().front());
            return false;
        }
    }
    return true;
}

}  // namespace

Certificate verify_theorem_d1(const Algebra& A, const Bimodule& M, const Subspace& J,
                              const IdempotentFamily& fam, std::uint64_t seed, int budget) {
    Certificate cert;
    cert.seed = seed;
    if (!theorem_hypotheses(A, M, J, fam, false, cert)) return cert;

    const MapSpace sampled = condition_space(A, M, ConditionTag::d1, seed, budget, fam);
    const Subspace inner =
        intersect(definition_space(A, M, ConditionTag::gen_derivation).space, central_d1_space(A, M).space);
    if (!contains(sampled.space, inner))
        throw std::logic_error("generalized derivations with central D(1) must satisfy the sampled (d1) constraints");
    cert.dims["condition_dim"] = sampled.space.dim();
    cert.dims["inner_dim"] = inner.dim();
    if (sampled.space == inner) {
        cert.outcome = Outcome::certified;
        cert.detail = "the sampled (d1) space coincides with the generalized derivations with central D(1)";
    } else {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "the sampled (d1) space is still larger; a bigger budget may close the gap";
    }
    return cert;
}

Certificate verify_theorem_d2(const Algebra& A, const Bimodule& M, const Subspace& J,
                              const IdempotentFamily& fam, std::uint64_t seed, int budget) {
    Certificate cert;
    cert.seed = seed;
    if (!theorem_hypotheses(A, M, J, fam, true, cert)) return cert;

    const MapSpace s3 = condition_space(A, M, ConditionTag::d3, seed, budget, fam);
    const MapSpace s4 = condition_space(A, M, ConditionTag::d4, seed, budget, fam);
    const Subspace inner = intersect(definition_space(A, M, ConditionTag::gen_jordan_derivation).space,
                                     central_d1_space(A, M).space);
    if (!contains(s3.space, inner))
        throw std::logic_error("generalized Jordan derivations with central D(1) must satisfy the sampled (d3) constraints");
    if (!contains(s4.space, s3.space))
        throw std::logic_error("the sampled (d3) space must lie inside the sampled (d4) space by construction");
    cert.dims["d3_dim"] = s3.space.dim();
    cert.dims["d4_dim"] = s4.space.dim();
    cert.dims["inner_dim"] = inner.dim();
    if (s4.space == inner) {
        cert.outcome = Outcome::certified;
        cert.detail = "sampled (d3) and (d4) spaces both coincide with the generalized Jordan derivations with central D(1)";
    } else {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "a gap remains between the sampled spaces and the definition side";
    }
    return cert;
}

Certificate verify_theorem_dd2(const Algebra& A, const Bimodule& M, const Subspace& J,
                               const IdempotentFamily& fam, std::uint64_t seed, int budget) {
    Certificate cert;
    cert.seed = seed;
    if (!theorem_hypotheses(A, M, J, fam, true, cert)) return cert;

    const MapSpace s2 = condition_space(A, M, ConditionTag::d2, seed, budget, fam);
    const Subspace inner = intersect(definition_space(A, M, ConditionTag::gen_jordan_derivation).space,
                                     central_d1_space(A, M).space);
    const Subspace anti = definition_space(A, M, ConditionTag::anti_derivation).space;
    if (!contains(s2.space, anti))
        throw std::logic_error("anti-derivations must satisfy the sampled (d2) constraints in both orderings");
    cert.dims["d2_dim"] = s2.space.dim();
    cert.dims["inner_dim"] = inner.dim();
    cert.dims["anti_dim"] = anti.dim();
    if (contains(inner, s2.space)) {
        cert.outcome = Outcome::certified;
        cert.detail = "every sampled (d2) map is a generalized Jordan derivation with central D(1), "
                      "and all anti-derivations satisfy (d2)";
    } else {
        cert.outcome = Outcome::inconclusive;
        cert.detail = "the sampled (d2) space is not yet inside the generalized Jordan derivations with central D(1)";
    }
    return cert;
}

Certificate verify_lemma_f(const Algebra& A, const Bimodule& M, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("verify_lemma_f: samples must be at least 1");
    Certificate cert;
    cert.seed = seed;
    Rng rng(seed);
    const auto mj = [&](const Vec& x, const Vec& v) { return module_jordan(M, x, v); };
    for (int s = 0; s < samples; ++s) {
        const Vec a = rng.vec(A.dim), b = rng.vec(A.dim), c = rng.vec(A.dim), m = rng.vec(M.dim);
        const char* failed = nullptr;
        const Scalar two(2);
        // 2[a,m,b] = a.(b.m) + b.(a.m) - (a o b).m
        if (vscale(two, bracket_amb(M, a, m, b)) !=
            vsub(vadd(mj(a, mj(b, m)), mj(b, mj(a, m))), mj(jordan(A, a, b), m)))
            failed = "2[a,m,b] expansion";
        // 2[a,b,m] = a.(b.m) + (a o b).m - b.(a.m)
        else if (vscale(two, bracket_abm(M, a, b, m)) !=
                 vsub(vadd(mj(a, mj(b, m)), mj(jordan(A, a, b), m)), mj(b, mj(a, m))))
            failed = "2[a,b,m] expansion";
        // [m, a o b, c] = [b.m, a, c] + [m, a, b o c] - [m,a,c].b
        else if (bracket_abm(M, c, jordan(A, a, b), m) !=
                 vsub(vadd(bracket_abm(M, c, a, mj(b, m)), bracket_abm(M, jordan(A, b, c), a, m)),
                      mj(b, bracket_abm(M, c, a, m))))
            failed = "[m, a o b, c] expansion";
        // [a, b.m, c] = [a.m, b, c] + [a, b, c.m] - [a,b,c].m
        else if (bracket_amb(M, a, mj(b, m), c) !=
                 vsub(vadd(bracket_abm(M, c, b, mj(a, m)), bracket_abm(M, a, b, mj(c, m))),
                      mj(vadd(multiply(A, multiply(A, a, b), c), multiply(A, multiply(A, c, b), a)), m)))
            failed = "[a, b.m, c] first expansion";
        // [a, b.m, c] = [a o b, m, c] + [a, m, b o c] - [a,m,c].b
        else if (bracket_amb(M, a, mj(b, m), c) !=
                 vsub(vadd(bracket_amb(M, jordan(A, a, b), m, c), bracket_amb(M, a, m, jordan(A, b, c))),
                      mj(b, bracket_amb(M, a, m, c))))
            failed = "[a, b.m, c] second expansion";
        if (failed) {
            cert.outcome = Outcome::refuted;
            cert.detail = std::string("identity failed: ") + failed;
            cert.witness = {a, b, c, m};
            return cert;
        }
    }
    cert.outcome = Outcome::certified;
    cert.detail = "all bracket expansions hold on every sampled tuple";
    cert.dims["samples"] = samples;
    return cert;
}

}  // namespace zpdlab
