#include "doctest.h"
#include "oracles.hpp"
#include "zpdlab/deriv.hpp"

#include <stdexcept>

using namespace zpdlab;

namespace {

struct Setting {
    Algebra a;
    Bimodule m;
};

Setting regular(const Algebra& a) { return {a, regular_bimodule(a)}; }

// Residual of every basis map of `space` at random pairs must vanish; this is
// the independent membership check for definition spaces.
void check_members_satisfy(const Setting& s, ConditionTag tag, const MapSpace& space,
                           unsigned long long seed) {
    Rng rng(seed);
    for (int i = 0; i < space.space.dim(); ++i) {
        const LinearMap d = space.map_at(i);
        for (int t = 0; t < 25; ++t) {
            const Vec a = rng.vec(s.a.dim), b = rng.vec(s.a.dim);
            CHECK(vec_eq(condition_residual(s.a, s.m, tag, d, a, b), zero_vec(s.m.dim)));
        }
    }
}

}  // namespace

TEST_CASE("derivation space dimensions on the regular bimodule") {
    // All derivations of M_n are inner: dim = n^2 - 1. For T2 the inner
    // derivations already exhaust the space: dim = 2.
    const Setting m2 = regular(matrix_algebra(2));
    const MapSpace d2 = definition_space(m2.a, m2.m, ConditionTag::derivation);
    CHECK(d2.space.dim() == 3);
    CHECK(d2.space == oracles::inner_derivation_span(m2.a));

    const Setting m3 = regular(matrix_algebra(3));
    const MapSpace d3 = definition_space(m3.a, m3.m, ConditionTag::derivation);
    CHECK(d3.space.dim() == 8);
    CHECK(d3.space == oracles::inner_derivation_span(m3.a));

    const Setting t2 = regular(triangular_algebra(2));
    const MapSpace dt = definition_space(t2.a, t2.m, ConditionTag::derivation);
    CHECK(dt.space.dim() == 2);
    CHECK(dt.space == oracles::inner_derivation_span(t2.a));
}

TEST_CASE("generalized derivations are derivations plus right multiplications") {
    for (const Algebra& a : {matrix_algebra(2), matrix_algebra(3), triangular_algebra(2)}) {
        const Setting s = regular(a);
        const MapSpace gd = definition_space(s.a, s.m, ConditionTag::gen_derivation);
        CHECK(gd.space == oracles::inner_plus_all_right_mult(a));
    }
    // Dimensions: inner + all right mults (the two intersect trivially here,
    // since a right multiplication killing 1 is zero).
    CHECK(definition_space(matrix_algebra(2), regular_bimodule(matrix_algebra(2)),
                           ConditionTag::gen_derivation)
              .space.dim() == 7);
    CHECK(definition_space(matrix_algebra(3), regular_bimodule(matrix_algebra(3)),
                           ConditionTag::gen_derivation)
              .space.dim() == 17);
    CHECK(definition_space(triangular_algebra(2), regular_bimodule(triangular_algebra(2)),
                           ConditionTag::gen_derivation)
              .space.dim() == 5);
}

TEST_CASE("definition space members satisfy their identity everywhere") {
    const Setting s = regular(triangular_algebra(2));
    for (ConditionTag tag : {ConditionTag::derivation, ConditionTag::jordan_derivation,
                             ConditionTag::gen_derivation, ConditionTag::gen_jordan_derivation,
                             ConditionTag::anti_derivation}) {
        check_members_satisfy(s, tag, definition_space(s.a, s.m, tag), 17);
    }
}

TEST_CASE("containments between definition spaces") {
    for (const Algebra& a : {matrix_algebra(2), triangular_algebra(2), triangular_algebra(3),
                             block_triangular({2, 1})}) {
        const Setting s = regular(a);
        const Subspace der = definition_space(s.a, s.m, ConditionTag::derivation).space;
        const Subspace jder = definition_space(s.a, s.m, ConditionTag::jordan_derivation).space;
        const Subspace gder = definition_space(s.a, s.m, ConditionTag::gen_derivation).space;
        const Subspace gjder = definition_space(s.a, s.m, ConditionTag::gen_jordan_derivation).space;
        CHECK(contains(jder, der));
        CHECK(contains(gder, der));
        CHECK(contains(gjder, jder));
        CHECK(contains(gjder, gder));
    }
}

TEST_CASE("jordan derivations strictly exceed derivations on the one dimensional bimodule") {
    const RemarkSetting rs = remark_bimodule();
    const Subspace der = definition_space(rs.algebra, rs.bimodule, ConditionTag::derivation).space;
    const Subspace jder =
        definition_space(rs.algebra, rs.bimodule, ConditionTag::jordan_derivation).space;
    CHECK(der.dim() == 1);
    CHECK(jder.dim() == 2);
    CHECK(contains(jder, der));
    CHECK_FALSE(contains(der, jder));

    // The gap witness: D(a) = a_{12} is a jordan derivation, not a derivation.
    Vec w = zero_vec(3);
    w[(std::size_t)rs.algebra.label_index("E12").value()] = Scalar(1);
    CHECK(jder.contains_vector(w));
    CHECK_FALSE(der.contains_vector(w));
}

TEST_CASE("condition spaces from sampled zero pairs match the closed forms") {
    // On suite algebras the sampled d1 space equals gen derivations cut by
    // the central d1 constraint; sampling must land exactly there.
    const Algebra a = matrix_algebra(2);
    const Bimodule m = regular_bimodule(a);
    const Certificate cert = verify_theorem_d1(a, m, Subspace::full(a.dim), default_family(a), 1, default_budget(a));
    CHECK(cert.outcome == Outcome::certified);
    CHECK(cert.dims.at("condition_dim") == 4);
    CHECK(cert.dims.at("inner_dim") == 4);
}

TEST_CASE("d1 certification across the suite") {
    struct Row {
        Algebra a;
        long long dim;
    };
    const Row rows[] = {
        {matrix_algebra(2), 4},
        {matrix_algebra(3), 9},
        {triangular_algebra(2), 3},
    };
    for (const Row& r : rows) {
        const Bimodule m = regular_bimodule(r.a);
        const Certificate cert = verify_theorem_d1(r.a, m, Subspace::full(r.a.dim), default_family(r.a), 2, default_budget(r.a));
        CHECK(cert.outcome == Outcome::certified);
        CHECK(cert.dims.at("inner_dim") == r.dim);
        CHECK(cert.dims.at("condition_dim") == r.dim);
    }
}

TEST_CASE("d2 certification: jordan type conditions collapse to the same space") {
    for (const Algebra& a : {matrix_algebra(2), triangular_algebra(2), triangular_algebra(3)}) {
        const Bimodule m = regular_bimodule(a);
        const Certificate cert = verify_theorem_d2(a, m, Subspace::full(a.dim), default_family(a), 1, default_budget(a));
        CHECK(cert.outcome == Outcome::certified);
        CHECK(cert.dims.at("d3_dim") == cert.dims.at("inner_dim"));
        CHECK(cert.dims.at("d4_dim") == cert.dims.at("inner_dim"));
    }
}

TEST_CASE("d2 on the ambient bimodule of T2") {
    const Algebra a = block_triangular({1, 1});
    const Bimodule m = ambient_matrix_bimodule(a);
    const Certificate cert = verify_theorem_d2(a, m, Subspace::full(a.dim), default_family(a), 1, default_budget(a));
    CHECK(cert.outcome == Outcome::certified);
}

TEST_CASE("dd2 certification: two sided orderings force jordan derivations") {
    for (const Algebra& a : {matrix_algebra(2), triangular_algebra(2)}) {
        const Bimodule m = regular_bimodule(a);
        const Certificate cert = verify_theorem_dd2(a, m, Subspace::full(a.dim), default_family(a), 1, default_budget(a));
        CHECK(cert.outcome == Outcome::certified);
    }
}

TEST_CASE("central d1 maps on M2") {
    const Algebra a = matrix_algebra(2);
    const Bimodule m = regular_bimodule(a);
    CHECK(central_d1_space(a, m).space.dim() == 13);
}

TEST_CASE("condition m holds on the full matrix algebras") {
    for (const Algebra& a : {matrix_algebra(2), matrix_algebra(3)}) {
        const Bimodule m = regular_bimodule(a);
        const Certificate cert = check_condition_m(a, m, validate_ideal(a, Subspace::full(a.dim)));
        CHECK(cert.outcome == Outcome::certified);
        CHECK(cert.dims.at("sandwich_solution_dim") == 0);
    }
}

TEST_CASE("condition m fails for the nilpotent ideal of T2") {
    const Algebra t = triangular_algebra(2);
    const Bimodule m = regular_bimodule(t);
    const Subspace j = Subspace::from_rows(t.dim, {unit_vec(t.dim, t.label_index("E12").value())});
    const Certificate cert = check_condition_m(t, m, validate_ideal(t, j));
    CHECK(cert.outcome == Outcome::refuted);
    CHECK(cert.dims.at("sandwich_solution_dim") > 0);
    CHECK_FALSE(cert.witness.empty());
}

TEST_CASE("delta transform kills the unit") {
    const Algebra a = triangular_algebra(2);
    const Bimodule m = regular_bimodule(a);
    Rng rng(23);
    const LinearMap d = oracles::random_map(rng, a.dim, m.dim);
    const LinearMap delta = delta_transform(a, m, d);
    CHECK(vec_eq(delta.apply(a.unit), zero_vec(m.dim)));
    // Delta differs from d by a right multiplication with d(1).
    const Vec d1 = d.apply(a.unit);
    for (int j = 0; j < a.dim; ++j) {
        const Vec e = unit_vec(a.dim, j);
        CHECK(vec_eq(delta.apply(e), vsub(d.apply(e), act_left(m, e, d1))));
    }
}

TEST_CASE("bracket expansion identities hold on honest bimodules") {
    {
        const Algebra a = matrix_algebra(2);
        const Certificate cert = verify_lemma_f(a, regular_bimodule(a), 40, 5);
        CHECK(cert.outcome == Outcome::certified);
    }
    {
        const RemarkSetting rs = remark_bimodule();
        const Certificate cert = verify_lemma_f(rs.algebra, rs.bimodule, 40, 5);
        CHECK(cert.outcome == Outcome::certified);
    }
}

TEST_CASE("bracket expansion identities detect corrupted actions") {
    const Algebra a = matrix_algebra(2);
    Bimodule m = regular_bimodule(a);
    // Corrupt the right action only; left/right compatibility identities break.
    m.right[(std::size_t)((1 * m.dim + 2) * m.dim + 3)] += Scalar(1);
    const Certificate cert = verify_lemma_f(a, m, 60, 5);
    CHECK(cert.outcome == Outcome::refuted);
    CHECK_FALSE(cert.detail.empty());
}

TEST_CASE("lemma verification validates sample count") {
    const Algebra a = triangular_algebra(2);
    CHECK_THROWS_AS(verify_lemma_f(a, regular_bimodule(a), 0, 5), std::invalid_argument);
}

TEST_CASE("tag round trip") {
    for (ConditionTag tag : {ConditionTag::d1, ConditionTag::d2, ConditionTag::d3, ConditionTag::d4,
                             ConditionTag::derivation, ConditionTag::jordan_derivation,
                             ConditionTag::gen_derivation, ConditionTag::gen_jordan_derivation,
                             ConditionTag::anti_derivation, ConditionTag::central_d1}) {
        CHECK(condition_tag_parse(condition_tag_str(tag)) == tag);
    }
    CHECK_THROWS_AS(condition_tag_parse("bogus"), std::invalid_argument);
}
