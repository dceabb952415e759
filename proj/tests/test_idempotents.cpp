#include "doctest.h"
#include "zpdlab/idempotents.hpp"

#include <stdexcept>

using namespace zpdlab;

TEST_CASE("standard family members are idempotent") {
    for (const Algebra& a : {matrix_algebra(2), matrix_algebra(3), triangular_algebra(2),
                             triangular_algebra(3), block_triangular({2, 1})}) {
        const IdempotentFamily fam = standard_family(a);
        for (const Vec& e : fam.elements) CHECK(is_idempotent(a, e));
    }
}

TEST_CASE("family sizes") {
    CHECK(standard_family(matrix_algebra(2)).elements.size() == 4);
    CHECK(standard_family(matrix_algebra(3)).elements.size() == 9);
    CHECK(standard_family(triangular_algebra(2)).elements.size() == 3);
    CHECK(standard_family(triangular_algebra(3)).elements.size() == 6);
    CHECK(standard_family(block_triangular({2, 1})).elements.size() == 7);
}

TEST_CASE("idempotents span the whole algebra for the built-in families") {
    for (const Algebra& a : {matrix_algebra(2), matrix_algebra(3), triangular_algebra(2),
                             triangular_algebra(3), block_triangular({2, 1})}) {
        const Certificate cert = check_full_idempotent_span(a, standard_family(a));
        CHECK(cert.outcome == Outcome::certified);
        CHECK(cert.dims.at("span_dim") == a.dim);
        CHECK(cert.dims.at("alg_dim") == a.dim);
    }
}

TEST_CASE("span rejects non idempotent members") {
    const Algebra a = matrix_algebra(2);
    IdempotentFamily fam = standard_family(a);
    fam.elements.push_back(unit_vec(a.dim, a.label_index("E12").value()));  // nilpotent
    CHECK_THROWS_AS(idempotent_span(a, fam), std::invalid_argument);
}

TEST_CASE("ideal verification") {
    const Algebra t = triangular_algebra(2);
    // span{E12} is a two sided ideal of T2.
    const Subspace j = Subspace::from_rows(t.dim, {unit_vec(t.dim, t.label_index("E12").value())});
    CHECK(check_ideal(t, j).outcome == Outcome::certified);

    // span{E11} is not: E11 * E12 = E12 escapes.
    const Subspace bad = Subspace::from_rows(t.dim, {unit_vec(t.dim, t.label_index("E11").value())});
    const Certificate cert = check_ideal(t, bad);
    CHECK(cert.outcome == Outcome::refuted);
    CHECK_FALSE(cert.witness_pair.empty());

    // The whole algebra is always an ideal.
    CHECK(check_ideal(t, Subspace::full(t.dim)).outcome == Outcome::certified);
}

TEST_CASE("ideal inside the idempotent span") {
    const Algebra t = triangular_algebra(2);
    const Subspace j = Subspace::from_rows(t.dim, {unit_vec(t.dim, t.label_index("E12").value())});
    const Certificate cert = check_ideal_in_span(t, j, standard_family(t));
    CHECK(cert.outcome == Outcome::certified);
}

TEST_CASE("validate_ideal rejects non ideals") {
    const Algebra t = triangular_algebra(2);
    const Subspace bad = Subspace::from_rows(t.dim, {unit_vec(t.dim, t.label_index("E11").value())});
    CHECK_THROWS_AS(validate_ideal(t, bad), std::invalid_argument);
}

TEST_CASE("default family falls back to empty without unit metadata") {
    Algebra a = matrix_algebra(2);
    a.units.reset();
    CHECK(default_family(a).elements.empty());
    CHECK(default_family(matrix_algebra(2)).elements.size() == 4);
}
