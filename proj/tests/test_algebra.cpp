#include "doctest.h"
#include "zpdlab/algebra.hpp"

#include <stdexcept>

using namespace zpdlab;

TEST_CASE("builders produce verified algebras") {
    for (int n = 1; n <= 3; ++n) {
        const Algebra full = matrix_algebra(n);
        CHECK(full.dim == n * n);
        CHECK(verify_algebra(full).outcome == Outcome::certified);

        const Algebra tri = triangular_algebra(n);
        CHECK(tri.dim == n * (n + 1) / 2);
        CHECK(verify_algebra(tri).outcome == Outcome::certified);
    }
    const Algebra blk = block_triangular({2, 1});
    CHECK(blk.dim == 7);
    CHECK(verify_algebra(blk).outcome == Outcome::certified);
}

TEST_CASE("full matrix algebra is the one-block triangular case") {
    const Algebra a = matrix_algebra(2);
    const Algebra b = block_triangular({2});
    REQUIRE(a.dim == b.dim);
    CHECK(a.structure == b.structure);
    CHECK(vec_eq(a.unit, b.unit));
    CHECK(a.labels == b.labels);
}

TEST_CASE("matrix unit products") {
    const Algebra a = matrix_algebra(2);
    const int e11 = a.label_index("E11").value(), e12 = a.label_index("E12").value();
    const int e21 = a.label_index("E21").value(), e22 = a.label_index("E22").value();

    CHECK(vec_eq(a.basis_product(e11, e12), unit_vec(a.dim, e12)));
    CHECK(vec_eq(a.basis_product(e12, e21), unit_vec(a.dim, e11)));
    CHECK(vec_eq(a.basis_product(e12, e12), zero_vec(a.dim)));
    CHECK(vec_eq(a.basis_product(e21, e11), unit_vec(a.dim, e21)));
    CHECK(vec_eq(a.basis_product(e22, e11), zero_vec(a.dim)));

    // Jordan product E12 o E21 = E11 + E22 = 1.
    CHECK(vec_eq(jordan(a, unit_vec(a.dim, e12), unit_vec(a.dim, e21)), a.unit));
}

TEST_CASE("upper triangular algebra kills lower products") {
    const Algebra t = triangular_algebra(2);
    CHECK(t.dim == 3);
    const int e12 = t.label_index("E12").value();
    // E12 * E12 = 0 and E12 is not invertible against anything below.
    CHECK(vec_eq(t.basis_product(e12, e12), zero_vec(t.dim)));
    CHECK(verify_algebra(t).outcome == Outcome::certified);
}

TEST_CASE("multiplication matrices realize the product") {
    const Algebra a = matrix_algebra(2);
    const Vec x = unit_vec(a.dim, a.label_index("E12").value());
    const Vec y = unit_vec(a.dim, a.label_index("E21").value());
    CHECK(vec_eq(left_mult_matrix(a, x).apply(y), multiply(a, x, y)));
    CHECK(vec_eq(right_mult_matrix(a, y).apply(x), multiply(a, x, y)));
    CHECK(vec_eq(left_mult_matrix(a, a.unit).apply(x), x));
}

TEST_CASE("verification refutes broken structure") {
    Algebra a = matrix_algebra(2);
    // Corrupt one structure constant; associativity must fail.
    a.structure[(std::size_t)((0 * a.dim + 1) * a.dim + 2)] = Scalar(1);
    const Certificate cert = verify_algebra(a);
    CHECK(cert.outcome == Outcome::refuted);
    CHECK_FALSE(cert.detail.empty());
}

TEST_CASE("verification refutes broken unit") {
    Algebra a = triangular_algebra(2);
    a.unit = zero_vec(a.dim);
    CHECK(verify_algebra(a).outcome == Outcome::refuted);
}

TEST_CASE("regular bimodule") {
    const Algebra a = matrix_algebra(2);
    const Bimodule m = regular_bimodule(a);
    CHECK(m.dim == a.dim);
    CHECK(verify_bimodule(a, m).outcome == Outcome::certified);

    const Vec x = unit_vec(a.dim, 1), y = unit_vec(a.dim, 2);
    CHECK(vec_eq(act_left(m, x, y), multiply(a, x, y)));
    CHECK(vec_eq(act_right(m, y, x), multiply(a, y, x)));
}

TEST_CASE("ambient matrix bimodule over a block triangular algebra") {
    const Algebra a = block_triangular({1, 1});  // T2 inside M2
    REQUIRE(a.units.has_value());
    const Bimodule m = ambient_matrix_bimodule(a);
    CHECK(m.dim == 4);
    CHECK(verify_bimodule(a, m).outcome == Outcome::certified);

    // In M2: E11 * E21 = 0 from the left, E21 * E11 = E21 from the right.
    const int n = a.units->ambient;
    const auto mu = [&](int r, int c) { return r * n + c; };
    const Vec e11 = unit_vec(a.dim, a.label_index("E11").value());
    CHECK(vec_eq(act_left(m, e11, unit_vec(m.dim, mu(1, 0))), zero_vec(m.dim)));
    CHECK(vec_eq(act_right(m, unit_vec(m.dim, mu(1, 0)), e11), unit_vec(m.dim, mu(1, 0))));
}

TEST_CASE("one dimensional bimodule with asymmetric actions") {
    const RemarkSetting rs = remark_bimodule();
    CHECK(rs.algebra.dim == 3);
    CHECK(rs.bimodule.dim == 1);
    CHECK(verify_bimodule(rs.algebra, rs.bimodule).outcome == Outcome::certified);

    const Vec m0 = unit_vec(1, 0);
    const Vec e11 = unit_vec(3, rs.algebra.label_index("E11").value());
    const Vec e22 = unit_vec(3, rs.algebra.label_index("E22").value());
    // Left action through E22, right action through E11.
    CHECK(vec_eq(act_left(rs.bimodule, e22, m0), m0));
    CHECK(vec_eq(act_left(rs.bimodule, e11, m0), zero_vec(1)));
    CHECK(vec_eq(act_right(rs.bimodule, m0, e11), m0));
    CHECK(vec_eq(act_right(rs.bimodule, m0, e22), zero_vec(1)));
}

TEST_CASE("bimodule verification refutes corrupted actions") {
    const Algebra a = triangular_algebra(2);
    Bimodule m = regular_bimodule(a);
    m.left[(std::size_t)((0 * m.dim + 1) * m.dim + 2)] += Scalar(1);
    CHECK(verify_bimodule(a, m).outcome == Outcome::refuted);
}

TEST_CASE("linear map vectorization round trips") {
    LinearMap f;
    f.src_dim = 2;
    f.tgt_dim = 3;
    f.mat = Matrix(3, 2);
    f.mat(0, 0) = Scalar::i();
    f.mat(2, 1) = Scalar::rational(1, 2);
    const Vec v = f.vectorize();
    CHECK((int)v.size() == 6);
    const LinearMap g = LinearMap::from_vector(2, 3, v);
    CHECK(f == g);
}

TEST_CASE("bilinear map vectorization round trips") {
    BilinearMap phi = BilinearMap::zero(2, 3);
    phi.at(0, 1, 2) = Scalar(5);
    phi.at(1, 1, 0) = Scalar::i();
    const Vec v = phi.vectorize();
    const BilinearMap psi = BilinearMap::from_vector(2, 3, v);
    CHECK(vec_eq(phi.eval({Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}),
                 psi.eval({Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)})));
    CHECK(phi.coeff == psi.coeff);
}

TEST_CASE("jordan and bracket helpers agree with definitions") {
    const Algebra a = matrix_algebra(2);
    const Bimodule m = regular_bimodule(a);
    const Vec x = unit_vec(4, 1), y = unit_vec(4, 2), w = unit_vec(4, 0);

    CHECK(vec_eq(module_jordan(m, x, y), vadd(act_left(m, x, y), act_right(m, y, x))));
    CHECK(vec_eq(bracket_amb(m, x, w, y),
                 vadd(act_right(m, act_left(m, x, w), y), act_left(m, y, act_right(m, w, x)))));
    CHECK(vec_eq(bracket_abm(m, x, y, w),
                 vadd(act_left(m, multiply(a, x, y), w), act_right(m, act_right(m, w, y), x))));
}
