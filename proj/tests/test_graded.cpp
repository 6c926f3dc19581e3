#include "doctest.h"

#include "cotorlab/graded.hpp"
#include "cotorlab/instances.hpp"
#include "oracle_bridge.hpp"

using namespace cotorlab;

namespace {

using Dims = std::vector<std::size_t>;

// Sum a graded table over internal degrees.
Dims collapse(const GradedTable& t) {
    Dims out;
    for (const auto& row : t.dims) {
        std::size_t s = 0;
        for (auto v : row) s += v;
        out.push_back(s);
    }
    return out;
}

DGCoalgebra sphere(const Field& F, int n) { return with_zero_differential(sphere_homology(F, n)); }

Vector first_basis_vector(const Coalgebra& c) {
    Vector v(c.dim(), c.field().zero());
    v[0] = c.field().one();
    return v;
}
DGRightComodule point_right(const Coalgebra& c) {
    return with_zero_differential(grouplike_right_comodule(c, first_basis_vector(c)));
}
DGLeftComodule point_left(const Coalgebra& c) {
    return with_zero_differential(grouplike_left_comodule(c, first_basis_vector(c)));
}

// Dual of k[x]/x^3 (x) Lambda(y), |x| = 2, |y| = 3, over F_3 with dx = y.
// Basis x^i y^j at 2i + j; the coalgebra differential is the transpose.
DGCoalgebra seven_sphere_model() {
    Field F = Field::prime(3);
    Algebra a = tensor_product(truncated_polynomial(F, 3, 2), exterior_algebra(F, {3}));
    MatrixBuilder d(F, 6, 6);
    d.set(2, 1, F.one());         // (x)* -> y*
    d.set(4, 3, F.from_int(2));   // (x^2)* -> 2 (xy)*
    return DGCoalgebra{dual_coalgebra(a), std::move(d).build()};
}

}  // namespace

TEST_SUITE("graded") {

TEST_CASE("exterior algebra on Sq^1 over F_2: the h_0 tower") {
    Field F = Field::prime(2);
    Algebra a = exterior_algebra(F, {1});
    GradedComparison g = compare_graded(trivial_left_module(a), trivial_right_module(a), 4, GradedWindow(0, 4));
    CHECK(g.pass());
    for (int n = 0; n <= 4; ++n)
        for (int t = 0; t <= 4; ++t) {
            CAPTURE(n);
            CAPTURE(t);
            CHECK(g.cotor.at(n, t) == (n == t ? 1u : 0u));
            CHECK(g.hochschild.at(n, -t) == (n == t ? 1u : 0u));
        }
}

TEST_CASE("graded tables refine the ungraded oracle values") {
    Field F = Field::prime(2);
    Algebra a = exterior_algebra(F, {1, 2});
    LeftModule m = trivial_left_module(a);
    RightModule n = trivial_right_module(a);
    RightComodule rc = module_to_comodule(m);
    LeftComodule lc = module_to_comodule(n);
    // internal degrees of an n-cochain are at most 2n here, so [0, 6] holds n <= 3
    GradedTable cot = graded_cotor_dims(rc, lc, 3, GradedWindow(0, 6));
    CHECK(collapse(cot) == bridge::cotor(rc, lc, 3));
    GradedTable hh = graded_hochschild_dims(a, tensor_bimodule(m, n), 3, GradedWindow(-6, 0));
    CHECK(collapse(hh) == bridge::hochschild(a, tensor_bimodule(m, n), 3));
    CHECK(compare_graded(m, n, 3, GradedWindow(0, 6)).pass());
}

TEST_CASE("degree-0 degenerations agree with the ungraded comparison") {
    for (const auto& inst : instance_library(Field::prime(5))) {
        CAPTURE(inst.name);
        GradedComparison g = compare_graded(inst.left, inst.right, 3, GradedWindow(0, 0));
        CHECK(g.pass());
        Comparison c = compare_cotor_hochschild(inst.left, inst.right, 3);
        CHECK(collapse(g.cotor) == c.cotor);
    }
}

TEST_CASE("shifted module degrees move the table") {
    Field F = Field::prime(2);
    Algebra a = truncated_polynomial(F, 2);
    LeftModule m = character_left_module(a, {F.one(), F.zero()}, 2);
    RightModule n = trivial_right_module(a);
    GradedComparison g = compare_graded(m, n, 2, GradedWindow(-2, -2));
    CHECK(g.pass());
    CHECK(g.cotor.at(0, -2) == 1);
    CHECK(g.hochschild.at(0, 2) == 1);
}

TEST_CASE("window that misses the support is an input error") {
    Field F = Field::prime(2);
    Algebra a = truncated_polynomial(F, 2);
    LeftModule m = character_left_module(a, {F.one(), F.zero()}, 3);
    CHECK_THROWS_AS(compare_graded(m, trivial_right_module(a), 1, GradedWindow(0, 0)), InputError);
    CHECK_THROWS_AS(GradedWindow(1, 0), InputError);
}

TEST_CASE("S^2 over F_2: Cotor_n(k, k) = 1 for n = 0..5, matching the loop space") {
    Field F = Field::prime(2);
    DGCoalgebra c = sphere(F, 2);
    REQUIRE(validate_dg(c).ok());
    DGComparison r = compare_dg(c, point_right(c.coalgebra), point_left(c.coalgebra), GradedWindow(0, 6));
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(r.cotor.at(n) == 1);
        CHECK(r.cotor.is_exact(n));
        CHECK(r.hochschild.at(-n) == 1);
    }
    CHECK(r.pass());
    CHECK(r.compared.size() >= 6);
}

TEST_CASE("S^3 over Q: loop homology in even degrees only") {
    Field Q = Field::rationals();
    DGCoalgebra c = sphere(Q, 3);
    DGComparison r = compare_dg(c, point_right(c.coalgebra), point_left(c.coalgebra), GradedWindow(0, 7));
    CHECK(r.pass());
    for (int n = 0; n <= 6; ++n) CHECK(r.cotor.at(n) == (n % 2 == 0 ? 1u : 0u));
}

TEST_CASE("nonzero differential: Lambda(x_2, y_3) dual with d c_3 = c_2 over F_2") {
    Field F = Field::prime(2);
    Coalgebra c = dual_coalgebra(exterior_algebra(F, {2, 3}));
    // basis 1, y3, x2, x2y3 (left factor major): d(y3*) = x2*
    MatrixBuilder d(F, 4, 4);
    d.set(2, 1, F.one());
    DGCoalgebra dc{c, std::move(d).build()};
    REQUIRE(validate_dg(dc).ok());
    Vector one{F.one(), F.zero(), F.zero(), F.zero()};
    DGRightComodule m = with_zero_differential(grouplike_right_comodule(c, one));
    DGLeftComodule n = with_zero_differential(grouplike_left_comodule(c, one));
    DGComparison r = compare_dg(dc, m, n, GradedWindow(0, 8));
    CHECK(r.pass());
    // the total complex is that of S^5: loop homology in degrees 0 and 4
    for (int k = 0; k <= 7; ++k) CHECK(r.cotor.at(k) == (k == 0 || k == 4 ? 1u : 0u));
}

TEST_CASE("ungraded coalgebra as a DG coalgebra concentrated in degree 0") {
    Field F = Field::prime(2);
    Algebra a = truncated_polynomial(F, 2);
    RightComodule m = module_to_comodule(trivial_left_module(a));
    LeftComodule n = module_to_comodule(trivial_right_module(a));
    DGCoalgebra c = with_zero_differential(m.coalgebra());
    TotalDims t = dg_cotor_dims(c, with_zero_differential(m), with_zero_differential(n), GradedWindow(-3, 0));
    for (int k = -2; k <= 0; ++k) {
        CHECK(t.at(k) == 1);
        CHECK(t.is_exact(k));
    }
    CHECK_FALSE(t.is_exact(-3));
}

TEST_CASE("DG validation catches co-Leibniz, degree and counit failures") {
    Field Q = Field::rationals();
    Coalgebra c = dual_coalgebra(exterior_algebra(Q, {2, 3}));
    MatrixBuilder d(Q, 4, 4);
    d.set(2, 1, Q.one());
    // dual to d(x2) = y3, which is not a derivation away from characteristic 2: d(x2 x2) = 2 x2 y3
    CHECK_FALSE(validate_dg(DGCoalgebra{c, std::move(d).build()}).ok());

    // a differential of the wrong degree
    MatrixBuilder bad(Q, 4, 4);
    bad.set(0, 2, Q.one());
    CHECK_FALSE(validate_dg(DGCoalgebra{c, std::move(bad).build()}).ok());

    // d(y) = 1 on H_*(S^1) has the right degree but eps d != 0
    DGCoalgebra s1 = sphere(Q, 1);
    MatrixBuilder top(Q, 2, 2);
    top.set(0, 1, Q.one());
    CHECK_FALSE(validate_dg(DGCoalgebra{s1.coalgebra, std::move(top).build()}).ok());
}

TEST_CASE("odd characteristic model of S^7: loop homology in degrees 0 and 6") {
    DGCoalgebra dc = seven_sphere_model();
    REQUIRE(validate_dg(dc).ok());
    DGAlgebra da = dg_dual_algebra(dc);
    CHECK(validate_dg(da).ok());
    const Coalgebra& c = dc.coalgebra;
    DGComparison r = compare_dg(dc, point_right(c), point_left(c), GradedWindow(0, 8));
    CHECK(r.pass());
    for (int n = 0; n <= 7; ++n) CHECK(r.cotor.at(n) == (n == 0 || n == 6 ? 1u : 0u));
}

TEST_CASE("regular DG comodule and the tensor bimodule") {
    DGCoalgebra dc = seven_sphere_model();
    const Coalgebra& c = dc.coalgebra;
    DGRightComodule reg{regular_right_comodule(c), dc.differential};
    CHECK(validate_dg(reg, dc).ok());
    CHECK_FALSE(validate_dg(with_zero_differential(regular_right_comodule(c)), dc).ok());
    DGLeftComodule lreg{regular_left_comodule(c), dc.differential};
    CHECK(validate_dg(lreg, dc).ok());
    DGLeftComodule pt = point_left(c);
    CHECK(validate_dg(pt, dc).ok());
    CHECK(validate_dg(dg_tensor_bimodule(reg, pt), dg_dual_algebra(dc)).ok());
    CHECK(validate_dg(dg_tensor_bimodule(reg, lreg), dg_dual_algebra(dc)).ok());
    // C box_C k = k: the regular comodule is acyclic for cotensor
    DGComparison r = compare_dg(dc, reg, pt, GradedWindow(-1, 7));
    CHECK(r.pass());
    for (int n = -1; n <= 6; ++n) CHECK(r.cotor.at(n) == (n == 0 ? 1u : 0u));
    // the same computation over a wide window exceeds the cell budget
    CHECK_THROWS_AS(compare_dg(dc, reg, pt, GradedWindow(-1, 12)), InputError);
}

TEST_CASE("coalgebra with a degree-1 element cannot be normalized") {
    Field F = Field::prime(2);
    DGCoalgebra c = sphere(F, 1);
    CHECK_THROWS_AS(compare_dg(c, point_right(c.coalgebra), point_left(c.coalgebra), GradedWindow(0, 2)),
                    InputError);
}

}
