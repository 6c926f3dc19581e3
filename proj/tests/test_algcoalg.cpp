#include "doctest.h"

#include "cotorlab/constructors.hpp"
#include "cotorlab/instances.hpp"
#include "support.hpp"

using namespace cotorlab;

namespace {

std::vector<Field> fields() { return {Field::prime(2), Field::prime(5), Field::rationals()}; }

std::vector<Algebra> sample_algebras(const Field& F) {
    return {ground_algebra(F),
            cyclic_group_algebra(F, 2),
            cyclic_group_algebra(F, 3),
            cyclic_group_algebra(F, 4),
            klein_four_algebra(F),
            truncated_polynomial(F, 2),
            truncated_polynomial(F, 3, 2),
            matrix_algebra(F, 2),
            upper_triangular(F, 2),
            product(ground_algebra(F), ground_algebra(F)),
            tensor_product(truncated_polynomial(F, 2), cyclic_group_algebra(F, 2)),
            exterior_algebra(F, {1, 2})};
}

// e_i e_j computed by hand for k[x]/x^3: x^a x^b = x^{a+b} or 0.
Scalar truncated_mul(const Field& F, std::size_t a, std::size_t b, std::size_t c) {
    return (a + b == c) ? F.one() : F.zero();
}

}  // namespace

TEST_SUITE("algcoalg") {

TEST_CASE("constructor library produces valid algebras and dual coalgebras") {
    for (const Field& F : fields())
        for (const Algebra& a : sample_algebras(F)) {
            CAPTURE(F.name());
            CAPTURE(a.dim());
            CHECK(validate_algebra(a).ok());
            Coalgebra c = dual_coalgebra(a);
            CHECK(validate_coalgebra(c).ok());
            CHECK(testsupport::same_algebra(dual_algebra(c), a));
            CHECK(validate_algebra(opposite(a)).ok());
            CHECK(validate_algebra(enveloping(a)).ok());
        }
}

TEST_CASE("structure constants of k[x]/x^3") {
    Field F = Field::prime(5);
    Algebra a = truncated_polynomial(F, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) CHECK(a.mul(i, j, k) == truncated_mul(F, i, j, k));
    Coalgebra c = dual_coalgebra(a);
    // Delta(x^2*) = 1*(x)x^2* + x*(x)x* + x^2*(x)1*
    CHECK(c.comul(2, 0, 2) == F.one());
    CHECK(c.comul(2, 1, 1) == F.one());
    CHECK(c.comul(2, 2, 0) == F.one());
    CHECK(c.comul(2, 1, 0).is_zero());
}

TEST_CASE("setting x * 1 = 0 in k[x]/x^2 breaks only the right unit law") {
    Field F = Field::rationals();
    Algebra a = truncated_polynomial(F, 2);
    std::vector<Scalar> mul = a.structure_constants();
    mul[(1 * 2 + 0) * 2 + 1] = F.zero();
    Algebra bad(F, 2, mul, a.unit());
    ValidationReport rep = validate_algebra(bad);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.names("right-unit", {1}));
    CHECK_THROWS_AS(dual_coalgebra(bad), ValidationError);
}

TEST_CASE("corrupted matrix algebra: E_11 E_11 gains an E_00 term") {
    Field F = Field::prime(5);
    Algebra m2 = matrix_algebra(F, 2);
    std::vector<Scalar> mul = m2.structure_constants();
    mul[(3 * 4 + 3) * 4 + 0] = F.one();
    ValidationReport rep = validate_algebra(Algebra(F, 4, mul, m2.unit()));
    CHECK_FALSE(rep.ok());
    // (E00 E11) E11 = 0 but E00 (E11 E11) = E00
    CHECK(rep.names("associativity", {0, 3, 3}));
    CHECK(rep.names("associativity", {3, 3, 0}));
    CHECK_FALSE(rep.names("associativity", {3, 3, 3}));
}

TEST_CASE("coassociativity and counit failures are reported per basis element") {
    Field F = Field::prime(3);
    Coalgebra c = sphere_homology(F, 2);
    CHECK(validate_coalgebra(c).ok());
    std::vector<Scalar> comul = c.structure_constants();
    comul[(1 * 2 + 1) * 2 + 1] = F.one();  // Delta(y) gains y (x) y
    ValidationReport rep = validate_coalgebra(Coalgebra(F, 2, comul, c.counit(), {}, c.grading()));
    CHECK(rep.names("grading", {1, 1, 1}));
    Coalgebra bad_counit(F, 2, c.structure_constants(), {F.one(), F.one()});
    ValidationReport rep2 = validate_coalgebra(bad_counit);
    CHECK(rep2.names("left-counit", {1}));
    CHECK(rep2.names("right-counit", {1}));
}

TEST_CASE("tensor product of exterior algebras carries the Koszul sign") {
    Field Q = Field::rationals();
    Algebra e = exterior_algebra(Q, {1, 1});
    REQUIRE(e.dim() == 4);
    // basis 1, y, x, xy (x from the first factor); x y = xy, y x = -xy
    CHECK(e.mul(2, 1, 3) == Q.one());
    CHECK(e.mul(1, 2, 3) == Q.from_int(-1));
    CHECK(validate_algebra(e).ok());
    // over F_2 the sign disappears
    Algebra e2 = exterior_algebra(Field::prime(2), {1, 1});
    CHECK(e2.mul(1, 2, 3) == e2.mul(2, 1, 3));
}

TEST_CASE("dual coalgebra keeps degrees; grading violations are caught") {
    Field F = Field::prime(2);
    Algebra a = truncated_polynomial(F, 3, 2);
    CHECK(*a.grading() == std::vector<int>{0, 2, 4});
    Coalgebra c = dual_coalgebra(a);
    CHECK(*c.grading() == std::vector<int>{0, 2, 4});
    Algebra regraded = a.with_grading(std::vector<int>{0, 1, 3});
    ValidationReport rep = validate_algebra(regraded);
    CHECK(rep.names("grading", {1, 1, 2}));
    CHECK(validate_algebra(a.with_grading(std::vector<int>{0, -1, -2})).names("grading-negative", {1}));
}

TEST_CASE("change of basis gives an isomorphic algebra") {
    for (const Field& F : fields()) {
        Algebra a = klein_four_algebra(F);
        Matrix P = random_invertible(F, 4, 7);
        Algebra b = change_of_basis(a, P);
        CHECK(validate_algebra(b).ok());
        Algebra back = change_of_basis(b, inverse(P));
        CHECK(testsupport::same_algebra(back, a));
        CHECK(back.augmentation() == a.augmentation());
        Coalgebra c = change_of_basis(dual_coalgebra(a), P);
        CHECK(validate_coalgebra(c).ok());
    }
    CHECK_THROWS_AS(inverse(Matrix::from_ints(Field::rationals(), {{1, 2}, {2, 4}})), InputError);
}

TEST_CASE("enveloping algebra multiplies the second factor in reverse") {
    Field F = Field::prime(5);
    Algebra t = upper_triangular(F, 2);  // E00, E01, E11
    Algebra e = enveloping(t);
    // (a (x) b)(c (x) d) = ac (x) db, so (E00 (x) E01)(E01 (x) E00) = E01 (x) E01
    std::size_t n = t.dim();
    std::size_t lhs = 0 * n + 1, rhs = 1 * n + 0, out = 1 * n + 1;
    CHECK(e.mul(lhs, rhs, out) == F.one());
}

TEST_CASE("unipotent basis of k[Z/p^k] is the truncated polynomial algebra") {
    for (std::size_t p : {2u, 3u, 5u}) {
        Field F = Field::prime(static_cast<std::int64_t>(p));
        for (std::size_t n : {p, p * p}) {
            if (n > 9) continue;
            Algebra u = cyclic_group_algebra_unipotent(F, n);
            Algebra t = truncated_polynomial(F, n);
            CHECK(u.structure_constants() == t.structure_constants());
            CHECK(u.unit() == t.unit());
            CHECK(*u.augmentation() == *t.augmentation());
        }
    }
    // in characteristic 0 the algebra is semisimple, not local
    Algebra q = cyclic_group_algebra_unipotent(Field::rationals(), 2);
    CHECK(validate_algebra(q).ok());
    CHECK(q.mul(1, 1, 1) == Field::rationals().from_int(-2));
}

TEST_CASE("size mismatches throw") {
    Field F = Field::prime(2);
    CHECK_THROWS_AS(Algebra(F, 2, std::vector<Scalar>(7), Vector(2)), InputError);
    CHECK_THROWS_AS(Coalgebra(F, 2, std::vector<Scalar>(8), Vector(3)), InputError);
}

}
