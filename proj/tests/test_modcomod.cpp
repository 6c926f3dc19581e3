#include "doctest.h"

#include "cotorlab/homalg.hpp"
#include "cotorlab/instances.hpp"
#include "support.hpp"

using namespace cotorlab;
using testsupport::same_module;

namespace {

// rho applied to a vector v of M: coefficients of b_m' (x) c_k at m' * dim C + k.
Vector coact(const RightComodule& m, const Vector& v) {
    const Field& F = m.coalgebra().field();
    std::size_t dc = m.coalgebra().dim();
    Vector out(m.dim() * dc, F.zero());
    for (std::size_t x = 0; x < m.dim(); ++x) {
        if (v[x].is_zero()) continue;
        for (std::size_t y = 0; y < m.dim(); ++y)
            for (std::size_t k = 0; k < dc; ++k)
                out[y * dc + k] = F.add(out[y * dc + k], F.mul(v[x], m.rho(x, y, k)));
    }
    return out;
}

}  // namespace

TEST_SUITE("modcomod") {

TEST_CASE("instance library is large, valid and within size bounds") {
    auto all = standard_instances();
    CHECK(all.size() >= 25);
    for (const auto& inst : all) {
        CAPTURE(inst.name);
        CHECK(validate_module(inst.left).ok());
        CHECK(validate_module(inst.right).ok());
        CHECK(inst.left.algebra().dim() <= 4);
        CHECK(inst.left.dim() <= 3);
        CHECK(inst.right.dim() <= 3);
    }
}

TEST_CASE("module -> comodule -> module is the identity") {
    for (const auto& inst : standard_instances()) {
        CAPTURE(inst.name);
        RightComodule rc = module_to_comodule(inst.left);
        CHECK(validate_comodule(rc).ok());
        CHECK(same_module(comodule_to_module(rc), inst.left));
        LeftComodule lc = module_to_comodule(inst.right);
        CHECK(validate_comodule(lc).ok());
        CHECK(same_module(comodule_to_module(lc), inst.right));
        CHECK(module_to_comodule(comodule_to_module(rc)) == rc);
    }
}

TEST_CASE("coaction from the dual action equals the translated coaction") {
    for (const auto& inst : standard_instances()) {
        CAPTURE(inst.name);
        CHECK(coaction_from_dual(inst.left) == module_to_comodule(inst.left));
        // the dual of the right module is a left module too
        LeftModule d = dual_left_module(inst.right);
        CHECK(coaction_from_dual(d) == module_to_comodule(d));
    }
}

TEST_CASE("coaction of the unit on the regular module is the trace element") {
    for (const Field& F : {Field::prime(2), Field::prime(5), Field::rationals()}) {
        for (const Algebra& a : {cyclic_group_algebra(F, 3), matrix_algebra(F, 2),
                                 product(ground_algebra(F), truncated_polynomial(F, 2)),
                                 upper_triangular(F, 2)}) {
            RightComodule rc = module_to_comodule(regular_left_module(a));
            CHECK(coact(rc, a.unit()) == a.canonical_element());
        }
    }
}

TEST_CASE("translation negates module degrees") {
    Field F = Field::prime(2);
    Algebra a = truncated_polynomial(F, 2, 1);
    LeftModule reg = with_grading(regular_left_module(a), std::vector<int>{0, 1});
    REQUIRE(validate_module(reg).ok());
    RightComodule rc = module_to_comodule(reg);
    CHECK(*rc.grading() == std::vector<int>{0, -1});
    CHECK(validate_comodule(rc).ok());
}

TEST_CASE("contragredient of the contragredient") {
    Field F = Field::prime(5);
    Algebra a = upper_triangular(F, 2);
    RightComodule rc = module_to_comodule(regular_left_module(a));
    LeftComodule dn = contragredient(rc);
    CHECK(validate_comodule(dn).ok());
    for (std::size_t m = 0; m < rc.dim(); ++m)
        for (std::size_t mp = 0; mp < rc.dim(); ++mp)
            for (std::size_t k = 0; k < a.dim(); ++k) CHECK(dn.lambda(mp, k, m) == rc.rho(m, mp, k));
    // the contragredient of M corresponds to the dual module DM
    CHECK(same_module(comodule_to_module(dn), dual_right_module(regular_left_module(a))));
}

TEST_CASE("grouplike comodules") {
    Field F = Field::prime(3);
    Coalgebra c = dual_coalgebra(cyclic_group_algebra(F, 3));
    Vector sum(3, F.one());
    // the sum of the dual basis is the augmentation, a grouplike of DA
    RightComodule g = grouplike_right_comodule(c, sum);
    CHECK(validate_comodule(g).ok());
    CHECK(same_module(comodule_to_module(g), trivial_left_module(cyclic_group_algebra(F, 3))));
    CHECK_THROWS_AS(grouplike_right_comodule(c, Vector{F.one(), F.zero(), F.zero()}), InputError);
    CHECK_THROWS_AS(grouplike_left_comodule(c, Vector{F.one(), F.one(), F.zero()}), InputError);
}

TEST_CASE("invalid modules are named by the failing pair") {
    Field F = Field::prime(2);
    Algebra a = truncated_polynomial(F, 2);
    // x acting as the identity: x * x = 0 but id * id = id
    LeftModule bad(a, {Matrix::identity(F, 1), Matrix::identity(F, 1)});
    ValidationReport rep = validate_module(bad);
    CHECK(rep.names("action", {1, 1}));
    CHECK_THROWS_AS(module_to_comodule(bad), ValidationError);
    Bimodule noncomm(matrix_algebra(F, 2), regular_left_module(matrix_algebra(F, 2)).actions(),
                     regular_left_module(matrix_algebra(F, 2)).actions());
    CHECK(validate_module(noncomm).names("commutation", {0, 1}));
}

TEST_CASE("comodule validation reports coassociativity and counit") {
    Field F = Field::prime(2);
    Coalgebra c = dual_coalgebra(truncated_polynomial(F, 2));
    RightComodule good = module_to_comodule(trivial_left_module(truncated_polynomial(F, 2)));
    std::vector<Scalar> co = good.coaction();
    co[0] = F.zero();  // rho(0,0,1*) = 0 kills the counit law
    ValidationReport rep = validate_comodule(RightComodule(c, 1, co));
    CHECK(rep.names("counit", {0}));
}

TEST_CASE("module maps, quotients, submodules and conjugation") {
    Field Q = Field::rationals();
    Algebra a = truncated_polynomial(Q, 3);
    LeftModule reg = regular_left_module(a);
    // End_A(A) = A
    CHECK(module_homs(reg, reg).size() == 3);
    Matrix tail = Matrix::from_columns(Q, 3, {{Q.zero(), Q.zero(), Q.one()}});
    LeftModule quo = quotient(reg, tail);
    LeftModule sub = submodule(reg, tail);
    CHECK(quo.dim() == 2);
    CHECK(sub.dim() == 1);
    CHECK(validate_module(quo).ok());
    CHECK(validate_module(sub).ok());
    Matrix head = Matrix::from_columns(Q, 3, {{Q.one(), Q.zero(), Q.zero()}});
    CHECK_THROWS_AS(quotient(reg, head), InputError);
    Matrix P = random_invertible(Q, 3, 11);
    LeftModule conj = conjugate(reg, P);
    CHECK(validate_module(conj).ok());
    auto isos = module_homs(reg, conj);
    CHECK(isos.size() == 3);
    CHECK(module_homs(quo, sub).size() == 1);
    CHECK(direct_sum(quo, sub).dim() == 3);
}

TEST_CASE("comodule maps") {
    Field F = Field::prime(5);
    Algebra a = cyclic_group_algebra(F, 2);
    RightComodule rc = module_to_comodule(regular_left_module(a));
    CHECK(is_comodule_map(Matrix::identity(F, 2), rc, rc));
    CHECK_FALSE(is_comodule_map(Matrix::from_ints(F, {{1, 0}, {0, 0}}), rc, rc));
}

}
