#pragma once

#include <cstddef>
#include <vector>

#include "cotorlab/algebra.hpp"

namespace cotorlab {

/// The one-dimensional algebra k, augmented by the identity.
Algebra ground_algebra(const Field& F);
Coalgebra ground_coalgebra(const Field& F);

/// Group algebra from a multiplication table on {0, ..., n-1} with identity
/// 0; basis is the group elements, augmentation sends every element to 1.
Algebra group_algebra(const Field& F, const std::vector<std::vector<std::size_t>>& table);
/// k[Z/n] with basis g^0, ..., g^{n-1}.
Algebra cyclic_group_algebra(const Field& F, std::size_t n);
/// k[Z/n] in the basis u^i with u = g - 1. Over F_p with n = p^k this is
/// k[u]/u^n; the augmentation kills every u^i with i > 0.
Algebra cyclic_group_algebra_unipotent(const Field& F, std::size_t n);
/// k[Z/2 x Z/2], element (a, b) at index 2a + b.
Algebra klein_four_algebra(const Field& F);

/// k[x]/x^n with basis 1, x, ..., x^{n-1}, augmentation x -> 0. When
/// degree_of_x is positive the algebra is graded with deg x^i = i * degree.
Algebra truncated_polynomial(const Field& F, std::size_t n, int degree_of_x = 0);

/// M_n(k), matrix unit E_ij at index i*n + j.
Algebra matrix_algebra(const Field& F, std::size_t n);
/// Upper triangular n x n matrices (the path algebra of the linearly
/// oriented A_n quiver), basis E_ij with i <= j in row-major order.
Algebra upper_triangular(const Field& F, std::size_t n);

/// A x B with basis (e_i, 0) followed by (0, f_j). Augmentation from the
/// first factor when it has one.
Algebra product(const Algebra& a, const Algebra& b);
/// A (x) B with basis e_i (x) f_j at i * dim B + j and the Koszul sign
/// (e_i (x) f_j)(e_k (x) f_l) = (-1)^{|f_j||e_k|} e_i e_k (x) f_j f_l.
Algebra tensor_product(const Algebra& a, const Algebra& b);
/// Exterior algebra on generators of the given (positive) degrees, as the
/// graded tensor product of the Lambda(x_i). Over a field of characteristic
/// other than 2, odd-degree generators anticommute.
Algebra exterior_algebra(const Field& F, const std::vector<int>& degrees);

/// H_*(S^n; k): basis 1 (degree 0) and a primitive y (degree n).
Coalgebra sphere_homology(const Field& F, int n);

}  // namespace cotorlab
