#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cotorlab/matrix.hpp"
#include "cotorlab/validation.hpp"

namespace cotorlab {

/// Finite-dimensional associative unital algebra given by structure constants
/// e_i * e_j = sum_k mul(i, j, k) e_k.
///
/// Immutable; copies share the underlying tensors. An optional grading gives
/// each basis element a (cohomological, nonnegative) degree; ungraded
/// algebras behave as if concentrated in degree 0. An optional augmentation
/// is a designated algebra character A -> k (used for epsilon-twisted
/// bimodules).
class Algebra {
  public:
    /// Throws InputError on inconsistent sizes. Does not check the algebra
    /// axioms: see validate_algebra.
    Algebra(Field field, std::size_t dim, std::vector<Scalar> mul, Vector unit,
            std::vector<std::string> labels = {},
            std::optional<std::vector<int>> grading = std::nullopt,
            std::optional<Vector> augmentation = std::nullopt);

    const Field& field() const { return d_->field; }
    std::size_t dim() const { return d_->dim; }
    const Scalar& mul(std::size_t i, std::size_t j, std::size_t k) const {
        return d_->mul[(i * d_->dim + j) * d_->dim + k];
    }
    const std::vector<Scalar>& structure_constants() const { return d_->mul; }
    const Vector& unit() const { return d_->unit; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const std::optional<std::vector<int>>& grading() const { return d_->grading; }
    bool is_graded() const { return d_->grading.has_value(); }
    int degree(std::size_t i) const { return d_->grading ? (*d_->grading)[i] : 0; }
    const std::optional<Vector>& augmentation() const { return d_->augmentation; }

    Vector multiply(const Vector& a, const Vector& b) const;
    /// Matrix of x -> e_i x.
    Matrix left_multiplication(std::size_t i) const;
    /// Matrix of x -> x e_i.
    Matrix right_multiplication(std::size_t i) const;
    /// The trace element sum_i e_i (x) e^i of A (x) DA, lexicographic basis.
    Vector canonical_element() const;

    Algebra with_grading(std::optional<std::vector<int>> grading) const;
    Algebra with_augmentation(std::optional<Vector> augmentation) const;
    Algebra with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Algebra& a, const Algebra& b);
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

  private:
    struct Data {
        Field field;
        std::size_t dim;
        std::vector<Scalar> mul;
        Vector unit;
        std::vector<std::string> labels;
        std::optional<std::vector<int>> grading;
        std::optional<Vector> augmentation;
    };
    explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Finite-dimensional coassociative counital coalgebra,
/// Delta(c_k) = sum_{i,j} comul(k, i, j) c_i (x) c_j.
///
/// Gradings are homological (comodule side) and nonnegative.
class Coalgebra {
  public:
    Coalgebra(Field field, std::size_t dim, std::vector<Scalar> comul, Vector counit,
              std::vector<std::string> labels = {},
              std::optional<std::vector<int>> grading = std::nullopt);

    const Field& field() const { return d_->field; }
    std::size_t dim() const { return d_->dim; }
    const Scalar& comul(std::size_t k, std::size_t i, std::size_t j) const {
        return d_->comul[(k * d_->dim + i) * d_->dim + j];
    }
    const std::vector<Scalar>& structure_constants() const { return d_->comul; }
    const Vector& counit() const { return d_->counit; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const std::optional<std::vector<int>>& grading() const { return d_->grading; }
    bool is_graded() const { return d_->grading.has_value(); }
    int degree(std::size_t i) const { return d_->grading ? (*d_->grading)[i] : 0; }

    Coalgebra with_grading(std::optional<std::vector<int>> grading) const;

    friend bool operator==(const Coalgebra& a, const Coalgebra& b);
    friend bool operator!=(const Coalgebra& a, const Coalgebra& b) { return !(a == b); }

  private:
    struct Data {
        Field field;
        std::size_t dim;
        std::vector<Scalar> comul;
        Vector counit;
        std::vector<std::string> labels;
        std::optional<std::vector<int>> grading;
    };
    explicit Coalgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Associativity, unit laws and (if graded) homogeneity and nonnegativity.
/// Associativity failures name the triple (i, j, l).
ValidationReport validate_algebra(const Algebra& a);
/// Coassociativity, counit laws and (if graded) homogeneity.
ValidationReport validate_coalgebra(const Coalgebra& c);

/// DA: comul(k,i,j) = mul(i,j,k), counit = unit. Dual basis element e^i keeps
/// the degree of e_i. Throws ValidationError on an invalid algebra.
Coalgebra dual_coalgebra(const Algebra& a);
/// DC: mul(i,j,k) = comul(k,i,j), unit = counit.
Algebra dual_algebra(const Coalgebra& c);

Algebra opposite(const Algebra& a);
/// A (x) A^op with basis e_i (x) e_j at index i*dim + j.
Algebra enveloping(const Algebra& a);

/// Re-express the algebra in the basis given by the columns of `basis`
/// (old coordinates). Gradings and augmentation follow along; the caller is
/// responsible for choosing homogeneous columns in the graded case.
Algebra change_of_basis(const Algebra& a, const Matrix& basis,
                        std::optional<std::vector<int>> new_grading = std::nullopt);
Coalgebra change_of_basis(const Coalgebra& c, const Matrix& basis,
                          std::optional<std::vector<int>> new_grading = std::nullopt);

/// Matrix inverse; throws InputError when singular or not square.
Matrix inverse(const Matrix& m);

}  // namespace cotorlab
