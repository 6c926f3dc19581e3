#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cotorlab/algebra.hpp"

namespace cotorlab {

using Grading = std::optional<std::vector<int>>;

/// Left A-module: action(i) is the matrix of m -> e_i m.
///
/// Module gradings are cohomological: action(i) raises degree by deg(e_i).
class LeftModule {
  public:
    /// Throws InputError unless there is one dim x dim matrix per basis
    /// element of the algebra, all over the algebra's field.
    LeftModule(Algebra algebra, std::vector<Matrix> action, Grading grading = std::nullopt);

    const Algebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }
    const Grading& grading() const { return grading_; }
    bool is_graded() const { return grading_.has_value(); }
    int degree(std::size_t m) const { return grading_ ? (*grading_)[m] : 0; }

    friend bool operator==(const LeftModule&, const LeftModule&) = default;

  private:
    Algebra algebra_;
    std::size_t dim_;
    std::vector<Matrix> action_;
    Grading grading_;
};

/// Right A-module: action(i) is the matrix of n -> n e_i, so the action of
/// e_i e_j is action(j) * action(i).
class RightModule {
  public:
    RightModule(Algebra algebra, std::vector<Matrix> action, Grading grading = std::nullopt);

    const Algebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    const std::vector<Matrix>& actions() const { return action_; }
    const Grading& grading() const { return grading_; }
    bool is_graded() const { return grading_.has_value(); }
    int degree(std::size_t m) const { return grading_ ? (*grading_)[m] : 0; }

    friend bool operator==(const RightModule&, const RightModule&) = default;

  private:
    Algebra algebra_;
    std::size_t dim_;
    std::vector<Matrix> action_;
    Grading grading_;
};

class Bimodule {
  public:
    Bimodule(Algebra algebra, std::vector<Matrix> left, std::vector<Matrix> right,
             Grading grading = std::nullopt);

    const Algebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Matrix& right(std::size_t i) const { return right_[i]; }
    const std::vector<Matrix>& lefts() const { return left_; }
    const std::vector<Matrix>& rights() const { return right_; }
    const Grading& grading() const { return grading_; }
    bool is_graded() const { return grading_.has_value(); }
    int degree(std::size_t m) const { return grading_ ? (*grading_)[m] : 0; }

    friend bool operator==(const Bimodule&, const Bimodule&) = default;

  private:
    Algebra algebra_;
    std::size_t dim_;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
    Grading grading_;
};

/// Right C-comodule, Delta(b_m) = sum rho(m, m', k) b_m' (x) c_k.
/// Gradings are homological: deg b_m = deg b_m' + deg c_k on the support.
class RightComodule {
  public:
    /// coaction is flattened as (m * dim + m') * dim C + k.
    RightComodule(Coalgebra coalgebra, std::size_t dim, std::vector<Scalar> coaction,
                  Grading grading = std::nullopt);

    const Coalgebra& coalgebra() const { return coalgebra_; }
    std::size_t dim() const { return dim_; }
    const Scalar& rho(std::size_t m, std::size_t mp, std::size_t k) const {
        return coaction_[(m * dim_ + mp) * coalgebra_.dim() + k];
    }
    const std::vector<Scalar>& coaction() const { return coaction_; }
    const Grading& grading() const { return grading_; }
    bool is_graded() const { return grading_.has_value(); }
    int degree(std::size_t m) const { return grading_ ? (*grading_)[m] : 0; }

    friend bool operator==(const RightComodule&, const RightComodule&) = default;

  private:
    Coalgebra coalgebra_;
    std::size_t dim_;
    std::vector<Scalar> coaction_;
    Grading grading_;
};

/// Left C-comodule, Delta(b_n) = sum lambda(n, k, n') c_k (x) b_n'.
class LeftComodule {
  public:
    /// coaction is flattened as (n * dim C + k) * dim + n'.
    LeftComodule(Coalgebra coalgebra, std::size_t dim, std::vector<Scalar> coaction,
                 Grading grading = std::nullopt);

    const Coalgebra& coalgebra() const { return coalgebra_; }
    std::size_t dim() const { return dim_; }
    const Scalar& lambda(std::size_t n, std::size_t k, std::size_t np) const {
        return coaction_[(n * coalgebra_.dim() + k) * dim_ + np];
    }
    const std::vector<Scalar>& coaction() const { return coaction_; }
    const Grading& grading() const { return grading_; }
    bool is_graded() const { return grading_.has_value(); }
    int degree(std::size_t m) const { return grading_ ? (*grading_)[m] : 0; }

    friend bool operator==(const LeftComodule&, const LeftComodule&) = default;

  private:
    Coalgebra coalgebra_;
    std::size_t dim_;
    std::vector<Scalar> coaction_;
    Grading grading_;
};

ValidationReport validate_module(const LeftModule& m);
ValidationReport validate_module(const RightModule& m);
/// Also reports non-commuting pairs as ("commutation", {i, j}).
ValidationReport validate_module(const Bimodule& b);
ValidationReport validate_comodule(const RightComodule& m);
ValidationReport validate_comodule(const LeftComodule& n);

/// rho(m, m', i) = action(i)(m', m), over dual_coalgebra(A). Gradings are
/// negated. Throws ValidationError on an invalid module.
RightComodule module_to_comodule(const LeftModule& m);
/// Inverse of module_to_comodule, over dual_algebra(C).
LeftModule comodule_to_module(const RightComodule& m);
/// lambda(n, i, n') = action(i)(n', n).
LeftComodule module_to_comodule(const RightModule& n);
RightModule comodule_to_module(const LeftComodule& n);

/// Hom_k(M, k) with (f a)(m) = f(a m): action(i) = transpose.
RightModule dual_right_module(const LeftModule& m);
LeftModule dual_left_module(const RightModule& n);

/// DM with (Delta f)(m) = (f (x) 1)(Delta m): lambda(m', k, m) = rho(m, m', k).
LeftComodule contragredient(const RightComodule& m);
/// Coaction on M built from the transposed action of dual_right_module(m),
/// i.e. rho(m, m', i) = (b^m . e_i)(b_m').
RightComodule coaction_from_dual(const LeftModule& m);

/// M (x) N with e_i acting on the left factor and on the right factor from
/// the right; basis (m, n) at m * dim N + n.
Bimodule tensor_bimodule(const LeftModule& m, const RightModule& n);

/// Basis of Hom_A(M, N) as dim N x dim M matrices.
std::vector<Matrix> module_homs(const LeftModule& m, const LeftModule& n);
/// f : M -> M' with (f (x) 1) rho = rho' f.
bool is_comodule_map(const Matrix& f, const RightComodule& m, const RightComodule& mp);

/// Constructors.
LeftModule regular_left_module(const Algebra& a);
RightModule regular_right_module(const Algebra& a);
Bimodule regular_bimodule(const Algebra& a);
/// One-dimensional module through an algebra map chi : A -> k.
LeftModule character_left_module(const Algebra& a, const Vector& chi, int degree = 0);
RightModule character_right_module(const Algebra& a, const Vector& chi, int degree = 0);
/// Character modules through the designated augmentation; InputError if
/// the algebra has none.
LeftModule trivial_left_module(const Algebra& a);
RightModule trivial_right_module(const Algebra& a);
/// k^n as column vectors (left) or row vectors (right) over matrix_algebra(n).
LeftModule column_module(const Algebra& matrices, std::size_t n);
RightModule row_module(const Algebra& matrices, std::size_t n);

/// C as a comodule over itself through Delta.
RightComodule regular_right_comodule(const Coalgebra& c);
LeftComodule regular_left_comodule(const Coalgebra& c);
/// One-dimensional comodule on a grouplike g (Delta g = g (x) g, eps g = 1).
/// Throws InputError when g is not grouplike.
RightComodule grouplike_right_comodule(const Coalgebra& c, const Vector& g, int degree = 0);
LeftComodule grouplike_left_comodule(const Coalgebra& c, const Vector& g, int degree = 0);

LeftModule direct_sum(const LeftModule& a, const LeftModule& b);
RightModule direct_sum(const RightModule& a, const RightModule& b);
/// Action in the basis given by the columns of P: P^{-1} action P.
LeftModule conjugate(const LeftModule& m, const Matrix& P);
RightModule conjugate(const RightModule& m, const Matrix& P);
/// M / S for an invariant subspace S spanned by the columns of `sub`.
/// Throws InputError when S is not invariant.
LeftModule quotient(const LeftModule& m, const Matrix& sub);
RightModule quotient(const RightModule& m, const Matrix& sub);
LeftModule submodule(const LeftModule& m, const Matrix& sub);
RightModule submodule(const RightModule& m, const Matrix& sub);

LeftModule with_grading(const LeftModule& m, Grading g);
RightModule with_grading(const RightModule& m, Grading g);

}  // namespace cotorlab
