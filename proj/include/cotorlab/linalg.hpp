#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cotorlab/matrix.hpp"

namespace cotorlab {

/// Raised when a structural invariant (d∘d = 0, chain-map property,
/// rank-nullity) fails on a constructed object.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space of m, cols(m) - rank(m) of them.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Reduced row echelon form together with the pivot column of each
/// nonzero row (zero rows are dropped).
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon rref(const Matrix& m);

/// Indices of a maximal linearly independent subset of the columns,
/// chosen greedily from the left.
std::vector<std::size_t> independent_columns(const Matrix& m);

/// A finite cochain complex C^{n0} -> C^{n0+1} -> ... with one stored
/// differential between each pair of consecutive degrees.
class CochainComplex {
  public:
    /// dims[i] is the dimension in degree first_degree + i and
    /// differentials[i] maps degree first_degree+i to first_degree+i+1.
    /// Throws InputError on shape mismatch and InvariantViolation when two
    /// consecutive differentials do not compose to zero.
    CochainComplex(Field field, int first_degree, std::vector<std::size_t> dims,
                   std::vector<Matrix> differentials);

    const Field& field() const { return field_; }
    int first_degree() const { return first_; }
    int last_degree() const { return first_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int n) const;
    /// d^n : C^n -> C^{n+1}; nullptr at the top degree.
    const Matrix* differential(int n) const;
    const std::vector<std::size_t>& dims() const { return dims_; }

  private:
    Field field_;
    int first_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> diffs_;
};

/// dim ker d^n - rank d^{n-1}; missing boundary differentials are zero maps.
/// Throws InputError when n is outside the stored range.
std::size_t cohomology_dim(const CochainComplex& c, int n);

/// Cohomology dimensions for every stored degree, each rank computed once.
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);

/// Representative cocycles (as columns) whose classes form a basis of H^n.
Matrix cohomology_basis(const CochainComplex& c, int n);

}  // namespace cotorlab
