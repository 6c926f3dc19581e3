#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cotorlab/homalg.hpp"

namespace cotorlab {

/// A_0 <- A_1 <- ... <- A_r. projections[i] is the dim A_i x dim A_{i+1}
/// matrix of the algebra map A_{i+1} -> A_i.
struct Tower {
    std::vector<Algebra> levels;
    std::vector<Matrix> projections;
    std::size_t top() const { return levels.size() - 1; }
    friend bool operator==(const Tower&, const Tower&) = default;
};

/// Reports "level" for an invalid level algebra (its violations follow with
/// prefix "level-"), and per projection i: "projection-shape", "surjective",
/// "multiplicative"(i, a, b), "unital".
ValidationReport validate_tower(const Tower& t);

/// k[Z/p^i] for i = 0 .. depth-1 in the group-element basis, g^j -> g^(j mod p^i).
Tower group_algebra_tower(const Field& F, std::size_t p, std::size_t depth);

/// Composite projection A_high -> A_low.
Matrix composite_projection(const Tower& t, std::size_t low, std::size_t high);

/// A bimodule declared at one level of a tower.
struct LevelBimodule {
    std::size_t level;
    Bimodule bimodule;
};

/// M with the right action through the augmentation of its algebra.
/// Throws InputError if the algebra has no augmentation.
Bimodule epsilon_twist(const LeftModule& m);

/// epsilon_twist at a level of a tower.
/// Throws InputError if that algebra has no augmentation or M lives elsewhere.
LevelBimodule epsilon_bimodule(const Tower& t, std::size_t level, const LeftModule& m);

/// f -> inclusion . f . P^{(x)n} as a matrix C^n(A_low, B_low) -> C^n(A_high, B_high).
/// The inclusion must be injective and intertwine the actions through the
/// composite projection P (InputError otherwise). Commutation with the
/// Hochschild differentials is checked (InvariantViolation).
Matrix induced_cochain_map(const Tower& t, const LevelBimodule& low, const LevelBimodule& high,
                           const Matrix& inclusion, int n);

/// Matrix of the map H^n(low) -> H^n(high) induced by a cochain map, in the
/// bases returned by cohomology_basis.
Matrix induced_cohomology_map(const CochainComplex& low, const CochainComplex& high,
                              const Matrix& cochain_map, int n);

struct ColimitReport {
    int n_max = 0;
    std::vector<std::vector<std::size_t>> level_dims;  // [level][n]
    /// [n][i]: H^n(level i) -> H^n(level i+1).
    std::vector<std::vector<Matrix>> step_maps;
    /// [level][n]: rank of H^n(level i) -> H^n(top).
    std::vector<std::vector<std::size_t>> stable_image;
    /// Per n, rank of H^n(level r-1) -> H^n(level r); the level dims for a
    /// single-level tower.
    std::vector<std::size_t> stable_dims;
    /// Per-level Cotor over the dual coalgebra when the bimodules are M (x) N.
    std::optional<std::vector<std::vector<std::size_t>>> cotor_dims;
    std::size_t chain_maps_checked = 0;
    bool cotor_agrees() const { return !cotor_dims || *cotor_dims == level_dims; }
};

/// bimodules[i] sits at level i; inclusions[i] : B_i -> B_{i+1}.
ColimitReport colimit_report(const Tower& t, const std::vector<LevelBimodule>& bimodules,
                             const std::vector<Matrix>& inclusions, int n_max);

/// Same with B_i = M_i (x) N_i; adds per-level Cotor of the translated comodules.
ColimitReport colimit_report(const Tower& t, const std::vector<LeftModule>& lefts,
                             const std::vector<RightModule>& rights,
                             const std::vector<Matrix>& inclusions, int n_max);

}  // namespace cotorlab
