#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cotorlab/constructors.hpp"
#include "cotorlab/module.hpp"

namespace cotorlab {

/// A left module M and a right module N over the same algebra.
struct Instance {
    std::string name;
    LeftModule left;
    RightModule right;
};

/// Deterministic sample of valid (M, N) pairs built from the constructor
/// library: group algebras of groups of order at most 4, truncated
/// polynomial algebras, products of matrix algebras and the upper
/// triangular algebra, with regular, character, column/row, quotient,
/// direct-sum and conjugated modules. dim A <= 4 and dim M, dim N <= 3.
std::vector<Instance> instance_library(const Field& F, std::uint32_t seed = 1);

/// instance_library over F_2, F_5 and Q.
std::vector<Instance> standard_instances(std::uint32_t seed = 1);

/// Invertible n x n matrix with small random entries.
Matrix random_invertible(const Field& F, std::size_t n, std::uint32_t seed);

}  // namespace cotorlab
