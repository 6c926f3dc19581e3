#pragma once

#include <cstddef>
#include <vector>

#include "cotorlab/linalg.hpp"
#include "cotorlab/module.hpp"

namespace cotorlab {

/// phi_B(b) = sum_i (e_i b - b e_i) (x) e^i as a matrix B -> B (x) DA.
/// Row (r, i) sits at r * dim A + i.
struct PhiMap {
    Bimodule source;
    Matrix matrix;
};
PhiMap phi_map(const Bimodule& b);

/// Delta_M (x) 1 - 1 (x) Delta_N : M (x) N -> M (x) C (x) N, row (m, k, n) at
/// (m * dim C + k) * dim N + n. Throws InputError on a coalgebra mismatch.
Matrix cotensor_map(const RightComodule& m, const LeftComodule& n);
/// Columns span M box_C N inside M (x) N.
Matrix cotensor(const RightComodule& m, const LeftComodule& n);
/// Columns span {x in B : a x = x a for all a}.
Matrix hom_Ae(const Bimodule& b);

/// Permutation matrix M (x) C (x) N -> M (x) N (x) C.
Matrix twist_to_phi_order(const Field& F, std::size_t dim_m, std::size_t dim_c, std::size_t dim_n);

/// Hochschild cochains C^n = Hom(A^{(x)n}, B), coordinate (I, r) at
/// I * dim B + r with I the lexicographic index of the tensor e_I.
///
/// The complex is stored through degree max_degree + 1 so that the
/// cohomology in every degree up to max_degree is exact.
struct BarComplex {
    Algebra algebra;
    Bimodule bimodule;
    int max_degree;
    CochainComplex complex;
};
BarComplex bar_complex(const Algebra& a, const Bimodule& b, int n_max);
/// H^0 .. H^{n_max}.
std::vector<std::size_t> hochschild_dims(const Algebra& a, const Bimodule& b, int n_max);

/// X^n = M (x) C^{(x)n} (x) N, coordinate (m, K, n) at
/// (m * dim C^n + K) * dim N + n. Stored through degree max_degree + 1.
struct CobarComplex {
    Coalgebra coalgebra;
    RightComodule right;
    LeftComodule left;
    int max_degree;
    CochainComplex complex;
};
CobarComplex cobar_complex(const RightComodule& m, const LeftComodule& n, int n_max);
std::vector<std::size_t> cotor_dims(const RightComodule& m, const LeftComodule& n, int n_max);

struct Comparison {
    std::vector<std::size_t> cotor;
    std::vector<std::size_t> hochschild;
    std::vector<bool> agree;
    bool pass() const;
};
/// Cotor over DA of the translated comodules against H^*(A, M (x) N).
Comparison compare_cotor_hochschild(const LeftModule& m, const RightModule& n, int n_max);

/// Differential d^n of the bar complex as a matrix C^n -> C^{n+1}. Exposed
/// for the graded and profinite layers.
Matrix bar_differential(const Algebra& a, const Bimodule& b, int n);
Matrix cobar_differential(const RightComodule& m, const LeftComodule& n, int s);

/// dim^e, throwing InputError if the result would not fit a size_t.
std::size_t checked_power(std::size_t base, int e);

}  // namespace cotorlab
