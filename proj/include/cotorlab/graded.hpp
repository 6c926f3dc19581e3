#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cotorlab/homalg.hpp"

namespace cotorlab {

/// Closed range [lo, hi] of degrees kept in a computation.
struct GradedWindow {
    int lo;
    int hi;
    GradedWindow(int lo_, int hi_);
    bool contains(int d) const { return lo <= d && d <= hi; }
};

/// dims[n][t - t_lo] = dimension in cohomological degree n, internal degree t.
struct GradedTable {
    int n_max = 0;
    int t_lo = 0;
    int t_hi = 0;
    std::vector<std::vector<std::size_t>> dims;
    std::size_t at(int n, int t) const;
};

/// dim (M box N) per internal degree lo..hi (comodule-side degrees).
/// Throws InputError naming the degree when M (x) N has support outside w.
std::vector<std::size_t> graded_cotensor_dims(const RightComodule& m, const LeftComodule& n,
                                              const GradedWindow& w);
/// Cotor^{n,t}: the cobar complex split by internal degree t = deg m +
/// sum deg c_i + deg n (comodule side).
GradedTable graded_cotor_dims(const RightComodule& m, const LeftComodule& n, int n_max,
                              const GradedWindow& w);
/// H^{n,t}: the bar complex split by internal degree, a cochain of degree t
/// sending e_I into B^{|I| + t}. Degrees are module side.
GradedTable graded_hochschild_dims(const Algebra& a, const Bimodule& b, int n_max,
                                   const GradedWindow& w);

struct GradedComparison {
    GradedTable cotor;       // comodule-side internal degrees
    GradedTable hochschild;  // module-side internal degrees
    /// (n, t) with t comodule side where cotor(n, t) != hochschild(n, -t).
    std::vector<std::pair<int, int>> mismatches;
    bool pass() const { return mismatches.empty(); }
};
/// Translates graded modules to comodules (degrees negate) and compares
/// Cotor^{n,t} with H^{n,-t}(A, M (x) N). `w` is in comodule-side degrees.
GradedComparison compare_graded(const LeftModule& m, const RightModule& n, int n_max,
                                const GradedWindow& w);

/// Differentials below: d(b_j) = sum_i D(i, j) b_i.
/// Coalgebras and comodules are chain objects (d of degree -1), algebras
/// and modules cochain objects (d of degree +1).
struct DGCoalgebra {
    Coalgebra coalgebra;
    Matrix differential;
    friend bool operator==(const DGCoalgebra&, const DGCoalgebra&) = default;
};
struct DGRightComodule {
    RightComodule comodule;
    Matrix differential;
    friend bool operator==(const DGRightComodule&, const DGRightComodule&) = default;
};
struct DGLeftComodule {
    LeftComodule comodule;
    Matrix differential;
    friend bool operator==(const DGLeftComodule&, const DGLeftComodule&) = default;
};
struct DGAlgebra {
    Algebra algebra;
    Matrix differential;
    friend bool operator==(const DGAlgebra&, const DGAlgebra&) = default;
};
struct DGBimodule {
    Bimodule bimodule;
    Matrix differential;
    friend bool operator==(const DGBimodule&, const DGBimodule&) = default;
};

/// Degree, d^2 = 0, eps d = 0 and Delta d = (d (x) 1 + 1 (x) d) Delta with
/// (1 (x) d)(x (x) y) = (-1)^{|x|} x (x) dy.
ValidationReport validate_dg(const DGCoalgebra& c);
/// Coaction is a chain map M -> M (x) C with the same Koszul rule.
ValidationReport validate_dg(const DGRightComodule& m, const DGCoalgebra& c);
ValidationReport validate_dg(const DGLeftComodule& n, const DGCoalgebra& c);
/// d(ab) = da b + (-1)^{|a|} a db.
ValidationReport validate_dg(const DGAlgebra& a);
/// d(a m) = da m + (-1)^{|a|} a dm and d(m a) = dm a + (-1)^{|m|} m da.
ValidationReport validate_dg(const DGBimodule& b, const DGAlgebra& a);

DGCoalgebra with_zero_differential(const Coalgebra& c);
DGRightComodule with_zero_differential(const RightComodule& m);
DGLeftComodule with_zero_differential(const LeftComodule& n);

/// DC with d = transpose of d_C.
DGAlgebra dg_dual_algebra(const DGCoalgebra& c);
/// M (x) N as a DG bimodule over dg_dual_algebra(c). M becomes a left
/// module with differential (-1)^{|m|} d_M, N a right module with action
/// n . e^i = (-1)^{|e^i|} (unsigned action) and differential (-1)^{|n|} d_N;
/// the tensor carries d (x) 1 + (-1)^{|m|} 1 (x) d.
DGBimodule dg_tensor_bimodule(const DGRightComodule& m, const DGLeftComodule& n);

/// Homology of a total complex per total degree lo..hi.
/// exact[n - lo] is false when a neighbouring total degree outside the
/// window carries a nonzero chain space, so the value may be off.
struct TotalDims {
    int lo = 0;
    int hi = 0;
    std::vector<std::size_t> dims;
    std::vector<bool> exact;
    std::size_t at(int n) const { return dims.at(n - lo); }
    bool is_exact(int n) const { return exact.at(n - lo); }
};

/// Cotor_n over a DG coalgebra, total homological degree n = t - s, from
/// the normalized cobar double complex with D = d_cobar + (-1)^s d_int.
/// The coalgebra must be concentrated in degree 0, or be k in degree 0 and
/// zero in degree 1 (otherwise a total degree is infinite dimensional).
TotalDims dg_cotor_dims(const DGCoalgebra& c, const DGRightComodule& m, const DGLeftComodule& n,
                        const GradedWindow& total);
/// H^N_DG, total cohomological degree N = s + t, from the normalized bar
/// double complex with D = delta + (-1)^s partial; same finiteness rule on A.
TotalDims dg_hochschild_dims(const DGAlgebra& a, const DGBimodule& b, const GradedWindow& total);

struct DGComparison {
    TotalDims cotor;       // homological n in the window
    TotalDims hochschild;  // cohomological N in [-hi, -lo]
    std::vector<int> compared;    // n where both sides are exact
    std::vector<int> mismatches;  // n where cotor_n != H^{-n}
    bool pass() const { return mismatches.empty(); }
};
DGComparison compare_dg(const DGCoalgebra& c, const DGRightComodule& m, const DGLeftComodule& n,
                        const GradedWindow& total);

}  // namespace cotorlab
