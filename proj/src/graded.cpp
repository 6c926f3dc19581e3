#include "cotorlab/graded.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <limits>
#include <string>

namespace cotorlab {

GradedWindow::GradedWindow(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo > hi)
        throw InputError("window [" + std::to_string(lo) + ", " + std::to_string(hi) + "] is empty");
}

std::size_t GradedTable::at(int n, int t) const {
    if (n < 0 || n > n_max || t < t_lo || t > t_hi) return 0;
    return dims[n][t - t_lo];
}

namespace {

std::vector<int> degrees_of(std::size_t dim, const std::function<int(std::size_t)>& deg) {
    std::vector<int> out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = deg(i);
    return out;
}

// Degrees of the lexicographic basis of V^{(x)s}.
std::vector<int> tensor_degrees(const std::vector<int>& base, int s) {
    std::vector<int> out{0};
    for (int p = 0; p < s; ++p) {
        std::vector<int> next;
        next.reserve(out.size() * base.size());
        for (int d : out)
            for (int b : base) next.push_back(d + b);
        out = std::move(next);
    }
    return out;
}

std::string window_text(const GradedWindow& w) {
    return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]";
}

// Cohomology of a complex whose differentials preserve an internal degree,
// split by that degree. degs[s] labels the basis of degree s.
GradedTable split_cohomology(const std::vector<Matrix>& diffs, const std::vector<std::vector<int>>& degs,
                             int n_max, const GradedWindow& w) {
    for (std::size_t s = 0; s < diffs.size(); ++s) {
        const Matrix& d = diffs[s];
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t c = 0; c < d.cols(); ++c)
                if (!d.at(r, c).is_zero() && degs[s + 1][r] != degs[s][c])
                    throw InvariantViolation("differential does not preserve internal degree");
    }
    GradedTable out;
    out.n_max = n_max;
    out.t_lo = w.lo;
    out.t_hi = w.hi;
    out.dims.assign(n_max + 1, std::vector<std::size_t>(w.hi - w.lo + 1, 0));
    auto indices = [&](int s, int t) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < degs[s].size(); ++i)
            if (degs[s][i] == t) idx.push_back(i);
        return idx;
    };
    for (int t = w.lo; t <= w.hi; ++t) {
        std::vector<std::size_t> ranks;
        for (int s = 0; s <= n_max; ++s) {
            auto cols = indices(s, t), rows = indices(s + 1, t);
            ranks.push_back(cols.empty() || rows.empty()
                                ? 0
                                : rank(diffs[s].select_rows(rows).select_columns(cols)));
        }
        for (int s = 0; s <= n_max; ++s)
            out.dims[s][t - w.lo] = indices(s, t).size() - ranks[s] - (s > 0 ? ranks[s - 1] : 0);
    }
    return out;
}

std::vector<int> cobar_degrees(const RightComodule& m, const LeftComodule& n, int s) {
    auto dc = tensor_degrees(degrees_of(m.coalgebra().dim(), [&](std::size_t i) { return m.coalgebra().degree(i); }), s);
    std::vector<int> out;
    out.reserve(m.dim() * dc.size() * n.dim());
    for (std::size_t x = 0; x < m.dim(); ++x)
        for (int k : dc)
            for (std::size_t y = 0; y < n.dim(); ++y) out.push_back(m.degree(x) + k + n.degree(y));
    return out;
}

std::vector<int> bar_degrees(const Algebra& a, const Bimodule& b, int s) {
    auto da = tensor_degrees(degrees_of(a.dim(), [&](std::size_t i) { return a.degree(i); }), s);
    std::vector<int> out;
    out.reserve(da.size() * b.dim());
    for (int k : da)
        for (std::size_t r = 0; r < b.dim(); ++r) out.push_back(b.degree(r) - k);
    return out;
}

void check_cotor_window(const RightComodule& m, const LeftComodule& n, const GradedWindow& w) {
    for (std::size_t x = 0; x < m.dim(); ++x)
        for (std::size_t y = 0; y < n.dim(); ++y) {
            int d = m.degree(x) + n.degree(y);
            if (!w.contains(d))
                throw InputError("M (x) N has internal degree " + std::to_string(d) +
                                 " outside the window " + window_text(w));
        }
}

void check_hochschild_window(const Bimodule& b, const GradedWindow& w) {
    for (std::size_t r = 0; r < b.dim(); ++r)
        if (!w.contains(b.degree(r)))
            throw InputError("bimodule has internal degree " + std::to_string(b.degree(r)) +
                             " outside the window " + window_text(w));
}

}  // namespace

std::vector<std::size_t> graded_cotensor_dims(const RightComodule& m, const LeftComodule& n,
                                              const GradedWindow& w) {
    return graded_cotor_dims(m, n, 0, w).dims[0];
}

GradedTable graded_cotor_dims(const RightComodule& m, const LeftComodule& n, int n_max,
                              const GradedWindow& w) {
    if (n_max < 0) throw InputError("max degree must be nonnegative");
    check_cotor_window(m, n, w);
    auto cx = cobar_complex(m, n, n_max);
    std::vector<Matrix> diffs;
    std::vector<std::vector<int>> degs;
    for (int s = 0; s <= n_max; ++s) diffs.push_back(*cx.complex.differential(s));
    for (int s = 0; s <= n_max + 1; ++s) degs.push_back(cobar_degrees(m, n, s));
    return split_cohomology(diffs, degs, n_max, w);
}

GradedTable graded_hochschild_dims(const Algebra& a, const Bimodule& b, int n_max,
                                   const GradedWindow& w) {
    if (n_max < 0) throw InputError("max degree must be nonnegative");
    check_hochschild_window(b, w);
    auto bx = bar_complex(a, b, n_max);
    std::vector<Matrix> diffs;
    std::vector<std::vector<int>> degs;
    for (int s = 0; s <= n_max; ++s) diffs.push_back(*bx.complex.differential(s));
    for (int s = 0; s <= n_max + 1; ++s) degs.push_back(bar_degrees(a, b, s));
    return split_cohomology(diffs, degs, n_max, w);
}

GradedComparison compare_graded(const LeftModule& m, const RightModule& n, int n_max,
                                const GradedWindow& w) {
    if (m.algebra() != n.algebra()) throw InputError("compare: modules over different algebras");
    GradedComparison out;
    out.cotor = graded_cotor_dims(module_to_comodule(m), module_to_comodule(n), n_max, w);
    out.hochschild = graded_hochschild_dims(m.algebra(), tensor_bimodule(m, n), n_max,
                                            GradedWindow(-w.hi, -w.lo));
    for (int s = 0; s <= n_max; ++s)
        for (int t = w.lo; t <= w.hi; ++t)
            if (out.cotor.at(s, t) != out.hochschild.at(s, -t)) out.mismatches.emplace_back(s, t);
    return out;
}

// ---------------------------------------------------------------------------
// DG layer

namespace {

Matrix sign_diag(const Field& F, const std::vector<int>& degs) {
    MatrixBuilder b(F, degs.size(), degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i) b.set(i, i, F.sign(degs[i]));
    return std::move(b).build();
}

// Delta as a (d*d) x d matrix.
Matrix comul_matrix(const Coalgebra& c) {
    const std::size_t d = c.dim();
    MatrixBuilder b(c.field(), d * d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) b.set(i * d + j, k, c.comul(k, i, j));
    return std::move(b).build();
}

Matrix coaction_matrix(const RightComodule& m) {
    const std::size_t d = m.dim(), c = m.coalgebra().dim();
    MatrixBuilder b(m.coalgebra().field(), d * c, d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t k = 0; k < c; ++k) b.set(y * c + k, x, m.rho(x, y, k));
    return std::move(b).build();
}

Matrix coaction_matrix(const LeftComodule& n) {
    const std::size_t d = n.dim(), c = n.coalgebra().dim();
    MatrixBuilder b(n.coalgebra().field(), c * d, d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t k = 0; k < c; ++k)
            for (std::size_t y = 0; y < d; ++y) b.set(k * d + y, x, n.lambda(x, k, y));
    return std::move(b).build();
}

// Shape, degree shift and square-zero checks shared by every DG object.
bool check_differential(ValidationReport& rep, const Matrix& d, const Field& F, std::size_t dim,
                        const std::function<int(std::size_t)>& deg, int shift) {
    if (d.field() != F || d.rows() != dim || d.cols() != dim) {
        rep.add("differential-shape", {});
        return false;
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (!d.at(i, j).is_zero() && deg(i) != deg(j) + shift) rep.add("differential-degree", {i, j});
    if (!(d * d).is_zero()) rep.add("d-squared", {});
    return true;
}

std::vector<int> coalgebra_degrees(const Coalgebra& c) {
    return degrees_of(c.dim(), [&](std::size_t i) { return c.degree(i); });
}

}  // namespace

ValidationReport validate_dg(const DGCoalgebra& c) {
    ValidationReport rep;
    const Coalgebra& C = c.coalgebra;
    rep.merge(validate_coalgebra(C));
    const Field& F = C.field();
    const Matrix& D = c.differential;
    if (!check_differential(rep, D, F, C.dim(), [&](std::size_t i) { return C.degree(i); }, -1))
        return rep;
    Matrix eps(F, 1, C.dim(), C.counit());
    if (!(eps * D).is_zero()) rep.add("counit-differential", {});
    Matrix I = Matrix::identity(F, C.dim());
    Matrix S = sign_diag(F, coalgebra_degrees(C));
    Matrix Delta = comul_matrix(C);
    Matrix lhs = Delta * D;
    Matrix rhs = (D.kron(I) + S.kron(D)) * Delta;
    for (std::size_t j = 0; j < C.dim(); ++j)
        if (lhs.column(j) != rhs.column(j)) rep.add("co-leibniz", {j});
    return rep;
}

ValidationReport validate_dg(const DGRightComodule& m, const DGCoalgebra& c) {
    ValidationReport rep;
    if (m.comodule.coalgebra() != c.coalgebra) {
        rep.add("coalgebra-mismatch", {});
        return rep;
    }
    rep.merge(validate_comodule(m.comodule));
    const Field& F = c.coalgebra.field();
    const Matrix& D = m.differential;
    const std::size_t d = m.comodule.dim();
    if (!check_differential(rep, D, F, d, [&](std::size_t i) { return m.comodule.degree(i); }, -1))
        return rep;
    std::vector<int> degs = degrees_of(d, [&](std::size_t i) { return m.comodule.degree(i); });
    Matrix rho = coaction_matrix(m.comodule);
    Matrix lhs = rho * D;
    Matrix rhs = (D.kron(Matrix::identity(F, c.coalgebra.dim())) + sign_diag(F, degs).kron(c.differential)) * rho;
    for (std::size_t j = 0; j < d; ++j)
        if (lhs.column(j) != rhs.column(j)) rep.add("chain-map", {j});
    return rep;
}

ValidationReport validate_dg(const DGLeftComodule& n, const DGCoalgebra& c) {
    ValidationReport rep;
    if (n.comodule.coalgebra() != c.coalgebra) {
        rep.add("coalgebra-mismatch", {});
        return rep;
    }
    rep.merge(validate_comodule(n.comodule));
    const Field& F = c.coalgebra.field();
    const Matrix& D = n.differential;
    const std::size_t d = n.comodule.dim();
    if (!check_differential(rep, D, F, d, [&](std::size_t i) { return n.comodule.degree(i); }, -1))
        return rep;
    Matrix lambda = coaction_matrix(n.comodule);
    Matrix lhs = lambda * D;
    Matrix rhs = (c.differential.kron(Matrix::identity(F, d)) +
                  sign_diag(F, coalgebra_degrees(c.coalgebra)).kron(D)) *
                 lambda;
    for (std::size_t j = 0; j < d; ++j)
        if (lhs.column(j) != rhs.column(j)) rep.add("chain-map", {j});
    return rep;
}

ValidationReport validate_dg(const DGAlgebra& a) {
    ValidationReport rep;
    const Algebra& A = a.algebra;
    rep.merge(validate_algebra(A));
    const Field& F = A.field();
    const Matrix& D = a.differential;
    if (!check_differential(rep, D, F, A.dim(), [&](std::size_t i) { return A.degree(i); }, 1))
        return rep;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Matrix L = A.left_multiplication(i);
        // left multiplication by d e_i
        Matrix Ld(F, A.dim(), A.dim());
        for (std::size_t k = 0; k < A.dim(); ++k)
            if (!D.at(k, i).is_zero()) Ld = Ld + A.left_multiplication(k).scaled(D.at(k, i));
        if (D * L != Ld + (L * D).scaled(F.sign(A.degree(i)))) rep.add("leibniz", {i});
    }
    return rep;
}

ValidationReport validate_dg(const DGBimodule& b, const DGAlgebra& a) {
    ValidationReport rep;
    const Bimodule& B = b.bimodule;
    if (B.algebra() != a.algebra) {
        rep.add("algebra-mismatch", {});
        return rep;
    }
    rep.merge(validate_module(B));
    const Field& F = a.algebra.field();
    const Matrix& D = b.differential;
    const std::size_t d = B.dim();
    if (!check_differential(rep, D, F, d, [&](std::size_t i) { return B.degree(i); }, 1)) return rep;
    Matrix S = sign_diag(F, degrees_of(d, [&](std::size_t i) { return B.degree(i); }));
    for (std::size_t i = 0; i < a.algebra.dim(); ++i) {
        Matrix Ld(F, d, d), Rd(F, d, d);
        for (std::size_t k = 0; k < a.algebra.dim(); ++k) {
            const Scalar& c = a.differential.at(k, i);
            if (c.is_zero()) continue;
            Ld = Ld + B.left(k).scaled(c);
            Rd = Rd + B.right(k).scaled(c);
        }
        if (D * B.left(i) != Ld + (B.left(i) * D).scaled(F.sign(a.algebra.degree(i))))
            rep.add("leibniz-left", {i});
        if (D * B.right(i) != B.right(i) * D + Rd * S) rep.add("leibniz-right", {i});
    }
    return rep;
}

DGCoalgebra with_zero_differential(const Coalgebra& c) {
    return {c, Matrix(c.field(), c.dim(), c.dim())};
}

DGRightComodule with_zero_differential(const RightComodule& m) {
    return {m, Matrix(m.coalgebra().field(), m.dim(), m.dim())};
}

DGLeftComodule with_zero_differential(const LeftComodule& n) {
    return {n, Matrix(n.coalgebra().field(), n.dim(), n.dim())};
}

DGAlgebra dg_dual_algebra(const DGCoalgebra& c) {
    return {dual_algebra(c.coalgebra), c.differential.transpose()};
}

DGBimodule dg_tensor_bimodule(const DGRightComodule& m, const DGLeftComodule& n) {
    if (m.comodule.coalgebra() != n.comodule.coalgebra())
        throw InputError("comodules over different coalgebras");
    const Field& F = m.comodule.coalgebra().field();
    LeftModule lm = comodule_to_module(m.comodule);
    RightModule rn = comodule_to_module(n.comodule);
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < rn.algebra().dim(); ++i)
        right.push_back(rn.action(i).scaled(F.sign(rn.algebra().degree(i))));
    rn = RightModule(rn.algebra(), std::move(right), rn.grading());
    std::vector<int> dm = degrees_of(m.comodule.dim(), [&](std::size_t i) { return m.comodule.degree(i); });
    std::vector<int> dn = degrees_of(n.comodule.dim(), [&](std::size_t i) { return n.comodule.degree(i); });
    Matrix Sm = sign_diag(F, dm), Sn = sign_diag(F, dn);
    Matrix DM = m.differential * Sm, DN = n.differential * Sn;
    Matrix D = DM.kron(Matrix::identity(F, dn.size())) + Sm.kron(DN);
    return {tensor_bimodule(lm, rn), D};
}

namespace {

// Basis indices entering a normalized tensor power: all of them when the
// object sits in degree 0, otherwise everything except the degree-0 line.
struct Reduced {
    std::vector<std::size_t> allowed;
    std::vector<long> position;  // index in `allowed`, or -1
    bool normalized = false;
    int min_degree = 0;
    int max_degree = 0;
};

Reduced reduce_basis(const std::vector<int>& degs, const Vector& unit_like, const char* what) {
    Reduced r;
    r.position.assign(degs.size(), -1);
    bool all_zero = std::all_of(degs.begin(), degs.end(), [](int d) { return d == 0; });
    std::size_t j0 = degs.size();
    if (!all_zero) {
        for (std::size_t i = 0; i < degs.size(); ++i) {
            if (degs[i] == 0) {
                if (j0 != degs.size())
                    throw InputError(std::string(what) + " has more than one basis element in degree 0");
                j0 = i;
            } else if (degs[i] == 1 || degs[i] < 0) {
                throw InputError(std::string(what) + " has a basis element in degree " +
                                 std::to_string(degs[i]) +
                                 "; total degrees would be infinite dimensional");
            }
        }
        if (j0 == degs.size()) throw InputError(std::string(what) + " has nothing in degree 0");
        for (std::size_t i = 0; i < unit_like.size(); ++i)
            if (i != j0 && !unit_like[i].is_zero())
                throw InputError(std::string(what) + ": unit or counit is not supported on the degree-0 line");
        r.normalized = true;
    }
    for (std::size_t i = 0; i < degs.size(); ++i) {
        if (r.normalized && i == j0) continue;
        r.position[i] = static_cast<long>(r.allowed.size());
        r.allowed.push_back(i);
    }
    if (!r.allowed.empty()) {
        r.min_degree = r.max_degree = degs[r.allowed[0]];
        for (auto i : r.allowed) {
            r.min_degree = std::min(r.min_degree, degs[i]);
            r.max_degree = std::max(r.max_degree, degs[i]);
        }
    }
    return r;
}

constexpr std::size_t kMaxCells = 4'000'000;

// Index bookkeeping for a total complex whose cells are (s, outer, K, inner)
// with K running over reduced tensors of length s.
struct Cells {
    int lo = 0, hi = 0;
    std::vector<std::vector<long>> pos;  // pos[s][flat] = position in its total degree, or -1
    std::vector<std::size_t> dim;        // per total degree lo-1 .. hi+1
    std::size_t count(int n) const { return dim[n - lo + 1]; }
};

std::vector<std::size_t> digits_of(std::size_t K, std::size_t base, int s) {
    std::vector<std::size_t> d(s);
    for (int p = s - 1; p >= 0; --p) {
        d[p] = K % base;
        K /= base;
    }
    return d;
}

std::size_t encode(const std::vector<std::size_t>& d, std::size_t base) {
    std::size_t K = 0;
    for (auto x : d) K = K * base + x;
    return K;
}

}  // namespace

TotalDims dg_cotor_dims(const DGCoalgebra& c, const DGRightComodule& m, const DGLeftComodule& n,
                        const GradedWindow& w) {
    for (const auto& rep : {validate_dg(c), validate_dg(m, c), validate_dg(n, c)})
        if (!rep.ok()) throw ValidationError("dg_cotor_dims", rep);
    const Coalgebra& C = c.coalgebra;
    const Field& F = C.field();
    const RightComodule& M = m.comodule;
    const LeftComodule& N = n.comodule;
    const std::size_t dM = M.dim(), dN = N.dim();
    std::vector<int> degC = coalgebra_degrees(C);
    Reduced red = reduce_basis(degC, C.counit(), "coalgebra");
    const std::size_t na = red.allowed.size();

    int minMN = std::numeric_limits<int>::max(), maxMN = std::numeric_limits<int>::min();
    for (std::size_t x = 0; x < dM; ++x)
        for (std::size_t y = 0; y < dN; ++y) {
            int d = M.degree(x) + N.degree(y);
            if (!w.contains(d))
                throw InputError("M (x) N has total degree " + std::to_string(d) +
                                 " outside the window " + window_text(w));
            minMN = std::min(minMN, d);
            maxMN = std::max(maxMN, d);
        }
    int s_max = -1;
    if (dM > 0 && dN > 0) {
        if (na == 0)
            s_max = 0;
        else if (!red.normalized)
            s_max = std::max(-1, maxMN - (w.lo - 1));
        else
            s_max = std::max(-1, (w.hi + 1 - minMN) / (red.min_degree - 1));
    }

    Cells cells;
    cells.lo = w.lo;
    cells.hi = w.hi;
    cells.dim.assign(w.hi - w.lo + 3, 0);
    std::vector<std::vector<int>> total(s_max + 1);
    std::size_t budget = 0;
    for (int s = 0; s <= s_max; ++s) {
        std::size_t ks = checked_power(na, s);
        budget += dM * ks * dN;
        if (budget > kMaxCells) throw InputError("total complex too large for the window");
        std::vector<int> kdeg = tensor_degrees(
            degrees_of(na, [&](std::size_t i) { return degC[red.allowed[i]]; }), s);
        cells.pos.emplace_back(dM * ks * dN, -1);
        total[s].resize(dM * ks * dN);
        for (std::size_t x = 0; x < dM; ++x)
            for (std::size_t K = 0; K < ks; ++K)
                for (std::size_t y = 0; y < dN; ++y) {
                    std::size_t flat = (x * ks + K) * dN + y;
                    int deg = M.degree(x) + kdeg[K] + N.degree(y) - s;
                    total[s][flat] = deg;
                    if (deg < w.lo - 1 || deg > w.hi + 1) continue;
                    std::size_t& slot = cells.dim[deg - w.lo + 1];
                    if (w.contains(deg)) cells.pos[s][flat] = static_cast<long>(slot);
                    ++slot;
                }
    }

    // D_n : Tot_n -> Tot_{n-1} for lo < n <= hi
    std::vector<MatrixBuilder> D;
    for (int q = w.lo + 1; q <= w.hi; ++q) D.emplace_back(F, cells.count(q - 1), cells.count(q));
    auto target = [&](int s, std::size_t flat) {
        long p = cells.pos.at(s).at(flat);
        if (p < 0) throw InvariantViolation("cobar total complex left the window");
        return static_cast<std::size_t>(p);
    };

    for (int s = 0; s <= s_max; ++s) {
        std::size_t ks = checked_power(na, s), ks1 = ks * na;
        for (std::size_t x = 0; x < dM; ++x)
            for (std::size_t K = 0; K < ks; ++K)
                for (std::size_t y = 0; y < dN; ++y) {
                    std::size_t flat = (x * ks + K) * dN + y;
                    int deg = total[s][flat];
                    if (deg <= w.lo || deg > w.hi) continue;
                    MatrixBuilder& out = D[deg - w.lo - 1];
                    std::size_t col = static_cast<std::size_t>(cells.pos[s][flat]);
                    auto digits = digits_of(K, na, s);

                    if (s + 1 <= s_max) {
                        // Delta_M (x) 1
                        for (std::size_t xp = 0; xp < dM; ++xp)
                            for (std::size_t k = 0; k < C.dim(); ++k) {
                                const Scalar& v = M.rho(x, xp, k);
                                if (v.is_zero() || red.position[k] < 0) continue;
                                std::size_t Kp = red.position[k] * ks + K;
                                out.add(target(s + 1, (xp * ks1 + Kp) * dN + y), col, v);
                            }
                        // (-1)^p Delta_C at slot p
                        for (int p = 1; p <= s; ++p) {
                            std::size_t cp = red.allowed[digits[p - 1]];
                            Scalar sign = F.sign(p);
                            for (std::size_t u = 0; u < C.dim(); ++u) {
                                if (red.position[u] < 0) continue;
                                for (std::size_t v = 0; v < C.dim(); ++v) {
                                    const Scalar& w_ = C.comul(cp, u, v);
                                    if (w_.is_zero() || red.position[v] < 0) continue;
                                    std::vector<std::size_t> nd(digits.begin(), digits.begin() + (p - 1));
                                    nd.push_back(red.position[u]);
                                    nd.push_back(red.position[v]);
                                    nd.insert(nd.end(), digits.begin() + p, digits.end());
                                    out.add(target(s + 1, (x * ks1 + encode(nd, na)) * dN + y), col,
                                            F.mul(sign, w_));
                                }
                            }
                        }
                        // (-1)^{s+1} 1 (x) Delta_N
                        Scalar sign = F.sign(s + 1);
                        for (std::size_t k = 0; k < C.dim(); ++k) {
                            if (red.position[k] < 0) continue;
                            for (std::size_t yp = 0; yp < dN; ++yp) {
                                const Scalar& v = N.lambda(y, k, yp);
                                if (v.is_zero()) continue;
                                std::size_t Kp = K * na + red.position[k];
                                out.add(target(s + 1, (x * ks1 + Kp) * dN + yp), col, F.mul(sign, v));
                            }
                        }
                    }

                    // (-1)^s times the Koszul tensor differential
                    Scalar outer = F.sign(s);
                    for (std::size_t xp = 0; xp < dM; ++xp) {
                        const Scalar& v = m.differential.at(xp, x);
                        if (!v.is_zero()) out.add(target(s, (xp * ks + K) * dN + y), col, F.mul(outer, v));
                    }
                    int passed = M.degree(x);
                    for (int p = 1; p <= s; ++p) {
                        std::size_t cp = red.allowed[digits[p - 1]];
                        Scalar sign = F.mul(outer, F.sign(passed));
                        for (std::size_t u = 0; u < C.dim(); ++u) {
                            const Scalar& v = c.differential.at(u, cp);
                            if (v.is_zero()) continue;
                            if (red.position[u] < 0)
                                throw InvariantViolation("differential reaches the degree-0 line");
                            auto nd = digits;
                            nd[p - 1] = red.position[u];
                            out.add(target(s, (x * ks + encode(nd, na)) * dN + y), col, F.mul(sign, v));
                        }
                        passed += degC[cp];
                    }
                    Scalar sign = F.mul(outer, F.sign(passed));
                    for (std::size_t yp = 0; yp < dN; ++yp) {
                        const Scalar& v = n.differential.at(yp, y);
                        if (!v.is_zero()) out.add(target(s, (x * ks + K) * dN + yp), col, F.mul(sign, v));
                    }
                }
    }

    // as a cochain complex in degree -n
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int q = w.hi; q >= w.lo; --q) dims.push_back(cells.count(q));
    for (int q = w.hi; q > w.lo; --q) diffs.push_back(std::move(D[q - w.lo - 1]).build());
    CochainComplex cx(F, -w.hi, std::move(dims), std::move(diffs));
    auto h = cohomology_dims(cx);
    TotalDims out;
    out.lo = w.lo;
    out.hi = w.hi;
    for (int q = w.lo; q <= w.hi; ++q) {
        out.dims.push_back(h[w.hi - q]);
        bool exact = true;
        if (q == w.lo && cells.count(w.lo - 1) != 0) exact = false;
        if (q == w.hi && cells.count(w.hi + 1) != 0) exact = false;
        out.exact.push_back(exact);
    }
    return out;
}

TotalDims dg_hochschild_dims(const DGAlgebra& a, const DGBimodule& b, const GradedWindow& w) {
    for (const auto& rep : {validate_dg(a), validate_dg(b, a)})
        if (!rep.ok()) throw ValidationError("dg_hochschild_dims", rep);
    const Algebra& A = a.algebra;
    const Bimodule& B = b.bimodule;
    const Field& F = A.field();
    const std::size_t dB = B.dim();
    std::vector<int> degA = degrees_of(A.dim(), [&](std::size_t i) { return A.degree(i); });
    Reduced red = reduce_basis(degA, A.unit(), "algebra");
    const std::size_t na = red.allowed.size();

    int minB = std::numeric_limits<int>::max(), maxB = std::numeric_limits<int>::min();
    for (std::size_t r = 0; r < dB; ++r) {
        int d = B.degree(r);
        if (!w.contains(d))
            throw InputError("bimodule has total degree " + std::to_string(d) + " outside the window " +
                             window_text(w));
        minB = std::min(minB, d);
        maxB = std::max(maxB, d);
    }
    int s_max = -1;
    if (dB > 0) {
        if (na == 0)
            s_max = 0;
        else if (!red.normalized)
            s_max = std::max(-1, w.hi + 1 - minB);
        else
            s_max = std::max(-1, (maxB - (w.lo - 1)) / (red.min_degree - 1));
    }

    Cells cells;
    cells.lo = w.lo;
    cells.hi = w.hi;
    cells.dim.assign(w.hi - w.lo + 3, 0);
    std::vector<std::vector<int>> total(s_max + 1);
    std::vector<std::vector<int>> fdeg(s_max + 1);  // internal degree t of each cell
    std::size_t budget = 0;
    for (int s = 0; s <= s_max; ++s) {
        std::size_t ks = checked_power(na, s);
        budget += ks * dB;
        if (budget > kMaxCells) throw InputError("total complex too large for the window");
        std::vector<int> kdeg = tensor_degrees(
            degrees_of(na, [&](std::size_t i) { return degA[red.allowed[i]]; }), s);
        cells.pos.emplace_back(ks * dB, -1);
        total[s].resize(ks * dB);
        fdeg[s].resize(ks * dB);
        for (std::size_t I = 0; I < ks; ++I)
            for (std::size_t r = 0; r < dB; ++r) {
                std::size_t flat = I * dB + r;
                int t = B.degree(r) - kdeg[I];
                int deg = s + t;
                fdeg[s][flat] = t;
                total[s][flat] = deg;
                if (deg < w.lo - 1 || deg > w.hi + 1) continue;
                std::size_t& slot = cells.dim[deg - w.lo + 1];
                if (w.contains(deg)) cells.pos[s][flat] = static_cast<long>(slot);
                ++slot;
            }
    }

    // D^N : Tot^N -> Tot^{N+1} for lo <= N < hi
    std::vector<MatrixBuilder> D;
    for (int q = w.lo; q < w.hi; ++q) D.emplace_back(F, cells.count(q + 1), cells.count(q));
    auto target = [&](int s, std::size_t flat) {
        long p = cells.pos.at(s).at(flat);
        if (p < 0) throw InvariantViolation("bar total complex left the window");
        return static_cast<std::size_t>(p);
    };

    // products landing on each reduced basis element
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> onto(A.dim());
    for (auto x : red.allowed)
        for (auto y : red.allowed)
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (!A.mul(x, y, k).is_zero()) onto[k].emplace_back(x, y, A.mul(x, y, k));

    for (int s = 0; s <= s_max; ++s) {
        std::size_t ks = checked_power(na, s);
        for (std::size_t J = 0; J < ks; ++J)
            for (std::size_t r = 0; r < dB; ++r) {
                std::size_t flat = J * dB + r;
                int deg = total[s][flat];
                if (deg < w.lo || deg >= w.hi) continue;
                MatrixBuilder& out = D[deg - w.lo];
                std::size_t col = static_cast<std::size_t>(cells.pos[s][flat]);
                int t = fdeg[s][flat];
                auto digits = digits_of(J, na, s);

                if (s + 1 <= s_max) {
                    // (-1)^{|a_1| t} a_1 f(a_2, ...)
                    for (auto i : red.allowed) {
                        Scalar sign = F.sign(static_cast<long long>(degA[i]) * t);
                        std::size_t I = red.position[i] * ks + J;
                        for (std::size_t rp = 0; rp < dB; ++rp) {
                            const Scalar& v = B.left(i).at(rp, r);
                            if (!v.is_zero()) out.add(target(s + 1, I * dB + rp), col, F.mul(sign, v));
                        }
                    }
                    // (-1)^p f(..., a_p a_{p+1}, ...)
                    for (int p = 1; p <= s; ++p) {
                        std::size_t k = red.allowed[digits[p - 1]];
                        Scalar sign = F.sign(p);
                        for (const auto& [x, y, v] : onto[k]) {
                            std::vector<std::size_t> nd(digits.begin(), digits.begin() + (p - 1));
                            nd.push_back(red.position[x]);
                            nd.push_back(red.position[y]);
                            nd.insert(nd.end(), digits.begin() + p, digits.end());
                            out.add(target(s + 1, encode(nd, na) * dB + r), col, F.mul(sign, v));
                        }
                    }
                    // (-1)^{s+1} f(a_1, ..., a_s) a_{s+1}
                    Scalar sign = F.sign(s + 1);
                    for (auto i : red.allowed) {
                        std::size_t I = J * na + red.position[i];
                        for (std::size_t rp = 0; rp < dB; ++rp) {
                            const Scalar& v = B.right(i).at(rp, r);
                            if (!v.is_zero()) out.add(target(s + 1, I * dB + rp), col, F.mul(sign, v));
                        }
                    }
                }

                // (-1)^s (d_B f - (-1)^t f d)
                Scalar outer = F.sign(s);
                for (std::size_t rp = 0; rp < dB; ++rp) {
                    const Scalar& v = b.differential.at(rp, r);
                    if (!v.is_zero()) out.add(target(s, J * dB + rp), col, F.mul(outer, v));
                }
                int passed = 0;
                for (int p = 1; p <= s; ++p) {
                    std::size_t jp = red.allowed[digits[p - 1]];
                    Scalar sign = F.neg(F.mul(outer, F.sign(t + passed)));
                    for (auto x : red.allowed) {
                        const Scalar& v = a.differential.at(jp, x);
                        if (v.is_zero()) continue;
                        auto nd = digits;
                        nd[p - 1] = red.position[x];
                        out.add(target(s, encode(nd, na) * dB + r), col, F.mul(sign, v));
                    }
                    passed += degA[jp];
                }
            }
    }

    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int q = w.lo; q <= w.hi; ++q) dims.push_back(cells.count(q));
    for (auto& b_ : D) diffs.push_back(std::move(b_).build());
    CochainComplex cx(F, w.lo, std::move(dims), std::move(diffs));
    auto h = cohomology_dims(cx);
    TotalDims out;
    out.lo = w.lo;
    out.hi = w.hi;
    for (int q = w.lo; q <= w.hi; ++q) {
        out.dims.push_back(h[q - w.lo]);
        bool exact = true;
        if (q == w.lo && cells.count(w.lo - 1) != 0) exact = false;
        if (q == w.hi && cells.count(w.hi + 1) != 0) exact = false;
        out.exact.push_back(exact);
    }
    return out;
}

DGComparison compare_dg(const DGCoalgebra& c, const DGRightComodule& m, const DGLeftComodule& n,
                        const GradedWindow& w) {
    DGComparison out;
    out.cotor = dg_cotor_dims(c, m, n, w);
    out.hochschild = dg_hochschild_dims(dg_dual_algebra(c), dg_tensor_bimodule(m, n), GradedWindow(-w.hi, -w.lo));
    for (int q = w.lo; q <= w.hi; ++q) {
        if (!out.cotor.is_exact(q) || !out.hochschild.is_exact(-q)) continue;
        out.compared.push_back(q);
        if (out.cotor.at(q) != out.hochschild.at(-q)) out.mismatches.push_back(q);
    }
    return out;
}

}  // namespace cotorlab
