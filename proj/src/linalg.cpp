#include "cotorlab/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace cotorlab {

namespace {

// Row stored by its nonzero entries in increasing column order.
struct SparseRow {
    std::vector<std::uint32_t> cols;
    std::vector<Scalar> vals;

    bool empty() const { return cols.empty(); }
};

SparseRow sparse_row(const Matrix& m, std::size_t r, bool with_rhs = false,
                     const Scalar* rhs = nullptr) {
    SparseRow out;
    auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c)
        if (!row[c].is_zero()) {
            out.cols.push_back(static_cast<std::uint32_t>(c));
            out.vals.push_back(row[c]);
        }
    if (with_rhs && !rhs->is_zero()) {
        out.cols.push_back(static_cast<std::uint32_t>(m.cols()));
        out.vals.push_back(*rhs);
    }
    return out;
}

// a - f * b
SparseRow axpy(const Field& F, const SparseRow& a, const Scalar& f, const SparseRow& b) {
    SparseRow out;
    out.cols.reserve(a.cols.size() + b.cols.size());
    out.vals.reserve(a.cols.size() + b.cols.size());
    std::size_t i = 0, j = 0;
    while (i < a.cols.size() || j < b.cols.size()) {
        if (j == b.cols.size() || (i < a.cols.size() && a.cols[i] < b.cols[j])) {
            out.cols.push_back(a.cols[i]);
            out.vals.push_back(a.vals[i]);
            ++i;
        } else if (i == a.cols.size() || b.cols[j] < a.cols[i]) {
            out.cols.push_back(b.cols[j]);
            out.vals.push_back(F.neg(F.mul(f, b.vals[j])));
            ++j;
        } else {
            Scalar v = F.sub(a.vals[i], F.mul(f, b.vals[j]));
            if (!v.is_zero()) {
                out.cols.push_back(a.cols[i]);
                out.vals.push_back(v);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

void normalize_lead(const Field& F, SparseRow& r) {
    if (r.vals.front().is_one()) return;
    Scalar inv = F.inv(r.vals.front());
    for (auto& v : r.vals) v = F.mul(v, inv);
}

// Incremental echelon basis: pivot rows have leading entry 1 and are
// indexed by their leading column.
class Echelon {
  public:
    Echelon(Field F, std::size_t width) : F_(F), pivot_of_(width, -1) {}

    // Reduces r against the current pivots; keeps it if independent.
    bool insert(SparseRow r) {
        while (!r.empty()) {
            int p = pivot_of_[r.cols.front()];
            if (p < 0) {
                normalize_lead(F_, r);
                pivot_of_[r.cols.front()] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(r));
                return true;
            }
            Scalar f = r.vals.front();
            r = axpy(F_, r, f, rows_[p]);
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

    // Back-substitution to reduced form; returns rows sorted by pivot column.
    std::vector<SparseRow> reduced() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return rows_[a].cols.front() > rows_[b].cols.front();
        });
        std::vector<SparseRow> red(rows_.size());
        for (std::size_t idx : order) {
            SparseRow r = rows_[idx];
            std::size_t pos = 1;
            while (pos < r.cols.size()) {
                std::uint32_t c = r.cols[pos];
                int p = pivot_of_[c];
                if (p < 0) {
                    ++pos;
                    continue;
                }
                Scalar f = r.vals[pos];
                r = axpy(F_, r, f, red[p]);
                // entries before c are untouched, c itself vanished
                pos = std::lower_bound(r.cols.begin(), r.cols.end(), c) - r.cols.begin();
            }
            red[idx] = std::move(r);
        }
        std::sort(red.begin(), red.end(), [](const SparseRow& a, const SparseRow& b) {
            return a.cols.front() < b.cols.front();
        });
        return red;
    }

    const std::vector<int>& pivot_map() const { return pivot_of_; }

  private:
    Field F_;
    std::vector<int> pivot_of_;
    std::vector<SparseRow> rows_;
};

}  // namespace

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // eliminate along the shorter side
    const Matrix* src = &m;
    Matrix t(m.field(), 0, 0);
    if (m.rows() > 4 * m.cols()) {
        t = m.transpose();
        src = &t;
    }
    Echelon e(src->field(), src->cols());
    for (std::size_t r = 0; r < src->rows(); ++r) {
        e.insert(sparse_row(*src, r));
        if (e.rank() == src->cols()) break;
    }
    return e.rank();
}

RowEchelon rref(const Matrix& m) {
    Echelon e(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(sparse_row(m, r));
    auto red = e.reduced();
    MatrixBuilder b(m.field(), red.size(), m.cols());
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < red.size(); ++i) {
        pivots.push_back(red[i].cols.front());
        for (std::size_t k = 0; k < red[i].cols.size(); ++k) b.set(i, red[i].cols[k], red[i].vals[k]);
    }
    return {std::move(b).build(), std::move(pivots)};
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return rref(m).pivots; }

Matrix kernel_basis(const Matrix& m) {
    const Field& F = m.field();
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> cols;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector x(m.cols());
        x[f] = F.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = F.neg(red.at(i, f));
        cols.push_back(std::move(x));
    }
    if (cols.size() + pivots.size() != m.cols())
        throw InvariantViolation("rank-nullity failed in kernel_basis");
    return Matrix::from_columns(F, m.cols(), cols);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw InputError("solve: right-hand side has length " + std::to_string(b.size()) +
                         " but matrix has " + std::to_string(m.rows()) + " rows");
    const Field& F = m.field();
    Echelon e(F, m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(sparse_row(m, r, true, &b[r]));
    if (e.pivot_map()[m.cols()] >= 0) return std::nullopt;
    Vector x(m.cols());
    for (const auto& row : e.reduced()) {
        if (row.cols.back() == m.cols()) x[row.cols.front()] = row.vals.back();
    }
    return x;
}

CochainComplex::CochainComplex(Field field, int first_degree, std::vector<std::size_t> dims,
                               std::vector<Matrix> differentials)
    : field_(field), first_(first_degree), dims_(std::move(dims)), diffs_(std::move(differentials)) {
    if (dims_.empty()) throw InputError("cochain complex needs at least one degree");
    if (diffs_.size() + 1 != dims_.size())
        throw InputError("cochain complex with " + std::to_string(dims_.size()) +
                         " degrees needs " + std::to_string(dims_.size() - 1) + " differentials");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        const Matrix& d = diffs_[i];
        if (d.field() != field_) throw InputError("differential over a different field");
        if (d.cols() != dims_[i] || d.rows() != dims_[i + 1])
            throw InputError("differential in degree " + std::to_string(first_ + int(i)) +
                             " has the wrong shape");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i)
        if (!(diffs_[i + 1] * diffs_[i]).is_zero())
            throw InvariantViolation("d∘d != 0 at degree " + std::to_string(first_ + int(i)));
}

std::size_t CochainComplex::dim(int n) const {
    if (n < first_ || n > last_degree())
        throw InputError("degree " + std::to_string(n) + " outside complex range [" +
                         std::to_string(first_) + ", " + std::to_string(last_degree()) + "]");
    return dims_[n - first_];
}

const Matrix* CochainComplex::differential(int n) const {
    if (n < first_ || n >= last_degree()) return nullptr;
    return &diffs_[n - first_];
}

std::size_t cohomology_dim(const CochainComplex& c, int n) {
    std::size_t d = c.dim(n);
    std::size_t ker = d;
    if (const Matrix* dn = c.differential(n)) ker = d - rank(*dn);
    std::size_t im = 0;
    if (const Matrix* dp = c.differential(n - 1)) im = rank(*dp);
    return ker - im;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
    std::vector<std::size_t> ranks(c.dims().size(), 0);  // ranks[i] = rank d^{first+i}
    for (int n = c.first_degree(); n < c.last_degree(); ++n)
        ranks[n - c.first_degree()] = rank(*c.differential(n));
    std::vector<std::size_t> out;
    for (int n = c.first_degree(); n <= c.last_degree(); ++n) {
        std::size_t i = n - c.first_degree();
        std::size_t h = c.dim(n) - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
        out.push_back(h);
    }
    return out;
}

Matrix cohomology_basis(const CochainComplex& c, int n) {
    std::size_t d = c.dim(n);
    Matrix cocycles = c.differential(n) ? kernel_basis(*c.differential(n))
                                        : Matrix::identity(c.field(), d);
    Matrix boundaries = c.differential(n - 1) ? *c.differential(n - 1) : Matrix(c.field(), d, 0);
    auto picked = independent_columns(boundaries.hstack(cocycles));
    std::vector<std::size_t> reps;
    for (auto j : picked)
        if (j >= boundaries.cols()) reps.push_back(j - boundaries.cols());
    return cocycles.select_columns(reps);
}

}  // namespace cotorlab
