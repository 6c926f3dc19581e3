#include "cotorlab/algebra.hpp"

#include <sstream>

#include "cotorlab/linalg.hpp"

namespace cotorlab {

std::string ValidationReport::summary() const {
    if (violations.empty()) return "valid";
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& v : violations) {
        if (shown++ == 8) {
            os << " ... (" << violations.size() << " violations)";
            break;
        }
        if (shown > 1) os << "; ";
        os << v.constraint << "(";
        for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
        os << ")";
        if (!v.detail.empty()) os << " " << v.detail;
    }
    return os.str();
}

namespace {

void check_grading(const std::optional<std::vector<int>>& g, std::size_t dim, const char* what) {
    if (g && g->size() != dim)
        throw InputError(std::string(what) + " grading has " + std::to_string(g->size()) +
                         " entries for dimension " + std::to_string(dim));
}

}  // namespace

Algebra::Algebra(Field field, std::size_t dim, std::vector<Scalar> mul, Vector unit,
                 std::vector<std::string> labels, std::optional<std::vector<int>> grading,
                 std::optional<Vector> augmentation) {
    if (mul.size() != dim * dim * dim)
        throw InputError("algebra of dimension " + std::to_string(dim) + " needs " +
                         std::to_string(dim * dim * dim) + " structure constants");
    if (unit.size() != dim) throw InputError("unit vector has the wrong length");
    if (!labels.empty() && labels.size() != dim) throw InputError("label count mismatch");
    if (augmentation && augmentation->size() != dim)
        throw InputError("augmentation has the wrong length");
    check_grading(grading, dim, "algebra");
    d_ = std::make_shared<const Data>(Data{field, dim, std::move(mul), std::move(unit),
                                           std::move(labels), std::move(grading),
                                           std::move(augmentation)});
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
    const Field& F = field();
    std::size_t n = dim();
    if (a.size() != n || b.size() != n) throw InputError("multiply: element length mismatch");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = F.mul(a[i], b[j]);
            for (std::size_t k = 0; k < n; ++k)
                if (!mul(i, j, k).is_zero()) out[k] = F.add(out[k], F.mul(c, mul(i, j, k)));
        }
    }
    return out;
}

Matrix Algebra::left_multiplication(std::size_t i) const {
    MatrixBuilder b(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) b.set(k, j, mul(i, j, k));
    return std::move(b).build();
}

Matrix Algebra::right_multiplication(std::size_t i) const {
    MatrixBuilder b(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k) b.set(k, j, mul(j, i, k));
    return std::move(b).build();
}

Vector Algebra::canonical_element() const {
    Vector v(dim() * dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i * dim() + i] = field().one();
    return v;
}

Algebra Algebra::with_grading(std::optional<std::vector<int>> grading) const {
    check_grading(grading, dim(), "algebra");
    Data d = *d_;
    d.grading = std::move(grading);
    return Algebra(std::make_shared<const Data>(std::move(d)));
}

Algebra Algebra::with_augmentation(std::optional<Vector> augmentation) const {
    if (augmentation && augmentation->size() != dim())
        throw InputError("augmentation has the wrong length");
    Data d = *d_;
    d.augmentation = std::move(augmentation);
    return Algebra(std::make_shared<const Data>(std::move(d)));
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != dim()) throw InputError("label count mismatch");
    Data d = *d_;
    d.labels = std::move(labels);
    return Algebra(std::make_shared<const Data>(std::move(d)));
}

bool operator==(const Algebra& a, const Algebra& b) {
    if (a.d_ == b.d_) return true;
    return a.field() == b.field() && a.dim() == b.dim() &&
           a.structure_constants() == b.structure_constants() && a.unit() == b.unit() &&
           a.grading() == b.grading() && a.augmentation() == b.augmentation() &&
           a.labels() == b.labels();
}

Coalgebra::Coalgebra(Field field, std::size_t dim, std::vector<Scalar> comul, Vector counit,
                     std::vector<std::string> labels, std::optional<std::vector<int>> grading) {
    if (comul.size() != dim * dim * dim)
        throw InputError("coalgebra of dimension " + std::to_string(dim) + " needs " +
                         std::to_string(dim * dim * dim) + " structure constants");
    if (counit.size() != dim) throw InputError("counit has the wrong length");
    if (!labels.empty() && labels.size() != dim) throw InputError("label count mismatch");
    check_grading(grading, dim, "coalgebra");
    d_ = std::make_shared<const Data>(
        Data{field, dim, std::move(comul), std::move(counit), std::move(labels), std::move(grading)});
}

Coalgebra Coalgebra::with_grading(std::optional<std::vector<int>> grading) const {
    check_grading(grading, dim(), "coalgebra");
    Data d = *d_;
    d.grading = std::move(grading);
    return Coalgebra(std::make_shared<const Data>(std::move(d)));
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
    if (a.d_ == b.d_) return true;
    return a.field() == b.field() && a.dim() == b.dim() &&
           a.structure_constants() == b.structure_constants() && a.counit() == b.counit() &&
           a.grading() == b.grading() && a.labels() == b.labels();
}

ValidationReport validate_algebra(const Algebra& a) {
    ValidationReport rep;
    const Field& F = a.field();
    const std::size_t n = a.dim();
    if (n == 0) {
        rep.add("dimension", {}, "algebra must be nonzero");
        return rep;
    }
    // products[i*n+j] = e_i e_j
    std::vector<Vector> prod(n * n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) prod[i * n + j][k] = a.mul(i, j, k);

    for (std::size_t i = 0; i < n; ++i) {
        Vector left(n), right(n);
        for (std::size_t u = 0; u < n; ++u) {
            if (a.unit()[u].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                left[k] = F.add(left[k], F.mul(a.unit()[u], a.mul(u, i, k)));
                right[k] = F.add(right[k], F.mul(a.unit()[u], a.mul(i, u, k)));
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            Scalar expect = k == i ? F.one() : F.zero();
            if (left[k] != expect) {
                rep.add("left-unit", {i});
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) {
            Scalar expect = k == i ? F.one() : F.zero();
            if (right[k] != expect) {
                rep.add("right-unit", {i});
                break;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                // (e_i e_j) e_l versus e_i (e_j e_l)
                bool bad = false;
                for (std::size_t r = 0; r < n && !bad; ++r) {
                    Scalar lhs, rhs;
                    for (std::size_t k = 0; k < n; ++k) {
                        if (!a.mul(i, j, k).is_zero())
                            lhs = F.add(lhs, F.mul(a.mul(i, j, k), a.mul(k, l, r)));
                        if (!a.mul(j, l, k).is_zero())
                            rhs = F.add(rhs, F.mul(a.mul(j, l, k), a.mul(i, k, r)));
                    }
                    bad = lhs != rhs;
                }
                if (bad) rep.add("associativity", {i, j, l});
            }

    if (a.is_graded()) {
        for (std::size_t i = 0; i < n; ++i)
            if (a.degree(i) < 0) rep.add("grading-negative", {i});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a.mul(i, j, k).is_zero() && a.degree(i) + a.degree(j) != a.degree(k))
                        rep.add("grading", {i, j, k});
        for (std::size_t u = 0; u < n; ++u)
            if (!a.unit()[u].is_zero() && a.degree(u) != 0) rep.add("grading-unit", {u});
    }

    if (const auto& aug = a.augmentation()) {
        Scalar on_unit;
        for (std::size_t u = 0; u < n; ++u) on_unit = F.add(on_unit, F.mul((*aug)[u], a.unit()[u]));
        if (!on_unit.is_one()) rep.add("augmentation-unit", {});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Scalar lhs;
                for (std::size_t k = 0; k < n; ++k) lhs = F.add(lhs, F.mul((*aug)[k], a.mul(i, j, k)));
                if (lhs != F.mul((*aug)[i], (*aug)[j])) rep.add("augmentation", {i, j});
            }
    }
    return rep;
}

ValidationReport validate_coalgebra(const Coalgebra& c) {
    ValidationReport rep;
    const Field& F = c.field();
    const std::size_t n = c.dim();
    if (n == 0) {
        rep.add("dimension", {}, "coalgebra must be nonzero");
        return rep;
    }
    for (std::size_t k = 0; k < n; ++k) {
        bool bad = false;
        for (std::size_t a = 0; a < n && !bad; ++a)
            for (std::size_t b = 0; b < n && !bad; ++b)
                for (std::size_t d = 0; d < n && !bad; ++d) {
                    // coefficient of c_a (x) c_b (x) c_d
                    Scalar lhs, rhs;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (!c.comul(k, i, d).is_zero())
                            lhs = F.add(lhs, F.mul(c.comul(k, i, d), c.comul(i, a, b)));
                        if (!c.comul(k, a, i).is_zero())
                            rhs = F.add(rhs, F.mul(c.comul(k, a, i), c.comul(i, b, d)));
                    }
                    bad = lhs != rhs;
                }
        if (bad) rep.add("coassociativity", {k});

        bool left_bad = false, right_bad = false;
        for (std::size_t j = 0; j < n; ++j) {
            Scalar l, r;
            for (std::size_t i = 0; i < n; ++i) {
                l = F.add(l, F.mul(c.counit()[i], c.comul(k, i, j)));
                r = F.add(r, F.mul(c.counit()[i], c.comul(k, j, i)));
            }
            Scalar expect = j == k ? F.one() : F.zero();
            left_bad |= l != expect;
            right_bad |= r != expect;
        }
        if (left_bad) rep.add("left-counit", {k});
        if (right_bad) rep.add("right-counit", {k});
    }
    if (c.is_graded()) {
        for (std::size_t i = 0; i < n; ++i)
            if (c.degree(i) < 0) rep.add("grading-negative", {i});
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!c.comul(k, i, j).is_zero() && c.degree(i) + c.degree(j) != c.degree(k))
                        rep.add("grading", {k, i, j});
        for (std::size_t k = 0; k < n; ++k)
            if (!c.counit()[k].is_zero() && c.degree(k) != 0) rep.add("grading-counit", {k});
    }
    return rep;
}

namespace {

std::vector<std::string> starred(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) {
        if (l.size() > 1 && l.back() == '*')
            out.push_back(l.substr(0, l.size() - 1));
        else
            out.push_back(l + "*");
    }
    return out;
}

}  // namespace

Coalgebra dual_coalgebra(const Algebra& a) {
    if (auto rep = validate_algebra(a); !rep.ok()) throw ValidationError("dual_coalgebra", rep);
    const std::size_t n = a.dim();
    std::vector<Scalar> comul(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) comul[(k * n + i) * n + j] = a.mul(i, j, k);
    return Coalgebra(a.field(), n, std::move(comul), a.unit(), starred(a.labels()), a.grading());
}

Algebra dual_algebra(const Coalgebra& c) {
    if (auto rep = validate_coalgebra(c); !rep.ok()) throw ValidationError("dual_algebra", rep);
    const std::size_t n = c.dim();
    std::vector<Scalar> mul(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = c.comul(k, i, j);
    return Algebra(c.field(), n, std::move(mul), c.counit(), starred(c.labels()), c.grading());
}

Algebra opposite(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Scalar> mul(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) mul[(i * n + j) * n + k] = a.mul(j, i, k);
    return Algebra(a.field(), n, std::move(mul), a.unit(), a.labels(), a.grading(),
                   a.augmentation());
}

Algebra enveloping(const Algebra& a) {
    const Field& F = a.field();
    const std::size_t n = a.dim();
    const std::size_t N = n * n;
    std::vector<Scalar> mul(N * N * N);
    // (e_i (x) e_j)(e_p (x) e_q) = e_i e_p (x) e_q e_j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    for (std::size_t k = 0; k < n; ++k) {
                        if (a.mul(i, p, k).is_zero()) continue;
                        for (std::size_t l = 0; l < n; ++l) {
                            if (a.mul(q, j, l).is_zero()) continue;
                            mul[((i * n + j) * N + (p * n + q)) * N + (k * n + l)] =
                                F.mul(a.mul(i, p, k), a.mul(q, j, l));
                        }
                    }
    Vector unit(N);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) unit[i * n + j] = F.mul(a.unit()[i], a.unit()[j]);
    std::vector<std::string> labels;
    if (!a.labels().empty())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) labels.push_back(a.labels()[i] + "|" + a.labels()[j]);
    std::optional<std::vector<int>> grading;
    if (a.is_graded()) {
        grading.emplace();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) grading->push_back(a.degree(i) + a.degree(j));
    }
    return Algebra(F, N, std::move(mul), std::move(unit), std::move(labels), std::move(grading));
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    auto [red, pivots] = rref(m.hstack(Matrix::identity(m.field(), n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n))
        throw InputError("matrix is singular");
    std::vector<std::size_t> right;
    for (std::size_t j = n; j < 2 * n; ++j) right.push_back(j);
    return red.select_columns(right);
}

Algebra change_of_basis(const Algebra& a, const Matrix& P, std::optional<std::vector<int>> grading) {
    const Field& F = a.field();
    const std::size_t n = a.dim();
    if (P.rows() != n || P.cols() != n) throw InputError("change_of_basis: wrong shape");
    Matrix Q = inverse(P);
    std::vector<Vector> cols(n);
    for (std::size_t c = 0; c < n; ++c) cols[c] = P.column(c);
    std::vector<Scalar> mul(n * n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector prod = Q.apply(a.multiply(cols[x], cols[y]));
            for (std::size_t z = 0; z < n; ++z) mul[(x * n + y) * n + z] = prod[z];
        }
    Vector unit = Q.apply(a.unit());
    std::optional<Vector> aug;
    if (a.augmentation()) aug = P.transpose().apply(*a.augmentation());
    return Algebra(F, n, std::move(mul), std::move(unit), {}, std::move(grading), std::move(aug));
}

Coalgebra change_of_basis(const Coalgebra& c, const Matrix& P,
                          std::optional<std::vector<int>> grading) {
    const Field& F = c.field();
    const std::size_t n = c.dim();
    if (P.rows() != n || P.cols() != n) throw InputError("change_of_basis: wrong shape");
    Matrix Q = inverse(P);
    std::vector<Scalar> comul(n * n * n);
    for (std::size_t x = 0; x < n; ++x) {
        // Delta(f_x) in old coordinates, as an n x n coefficient table
        std::vector<Scalar> t(n * n);
        for (std::size_t k = 0; k < n; ++k) {
            if (P.at(k, x).is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!c.comul(k, i, j).is_zero())
                        t[i * n + j] = F.add(t[i * n + j], F.mul(P.at(k, x), c.comul(k, i, j)));
        }
        Matrix T(F, n, n, std::move(t));
        Matrix R = Q * T * Q.transpose();
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) comul[(x * n + y) * n + z] = R.at(y, z);
    }
    Vector counit = P.transpose().apply(c.counit());
    return Coalgebra(F, n, std::move(comul), std::move(counit), {}, std::move(grading));
}

}  // namespace cotorlab
