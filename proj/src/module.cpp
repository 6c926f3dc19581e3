#include "cotorlab/module.hpp"

#include <functional>
#include <string>

#include "cotorlab/linalg.hpp"

namespace cotorlab {

namespace {

void check_actions(const Algebra& a, const std::vector<Matrix>& action, std::size_t dim,
                   const char* what) {
    if (action.size() != a.dim())
        throw InputError(std::string(what) + ": expected " + std::to_string(a.dim()) +
                         " action matrices, got " + std::to_string(action.size()));
    for (const auto& m : action) {
        if (m.field() != a.field()) throw InputError(std::string(what) + ": field mismatch");
        if (m.rows() != dim || m.cols() != dim)
            throw InputError(std::string(what) + ": action matrices must be " +
                             std::to_string(dim) + "x" + std::to_string(dim));
    }
}

std::size_t dim_of(const std::vector<Matrix>& action, const Algebra& a, const char* what) {
    if (action.empty()) {
        if (a.dim() != 0) throw InputError(std::string(what) + ": missing action matrices");
        return 0;
    }
    return action.front().rows();
}

void check_grading(const Grading& g, std::size_t dim, const char* what) {
    if (g && g->size() != dim)
        throw InputError(std::string(what) + ": grading has " + std::to_string(g->size()) +
                         " entries for dimension " + std::to_string(dim));
}

Grading negated(const Grading& g) {
    if (!g) return std::nullopt;
    std::vector<int> out;
    for (int d : *g) out.push_back(-d);
    return out;
}

// action of the element sum_k coeffs[k] e_k
Matrix combine(const Field& F, const std::vector<Matrix>& action, std::size_t dim,
               const std::function<Scalar(std::size_t)>& coeff, std::size_t n) {
    MatrixBuilder b(F, dim, dim);
    for (std::size_t k = 0; k < n; ++k) {
        Scalar c = coeff(k);
        if (c.is_zero()) continue;
        const Matrix& A = action[k];
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t s = 0; s < dim; ++s)
                if (!A.at(r, s).is_zero()) b.add(r, s, F.mul(c, A.at(r, s)));
    }
    return std::move(b).build();
}

// left == true: action(e_i e_j) = action(i) action(j); else action(j) action(i).
void check_action_laws(ValidationReport& rep, const Algebra& a, const std::vector<Matrix>& action,
                       std::size_t dim, bool left, const std::string& prefix,
                       const Grading& grading) {
    const Field& F = a.field();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = combine(F, action, dim, [&](std::size_t k) { return a.mul(i, j, k); }, n);
            Matrix rhs = left ? action[i] * action[j] : action[j] * action[i];
            if (lhs != rhs) rep.add(prefix + "action", {i, j});
        }
    Matrix u = combine(F, action, dim, [&](std::size_t k) { return a.unit()[k]; }, n);
    if (u != Matrix::identity(F, dim)) rep.add(prefix + "unit", {});
    if (grading) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t s = 0; s < dim; ++s)
                    if (!action[i].at(r, s).is_zero() &&
                        (*grading)[r] != (*grading)[s] + a.degree(i))
                        rep.add(prefix + "grading", {i, r, s});
    }
}

}  // namespace

LeftModule::LeftModule(Algebra algebra, std::vector<Matrix> action, Grading grading)
    : algebra_(std::move(algebra)),
      dim_(dim_of(action, algebra_, "left module")),
      action_(std::move(action)),
      grading_(std::move(grading)) {
    check_actions(algebra_, action_, dim_, "left module");
    check_grading(grading_, dim_, "left module");
}

RightModule::RightModule(Algebra algebra, std::vector<Matrix> action, Grading grading)
    : algebra_(std::move(algebra)),
      dim_(dim_of(action, algebra_, "right module")),
      action_(std::move(action)),
      grading_(std::move(grading)) {
    check_actions(algebra_, action_, dim_, "right module");
    check_grading(grading_, dim_, "right module");
}

Bimodule::Bimodule(Algebra algebra, std::vector<Matrix> left, std::vector<Matrix> right,
                   Grading grading)
    : algebra_(std::move(algebra)),
      dim_(dim_of(left, algebra_, "bimodule")),
      left_(std::move(left)),
      right_(std::move(right)),
      grading_(std::move(grading)) {
    check_actions(algebra_, left_, dim_, "bimodule left action");
    check_actions(algebra_, right_, dim_, "bimodule right action");
    check_grading(grading_, dim_, "bimodule");
}

RightComodule::RightComodule(Coalgebra coalgebra, std::size_t dim, std::vector<Scalar> coaction,
                             Grading grading)
    : coalgebra_(std::move(coalgebra)),
      dim_(dim),
      coaction_(std::move(coaction)),
      grading_(std::move(grading)) {
    if (coaction_.size() != dim_ * dim_ * coalgebra_.dim())
        throw InputError("right comodule: coaction needs " +
                         std::to_string(dim_ * dim_ * coalgebra_.dim()) + " entries");
    check_grading(grading_, dim_, "right comodule");
}

LeftComodule::LeftComodule(Coalgebra coalgebra, std::size_t dim, std::vector<Scalar> coaction,
                           Grading grading)
    : coalgebra_(std::move(coalgebra)),
      dim_(dim),
      coaction_(std::move(coaction)),
      grading_(std::move(grading)) {
    if (coaction_.size() != dim_ * dim_ * coalgebra_.dim())
        throw InputError("left comodule: coaction needs " +
                         std::to_string(dim_ * dim_ * coalgebra_.dim()) + " entries");
    check_grading(grading_, dim_, "left comodule");
}

ValidationReport validate_module(const LeftModule& m) {
    ValidationReport rep;
    rep.merge(validate_algebra(m.algebra()), "algebra-");
    check_action_laws(rep, m.algebra(), m.actions(), m.dim(), true, "", m.grading());
    return rep;
}

ValidationReport validate_module(const RightModule& m) {
    ValidationReport rep;
    rep.merge(validate_algebra(m.algebra()), "algebra-");
    check_action_laws(rep, m.algebra(), m.actions(), m.dim(), false, "", m.grading());
    return rep;
}

ValidationReport validate_module(const Bimodule& b) {
    ValidationReport rep;
    rep.merge(validate_algebra(b.algebra()), "algebra-");
    check_action_laws(rep, b.algebra(), b.lefts(), b.dim(), true, "left-", b.grading());
    check_action_laws(rep, b.algebra(), b.rights(), b.dim(), false, "right-", b.grading());
    for (std::size_t i = 0; i < b.algebra().dim(); ++i)
        for (std::size_t j = 0; j < b.algebra().dim(); ++j)
            if (b.left(i) * b.right(j) != b.right(j) * b.left(i)) rep.add("commutation", {i, j});
    return rep;
}

ValidationReport validate_comodule(const RightComodule& m) {
    ValidationReport rep;
    const Coalgebra& C = m.coalgebra();
    rep.merge(validate_coalgebra(C), "coalgebra-");
    const Field& F = C.field();
    const std::size_t d = m.dim(), c = C.dim();
    for (std::size_t x = 0; x < d; ++x) {
        bool bad = false;
        // coefficient of b_y (x) c_a (x) c_b
        for (std::size_t y = 0; y < d && !bad; ++y)
            for (std::size_t a = 0; a < c && !bad; ++a)
                for (std::size_t b = 0; b < c && !bad; ++b) {
                    Scalar lhs, rhs;
                    for (std::size_t z = 0; z < d; ++z)
                        if (!m.rho(x, z, b).is_zero())
                            lhs = F.add(lhs, F.mul(m.rho(x, z, b), m.rho(z, y, a)));
                    for (std::size_t k = 0; k < c; ++k)
                        if (!m.rho(x, y, k).is_zero())
                            rhs = F.add(rhs, F.mul(m.rho(x, y, k), C.comul(k, a, b)));
                    bad = lhs != rhs;
                }
        if (bad) rep.add("coassociativity", {x});
        for (std::size_t y = 0; y < d; ++y) {
            Scalar s;
            for (std::size_t k = 0; k < c; ++k) s = F.add(s, F.mul(m.rho(x, y, k), C.counit()[k]));
            if (s != (x == y ? F.one() : F.zero())) {
                rep.add("counit", {x});
                break;
            }
        }
    }
    if (m.is_graded())
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t k = 0; k < c; ++k)
                    if (!m.rho(x, y, k).is_zero() && m.degree(x) != m.degree(y) + C.degree(k))
                        rep.add("grading", {x, y, k});
    return rep;
}

ValidationReport validate_comodule(const LeftComodule& n) {
    ValidationReport rep;
    const Coalgebra& C = n.coalgebra();
    rep.merge(validate_coalgebra(C), "coalgebra-");
    const Field& F = C.field();
    const std::size_t d = n.dim(), c = C.dim();
    for (std::size_t x = 0; x < d; ++x) {
        bool bad = false;
        // coefficient of c_a (x) c_b (x) b_y
        for (std::size_t y = 0; y < d && !bad; ++y)
            for (std::size_t a = 0; a < c && !bad; ++a)
                for (std::size_t b = 0; b < c && !bad; ++b) {
                    Scalar lhs, rhs;
                    for (std::size_t k = 0; k < c; ++k)
                        if (!n.lambda(x, k, y).is_zero())
                            lhs = F.add(lhs, F.mul(n.lambda(x, k, y), C.comul(k, a, b)));
                    for (std::size_t z = 0; z < d; ++z)
                        if (!n.lambda(x, a, z).is_zero())
                            rhs = F.add(rhs, F.mul(n.lambda(x, a, z), n.lambda(z, b, y)));
                    bad = lhs != rhs;
                }
        if (bad) rep.add("coassociativity", {x});
        for (std::size_t y = 0; y < d; ++y) {
            Scalar s;
            for (std::size_t k = 0; k < c; ++k)
                s = F.add(s, F.mul(C.counit()[k], n.lambda(x, k, y)));
            if (s != (x == y ? F.one() : F.zero())) {
                rep.add("counit", {x});
                break;
            }
        }
    }
    if (n.is_graded())
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t k = 0; k < c; ++k)
                for (std::size_t y = 0; y < d; ++y)
                    if (!n.lambda(x, k, y).is_zero() && n.degree(x) != C.degree(k) + n.degree(y))
                        rep.add("grading", {x, k, y});
    return rep;
}

RightComodule module_to_comodule(const LeftModule& m) {
    if (auto rep = validate_module(m); !rep.ok()) throw ValidationError("module_to_comodule", rep);
    const std::size_t d = m.dim(), n = m.algebra().dim();
    std::vector<Scalar> rho(d * d * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) rho[(x * d + y) * n + i] = m.action(i).at(y, x);
    return RightComodule(dual_coalgebra(m.algebra()), d, std::move(rho), negated(m.grading()));
}

LeftModule comodule_to_module(const RightComodule& m) {
    if (auto rep = validate_comodule(m); !rep.ok()) throw ValidationError("comodule_to_module", rep);
    const Field& F = m.coalgebra().field();
    const std::size_t d = m.dim(), n = m.coalgebra().dim();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n; ++i) {
        MatrixBuilder b(F, d, d);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) b.set(y, x, m.rho(x, y, i));
        action.push_back(std::move(b).build());
    }
    return LeftModule(dual_algebra(m.coalgebra()), std::move(action), negated(m.grading()));
}

LeftComodule module_to_comodule(const RightModule& m) {
    if (auto rep = validate_module(m); !rep.ok()) throw ValidationError("module_to_comodule", rep);
    const std::size_t d = m.dim(), n = m.algebra().dim();
    std::vector<Scalar> lambda(d * d * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) lambda[(x * n + i) * d + y] = m.action(i).at(y, x);
    return LeftComodule(dual_coalgebra(m.algebra()), d, std::move(lambda), negated(m.grading()));
}

RightModule comodule_to_module(const LeftComodule& m) {
    if (auto rep = validate_comodule(m); !rep.ok()) throw ValidationError("comodule_to_module", rep);
    const Field& F = m.coalgebra().field();
    const std::size_t d = m.dim(), n = m.coalgebra().dim();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n; ++i) {
        MatrixBuilder b(F, d, d);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) b.set(y, x, m.lambda(x, i, y));
        action.push_back(std::move(b).build());
    }
    return RightModule(dual_algebra(m.coalgebra()), std::move(action), negated(m.grading()));
}

RightModule dual_right_module(const LeftModule& m) {
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) action.push_back(a.transpose());
    return RightModule(m.algebra(), std::move(action), negated(m.grading()));
}

LeftModule dual_left_module(const RightModule& n) {
    std::vector<Matrix> action;
    for (const auto& a : n.actions()) action.push_back(a.transpose());
    return LeftModule(n.algebra(), std::move(action), negated(n.grading()));
}

LeftComodule contragredient(const RightComodule& m) {
    const std::size_t d = m.dim(), c = m.coalgebra().dim();
    std::vector<Scalar> lambda(d * d * c);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t k = 0; k < c; ++k) lambda[(y * c + k) * d + x] = m.rho(x, y, k);
    return LeftComodule(m.coalgebra(), d, std::move(lambda), negated(m.grading()));
}

RightComodule coaction_from_dual(const LeftModule& m) {
    if (auto rep = validate_module(m); !rep.ok()) throw ValidationError("coaction_from_dual", rep);
    RightModule dm = dual_right_module(m);
    const std::size_t d = m.dim(), n = m.algebra().dim();
    std::vector<Scalar> rho(d * d * n);
    // (b^x . e_i)(b_y) is the coefficient of b^y in b^x . e_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) rho[(x * d + y) * n + i] = dm.action(i).at(x, y);
    return RightComodule(dual_coalgebra(m.algebra()), d, std::move(rho), negated(m.grading()));
}

Bimodule tensor_bimodule(const LeftModule& m, const RightModule& n) {
    if (m.algebra() != n.algebra()) throw InputError("tensor_bimodule: modules over different algebras");
    const Field& F = m.algebra().field();
    Matrix Im = Matrix::identity(F, m.dim()), In = Matrix::identity(F, n.dim());
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        left.push_back(m.action(i).kron(In));
        right.push_back(Im.kron(n.action(i)));
    }
    Grading g;
    if (m.is_graded() || n.is_graded()) {
        g.emplace();
        for (std::size_t x = 0; x < m.dim(); ++x)
            for (std::size_t y = 0; y < n.dim(); ++y) g->push_back(m.degree(x) + n.degree(y));
    }
    return Bimodule(m.algebra(), std::move(left), std::move(right), std::move(g));
}

std::vector<Matrix> module_homs(const LeftModule& m, const LeftModule& n) {
    if (m.algebra() != n.algebra()) throw InputError("module_homs: modules over different algebras");
    const Field& F = m.algebra().field();
    const std::size_t dm = m.dim(), dn = n.dim(), k = m.algebra().dim();
    // unknown f (dn x dm) at f(r, c) -> r * dm + c; equations N_i f - f M_i = 0
    MatrixBuilder eq(F, k * dn * dm, dn * dm);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                std::size_t row = (i * dn + r) * dm + c;
                for (std::size_t s = 0; s < dn; ++s)
                    if (!n.action(i).at(r, s).is_zero()) eq.add(row, s * dm + c, n.action(i).at(r, s));
                for (std::size_t s = 0; s < dm; ++s)
                    if (!m.action(i).at(s, c).is_zero())
                        eq.add(row, r * dm + s, F.neg(m.action(i).at(s, c)));
            }
    Matrix K = kernel_basis(std::move(eq).build());
    std::vector<Matrix> out;
    for (std::size_t j = 0; j < K.cols(); ++j) out.emplace_back(F, dn, dm, K.column(j));
    return out;
}

bool is_comodule_map(const Matrix& f, const RightComodule& m, const RightComodule& mp) {
    const Coalgebra& C = m.coalgebra();
    if (C != mp.coalgebra()) throw InputError("is_comodule_map: different coalgebras");
    if (f.rows() != mp.dim() || f.cols() != m.dim()) throw InputError("is_comodule_map: wrong shape");
    const Field& F = C.field();
    for (std::size_t x = 0; x < m.dim(); ++x)
        for (std::size_t z = 0; z < mp.dim(); ++z)
            for (std::size_t k = 0; k < C.dim(); ++k) {
                // coefficient of b'_z (x) c_k in (f (x) 1) rho(b_x) and rho'(f b_x)
                Scalar lhs, rhs;
                for (std::size_t y = 0; y < m.dim(); ++y)
                    lhs = F.add(lhs, F.mul(m.rho(x, y, k), f.at(z, y)));
                for (std::size_t w = 0; w < mp.dim(); ++w)
                    rhs = F.add(rhs, F.mul(f.at(w, x), mp.rho(w, z, k)));
                if (lhs != rhs) return false;
            }
    return true;
}

LeftModule regular_left_module(const Algebra& a) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.left_multiplication(i));
    return LeftModule(a, std::move(action), a.grading());
}

RightModule regular_right_module(const Algebra& a) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.right_multiplication(i));
    return RightModule(a, std::move(action), a.grading());
}

Bimodule regular_bimodule(const Algebra& a) {
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        left.push_back(a.left_multiplication(i));
        right.push_back(a.right_multiplication(i));
    }
    return Bimodule(a, std::move(left), std::move(right), a.grading());
}

namespace {

std::vector<Matrix> character_actions(const Algebra& a, const Vector& chi) {
    if (chi.size() != a.dim()) throw InputError("character has the wrong length");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.dim(); ++i) action.emplace_back(a.field(), 1, 1, Vector{chi[i]});
    return action;
}

const Vector& require_augmentation(const Algebra& a) {
    if (!a.augmentation()) throw InputError("algebra has no designated augmentation");
    return *a.augmentation();
}

Grading single_degree(const Algebra& a, int degree) {
    if (!a.is_graded() && degree == 0) return std::nullopt;
    return std::vector<int>{degree};
}

}  // namespace

LeftModule character_left_module(const Algebra& a, const Vector& chi, int degree) {
    return LeftModule(a, character_actions(a, chi), single_degree(a, degree));
}

RightModule character_right_module(const Algebra& a, const Vector& chi, int degree) {
    return RightModule(a, character_actions(a, chi), single_degree(a, degree));
}

LeftModule trivial_left_module(const Algebra& a) {
    return character_left_module(a, require_augmentation(a));
}

RightModule trivial_right_module(const Algebra& a) {
    return character_right_module(a, require_augmentation(a));
}

RightComodule regular_right_comodule(const Coalgebra& c) {
    const std::size_t d = c.dim();
    std::vector<Scalar> co(d * d * d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t mp = 0; mp < d; ++mp)
            for (std::size_t k = 0; k < d; ++k) co[(m * d + mp) * d + k] = c.comul(m, mp, k);
    return RightComodule(c, d, std::move(co), c.grading());
}

LeftComodule regular_left_comodule(const Coalgebra& c) {
    const std::size_t d = c.dim();
    std::vector<Scalar> co(d * d * d);
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t np = 0; np < d; ++np) co[(n * d + k) * d + np] = c.comul(n, k, np);
    return LeftComodule(c, d, std::move(co), c.grading());
}

namespace {

void require_grouplike(const Coalgebra& c, const Vector& g) {
    const Field& F = c.field();
    if (g.size() != c.dim()) throw InputError("grouplike: vector has the wrong length");
    Scalar e = F.zero();
    for (std::size_t k = 0; k < c.dim(); ++k) e = F.add(e, F.mul(c.counit()[k], g[k]));
    if (e != F.one()) throw InputError("grouplike: counit of g is not 1");
    for (std::size_t i = 0; i < c.dim(); ++i)
        for (std::size_t j = 0; j < c.dim(); ++j) {
            Scalar v = F.zero();
            for (std::size_t k = 0; k < c.dim(); ++k) v = F.add(v, F.mul(g[k], c.comul(k, i, j)));
            if (v != F.mul(g[i], g[j])) throw InputError("grouplike: Delta g != g (x) g");
        }
}

}  // namespace

RightComodule grouplike_right_comodule(const Coalgebra& c, const Vector& g, int degree) {
    require_grouplike(c, g);
    Grading gr;
    if (c.is_graded() || degree != 0) gr = std::vector<int>{degree};
    return RightComodule(c, 1, g, gr);
}

LeftComodule grouplike_left_comodule(const Coalgebra& c, const Vector& g, int degree) {
    require_grouplike(c, g);
    Grading gr;
    if (c.is_graded() || degree != 0) gr = std::vector<int>{degree};
    return LeftComodule(c, 1, g, gr);
}

LeftModule column_module(const Algebra& matrices, std::size_t n) {
    if (matrices.dim() != n * n) throw InputError("column_module: algebra is not M_n");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatrixBuilder b(matrices.field(), n, n);
            b.set(i, j, matrices.field().one());
            action.push_back(std::move(b).build());
        }
    return LeftModule(matrices, std::move(action));
}

RightModule row_module(const Algebra& matrices, std::size_t n) {
    if (matrices.dim() != n * n) throw InputError("row_module: algebra is not M_n");
    std::vector<Matrix> action;
    // v E_ij = v_i e_j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatrixBuilder b(matrices.field(), n, n);
            b.set(j, i, matrices.field().one());
            action.push_back(std::move(b).build());
        }
    return RightModule(matrices, std::move(action));
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    MatrixBuilder m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.set(r, c, a.at(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.set(a.rows() + r, a.cols() + c, b.at(r, c));
    return std::move(m).build();
}

template <class M>
M direct_sum_impl(const M& a, const M& b) {
    if (a.algebra() != b.algebra()) throw InputError("direct_sum: modules over different algebras");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.algebra().dim(); ++i)
        action.push_back(block_diag(a.action(i), b.action(i)));
    Grading g;
    if (a.is_graded() || b.is_graded()) {
        g.emplace();
        for (std::size_t x = 0; x < a.dim(); ++x) g->push_back(a.degree(x));
        for (std::size_t x = 0; x < b.dim(); ++x) g->push_back(b.degree(x));
    }
    return M(a.algebra(), std::move(action), std::move(g));
}

template <class M>
M conjugate_impl(const M& m, const Matrix& P) {
    if (P.rows() != m.dim() || P.cols() != m.dim()) throw InputError("conjugate: wrong shape");
    Matrix Q = inverse(P);
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) action.push_back(Q * a * P);
    return M(m.algebra(), std::move(action));
}

int leading_degree(const Matrix& sub, std::size_t col, const Grading& g) {
    for (std::size_t r = 0; r < sub.rows(); ++r)
        if (!sub.at(r, col).is_zero()) return (*g)[r];
    return 0;
}

// Restricts to `sub` or passes to the quotient, working in a basis that
// extends the columns of `sub` by standard vectors.
template <class M>
M split_impl(const M& m, const Matrix& sub, bool want_quotient) {
    const Field& F = m.algebra().field();
    const std::size_t d = m.dim();
    if (sub.rows() != d) throw InputError("subspace basis has the wrong number of rows");
    const std::size_t s = sub.cols();
    if (rank(sub) != s) throw InputError("subspace basis columns are dependent");
    auto picked = independent_columns(sub.hstack(Matrix::identity(F, d)));
    std::vector<std::size_t> complement;
    for (auto j : picked)
        if (j >= s) complement.push_back(j - s);
    Matrix B = sub.hstack(Matrix::identity(F, d).select_columns(complement));
    Matrix Binv = inverse(B);
    std::vector<std::size_t> lo, hi;
    for (std::size_t j = 0; j < s; ++j) lo.push_back(j);
    for (std::size_t j = s; j < d; ++j) hi.push_back(j);
    std::vector<Matrix> action;
    for (const auto& a : m.actions()) {
        Matrix X = Binv * a * B;
        for (std::size_t r = s; r < d; ++r)
            for (std::size_t c = 0; c < s; ++c)
                if (!X.at(r, c).is_zero()) throw InputError("subspace is not invariant");
        const auto& idx = want_quotient ? hi : lo;
        action.push_back(X.select_rows(idx).select_columns(idx));
    }
    Grading g;
    if (m.is_graded()) {
        g.emplace();
        if (want_quotient)
            for (auto j : complement) g->push_back(m.degree(j));
        else
            for (std::size_t j = 0; j < s; ++j) g->push_back(leading_degree(sub, j, m.grading()));
    }
    return M(m.algebra(), std::move(action), std::move(g));
}

}  // namespace

LeftModule direct_sum(const LeftModule& a, const LeftModule& b) { return direct_sum_impl(a, b); }
RightModule direct_sum(const RightModule& a, const RightModule& b) { return direct_sum_impl(a, b); }
LeftModule conjugate(const LeftModule& m, const Matrix& P) { return conjugate_impl(m, P); }
RightModule conjugate(const RightModule& m, const Matrix& P) { return conjugate_impl(m, P); }
LeftModule quotient(const LeftModule& m, const Matrix& sub) { return split_impl(m, sub, true); }
RightModule quotient(const RightModule& m, const Matrix& sub) { return split_impl(m, sub, true); }
LeftModule submodule(const LeftModule& m, const Matrix& sub) { return split_impl(m, sub, false); }
RightModule submodule(const RightModule& m, const Matrix& sub) { return split_impl(m, sub, false); }

LeftModule with_grading(const LeftModule& m, Grading g) {
    return LeftModule(m.algebra(), m.actions(), std::move(g));
}

RightModule with_grading(const RightModule& m, Grading g) {
    return RightModule(m.algebra(), m.actions(), std::move(g));
}

}  // namespace cotorlab
