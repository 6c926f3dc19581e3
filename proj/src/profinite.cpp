#include "cotorlab/profinite.hpp"

#include <string>

#include "cotorlab/constructors.hpp"

namespace cotorlab {

ValidationReport validate_tower(const Tower& t) {
    ValidationReport rep;
    if (t.levels.empty()) {
        rep.add("empty", {});
        return rep;
    }
    if (t.projections.size() + 1 != t.levels.size()) {
        rep.add("projection-count", {});
        return rep;
    }
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        auto r = validate_algebra(t.levels[i]);
        if (!r.ok()) {
            rep.add("level", {i});
            rep.merge(r, "level-");
        }
    }
    for (std::size_t i = 0; i < t.projections.size(); ++i) {
        const Algebra& lo = t.levels[i];
        const Algebra& hi = t.levels[i + 1];
        const Matrix& p = t.projections[i];
        const Field& F = lo.field();
        if (hi.field() != F || p.field() != F || p.rows() != lo.dim() || p.cols() != hi.dim()) {
            rep.add("projection-shape", {i});
            continue;
        }
        if (rank(p) != lo.dim()) rep.add("surjective", {i});
        if (p.apply(hi.unit()) != lo.unit()) rep.add("unital", {i});
        for (std::size_t a = 0; a < hi.dim(); ++a)
            for (std::size_t b = 0; b < hi.dim(); ++b) {
                Vector ab(hi.dim());
                for (std::size_t k = 0; k < hi.dim(); ++k) ab[k] = hi.mul(a, b, k);
                if (p.apply(ab) != lo.multiply(p.column(a), p.column(b))) rep.add("multiplicative", {i, a, b});
            }
    }
    return rep;
}

Tower group_algebra_tower(const Field& F, std::size_t p, std::size_t depth) {
    if (depth == 0) throw InputError("tower depth must be at least 1");
    if (p < 2) throw InputError("tower prime must be at least 2");
    Tower t;
    std::size_t order = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        t.levels.push_back(cyclic_group_algebra(F, order));
        if (i > 0) {
            std::size_t prev = order / p;
            MatrixBuilder b(F, prev, order);
            for (std::size_t j = 0; j < order; ++j) b.set(j % prev, j, F.one());
            t.projections.push_back(std::move(b).build());
        }
        order = checked_power(p, static_cast<int>(i + 1));
    }
    return t;
}

Matrix composite_projection(const Tower& t, std::size_t low, std::size_t high) {
    if (low > high || high >= t.levels.size()) throw InputError("projection levels out of order");
    Matrix P = Matrix::identity(t.levels[high].field(), t.levels[high].dim());
    for (std::size_t i = high; i > low; --i) P = t.projections[i - 1] * P;
    return P;
}

Bimodule epsilon_twist(const LeftModule& m) {
    const Algebra& a = m.algebra();
    if (!a.augmentation()) throw InputError("algebra has no designated augmentation");
    const Vector& eps = *a.augmentation();
    Matrix I = Matrix::identity(a.field(), m.dim());
    std::vector<Matrix> right;
    for (std::size_t i = 0; i < a.dim(); ++i) right.push_back(I.scaled(eps[i]));
    return Bimodule(a, m.actions(), std::move(right), m.grading());
}

LevelBimodule epsilon_bimodule(const Tower& t, std::size_t level, const LeftModule& m) {
    if (level >= t.levels.size()) throw InputError("level out of range");
    if (m.algebra() != t.levels[level]) throw InputError("module is not over the level algebra");
    return {level, epsilon_twist(m)};
}

namespace {

Matrix tensor_power(const Matrix& m, int n) {
    Matrix out = Matrix::identity(m.field(), 1);
    for (int i = 0; i < n; ++i) out = out.kron(m);
    return out;
}

void check_inclusion(const Tower& t, const LevelBimodule& low, const LevelBimodule& high,
                     const Matrix& inclusion) {
    if (low.level > high.level || high.level >= t.levels.size())
        throw InputError("bimodule levels out of order");
    const Bimodule& bl = low.bimodule;
    const Bimodule& bh = high.bimodule;
    if (bl.algebra() != t.levels[low.level] || bh.algebra() != t.levels[high.level])
        throw InputError("bimodule is not over its level algebra");
    if (inclusion.rows() != bh.dim() || inclusion.cols() != bl.dim())
        throw InputError("inclusion has the wrong shape");
    if (rank(inclusion) != bl.dim()) throw InputError("inclusion is not injective");
    Matrix P = composite_projection(t, low.level, high.level);
    const Field& F = bl.algebra().field();
    for (std::size_t a = 0; a < bh.algebra().dim(); ++a) {
        Matrix L(F, bl.dim(), bl.dim()), R(F, bl.dim(), bl.dim());
        for (std::size_t k = 0; k < bl.algebra().dim(); ++k) {
            if (P.at(k, a).is_zero()) continue;
            L = L + bl.left(k).scaled(P.at(k, a));
            R = R + bl.right(k).scaled(P.at(k, a));
        }
        if (bh.left(a) * inclusion != inclusion * L || bh.right(a) * inclusion != inclusion * R)
            throw InputError("inclusion does not intertwine the actions (generator " + std::to_string(a) + ")");
    }
}

Matrix cochain_map_unchecked(const Tower& t, const LevelBimodule& low, const LevelBimodule& high,
                             const Matrix& inclusion, int n) {
    Matrix P = composite_projection(t, low.level, high.level);
    return tensor_power(P.transpose(), n).kron(inclusion);
}

}  // namespace

Matrix induced_cochain_map(const Tower& t, const LevelBimodule& low, const LevelBimodule& high,
                           const Matrix& inclusion, int n) {
    if (n < 0) throw InputError("cochain degree must be nonnegative");
    check_inclusion(t, low, high, inclusion);
    Matrix f = cochain_map_unchecked(t, low, high, inclusion, n);
    Matrix g = cochain_map_unchecked(t, low, high, inclusion, n + 1);
    Matrix d_low = bar_differential(low.bimodule.algebra(), low.bimodule, n);
    Matrix d_high = bar_differential(high.bimodule.algebra(), high.bimodule, n);
    if (d_high * f != g * d_low)
        throw InvariantViolation("induced cochain map does not commute with d in degree " + std::to_string(n));
    return f;
}

Matrix induced_cohomology_map(const CochainComplex& low, const CochainComplex& high,
                              const Matrix& cochain_map, int n) {
    const Field& F = low.field();
    Matrix zl = cohomology_basis(low, n);
    Matrix zh = cohomology_basis(high, n);
    Matrix bh = high.differential(n - 1) ? *high.differential(n - 1) : Matrix(F, high.dim(n), 0);
    Matrix system = zh.hstack(bh);
    MatrixBuilder out(F, zh.cols(), zl.cols());
    for (std::size_t j = 0; j < zl.cols(); ++j) {
        auto x = solve(system, cochain_map.apply(zl.column(j)));
        if (!x) throw InvariantViolation("image of a cocycle is not a cocycle in degree " + std::to_string(n));
        for (std::size_t i = 0; i < zh.cols(); ++i) out.set(i, j, (*x)[i]);
    }
    return std::move(out).build();
}

ColimitReport colimit_report(const Tower& t, const std::vector<LevelBimodule>& bimodules,
                             const std::vector<Matrix>& inclusions, int n_max) {
    auto rep = validate_tower(t);
    if (!rep.ok()) throw ValidationError("colimit_report: tower", rep);
    if (n_max < 0) throw InputError("max degree must be nonnegative");
    const std::size_t levels = t.levels.size();
    if (bimodules.size() != levels) throw InputError("need one bimodule per level");
    if (inclusions.size() + 1 != levels) throw InputError("need one inclusion per projection");
    for (std::size_t i = 0; i < levels; ++i) {
        if (bimodules[i].level != i) throw InputError("bimodule " + std::to_string(i) + " is declared at another level");
        auto r = validate_module(bimodules[i].bimodule);
        if (!r.ok()) throw ValidationError("colimit_report: bimodule " + std::to_string(i), r);
    }

    ColimitReport out;
    out.n_max = n_max;
    std::vector<BarComplex> cx;
    for (std::size_t i = 0; i < levels; ++i) {
        cx.push_back(bar_complex(t.levels[i], bimodules[i].bimodule, n_max));
        std::vector<std::size_t> dims;
        for (int n = 0; n <= n_max; ++n) dims.push_back(cohomology_dim(cx[i].complex, n));
        out.level_dims.push_back(std::move(dims));
    }

    // inclusion composites B_i -> B_k
    auto composite_inclusion = [&](std::size_t i, std::size_t k) {
        const Field& F = t.levels[i].field();
        Matrix m = Matrix::identity(F, bimodules[i].bimodule.dim());
        for (std::size_t j = i; j < k; ++j) m = inclusions[j] * m;
        return m;
    };

    // maps[n][i][k] for i < k computed straight from the cochain maps
    std::vector<std::vector<std::vector<std::optional<Matrix>>>> maps(
        n_max + 1, std::vector<std::vector<std::optional<Matrix>>>(levels, std::vector<std::optional<Matrix>>(levels)));
    for (int n = 0; n <= n_max; ++n)
        for (std::size_t i = 0; i < levels; ++i)
            for (std::size_t k = i + 1; k < levels; ++k) {
                Matrix f = induced_cochain_map(t, bimodules[i], bimodules[k], composite_inclusion(i, k), n);
                ++out.chain_maps_checked;
                maps[n][i][k] = induced_cohomology_map(cx[i].complex, cx[k].complex, f, n);
            }

    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t i = 0; i < levels; ++i)
            for (std::size_t j = i + 1; j < levels; ++j)
                for (std::size_t k = j + 1; k < levels; ++k)
                    if (*maps[n][i][k] != *maps[n][j][k] * *maps[n][i][j])
                        throw InvariantViolation("induced maps do not compose in degree " + std::to_string(n));
        std::vector<Matrix> steps;
        for (std::size_t i = 0; i + 1 < levels; ++i) steps.push_back(*maps[n][i][i + 1]);
        out.step_maps.push_back(std::move(steps));
    }

    const std::size_t top = t.top();
    for (std::size_t i = 0; i < levels; ++i) {
        std::vector<std::size_t> ranks;
        for (int n = 0; n <= n_max; ++n)
            ranks.push_back(i == top ? out.level_dims[top][n] : rank(*maps[n][i][top]));
        out.stable_image.push_back(std::move(ranks));
    }
    out.stable_dims = out.stable_image[top == 0 ? 0 : top - 1];
    return out;
}

ColimitReport colimit_report(const Tower& t, const std::vector<LeftModule>& lefts,
                             const std::vector<RightModule>& rights,
                             const std::vector<Matrix>& inclusions, int n_max) {
    if (lefts.size() != t.levels.size() || rights.size() != t.levels.size())
        throw InputError("need one module pair per level");
    std::vector<LevelBimodule> bimodules;
    for (std::size_t i = 0; i < lefts.size(); ++i) bimodules.push_back({i, tensor_bimodule(lefts[i], rights[i])});
    ColimitReport out = colimit_report(t, bimodules, inclusions, n_max);
    std::vector<std::vector<std::size_t>> cotor;
    for (std::size_t i = 0; i < lefts.size(); ++i)
        cotor.push_back(cotor_dims(module_to_comodule(lefts[i]), module_to_comodule(rights[i]), n_max));
    out.cotor_dims = std::move(cotor);
    return out;
}

}  // namespace cotorlab
