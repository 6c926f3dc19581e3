#include "cotorlab/constructors.hpp"

#include <string>

namespace cotorlab {

namespace {

std::vector<Scalar> zeros(std::size_t d) { return std::vector<Scalar>(d * d * d); }

std::size_t at(std::size_t d, std::size_t i, std::size_t j, std::size_t k) {
    return (i * d + j) * d + k;
}

}  // namespace

Algebra ground_algebra(const Field& F) {
    return Algebra(F, 1, {F.one()}, {F.one()}, {"1"}, std::nullopt, Vector{F.one()});
}

Coalgebra ground_coalgebra(const Field& F) {
    return Coalgebra(F, 1, {F.one()}, {F.one()}, {"1"});
}

Algebra group_algebra(const Field& F, const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw InputError("group table is empty");
    auto mul = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw InputError("group table is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] >= n) throw InputError("group table entry out of range");
            mul[at(n, i, j, table[i][j])] = F.one();
        }
    }
    Vector unit(n);
    unit[0] = F.one();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    return Algebra(F, n, std::move(mul), std::move(unit), std::move(labels), std::nullopt,
                   Vector(n, F.one()));
}

Algebra cyclic_group_algebra(const Field& F, std::size_t n) {
    if (n == 0) throw InputError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return group_algebra(F, table);
}

Algebra cyclic_group_algebra_unipotent(const Field& F, std::size_t n) {
    Algebra a = cyclic_group_algebra(F, n);
    // column i holds the group-basis coordinates of (g - 1)^i
    std::vector<Vector> cols;
    Vector u(n, F.zero());
    u[0] = F.one();
    Vector g_minus_1(n, F.zero());
    if (n > 1) g_minus_1[1] = F.one();
    g_minus_1[0] = F.sub(g_minus_1[0], F.one());
    for (std::size_t i = 0; i < n; ++i) {
        cols.push_back(u);
        u = a.multiply(u, g_minus_1);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "u" : "u^" + std::to_string(i));
    return change_of_basis(a, Matrix::from_columns(F, n, cols)).with_labels(std::move(labels));
}

Algebra klein_four_algebra(const Field& F) {
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) table[i][j] = i ^ j;
    return group_algebra(F, table);
}

Algebra truncated_polynomial(const Field& F, std::size_t n, int degree_of_x) {
    if (n == 0) throw InputError("k[x]/x^0 is the zero ring");
    auto mul = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) mul[at(n, i, j, i + j)] = F.one();
    Vector unit(n), aug(n);
    unit[0] = aug[0] = F.one();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    std::optional<std::vector<int>> grading;
    if (degree_of_x > 0) {
        grading.emplace();
        for (std::size_t i = 0; i < n; ++i) grading->push_back(static_cast<int>(i) * degree_of_x);
    } else if (degree_of_x < 0) {
        throw InputError("algebra gradings are nonnegative");
    }
    return Algebra(F, n, std::move(mul), std::move(unit), std::move(labels), std::move(grading),
                   std::move(aug));
}

Algebra matrix_algebra(const Field& F, std::size_t n) {
    if (n == 0) throw InputError("M_0 is the zero ring");
    const std::size_t d = n * n;
    auto mul = zeros(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) mul[at(d, i * n + j, j * n + l, i * n + l)] = F.one();
    Vector unit(d);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = F.one();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    return Algebra(F, d, std::move(mul), std::move(unit), std::move(labels));
}

Algebra upper_triangular(const Field& F, std::size_t n) {
    if (n == 0) throw InputError("upper_triangular(0) is the zero ring");
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
    const std::size_t d = basis.size();
    auto index = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < d; ++k)
            if (basis[k] == std::pair{i, j}) return k;
        return d;
    };
    auto mul = zeros(d);
    Vector unit(d);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < d; ++a) {
        auto [i, j] = basis[a];
        if (i == j) unit[a] = F.one();
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        for (std::size_t b = 0; b < d; ++b)
            if (basis[b].first == j) mul[at(d, a, b, index(i, basis[b].second))] = F.one();
    }
    // the character picking the (0,0) entry
    Vector aug(d);
    aug[index(0, 0)] = F.one();
    return Algebra(F, d, std::move(mul), std::move(unit), std::move(labels), std::nullopt,
                   std::move(aug));
}

Algebra product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw InputError("product: different fields");
    const Field& F = a.field();
    const std::size_t da = a.dim(), db = b.dim(), d = da + db;
    auto mul = zeros(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) mul[at(d, i, j, k)] = a.mul(i, j, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) mul[at(d, da + i, da + j, da + k)] = b.mul(i, j, k);
    Vector unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        for (const auto& l : a.labels()) labels.push_back(l + ",0");
        for (const auto& l : b.labels()) labels.push_back("0," + l);
    }
    std::optional<std::vector<int>> grading;
    if (a.is_graded() || b.is_graded()) {
        grading.emplace();
        for (std::size_t i = 0; i < da; ++i) grading->push_back(a.degree(i));
        for (std::size_t i = 0; i < db; ++i) grading->push_back(b.degree(i));
    }
    std::optional<Vector> aug;
    if (a.augmentation()) {
        aug = *a.augmentation();
        aug->resize(d);
    }
    return Algebra(F, d, std::move(mul), std::move(unit), std::move(labels), std::move(grading),
                   std::move(aug));
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw InputError("tensor_product: different fields");
    const Field& F = a.field();
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    auto mul = zeros(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l) {
                    Scalar sign = F.sign(static_cast<long long>(b.degree(j)) * a.degree(k));
                    for (std::size_t p = 0; p < da; ++p) {
                        if (a.mul(i, k, p).is_zero()) continue;
                        for (std::size_t q = 0; q < db; ++q) {
                            if (b.mul(j, l, q).is_zero()) continue;
                            mul[at(d, i * db + j, k * db + l, p * db + q)] =
                                F.mul(sign, F.mul(a.mul(i, k, p), b.mul(j, l, q)));
                        }
                    }
                }
    Vector unit(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = F.mul(a.unit()[i], b.unit()[j]);
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty())
        for (const auto& x : a.labels())
            for (const auto& y : b.labels()) labels.push_back(x + "*" + y);
    std::optional<std::vector<int>> grading;
    if (a.is_graded() || b.is_graded()) {
        grading.emplace();
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j) grading->push_back(a.degree(i) + b.degree(j));
    }
    std::optional<Vector> aug;
    if (a.augmentation() && b.augmentation()) {
        aug.emplace(d);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j)
                (*aug)[i * db + j] = F.mul((*a.augmentation())[i], (*b.augmentation())[j]);
    }
    return Algebra(F, d, std::move(mul), std::move(unit), std::move(labels), std::move(grading),
                   std::move(aug));
}

Algebra exterior_algebra(const Field& F, const std::vector<int>& degrees) {
    Algebra out = ground_algebra(F).with_grading(std::vector<int>{0});
    for (int deg : degrees) {
        if (deg <= 0) throw InputError("exterior generators need positive degree");
        out = tensor_product(out, truncated_polynomial(F, 2, deg));
    }
    if (!degrees.empty()) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < out.dim(); ++i) {
            // basis index bits, most significant generator first
            std::string l;
            for (std::size_t g = 0; g < degrees.size(); ++g)
                if (i >> (degrees.size() - 1 - g) & 1) l += "x" + std::to_string(g + 1);
            labels.push_back(l.empty() ? "1" : l);
        }
        out = out.with_labels(std::move(labels));
    }
    return out;
}

Coalgebra sphere_homology(const Field& F, int n) {
    if (n <= 0) throw InputError("sphere dimension must be positive");
    auto comul = zeros(2);
    comul[at(2, 0, 0, 0)] = F.one();
    comul[at(2, 1, 0, 1)] = F.one();
    comul[at(2, 1, 1, 0)] = F.one();
    return Coalgebra(F, 2, std::move(comul), {F.one(), F.zero()}, {"1", "y"}, std::vector<int>{0, n});
}

}  // namespace cotorlab
