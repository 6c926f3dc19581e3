#include "cotorlab/instances.hpp"

#include <random>

#include "cotorlab/linalg.hpp"

namespace cotorlab {

Matrix random_invertible(const Field& F, std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-2, 2);
    while (true) {
        MatrixBuilder b(F, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) b.set(r, c, F.from_int(dist(rng)));
        Matrix m = std::move(b).build();
        if (rank(m) == n) return m;
    }
}

namespace {

// span of the standard basis vectors first..dim-1
Matrix tail_span(const Field& F, std::size_t dim, std::size_t first) {
    std::vector<Vector> cols;
    for (std::size_t i = first; i < dim; ++i) {
        Vector v(dim);
        v[i] = F.one();
        cols.push_back(std::move(v));
    }
    return Matrix::from_columns(F, dim, cols);
}

Matrix all_ones(const Field& F, std::size_t dim) {
    return Matrix::from_columns(F, dim, {Vector(dim, F.one())});
}

Vector unit_vector(const Field& F, std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = F.one();
    return v;
}

}  // namespace

std::vector<Instance> instance_library(const Field& F, std::uint32_t seed) {
    std::vector<Instance> out;
    std::uint32_t s = seed;
    auto add = [&](std::string name, LeftModule m, RightModule n) {
        out.push_back({F.name() + " " + name, std::move(m), std::move(n)});
    };
    auto P = [&](std::size_t n) { return random_invertible(F, n, s++); };

    {
        Algebra k = ground_algebra(F);
        LeftModule k2 = direct_sum(trivial_left_module(k), trivial_left_module(k));
        add("k: k^2, k", k2, trivial_right_module(k));
        add("k: conj k^2, k^3", conjugate(k2, P(2)),
            direct_sum(trivial_right_module(k), direct_sum(trivial_right_module(k), trivial_right_module(k))));
    }
    {
        Algebra a = cyclic_group_algebra(F, 2);
        Vector sign{F.one(), F.neg(F.one())};
        add("k[Z/2]: regular, trivial", regular_left_module(a), trivial_right_module(a));
        add("k[Z/2]: trivial, trivial", trivial_left_module(a), trivial_right_module(a));
        add("k[Z/2]: sign+trivial, conj regular", direct_sum(character_left_module(a, sign), trivial_left_module(a)),
            conjugate(regular_right_module(a), P(2)));
    }
    {
        Algebra a = cyclic_group_algebra(F, 3);
        LeftModule q = quotient(regular_left_module(a), all_ones(F, 3));
        add("k[Z/3]: regular/norm, trivial", q, trivial_right_module(a));
        add("k[Z/3]: trivial, regular", trivial_left_module(a), regular_right_module(a));
    }
    {
        Algebra a = cyclic_group_algebra(F, 4);
        LeftModule q = quotient(regular_left_module(a), all_ones(F, 4));
        add("k[Z/4]: trivial, trivial", trivial_left_module(a), trivial_right_module(a));
        add("k[Z/4]: regular/norm, trivial", conjugate(q, P(3)), trivial_right_module(a));
    }
    {
        Algebra a = klein_four_algebra(F);
        Vector chi{F.one(), F.one(), F.neg(F.one()), F.neg(F.one())};
        add("k[Z/2xZ/2]: trivial, trivial", trivial_left_module(a), trivial_right_module(a));
        add("k[Z/2xZ/2]: chi+trivial, chi", direct_sum(character_left_module(a, chi), trivial_left_module(a)),
            character_right_module(a, chi));
    }
    {
        Algebra a = truncated_polynomial(F, 2);
        add("k[x]/x^2: regular, regular", regular_left_module(a), regular_right_module(a));
        add("k[x]/x^2: trivial, trivial", trivial_left_module(a), trivial_right_module(a));
        add("k[x]/x^2: conj regular, trivial", conjugate(regular_left_module(a), P(2)), trivial_right_module(a));
    }
    {
        Algebra a = truncated_polynomial(F, 3);
        add("k[x]/x^3: regular, trivial", regular_left_module(a), trivial_right_module(a));
        add("k[x]/x^3: regular/x^2, regular", quotient(regular_left_module(a), tail_span(F, 3, 2)),
            regular_right_module(a));
    }
    {
        Algebra a = truncated_polynomial(F, 4);
        add("k[x]/x^4: regular/x^3, trivial", quotient(regular_left_module(a), tail_span(F, 4, 3)),
            trivial_right_module(a));
        add("k[x]/x^4: trivial, regular/x^2", trivial_left_module(a),
            quotient(regular_right_module(a), tail_span(F, 4, 2)));
    }
    {
        Algebra kk = product(ground_algebra(F), ground_algebra(F));
        Vector e1 = unit_vector(F, 2, 0), e2 = unit_vector(F, 2, 1);
        add("k x k: k_1, k_2", character_left_module(kk, e1), character_right_module(kk, e2));
        add("k x k: k_1, k_1", character_left_module(kk, e1), character_right_module(kk, e1));
        add("k x k: regular, k_2", regular_left_module(kk), character_right_module(kk, e2));
    }
    {
        Algebra a = product(ground_algebra(F), truncated_polynomial(F, 2));
        Vector second = unit_vector(F, 3, 1);  // (0, 1) is the unit of k[x]/x^2
        add("k x k[x]/x^2: regular, k_2", regular_left_module(a), character_right_module(a, second));
    }
    {
        Algebra m2 = matrix_algebra(F, 2);
        add("M_2: column, row", column_module(m2, 2), row_module(m2, 2));
        add("M_2: conj column, conj row", conjugate(column_module(m2, 2), P(2)), conjugate(row_module(m2, 2), P(2)));
    }
    {
        Algebra t = upper_triangular(F, 2);  // basis E11, E12, E22
        Vector s1 = unit_vector(F, 3, 0), s2 = unit_vector(F, 3, 2);
        add("T_2: regular, S_1", regular_left_module(t), character_right_module(t, s1));
        add("T_2: S_2, regular", character_left_module(t, s2), regular_right_module(t));
        add("T_2: S_1, S_2", character_left_module(t, s1), character_right_module(t, s2));
    }
    return out;
}

std::vector<Instance> standard_instances(std::uint32_t seed) {
    std::vector<Instance> out;
    for (const Field& F : {Field::prime(2), Field::prime(5), Field::rationals()}) {
        auto part = instance_library(F, seed);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace cotorlab
