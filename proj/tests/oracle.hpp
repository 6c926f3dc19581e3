#pragma once

// Brute-force reference computations used to pin expected values in tests.
// Shares no code with the library: plain GMP rationals, dense matrices, and
// differentials assembled as compositions of Kronecker products.

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;  // row-major, Mat[r][c]

// p = 0 means the rationals.
struct Arith {
    long p = 0;

    Q norm(Q v) const {
        if (p == 0) {
            v.canonicalize();
            return v;
        }
        mpz_class n = v.get_num(), d = v.get_den(), pp = p, inv;
        mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
        mpz_class r = (n * inv) % pp;
        if (r < 0) r += pp;
        return Q(r);
    }
};

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, std::vector<Q>(c, Q(0))); }

inline Mat eye(std::size_t n) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Mat mul(const Arith& k, const Mat& a, const Mat& b, std::size_t inner) {
    std::size_t r = a.size(), c = b.empty() ? 0 : b[0].size();
    Mat out = zeros(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < c; ++j)
                if (b[l][j] != 0) out[i][j] += a[i][l] * b[l][j];
        }
    for (auto& row : out)
        for (auto& v : row) v = k.norm(v);
    return out;
}

inline Mat kron(const Mat& a, std::size_t ac, const Mat& b, std::size_t bc) {
    Mat out = zeros(a.size() * b.size(), ac * bc);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < ac; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < bc; ++l) out[i * b.size() + k][j * bc + l] = a[i][j] * b[k][l];
        }
    return out;
}

inline std::size_t rank(const Arith& k, Mat m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = k.norm(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return r;
}

inline std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Cohomology dims in degrees 0..n_max of a complex given by its
// differentials d^0 .. d^{n_max} with dims[n] = source dimension of d^n.
inline std::vector<std::size_t> cohomology(const Arith& k, const std::vector<Mat>& d,
                                           const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> rk;
    for (std::size_t n = 0; n < d.size(); ++n) rk.push_back(rank(k, d[n], dims[n]));
    std::vector<std::size_t> h;
    for (std::size_t n = 0; n < d.size(); ++n) h.push_back(dims[n] - rk[n] - (n ? rk[n - 1] : 0));
    return h;
}

// Algebra data: mul[i][j][k] for e_i e_j = sum_k mul e_k.
struct AlgebraData {
    std::size_t dim;
    std::vector<std::vector<std::vector<long>>> mul;
};

// Bimodule via action matrices L[i], R[i] (dimB x dimB, column convention).
struct BimoduleData {
    std::size_t dim;
    std::vector<Mat> left, right;
};

// mu: A (x) A -> A as a dimA x dimA^2 matrix.
inline Mat mult_map(const AlgebraData& a) {
    Mat m = zeros(a.dim, a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k) m[k][i * a.dim + j] = a.mul[i][j][k];
    return m;
}

// A (x) B -> B for the left action, B (x) A -> B for the right action.
inline std::pair<Mat, Mat> action_maps(const AlgebraData& a, const BimoduleData& b) {
    Mat L = zeros(b.dim, a.dim * b.dim), R = zeros(b.dim, b.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c) {
                L[r][i * b.dim + c] = b.left[i][r][c];
                R[r][c * a.dim + i] = b.right[i][r][c];
            }
    return {L, R};
}

// Hochschild cohomology by treating a cochain as a dimB x dimA^n matrix F and
// computing dF = muL (1 (x) F) + sum (-1)^i F (1 (x) mu (x) 1) + (-1)^{n+1} muR (F (x) 1).
inline std::vector<std::size_t> hochschild(const Arith& k, const AlgebraData& a,
                                           const BimoduleData& b, int n_max) {
    Mat mu = mult_map(a);
    auto [muL, muR] = action_maps(a, b);
    std::vector<Mat> ds;
    std::vector<std::size_t> dims;
    for (int n = 0; n <= n_max; ++n) {
        std::size_t in = ipow(a.dim, n), out = ipow(a.dim, n + 1);
        Mat d = zeros(out * b.dim, in * b.dim);
        for (std::size_t J = 0; J < in; ++J)
            for (std::size_t r = 0; r < b.dim; ++r) {
                Mat F = zeros(b.dim, in);
                F[r][J] = 1;
                Mat dF = mul(k, muL, kron(eye(a.dim), a.dim, F, in), a.dim * b.dim);
                for (int i = 1; i <= n; ++i) {
                    Mat mid = kron(kron(eye(ipow(a.dim, i - 1)), ipow(a.dim, i - 1), mu, a.dim * a.dim),
                                   ipow(a.dim, i + 1), eye(ipow(a.dim, n - i)), ipow(a.dim, n - i));
                    Mat t = mul(k, F, mid, in);
                    for (std::size_t x = 0; x < b.dim; ++x)
                        for (std::size_t y = 0; y < out; ++y)
                            dF[x][y] = k.norm(dF[x][y] + (i % 2 ? -1 : 1) * t[x][y]);
                }
                Mat last = mul(k, muR, kron(F, in, eye(a.dim), a.dim), b.dim * a.dim);
                for (std::size_t x = 0; x < b.dim; ++x)
                    for (std::size_t y = 0; y < out; ++y)
                        dF[x][y] = k.norm(dF[x][y] + ((n + 1) % 2 ? -1 : 1) * last[x][y]);
                for (std::size_t x = 0; x < b.dim; ++x)
                    for (std::size_t y = 0; y < out; ++y) d[y * b.dim + x][J * b.dim + r] = dF[x][y];
            }
        ds.push_back(std::move(d));
        dims.push_back(in * b.dim);
    }
    return cohomology(k, ds, dims);
}

// Coalgebra data: comul[k][i][j], counit[k].
struct CoalgebraData {
    std::size_t dim;
    std::vector<std::vector<std::vector<long>>> comul;
};

// Cobar cohomology with coface maps assembled as Kronecker products:
// Delta_M (x) 1, 1 (x) Delta_C (x) 1 at each slot, 1 (x) Delta_N.
// coM: (dM*dC) x dM matrix of M -> M (x) C; coN: (dC*dN) x dN of N -> C (x) N.
inline std::vector<std::size_t> cotor(const Arith& k, const CoalgebraData& c, const Mat& coM,
                                      std::size_t dM, const Mat& coN, std::size_t dN, int n_max) {
    Mat D = zeros(c.dim * c.dim, c.dim);
    for (std::size_t x = 0; x < c.dim; ++x)
        for (std::size_t i = 0; i < c.dim; ++i)
            for (std::size_t j = 0; j < c.dim; ++j) D[i * c.dim + j][x] = c.comul[x][i][j];
    std::vector<Mat> ds;
    std::vector<std::size_t> dims;
    for (int s = 0; s <= n_max; ++s) {
        std::size_t cs = ipow(c.dim, s);
        std::size_t in = dM * cs * dN, out = in * c.dim;
        Mat d = kron(coM, dM, eye(cs * dN), cs * dN);
        auto accumulate = [&](const Mat& t, int sign) {
            for (std::size_t x = 0; x < out; ++x)
                for (std::size_t y = 0; y < in; ++y) d[x][y] = k.norm(d[x][y] + sign * t[x][y]);
        };
        for (int i = 1; i <= s; ++i) {
            std::size_t pre = dM * ipow(c.dim, i - 1), post = ipow(c.dim, s - i) * dN;
            accumulate(kron(kron(eye(pre), pre, D, c.dim), pre * c.dim, eye(post), post), i % 2 ? -1 : 1);
        }
        accumulate(kron(eye(dM * cs), dM * cs, coN, dN), (s + 1) % 2 ? -1 : 1);
        ds.push_back(std::move(d));
        dims.push_back(in);
    }
    return cohomology(k, ds, dims);
}

}  // namespace oracle
