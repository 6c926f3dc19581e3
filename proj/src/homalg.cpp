#include "cotorlab/homalg.hpp"

#include <limits>
#include <string>
#include <tuple>

namespace cotorlab {

std::size_t checked_power(std::size_t base, int e) {
    if (e < 0) throw InputError("negative tensor power");
    std::size_t out = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base)
            throw InputError("tensor power too large");
        out *= base;
    }
    return out;
}

PhiMap phi_map(const Bimodule& b) {
    const Field& F = b.algebra().field();
    const std::size_t d = b.dim(), n = b.algebra().dim();
    MatrixBuilder m(F, d * n, d);
    for (std::size_t i = 0; i < n; ++i) {
        const Matrix& L = b.left(i);
        const Matrix& R = b.right(i);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                Scalar v = F.sub(L.at(r, c), R.at(r, c));
                if (!v.is_zero()) m.set(r * n + i, c, v);
            }
    }
    return {b, std::move(m).build()};
}

Matrix cotensor_map(const RightComodule& m, const LeftComodule& n) {
    return cobar_differential(m, n, 0);
}

Matrix cotensor(const RightComodule& m, const LeftComodule& n) {
    return kernel_basis(cotensor_map(m, n));
}

Matrix hom_Ae(const Bimodule& b) { return kernel_basis(phi_map(b).matrix); }

Matrix twist_to_phi_order(const Field& F, std::size_t dm, std::size_t dc, std::size_t dn) {
    MatrixBuilder p(F, dm * dc * dn, dm * dc * dn);
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t k = 0; k < dc; ++k)
            for (std::size_t y = 0; y < dn; ++y) p.set((x * dn + y) * dc + k, (x * dc + k) * dn + y, F.one());
    return std::move(p).build();
}

Matrix bar_differential(const Algebra& a, const Bimodule& b, int n) {
    const Field& F = a.field();
    const std::size_t dA = a.dim(), dB = b.dim();
    const std::size_t in_tuples = checked_power(dA, n);
    const std::size_t out_tuples = checked_power(dA, n + 1);
    MatrixBuilder D(F, out_tuples * dB, in_tuples * dB);

    // products landing on each basis element: e_p e_q = ... + c e_k
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> onto(dA);
    for (std::size_t p = 0; p < dA; ++p)
        for (std::size_t q = 0; q < dA; ++q)
            for (std::size_t k = 0; k < dA; ++k)
                if (!a.mul(p, q, k).is_zero()) onto[k].emplace_back(p, q, a.mul(p, q, k));

    std::vector<std::size_t> digits(n);
    for (std::size_t J = 0; J < in_tuples; ++J) {
        // digits of J, most significant first
        std::size_t t = J;
        for (int p = n - 1; p >= 0; --p) {
            digits[p] = t % dA;
            t /= dA;
        }
        for (std::size_t r = 0; r < dB; ++r) {
            std::size_t col = J * dB + r;
            // a_1 f(a_2, ..., a_{n+1})
            for (std::size_t i = 0; i < dA; ++i) {
                std::size_t I = i * in_tuples + J;
                const Matrix& L = b.left(i);
                for (std::size_t rp = 0; rp < dB; ++rp)
                    if (!L.at(rp, r).is_zero()) D.add(I * dB + rp, col, L.at(rp, r));
            }
            // (-1)^p f(..., a_p a_{p+1}, ...)
            for (int p = 1; p <= n; ++p) {
                std::size_t k = digits[p - 1];
                // J = prefix * dA^{n-p+1} + k * dA^{n-p} + suffix
                std::size_t low = checked_power(dA, n - p);
                std::size_t prefix = J / (low * dA), suffix = J % low;
                Scalar sign = F.sign(p);
                for (const auto& [x, y, c] : onto[k]) {
                    std::size_t I = ((prefix * dA + x) * dA + y) * low + suffix;
                    D.add(I * dB + r, col, F.mul(sign, c));
                }
            }
            // (-1)^{n+1} f(a_1, ..., a_n) a_{n+1}
            Scalar sign = F.sign(n + 1);
            for (std::size_t i = 0; i < dA; ++i) {
                std::size_t I = J * dA + i;
                const Matrix& R = b.right(i);
                for (std::size_t rp = 0; rp < dB; ++rp)
                    if (!R.at(rp, r).is_zero()) D.add(I * dB + rp, col, F.mul(sign, R.at(rp, r)));
            }
        }
    }
    return std::move(D).build();
}

BarComplex bar_complex(const Algebra& a, const Bimodule& b, int n_max) {
    if (n_max < 0) throw InputError("max degree must be nonnegative");
    if (b.algebra() != a) throw InputError("bar_complex: bimodule over a different algebra");
    if (auto rep = validate_module(b); !rep.ok()) throw ValidationError("bar_complex", rep);
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int n = 0; n <= n_max + 1; ++n) dims.push_back(b.dim() * checked_power(a.dim(), n));
    for (int n = 0; n <= n_max; ++n) diffs.push_back(bar_differential(a, b, n));
    return {a, b, n_max, CochainComplex(a.field(), 0, std::move(dims), std::move(diffs))};
}

std::vector<std::size_t> hochschild_dims(const Algebra& a, const Bimodule& b, int n_max) {
    auto h = cohomology_dims(bar_complex(a, b, n_max).complex);
    h.resize(n_max + 1);
    return h;
}

Matrix cobar_differential(const RightComodule& m, const LeftComodule& n, int s) {
    const Coalgebra& C = m.coalgebra();
    if (C != n.coalgebra()) throw InputError("comodules over different coalgebras");
    const Field& F = C.field();
    const std::size_t dM = m.dim(), dC = C.dim(), dN = n.dim();
    const std::size_t in_t = checked_power(dC, s), out_t = checked_power(dC, s + 1);
    MatrixBuilder D(F, dM * out_t * dN, dM * in_t * dN);

    std::vector<std::size_t> digits(s);
    for (std::size_t K = 0; K < in_t; ++K) {
        std::size_t t = K;
        for (int p = s - 1; p >= 0; --p) {
            digits[p] = t % dC;
            t /= dC;
        }
        for (std::size_t x = 0; x < dM; ++x)
            for (std::size_t y = 0; y < dN; ++y) {
                std::size_t col = (x * in_t + K) * dN + y;
                // Delta_M (x) 1
                for (std::size_t xp = 0; xp < dM; ++xp)
                    for (std::size_t k = 0; k < dC; ++k)
                        if (!m.rho(x, xp, k).is_zero())
                            D.add((xp * out_t + k * in_t + K) * dN + y, col, m.rho(x, xp, k));
                // (-1)^p Delta_C in slot p
                for (int p = 1; p <= s; ++p) {
                    std::size_t c = digits[p - 1];
                    std::size_t low = checked_power(dC, s - p);
                    std::size_t prefix = K / (low * dC), suffix = K % low;
                    Scalar sign = F.sign(p);
                    for (std::size_t u = 0; u < dC; ++u)
                        for (std::size_t v = 0; v < dC; ++v) {
                            const Scalar& w = C.comul(c, u, v);
                            if (w.is_zero()) continue;
                            std::size_t Kp = ((prefix * dC + u) * dC + v) * low + suffix;
                            D.add((x * out_t + Kp) * dN + y, col, F.mul(sign, w));
                        }
                }
                // (-1)^{s+1} 1 (x) Delta_N
                Scalar sign = F.sign(s + 1);
                for (std::size_t k = 0; k < dC; ++k)
                    for (std::size_t yp = 0; yp < dN; ++yp)
                        if (!n.lambda(y, k, yp).is_zero())
                            D.add((x * out_t + K * dC + k) * dN + yp, col,
                                  F.mul(sign, n.lambda(y, k, yp)));
            }
    }
    return std::move(D).build();
}

CobarComplex cobar_complex(const RightComodule& m, const LeftComodule& n, int n_max) {
    if (n_max < 0) throw InputError("max degree must be nonnegative");
    if (m.coalgebra() != n.coalgebra()) throw InputError("comodules over different coalgebras");
    if (auto rep = validate_comodule(m); !rep.ok()) throw ValidationError("cobar_complex", rep);
    if (auto rep = validate_comodule(n); !rep.ok()) throw ValidationError("cobar_complex", rep);
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs;
    for (int s = 0; s <= n_max + 1; ++s)
        dims.push_back(m.dim() * checked_power(m.coalgebra().dim(), s) * n.dim());
    for (int s = 0; s <= n_max; ++s) diffs.push_back(cobar_differential(m, n, s));
    return {m.coalgebra(), m, n, n_max,
            CochainComplex(m.coalgebra().field(), 0, std::move(dims), std::move(diffs))};
}

std::vector<std::size_t> cotor_dims(const RightComodule& m, const LeftComodule& n, int n_max) {
    auto h = cohomology_dims(cobar_complex(m, n, n_max).complex);
    h.resize(n_max + 1);
    return h;
}

bool Comparison::pass() const {
    for (bool a : agree)
        if (!a) return false;
    return cotor.size() == hochschild.size();
}

Comparison compare_cotor_hochschild(const LeftModule& m, const RightModule& n, int n_max) {
    if (m.algebra() != n.algebra()) throw InputError("compare: modules over different algebras");
    Comparison out;
    out.cotor = cotor_dims(module_to_comodule(m), module_to_comodule(n), n_max);
    out.hochschild = hochschild_dims(m.algebra(), tensor_bimodule(m, n), n_max);
    for (std::size_t i = 0; i < out.cotor.size(); ++i) out.agree.push_back(out.cotor[i] == out.hochschild[i]);
    return out;
}

}  // namespace cotorlab
