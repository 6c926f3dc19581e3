#pragma once

// Converts library objects into the plain data the brute-force oracle reads.

#include "cotorlab/module.hpp"
#include "oracle.hpp"

namespace bridge {

inline oracle::Arith arith(const cotorlab::Field& F) { return oracle::Arith{static_cast<long>(F.characteristic())}; }

inline oracle::Mat mat(const cotorlab::Matrix& m) {
    oracle::Mat out = oracle::zeros(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c).to_mpq();
    return out;
}

// Structure constants must be integers (true for every constructor).
inline long integer(const cotorlab::Scalar& s) {
    mpq_class q = s.to_mpq();
    if (q.get_den() != 1) throw std::invalid_argument("non-integer structure constant");
    return q.get_num().get_si();
}

inline oracle::AlgebraData algebra(const cotorlab::Algebra& a) {
    oracle::AlgebraData d{a.dim(), {}};
    d.mul.assign(a.dim(), std::vector<std::vector<long>>(a.dim(), std::vector<long>(a.dim())));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) d.mul[i][j][k] = integer(a.mul(i, j, k));
    return d;
}

inline oracle::BimoduleData bimodule(const cotorlab::Bimodule& b) {
    oracle::BimoduleData d{b.dim(), {}, {}};
    for (const auto& m : b.lefts()) d.left.push_back(mat(m));
    for (const auto& m : b.rights()) d.right.push_back(mat(m));
    return d;
}

inline oracle::CoalgebraData coalgebra(const cotorlab::Coalgebra& c) {
    oracle::CoalgebraData d{c.dim(), {}};
    d.comul.assign(c.dim(), std::vector<std::vector<long>>(c.dim(), std::vector<long>(c.dim())));
    for (std::size_t k = 0; k < c.dim(); ++k)
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j) d.comul[k][i][j] = integer(c.comul(k, i, j));
    return d;
}

inline std::vector<std::size_t> hochschild(const cotorlab::Algebra& a, const cotorlab::Bimodule& b, int n_max) {
    return oracle::hochschild(arith(a.field()), algebra(a), bimodule(b), n_max);
}

inline std::vector<std::size_t> cotor(const cotorlab::RightComodule& m, const cotorlab::LeftComodule& n,
                                      int n_max) {
    const auto& c = m.coalgebra();
    std::size_t dc = c.dim();
    oracle::Mat coM = oracle::zeros(m.dim() * dc, m.dim());
    for (std::size_t x = 0; x < m.dim(); ++x)
        for (std::size_t y = 0; y < m.dim(); ++y)
            for (std::size_t k = 0; k < dc; ++k) coM[y * dc + k][x] = m.rho(x, y, k).to_mpq();
    oracle::Mat coN = oracle::zeros(dc * n.dim(), n.dim());
    for (std::size_t x = 0; x < n.dim(); ++x)
        for (std::size_t k = 0; k < dc; ++k)
            for (std::size_t y = 0; y < n.dim(); ++y) coN[k * n.dim() + y][x] = n.lambda(x, k, y).to_mpq();
    return oracle::cotor(arith(c.field()), coalgebra(c), coM, m.dim(), coN, n.dim(), n_max);
}

}  // namespace bridge
