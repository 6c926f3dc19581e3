#include "cotorlab/matrix.hpp"

#include <string>
#include <utility>

namespace cotorlab {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (a.field() != b.field())
        throw InputError(std::string(op) + ": matrices over different fields");
}

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw InputError("matrix entry count " + std::to_string(entries_.size()) +
                         " does not match shape " + std::to_string(rows) + "x" +
                         std::to_string(cols));
}

Matrix Matrix::identity(Field field, std::size_t n) {
    MatrixBuilder b(field, n, n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, i, field.one());
    return std::move(b).build();
}

Matrix Matrix::from_ints(Field field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Scalar> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw InputError("ragged matrix literal");
        for (long long v : row) e.push_back(field.from_int(v));
    }
    return Matrix(field, r, c, std::move(e));
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& row_major) {
    std::vector<Scalar> e;
    e.reserve(row_major.size());
    for (long long v : row_major) e.push_back(field.from_int(v));
    return Matrix(field, rows, cols, std::move(e));
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns) {
    MatrixBuilder b(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw InputError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) b.set(r, c, columns[c][r]);
    }
    return std::move(b).build();
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& s : entries_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    std::vector<Scalar> e(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) e[c * rows_ + r] = at(r, c);
    return Matrix(field_, cols_, rows_, std::move(e));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(*this, rhs, "multiply");
    if (cols_ != rhs.rows_)
        throw InputError("cannot multiply " + shape(*this) + " by " + shape(rhs));
    // rhs rows are visited through their nonzero positions only
    std::vector<std::vector<std::size_t>> nz(rhs.rows_);
    for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t c = 0; c < rhs.cols_; ++c)
            if (!rhs.at(k, c).is_zero()) nz[k].push_back(c);
    std::vector<Scalar> out(rows_ * rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar* orow = out.data() + r * rhs.cols_;
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c : nz[k]) orow[c] = field_.add(orow[c], field_.mul(a, rhs.at(k, c)));
        }
    }
    return Matrix(field_, rows_, rhs.cols_, std::move(out));
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_field(*this, rhs, "add");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InputError("cannot add " + shape(*this) + " and " + shape(rhs));
    std::vector<Scalar> e(entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = field_.add(entries_[i], rhs.entries_[i]);
    return Matrix(field_, rows_, cols_, std::move(e));
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_field(*this, rhs, "subtract");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw InputError("cannot subtract " + shape(rhs) + " from " + shape(*this));
    std::vector<Scalar> e(entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = field_.sub(entries_[i], rhs.entries_[i]);
    return Matrix(field_, rows_, cols_, std::move(e));
}

Matrix Matrix::scaled(const Scalar& s) const {
    std::vector<Scalar> e(entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = field_.mul(entries_[i], s);
    return Matrix(field_, rows_, cols_, std::move(e));
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_)
        throw InputError("vector of length " + std::to_string(v.size()) +
                         " applied to " + shape(*this) + " matrix");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !at(r, c).is_zero())
                out[r] = field_.add(out[r], field_.mul(at(r, c), v[c]));
    return out;
}

Matrix Matrix::kron(const Matrix& rhs) const {
    require_same_field(*this, rhs, "kron");
    MatrixBuilder b(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < rhs.rows_; ++k)
                for (std::size_t l = 0; l < rhs.cols_; ++l)
                    if (!rhs.at(k, l).is_zero())
                        b.set(i * rhs.rows_ + k, j * rhs.cols_ + l, field_.mul(a, rhs.at(k, l)));
        }
    return std::move(b).build();
}

Matrix Matrix::hstack(const Matrix& rhs) const {
    require_same_field(*this, rhs, "hstack");
    if (rows_ != rhs.rows_) throw InputError("hstack: row counts differ");
    MatrixBuilder b(field_, rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) b.set(r, c, at(r, c));
        for (std::size_t c = 0; c < rhs.cols_; ++c) b.set(r, cols_ + c, rhs.at(r, c));
    }
    return std::move(b).build();
}

Matrix Matrix::vstack(const Matrix& rhs) const {
    require_same_field(*this, rhs, "vstack");
    if (cols_ != rhs.cols_) throw InputError("vstack: column counts differ");
    std::vector<Scalar> e = entries_;
    e.insert(e.end(), rhs.entries_.begin(), rhs.entries_.end());
    return Matrix(field_, rows_ + rhs.rows_, cols_, std::move(e));
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    MatrixBuilder b(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) b.set(r, j, at(r, idx[j]));
    return std::move(b).build();
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    MatrixBuilder b(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) b.set(i, c, at(idx[i], c));
    return std::move(b).build();
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
}

MatrixBuilder::MatrixBuilder(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

void MatrixBuilder::set(std::size_t r, std::size_t c, const Scalar& v) {
    entries_[r * cols_ + c] = v;
}

void MatrixBuilder::add(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.is_zero()) return;
    Scalar& e = entries_[r * cols_ + c];
    e = field_.add(e, v);
}

Matrix MatrixBuilder::build() && {
    return Matrix(field_, rows_, cols_, std::move(entries_));
}

}  // namespace cotorlab
