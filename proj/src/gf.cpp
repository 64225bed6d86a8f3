#include "stperm/gf.hpp"

#include <algorithm>
#include <string>

namespace stperm {

bool PrimeField::is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
    if (p < 2 || p > 251 || !is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                    " is not a prime in [2, 251]");
}

uint8_t PrimeField::inv(uint8_t a) const {
    if (a == 0) throw std::invalid_argument("PrimeField::inv: zero is not invertible");
    // Fermat: a^(p-2) mod p.
    unsigned result = 1, base = a, e = p_ - 2;
    while (e > 0) {
        if (e & 1) result = (result * base) % p_;
        base = (base * base) % p_;
        e >>= 1;
    }
    return static_cast<uint8_t>(result);
}

Matrix::Matrix(PrimeField f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

Matrix::Matrix(PrimeField f, int rows, int cols, std::vector<uint8_t> entries)
    : field_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw ValidationError("Matrix: entry count does not match dimensions");
    for (uint8_t v : a_)
        if (v >= field_.p()) throw ValidationError("Matrix: entry not reduced mod p");
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint8_t v) { return v == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw std::invalid_argument("Matrix::mul: field mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    const unsigned p = field_.p();
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            unsigned aik = at(i, k);
            if (aik == 0) continue;
            const uint8_t* brow = &o.a_[static_cast<size_t>(k) * o.cols_];
            uint8_t* rrow = &r.a_[static_cast<size_t>(i) * o.cols_];
            for (int j = 0; j < o.cols_; ++j)
                rrow[j] = static_cast<uint8_t>((rrow[j] + aik * brow[j]) % p);
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::add: shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::sub: shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    return r;
}

Matrix Matrix::scaled(uint8_t c) const {
    Matrix r(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], c);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix r(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], cols[j]));
    return r;
}

Matrix Matrix::identity(PrimeField f, int n) {
    Matrix r(f, n, n);
    for (int i = 0; i < n; ++i) r.set(i, i, 1);
    return r;
}

Matrix Matrix::zero(PrimeField f, int rows, int cols) { return Matrix(f, rows, cols); }

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("kronecker: field mismatch");
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            uint8_t aij = a.at(i, j);
            if (aij == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l, a.field().mul(aij, b.at(k, l)));
        }
    return r;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.rows() != b.rows())
        throw std::invalid_argument("hconcat: shape mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

Matrix Matrix::vconcat(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols())
        throw std::invalid_argument("vconcat: shape mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    const PrimeField f = m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) {
                uint8_t t = m.at(row, j);
                m.set(row, j, m.at(pr, j));
                m.set(pr, j, t);
            }
        uint8_t piv_inv = f.inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.set(row, j, f.mul(m.at(row, j), piv_inv));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row) continue;
            uint8_t c = m.at(r, col);
            if (c == 0) continue;
            for (int j = col; j < m.cols(); ++j)
                m.set(r, j, f.sub(m.at(r, j), f.mul(c, m.at(row, j))));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(const Matrix& m) {
    Matrix copy = m;
    return static_cast<int>(rref(copy).size());
}

Matrix kernel_basis(const Matrix& m) {
    Matrix red = m;
    std::vector<int> pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const PrimeField f = m.field();
    Matrix basis(f, m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.set(fc, static_cast<int>(k), 1);
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.set(pivots[r], static_cast<int>(k), f.neg(red.at(static_cast<int>(r), fc)));
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.field() != b.field()) throw std::invalid_argument("solve: field mismatch");
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: rows(m) != rows(b)");
    Matrix aug = Matrix::hconcat(m, b);
    std::vector<int> pivots = rref(aug);
    // A pivot in the b-block means the system is inconsistent.
    for (int c : pivots)
        if (c >= m.cols()) return std::nullopt;
    Matrix x(m.field(), m.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.set(pivots[r], j, aug.at(static_cast<int>(r), m.cols() + j));
    return x;
}

} // namespace stperm
