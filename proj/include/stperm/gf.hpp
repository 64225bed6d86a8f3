#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stperm/errors.hpp"

namespace stperm {

/// The prime field F_p for 2 <= p <= 251. Primality is checked at construction.
class PrimeField {
public:
    explicit PrimeField(unsigned p);

    unsigned p() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + b) % p_); }
    uint8_t sub(uint8_t a, uint8_t b) const { return static_cast<uint8_t>((a + p_ - b) % p_); }
    uint8_t mul(uint8_t a, uint8_t b) const {
        return static_cast<uint8_t>((unsigned(a) * unsigned(b)) % p_);
    }
    uint8_t neg(uint8_t a) const { return static_cast<uint8_t>((p_ - a) % p_); }
    uint8_t inv(uint8_t a) const;
    uint8_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint8_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(unsigned n);

private:
    unsigned p_;
};

/// Dense matrix over F_p, row-major. Entries are canonical residues in [0, p).
class Matrix {
public:
    Matrix(PrimeField f, int rows, int cols);
    Matrix(PrimeField f, int rows, int cols, std::vector<uint8_t> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    uint8_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, uint8_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
    const std::vector<uint8_t>& entries() const { return a_; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(uint8_t c) const;
    Matrix transposed() const;

    /// Rows indexed by `rows`, columns by `cols` (in the given order).
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    static Matrix identity(PrimeField f, int n);
    static Matrix zero(PrimeField f, int rows, int cols);
    /// Kronecker product, row-major pairing: ((i,k),(j,l)) -> a(i,j)*b(k,l).
    static Matrix kronecker(const Matrix& a, const Matrix& b);
    /// [a | b] side by side.
    static Matrix hconcat(const Matrix& a, const Matrix& b);
    /// a above b.
    static Matrix vconcat(const Matrix& a, const Matrix& b);

private:
    PrimeField field_;
    int rows_, cols_;
    std::vector<uint8_t> a_;
};

/// Rank over F_p by exact Gaussian elimination.
int rank(const Matrix& m);

/// Columns spanning ker(m); count is always cols(m) - rank(m).
Matrix kernel_basis(const Matrix& m);

/// Solves m*x = b exactly; nullopt when inconsistent. Requires rows(m) == rows(b).
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

} // namespace stperm
