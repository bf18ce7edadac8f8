#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pleth/coeffring/rational.hpp"

namespace pleth {

// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);  // y + a x
SparseVec scaled(const SparseVec& x, const Rational& a);

// Sparse rational matrix stored by columns. Column j maps basis vector e_j of
// the source to a sparse vector in the target.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    static Matrix identity(int n);
    static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
    // Signed permutation matrix with column j equal to sign[j] * e_{target[j]}.
    static Matrix monomial(int rows, const std::vector<int>& target, const std::vector<int>& sign);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SparseVec& col(int j) const { return data_[static_cast<size_t>(j)]; }
    void set_col(int j, SparseVec v);
    Rational at(int r, int c) const;
    void set(int r, int c, const Rational& v);
    size_t nonzeros() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    SparseVec apply(const SparseVec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& a) const;
    Matrix transpose() const;
    Matrix kron(const Matrix& o) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    // Block helpers.
    static Matrix direct_sum(const Matrix& a, const Matrix& b);
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    std::vector<std::vector<Rational>> dense() const;
    std::vector<std::vector<std::string>> to_strings() const;
    static Matrix from_strings(const std::vector<std::vector<std::string>>& rows);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> data_;
};

}  // namespace pleth
