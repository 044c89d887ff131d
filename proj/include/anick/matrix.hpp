#pragma once

#include "anick/coeff.hpp"

#include <cstddef>
#include <vector>

namespace anick {

/* Dense matrix over a coefficient field. */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Field& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const;
    /* Largest parameter degree among the entries. */
    int max_parameter_degree() const;
    /* Entry-wise evaluation at parameter = value; result lives over Q. */
    Matrix specialize(const Rational& value) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix transposed() const;

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_;
    std::vector<Scalar> data_;
};

/* Exact rank by Gaussian elimination; over Q(t) this is the generic rank. Pivots are
 * chosen by lowest parameter degree, then smallest size. */
std::size_t rank(Matrix m);

}  // namespace anick
