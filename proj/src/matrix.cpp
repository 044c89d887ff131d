#include "anick/matrix.hpp"

#include "anick/error.hpp"

#include <algorithm>
#include <tuple>

namespace anick {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field))
{
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

int Matrix::max_parameter_degree() const
{
    int d = 0;
    for (const auto& s : data_)
        if (!s.is_zero())
            d = std::max(d, s.parameter_degree());
    return d;
}

Matrix Matrix::specialize(const Rational& value) const
{
    Matrix m(rows_, cols_, Field{});
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!data_[i].is_zero())
            m.data_[i] = Scalar(data_[i].specialize(value));
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error("matrix shape mismatch");
    Matrix m(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (!rhs.at(k, j).is_zero())
                    m.at(i, j) += a * rhs.at(k, j);
        }
    return m;
}

Matrix Matrix::transposed() const
{
    Matrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

std::size_t rank(Matrix m)
{
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t best = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i) {
            const Scalar& s = m.at(i, c);
            if (s.is_zero())
                continue;
            if (best == m.rows() || std::make_tuple(s.parameter_degree(), s.bit_size()) < std::make_tuple(m.at(best, c).parameter_degree(), m.at(best, c).bit_size()))
                best = i;
        }
        if (best == m.rows())
            continue;
        if (best != r)
            for (std::size_t j = c; j < m.cols(); ++j)
                std::swap(m.at(best, j), m.at(r, j));
        support.clear();
        for (std::size_t j = c + 1; j < m.cols(); ++j)
            if (!m.at(r, j).is_zero())
                support.push_back(j);
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero())
                continue;
            Scalar factor = m.at(i, c) * inv;
            for (std::size_t j : support)
                m.at(i, j) -= factor * m.at(r, j);
            m.at(i, c) = Scalar::zero(m.field());
        }
        ++r;
    }
    return r;
}

}  // namespace anick
