#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "torb/numeric.hpp"

namespace torb {

// Dense row-major integer matrix with arbitrary-precision entries.
// Dimensions may be zero; all operations are exact.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return data_; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    // Exact determinant (fraction-free Bareiss elimination); square only.
    Int det() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += k * row b
    void add_row(std::size_t a, std::size_t b, const Int& k);
    // col a += k * col b
    void add_col(std::size_t a, std::size_t b, const Int& k);
    void negate_row(std::size_t a);

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// M * v for a column vector v of length M.cols().
std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

// v * M for a row vector v of length M.rows().
std::vector<Int> vec_mat(const std::vector<Int>& v, const IntMatrix& m);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace torb
