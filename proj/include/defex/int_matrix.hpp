#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace defex {

using Int = mpz_class;

/// Dense integer matrix with arbitrary-precision entries, row-major.
/// Empty shapes (0 rows and/or 0 columns) are legal and show up constantly
/// as zero objects in complexes.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }
    /// Build from nested initializer data; rows must have equal length.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    IntMatrix transposed() const;

    /// Column j as a column vector.
    IntMatrix column(std::size_t j) const;

    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
    /// 2x2 block assembly; shapes must be consistent.
    static IntMatrix block2x2(const IntMatrix& a, const IntMatrix& b,
                              const IntMatrix& c, const IntMatrix& d);

    IntMatrix top_rows(std::size_t k) const;
    IntMatrix bottom_rows(std::size_t k) const;
    IntMatrix left_cols(std::size_t k) const;
    IntMatrix right_cols(std::size_t k) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// U*M*V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
/// The inverses of U and V are maintained during the reduction; they come
/// out for free and the lattice computations below need them.
struct SmithDecomposition {
    IntMatrix u, d, v;
    IntMatrix u_inv, v_inv;
    std::size_t rank = 0;  // number of nonzero diagonal entries

    std::vector<Int> diagonal() const;
};

/// Deterministic Smith normal form: pivot = smallest nonzero absolute
/// value, ties broken by lexicographic position.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Solve m*x = rhs over the integers, columnwise for matrix right-hand
/// sides. Returns std::nullopt when no integral solution exists.
/// Throws on dimension mismatch.
std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& rhs);

/// Columns form a lattice basis of ker(m) over Z. The basis is a direct
/// summand of the ambient Z^cols (columns of a unimodular matrix), hence
/// saturated.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace defex
