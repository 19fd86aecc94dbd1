#include "defex/int_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace defex {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: difference shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::column(std::size_t j) const {
    IntMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
    IntMatrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, j) = b(i, j);
    return out;
}

IntMatrix IntMatrix::block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
    return out;
}

IntMatrix IntMatrix::block2x2(const IntMatrix& a, const IntMatrix& b,
                              const IntMatrix& c, const IntMatrix& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

IntMatrix IntMatrix::top_rows(std::size_t k) const {
    IntMatrix out(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::bottom_rows(std::size_t k) const {
    IntMatrix out(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(rows_ - k + i, j);
    return out;
}

IntMatrix IntMatrix::left_cols(std::size_t k) const {
    IntMatrix out(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::right_cols(std::size_t k) const {
    IntMatrix out(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, cols_ - k + j);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> out;
    std::size_t n = std::min(d.rows(), d.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

// Elementary operations on the working matrix keep the invariants
// u*m*v = d, u*u_inv = I, v*v_inv = I up to date.
struct SnfState {
    IntMatrix d, u, v, u_inv, v_inv;

    void row_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
        for (std::size_t i = 0; i < u_inv.rows(); ++i) std::swap(u_inv(i, a), u_inv(i, b));
    }
    void col_swap(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
        for (std::size_t j = 0; j < v_inv.cols(); ++j) std::swap(v_inv(a, j), v_inv(b, j));
    }
    // row a += f * row b
    void row_add(std::size_t a, std::size_t b, const Int& f) {
        if (f == 0) return;
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) += f * d(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) += f * u(b, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, b) -= f * u_inv(i, a);
    }
    // col a += f * col b
    void col_add(std::size_t a, std::size_t b, const Int& f) {
        if (f == 0) return;
        for (std::size_t i = 0; i < d.rows(); ++i) d(i, a) += f * d(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) += f * v(i, b);
        for (std::size_t j = 0; j < v_inv.cols(); ++j) v_inv(b, j) -= f * v_inv(a, j);
    }
    void row_negate(std::size_t a) {
        for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
        for (std::size_t i = 0; i < u_inv.rows(); ++i) u_inv(i, a) = -u_inv(i, a);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SnfState s{m, IntMatrix::identity(r), IntMatrix::identity(c),
               IntMatrix::identity(r), IntMatrix::identity(c)};

    const std::size_t nmin = std::min(r, c);
    std::size_t k = 0;
    for (; k < nmin; ++k) {
        bool exhausted = false;
        for (;;) {
            // Deterministic pivot: smallest nonzero |entry|, then lexicographic.
            std::size_t pi = 0, pj = 0;
            bool found = false;
            Int best;
            for (std::size_t i = k; i < r; ++i)
                for (std::size_t j = k; j < c; ++j) {
                    if (s.d(i, j) == 0) continue;
                    Int a = abs(s.d(i, j));
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                exhausted = true;
                break;
            }
            s.row_swap(k, pi);
            s.col_swap(k, pj);

            bool cleared = true;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (s.d(i, k) == 0) continue;
                Int q = s.d(i, k) / s.d(k, k);  // truncated division
                s.row_add(i, k, -q);
                if (s.d(i, k) != 0) cleared = false;
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (s.d(k, j) == 0) continue;
                Int q = s.d(k, j) / s.d(k, k);
                s.col_add(j, k, -q);
                if (s.d(k, j) != 0) cleared = false;
            }
            if (!cleared) continue;

            // Enforce the divisibility chain: fold a non-divisible entry
            // into the pivot row and restart this pivot.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < r && divides_all; ++i)
                for (std::size_t j = k + 1; j < c; ++j)
                    if (s.d(i, j) % s.d(k, k) != 0) {
                        s.row_add(k, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (exhausted) break;
    }

    for (std::size_t i = 0; i < nmin; ++i)
        if (s.d(i, i) < 0) s.row_negate(i);

    SmithDecomposition out;
    out.u = std::move(s.u);
    out.d = std::move(s.d);
    out.v = std::move(s.v);
    out.u_inv = std::move(s.u_inv);
    out.v_inv = std::move(s.v_inv);
    out.rank = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (out.d(i, i) != 0) ++out.rank;
    return out;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& rhs) {
    if (m.rows() != rhs.rows())
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithDecomposition snf = smith_normal_form(m);
    IntMatrix c = snf.u * rhs;
    IntMatrix y(m.cols(), rhs.cols());
    const std::size_t nmin = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int di = i < nmin ? snf.d(i, i) : Int(0);
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            if (di == 0) {
                if (c(i, j) != 0) return std::nullopt;
            } else {
                if (c(i, j) % di != 0) return std::nullopt;
                y(i, j) = c(i, j) / di;
            }
        }
    }
    return snf.v * y;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    return snf.v.right_cols(m.cols() - snf.rank);
}

}  // namespace defex
