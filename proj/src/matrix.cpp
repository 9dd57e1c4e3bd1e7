#include "logbundle/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "logbundle/errors.hpp"

namespace logbundle {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols_if_empty) {
    Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        m.set_row(i, rows[i]);
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vector>& cols, std::size_t rows_if_empty) {
    return from_rows(cols, rows_if_empty).transpose();
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, std::span<const Rational> values) {
    if (values.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix s(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    Matrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
    return s;
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (sgn(v[j]) != 0) acc += (*this)(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (sgn(other(k, j)) != 0) p(i, j) += a * other(k, j);
            }
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("sum: shape");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += other.data_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("diff: shape");
    Matrix s = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= other.data_[k];
    return s;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix s = *this;
    for (auto& x : s.data_) x *= c;
    return s;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.rows_ == 0) return bottom;
    if (bottom.rows_ == 0) return top;
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column mismatch");
    Matrix s(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), s.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              s.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return s;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    return vstack(left.transpose(), right.transpose()).transpose();
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Each row multiplied by the lcm of its denominators.  `scale` receives the
// product of the multipliers.
IntRows integer_rows(const Matrix& m, Rational* scale = nullptr) {
    IntRows a(m.rows(), std::vector<Integer>(m.cols()));
    Rational total = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        }
        total *= l;
    }
    if (scale) *scale = total;
    return a;
}

struct BareissResult {
    std::size_t rank = 0;
    int sign = 1;
    Integer last_pivot = 1;
};

// Fraction-free forward elimination in place.  After step r every entry is a
// minor of the input, so the division by the previous pivot is exact.
BareissResult bareiss(IntRows& a, std::size_t cols) {
    BareissResult res;
    const std::size_t rows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            res.sign = -res.sign;
        }
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer f = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = piv * a[i][j] - f * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

}  // namespace

std::size_t mat_rank(const Matrix& m) {
    if (m.empty()) return 0;
    IntRows a = integer_rows(m);
    return bareiss(a, m.cols()).rank;
}

Rational mat_det(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_det: non-square matrix");
    if (m.rows() == 0) return 1;
    Rational scale;
    IntRows a = integer_rows(m, &scale);
    const BareissResult r = bareiss(a, m.cols());
    if (r.rank < m.rows()) return 0;
    Rational det(r.sign > 0 ? r.last_pivot : Integer(-r.last_pivot));
    det /= scale;
    return det;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    Matrix a = m;
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        }
        const Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
            }
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return a;
}

Matrix row_space(const Matrix& m) {
    std::vector<std::size_t> piv;
    const Matrix r = rref(m, &piv);
    std::vector<std::size_t> keep(piv.size());
    for (std::size_t i = 0; i < piv.size(); ++i) keep[i] = i;
    Matrix out = r.select_rows(keep);
    if (out.rows() == 0) return Matrix(0, m.cols());
    return out;
}

Matrix mat_kernel(const Matrix& m) {
    std::vector<std::size_t> piv;
    const Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, m.cols());
    return rref(Matrix::from_rows(basis));
}

std::optional<Vector> mat_solve(const Matrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("mat_solve: rhs length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    const Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r(k, m.cols());
    return x;
}

Matrix mat_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_inverse: non-square");
    const std::size_t n = m.rows();
    const Matrix aug = Matrix::hstack(m, Matrix::identity(n));
    std::vector<std::size_t> piv;
    const Matrix r = rref(aug, &piv);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) {
        throw DomainError("singular_matrix", "matrix is not invertible");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_space(a) == row_space(b);
}

Vector normalize_leading(std::span<const Rational> v) {
    Vector out(v.begin(), v.end());
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            const Rational inv = 1 / x;
            for (auto& y : out) y *= inv;
            break;
        }
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace logbundle
