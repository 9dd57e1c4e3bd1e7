#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logbundle/matrix.hpp"

namespace logbundle {

// Nonzero vector up to scale, stored with its first nonzero coordinate 1.
// Used both for points of P^n and for hyperplane forms on it.
class ProjVec {
public:
    ProjVec() = default;
    // Throws DomainError("zero_vector") for the zero vector.
    explicit ProjVec(Vector coords);

    std::size_t n() const noexcept { return coords_.size() - 1; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Vector& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const ProjVec& o) const = default;
    bool operator<(const ProjVec& o) const { return coords_ < o.coords_; }

private:
    Vector coords_;
};

using ProjPoint = ProjVec;
using HyperplaneForm = ProjVec;

Matrix points_matrix(const std::vector<ProjVec>& pts);

// Every subset of size <= n+1 independent.  With `offending`, receives a
// dependent subset when the answer is false.
bool general_position(const std::vector<ProjVec>& pts,
                      std::vector<std::size_t>* offending = nullptr);

// Codimension-2 flat given by two independent forms (rows), and a line given
// by two distinct points (rows).  Both validate rank 2 on construction
// (DomainError "degenerate_span").
struct Flat2 {
    Matrix rows;
    Flat2() = default;
    explicit Flat2(Matrix r);
    std::size_t n() const { return rows.cols() - 1; }
};

struct LineSpan {
    Matrix rows;
    LineSpan() = default;
    explicit LineSpan(Matrix r);
    std::size_t n() const { return rows.cols() - 1; }
    static LineSpan through(const ProjPoint& a, const ProjPoint& b);
};

// 2x2 minors p_ij (i < j, lexicographic) of a 2-row matrix.
Vector plucker(const Matrix& two_rows);
inline Vector plucker(const Flat2& f) { return plucker(f.rows); }
inline Vector plucker(const LineSpan& l) { return plucker(l.rows); }

// The flat of hyperplanes containing the line: same rows, read as forms on
// the dual space.  Plucker coordinates therefore coincide (identity
// permutation, no signs).
Flat2 line_to_dual_flat(const LineSpan& l);
LineSpan flat_to_dual_line(const Flat2& f);

// Points of P^n lying on the flat: a basis of the common kernel, (n-1) rows.
Matrix flat_points(const Flat2& f);

ProjPoint veronese(const ProjPoint& p, unsigned d);
ProjPoint segre(const ProjPoint& p, const ProjPoint& q);

}  // namespace logbundle
