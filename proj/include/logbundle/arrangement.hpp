#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logbundle/matrix.hpp"
#include "logbundle/projective.hpp"
#include "logbundle/steiner.hpp"

namespace logbundle {

// m hyperplanes of P^n in general position.  Row i of forms() is f_i; the
// rows of kernel_basis() span the relations {a : sum a_i f_i = 0}.
class Arrangement {
public:
    // DomainError("general_position") with an offending subset if the forms
    // are not in general position.
    explicit Arrangement(std::vector<HyperplaneForm> forms);

    std::size_t n() const { return forms_.front().n(); }
    std::size_t m() const { return forms_.size(); }
    const std::vector<HyperplaneForm>& form_list() const { return forms_; }
    const Matrix& forms() const { return matrix_; }
    // (m-n-1) x m, reduced echelon, B * forms() = 0.
    const Matrix& kernel_basis() const { return kernel_; }

    // Forms in a canonical order (sorted normalized representatives).
    std::vector<HyperplaneForm> sorted_forms() const;

private:
    std::vector<HyperplaneForm> forms_;
    Matrix matrix_;
    Matrix kernel_;
};

Arrangement new_arrangement(std::vector<HyperplaneForm> forms);

// Arrangement in P(I_H) whose i-th form is column i of the kernel basis.
// DomainError("range") when m <= n+1.
Arrangement associated(const Arrangement& a);

// t(a, v) = (a_k f_k(v))_k in the basis B of I and w_k = e_k - e_m of W.
SteinerTensor fundamental_tensor(const Arrangement& a);

// Segre criterion: the m Segre images are dependent, every m-1 of them are
// independent.  DomainError("length_mismatch") for different lengths.
bool is_associated_pair(const std::vector<ProjPoint>& p, const std::vector<ProjPoint>& q);

// Degree-2 Veronese criterion for 2n+2 points.  DomainError("count") for
// other counts.
bool is_self_associated(const std::vector<ProjPoint>& p);

// A matrix g with g a_i proportional to b_i for every i, when the solution
// space of such g is one-dimensional and g is invertible.
std::optional<Matrix> projective_equivalence(const std::vector<ProjVec>& a, const std::vector<ProjVec>& b);

}  // namespace logbundle
