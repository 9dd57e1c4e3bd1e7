#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "logbundle/matrix.hpp"

namespace logbundle {

// Tensor in V* (x) I* (x) W, stored as dim_v slices t(e_j): I -> W, each a
// dim_w x dim_i matrix.  Its cokernel bundle on P(V) has rank dim_w - dim_i,
// which must equal dim_v - 1.
struct SteinerTensor {
    std::size_t dim_v = 0;
    std::size_t dim_i = 0;
    std::size_t dim_w = 0;
    std::vector<Matrix> slices;

    SteinerTensor() = default;
    // Validates shapes; DomainError("shape") otherwise.
    explicit SteinerTensor(std::vector<Matrix> s);

    std::size_t n() const { return dim_v - 1; }
    bool operator==(const SteinerTensor& o) const = default;
};

// sum_j v_j slice_j.  DomainError("zero_vector") for v = 0.
Matrix fiber_map(const SteinerTensor& t, std::span<const Rational> v);

bool injective_at(const SteinerTensor& t, std::span<const Rational> v);

// Probabilistic: false as soon as one of `trials` seeded random points has a
// non-injective fiber map.
bool certify_injectivity(const SteinerTensor& t, std::size_t trials, std::uint64_t seed);

// Exchange the roles of V and I: new slice_k[w, v] = old slice_v[w, k].
SteinerTensor associated_steiner(const SteinerTensor& t);

// c_i = C(m-n-2+i, i), i = 1..n.
std::vector<Integer> chern_coeffs(long n, long m);

// (h^0, ..., h^n) of the cokernel twisted by k.
std::vector<Integer> cohomology_dims(const SteinerTensor& t, long k);

// m = n d + 1 + r with 0 <= r <= n-1.
std::pair<long, long> normalization_split(long n, long m);

// Multiplication S^n A (x) S^{m-n-2} A -> S^{m-2} A in monomial bases
// s^{a-j} t^j.
SteinerTensor schwarzenberger_tensor(long n, long m);

struct IntertwinerVerdict {
    enum class Kind { Iso, NoHom, Indeterminate };
    Kind kind = Kind::NoHom;
    std::size_t solution_dim = 0;
    Matrix g_i;  // I -> I2
    Matrix g_w;  // W -> W2
};

const char* to_string(IntertwinerVerdict::Kind k);

// Solves G_W slice_j = slice2_j G_I for all j.
IntertwinerVerdict intertwiner_solve(const SteinerTensor& t, const SteinerTensor& t2);

}  // namespace logbundle
