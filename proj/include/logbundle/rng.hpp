#pragma once

#include <cstdint>

#include "logbundle/matrix.hpp"
#include "logbundle/rational.hpp"

namespace logbundle {

// Seeded xorshift64 generator.  State update:
//   x ^= x << 13;  x ^= x >> 7;  x ^= x << 17;
// starting from x = seed ^ 0x9E3779B97F4A7C15 (replaced by that constant if
// the xor is zero).  Every sampled operation in the library draws from one
// of these, so results depend only on the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) noexcept {
        state_ = seed ^ 0x9E3779B97F4A7C15ULL;
        if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() noexcept {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    // Uniform integer in [lo, hi] (modulo reduction; bias is irrelevant here).
    long uniform(long lo, long hi) noexcept {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Integer in [-bound, bound].
    Rational small_int(long bound) { return Rational(uniform(-bound, bound)); }

    // p/q with |p| <= bound, 1 <= q <= den_bound.
    Rational small_rational(long bound, long den_bound) {
        Rational r(uniform(-bound, bound), uniform(1, den_bound));
        r.canonicalize();
        return r;
    }

    Vector int_vector(std::size_t len, long bound) {
        Vector v(len);
        for (auto& x : v) x = small_int(bound);
        return v;
    }

    // Nonzero integer vector.
    Vector nonzero_vector(std::size_t len, long bound) {
        for (;;) {
            Vector v = int_vector(len, bound);
            for (const auto& x : v)
                if (sgn(x) != 0) return v;
        }
    }

    Matrix int_matrix(std::size_t rows, std::size_t cols, long bound) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_int(bound);
        return m;
    }

private:
    std::uint64_t state_;
};

}  // namespace logbundle
