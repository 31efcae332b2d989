#pragma once

#include <cstdint>

#include "core/cmatrix.hpp"
#include "core/group_algebra.hpp"

namespace symtrace {

/// SplitMix64 stream.  Per-trial streams are derived as
/// seed_trial = splitmix(splitmix(seed) ^ trial), so reports are reproducible
/// for a given (seed, trial) pair regardless of execution order.  Normal
/// deviates use the sum of 12 uniforms (mean 0, variance 1), which keeps the
/// whole harness inside IEEE arithmetic: byte-identical output across
/// platforms, no libm transcendentals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();
    /// Uniform in [0,1) with 53 random bits.
    double uniform();
    /// Approximately standard normal (Irwin-Hall 12).
    double gaussian();

private:
    std::uint64_t state_;
};

CMatrix random_complex(int d, Rng& rng);
CMatrix random_hermitian(int d, Rng& rng);
/// G G^dag with complex standard-normal G; positive semidefinite by construction.
CMatrix random_psd(int d, Rng& rng);
/// Gram-Schmidt of a Ginibre matrix.
CMatrix random_unitary(int d, Rng& rng);
/// PSD normalized to unit trace on the given slot dimensions.
CMatrix random_density(const std::vector<int>& slot_dims, Rng& rng);
/// Tensor product of independent normalized random pure states.
CMatrix random_pure_product(const std::vector<int>& slot_dims, Rng& rng);
/// Traceless hermitian matrix.
CMatrix random_traceless(int d, Rng& rng);

/// Random element of CS_k with small rational coefficients on a random
/// support (at least one term).
AlgebraElement random_algebra_element(int k, Rng& rng);

}  // namespace symtrace
