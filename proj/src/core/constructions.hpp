#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "core/group_algebra.hpp"
#include "core/trace_poly.hpp"

namespace symtrace {

/// Exact test: alpha lies in the span of the isotypic components of CS_k
/// whose partitions have strictly more than d parts.  Equivalent to
/// omega_lambda * alpha = 0 for every lambda with at most d parts; checked by
/// exact convolution.  Elements of this ideal generate all multilinear trace
/// identities on d x d matrices.
bool ideal_membership(const AlgebraElement& alpha, int d);

/// The antisymmetrizer over S_{d+1}, embedded into S_k on slots 1..d+1.
AlgebraElement epsilon_element(int d, int k);

struct NoCandidateError : std::runtime_error {
    explicit NoCandidateError(const std::string& what) : std::runtime_error(what) {}
};

enum class IdentityKind { polynomial, weak, central, permutation, tensor_identity };

IdentityKind identity_kind_from_string(const std::string& s);
std::string to_string(IdentityKind k);

/// What the emitted tensor polynomial should evaluate to.
enum class TargetKind { zero, identity, permutation, zero_on_traceless };

struct Construction {
    IdentityKind kind;
    int d = 2;                 ///< matrix dimension the claim refers to
    int t = 1;                 ///< output tensor slots
    AlgebraElement element;    ///< the emitted group-algebra element
    TensorPolynomial tensor;   ///< its symbolic form on t output slots
    TargetKind target = TargetKind::zero;
    Permutation target_perm;   ///< meaningful for TargetKind::permutation
    bool membership_certified = false;  ///< exact J_d membership was established
    std::string note;
};

/// Builds the candidate identity for the requested kind:
///   polynomial       the standard polynomial s_{2d} (k = 2d+1, 24 terms at d=2)
///   central          [A,B][C,D] + [C,D][A,B] on M_2 (k = 5)
///   weak             s_3 on traceless 2x2 matrices (k = 4)
///   tensor_identity  the antisymmetrized word pattern split over t output
///                    slots (k = 2d + t); certified in J_d by exact convolution
///   permutation      bounded search over epsilon * c routings; reports
///                    no-candidate when the structure cannot be met
/// Zero-target kinds are certified via ideal_membership; throws
/// NoCandidateError when nothing satisfying the structure is found.
Construction construct_identity(IdentityKind kind, int d, int k, int t);

}  // namespace symtrace
