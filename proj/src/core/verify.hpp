#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/constructions.hpp"
#include "core/group_algebra.hpp"
#include "core/trace_poly.hpp"

namespace symtrace {

struct TrialConfig {
    int d = 2;
    int trials = 200;
    std::uint64_t seed = 42;
    double tol_zero = 1e-10;
    double tol_psd = 1e-9;
};

/// One suite outcome.  Residuals are relative to (1 + the Frobenius scale of
/// the compared quantities); min_eigenvalue is likewise normalized by
/// (1 + ||Y||_F) of the evaluated operator.  A fixed (suite, params, seed)
/// triple reproduces the same report byte for byte, except elapsed_ms.
struct Report {
    std::string suite;
    std::string params_json = "{}";
    int trials = 0;
    std::uint64_t seed = 0;
    double worst_residual = 0.0;
    double min_eigenvalue = 0.0;
    bool negative_control_failed = true;  ///< the planted non-positive map was caught
    bool pass = false;
    std::int64_t elapsed_ms = 0;
    std::vector<std::string> notes;

    std::string to_json() const;
    std::string to_text() const;
};

/// SYMTRACE_THREADS, clamped to [1, hardware]; defaults to min(hardware, 4).
int harness_threads();

// Randomized / exact suites.  Each one names the claim it checks.

/// Symbolic-vs-operator agreement of the dictionary in all three modes,
/// including the pure-cycle product case and full-trace contractions.
Report suite_dictionary(int kmax, const TrialConfig& cfg);

/// Exact group-algebra idempotent properties for all partitions of 2..kmax,
/// plus Young-symmetrizer quasi-idempotency for k <= 4.
Report suite_idempotents(int kmax, const TrialConfig& cfg);

/// Young projector properties on (C^d)^{ot k} for k <= kmax and each d in ds.
Report suite_projectors(int kmax, const std::vector<int>& ds, const TrialConfig& cfg);

/// f_lambda = 0 on general complex matrices when parts(lambda) > d.
/// Refuses (throws std::invalid_argument) when parts(lambda) <= d.
Report suite_vanishing(const Partition& lambda, const TrialConfig& cfg);
Report suite_vanishing_default(const TrialConfig& cfg);

/// min eigenvalue of a trace polynomial on random PSD tuples.
Report suite_positivity(const TracePolynomial& p, const std::string& name,
                        const TrialConfig& cfg);
/// All f_lambda with 2 <= k <= kmax over each d in ds; runs the negative
/// control -f_{(2)}.
Report suite_positivity_all(int kmax, const std::vector<int>& ds, const TrialConfig& cfg);

/// Unitary equivariance of every f_lambda with k <= kmax.
Report suite_equivariance(int kmax, const TrialConfig& cfg);

/// The alternating partial-trace inequality on n qubits, all 2^n sign
/// patterns, cross-checked against the projector tensor-product form.
Report suite_shadow(int n, const TrialConfig& cfg);

/// Positivity of f_{lambda_1} ot ... ot f_{lambda_n}; for the pair
/// [(2,1),(2,1)] on two qubit factors also matches the closed partial-
/// transpose expansion.
Report suite_tensor_stable(const std::vector<Partition>& lambdas, const TrialConfig& cfg);

/// Complete copositivity instance: (f_lambda o theta ot id_m) on random PSD
/// inputs of the joint system.
Report suite_copositive(const Partition& lambda, int ancilla, const TrialConfig& cfg);

/// The optimal-witness bundle: positivity of the witness polynomial, the
/// zero-floor at orthogonal rank-one pairs, block positivity of the
/// anti-symmetric witness with the 1/6 ceiling, and a negative control.
Report suite_witness(const TrialConfig& cfg);

/// The four asymmetric refinements of f_{(2,1)}: exact idempotent algebra
/// plus positivity sampling of their maps.
Report suite_finegrained(const TrialConfig& cfg);

/// s_4 on M_2 (and its non-vanishing on M_3), the commutator central
/// polynomial, and the antisymmetrized two-slot tensor identity.
Report suite_identities(const TrialConfig& cfg);

/// Residual of the two-slot tensor identity on random 2x2 quadruples.
Report suite_tensor_identity(const TrialConfig& cfg);

/// Exact ideal-membership checks: epsilon generators, omega_{(2,1)}
/// non-membership, and the tensor-identity element.
Report suite_membership(const TrialConfig& cfg);

/// Motzkin-type matrix inequality: the three-term decomposition identity,
/// positivity on trace-one PSD pairs, and the homogenized variant.
Report suite_motzkin(const TrialConfig& cfg);

/// Samples tr[T_hat(P) rho] over pure product states; one-sided.
Report suite_block_positive(const AlgebraElement& p, const std::string& name, int nslots,
                            const TrialConfig& cfg);

/// Checks a tensor polynomial against its target (zero / identity /
/// permutation) with the per-trial proportionality constant re-fit.
Report verify_tensor_output(const TensorPolynomial& q, TargetKind target,
                            const Permutation& target_perm, const TrialConfig& cfg);

std::vector<Report> suite_all(const TrialConfig& cfg);

/// Operator-form evaluation of f_{lambda_1} ot ... ot f_{lambda_n}: the
/// interleaved projector contraction of Thm.-5 type.  `vars` are k-1
/// operators on the tensor product of the parties' local spaces.
CMatrix tensor_stable_eval(const std::vector<Partition>& lambdas, const std::vector<int>& dims,
                           std::span<const CMatrix> vars);

}  // namespace symtrace
