#pragma once

#include "core/cmatrix.hpp"
#include "core/group_algebra.hpp"

namespace symtrace {

/// The permutation matrix T(pi) on (C^d)^{otimes k}:
/// T(pi) |v_1 ... v_k> = |v_{pi^{-1}(1)} ... v_{pi^{-1}(k)}>.
/// 0/1 entries, unitary, T(pi)^dag = T(pi^{-1}).
CMatrix rep_matrix(const Permutation& pi, int d);

/// Linear lift T_hat(alpha) = sum a_g T(g); multiplicative on the algebra.
CMatrix algebra_rep(const AlgebraElement& alpha, int d);

/// Central Young projector P_lambda = T_hat(omega_lambda).  Memoized.
CMatrix young_projector(const Partition& lambda, int d);

/// The swap operator on (C^d)^{otimes 2}.
CMatrix swap_gamma(int d);

}  // namespace symtrace
