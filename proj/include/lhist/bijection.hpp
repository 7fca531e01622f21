#pragma once

#include "lhist/laguerre.hpp"
#include "lhist/perm.hpp"

namespace lhist {

/// Encode sigma in S_n as a Laguerre history of length n-1.  Step i is read
/// off the pair (v_{i+1}, p_i) of the val/pos vectors and mu_i = nest_i(sigma).
LaguerreHistory phi(const Permutation& s);

/// Inverse of phi: rebuild (v, p, mu) from the history (v_1 = 0, p_n = 0,
/// mu_n = 0 are forced), then place the non-excedance positions left to right
/// and the excedance positions right to left, mu_k selecting the rank of the
/// value taken.  Throws InternalInconsistency if a requested rank is missing,
/// which cannot happen for a valid history.
Permutation phi_inverse(const LaguerreHistory& h);

/// Modified Francon-Viennot encoding.  Step i corresponds to the VALUE i
/// (not the position): with j = sigma^-1(i) and boundary zeros,
///   U  if sigma(j-1) > i < sigma(j+1)      (valley)
///   D  if sigma(j-1) < i > sigma(j+1)      (peak)
///   L1 if sigma(j-1) > i > sigma(j+1)      (falling)
///   L0 if sigma(j-1) < i < sigma(j+1)      (rising)
/// and mu_i = (2-13)_i(sigma).
LaguerreHistory psi(const Permutation& s);

/// Inverse of psi by value-by-value insertion: values 1..n-1 are placed into
/// a word of gaps, the step type deciding which side keeps a gap and mu_i
/// selecting the gap counted from the right; n fills the last gap.
/// Throws NotInImage if the insertion cannot be completed.
Permutation psi_inverse(const LaguerreHistory& h);

/// Harness self-test hook: when enabled, phi deliberately mis-assigns mu
/// so verification checks can demonstrate a FAIL.  Never enable outside
/// tests.
void set_phi_mu_corruption(bool enabled);
bool phi_mu_corruption_enabled();

}  // namespace lhist
