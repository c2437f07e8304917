#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metabelian/lie.hpp"
#include "metabelian/permutation.hpp"
#include "metabelian/polynomial.hpp"
#include "metabelian/symmetric.hpp"
#include "metabelian/wreath.hpp"

namespace metabelian {

/// epsilon_j = sum_i u_i * (sum of squarefree degree-(j-1) monomials
/// avoiding x_i), 1 <= j <= n. These generate W_n^{S_n} over K[X_n]^{S_n}.
WreathElement epsilon(std::size_t n, std::size_t j);

/// e_{p,q}(U_n, X_n) over 2n variables ordered u_1..u_n, x_1..x_n:
/// sum of u_{i_1}..u_{i_p} x_{j_1}..x_{j_q} over pairwise distinct indices
/// with increasing i's and increasing j's. Requires 0 < p + q <= n.
Polynomial polarized_elementary(std::size_t n, std::size_t p, std::size_t q);

/// h_ij = j*epsilon_i*e_j - i*epsilon_j*e_i, 1 <= i < j <= n.
WreathElement generator_h(std::size_t n, std::size_t i, std::size_t j);

/// The Lie element whose embedding is h_ij.
LieElement generator_h_lie(std::size_t n, std::size_t i, std::size_t j);

/// First S_n generator that moves f, if any.
std::optional<Permutation> invariance_violation(const LieElement& f);
bool is_invariant_lie(const LieElement& f);

/// Averages f over S_n (n <= kMaxEnumerationRank).
LieElement reynolds_lie(const LieElement& f);

/// c = sum_k beta_k z_{j1, jk} where z_{j1, jk} has jk at position j1 and
/// -j1 at position jk (positions 1-based).
struct KernelExpansion {
  std::size_t lead = 0;                  // j1; 0 when c = 0
  std::map<std::size_t, Rational> beta;  // jk -> beta_k
};

/// z_{a,b} in K^n, 1-based positions a != b.
std::vector<Rational> kernel_basis_vector(std::size_t n, std::size_t a, std::size_t b);

/// Expands c (sum_j j*c_j = 0) over z-vectors anchored at its first
/// nonzero coordinate, with beta_k = -c_{jk} / j1. Throws KernelError if c
/// is not a solution.
KernelExpansion solve_weighted_kernel(std::span<const Rational> c);

/// Coefficients r_j (as e-decompositions) with w = sum_j epsilon_j * r_j.
/// Each homogeneous component is solved separately by exact elimination
/// with unknowns ordered by (j ascending, e-monomial graded-lex), free
/// unknowns set to zero. Throws InvarianceError if w is not S_n-invariant,
/// DomainError if it has a v-part.
std::vector<EDecomposition> epsilon_form(const WreathElement& w);

/// f = f1 * (x_1 + ... + x_n) + sum_{i<j} h_ij * q_ij(e_1, ..., e_n).
struct InvariantDecomposition {
  std::size_t n = 0;
  Rational f1;
  std::map<std::pair<std::size_t, std::size_t>, EDecomposition> parts;

  /// Rebuilds the Lie element from the decomposition.
  LieElement reconstruct() const;
};

/// Decomposes an S_n-invariant element over the module generators h_ij.
/// Throws InvarianceError for non-invariant input and ConsistencyError if
/// an internal identity fails.
InvariantDecomposition decompose_invariant(const LieElement& f);

/// Exact reconstruction plus symmetry of every q_ij expansion.
bool verify_decomposition(const InvariantDecomposition& d, const LieElement& f);

/// Whether k*h_ij*e_k - j*h_ik*e_j + i*h_jk*e_i = 0 for 1 <= i < j < k <= n.
bool verify_module_relation(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

/// A basis of the degree-d component of F_n^{S_n}, from the exact nullspace
/// of (sigma - 1) over both S_n generators. Each vector is scaled so its
/// first nonzero basis coefficient is 1.
std::vector<LieElement> invariant_space_basis(std::size_t n, std::size_t d);

}  // namespace metabelian
