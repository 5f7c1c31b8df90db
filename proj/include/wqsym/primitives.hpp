#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wqsym/algebra.hpp"
#include "wqsym/forest.hpp"
#include "wqsym/linalg.hpp"

namespace wqsym {

/// One line of a verification report.
struct CheckResult {
  using Value = std::variant<std::int64_t, std::string>;

  std::size_t degree = 0;
  std::string check;
  Value expected;
  Value actual;
  bool pass = false;
  /// Offending instance when the check fails; empty otherwise.
  std::string detail;
};

using Report = std::vector<CheckResult>;

bool all_pass(const Report& report);

/// Dimensions per degree; index 0 holds 0 so that entry n is the degree-n value.
struct HilbertData {
  std::vector<std::int64_t> a;  // dim WQSym_n
  std::vector<std::int64_t> p;  // dim Prim_n
  std::vector<std::int64_t> t;  // dim TPrim_n
};

/// Nonempty subsets of {1..n}, ordered by size then lexicographically.
std::vector<PositionSet> all_position_sets(std::size_t n);

BasisIndex<PackedWord> word_basis(std::size_t n);
/// Pairs (u, v) of nonempty packed words with |u| + |v| = n.
BasisIndex<WordPair> reduced_tensor_basis(std::size_t n);

enum class CoproductKind { kLeft, kRight, kReduced };

/// Matrix of a half coproduct (or of the reduced coproduct) on degree n.
RationalMatrix coproduct_matrix(std::size_t n, CoproductKind kind);

/// dim Ker(reduced coproduct) on degree n.
std::size_t dim_prim(std::size_t n);
/// dim Ker(Delta_<) ∩ Ker(Delta_>) on degree n.
std::size_t dim_tprim(std::size_t n);
/// A basis of the totally primitive elements of degree n.
std::vector<Element> tprim_basis(std::size_t n);

/// Expansion of the P-basis element indexed by a packed forest or tree.
/// The empty forest evaluates to the unit, so Phi_I of it is R_{1..1}.
/// Throws std::invalid_argument if the input is not packed.
Element p_basis_element(const Forest& f);
Element p_basis_element(const BiplaneTree& t);

/// Rank of {P_f : f packed forest of weight n} in WQSym_n.
std::size_t p_basis_rank(std::size_t n);

/// P_f homogeneity and, when with_rank, the rank check for the forests of
/// weight n; primitivity of P_t for packed trees; total primitivity of P_t
/// for trees with empty left forest; counts against the kernel dimensions.
Report verify_p_basis(std::size_t n, bool with_rank = true);

/// tau_I maps TPrim_n into itself, the tau_I images add back up, and the
/// per-I dimensions sum to dim TPrim_n (each matching the constrained
/// forest count).
Report verify_tau_stability(std::size_t n);

/// dim of {x in WQSym_m : every term a (x) b of Delta(x) has
///   |a| >= i whenever a is nonempty, and |b| >= j whenever b is nonempty}.
/// Here Delta is the unital coproduct, so x (x) 1 and 1 (x) x count too.
/// For i = j = 1 this is all of WQSym_m; for i = j = m it is Prim_m.
std::size_t prim_ij_dimension(std::size_t m, std::size_t i, std::size_t j);

/// For each I of {1..n}: prim_ij_dimension(n-p, i_1, n+1-i_p) equals the number
/// of constrained forests for I, and their P elements span that space.
Report verify_prim_ij(std::size_t n);

/// a_n by enumeration, p_n and t_n from kernels, degrees 1..max_n computed concurrently.
HilbertData compute_hilbert_data(std::size_t max_n);

/// Coefficient-wise checks of A = P/(1-P), T = A/(1+A)^2 and P = T(1+A).
Report hilbert_check(const HilbertData& data);
Report hilbert_check(std::size_t max_n);

}  // namespace wqsym
