#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "wqsym/linear_combination.hpp"

namespace wqsym {

// Half products on the augmentation ideal. Both throw std::invalid_argument
// when an operand has a unit (empty word) component.

/// R_ua < R_vb = sum of R_w over (u shuffle vb') a, with v shifted by max(ua).
Element left_product(const Element& x, const Element& y);
/// R_ua > R_vb = sum of R_w over (ua shuffle v') b', with v shifted by max(ua).
Element right_product(const Element& x, const Element& y);
/// x . y on K + A; the unit component acts as the identity.
Element product(const Element& x, const Element& y);

/// Delta_<: cuts with disjoint letter supports that keep every maximum on the left.
TensorElement coproduct_left(const Element& x);
/// Delta_>: cuts with disjoint letter supports that send every maximum right.
TensorElement coproduct_right(const Element& x);
/// Delta_< + Delta_>.
TensorElement reduced_coproduct(const Element& x);
/// 1 (x) a + a (x) 1 + reduced coproduct, extended with Delta(1) = 1 (x) 1.
TensorElement full_coproduct(const Element& x);

/// (a (x) b) . (c (x) d) = (a . c) (x) (b . d)
TensorElement tensor_product(const TensorElement& s, const TensorElement& t);

using ElementMap = std::function<TensorElement(const Element&)>;

/// (f (x) id) and (id (x) f) for a coproduct-like f.
Tensor3 apply_on_left(const TensorElement& t, const ElementMap& f);
Tensor3 apply_on_right(const TensorElement& t, const ElementMap& f);

/// Phi_I: R_w -> R_{phi_I(w)} when I.back() <= |w| + |I|, otherwise 0.
/// Applied to the unit this yields R_{1...1} for I = {1..p}.
Element cap_phi(const PositionSet& I, const Element& x);

/// tau_I: keeps R_w exactly when the maxima of w sit at the positions I.
Element tau(const PositionSet& I, const Element& x);

/// pi_k: the homogeneous component of degree k.
Element graded_component(std::size_t k, const Element& x);
/// pi_{<k} = pi_0 + ... + pi_{k-1}.
Element graded_below(std::size_t k, const Element& x);

/// <p_1, ..., p_{n-1}; p_n> =
///   sum_{i=0}^{n-1} (-1)^{n-1-i}
///     (p_1 < (p_2 < (... < p_i))) > p_n < ((p_{i+1} > p_{i+2}) > ... > p_{n-1})
/// A single argument is returned unchanged.
/// Throws std::invalid_argument on an empty argument list.
Element brace_bracket(std::span<const Element> args);

/// Every term of x has word length `degree` (vacuously true for zero).
bool is_homogeneous(const Element& x, std::size_t degree);

}  // namespace wqsym
