#include "wqsym/algebra.hpp"

#include <stdexcept>
#include <vector>

namespace wqsym {

namespace {

// Appends every shuffle of a and b to buffer, calls emit, then restores buffer.
template <class Emit>
void for_each_shuffle(std::span<const Letter> a, std::span<const Letter> b,
                      std::vector<Letter>& buffer, const Emit& emit) {
  if (a.empty() || b.empty()) {
    const std::size_t mark = buffer.size();
    buffer.insert(buffer.end(), a.begin(), a.end());
    buffer.insert(buffer.end(), b.begin(), b.end());
    emit(buffer);
    buffer.resize(mark);
    return;
  }
  buffer.push_back(a.front());
  for_each_shuffle(a.subspan(1), b, buffer, emit);
  buffer.back() = b.front();
  for_each_shuffle(a, b.subspan(1), buffer, emit);
  buffer.pop_back();
}

enum class Side { kLeft, kRight };

void require_augmented(const Element& x, const char* what) {
  if (x.coefficient(PackedWord{}) != 0) {
    throw std::invalid_argument(std::string(what) +
                                " is only defined on the augmentation ideal");
  }
}

void half_product_words(const PackedWord& u, const PackedWord& v, Side side,
                        const Rational& coeff, Element& out) {
  std::vector<Letter> shifted;
  shifted.reserve(v.size());
  for (Letter l : v.letters()) shifted.push_back(l + u.max());

  std::span<const Letter> a = u.letters();
  std::span<const Letter> b = shifted;
  Letter last;
  if (side == Side::kLeft) {
    last = a.back();
    a = a.first(a.size() - 1);
  } else {
    last = b.back();
    b = b.first(b.size() - 1);
  }
  std::vector<Letter> buffer;
  buffer.reserve(u.size() + v.size());
  for_each_shuffle(a, b, buffer, [&](std::vector<Letter>& w) {
    w.push_back(last);
    out.add_term(PackedWord(w, PackedWord::AssumePacked{}), coeff);
    w.pop_back();
  });
}

Element half_product(const Element& x, const Element& y, Side side) {
  const char* what = side == Side::kLeft ? "left_product" : "right_product";
  require_augmented(x, what);
  require_augmented(y, what);
  Element out;
  for (const auto& [u, a] : x) {
    for (const auto& [v, b] : y) {
      half_product_words(u, v, side, a * b, out);
    }
  }
  return out;
}

// Adds the cuts of w selected by `sides` (true: Delta_<, false: Delta_>).
void coproduct_word(const PackedWord& w, const Rational& coeff, bool want_left,
                    bool want_right, TensorElement& out) {
  const std::size_t n = w.size();
  if (n < 2) return;
  const auto letters = w.letters();
  std::vector<std::size_t> first(w.max() + 1, n), last(w.max() + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const Letter l = letters[k];
    if (first[l] == n) first[l] = k;
    last[l] = k;
  }
  // split[c] > 0 iff cutting after c letters separates two equal letters.
  std::vector<int> split(n + 1, 0);
  for (Letter l = 1; l <= w.max(); ++l) {
    ++split[first[l] + 1];
    --split[last[l] + 1];
  }
  int running = 0;
  for (std::size_t c = 1; c < n; ++c) {
    running += split[c];
    if (running != 0) continue;
    const bool maxima_left = last[w.max()] < c;
    if ((maxima_left && !want_left) || (!maxima_left && !want_right)) continue;
    out.add_term({pack(letters.first(c)), pack(letters.subspan(c))}, coeff);
  }
}

TensorElement coproduct_impl(const Element& x, bool want_left, bool want_right) {
  TensorElement out;
  for (const auto& [w, c] : x) {
    if (w.empty()) {
      throw std::invalid_argument(
          "half coproducts are only defined on the augmentation ideal");
    }
    coproduct_word(w, c, want_left, want_right, out);
  }
  return out;
}

}  // namespace

Element left_product(const Element& x, const Element& y) {
  return half_product(x, y, Side::kLeft);
}

Element right_product(const Element& x, const Element& y) {
  return half_product(x, y, Side::kRight);
}

Element product(const Element& x, const Element& y) {
  Element out;
  const PackedWord empty;
  const Rational x0 = x.coefficient(empty);
  const Rational y0 = y.coefficient(empty);
  Element xa = x, ya = y;
  xa.add_term(empty, -x0);
  ya.add_term(empty, -y0);
  for (const auto& [u, a] : xa) {
    for (const auto& [v, b] : ya) {
      half_product_words(u, v, Side::kLeft, a * b, out);
      half_product_words(u, v, Side::kRight, a * b, out);
    }
  }
  out += y0 * xa;
  out += x0 * ya;
  out.add_term(empty, x0 * y0);
  return out;
}

TensorElement coproduct_left(const Element& x) {
  return coproduct_impl(x, true, false);
}

TensorElement coproduct_right(const Element& x) {
  return coproduct_impl(x, false, true);
}

TensorElement reduced_coproduct(const Element& x) {
  return coproduct_impl(x, true, true);
}

TensorElement full_coproduct(const Element& x) {
  TensorElement out;
  const PackedWord empty;
  for (const auto& [w, c] : x) {
    if (w.empty()) {
      out.add_term({empty, empty}, c);
      continue;
    }
    out.add_term({empty, w}, c);
    out.add_term({w, empty}, c);
    coproduct_word(w, c, true, true, out);
  }
  return out;
}

TensorElement tensor_product(const TensorElement& s, const TensorElement& t) {
  TensorElement out;
  for (const auto& [ab, c1] : s) {
    for (const auto& [cd, c2] : t) {
      const Element left = product(basis(ab.first), basis(cd.first));
      const Element right = product(basis(ab.second), basis(cd.second));
      const Rational c = c1 * c2;
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) out.add_term({l, r}, c * cl * cr);
      }
    }
  }
  return out;
}

Tensor3 apply_on_left(const TensorElement& t, const ElementMap& f) {
  Tensor3 out;
  for (const auto& [ab, c] : t) {
    for (const auto& [xy, d] : f(basis(ab.first))) {
      out.add_term({xy.first, xy.second, ab.second}, c * d);
    }
  }
  return out;
}

Tensor3 apply_on_right(const TensorElement& t, const ElementMap& f) {
  Tensor3 out;
  for (const auto& [ab, c] : t) {
    for (const auto& [xy, d] : f(basis(ab.second))) {
      out.add_term({ab.first, xy.first, xy.second}, c * d);
    }
  }
  return out;
}

Element cap_phi(const PositionSet& I, const Element& x) {
  if (I.empty()) throw std::invalid_argument("cap_phi needs a nonempty position set");
  Element out;
  for (const auto& [w, c] : x) {
    if (I.back() <= w.size() + I.size()) out.add_term(phi_insert(I, w), c);
  }
  return out;
}

Element tau(const PositionSet& I, const Element& x) {
  Element out;
  for (const auto& [w, c] : x) {
    if (max_positions(w) == I) out.add_term(w, c);
  }
  return out;
}

Element graded_component(std::size_t k, const Element& x) {
  Element out;
  for (const auto& [w, c] : x) {
    if (w.size() == k) out.add_term(w, c);
  }
  return out;
}

Element graded_below(std::size_t k, const Element& x) {
  Element out;
  for (const auto& [w, c] : x) {
    if (w.size() < k) out.add_term(w, c);
  }
  return out;
}

Element brace_bracket(std::span<const Element> args) {
  if (args.empty()) throw std::invalid_argument("brace_bracket needs an argument");
  const std::size_t n = args.size();
  const Element& root = args.back();
  if (n == 1) return root;

  Element out;
  for (std::size_t i = 0; i < n; ++i) {
    // p_1 < (p_2 < (... < p_i)), built from the inside out.
    Element term;
    if (i == 0) {
      term = root;
    } else {
      Element prefix = args[i - 1];
      for (std::size_t k = i - 1; k-- > 0;) prefix = left_product(args[k], prefix);
      term = right_product(prefix, root);
    }
    // ((p_{i+1} > p_{i+2}) > ...) > p_{n-1}
    if (i + 1 < n) {
      Element suffix = args[i];
      for (std::size_t k = i + 1; k + 1 < n; ++k) suffix = right_product(suffix, args[k]);
      term = left_product(term, suffix);
    }
    const bool negative = (n - 1 - i) % 2 == 1;
    if (negative) {
      out -= term;
    } else {
      out += term;
    }
  }
  return out;
}

bool is_homogeneous(const Element& x, std::size_t degree) {
  for (const auto& [w, c] : x) {
    if (w.size() != degree) return false;
  }
  return true;
}

}  // namespace wqsym
