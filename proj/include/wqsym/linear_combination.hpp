#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "wqsym/packed_word.hpp"

namespace wqsym {

using Rational = mpq_class;

/// Finite formal sum of keys with exact rational coefficients.
/// Zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, const Rational& coeff = 1) {
    add_term(key, coeff);
  }

  void add_term(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
    return *this;
  }
  LinearCombination& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [key, coeff] : terms_) coeff *= scalar;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a,
                                     const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a,
                                     const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) { return a *= -1; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) {
    return a *= s;
  }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Combination of basis elements R_w. The empty word stands for the unit.
using Element = LinearCombination<PackedWord>;
using WordPair = std::pair<PackedWord, PackedWord>;
using TensorElement = LinearCombination<WordPair>;
using WordTriple = std::array<PackedWord, 3>;
using Tensor3 = LinearCombination<WordTriple>;

inline Element basis(const PackedWord& w) { return Element(w); }
inline Element unit() { return Element(PackedWord{}); }

}  // namespace wqsym
