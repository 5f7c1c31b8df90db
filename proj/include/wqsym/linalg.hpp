#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wqsym/linear_combination.hpp"

namespace wqsym {

/// Sparse exact-rational matrix with fixed dimensions. No stored zeros.
class RationalMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);
  const Row& row(std::size_t r) const { return rows_.at(r); }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Sparse vector: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Vertical concatenation. Ker(stack(a, b)) = Ker(a) ∩ Ker(b).
RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom);

/// Exact rank over Q.
std::size_t rank(const RationalMatrix& m);

/// cols - rank vectors spanning Ker(m). The vector for free column f has
/// coordinate 1 at f and 0 at every other free column.
std::vector<SparseVector> kernel_basis(const RationalMatrix& m);

/// m * v
SparseVector multiply(const RationalMatrix& m, const SparseVector& v);

/// "rows cols" header, then one "row col num/den" line per entry.
void write_coordinates(std::ostream& os, const RationalMatrix& m);
RationalMatrix read_coordinates(std::istream& is);

/// Ordered duplicate-free list of basis keys giving rows or columns meaning.
template <class Key>
class BasisIndex {
 public:
  BasisIndex() = default;
  /// Sorts the keys; throws std::invalid_argument on duplicates.
  explicit BasisIndex(std::vector<Key> keys) : keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
    for (std::size_t k = 0; k < keys_.size(); ++k) {
      if (k > 0 && keys_[k] == keys_[k - 1]) {
        throw std::invalid_argument("duplicate basis key");
      }
      index_.emplace(keys_[k], k);
    }
  }

  std::size_t size() const { return keys_.size(); }
  const Key& operator[](std::size_t k) const { return keys_[k]; }
  const std::vector<Key>& keys() const { return keys_; }

  /// Throws std::out_of_range for keys outside the basis.
  std::size_t index_of(const Key& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw std::out_of_range("key outside the basis");
    return it->second;
  }
  bool contains(const Key& key) const { return index_.count(key) > 0; }

 private:
  std::vector<Key> keys_;
  std::map<Key, std::size_t> index_;
};

/// Column j holds the coordinates of map(domain[j]) in the codomain basis.
/// Throws std::out_of_range if an image term lies outside the codomain.
template <class DomainKey, class CodomainKey, class Map>
RationalMatrix matrix_of_map(const BasisIndex<DomainKey>& domain,
                             const BasisIndex<CodomainKey>& codomain,
                             const Map& map) {
  RationalMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const LinearCombination<CodomainKey> image = map(domain[j]);
    for (const auto& [key, coeff] : image) {
      if (!codomain.contains(key)) {
        throw std::out_of_range("image of basis element " + std::to_string(j) +
                                " leaves the codomain");
      }
      m.set(codomain.index_of(key), j, coeff);
    }
  }
  return m;
}

/// Rebuilds sum_j v_j * basis[j].
template <class Key>
LinearCombination<Key> combination_of(const BasisIndex<Key>& basis,
                                      const SparseVector& v) {
  LinearCombination<Key> out;
  for (const auto& [j, coeff] : v) out.add_term(basis[j], coeff);
  return out;
}

}  // namespace wqsym
