#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wqsym {

using Letter = std::uint32_t;

/// A word over the positive integers in which every letter from 1 to its
/// maximum occurs at least once. The empty word is packed, with maximum 0.
class PackedWord {
 public:
  struct AssumePacked {};

  PackedWord() = default;

  /// Throws std::invalid_argument unless `letters` is packed.
  explicit PackedWord(std::vector<Letter> letters);
  PackedWord(std::initializer_list<Letter> letters)
      : PackedWord(std::vector<Letter>(letters)) {}

  /// Skips the packedness check; callers must guarantee it.
  PackedWord(std::vector<Letter> letters, AssumePacked);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter max() const { return max_; }

  /// 1-based access, matching the usual position convention for words.
  Letter at(std::size_t position) const { return letters_.at(position - 1); }

  friend bool operator==(const PackedWord& a, const PackedWord& b) {
    return a.letters_ == b.letters_;
  }
  friend std::strong_ordering operator<=>(const PackedWord& a,
                                          const PackedWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  Letter max_ = 0;
};

/// Strictly increasing list of 1-based positions.
class PositionSet {
 public:
  PositionSet() = default;
  explicit PositionSet(std::vector<std::size_t> positions);
  PositionSet(std::initializer_list<std::size_t> positions)
      : PositionSet(std::vector<std::size_t>(positions)) {}

  /// {1, ..., p}
  static PositionSet initial_segment(std::size_t p);

  std::span<const std::size_t> positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  std::size_t front() const { return positions_.front(); }
  std::size_t back() const { return positions_.back(); }
  bool contains(std::size_t position) const;
  bool is_initial_segment() const;

  /// Adds `offset` to every position.
  PositionSet shifted_up(std::size_t offset) const;
  /// Subtracts `offset`; throws std::invalid_argument if a position would drop below 1.
  PositionSet shifted_down(std::size_t offset) const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;
  friend std::strong_ordering operator<=>(const PositionSet& a,
                                          const PositionSet& b) {
    return a.positions_ <=> b.positions_;
  }

 private:
  std::vector<std::size_t> positions_;
};

bool is_packed(std::span<const Letter> letters);

/// Relabels the distinct letters b_1 < ... < b_r of `letters` as 1..r.
PackedWord pack(std::span<const Letter> letters);

/// All packed words of length n in lexicographic order.
std::vector<PackedWord> enumerate_packed(std::size_t n);

/// Positions c in [1, n-1] where every letter up to c exceeds every letter after c.
PositionSet global_descents(const PackedWord& w);

/// Nonempty and without global descents.
bool is_irreducible(const PackedWord& w);

/// The unique factorization w = w_1 / w_2 / ... / w_k into irreducibles.
/// The empty word factors as the empty list.
std::vector<PackedWord> gd_factorize(const PackedWord& w);

/// u / v: concatenation with u shifted up by max(v).
PackedWord over_concat(const PackedWord& u, const PackedWord& v);
/// u \ v: concatenation with v shifted up by max(u).
PackedWord under_concat(const PackedWord& u, const PackedWord& v);

/// Shuffle of u with v shifted by max(u), with multiplicity.
std::vector<PackedWord> shifted_shuffle(const PackedWord& u,
                                        const PackedWord& v);

/// Inserts max(w)+1 so that it occupies exactly the positions in I.
/// Throws std::invalid_argument if I is empty or I.back() > |w| + |I|.
PackedWord phi_insert(const PositionSet& I, const PackedWord& w);

struct MaxExtraction {
  PositionSet positions;
  PackedWord rest;

  friend bool operator==(const MaxExtraction&, const MaxExtraction&) = default;
};

/// Inverse of phi_insert: the positions of the maximum letter and the word
/// left after deleting it. Throws std::invalid_argument on the empty word.
MaxExtraction phi_extract(const PackedWord& w);

/// Positions of max(w); empty for the empty word.
PositionSet max_positions(const PackedWord& w);

/// u |> v: with v = phi_I(v'), returns phi_{I+|u|}(u / v').
/// Throws std::invalid_argument if v is empty.
PackedWord triangle_insert(const PackedWord& u, const PackedWord& v);

struct MaxFactorization {
  PackedWord left;
  PositionSet positions;
  PackedWord right;

  friend bool operator==(const MaxFactorization&,
                         const MaxFactorization&) = default;
};

/// Writes an irreducible w as left |> phi_positions(right) with |left| maximal.
/// Throws std::invalid_argument on empty or reducible input.
MaxFactorization max_factorize(const PackedWord& w);

/// {phi_I(w) : w in PW_{n-|I|}}, lexicographically sorted.
/// Throws std::invalid_argument if I is empty or I.back() > n.
std::vector<PackedWord> enumerate_packed_with_max_positions(
    std::size_t n, const PositionSet& I);

/// Digit string when every letter is at most 9, comma-separated otherwise.
/// The empty word is rendered as "ε".
std::string to_string(const PackedWord& w);
std::string to_string(const PositionSet& I);

/// Accepts the forms produced by to_string plus the empty string.
/// Only checks that letters are positive; see parse_word for packedness.
std::vector<Letter> parse_letters(std::string_view text);
PackedWord parse_word(std::string_view text);

}  // namespace wqsym
