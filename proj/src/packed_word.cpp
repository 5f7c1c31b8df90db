#include "wqsym/packed_word.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace wqsym {

PackedWord::PackedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (!is_packed(letters_)) {
    throw std::invalid_argument("word is not packed");
  }
  max_ = letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

PackedWord::PackedWord(std::vector<Letter> letters, AssumePacked)
    : letters_(std::move(letters)) {
  max_ = letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

PositionSet::PositionSet(std::vector<std::size_t> positions)
    : positions_(std::move(positions)) {
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (positions_[k] == 0) {
      throw std::invalid_argument("positions are 1-based");
    }
    if (k > 0 && positions_[k] <= positions_[k - 1]) {
      throw std::invalid_argument("positions must be strictly increasing");
    }
  }
}

PositionSet PositionSet::initial_segment(std::size_t p) {
  std::vector<std::size_t> positions(p);
  for (std::size_t k = 0; k < p; ++k) positions[k] = k + 1;
  return PositionSet(std::move(positions));
}

bool PositionSet::contains(std::size_t position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

bool PositionSet::is_initial_segment() const {
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (positions_[k] != k + 1) return false;
  }
  return true;
}

PositionSet PositionSet::shifted_up(std::size_t offset) const {
  auto positions = positions_;
  for (auto& p : positions) p += offset;
  return PositionSet(std::move(positions));
}

PositionSet PositionSet::shifted_down(std::size_t offset) const {
  auto positions = positions_;
  for (auto& p : positions) {
    if (p <= offset) throw std::invalid_argument("shift moves a position below 1");
    p -= offset;
  }
  return PositionSet(std::move(positions));
}

bool is_packed(std::span<const Letter> letters) {
  if (letters.empty()) return true;
  const Letter m = *std::max_element(letters.begin(), letters.end());
  if (m > letters.size()) return false;
  std::vector<bool> seen(m + 1, false);
  for (Letter l : letters) {
    if (l == 0) return false;
    seen[l] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

PackedWord pack(std::span<const Letter> letters) {
  std::vector<Letter> distinct(letters.begin(), letters.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw std::invalid_argument("letters must be positive");
    auto it = std::lower_bound(distinct.begin(), distinct.end(), l);
    out.push_back(static_cast<Letter>(it - distinct.begin()) + 1);
  }
  return PackedWord(std::move(out), PackedWord::AssumePacked{});
}

namespace {

// Depth-first in lexicographic order. A prefix extends to a packed word iff
// the letters missing below its maximum fit in the remaining positions.
void enumerate_packed_rec(std::size_t n, std::vector<Letter>& prefix,
                          std::vector<std::size_t>& counts, Letter current_max,
                          std::size_t missing, std::vector<PackedWord>& out) {
  const std::size_t depth = prefix.size();
  if (depth == n) {
    out.emplace_back(prefix, PackedWord::AssumePacked{});
    return;
  }
  const std::size_t remaining = n - depth;
  for (Letter l = 1; l <= n; ++l) {
    std::size_t new_missing = missing;
    Letter new_max = current_max;
    if (l > current_max) {
      new_missing += l - current_max - 1;
      new_max = l;
    } else if (counts[l] == 0) {
      --new_missing;
    }
    if (new_missing > remaining - 1) {
      if (l > current_max) break;
      continue;
    }
    prefix.push_back(l);
    ++counts[l];
    enumerate_packed_rec(n, prefix, counts, new_max, new_missing, out);
    --counts[l];
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PackedWord> enumerate_packed(std::size_t n) {
  std::vector<PackedWord> out;
  std::vector<Letter> prefix;
  std::vector<std::size_t> counts(n + 2, 0);
  enumerate_packed_rec(n, prefix, counts, 0, 0, out);
  return out;
}

PositionSet global_descents(const PackedWord& w) {
  const auto letters = w.letters();
  const std::size_t n = letters.size();
  if (n < 2) return {};
  std::vector<Letter> suffix_max(n + 1, 0);
  for (std::size_t k = n; k-- > 0;) {
    suffix_max[k] = std::max(suffix_max[k + 1], letters[k]);
  }
  std::vector<std::size_t> cuts;
  Letter prefix_min = letters[0];
  for (std::size_t c = 1; c < n; ++c) {
    prefix_min = std::min(prefix_min, letters[c - 1]);
    if (prefix_min > suffix_max[c]) cuts.push_back(c);
  }
  return PositionSet(std::move(cuts));
}

bool is_irreducible(const PackedWord& w) {
  return !w.empty() && global_descents(w).empty();
}

std::vector<PackedWord> gd_factorize(const PackedWord& w) {
  std::vector<PackedWord> factors;
  if (w.empty()) return factors;
  const auto letters = w.letters();
  std::size_t start = 0;
  auto cuts = global_descents(w);
  std::vector<std::size_t> bounds(cuts.positions().begin(), cuts.positions().end());
  bounds.push_back(w.size());
  for (std::size_t end : bounds) {
    factors.push_back(pack(letters.subspan(start, end - start)));
    start = end;
  }
  return factors;
}

PackedWord over_concat(const PackedWord& u, const PackedWord& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  for (Letter l : u.letters()) out.push_back(l + v.max());
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return PackedWord(std::move(out), PackedWord::AssumePacked{});
}

PackedWord under_concat(const PackedWord& u, const PackedWord& v) {
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.size() + v.size());
  for (Letter l : v.letters()) out.push_back(l + u.max());
  return PackedWord(std::move(out), PackedWord::AssumePacked{});
}

namespace {

void shuffle_rec(std::span<const Letter> a, std::span<const Letter> b,
                 std::vector<Letter>& buffer, std::vector<PackedWord>& out) {
  if (a.empty() || b.empty()) {
    const std::size_t mark = buffer.size();
    buffer.insert(buffer.end(), a.begin(), a.end());
    buffer.insert(buffer.end(), b.begin(), b.end());
    out.emplace_back(buffer, PackedWord::AssumePacked{});
    buffer.resize(mark);
    return;
  }
  buffer.push_back(a.front());
  shuffle_rec(a.subspan(1), b, buffer, out);
  buffer.back() = b.front();
  shuffle_rec(a, b.subspan(1), buffer, out);
  buffer.pop_back();
}

}  // namespace

std::vector<PackedWord> shifted_shuffle(const PackedWord& u,
                                        const PackedWord& v) {
  std::vector<Letter> shifted;
  shifted.reserve(v.size());
  for (Letter l : v.letters()) shifted.push_back(l + u.max());
  std::vector<PackedWord> out;
  std::vector<Letter> buffer;
  buffer.reserve(u.size() + v.size());
  shuffle_rec(u.letters(), shifted, buffer, out);
  return out;
}

PackedWord phi_insert(const PositionSet& I, const PackedWord& w) {
  const std::size_t p = I.size();
  if (p == 0) throw std::invalid_argument("phi_insert needs a nonempty position set");
  const std::size_t total = w.size() + p;
  if (I.back() > total) {
    throw std::invalid_argument("phi_insert: position " + std::to_string(I.back()) +
                                " exceeds length " + std::to_string(total));
  }
  const Letter m = w.max() + 1;
  std::vector<Letter> out;
  out.reserve(total);
  std::size_t next_letter = 0;
  for (std::size_t position = 1; position <= total; ++position) {
    if (I.contains(position)) {
      out.push_back(m);
    } else {
      out.push_back(w.letters()[next_letter++]);
    }
  }
  return PackedWord(std::move(out), PackedWord::AssumePacked{});
}

PositionSet max_positions(const PackedWord& w) {
  std::vector<std::size_t> positions;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w.letters()[k] == w.max()) positions.push_back(k + 1);
  }
  return PositionSet(std::move(positions));
}

MaxExtraction phi_extract(const PackedWord& w) {
  if (w.empty()) throw std::invalid_argument("phi_extract of the empty word");
  std::vector<std::size_t> positions;
  std::vector<Letter> rest;
  rest.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter l = w.letters()[k];
    if (l == w.max()) {
      positions.push_back(k + 1);
    } else {
      rest.push_back(l);
    }
  }
  return {PositionSet(std::move(positions)),
          PackedWord(std::move(rest), PackedWord::AssumePacked{})};
}

PackedWord triangle_insert(const PackedWord& u, const PackedWord& v) {
  if (v.empty()) throw std::invalid_argument("triangle_insert: right operand is empty");
  auto [positions, rest] = phi_extract(v);
  return phi_insert(positions.shifted_up(u.size()), over_concat(u, rest));
}

MaxFactorization max_factorize(const PackedWord& w) {
  if (w.empty()) throw std::invalid_argument("max_factorize of the empty word");
  if (!is_irreducible(w)) {
    throw std::invalid_argument("max_factorize: " + to_string(w) + " is reducible");
  }
  auto [positions, rest] = phi_extract(w);
  const std::size_t first_max = positions.front();

  // Cut candidates: 0, the global descents of rest, and |rest|.
  std::size_t cut = 0;
  const PositionSet descents = global_descents(rest);
  for (std::size_t c : descents.positions()) {
    if (c < first_max) cut = c;
  }
  if (rest.size() < first_max) cut = rest.size();

  const auto letters = rest.letters();
  MaxFactorization out;
  out.left = pack(letters.subspan(0, cut));
  out.right = pack(letters.subspan(cut));
  out.positions = positions.shifted_down(cut);
  return out;
}

std::vector<PackedWord> enumerate_packed_with_max_positions(
    std::size_t n, const PositionSet& I) {
  if (I.empty()) throw std::invalid_argument("position set must be nonempty");
  if (I.back() > n) {
    throw std::invalid_argument("position " + std::to_string(I.back()) +
                                " exceeds length " + std::to_string(n));
  }
  std::vector<PackedWord> out;
  for (const auto& w : enumerate_packed(n - I.size())) {
    out.push_back(phi_insert(I, w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const PackedWord& w) {
  if (w.empty()) return "ε";
  std::string out;
  const bool digits = w.max() <= 9;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(w.letters()[k]);
  }
  return out;
}

std::string to_string(const PositionSet& I) {
  std::string out = "{";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(I.positions()[k]);
  }
  return out + "}";
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  if (text.empty() || text == "ε") return out;
  const auto positive = [&](unsigned long value) {
    if (value == 0) throw std::invalid_argument("letters must be positive");
    if (value > std::numeric_limits<Letter>::max()) {
      throw std::invalid_argument("letter too large");
    }
    return static_cast<Letter>(value);
  };
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("unexpected character in word: '" +
                                    std::string(1, c) + "'");
      }
      out.push_back(positive(static_cast<unsigned long>(c - '0')));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto token = text.substr(start, end - start);
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
      throw std::invalid_argument("malformed letter '" + std::string(token) + "'");
    }
    out.push_back(positive(value));
    start = end + 1;
  }
  return out;
}

PackedWord parse_word(std::string_view text) {
  return PackedWord(parse_letters(text));
}

}  // namespace wqsym
