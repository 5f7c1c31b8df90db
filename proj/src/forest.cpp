#include "wqsym/forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace wqsym {

std::strong_ordering operator<=>(const BiplaneTree& a, const BiplaneTree& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(
          a.left.begin(), a.left.end(), b.left.begin(), b.left.end());
      c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.right.begin(), a.right.end(),
                                                b.right.begin(), b.right.end());
}

BiplaneTree leaf(PositionSet label) { return {std::move(label), {}, {}}; }

BiplaneTree node(PositionSet label, Forest left, Forest right) {
  return {std::move(label), std::move(left), std::move(right)};
}

std::size_t weight(const BiplaneTree& t) {
  return t.label.size() + weight(t.left) + weight(t.right);
}

std::size_t weight(const Forest& f) {
  std::size_t total = 0;
  for (const auto& t : f) total += weight(t);
  return total;
}

std::size_t right_weight(const BiplaneTree& t) {
  return t.label.size() + weight(t.right);
}

bool satisfies_max_constraint(const Forest& f, const PositionSet& I) {
  if (I.empty()) return false;
  if (f.empty()) return I.is_initial_segment();
  const std::size_t first = I.front();
  if (first < 1 || first > weight(f.front())) return false;
  // 1 <= w_r + 1 - i_p <= w(r_d), with w_r = |I| + w(f)
  const std::size_t span_end = I.size() + weight(f) + 1;
  if (I.back() >= span_end) return false;
  return span_end - I.back() <= weight(f.back());
}

bool is_packed_tree(const BiplaneTree& t) {
  if (t.label.empty()) return false;
  if (!satisfies_max_constraint(t.right, t.label)) return false;
  return is_packed_forest(t.left) && is_packed_forest(t.right);
}

bool is_packed_forest(const Forest& f) {
  return std::all_of(f.begin(), f.end(),
                     [](const BiplaneTree& t) { return is_packed_tree(t); });
}

Forest word_to_forest(const PackedWord& w) {
  Forest f;
  for (const auto& factor : gd_factorize(w)) {
    f.push_back(word_to_tree(factor));
  }
  return f;
}

BiplaneTree word_to_tree(const PackedWord& w) {
  auto [left, positions, right] = max_factorize(w);
  return node(std::move(positions), word_to_forest(left), word_to_forest(right));
}

namespace {

PackedWord forest_word_unchecked(const Forest& f);

PackedWord tree_word_unchecked(const BiplaneTree& t) {
  return triangle_insert(forest_word_unchecked(t.left),
                         phi_insert(t.label, forest_word_unchecked(t.right)));
}

PackedWord forest_word_unchecked(const Forest& f) {
  PackedWord out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    out = over_concat(tree_word_unchecked(*it), out);
  }
  return out;
}

}  // namespace

PackedWord forest_to_word(const Forest& f) {
  if (!is_packed_forest(f)) throw std::invalid_argument("forest is not packed");
  return forest_word_unchecked(f);
}

PackedWord tree_to_word(const BiplaneTree& t) {
  if (!is_packed_tree(t)) throw std::invalid_argument("tree is not packed");
  return tree_word_unchecked(t);
}

std::vector<Forest> enumerate_forests(std::size_t n) {
  std::vector<Forest> out;
  for (const auto& w : enumerate_packed(n)) out.push_back(word_to_forest(w));
  return out;
}

std::vector<BiplaneTree> enumerate_trees(std::size_t n) {
  std::vector<BiplaneTree> out;
  for (const auto& w : enumerate_packed(n)) {
    if (is_irreducible(w)) out.push_back(word_to_tree(w));
  }
  return out;
}

std::vector<BiplaneTree> enumerate_tprim_trees(std::size_t n) {
  std::vector<BiplaneTree> out;
  for (auto& t : enumerate_trees(n)) {
    if (t.left.empty()) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Forest> enumerate_constrained_forests(std::size_t n,
                                                  const PositionSet& I) {
  if (I.empty() || I.size() > n) {
    throw std::invalid_argument("constrained forests need 1 <= |I| <= n");
  }
  std::vector<Forest> out;
  for (auto& f : enumerate_forests(n - I.size())) {
    if (satisfies_max_constraint(f, I)) out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Calls visit for every p-subset of [1, limit] in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t limit, std::size_t p, Visit&& visit) {
  if (p > limit) return;
  std::vector<std::size_t> positions(p);
  for (std::size_t k = 0; k < p; ++k) positions[k] = k + 1;
  while (true) {
    visit(positions);
    std::size_t k = p;
    while (k > 0 && positions[k - 1] == limit - p + k) --k;
    if (k == 0) return;
    ++positions[k - 1];
    for (std::size_t j = k; j < p; ++j) positions[j] = positions[j - 1] + 1;
  }
}

class DirectGenerator {
 public:
  const std::vector<BiplaneTree>& trees(std::size_t n) {
    grow(n);
    return trees_[n];
  }
  const std::vector<Forest>& forests(std::size_t n) {
    grow(n);
    return forests_[n];
  }

 private:
  void grow(std::size_t n) {
    if (forests_.empty()) {
      forests_.push_back({Forest{}});
      trees_.push_back({});
    }
    while (forests_.size() <= n) {
      const std::size_t w = forests_.size();
      trees_.push_back(build_trees(w));
      forests_.push_back(build_forests(w));
    }
  }

  std::vector<BiplaneTree> build_trees(std::size_t w) const {
    std::vector<BiplaneTree> out;
    for (std::size_t p = 1; p <= w; ++p) {
      // No right children: label {1..p}, any left forest.
      for (const auto& left : forests_[w - p]) {
        out.push_back(node(PositionSet::initial_segment(p), left, {}));
      }
      for (std::size_t r = 1; r + p <= w; ++r) {
        const auto& lefts = forests_[w - p - r];
        for (const auto& right : forests_[r]) {
          const std::size_t first_weight = weight(right.front());
          const std::size_t last_weight = weight(right.back());
          const std::size_t span = p + r;
          for_each_subset(span, p, [&](const std::vector<std::size_t>& positions) {
            if (positions.front() > first_weight) return;
            if (span + 1 - positions.back() > last_weight) return;
            for (const auto& left : lefts) {
              out.push_back(node(PositionSet(positions), left, right));
            }
          });
        }
      }
    }
    return out;
  }

  std::vector<Forest> build_forests(std::size_t w) const {
    std::vector<Forest> out;
    for (std::size_t first = 1; first <= w; ++first) {
      for (const auto& t : trees_[first]) {
        for (const auto& rest : forests_[w - first]) {
          Forest f;
          f.reserve(rest.size() + 1);
          f.push_back(t);
          f.insert(f.end(), rest.begin(), rest.end());
          out.push_back(std::move(f));
        }
      }
    }
    return out;
  }

  std::vector<std::vector<BiplaneTree>> trees_;
  std::vector<std::vector<Forest>> forests_;
};

}  // namespace

std::vector<Forest> generate_forests_direct(std::size_t n) {
  DirectGenerator gen;
  auto out = gen.forests(n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BiplaneTree> generate_trees_direct(std::size_t n) {
  DirectGenerator gen;
  auto out = gen.trees(n);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void render_into(const BiplaneTree& t, std::size_t depth, const char* marker,
                 std::string& out) {
  out += std::string(2 * depth, ' ') + marker + to_string(t.label) + "\n";
  for (const auto& c : t.left) render_into(c, depth + 1, "L ", out);
  for (const auto& c : t.right) render_into(c, depth + 1, "R ", out);
}

}  // namespace

std::string render(const BiplaneTree& t) {
  std::string out;
  render_into(t, 0, "", out);
  return out;
}

std::string render(const Forest& f) {
  if (f.empty()) return "[]\n";
  std::string out;
  for (const auto& t : f) out += render(t);
  return out;
}

}  // namespace wqsym
