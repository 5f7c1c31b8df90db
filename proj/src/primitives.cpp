#include "wqsym/primitives.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace wqsym {

bool all_pass(const Report& report) {
  return std::all_of(report.begin(), report.end(),
                     [](const CheckResult& r) { return r.pass; });
}

namespace {

CheckResult make_check(std::size_t degree, std::string name, std::int64_t expected,
                       std::int64_t actual, std::string detail = {}) {
  CheckResult r;
  r.degree = degree;
  r.check = std::move(name);
  r.expected = expected;
  r.actual = actual;
  r.pass = expected == actual;
  if (!r.pass) r.detail = std::move(detail);
  return r;
}

std::int64_t as_int(std::size_t n) { return static_cast<std::int64_t>(n); }

}  // namespace

std::vector<PositionSet> all_position_sets(std::size_t n) {
  std::vector<PositionSet> out;
  for (std::size_t p = 1; p <= n; ++p) {
    std::vector<std::size_t> positions(p);
    for (std::size_t k = 0; k < p; ++k) positions[k] = k + 1;
    while (true) {
      out.emplace_back(positions);
      std::size_t k = p;
      while (k > 0 && positions[k - 1] == n - p + k) --k;
      if (k == 0) break;
      ++positions[k - 1];
      for (std::size_t j = k; j < p; ++j) positions[j] = positions[j - 1] + 1;
    }
  }
  return out;
}

BasisIndex<PackedWord> word_basis(std::size_t n) {
  return BasisIndex<PackedWord>(enumerate_packed(n));
}

BasisIndex<WordPair> reduced_tensor_basis(std::size_t n) {
  std::vector<WordPair> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    const auto lefts = enumerate_packed(i);
    const auto rights = enumerate_packed(n - i);
    for (const auto& u : lefts) {
      for (const auto& v : rights) pairs.emplace_back(u, v);
    }
  }
  return BasisIndex<WordPair>(std::move(pairs));
}

RationalMatrix coproduct_matrix(std::size_t n, CoproductKind kind) {
  const auto domain = word_basis(n);
  const auto codomain = reduced_tensor_basis(n);
  return matrix_of_map(domain, codomain, [kind](const PackedWord& w) {
    switch (kind) {
      case CoproductKind::kLeft:
        return coproduct_left(basis(w));
      case CoproductKind::kRight:
        return coproduct_right(basis(w));
      case CoproductKind::kReduced:
        break;
    }
    return reduced_coproduct(basis(w));
  });
}

std::size_t dim_prim(std::size_t n) {
  const auto m = coproduct_matrix(n, CoproductKind::kReduced);
  return m.cols() - rank(m);
}

namespace {

RationalMatrix tprim_matrix(std::size_t n) {
  return stack(coproduct_matrix(n, CoproductKind::kLeft),
               coproduct_matrix(n, CoproductKind::kRight));
}

}  // namespace

std::size_t dim_tprim(std::size_t n) {
  const auto m = tprim_matrix(n);
  return m.cols() - rank(m);
}

std::vector<Element> tprim_basis(std::size_t n) {
  const auto words = word_basis(n);
  std::vector<Element> out;
  for (const auto& v : kernel_basis(tprim_matrix(n))) {
    out.push_back(combination_of(words, v));
  }
  return out;
}

namespace {

Element p_forest(const Forest& f);

Element p_tree(const BiplaneTree& t) {
  Element root = cap_phi(t.label, p_forest(t.right));
  if (t.left.empty()) return root;
  std::vector<Element> args;
  args.reserve(t.left.size() + 1);
  for (const auto& l : t.left) args.push_back(p_tree(l));
  args.push_back(std::move(root));
  return brace_bracket(args);
}

// P_{t_1..t_k} = P_{t_k} < (P_{t_{k-1}} < (... < P_{t_1}))
Element p_forest(const Forest& f) {
  if (f.empty()) return unit();
  Element out = p_tree(f.front());
  for (std::size_t k = 1; k < f.size(); ++k) out = left_product(p_tree(f[k]), out);
  return out;
}

std::string describe(const Forest& f) { return "forest of word " + to_string(forest_to_word(f)); }
std::string describe(const BiplaneTree& t) { return "tree of word " + to_string(tree_to_word(t)); }

}  // namespace

Element p_basis_element(const Forest& f) {
  if (!is_packed_forest(f)) throw std::invalid_argument("forest is not packed");
  return p_forest(f);
}

Element p_basis_element(const BiplaneTree& t) {
  if (!is_packed_tree(t)) throw std::invalid_argument("tree is not packed");
  return p_tree(t);
}

namespace {

RationalMatrix expansion_matrix(const BasisIndex<PackedWord>& words,
                                const std::vector<Element>& elements) {
  RationalMatrix m(words.size(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    for (const auto& [w, c] : elements[j]) m.set(words.index_of(w), j, c);
  }
  return m;
}

}  // namespace

std::size_t p_basis_rank(std::size_t n) {
  std::vector<Element> elements;
  for (const auto& f : enumerate_forests(n)) elements.push_back(p_forest(f));
  return rank(expansion_matrix(word_basis(n), elements));
}

Report verify_p_basis(std::size_t n, bool with_rank) {
  Report report;
  const auto words = word_basis(n);

  const auto forests = enumerate_forests(n);
  std::vector<Element> elements;
  std::size_t homogeneous = 0;
  std::string first_bad;
  for (const auto& f : forests) {
    elements.push_back(p_forest(f));
    if (is_homogeneous(elements.back(), n) && !elements.back().is_zero()) {
      ++homogeneous;
    } else if (first_bad.empty()) {
      first_bad = describe(f);
    }
  }
  report.push_back(make_check(n, "p_basis_homogeneous", as_int(forests.size()),
                              as_int(homogeneous), first_bad));
  if (with_rank) {
    report.push_back(make_check(n, "p_basis_rank", as_int(words.size()),
                                as_int(rank(expansion_matrix(words, elements)))));
  }

  const auto trees = enumerate_trees(n);
  std::size_t primitive = 0;
  first_bad.clear();
  for (const auto& t : trees) {
    if (reduced_coproduct(p_tree(t)).is_zero()) {
      ++primitive;
    } else if (first_bad.empty()) {
      first_bad = describe(t);
    }
  }
  report.push_back(make_check(n, "p_tree_primitive", as_int(trees.size()),
                              as_int(primitive), first_bad));

  const auto tprim_trees = enumerate_tprim_trees(n);
  std::size_t totally = 0;
  first_bad.clear();
  for (const auto& t : tprim_trees) {
    const Element x = p_tree(t);
    if (coproduct_left(x).is_zero() && coproduct_right(x).is_zero()) {
      ++totally;
    } else if (first_bad.empty()) {
      first_bad = describe(t);
    }
  }
  report.push_back(make_check(n, "p_tree_totally_primitive", as_int(tprim_trees.size()),
                              as_int(totally), first_bad));

  report.push_back(make_check(n, "prim_count_matches_kernel", as_int(dim_prim(n)),
                              as_int(trees.size())));
  report.push_back(make_check(n, "tprim_count_matches_kernel", as_int(dim_tprim(n)),
                              as_int(tprim_trees.size())));
  return report;
}

Report verify_tau_stability(std::size_t n) {
  Report report;
  const auto words = word_basis(n);
  const auto tprim = tprim_basis(n);
  const auto sets = all_position_sets(n);

  std::vector<Element> reassembled(tprim.size());
  std::size_t stable = 0, total = 0, dims_match = 0;
  std::int64_t dim_sum = 0;
  std::string first_bad, first_dim_bad;
  for (const auto& I : sets) {
    std::vector<Element> images;
    for (std::size_t k = 0; k < tprim.size(); ++k) {
      Element image = tau(I, tprim[k]);
      reassembled[k] += image;
      ++total;
      if (coproduct_left(image).is_zero() && coproduct_right(image).is_zero()) {
        ++stable;
      } else if (first_bad.empty()) {
        first_bad = "I = " + to_string(I) + ", basis vector " + std::to_string(k);
      }
      if (!image.is_zero()) images.push_back(std::move(image));
    }
    const std::size_t dim = rank(expansion_matrix(words, images));
    dim_sum += as_int(dim);
    const std::size_t forests = enumerate_constrained_forests(n, I).size();
    if (dim == forests) {
      ++dims_match;
    } else if (first_dim_bad.empty()) {
      first_dim_bad = "I = " + to_string(I) + ": dim " + std::to_string(dim) +
                      ", forests " + std::to_string(forests);
    }
  }
  report.push_back(make_check(n, "tau_preserves_tprim", as_int(total), as_int(stable),
                              first_bad));

  std::size_t recovered = 0;
  for (std::size_t k = 0; k < tprim.size(); ++k) {
    if (reassembled[k] == tprim[k]) ++recovered;
  }
  report.push_back(make_check(n, "tau_images_sum_back", as_int(tprim.size()),
                              as_int(recovered)));
  report.push_back(make_check(n, "tau_direct_sum_dimension", as_int(tprim.size()), dim_sum));
  report.push_back(make_check(n, "tau_dimension_matches_forests", as_int(sets.size()),
                              as_int(dims_match), first_dim_bad));
  return report;
}

namespace {

// Terms of the unital coproduct that must vanish on Prim_m(i, j).
TensorElement low_degree_terms(const Element& x, std::size_t i, std::size_t j) {
  TensorElement out;
  for (const auto& [ab, c] : full_coproduct(x)) {
    const std::size_t left = ab.first.size(), right = ab.second.size();
    if ((left >= 1 && left < i) || (right >= 1 && right < j)) out.add_term(ab, c);
  }
  return out;
}

BasisIndex<WordPair> unital_tensor_basis(std::size_t m) {
  std::vector<WordPair> pairs;
  for (std::size_t k = 0; k <= m; ++k) {
    const auto lefts = enumerate_packed(k);
    const auto rights = enumerate_packed(m - k);
    for (const auto& u : lefts) {
      for (const auto& v : rights) pairs.emplace_back(u, v);
    }
  }
  return BasisIndex<WordPair>(std::move(pairs));
}

}  // namespace

std::size_t prim_ij_dimension(std::size_t m, std::size_t i, std::size_t j) {
  const auto domain = word_basis(m);
  const auto codomain = unital_tensor_basis(m);
  const auto matrix = matrix_of_map(domain, codomain, [&](const PackedWord& w) {
    return low_degree_terms(basis(w), i, j);
  });
  return matrix.cols() - rank(matrix);
}

Report verify_prim_ij(std::size_t n) {
  Report report;
  const auto sets = all_position_sets(n);
  std::size_t dims_match = 0, spans = 0;
  std::string first_dim_bad, first_span_bad;
  for (const auto& I : sets) {
    const std::size_t m = n - I.size();
    const std::size_t i = I.front();
    const std::size_t j = n + 1 - I.back();
    const std::size_t dim = prim_ij_dimension(m, i, j);
    const auto forests = enumerate_constrained_forests(n, I);
    if (dim == forests.size()) {
      ++dims_match;
    } else if (first_dim_bad.empty()) {
      first_dim_bad = "I = " + to_string(I) + ": dim " + std::to_string(dim) +
                      ", forests " + std::to_string(forests.size());
    }

    std::vector<Element> elements;
    bool inside = true;
    for (const auto& f : forests) {
      elements.push_back(p_forest(f));
      if (!low_degree_terms(elements.back(), i, j).is_zero()) inside = false;
    }
    const bool independent =
        rank(expansion_matrix(word_basis(m), elements)) == forests.size();
    if (inside && independent) {
      ++spans;
    } else if (first_span_bad.empty()) {
      first_span_bad = "I = " + to_string(I);
    }
  }
  report.push_back(make_check(n, "prim_ij_dimension_matches_forests", as_int(sets.size()),
                              as_int(dims_match), first_dim_bad));
  report.push_back(make_check(n, "prim_ij_spanned_by_p_basis", as_int(sets.size()),
                              as_int(spans), first_span_bad));
  return report;
}

HilbertData compute_hilbert_data(std::size_t max_n) {
  HilbertData data;
  data.a.assign(max_n + 1, 0);
  data.p.assign(max_n + 1, 0);
  data.t.assign(max_n + 1, 0);
  std::vector<std::future<std::pair<std::size_t, std::size_t>>> jobs;
  for (std::size_t n = 1; n <= max_n; ++n) {
    jobs.push_back(std::async(std::launch::async,
                              [n] { return std::pair{dim_prim(n), dim_tprim(n)}; }));
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    data.a[n] = as_int(enumerate_packed(n).size());
    auto [p, t] = jobs[n - 1].get();
    data.p[n] = as_int(p);
    data.t[n] = as_int(t);
  }
  return data;
}

namespace {

using Series = std::vector<mpz_class>;

Series from_counts(const std::vector<std::int64_t>& counts) {
  Series s(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) s[k] = static_cast<long>(counts[k]);
  return s;
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Constant term must be +-1.
Series inverse(const Series& a) {
  if (a.empty() || (a[0] != 1 && a[0] != -1)) {
    throw std::invalid_argument("series inverse needs constant term +-1");
  }
  Series out(a.size(), 0);
  out[0] = a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    mpz_class sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += a[k] * out[n - k];
    out[n] = -sum * a[0];
  }
  return out;
}

Series plus_one(Series s, int sign) {
  for (auto& c : s) c *= sign;
  s[0] += 1;
  return s;
}

void compare_series(std::string name, const Series& expected, const Series& actual,
                    Report& report) {
  for (std::size_t n = 1; n < expected.size(); ++n) {
    report.push_back(make_check(n, name, expected[n].get_si(), actual[n].get_si()));
  }
}

}  // namespace

Report hilbert_check(const HilbertData& data) {
  Report report;
  const Series A = from_counts(data.a);
  const Series P = from_counts(data.p);
  const Series T = from_counts(data.t);

  compare_series("hilbert_A_eq_P_over_1_minus_P", A, multiply(P, inverse(plus_one(P, -1))),
                 report);
  const Series one_plus_A = plus_one(A, 1);
  compare_series("hilbert_T_eq_A_over_1_plus_A_squared", T,
                 multiply(A, inverse(multiply(one_plus_A, one_plus_A))), report);
  compare_series("hilbert_P_eq_T_times_1_plus_A", P, multiply(T, one_plus_A), report);
  return report;
}

Report hilbert_check(std::size_t max_n) { return hilbert_check(compute_hilbert_data(max_n)); }

}  // namespace wqsym
