#include "wqsym/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>

#include "wqsym/algebra.hpp"

namespace wqsym::verify {

const std::int64_t kWordCounts[8] = {1, 1, 3, 13, 75, 541, 4683, 47293};
const std::int64_t kPrimCounts[8] = {0, 1, 2, 8, 48, 368, 3376, 35824};
const std::int64_t kTPrimCounts[8] = {0, 1, 1, 4, 28, 240, 2384, 26832};

void Reporter::emit(const CheckResult& r) {
  std::lock_guard lock(mutex_);
  if (stop_.load()) return;
  if (!r.pass) {
    ++failures_;
    if (fail_fast_) stop_ = true;
  }
  if (sink_) sink_(r);
}

namespace {

// Counts instances of one check and keeps the first failure.
class Tally {
 public:
  Tally(std::size_t degree, std::string check) : degree_(degree), check_(std::move(check)) {}

  template <class Describe>
  void record(bool ok, const Describe& describe) {
    ++total_;
    if (ok) {
      ++passed_;
    } else if (detail_.empty()) {
      detail_ = describe();
    }
  }
  void record(bool ok, const PackedWord& w) {
    record(ok, [&] { return to_string(w); });
  }

  CheckResult result() const {
    CheckResult r;
    r.degree = degree_;
    r.check = check_;
    r.expected = static_cast<std::int64_t>(total_);
    r.actual = static_cast<std::int64_t>(passed_);
    r.pass = total_ == passed_;
    r.detail = detail_;
    return r;
  }

 private:
  std::size_t degree_;
  std::string check_;
  std::size_t total_ = 0, passed_ = 0;
  std::string detail_;
};

CheckResult equality(std::size_t degree, std::string check, std::int64_t expected,
                     std::int64_t actual) {
  CheckResult r;
  r.degree = degree;
  r.check = std::move(check);
  r.expected = expected;
  r.actual = actual;
  r.pass = expected == actual;
  return r;
}

std::int64_t count(std::size_t n) { return static_cast<std::int64_t>(n); }

// Ordered Bell numbers by a_n = sum_k C(n, k) a_{n-k}.
std::int64_t fubini(std::size_t n) {
  std::vector<std::int64_t> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::int64_t binom = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      binom = binom * static_cast<std::int64_t>(m - k + 1) / static_cast<std::int64_t>(k);
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

std::int64_t binomial(std::size_t n, std::size_t k) {
  std::int64_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b = b * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  }
  return b;
}

PackedWord random_word(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(n));
  std::vector<Letter> raw(n);
  for (auto& l : raw) l = letter(rng);
  return pack(raw);
}

std::string join(std::initializer_list<PackedWord> words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ", ";
    out += to_string(w);
  }
  return out;
}

// --- packed words --------------------------------------------------------

// Largest j such that w = pack(prefix_j) |> phi_{I-j}(pack(suffix_j)), by trying every cut.
std::size_t brute_force_cut(const PackedWord& w) {
  const auto [positions, rest] = phi_extract(w);
  const auto letters = rest.letters();
  std::size_t best = 0;
  for (std::size_t j = 0; j < positions.front() && j <= rest.size(); ++j) {
    const PackedWord u = pack(letters.first(j));
    const PackedWord v = pack(letters.subspan(j));
    const PositionSet I = positions.shifted_down(j);
    if (I.back() > v.size() + I.size()) continue;
    if (triangle_insert(u, phi_insert(I, v)) == w) best = j;
  }
  return best;
}

// Either v is empty and I = {1..p}, or 1 <= i_1 <= |v_1| and
// 1 <= |v| + p + 1 - i_p <= |v_d| for the irreducible factors v_1..v_d of v.
bool factorization_dichotomy(const MaxFactorization& m) {
  const auto& I = m.positions;
  if (m.right.empty()) return I.is_initial_segment();
  const auto factors = gd_factorize(m.right);
  const std::size_t end = m.right.size() + I.size() + 1;
  return I.front() >= 1 && I.front() <= factors.front().size() && I.back() < end &&
         end - I.back() <= factors.back().size();
}

void packed_word_suite_degree(std::size_t n, std::mt19937_64& rng, Reporter& out) {
  const auto words = enumerate_packed(n);
  out.emit(equality(n, "packed_word_count", fubini(n), count(words.size())));

  Tally sorted(n, "enumeration_sorted_and_packed");
  for (std::size_t k = 0; k < words.size(); ++k) {
    sorted.record(is_packed(words[k].letters()) && words[k].size() == n &&
                      (k == 0 || words[k - 1] < words[k]),
                  words[k]);
  }
  out.emit(sorted.result());

  Tally packing(n, "pack_idempotent");
  std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(2 * n + 1));
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw(n);
    for (auto& l : raw) l = letter(rng);
    const PackedWord p = pack(raw);
    bool ok = p.size() == n && pack(p.letters()) == p;
    for (std::size_t i = 0; ok && i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((raw[i] < raw[j]) != (p.letters()[i] < p.letters()[j])) ok = false;
      }
    }
    packing.record(ok, p);
  }
  out.emit(packing.result());

  Tally descents(n, "global_descents_brute_force");
  Tally reassembly(n, "gd_factorization_reassembles");
  Tally phi(n, "phi_extract_insert_round_trip");
  Tally factorization(n, "max_factorization_reassembles");
  Tally maximal(n, "max_factorization_maximal");
  Tally dichotomy(n, "max_factorization_dichotomy");
  for (const auto& w : words) {
    std::vector<std::size_t> cuts;
    const auto l = w.letters();
    for (std::size_t c = 1; c < n; ++c) {
      const Letter lo = *std::min_element(l.begin(), l.begin() + c);
      const Letter hi = *std::max_element(l.begin() + c, l.end());
      if (lo > hi) cuts.push_back(c);
    }
    descents.record(global_descents(w) == PositionSet(cuts), w);

    const auto factors = gd_factorize(w);
    PackedWord rebuilt;
    bool irreducible = true;
    for (const auto& f : factors) {
      rebuilt = over_concat(rebuilt, f);
      irreducible = irreducible && is_irreducible(f);
    }
    reassembly.record(rebuilt == w && irreducible, w);

    if (w.empty()) continue;
    const auto ex = phi_extract(w);
    phi.record(phi_insert(ex.positions, ex.rest) == w, w);

    if (!is_irreducible(w)) continue;
    const auto m = max_factorize(w);
    factorization.record(triangle_insert(m.left, phi_insert(m.positions, m.right)) == w, w);
    if (n <= 6) maximal.record(brute_force_cut(w) == m.left.size(), w);
    dichotomy.record(factorization_dichotomy(m), w);
  }

  // phi_extract(phi_insert(I, v)) = (I, v) from the other side.
  for (const auto& I : all_position_sets(n)) {
    for (const auto& v : enumerate_packed(n - I.size())) {
      phi.record(phi_extract(phi_insert(I, v)) == MaxExtraction{I, v},
                 [&] { return to_string(I) + " " + to_string(v); });
    }
  }
  out.emit(descents.result());
  out.emit(reassembly.result());
  out.emit(phi.result());
  out.emit(factorization.result());
  if (n <= 6) out.emit(maximal.result());
  out.emit(dichotomy.result());

  if (n <= 6) {
    Tally shuffles(n, "shifted_shuffle_count");
    for (std::size_t i = 0; i <= n; ++i) {
      for (const auto& u : enumerate_packed(i)) {
        for (const auto& v : enumerate_packed(n - i)) {
          const auto s = shifted_shuffle(u, v);
          bool ok = count(s.size()) == binomial(n, i);
          for (const auto& w : s) ok = ok && w.size() == n;
          shuffles.record(ok, [&] { return join({u, v}); });
        }
      }
    }
    out.emit(shuffles.result());
  }
}

// --- forests ---------------------------------------------------------------

void forest_suite_degree(std::size_t n, Reporter& out) {
  const auto words = enumerate_packed(n);
  Tally round_trip(n, "word_forest_word_round_trip");
  Tally packed(n, "word_forest_is_packed");
  Tally weights(n, "forest_weight_and_tree_count");
  std::vector<Forest> word_route;
  word_route.reserve(words.size());
  for (const auto& w : words) {
    Forest f = word_to_forest(w);
    const bool is_packed = is_packed_forest(f);
    packed.record(is_packed, w);
    round_trip.record(is_packed && forest_to_word(f) == w, w);
    weights.record(weight(f) == n && (is_irreducible(w) == (f.size() == 1)), w);
    word_route.push_back(std::move(f));
  }
  out.emit(round_trip.result());
  out.emit(packed.result());
  out.emit(weights.result());

  const auto direct = generate_forests_direct(n);
  const std::int64_t expected = n < 8 ? kWordCounts[n] : fubini(n);
  out.emit(equality(n, "direct_forest_count", expected, count(direct.size())));
  std::sort(word_route.begin(), word_route.end());
  out.emit(equality(n, "direct_generator_matches_word_route", 1, direct == word_route ? 1 : 0));

  Tally back(n, "forest_word_forest_round_trip");
  for (const auto& f : direct) {
    back.record(word_to_forest(forest_to_word(f)) == f,
                [&] { return render(f); });
  }
  out.emit(back.result());

  const auto trees = generate_trees_direct(n);
  out.emit(equality(n, "direct_tree_count", count(enumerate_trees(n).size()),
                    count(trees.size())));
  const auto tprim = std::count_if(trees.begin(), trees.end(),
                                   [](const BiplaneTree& t) { return t.left.empty(); });
  out.emit(equality(n, "direct_tprim_tree_count", count(enumerate_tprim_trees(n).size()),
                    tprim));
  if (n < 8) {
    out.emit(equality(n, "tree_count_table", kPrimCounts[n], count(trees.size())));
    out.emit(equality(n, "tprim_tree_count_table", kTPrimCounts[n], tprim));
  }

  // f -> Node(I, [], f) is a bijection onto the trees with empty left forest and label I.
  std::map<PositionSet, std::set<PackedWord>> by_label;
  for (const auto& w : words) {
    if (!is_irreducible(w)) continue;
    const auto m = max_factorize(w);
    if (m.left.empty()) by_label[m.positions].insert(w);
  }
  Tally bijection(n, "constrained_forest_bijection");
  for (const auto& I : all_position_sets(n)) {
    std::set<PackedWord> image;
    bool ok = true;
    for (const auto& f : enumerate_constrained_forests(n, I)) {
      const BiplaneTree t = node(I, {}, f);
      ok = ok && is_packed_tree(t) && image.insert(tree_to_word(t)).second;
    }
    bijection.record(ok && image == by_label[I], [&] { return to_string(I); });
  }
  out.emit(bijection.result());
}

// --- algebra ---------------------------------------------------------------

struct Triple {
  PackedWord u, v, w;
};

void check_dendriform(const Triple& t, Tally& e1, Tally& e2, Tally& e3) {
  const Element a = basis(t.u), b = basis(t.v), c = basis(t.w);
  const auto describe = [&] { return join({t.u, t.v, t.w}); };
  e1.record(left_product(left_product(a, b), c) == left_product(a, product(b, c)), describe);
  e2.record(left_product(right_product(a, b), c) == right_product(a, left_product(b, c)),
            describe);
  e3.record(right_product(product(a, b), c) == right_product(a, right_product(b, c)),
            describe);
}

struct CoalgebraTallies {
  Tally c1, c2, c3, reduced, full;
};

void check_coalgebra(const PackedWord& w, CoalgebraTallies& t) {
  const Element x = basis(w);
  const ElementMap L = coproduct_left, R = coproduct_right, D = reduced_coproduct;
  const TensorElement lx = L(x), rx = R(x), dx = D(x);
  t.c1.record(apply_on_left(lx, L) == apply_on_right(lx, D), w);
  t.c2.record(apply_on_left(lx, R) == apply_on_right(rx, L), w);
  t.c3.record(apply_on_left(rx, D) == apply_on_right(rx, R), w);
  t.reduced.record(apply_on_left(dx, D) == apply_on_right(dx, D), w);
  const TensorElement fx = full_coproduct(x);
  t.full.record(apply_on_left(fx, full_coproduct) == apply_on_right(fx, full_coproduct), w);
}

bool hopf_relation(const PackedWord& u, const PackedWord& v) {
  const Element a = basis(u), b = basis(v);
  return full_coproduct(product(a, b)) == tensor_product(full_coproduct(a), full_coproduct(b));
}

void emit_all(Reporter& out, std::initializer_list<const Tally*> tallies) {
  for (const Tally* t : tallies) out.emit(t->result());
}

void dendriform_checks(std::size_t exhaustive, std::size_t random_instances,
                       std::mt19937_64& rng, Reporter& out) {
  Tally e1(exhaustive, "dendriform_E1"), e2(exhaustive, "dendriform_E2"),
      e3(exhaustive, "dendriform_E3");
  for (std::size_t i = 1; i + 2 <= exhaustive; ++i) {
    for (std::size_t j = 1; i + j + 1 <= exhaustive; ++j) {
      for (std::size_t k = 1; i + j + k <= exhaustive; ++k) {
        for (const auto& u : enumerate_packed(i)) {
          for (const auto& v : enumerate_packed(j)) {
            for (const auto& w : enumerate_packed(k)) check_dendriform({u, v, w}, e1, e2, e3);
          }
        }
      }
    }
    if (out.stopped()) return;
  }
  emit_all(out, {&e1, &e2, &e3});

  const std::size_t big = exhaustive + 1;
  Tally r1(big, "dendriform_E1_random"), r2(big, "dendriform_E2_random"),
      r3(big, "dendriform_E3_random");
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (std::size_t trial = 0; trial < random_instances; ++trial) {
    std::size_t i, j, k;
    do {
      i = size(rng);
      j = size(rng);
      k = size(rng);
    } while (i + j + k < big || i + j + k > 9);
    check_dendriform({random_word(rng, i), random_word(rng, j), random_word(rng, k)}, r1, r2, r3);
  }
  emit_all(out, {&r1, &r2, &r3});
}

void coalgebra_checks(std::size_t exhaustive, std::size_t random_instances,
                      std::mt19937_64& rng, Reporter& out) {
  for (std::size_t n = 1; n <= exhaustive && !out.stopped(); ++n) {
    CoalgebraTallies t{{n, "codendriform_left_left"},
                       {n, "codendriform_left_right"},
                       {n, "codendriform_right_right"},
                       {n, "coassociative_reduced"},
                       {n, "coassociative_full"}};
    for (const auto& w : enumerate_packed(n)) check_coalgebra(w, t);
    emit_all(out, {&t.c1, &t.c2, &t.c3, &t.reduced, &t.full});
  }
  const std::size_t big = exhaustive + 1;
  CoalgebraTallies t{{big, "codendriform_left_left_random"},
                     {big, "codendriform_left_right_random"},
                     {big, "codendriform_right_right_random"},
                     {big, "coassociative_reduced_random"},
                     {big, "coassociative_full_random"}};
  std::uniform_int_distribution<std::size_t> size(big, big + 2);
  for (std::size_t trial = 0; trial < random_instances; ++trial) {
    check_coalgebra(random_word(rng, size(rng)), t);
  }
  emit_all(out, {&t.c1, &t.c2, &t.c3, &t.reduced, &t.full});
}

void hopf_checks(std::size_t exhaustive, std::size_t random_instances, std::mt19937_64& rng,
                 Reporter& out) {
  for (std::size_t n = 0; n <= exhaustive && !out.stopped(); ++n) {
    Tally hopf(n, "hopf_relation");
    Tally shuffle(n, "product_term_count");
    for (std::size_t i = 0; i <= n; ++i) {
      for (const auto& u : enumerate_packed(i)) {
        for (const auto& v : enumerate_packed(n - i)) {
          const auto describe = [&] { return join({u, v}); };
          hopf.record(hopf_relation(u, v), describe);
          Rational total = 0;
          for (const auto& [w, c] : product(basis(u), basis(v))) total += c;
          shuffle.record(total == binomial(n, i), describe);
        }
      }
    }
    emit_all(out, {&hopf, &shuffle});
  }
  const std::size_t big = exhaustive + 1;
  Tally hopf(big, "hopf_relation_random");
  std::uniform_int_distribution<std::size_t> size(1, big);
  for (std::size_t trial = 0; trial < random_instances; ++trial) {
    std::size_t i, j;
    do {
      i = size(rng);
      j = size(rng);
    } while (i + j < big || i + j > big + 1);
    const PackedWord u = random_word(rng, i), v = random_word(rng, j);
    hopf.record(hopf_relation(u, v), [&] { return join({u, v}); });
  }
  out.emit(hopf.result());
}

void projector_checks(std::size_t max_n, std::mt19937_64& rng, Reporter& out) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 5) && !out.stopped(); ++n) {
    Element x;
    for (const auto& w : enumerate_packed(n)) {
      int c = 0;
      while (c == 0) c = coeff(rng);
      x.add_term(w, c);
    }
    const auto sets = all_position_sets(n);
    Tally orthogonal(n, "tau_orthogonal_idempotents");
    Element sum;
    for (const auto& I : sets) {
      const Element tx = tau(I, x);
      sum += tx;
      for (const auto& J : sets) {
        const Element expected = I == J ? tx : Element{};
        orthogonal.record(tau(I, tau(J, x)) == expected,
                          [&] { return to_string(I) + " " + to_string(J); });
      }
    }
    out.emit(orthogonal.result());
    out.emit(equality(n, "tau_sum_is_identity", 1, sum == x ? 1 : 0));
  }

  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 6) && !out.stopped(); ++n) {
    Tally image(n, "phi_image_matches_max_positions");
    Tally injective(n, "phi_injective");
    for (const auto& I : all_position_sets(n)) {
      const auto describe = [&] { return to_string(I); };
      const auto domain = enumerate_packed(n - I.size());
      std::set<PackedWord> words;
      bool inside = true;
      for (const auto& w : domain) {
        const Element y = cap_phi(I, basis(w));
        inside = inside && y.size() == 1 && is_homogeneous(y, n) && tau(I, y) == y;
        if (y.size() == 1) words.insert(y.begin()->first);
      }
      injective.record(words.size() == domain.size(), describe);
      const auto target = enumerate_packed_with_max_positions(n, I);
      image.record(inside && words == std::set<PackedWord>(target.begin(), target.end()),
                   describe);
    }
    emit_all(out, {&image, &injective});
  }

  Tally vanishing(max_n, "phi_vanishes_out_of_range");
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_n, 5); ++n) {
    for (const auto& I : all_position_sets(n)) {
      for (std::size_t m = 0; m + I.size() < I.back(); ++m) {
        for (const auto& w : enumerate_packed(m)) {
          vanishing.record(cap_phi(I, basis(w)).is_zero(),
                           [&] { return to_string(I) + " " + to_string(w); });
        }
      }
    }
  }
  out.emit(vanishing.result());
}

}  // namespace

void packed_word_suite(std::size_t max_n, Reporter& out) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= max_n && !out.stopped(); ++n) packed_word_suite_degree(n, rng, out);
}

void forest_suite(std::size_t max_n, Reporter& out) {
  for (std::size_t n = 1; n <= max_n && !out.stopped(); ++n) forest_suite_degree(n, out);
}

void axiom_suite(std::size_t max_n, std::size_t random_instances, std::uint64_t seed,
                 Reporter& out) {
  std::mt19937_64 rng(seed);
  const std::size_t small = std::min<std::size_t>(max_n + 1, 6);
  dendriform_checks(small, random_instances, rng, out);
  if (out.stopped()) return;
  coalgebra_checks(small, random_instances, rng, out);
  if (out.stopped()) return;
  hopf_checks(std::min<std::size_t>(max_n, 5), random_instances, rng, out);
}

void projector_suite(std::size_t max_n, std::uint64_t seed, Reporter& out) {
  std::mt19937_64 rng(seed);
  projector_checks(max_n, rng, out);
}

void algebra_suite(std::size_t max_n, std::size_t random_instances, std::uint64_t seed,
                   Reporter& out) {
  axiom_suite(max_n, random_instances, seed, out);
  if (!out.stopped()) projector_suite(max_n, seed, out);
}

void primitives_suite(std::size_t max_n, std::size_t rank_max_n, Reporter& out) {
  const HilbertData data = compute_hilbert_data(max_n);
  for (std::size_t n = 1; n <= max_n && !out.stopped(); ++n) {
    out.emit(equality(n, "word_count_table", n < 8 ? kWordCounts[n] : fubini(n), data.a[n]));
    if (n < 8) {
      out.emit(equality(n, "prim_dimension_table", kPrimCounts[n], data.p[n]));
      out.emit(equality(n, "tprim_dimension_table", kTPrimCounts[n], data.t[n]));
    }
    out.emit(equality(n, "prim_dimension_equals_trees", count(enumerate_trees(n).size()),
                      data.p[n]));
    out.emit(equality(n, "tprim_dimension_equals_tprim_trees",
                      count(enumerate_tprim_trees(n).size()), data.t[n]));
    out.emit(verify_p_basis(n, n <= rank_max_n));
    out.emit(verify_tau_stability(n));
    out.emit(verify_prim_ij(n));
  }
  if (!out.stopped()) out.emit(hilbert_check(data));
}

bool run_all(const Options& options, const Sink& sink) {
  Reporter out(sink, options.fail_fast);
  const std::size_t n = options.max_degree;
  const std::size_t heavy = options.extended ? n : std::min<std::size_t>(n, 5);
  std::vector<std::future<void>> jobs;
  jobs.push_back(std::async(std::launch::async, [&] { packed_word_suite(n, out); }));
  jobs.push_back(std::async(std::launch::async, [&] { forest_suite(n, out); }));
  jobs.push_back(std::async(std::launch::async, [&] {
    algebra_suite(n, options.random_instances, options.seed, out);
  }));
  jobs.push_back(std::async(std::launch::async, [&] { primitives_suite(heavy, heavy, out); }));
  for (auto& j : jobs) j.get();
  return out.all_passed();
}

}  // namespace wqsym::verify
