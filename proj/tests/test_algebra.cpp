#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "wqsym/algebra.hpp"

using namespace wqsym;

namespace {

PackedWord W(const char* text) { return parse_word(text); }
Element R(const char* text) { return basis(W(text)); }

Element sum(std::initializer_list<const char*> plus, std::initializer_list<const char*> minus = {}) {
  Element x;
  for (const char* t : plus) x += R(t);
  for (const char* t : minus) x -= R(t);
  return x;
}

TensorElement pair(const char* a, const char* b) {
  TensorElement t;
  t.add_term({W(a), W(b)}, 1);
  return t;
}

// Half products straight from the definition: enumerate interleavings by
// bitmask and sort them by where the last letter came from.
std::pair<Element, Element> naive_half_products(const PackedWord& u, const PackedWord& v) {
  const std::size_t n = u.size() + v.size();
  Element left, right;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != u.size()) continue;
    std::vector<Letter> w;
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) {
        w.push_back(u.letters()[i++]);
      } else {
        w.push_back(v.letters()[j++] + u.max());
      }
    }
    const bool last_from_u = mask >> (n - 1) & 1;
    (last_from_u ? left : right).add_term(PackedWord(w), 1);
  }
  return {left, right};
}

// Cuts straight from the definition using letter sets.
std::pair<TensorElement, TensorElement> naive_half_coproducts(const PackedWord& w) {
  TensorElement left, right;
  const auto l = w.letters();
  for (std::size_t c = 1; c < w.size(); ++c) {
    const std::set<Letter> a(l.begin(), l.begin() + c), b(l.begin() + c, l.end());
    bool disjoint = true;
    for (Letter x : a) disjoint = disjoint && !b.count(x);
    if (!disjoint) continue;
    const WordPair key{pack(l.first(c)), pack(l.subspan(c))};
    (a.count(w.max()) ? left : right).add_term(key, 1);
  }
  return {left, right};
}

}  // namespace

TEST_CASE("linear combinations") {
  Element x = R("12") + R("21");
  x -= R("12");
  CHECK(x == R("21"));
  CHECK(x.size() == 1);
  x -= R("21");
  CHECK(x.is_zero());
  CHECK((Rational(1, 2) * R("1")).coefficient(W("1")) == Rational(1, 2));
  CHECK((-R("1")).coefficient(W("1")) == -1);
  CHECK(unit().coefficient(PackedWord{}) == 1);
}

TEST_CASE("half products") {
  CHECK(left_product(R("211"), R("12")) ==
        sum({"21341", "23141", "23411", "32141", "32411", "34211"}));
  CHECK(right_product(R("211"), R("12")) == sum({"21134", "21314", "23114", "32114"}));
  CHECK(left_product(R("1"), R("1")) == R("21"));
  CHECK(right_product(R("1"), R("1")) == R("12"));
  CHECK_THROWS_AS(left_product(unit(), R("1")), std::invalid_argument);
  CHECK_THROWS_AS(right_product(R("1"), R("1") + unit()), std::invalid_argument);
}

TEST_CASE("half products agree with the definition") {
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      for (const auto& u : enumerate_packed(i)) {
        for (const auto& v : enumerate_packed(j)) {
          const auto [l, r] = naive_half_products(u, v);
          REQUIRE(left_product(basis(u), basis(v)) == l);
          REQUIRE(right_product(basis(u), basis(v)) == r);
        }
      }
    }
  }
}

TEST_CASE("product") {
  CHECK(product(R("1"), R("1")) == sum({"12", "21"}));
  CHECK(product(unit(), R("213")) == R("213"));
  CHECK(product(R("213"), unit()) == R("213"));
  CHECK(product(unit(), unit()) == unit());
  Rational total = 0;
  for (const auto& [w, c] : product(R("12"), R("211"))) total += c;
  CHECK(total == 10);
  CHECK(product(R("1") + unit(), R("1")) == sum({"12", "21", "1"}));
}

TEST_CASE("half coproducts") {
  TensorElement expected_left = pair("2123", "112");
  expected_left += pair("212433", "1");
  CHECK(coproduct_left(R("2125334")) == expected_left);
  CHECK(coproduct_right(R("2125334")) == pair("212", "3112"));
  CHECK(coproduct_left(R("11")).is_zero());
  CHECK(coproduct_right(R("11")).is_zero());
  CHECK(reduced_coproduct(R("1")).is_zero());
  CHECK_THROWS_AS(coproduct_left(unit()), std::invalid_argument);

  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : enumerate_packed(n)) {
      const auto [l, r] = naive_half_coproducts(w);
      REQUIRE(coproduct_left(basis(w)) == l);
      REQUIRE(coproduct_right(basis(w)) == r);
    }
  }
}

TEST_CASE("full coproduct") {
  const PackedWord e;
  TensorElement one;
  one.add_term({e, e}, 1);
  CHECK(full_coproduct(unit()) == one);

  TensorElement d1;
  d1.add_term({e, W("1")}, 1);
  d1.add_term({W("1"), e}, 1);
  CHECK(full_coproduct(R("1")) == d1);

  TensorElement d12;
  d12.add_term({e, W("12")}, 1);
  d12.add_term({W("12"), e}, 1);
  d12.add_term({W("1"), W("1")}, 1);
  CHECK(full_coproduct(R("12")) == d12);
}

TEST_CASE("Hopf relation on small words") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (const auto& u : enumerate_packed(i)) {
        for (const auto& v : enumerate_packed(n - i)) {
          const Element a = basis(u), b = basis(v);
          REQUIRE(full_coproduct(product(a, b)) ==
                  tensor_product(full_coproduct(a), full_coproduct(b)));
        }
      }
    }
  }
}

TEST_CASE("dendriform axioms on small words") {
  for (const auto& u : enumerate_packed(2)) {
    for (const auto& v : enumerate_packed(1)) {
      for (const auto& w : enumerate_packed(2)) {
        const Element a = basis(u), b = basis(v), c = basis(w);
        CHECK(left_product(left_product(a, b), c) == left_product(a, product(b, c)));
        CHECK(left_product(right_product(a, b), c) == right_product(a, left_product(b, c)));
        CHECK(right_product(product(a, b), c) == right_product(a, right_product(b, c)));
      }
    }
  }
}

TEST_CASE("codendriform axioms on small words") {
  const ElementMap L = coproduct_left, Rt = coproduct_right, D = reduced_coproduct;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : enumerate_packed(n)) {
      const Element x = basis(w);
      REQUIRE(apply_on_left(L(x), L) == apply_on_right(L(x), D));
      REQUIRE(apply_on_left(L(x), Rt) == apply_on_right(Rt(x), L));
      REQUIRE(apply_on_left(Rt(x), D) == apply_on_right(Rt(x), Rt));
    }
  }
}

TEST_CASE("Phi") {
  CHECK(cap_phi({1, 3}, R("1")) == R("212"));
  CHECK(cap_phi({5}, R("1")).is_zero());
  CHECK(cap_phi({2, 4, 7}, R("1232")) == R("1424324"));
  CHECK(cap_phi({1, 2}, unit()) == R("11"));
  CHECK(cap_phi({2}, unit()).is_zero());
  CHECK(cap_phi({1}, R("1") - R("11")) == R("21") - R("211"));
  CHECK_THROWS_AS(cap_phi(PositionSet{}, R("1")), std::invalid_argument);
}

TEST_CASE("tau") {
  CHECK(tau({2}, R("12")) == R("12"));
  CHECK(tau({1}, R("12")).is_zero());
  CHECK(tau({1, 3}, R("212") + R("122")) == R("212"));
}

TEST_CASE("graded projectors") {
  CHECK(graded_component(2, R("1") + R("12")) == R("12"));
  CHECK(graded_below(2, R("1") + R("12")) == R("1"));
  CHECK(graded_component(3, R("12")).is_zero());
  CHECK(graded_component(0, unit() + R("1")) == unit());
  CHECK(is_homogeneous(R("12") - R("21"), 2));
  CHECK_FALSE(is_homogeneous(R("1") + R("12"), 2));
}

TEST_CASE("brace bracket") {
  const std::vector<Element> two{R("1"), R("1")};
  CHECK(brace_bracket(two) == R("12") - R("21"));
  const std::vector<Element> one{R("213")};
  CHECK(brace_bracket(one) == R("213"));
  const std::vector<Element> mixed{R("1"), R("11")};
  CHECK(brace_bracket(mixed) == sum({"122", "212"}, {"121", "211"}));
  CHECK_THROWS_AS(brace_bracket(std::vector<Element>{}), std::invalid_argument);

  // n = 3 against the formula written out by hand
  const Element a = R("1"), b = R("12") - R("21"), p = R("11");
  const std::vector<Element> three{a, b, p};
  const Element expected = left_product(p, right_product(a, b)) -
                           left_product(right_product(a, p), b) +
                           right_product(left_product(a, b), p);
  CHECK(brace_bracket(three) == expected);

  // brackets of primitives are primitive
  CHECK(reduced_coproduct(brace_bracket(three)).is_zero());
}
