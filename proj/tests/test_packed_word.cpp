#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "wqsym/packed_word.hpp"

using namespace wqsym;

namespace {

PackedWord W(const char* text) { return parse_word(text); }

std::vector<PackedWord> words(std::initializer_list<const char*> texts) {
  std::vector<PackedWord> out;
  for (const char* t : texts) out.push_back(W(t));
  return out;
}

// Ordered Bell numbers via a_n = sum_k C(n,k) a_{n-k}.
std::vector<std::size_t> fubini(std::size_t max_n) {
  std::vector<std::size_t> a(max_n + 1, 0);
  a[0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      c = c * (n - k + 1) / k;
      a[n] += c * a[n - k];
    }
  }
  return a;
}

}  // namespace

TEST_CASE("packed word construction") {
  CHECK(PackedWord{}.empty());
  CHECK(PackedWord{}.max() == 0);
  CHECK(W("3142132").max() == 4);
  CHECK(W("3142132").at(1) == 3);
  CHECK_THROWS_AS(PackedWord({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PackedWord({0, 1}), std::invalid_argument);
  CHECK(is_packed(std::vector<Letter>{}));
  CHECK_FALSE(is_packed(std::vector<Letter>{2, 2}));
}

TEST_CASE("position sets") {
  CHECK_THROWS_AS(PositionSet({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PositionSet({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PositionSet({0, 1}), std::invalid_argument);
  CHECK(PositionSet::initial_segment(3) == PositionSet{1, 2, 3});
  CHECK(PositionSet{1, 2}.is_initial_segment());
  CHECK_FALSE(PositionSet{2}.is_initial_segment());
  CHECK(PositionSet{2, 4}.shifted_up(1) == PositionSet{3, 5});
  CHECK(PositionSet{2, 4}.shifted_down(1) == PositionSet{1, 3});
  CHECK_THROWS_AS((PositionSet{1, 4}.shifted_down(1)), std::invalid_argument);
  CHECK(to_string(PositionSet{2, 4, 7}) == "{2,4,7}");
}

TEST_CASE("pack") {
  const std::vector<Letter> raw{4, 1, 5, 2, 1, 4, 2};
  CHECK(pack(raw) == W("3142132"));
  CHECK(pack(std::vector<Letter>{}) == PackedWord{});
  CHECK(pack(W("111").letters()) == W("111"));
  CHECK(pack(std::vector<Letter>{7, 100, 7}) == W("121"));
}

TEST_CASE("enumerate packed words") {
  CHECK(enumerate_packed(3) ==
        words({"111", "112", "121", "122", "123", "132", "211", "212", "213", "221", "231",
               "312", "321"}));
  CHECK(enumerate_packed(0) == std::vector<PackedWord>{PackedWord{}});
  CHECK(enumerate_packed(5).size() == 541);

  const auto a = fubini(7);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto list = enumerate_packed(n);
    CHECK(list.size() == a[n]);
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
  }
  CHECK(a[6] == 4683);
  CHECK(a[7] == 47293);
}

TEST_CASE("global descents") {
  CHECK(global_descents(W("54664312")) == PositionSet{5, 6});
  CHECK(global_descents(W("12")).empty());
  CHECK(global_descents(W("21")) == PositionSet{1});
  CHECK(global_descents(PackedWord{}).empty());
  CHECK(is_irreducible(W("21331")));
  CHECK_FALSE(is_irreducible(W("21")));
  CHECK_FALSE(is_irreducible(PackedWord{}));
}

TEST_CASE("global descent factorization") {
  CHECK(gd_factorize(W("54664312")) == words({"21331", "1", "12"}));
  CHECK(gd_factorize(W("321")) == words({"1", "1", "1"}));
  CHECK(gd_factorize(W("1231")) == words({"1231"}));
  CHECK(gd_factorize(PackedWord{}).empty());
}

TEST_CASE("shifted concatenations") {
  CHECK(over_concat(W("1121"), W("3112")) == W("44543112"));
  CHECK(under_concat(W("1121"), W("3112")) == W("11215334"));
  CHECK(over_concat(PackedWord{}, W("213")) == W("213"));
  CHECK(under_concat(W("213"), PackedWord{}) == W("213"));
  CHECK(over_concat(W("213"), PackedWord{}) == W("213"));
  CHECK(under_concat(PackedWord{}, W("213")) == W("213"));
}

TEST_CASE("shifted shuffle") {
  auto s = shifted_shuffle(W("12"), W("11"));
  std::sort(s.begin(), s.end());
  CHECK(s == words({"1233", "1323", "1332", "3123", "3132", "3312"}));
  CHECK(shifted_shuffle(W("12"), PackedWord{}) == words({"12"}));
  CHECK(shifted_shuffle(W("12"), W("21")).size() == 6);
  // multiset: repeated letters give repeated results
  CHECK(shifted_shuffle(W("1"), W("1")) == words({"12", "21"}));
}

TEST_CASE("phi insertion and extraction") {
  CHECK(phi_insert({2, 4, 7}, W("1232")) == W("1424324"));
  CHECK(phi_insert({1, 2, 3}, PackedWord{}) == W("111"));
  CHECK(phi_insert({1}, W("1")) == W("21"));
  CHECK_THROWS_AS(phi_insert({5}, W("1")), std::invalid_argument);
  CHECK_THROWS_AS(phi_insert(PositionSet{}, W("1")), std::invalid_argument);

  CHECK(phi_extract(W("1424324")) == MaxExtraction{{2, 4, 7}, W("1232")});
  CHECK(phi_extract(W("111")) == MaxExtraction{{1, 2, 3}, PackedWord{}});
  CHECK(phi_extract(W("21")) == MaxExtraction{{1}, W("1")});
  CHECK_THROWS_AS(phi_extract(PackedWord{}), std::invalid_argument);

  CHECK(max_positions(W("212")) == PositionSet{1, 3});
  CHECK(max_positions(PackedWord{}).empty());
}

TEST_CASE("triangle insertion") {
  CHECK(triangle_insert(W("2123"), W("322312")) == W("4345622612"));
  CHECK(triangle_insert(PackedWord{}, W("3112")) == W("3112"));
  CHECK(triangle_insert(W("1"), W("11")) == W("122"));
  CHECK_THROWS_AS(triangle_insert(W("1"), PackedWord{}), std::invalid_argument);
}

TEST_CASE("max factorization") {
  CHECK(max_factorize(W("21331")) == MaxFactorization{W("1"), {2, 3}, W("11")});
  CHECK(max_factorize(W("1231")) == MaxFactorization{PackedWord{}, {3}, W("121")});
  CHECK(max_factorize(W("543462161")) == MaxFactorization{W("3212"), {1, 4}, W("211")});
  CHECK(max_factorize(W("1233")) == MaxFactorization{W("12"), {1, 2}, PackedWord{}});
  CHECK(max_factorize(W("2131")) == MaxFactorization{W("1"), {2}, W("11")});
  CHECK_THROWS_AS(max_factorize(W("21")), std::invalid_argument);
  CHECK_THROWS_AS(max_factorize(PackedWord{}), std::invalid_argument);

  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : enumerate_packed(n)) {
      if (!is_irreducible(w)) continue;
      const auto m = max_factorize(w);
      REQUIRE(triangle_insert(m.left, phi_insert(m.positions, m.right)) == w);
    }
  }
}

TEST_CASE("words with prescribed maximum positions") {
  CHECK(enumerate_packed_with_max_positions(3, {1, 3}) == words({"212"}));
  CHECK(enumerate_packed_with_max_positions(2, {1, 2}) == words({"11"}));
  CHECK(enumerate_packed_with_max_positions(4, {4}).size() == 13);
  CHECK_THROWS_AS(enumerate_packed_with_max_positions(3, {4}), std::invalid_argument);
}

TEST_CASE("text format") {
  CHECK(to_string(W("3142132")) == "3142132");
  CHECK(to_string(PackedWord{}) == "ε");
  const PackedWord big = pack(std::vector<Letter>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(to_string(big) == "1,2,3,4,5,6,7,8,9,10");
  CHECK(parse_word("1,2,3,4,5,6,7,8,9,10") == big);
  CHECK(parse_word("") == PackedWord{});
  CHECK(parse_word("ε") == PackedWord{});
  CHECK(parse_word("2,1") == W("21"));
  CHECK_THROWS_AS(parse_word("99999999999,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("13"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_letters("0"), std::invalid_argument);
}
