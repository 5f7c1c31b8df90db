#include "wqsym/io.hpp"

#include <limits>
#include <stdexcept>

namespace wqsym::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::uint64_t> positive_ints(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of integers");
  std::vector<std::uint64_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 1) {
      fail(std::string(what) + " entries must be positive integers");
    }
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

Json value_json(const CheckResult::Value& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

CheckResult::Value value_from_json(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return j.get<std::string>();
  fail("check values must be integers or strings");
}

}  // namespace

std::string coeff_string(const Rational& q) { return q.get_str(); }

Rational parse_coeff(std::string_view text) {
  const std::string s(text);
  if (s.empty()) fail("empty coefficient");
  Rational q;
  if (q.set_str(s, 10) != 0) fail("malformed coefficient '" + s + "'");
  if (q.get_den() == 0) fail("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const PackedWord& w) {
  return Json(std::vector<Letter>(w.letters().begin(), w.letters().end()));
}

Json to_json(const PositionSet& I) {
  return Json(std::vector<std::size_t>(I.positions().begin(), I.positions().end()));
}

Json to_json(const BiplaneTree& t) {
  return Json{{"I", to_json(t.label)}, {"left", to_json(t.left)}, {"right", to_json(t.right)}};
}

Json to_json(const Forest& f) {
  Json out = Json::array();
  for (const auto& t : f) out.push_back(to_json(t));
  return out;
}

Json to_json(const Element& x) {
  Json out = Json::array();
  for (const auto& [w, c] : x) {
    out.push_back({{"word", to_json(w)}, {"coeff", coeff_string(c)}});
  }
  return out;
}

Json to_json(const TensorElement& x) {
  Json out = Json::array();
  for (const auto& [ab, c] : x) {
    out.push_back({{"left", to_json(ab.first)},
                   {"right", to_json(ab.second)},
                   {"coeff", coeff_string(c)}});
  }
  return out;
}

Json to_json(const CheckResult& r) {
  return Json{{"degree", r.degree},
              {"check", r.check},
              {"expected", value_json(r.expected)},
              {"actual", value_json(r.actual)},
              {"pass", r.pass},
              {"detail", r.detail}};
}

PackedWord word_from_json(const Json& j) {
  std::vector<Letter> letters;
  for (auto v : positive_ints(j, "word")) {
    if (v > std::numeric_limits<Letter>::max()) fail("letter too large");
    letters.push_back(static_cast<Letter>(v));
  }
  if (!is_packed(letters)) fail("word is not packed");
  return PackedWord(std::move(letters), PackedWord::AssumePacked{});
}

PositionSet positions_from_json(const Json& j) {
  auto raw = positive_ints(j, "position set");
  return PositionSet(std::vector<std::size_t>(raw.begin(), raw.end()));
}

BiplaneTree tree_from_json(const Json& j) {
  BiplaneTree t;
  t.label = positions_from_json(field(j, "I"));
  if (t.label.empty()) fail("tree label must be nonempty");
  t.left = forest_from_json(field(j, "left"));
  t.right = forest_from_json(field(j, "right"));
  return t;
}

Forest forest_from_json(const Json& j) {
  if (!j.is_array()) fail("forest must be an array of trees");
  Forest f;
  for (const auto& t : j) f.push_back(tree_from_json(t));
  return f;
}

namespace {

Rational coeff_from_json(const Json& j) {
  const Json& c = field(j, "coeff");
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (!c.is_string()) fail("coeff must be a string");
  return parse_coeff(c.get<std::string>());
}

}  // namespace

Element element_from_json(const Json& j) {
  if (!j.is_array()) fail("element must be an array of terms");
  Element x;
  for (const auto& term : j) x.add_term(word_from_json(field(term, "word")), coeff_from_json(term));
  return x;
}

TensorElement tensor_from_json(const Json& j) {
  if (!j.is_array()) fail("tensor must be an array of terms");
  TensorElement x;
  for (const auto& term : j) {
    x.add_term({word_from_json(field(term, "left")), word_from_json(field(term, "right"))},
               coeff_from_json(term));
  }
  return x;
}

CheckResult check_from_json(const Json& j) {
  CheckResult r;
  const Json& degree = field(j, "degree");
  if (!degree.is_number_unsigned() && !(degree.is_number_integer() && degree.get<std::int64_t>() >= 0)) {
    fail("degree must be a nonnegative integer");
  }
  r.degree = degree.get<std::size_t>();
  const Json& check = field(j, "check");
  if (!check.is_string()) fail("check must be a string");
  r.check = check.get<std::string>();
  r.expected = value_from_json(field(j, "expected"));
  r.actual = value_from_json(field(j, "actual"));
  const Json& pass = field(j, "pass");
  if (!pass.is_boolean()) fail("pass must be a boolean");
  r.pass = pass.get<bool>();
  if (j.contains("detail")) {
    if (!j["detail"].is_string()) fail("detail must be a string");
    r.detail = j["detail"].get<std::string>();
  }
  return r;
}

}  // namespace wqsym::io
