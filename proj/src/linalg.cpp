#include "wqsym/linalg.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <set>

namespace wqsym {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, 1);
  return m;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

void RationalMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(r) + ", " +
                            std::to_string(c) + ") out of range");
  }
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check(r, c);
  if (value == 0) {
    rows_[r].erase(c);
  } else {
    rows_[r][c] = value;
  }
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  set(r, c, at(r, c) + value);
}

RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("stack: column counts differ");
  }
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) {
    for (const auto& [c, v] : top.row(r)) out.set(r, c, v);
  }
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    for (const auto& [c, v] : bottom.row(r)) out.set(top.rows() + r, c, v);
  }
  return out;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const RationalMatrix::Row& row) {
  mpz_class denominators = 1;
  for (const auto& [c, v] : row) {
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(),
            v.get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    out.emplace_back(c, v.get_num() * (denominators / v.get_den()));
  }
  make_primitive(out);
  return out;
}

const mpz_class* entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Fraction-free sparse elimination with Markowitz pivoting. Rows are kept
// primitive (content divided out) after every update.
class Eliminator {
 public:
  struct Pivot {
    std::size_t col;
    IntRow row;
  };

  explicit Eliminator(const RationalMatrix& m)
      : rows_(m.rows()), col_rows_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows_[r] = integer_row(m.row(r));
      if (rows_[r].empty()) continue;
      active_.insert(r);
      for (const auto& [c, v] : rows_[r]) col_rows_[c].insert(r);
    }
  }

  void run() {
    while (!active_.empty()) {
      auto [pr, pc] = choose_pivot();
      eliminate(pr, pc);
    }
  }

  const std::vector<Pivot>& pivots() const { return pivots_; }

 private:
  std::pair<std::size_t, std::size_t> choose_pivot() const {
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (std::size_t r : active_) {
      const std::size_t row_fill = rows_[r].size() - 1;
      for (const auto& [c, v] : rows_[r]) {
        const std::size_t cost = row_fill * (col_rows_[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best = {r, c};
          if (cost == 0) return best;
        }
      }
    }
    return best;
  }

  void eliminate(std::size_t pr, std::size_t pc) {
    IntRow pivot_row = std::move(rows_[pr]);
    rows_[pr].clear();
    active_.erase(pr);
    for (const auto& [c, v] : pivot_row) col_rows_[c].erase(pr);

    const mpz_class a = *entry(pivot_row, pc);
    const std::vector<std::size_t> targets(col_rows_[pc].begin(), col_rows_[pc].end());
    mpz_class g, sa, sb;
    for (std::size_t r : targets) {
      IntRow& row = rows_[r];
      const mpz_class b = *entry(row, pc);
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      sa = a / g;
      sb = b / g;

      // row <- sa * row - sb * pivot_row
      IntRow merged;
      merged.reserve(row.size() + pivot_row.size());
      auto it = row.begin();
      auto jt = pivot_row.begin();
      while (it != row.end() || jt != pivot_row.end()) {
        if (jt == pivot_row.end() || (it != row.end() && it->first < jt->first)) {
          merged.emplace_back(it->first, sa * it->second);
          ++it;
        } else if (it == row.end() || jt->first < it->first) {
          merged.emplace_back(jt->first, -sb * jt->second);
          ++jt;
        } else {
          mpz_class v = sa * it->second - sb * jt->second;
          if (v != 0) merged.emplace_back(it->first, std::move(v));
          ++it;
          ++jt;
        }
      }
      make_primitive(merged);

      for (const auto& [c, v] : row) col_rows_[c].erase(r);
      row = std::move(merged);
      if (row.empty()) {
        active_.erase(r);
      } else {
        for (const auto& [c, v] : row) col_rows_[c].insert(r);
      }
    }
    pivots_.push_back({pc, std::move(pivot_row)});
  }

  std::vector<IntRow> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
  std::set<std::size_t> active_;
  std::vector<Pivot> pivots_;
};

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  Eliminator e(m);
  e.run();
  return e.pivots().size();
}

std::vector<SparseVector> kernel_basis(const RationalMatrix& m) {
  Eliminator e(m);
  e.run();
  const auto& pivots = e.pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& p : pivots) is_pivot[p.col] = true;

  std::vector<SparseVector> basis;
  std::vector<Rational> x(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    for (auto& v : x) v = 0;
    x[free] = 1;
    // Pivot row k only involves free columns and pivots chosen after k.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational sum = 0;
      mpz_class lead;
      for (const auto& [c, v] : it->row) {
        if (c == it->col) {
          lead = v;
        } else if (x[c] != 0) {
          sum += Rational(v) * x[c];
        }
      }
      x[it->col] = -sum / Rational(lead);
    }
    SparseVector v;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (x[c] != 0) v.emplace_back(c, x[c]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseVector multiply(const RationalMatrix& m, const SparseVector& v) {
  std::vector<Rational> dense(m.cols());
  for (const auto& [j, coeff] : v) {
    if (j >= m.cols()) throw std::out_of_range("vector index exceeds matrix columns");
    dense[j] = coeff;
  }
  SparseVector out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum = 0;
    for (const auto& [c, value] : m.row(r)) {
      if (dense[c] != 0) sum += value * dense[c];
    }
    if (sum != 0) out.emplace_back(r, sum);
  }
  return out;
}

void write_coordinates(std::ostream& os, const RationalMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      os << r << ' ' << c << ' ' << v.get_num() << '/' << v.get_den() << '\n';
    }
  }
}

RationalMatrix read_coordinates(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw std::invalid_argument("missing matrix header");
  RationalMatrix m(rows, cols);
  std::size_t r, c;
  std::string value;
  while (is >> r >> c >> value) {
    Rational q;
    if (q.set_str(value, 10) != 0) {
      throw std::invalid_argument("malformed matrix entry '" + value + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    m.set(r, c, q);
  }
  if (!is.eof()) throw std::invalid_argument("malformed matrix entry");
  return m;
}

}  // namespace wqsym
