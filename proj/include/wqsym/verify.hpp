#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>

#include "wqsym/primitives.hpp"

namespace wqsym::verify {

/// Known values of a_n, p_n, t_n for n = 0..7 (entry 0 is unused).
extern const std::int64_t kWordCounts[8];
extern const std::int64_t kPrimCounts[8];
extern const std::int64_t kTPrimCounts[8];

struct Options {
  std::size_t max_degree = 5;
  /// Lifts the cap of 5 on the kernel-based suites.
  bool extended = false;
  bool fail_fast = false;
  std::size_t random_instances = 100;
  std::uint64_t seed = 20140101;
};

using Sink = std::function<void(const CheckResult&)>;

/// Serializes results from concurrent suites into a single sink.
class Reporter {
 public:
  Reporter(Sink sink, bool fail_fast) : sink_(std::move(sink)), fail_fast_(fail_fast) {}

  void emit(const CheckResult& r);
  void emit(const Report& report) {
    for (const auto& r : report) emit(r);
  }
  /// True once a failure has been seen under fail-fast.
  bool stopped() const { return stop_.load(); }
  bool all_passed() const { return failures_.load() == 0; }
  std::size_t failures() const { return failures_.load(); }

 private:
  Sink sink_;
  bool fail_fast_;
  std::mutex mutex_;
  std::atomic<bool> stop_{false};
  std::atomic<std::size_t> failures_{0};
};

/// pack, global descents, phi insertion/extraction, max factorization
/// (maximality by brute force over all cuts), shuffle counts, #PW_n.
void packed_word_suite(std::size_t max_n, Reporter& out);

/// Word/forest round trips, packedness, weights, the direct generator
/// against the word route, and the constrained-forest bijection.
void forest_suite(std::size_t max_n, Reporter& out);

/// Dendriform and codendriform axioms, coassociativity and the Hopf relation.
/// Small sizes exhaustively, larger ones on random instances.
void axiom_suite(std::size_t max_n, std::size_t random_instances, std::uint64_t seed,
                 Reporter& out);

/// tau_I as orthogonal idempotents summing to the identity, and the image of Phi_I.
void projector_suite(std::size_t max_n, std::uint64_t seed, Reporter& out);

/// axiom_suite followed by projector_suite.
void algebra_suite(std::size_t max_n, std::size_t random_instances, std::uint64_t seed,
                   Reporter& out);

/// Kernel dimensions against forest counts and the known table, P basis,
/// tau stability, Prim(i, j) and the Hilbert series identities.
void primitives_suite(std::size_t max_n, std::size_t rank_max_n, Reporter& out);

/// Runs every suite concurrently. Returns true when nothing failed.
bool run_all(const Options& options, const Sink& sink);

}  // namespace wqsym::verify
