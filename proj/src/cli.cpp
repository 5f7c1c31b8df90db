#include "wqsym/cli.hpp"

#include <CLI11.hpp>

#include <mutex>
#include <ostream>
#include <sstream>

#include "wqsym/io.hpp"
#include "wqsym/verify.hpp"

namespace wqsym::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

constexpr std::size_t kDefaultTier = 5;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::ostream& out;
  bool json = false;

  void line(const io::Json& j) const { out << j.dump() << '\n'; }
};

std::string value_text(const CheckResult::Value& v) {
  return std::visit(
      [](const auto& x) {
        std::ostringstream s;
        s << x;
        return s.str();
      },
      v);
}

void print_check(const Context& ctx, const CheckResult& r) {
  if (ctx.json) {
    ctx.line(io::to_json(r));
    return;
  }
  ctx.out << (r.pass ? "PASS " : "FAIL ") << "n=" << r.degree << ' ' << r.check
          << " expected=" << value_text(r.expected) << " actual=" << value_text(r.actual);
  if (!r.pass && !r.detail.empty()) ctx.out << " [" << r.detail << ']';
  ctx.out << '\n';
}

void check_tier(std::size_t max_n, bool extended) {
  if (max_n < 1) throw UsageError("--max must be at least 1");
  if (max_n > kDefaultTier && !extended) {
    throw UsageError("degrees above " + std::to_string(kDefaultTier) + " need --extended");
  }
}

int enumerate(const Context& ctx, const std::string& what, std::size_t n) {
  if (what == "words") {
    for (const auto& w : enumerate_packed(n)) {
      if (ctx.json) {
        ctx.line(io::to_json(w));
      } else {
        ctx.out << to_string(w) << '\n';
      }
    }
    return kOk;
  }
  if (n < 1) throw UsageError("--n must be at least 1 for " + what);
  if (what == "forests") {
    for (const auto& f : enumerate_forests(n)) {
      if (ctx.json) {
        ctx.line(io::to_json(f));
      } else {
        ctx.out << "# " << to_string(forest_to_word(f)) << '\n' << render(f);
      }
    }
    return kOk;
  }
  const auto trees = what == "trees" ? enumerate_trees(n) : enumerate_tprim_trees(n);
  for (const auto& t : trees) {
    if (ctx.json) {
      ctx.line(io::to_json(t));
    } else {
      ctx.out << "# " << to_string(tree_to_word(t)) << '\n' << render(t);
    }
  }
  return kOk;
}

int decompose(const Context& ctx, const PackedWord& w) {
  const auto descents = global_descents(w);
  const auto factors = gd_factorize(w);
  std::vector<MaxFactorization> pieces;
  for (const auto& f : factors) pieces.push_back(max_factorize(f));

  if (ctx.json) {
    io::Json j{{"word", io::to_json(w)}, {"global_descents", io::to_json(descents)}};
    j["factors"] = io::Json::array();
    j["max_factorizations"] = io::Json::array();
    for (std::size_t k = 0; k < factors.size(); ++k) {
      j["factors"].push_back(io::to_json(factors[k]));
      j["max_factorizations"].push_back({{"left", io::to_json(pieces[k].left)},
                                         {"I", io::to_json(pieces[k].positions)},
                                         {"right", io::to_json(pieces[k].right)}});
    }
    ctx.line(j);
    return kOk;
  }
  ctx.out << "word: " << to_string(w) << '\n';
  ctx.out << "global descents: " << to_string(descents) << '\n';
  ctx.out << "factors:";
  for (const auto& f : factors) ctx.out << ' ' << to_string(f);
  ctx.out << '\n';
  for (std::size_t k = 0; k < factors.size(); ++k) {
    ctx.out << "  " << to_string(factors[k]) << " = " << to_string(pieces[k].left)
            << " |> phi_" << to_string(pieces[k].positions) << '(' << to_string(pieces[k].right)
            << ")\n";
  }
  return kOk;
}

void print_element(const Context& ctx, const Element& x) {
  if (ctx.json) {
    ctx.line(io::to_json(x));
    return;
  }
  if (x.is_zero()) ctx.out << "0\n";
  for (const auto& [w, c] : x) {
    ctx.out << (c > 0 ? "+" : "") << c.get_str() << " R_" << to_string(w) << '\n';
  }
}

Forest parse_forest(const std::string& text) {
  Forest f = io::forest_from_json(io::parse_json(text));
  if (!is_packed_forest(f)) throw std::invalid_argument("forest is not packed");
  return f;
}

int dims(const Context& ctx, std::size_t max_n, bool extended) {
  check_tier(max_n, extended);
  const HilbertData data = compute_hilbert_data(max_n);
  if (!ctx.json) ctx.out << "n a_n p_n t_n\n";
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (ctx.json) {
      ctx.line({{"n", n}, {"a", data.a[n]}, {"p", data.p[n]}, {"t", data.t[n]}});
    } else {
      ctx.out << n << ' ' << data.a[n] << ' ' << data.p[n] << ' ' << data.t[n] << '\n';
    }
  }
  return kOk;
}

int report(const Context& ctx, const Report& results) {
  for (const auto& r : results) print_check(ctx, r);
  return all_pass(results) ? kOk : kFailed;
}

int verify_all(const Context& ctx, const verify::Options& options) {
  check_tier(options.max_degree, options.extended);
  std::size_t total = 0, failed = 0;
  std::mutex guard;
  const bool ok = verify::run_all(options, [&](const CheckResult& r) {
    std::lock_guard lock(guard);
    ++total;
    if (!r.pass) ++failed;
    print_check(ctx, r);
    ctx.out.flush();
  });
  if (!ctx.json) ctx.out << total << " checks, " << failed << " failed\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in WQSym on the R basis of packed words", "wqsym"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string what, word_text, forest_text;
  std::size_t n = 0, max_n = kDefaultTier;
  bool extended = false;
  verify::Options options;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List words, forests, trees or tprim-trees");
  enumerate_cmd->add_option("kind", what)
      ->required()
      ->check(CLI::IsMember({"words", "forests", "trees", "tprim-trees"}));
  enumerate_cmd->add_option("--n", n, "Degree")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Global descents and max factorizations");
  decompose_cmd->add_option("--word", word_text, "Packed word")->required();

  auto* to_forest_cmd = app.add_subcommand("to-forest", "Packed forest of a word");
  to_forest_cmd->add_option("--word", word_text, "Packed word")->required();

  auto* from_forest_cmd = app.add_subcommand("from-forest", "Word of a packed forest");
  from_forest_cmd->add_option("--json", forest_text, "Forest as JSON")->required();

  auto* expand_cmd = app.add_subcommand("expand-p", "Expand a P basis element on the R basis");
  expand_cmd->add_option("--forest", forest_text, "Forest as JSON")->required();

  auto* dims_cmd = app.add_subcommand("dims", "Dimensions a_n, p_n, t_n from kernels");
  dims_cmd->add_option("--max", max_n, "Largest degree")->capture_default_str();
  dims_cmd->add_flag("--extended", extended, "Allow degrees above 5");

  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
  verify_cmd->add_option("--max", max_n, "Largest degree")->capture_default_str();
  verify_cmd->add_flag("--extended", extended, "Allow degrees above 5");
  verify_cmd->add_flag("--fail-fast", options.fail_fast, "Stop at the first failure");
  verify_cmd->add_option("--random", options.random_instances, "Random instances per axiom")
      ->capture_default_str();
  verify_cmd->add_option("--seed", options.seed, "Random seed")->capture_default_str();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Check the Hilbert series identities");
  hilbert_cmd->add_option("--max", max_n, "Largest degree")->capture_default_str();
  hilbert_cmd->add_flag("--extended", extended, "Allow degrees above 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  const Context ctx{out, format == "json"};
  try {
    if (*enumerate_cmd) return enumerate(ctx, what, n);
    if (*decompose_cmd) return decompose(ctx, parse_word(word_text));
    if (*to_forest_cmd) {
      const Forest f = word_to_forest(parse_word(word_text));
      if (ctx.json) {
        ctx.line(io::to_json(f));
      } else {
        out << render(f);
      }
      return kOk;
    }
    if (*from_forest_cmd) {
      const PackedWord w = forest_to_word(parse_forest(forest_text));
      if (ctx.json) {
        ctx.line({{"word", io::to_json(w)}});
      } else {
        out << to_string(w) << '\n';
      }
      return kOk;
    }
    if (*expand_cmd) {
      print_element(ctx, p_basis_element(parse_forest(forest_text)));
      return kOk;
    }
    if (*dims_cmd) return dims(ctx, max_n, extended);
    if (*verify_cmd) {
      options.max_degree = max_n;
      options.extended = extended;
      return verify_all(ctx, options);
    }
    if (*hilbert_cmd) {
      check_tier(max_n, extended);
      return report(ctx, hilbert_check(max_n));
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace wqsym::cli
