// Command-line front end: exact evaluation of rising factorials, Gauss and
// fourth-Lauricella hypergeometric polynomials, identity verification, and
// summation-kernel benchmarks.
//
// Exit codes: 0 success, 1 input error, 2 mathematical degeneracy,
// 3 verification failure.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exhyp/gauss_2f1.hpp"
#include "exhyp/identity.hpp"
#include "exhyp/lauricella.hpp"
#include "exhyp/pochhammer.hpp"

namespace {

using exhyp::DegeneracyError;
using exhyp::IdentityCase;
using exhyp::InputError;
using exhyp::Natural;
using exhyp::Rational;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUnequal = 3;

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

Natural parse_natural(const std::string& flag, const std::string& text) {
  try {
    return Natural::parse(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

std::vector<Rational> parse_vector(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma - start);
    out.push_back(parse_rational(flag, piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void require(bool present, const std::string& flag) {
  if (!present) throw InputError(flag + " is required for this command");
}

struct Options {
  std::string n, b, c, x, a, w, alpha, beta, z;
  std::string mode = "exact";
  std::string output = "json";
  std::uint64_t pivot = 0;  // 1-based; 0 means "pick the largest |w|"
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t r_max = 5;
  std::uint64_t n_max = 12;
  unsigned jobs = 1;
};

void emit(const Options& opt, const ordered_json& object, const std::string& plain) {
  if (opt.output == "plain") {
    std::cout << plain << "\n";
  } else {
    std::cout << object.dump() << "\n";
  }
}

ordered_json json_or_null(const std::optional<Rational>& v) {
  return v ? ordered_json(v->str()) : ordered_json(nullptr);
}

IdentityCase single_case(const Options& opt) {
  require(!opt.n.empty(), "--n");
  require(!opt.a.empty(), "--a");
  require(!opt.w.empty(), "--w");
  IdentityCase c;
  c.n = parse_natural("--n", opt.n);
  c.a = parse_vector("--a", opt.a);
  c.w = parse_vector("--w", opt.w);
  if (c.a.size() != c.w.size()) throw InputError("--a and --w must have the same length");
  if (opt.pivot == 0) {
    c.pivot = exhyp::default_pivot(c.w);
  } else {
    if (opt.pivot > c.w.size()) throw InputError("--pivot is out of range");
    c.pivot = static_cast<std::size_t>(opt.pivot - 1);
  }
  return c;
}

int run_eval_poch(const Options& opt) {
  require(!opt.x.empty(), "--x");
  require(!opt.n.empty(), "--n");
  const Rational value =
      exhyp::rising_factorial(parse_rational("--x", opt.x), parse_natural("--n", opt.n));
  emit(opt, ordered_json{{"value", value.str()}}, value.str());
  return kExitOk;
}

int run_eval_2f1(const Options& opt) {
  if (opt.mode != "exact") throw InputError("--mode: only fd supports float mode");
  require(!opt.n.empty(), "--n");
  require(!opt.b.empty(), "--b");
  require(!opt.c.empty(), "--c");
  require(!opt.x.empty(), "--x");
  const exhyp::Gauss2F1Spec spec{parse_natural("--n", opt.n), parse_rational("--b", opt.b),
                                 parse_rational("--c", opt.c), parse_rational("--x", opt.x)};
  const Rational value = exhyp::eval_2f1(spec);
  emit(opt, ordered_json{{"value", value.str()}}, value.str());
  return kExitOk;
}

int run_eval_fd(const Options& opt) {
  require(!opt.n.empty(), "--n");
  require(!opt.b.empty(), "--b");
  require(!opt.c.empty(), "--c");
  require(!opt.x.empty(), "--x");
  const Natural n = parse_natural("--n", opt.n);
  const std::vector<Rational> b = parse_vector("--b", opt.b);
  const std::vector<Rational> x = parse_vector("--x", opt.x);
  const Rational c = parse_rational("--c", opt.c);
  if (b.size() != x.size()) throw InputError("--b and --x must have the same length");
  if (opt.mode == "float") {
    std::vector<double> bd, xd;
    for (const Rational& v : b) bd.push_back(v.to_double());
    for (const Rational& v : x) xd.push_back(v.to_double());
    const exhyp::FdFloatResult res = exhyp::eval_fd_float(n.as_ulong(), bd, c.to_double(), xd);
    ordered_json j{{"value", res.value}};
    if (std::isinf(res.condition)) {
      j["condition"] = "inf";
    } else {
      j["condition"] = res.condition;
    }
    emit(opt, j, std::to_string(res.value) + " " + std::to_string(res.condition));
    return kExitOk;
  }
  if (opt.mode != "exact") throw InputError("--mode must be exact or float");
  const Rational value = exhyp::eval_fd_exact(exhyp::LauricellaSpec{n, b, c, x});
  emit(opt, ordered_json{{"value", value.str()}}, value.str());
  return kExitOk;
}

int run_verify_cv(const Options& opt) {
  require(!opt.alpha.empty(), "--alpha");
  require(!opt.beta.empty(), "--beta");
  require(!opt.w.empty(), "--w");
  require(!opt.z.empty(), "--z");
  require(!opt.n.empty(), "--n");
  const exhyp::ChuVandermondePair pair = exhyp::chu_vandermonde_pair(
      parse_rational("--alpha", opt.alpha), parse_rational("--beta", opt.beta),
      parse_rational("--w", opt.w), parse_rational("--z", opt.z), parse_natural("--n", opt.n));
  ordered_json j;
  j["lhs"] = pair.lhs.str();
  j["rhs"] = json_or_null(pair.rhs);
  j["equal"] = pair.rhs ? ordered_json(*pair.rhs == pair.lhs) : ordered_json(nullptr);
  if (!pair.rhs_note.empty()) j["note"] = pair.rhs_note;
  const std::string plain = pair.rhs ? (*pair.rhs == pair.lhs ? "true" : "false") : "undefined";
  emit(opt, j, plain);
  if (!pair.rhs) return kExitDegenerate;
  return *pair.rhs == pair.lhs ? kExitOk : kExitUnequal;
}

int verdict(const std::vector<exhyp::VerificationReport>& reports) {
  bool any_comparison = false;
  for (const auto& rep : reports) {
    if (!rep.equal) continue;
    if (!*rep.equal) return kExitUnequal;
    any_comparison = true;
  }
  return any_comparison ? kExitOk : kExitDegenerate;
}

int run_verify_multinomial(const Options& opt) {
  std::vector<IdentityCase> cases;
  if (opt.trials > 0) {
    exhyp::CaseBounds bounds;
    bounds.r_max = opt.r_max;
    bounds.n_max = opt.n_max;
    cases = exhyp::generate_cases(opt.seed, opt.trials, bounds);
  } else {
    cases.push_back(single_case(opt));
  }

  std::vector<exhyp::VerificationReport> reports(cases.size());
  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) reports[i] = exhyp::verify_identity(cases[i]);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    const unsigned workers =
        std::min<unsigned>(opt.jobs, static_cast<unsigned>(cases.size()));
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= cases.size()) return;
          reports[i] = exhyp::verify_identity(cases[i]);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (opt.output == "plain") {
      std::cout << (reports[i].equal ? (*reports[i].equal ? "true" : "false") : "undefined")
                << "\n";
    } else {
      std::cout << exhyp::report_json(cases[i], reports[i]) << "\n";
    }
  }
  return verdict(reports);
}

int run_bench_fd(const Options& opt) {
  require(!opt.n.empty(), "--n");
  require(!opt.b.empty(), "--b");
  require(!opt.c.empty(), "--c");
  require(!opt.x.empty(), "--x");
  const exhyp::LauricellaSpec spec{parse_natural("--n", opt.n), parse_vector("--b", opt.b),
                                   parse_rational("--c", opt.c), parse_vector("--x", opt.x)};
  if (spec.b.size() != spec.x.size()) throw InputError("--b and --x must have the same length");
  exhyp::TermStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const Rational value = exhyp::eval_fd_exact(spec, &stats);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  const double seconds = static_cast<double>(elapsed) * 1e-9;
  const double rate = seconds > 0 ? static_cast<double>(stats.terms) / seconds : 0.0;
  ordered_json j{{"subject", "fd"},      {"n", spec.n.as_ulong()},
                 {"r", spec.b.size()},   {"terms", stats.terms},
                 {"elapsed_ns", elapsed}, {"terms_per_second", rate},
                 {"value", value.str()}};
  emit(opt, j, std::to_string(stats.terms) + " terms in " + std::to_string(seconds) + " s");
  return kExitOk;
}

int run_bench_multinomial(const Options& opt) {
  const IdentityCase c = single_case(opt);
  exhyp::TermStats lhs_stats, rhs_stats;

  const auto t0 = std::chrono::steady_clock::now();
  const Rational lhs = exhyp::multinomial_lhs(c, &lhs_stats);
  const auto t1 = std::chrono::steady_clock::now();
  const Rational rhs = exhyp::multinomial_rhs(c, &rhs_stats);
  const auto t2 = std::chrono::steady_clock::now();

  const auto lhs_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  const auto rhs_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
  auto side = [](std::uint64_t terms, std::int64_t ns) {
    const double seconds = static_cast<double>(ns) * 1e-9;
    return ordered_json{
        {"terms", terms},
        {"elapsed_ns", ns},
        {"terms_per_second", seconds > 0 ? static_cast<double>(terms) / seconds : 0.0}};
  };
  ordered_json j{{"subject", "multinomial"},
                 {"n", c.n.as_ulong()},
                 {"r", c.a.size()},
                 {"lhs", side(lhs_stats.terms, lhs_ns)},
                 {"rhs", side(rhs_stats.terms, rhs_ns)},
                 {"equal", lhs == rhs},
                 {"total_elapsed_ns", lhs_ns + rhs_ns}};
  emit(opt, j,
       "lhs+rhs in " + std::to_string(static_cast<double>(lhs_ns + rhs_ns) * 1e-9) +
           " s, equal " + (lhs == rhs ? "true" : "false"));
  return lhs == rhs ? kExitOk : kExitUnequal;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  int exit_code = kExitOk;

  CLI::App app{"exact hypergeometric polynomials and identity verification"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "json or plain")
        ->check(CLI::IsMember({"json", "plain"}));
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate one quantity");
  eval->require_subcommand(1);
  CLI::App* eval_poch = eval->add_subcommand("poch", "rising factorial (x)_n");
  eval_poch->add_option("--x", opt.x, "base, as p/q");
  eval_poch->add_option("--n", opt.n, "number of factors");
  add_common(eval_poch);
  eval_poch->callback([&] { exit_code = run_eval_poch(opt); });

  CLI::App* eval_2f1 = eval->add_subcommand("2f1", "Gauss polynomial 2F1(-n, b, c; x)");
  eval_2f1->add_option("--n", opt.n, "degree");
  eval_2f1->add_option("--b", opt.b, "upper parameter, as p/q");
  eval_2f1->add_option("--c", opt.c, "denominator parameter, as p/q");
  eval_2f1->add_option("--x", opt.x, "argument, as p/q");
  eval_2f1->add_option("--mode", opt.mode, "exact");
  add_common(eval_2f1);
  eval_2f1->callback([&] { exit_code = run_eval_2f1(opt); });

  CLI::App* eval_fd = eval->add_subcommand("fd", "Lauricella polynomial F_D");
  eval_fd->add_option("--n", opt.n, "degree");
  eval_fd->add_option("--b", opt.b, "upper parameters, comma-separated p/q");
  eval_fd->add_option("--c", opt.c, "denominator parameter, as p/q");
  eval_fd->add_option("--x", opt.x, "arguments, comma-separated p/q");
  eval_fd->add_option("--mode", opt.mode, "exact or float");
  add_common(eval_fd);
  eval_fd->callback([&] { exit_code = run_eval_fd(opt); });

  CLI::App* verify = app.add_subcommand("verify", "check an identity, report both sides");
  verify->require_subcommand(1);
  CLI::App* verify_cv = verify->add_subcommand("cv", "binomial convolution vs closed form");
  verify_cv->add_option("--alpha", opt.alpha, "first parameter, as p/q");
  verify_cv->add_option("--beta", opt.beta, "second parameter, as p/q");
  verify_cv->add_option("--w", opt.w, "first weight, as p/q");
  verify_cv->add_option("--z", opt.z, "second weight, as p/q");
  verify_cv->add_option("--n", opt.n, "degree");
  add_common(verify_cv);
  verify_cv->callback([&] { exit_code = run_verify_cv(opt); });

  CLI::App* verify_mn =
      verify->add_subcommand("multinomial", "weighted multinomial sum vs its closed form");
  verify_mn->add_option("--n", opt.n, "degree (single case)");
  CLI::Option* mn_a = verify_mn->add_option("--a", opt.a, "parameters, comma-separated p/q (single case)");
  CLI::Option* mn_w = verify_mn->add_option("--w", opt.w, "weights, comma-separated p/q (single case)");
  verify_mn->add_option("--pivot", opt.pivot, "1-based pivot index (default: largest |w|)")
      ->check(CLI::PositiveNumber);
  verify_mn->add_option("--trials", opt.trials, "verify this many generated cases instead")
      ->excludes(mn_a)
      ->excludes(mn_w);
  verify_mn->add_option("--seed", opt.seed, "generator seed for --trials");
  verify_mn->add_option("--r-max", opt.r_max, "largest r for generated cases");
  verify_mn->add_option("--n-max", opt.n_max, "largest degree for generated cases");
  verify_mn->add_option("--jobs", opt.jobs, "verify cases on this many threads");
  add_common(verify_mn);
  verify_mn->callback([&] { exit_code = run_verify_multinomial(opt); });

  CLI::App* bench = app.add_subcommand("bench", "time the summation kernels");
  bench->require_subcommand(1);
  CLI::App* bench_fd = bench->add_subcommand("fd", "time one exact F_D evaluation");
  bench_fd->add_option("--n", opt.n, "degree");
  bench_fd->add_option("--b", opt.b, "upper parameters, comma-separated p/q");
  bench_fd->add_option("--c", opt.c, "denominator parameter, as p/q");
  bench_fd->add_option("--x", opt.x, "arguments, comma-separated p/q");
  add_common(bench_fd);
  bench_fd->callback([&] { exit_code = run_bench_fd(opt); });

  CLI::App* bench_mn = bench->add_subcommand("multinomial", "time both sides of the identity");
  bench_mn->add_option("--n", opt.n, "degree");
  bench_mn->add_option("--a", opt.a, "parameters, comma-separated p/q");
  bench_mn->add_option("--w", opt.w, "weights, comma-separated p/q");
  bench_mn->add_option("--pivot", opt.pivot, "1-based pivot index (default: largest |w|)");
  add_common(bench_mn);
  bench_mn->callback([&] { exit_code = run_bench_multinomial(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DegeneracyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  }
  return exit_code;
}
