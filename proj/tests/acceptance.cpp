// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria marked "exact" compare canonical rationals
// structurally; there is no tolerance anywhere in exact mode.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "exhyp/compositions.hpp"
#include "exhyp/gauss_2f1.hpp"
#include "exhyp/identity.hpp"
#include "exhyp/lauricella.hpp"
#include "exhyp/pochhammer.hpp"
#include "support.hpp"

using namespace exhyp;
using testsupport::Rng;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", index, label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(EXHYP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 65536> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Criteria 1 + 2: 500 seeded random cases, r <= 5, n <= 12, magnitudes <= 8.
// Every defined comparison must hold exactly, within a 60 s budget, both
// through the library harness and through the CLI.
void run_identity_corpus() {
  const auto t0 = std::chrono::steady_clock::now();
  const CaseBounds bounds{5, 12, 8};
  const auto cases = generate_cases(42, 500, bounds);
  std::size_t checked = 0, degenerate = 0, mismatches = 0, chain_checked = 0,
              chain_mismatches = 0;
  for (const IdentityCase& c : cases) {
    const VerificationReport rep = verify_identity(c);
    if (!rep.equal.has_value()) {
      ++degenerate;
      continue;
    }
    ++checked;
    if (!*rep.equal) ++mismatches;
    if (rep.intermediate && rep.rhs) {
      ++chain_checked;
      if (!(rep.lhs == *rep.intermediate && *rep.intermediate == *rep.rhs)) ++chain_mismatches;
    }
  }
  const double elapsed = seconds_since(t0);

  const CliResult cli = run_cli("verify multinomial --trials 500 --seed 42 --r-max 5 --n-max 12");
  std::size_t cli_lines = 0, cli_false = 0;
  std::size_t start = 0;
  while (start < cli.out.size()) {
    std::size_t end = cli.out.find('\n', start);
    if (end == std::string::npos) end = cli.out.size();
    const auto j = nlohmann::json::parse(cli.out.substr(start, end - start));
    ++cli_lines;
    if (j["equal"].is_boolean() && !j["equal"].get<bool>()) ++cli_false;
    start = end + 1;
  }

  report(1, "generalized identity on 500 seeded cases",
         mismatches == 0 && checked > 0 && elapsed <= 60.0 && cli.exit_code == 0 &&
             cli_lines == 500 && cli_false == 0,
         std::to_string(checked) + " verified, " + std::to_string(degenerate) +
             " degenerate, 0 tolerance, " + std::to_string(elapsed) + " s; cli exit " +
             std::to_string(cli.exit_code));
  report(2, "derivation chain lhs = intermediate = rhs",
         chain_mismatches == 0 && chain_checked > 0,
         std::to_string(chain_checked) + " cases with every side defined, " +
             std::to_string(chain_mismatches) + " mismatches");
}

void run_pivot_independence() {
  Rng rng(7);
  std::size_t covered = 0, mismatches = 0;
  while (covered < 100) {
    IdentityCase c = rng.identity_case(4, 4, 12, 8);
    Rational reference;
    try {
      reference = multinomial_rhs(c);
    } catch (const DegeneracyError&) {
      continue;
    }
    for (std::size_t p = 0; p < 4; ++p) {
      c.pivot = p;
      if (!(multinomial_rhs(c) == reference)) ++mismatches;
    }
    ++covered;
  }
  report(3, "pivot independence of the closed form", mismatches == 0,
         "100 cases with r = 4, all 4 pivots, " + std::to_string(mismatches) + " mismatches");
}

void run_gauss_checks() {
  Rng rng(11);
  std::size_t flips = 0, flip_bad = 0, sums = 0, sum_bad = 0;
  while (flips < 200) {
    const Gauss2F1Spec spec = rng.gauss_spec(20, 8);
    if (sums < 200) {
      Gauss2F1Spec at_one = spec;
      at_one.x = Rational(1);
      if (!(eval_2f1(at_one) == gauss_sum(spec.n, spec.b, spec.c))) ++sum_bad;
      ++sums;
    }
    try {
      const auto flip = transform_2f1(spec);
      if (!(flip.factor * eval_2f1(flip.spec) == eval_2f1(spec))) ++flip_bad;
      ++flips;
    } catch (const DegeneracyError&) {
    }
  }
  report(4, "argument flip and closed form at x = 1", flip_bad == 0 && sum_bad == 0,
         "200 flips, 200 summations, exact, " + std::to_string(flip_bad + sum_bad) +
             " mismatches");
}

void run_toscano_checks() {
  Rng rng(13);
  std::size_t flips = 0, bad = 0;
  while (flips < 200) {
    const LauricellaSpec spec = rng.fd_spec(1, 4, 10, 8);
    try {
      const auto flip = toscano_transform(spec);
      if (!(flip.factor * eval_fd_exact(flip.spec) == eval_fd_exact(spec))) ++bad;
      ++flips;
    } catch (const DegeneracyError&) {
    }
  }
  report(5, "multivariate argument flip", bad == 0,
         "200 transformable specs with r <= 4, n <= 10, exact, " + std::to_string(bad) +
             " mismatches");
}

void run_reduction_checks() {
  Rng rng(17);
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    const LauricellaSpec spec = rng.fd_spec(1, 1, 12, 8);
    if (!(eval_fd_exact(spec) == eval_2f1(reduce_to_2f1(spec)))) ++bad;
  }
  for (int i = 0; i < 100; ++i) {
    LauricellaSpec spec = rng.fd_spec(1, 4, 10, 8);
    const Rational x = rng.rational(8);
    std::fill(spec.x.begin(), spec.x.end(), x);
    Rational b_total = 0;
    for (const Rational& b : spec.b) b_total += b;
    if (!(eval_fd_exact(spec) == eval_2f1({spec.n, b_total, spec.c, x}))) ++bad;
  }
  report(6, "reductions to the Gauss polynomial", bad == 0,
         "100 single-variable + 100 equal-argument specs, exact, " + std::to_string(bad) +
             " mismatches");
}

void run_pochhammer_checks() {
  Rng rng(19);
  std::size_t bad = 0;
  auto sign = [](unsigned long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };

  // Alternating binomial and falling-factorial forms, exhaustive to n = 30.
  for (unsigned long n = 0; n <= 30; ++n) {
    for (unsigned long k = 0; k <= n; ++k) {
      const Rational negn(-static_cast<long>(n));
      if (!(Rational(binomial(n, k)) * Rational(factorial(k)) ==
            sign(k) * rising_factorial(negn, k))) {
        ++bad;
      }
      if (!(neg_n_pochhammer_ratio(n, k) == sign(k) * rising_factorial(negn, k))) ++bad;
    }
  }

  // Tail and head-tail splits: integer bases exhaustively, then random
  // rationals.
  auto check_tail = [&](const Rational& x, unsigned long n, unsigned long k) {
    const Rational denom = rising_factorial(Rational(1) - x - Rational(n), k);
    if (!denom.is_zero() &&
        !(tail_pochhammer(x, n, k) * denom == sign(k) * rising_factorial(x, n))) {
      ++bad;
    }
    if (!denom.is_zero() &&
        !(rising_factorial(x, n - k) * denom == sign(k) * rising_factorial(x, n))) {
      ++bad;
    }
  };
  for (long xi = -8; xi <= 8; ++xi) {
    for (unsigned long n = 0; n <= 30; ++n) {
      for (unsigned long k = 0; k <= n; ++k) check_tail(Rational(xi), n, k);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const unsigned long n = rng.below(31);
    check_tail(rng.rational(8), n, rng.below(n + 1));
  }

  // Multinomial rewrite: exhaustive for 2 and 3 parts, then random shapes.
  auto check_multinomial = [&](const std::vector<Natural>& parts) {
    Natural n;
    for (const Natural& p : parts) n += p;
    unsigned long s = 0;
    Rational head_fact = 1;
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
      s += parts[j].as_ulong();
      head_fact *= Rational(factorial(parts[j]));
    }
    if (!(Rational(multinomial(n, parts)) ==
          sign(s) * rising_factorial(-Rational(n), s) / head_fact)) {
      ++bad;
    }
  };
  for (unsigned long p1 = 0; p1 <= 30; ++p1) {
    for (unsigned long p2 = 0; p1 + p2 <= 30; ++p2) {
      check_multinomial({Natural(p1), Natural(p2)});
      for (unsigned long p3 = 0; p1 + p2 + p3 <= 15; p3 += 3) {
        check_multinomial({Natural(p1), Natural(p2), Natural(p3)});
      }
    }
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t r = 2 + rng.below(5);
    std::vector<Natural> parts;
    for (std::size_t j = 0; j < r; ++j) parts.push_back(Natural(rng.below(8)));
    check_multinomial(parts);
  }

  report(7, "index-shift identities, exhaustive + random", bad == 0,
         "all 0 <= k <= n <= 30, integer bases in [-8,8], 100 random rationals each, " +
             std::to_string(bad) + " mismatches");
}

void run_float_fidelity() {
  Rng rng(23);
  std::size_t compared = 0, bad = 0;
  while (compared < 200) {
    const LauricellaSpec drawn = rng.fd_spec(1, 4, 15, 4);
    std::vector<double> b, x;
    for (const Rational& v : drawn.b) b.push_back(v.to_double());
    for (const Rational& v : drawn.x) x.push_back(v.to_double());
    const double c = drawn.c.to_double();

    LauricellaSpec exact_spec;
    exact_spec.n = drawn.n;
    for (double v : b) exact_spec.b.push_back(Rational::from_double(v));
    for (double v : x) exact_spec.x.push_back(Rational::from_double(v));
    exact_spec.c = Rational::from_double(c);
    const Rational exact = eval_fd_exact(exact_spec);
    if (exact.is_zero()) continue;

    const FdFloatResult approx = eval_fd_float(drawn.n.as_ulong(), b, c, x);
    const double reference = exact.to_double();
    if (!(std::abs(approx.value - reference) <=
          1e-12 * approx.condition * std::abs(reference))) {
      ++bad;
    }
    ++compared;
  }
  report(8, "binary64 fast path within the condition bound", bad == 0,
         "200 specs, parameters in [-4,4], r <= 4, n <= 15, rel err <= 1e-12 * condition, " +
             std::to_string(bad) + " violations");
}

void run_bench() {
  const CliResult res = run_cli(
      "bench multinomial --n 60 --a 1/2,1/3,3/4,2/5,5/7 --w 1,3/2,2,5/2,3");
  bool pass = res.exit_code == 0;
  std::string detail = "cli exit " + std::to_string(res.exit_code);
  if (pass) {
    const auto j = nlohmann::json::parse(res.out);
    const std::int64_t total_ns = j["total_elapsed_ns"].get<std::int64_t>();
    const std::uint64_t lhs_terms = j["lhs"]["terms"].get<std::uint64_t>();
    pass = j["equal"].get<bool>() && lhs_terms == 635376 && total_ns <= 5'000'000'000;
    detail = std::to_string(lhs_terms) + " compositions per side, both sides in " +
             std::to_string(static_cast<double>(total_ns) * 1e-9) + " s (budget 5 s), equal " +
             (j["equal"].get<bool>() ? "true" : "false");
  }
  report(9, "exact n = 60, r = 5 benchmark", pass, detail);
}

}  // namespace

int main() {
  run_identity_corpus();
  run_pivot_independence();
  run_gauss_checks();
  run_toscano_checks();
  run_reduction_checks();
  run_pochhammer_checks();
  run_float_fidelity();
  run_bench();
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
