// bergman: build, expand and verify Bergman kernels of elementary Reinhardt domains.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <algorithm>
#include <string>

#include "bergman/domain.hpp"
#include "bergman/kernel.hpp"
#include "bergman/laurent_chunk.hpp"
#include "bergman/monomial_norms.hpp"
#include "bergman/numeric.hpp"
#include "bergman/series.hpp"
#include "bergman/shadow_oracle.hpp"
#include "bergman/verify.hpp"

using namespace bergman;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DomainSpec parse_spec(const std::string& text) {
  try {
    return normalize_spec(parse_multi_index(text));
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --k: ") + e.what());
  }
}

bool is_identity(const std::vector<std::size_t>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

void note_reordering(const DomainSpec& spec) {
  if (is_identity(spec.permutation)) return;
  std::cerr << "note: coordinates reordered positives first:";
  for (std::size_t i = 0; i < spec.n; ++i) std::cerr << " t" << (i + 1) << "=z" << (spec.permutation[i] + 1);
  std::cerr << "\n";
}

// raw coordinate order -> normalized order
MultiIndex to_normalized(const MultiIndex& raw, const DomainSpec& spec) {
  std::vector<std::int64_t> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) out[i] = raw[spec.permutation[i]];
  return MultiIndex(out);
}

MultiIndex to_raw(const MultiIndex& normalized, const DomainSpec& spec) {
  std::vector<std::int64_t> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) out[spec.permutation[i]] = normalized[i];
  return MultiIndex(out);
}

int cmd_kernel(const std::string& k, const std::string& format) {
  const DomainSpec spec = parse_spec(k);
  if (spec.s != 1)
    throw UsageError("signature " + std::to_string(spec.s) +
                     " domains have no closed-form kernel here; use `bergman series --k " + k +
                     " --box ...` for the Laurent coefficients");
  note_reordering(spec);
  const RationalKernel kernel = reduce_content(kernel_signature_one(spec));
  if (format == "latex")
    std::cout << kernel_to_latex(kernel) << "\n";
  else if (format == "json")
    std::cout << kernel_to_json(kernel) << "\n";
  else
    std::cout << kernel_to_plain(kernel) << "\n";
  return kExitOk;
}

int cmd_norm(const std::string& k, const std::string& alpha_text, const std::string& oracle,
             std::uint64_t samples, std::uint64_t seed) {
  const DomainSpec spec = parse_spec(k);
  MultiIndex alpha;
  try {
    alpha = parse_multi_index(alpha_text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --alpha: ") + e.what());
  }
  if (alpha.size() != spec.n) throw UsageError("--alpha must have as many entries as --k");
  const MultiIndex a = to_normalized(alpha, spec);

  if (oracle == "mc") {
    if (samples < 10000) throw UsageError("--samples must be at least 10000");
    const auto est = mc_norm_estimate(a, spec, samples, seed);
    std::cout << "estimate " << est.estimate << " ± " << est.std_error << " (" << est.samples << " samples, "
              << est.accepted << " in shadow, seed " << seed << ")\n";
    return kExitOk;
  }
  const NormValue v = spec.is_model ? monomial_norm_model(a, spec.n, spec.s) : monomial_norm_oracle(a, spec);
  std::cout << v.to_string() << "\n";
  return kExitOk;
}

int cmd_series(const std::string& k, const std::string& box_text, const std::string& format) {
  const DomainSpec spec = parse_spec(k);
  Box raw_box;
  try {
    raw_box = parse_box(box_text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid --box: ") + e.what());
  }
  if (raw_box.dim() != spec.n) throw UsageError("--box must have one range per entry of --k");
  const Box box(to_normalized(raw_box.lo, spec), to_normalized(raw_box.hi, spec));

  LaurentChunk chunk;
  if (spec.s == 1)
    chunk = expand_closed_form(kernel_signature_one(spec), box);
  else if (spec.is_model)
    chunk = series_coefficients_model(spec.n, spec.s, box);
  else
    chunk = series_coefficients_oracle(spec, box);

  LaurentChunk out(raw_box, chunk.pi_power());
  for (const auto& [alpha, c] : chunk.terms()) out.add(to_raw(alpha, spec), c);
  std::cout << (format == "json" ? chunk_to_json(out) + "\n" : chunk_to_csv(out));
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool as_json) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  const auto reports = run_suites(suite, seed);
  bool ok = true;
  for (const auto& r : reports) ok &= r.pass();
  if (as_json) {
    nlohmann::json j = {{"seed", seed}, {"pass", ok}, {"suites", report_to_json(reports)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed " << seed << "\n";
    for (const auto& r : reports) std::cout << r.summary << (r.pass() ? "" : "  FAIL") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernels of elementary Reinhardt domains H(k) = { z in D^n : |z^k| < 1 }.\n"
               "Thread count for sampling: BERGMAN_THREADS. BERGMAN_SIMD=scalar disables AVX2."};
  app.require_subcommand(1);

  std::string k, format = "plain", alpha, oracle = "exact", box, series_format = "csv", suite;
  std::uint64_t samples = 1'000'000, seed = 1;
  bool as_json = false;

  auto* kernel = app.add_subcommand("kernel", "closed-form kernel of a signature-one domain");
  kernel->add_option("--k", k, "defining exponents, e.g. 1,-2")->required();
  kernel->add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "latex", "json"}));

  auto* norm = app.add_subcommand("norm", "squared L2 norm of the monomial z^alpha");
  norm->add_option("--k", k, "defining exponents, e.g. 1,1,-1")->required();
  norm->add_option("--alpha", alpha, "monomial exponents, e.g. 0,-1")->required();
  norm->add_option("--oracle", oracle, "exact value or Monte-Carlo estimate")->check(CLI::IsMember({"exact", "mc"}));
  norm->add_option("--samples", samples, "Monte-Carlo sample count (mc only)");
  norm->add_option("--seed", seed, "Monte-Carlo seed (mc only)");

  auto* series = app.add_subcommand("series", "exact Laurent coefficients pi^n / ||z^alpha||^2 on a box");
  series->add_option("--k", k, "defining exponents")->required();
  series->add_option("--box", box, "per-coordinate ranges lo:hi, e.g. 0:4,-4:4")->required();
  series->add_option("--format", series_format, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "combinatorics, norms, coefficient-match, bell, reproducing, "
                                       "rationality-diagnostic or all")
      ->required();
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_flag("--json", as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*kernel) return cmd_kernel(k, format);
    if (*norm) return cmd_norm(k, alpha, oracle, samples, seed);
    if (*series) return cmd_series(k, box, series_format);
    if (*verify) return cmd_verify(suite, seed, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
