#include "bergman/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "bergman/combinatorics.hpp"
#include "bergman/kernel.hpp"
#include "bergman/monomial_norms.hpp"
#include "bergman/numeric.hpp"
#include "bergman/series.hpp"
#include "bergman/shadow_oracle.hpp"

namespace bergman {

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

namespace {

using json = nlohmann::json;

std::size_t passed(const SuiteReport& r) {
  return static_cast<std::size_t>(std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.pass; }));
}

std::string count_line(const SuiteReport& r, const std::string& noun) {
  return r.suite + ": " + std::to_string(passed(r)) + "/" + std::to_string(r.checks.size()) + " " + noun + " pass";
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

CheckRecord exact_check(std::string name, json inputs, bool ok) {
  return {std::move(name), std::move(inputs), ok ? 0.0 : 1.0, 0.0, ok};
}

std::vector<MultiIndex> signature_one_specs(std::int64_t max_entry, std::size_t max_n) {
  std::vector<MultiIndex> out;
  for (std::int64_t a = 1; a <= max_entry; ++a)
    for (std::int64_t b = 1; b <= max_entry; ++b) {
      out.push_back(MultiIndex{a, -b});
      if (max_n >= 3)
        for (std::int64_t c = b; c <= max_entry; ++c) out.push_back(MultiIndex{a, -b, -c});
    }
  return out;
}

SuiteReport suite_combinatorics(std::uint64_t) {
  SuiteReport r{"combinatorics", "", {}};
  for (std::int64_t lambda = 1; lambda <= 50; ++lambda) {
    bool ok = true;
    std::int64_t total = 0;
    for (std::int64_t mu = -5; mu <= 2 * lambda + 5; ++mu) {
      const auto c = count_pairs(lambda, mu);
      ok &= c == count_pairs_bruteforce(lambda, mu);
      total += c;
    }
    ok &= total == lambda * lambda;
    r.checks.push_back(exact_check("count_pairs", {{"lambda", lambda}}, ok));
  }
  for (const auto& raw : signature_one_specs(6, 2)) {
    const DomainSpec spec = normalize_spec(raw);
    const auto g = index_set(spec, IndexSetVariant::G);
    const auto gs = index_set(spec, IndexSetVariant::G_star);
    bool ok = true;
    for (const auto& beta : g.members)
      if (!gs.contains(beta)) ok &= coefficient_C(beta, spec) == 0;
    for (const auto& beta : gs.members) ok &= g.contains(beta);
    r.checks.push_back(exact_check("gstar_pruning", {{"k", raw.vec()}}, ok));
  }
  r.summary = count_line(r, "checks");
  return r;
}

SuiteReport suite_norms(std::uint64_t seed) {
  SuiteReport r{"norms", "", {}};
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t s = 1; s < n; ++s) {
      const DomainSpec spec = model_spec(n, s);
      Box box(MultiIndex::constant(n, -2), MultiIndex::constant(n, 2));
      bool ok = true;
      box.for_each([&](const MultiIndex& alpha) {
        ok &= monomial_norm_model(alpha, n, s) == monomial_norm_oracle(alpha, spec);
      });
      r.checks.push_back(exact_check("model_vs_oracle", {{"n", n}, {"s", s}, {"box", "[-2,2]^n"}}, ok));
    }
  struct McCase {
    MultiIndex k, alpha;
  };
  const std::vector<McCase> cases = {{MultiIndex{1, -1}, MultiIndex{0, 0}}, {MultiIndex{1, -2}, MultiIndex{0, 0}},
                                     {MultiIndex{1, 1, -1}, MultiIndex{0, 0, 0}}};
  for (const auto& c : cases) {
    const DomainSpec spec = normalize_spec(c.k);
    const double exact = monomial_norm_oracle(c.alpha, spec).to_double();
    const auto mc = mc_norm_estimate(c.alpha, spec, 1'000'000, seed);
    const double z = std::abs(mc.estimate - exact) / mc.std_error;
    r.checks.push_back({"mc_norm", {{"k", c.k.vec()}, {"alpha", c.alpha.vec()}, {"seed", seed}, {"exact", exact}},
                        z, 4.0, z < 4.0});
  }
  r.summary = count_line(r, "checks");
  return r;
}

SuiteReport suite_coefficient_match(std::uint64_t) {
  SuiteReport r{"coefficient-match", "", {}};
  const std::vector<MultiIndex> specs = {MultiIndex{1, -1}, MultiIndex{1, -2}, MultiIndex{2, -1},
                                         MultiIndex{2, -3}, MultiIndex{1, -1, -1}, MultiIndex{1, -2, -3}};
  for (const auto& raw : specs) {
    const DomainSpec spec = normalize_spec(raw);
    MultiIndex lo = MultiIndex::constant(spec.n, -8), hi = MultiIndex::constant(spec.n, 8);
    lo = lo.with(0, 0);
    const Box box(lo, hi);
    const auto closed = expand_closed_form(kernel_signature_one(spec), box);
    const auto oracle = series_coefficients_oracle(spec, box);
    r.checks.push_back(exact_check("closed_form_vs_oracle", {{"k", raw.vec()}, {"box", "a1 in [0,8], ab in [-8,8]"}},
                                   closed == oracle));
  }
  r.summary = count_line(r, "specs");
  return r;
}

SuiteReport suite_bell(std::uint64_t seed) {
  SuiteReport r{"bell", "", {}};
  const std::vector<MultiIndex> specs = {MultiIndex{1, -1}, MultiIndex{2, -1}, MultiIndex{3, -2}, MultiIndex{2, -3}};
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (const auto& raw : specs) {
    const DomainSpec spec = normalize_spec(raw);
    const DomainSpec model = model_spec(spec.n, 1);
    for (int i = 0; i < 15; ++i) {
      const auto z = random_domain_point(model, rng, 0.05);
      const auto w = random_domain_point(spec, rng, 0.05);
      const double res = check_bell_identity(spec, z, w);
      worst = std::max(worst, res);
      r.checks.push_back({"bell_residual", {{"k", raw.vec()}, {"point", i}, {"seed", seed}}, res, 1e-10, res < 1e-10});
    }
  }
  r.summary = count_line(r, "points") + " (max residual " + sci(worst) + ")";
  return r;
}

SuiteReport suite_reproducing(std::uint64_t seed) {
  SuiteReport r{"reproducing", "", {}};
  const DomainSpec spec = normalize_spec(MultiIndex{1, -1});
  const RationalKernel kernel = kernel_signature_one(spec);
  const std::vector<std::complex<double>> z = {0.2, 0.6};
  const std::vector<std::pair<MultiIndex, double>> cases = {
      {MultiIndex{0, 0}, 0.05}, {MultiIndex{0, 1}, 0.05}, {MultiIndex{1, -1}, 0.05}};
  double worst = 0.0;
  for (const auto& [alpha, tol] : cases) {
    const auto res = check_reproducing(kernel, spec, alpha, z, 1'000'000, seed);
    worst = std::max(worst, res.relative_error);
    r.checks.push_back({"reproducing",
                        {{"alpha", alpha.vec()}, {"z", {0.2, 0.6}}, {"samples", res.samples}, {"seed", seed},
                         {"discarded_singular", res.discarded_singular}},
                        res.relative_error, tol, res.relative_error < tol});
  }
  r.summary = count_line(r, "functions") + " (max relative error " + sci(worst) + ")";
  return r;
}

SuiteReport suite_rationality(std::uint64_t) {
  SuiteReport r{"rationality-diagnostic", "", {}};
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto v = rationality_diagnostic(slice_coefficients(n, 200));
    r.checks.push_back(exact_check("slice_polynomial_decay", {{"n", n}, {"terms", 200}, {"verdict", to_string(v)}},
                                   v == DecayVerdict::polynomial_decay));
  }
  std::vector<Rational> geometric;
  for (int k = 1; k <= 200; ++k) geometric.push_back(pow(Rational(1, 2), k));
  const auto v = rationality_diagnostic(geometric);
  r.checks.push_back(exact_check("geometric_control", {{"ratio", "1/2"}, {"terms", 200}, {"verdict", to_string(v)}},
                                 v == DecayVerdict::exponential_decay));
  r.summary = count_line(r, "sequences");
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"combinatorics", "norms",       "coefficient-match",
                                                 "bell",          "reproducing", "rationality-diagnostic"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "combinatorics") return suite_combinatorics(seed);
  if (name == "norms") return suite_norms(seed);
  if (name == "coefficient-match") return suite_coefficient_match(seed);
  if (name == "bell") return suite_bell(seed);
  if (name == "reproducing") return suite_reproducing(seed);
  if (name == "rationality-diagnostic") return suite_rationality(seed);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, seed));
  } else {
    out.push_back(run_suite(name, seed));
  }
  return out;
}

nlohmann::json report_to_json(const std::vector<SuiteReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"inputs", c.inputs}, {"estimate", c.estimate}, {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    out.push_back({{"suite", r.suite}, {"summary", r.summary}, {"pass", r.pass()}, {"checks", std::move(checks)}});
  }
  return out;
}

}  // namespace bergman
