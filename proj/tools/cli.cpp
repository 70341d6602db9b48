// Copyright 2026 The twoqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "twoqubit/bloch.hpp"
#include "twoqubit/chain.hpp"
#include "twoqubit/entanglement.hpp"
#include "twoqubit/errors.hpp"
#include "twoqubit/oracle.hpp"
#include "twoqubit/sampling.hpp"
#include "twoqubit/separability.hpp"
#include "twoqubit/spectrum.hpp"

namespace twoqubit::cli {

namespace {

using nlohmann::json;

// Malformed input: bad JSON, wrong shapes, unreadable files, bad flags.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Matrix4& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < 4; ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

double number(const json& v) {
  if (!v.is_number()) throw ParseError("expected a number");
  return v.get<double>();
}

Complex parse_complex(const json& v) {
  if (!v.is_array() || v.size() != 2) throw ParseError("expected an [re, im] pair");
  return {number(v[0]), number(v[1])};
}

const json& sized_array(const json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n)
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(n));
  return v;
}

// ---------------------------------------------------------------- analyze

DensityMatrix parse_state(const json& doc) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  const int keys = static_cast<int>(doc.contains("matrix")) +
                   static_cast<int>(doc.contains("bloch")) +
                   static_cast<int>(doc.contains("pure"));
  if (keys != 1)
    throw ParseError("exactly one of \"matrix\", \"bloch\", \"pure\" is required");

  if (doc.contains("pure")) {
    const json& v = sized_array(doc["pure"], 4, "\"pure\"");
    std::array<Complex, 4> amp{};
    for (std::size_t i = 0; i < 4; ++i) amp[i] = parse_complex(v[i]);
    return DensityMatrix::from_pure(PureState(amp));
  }
  if (doc.contains("bloch")) {
    const json& v = sized_array(doc["bloch"], 4, "\"bloch\"");
    BlochTensor::Array a{};
    for (std::size_t i = 0; i < 4; ++i) {
      const json& row = sized_array(v[i], 4, "\"bloch\" row");
      for (std::size_t j = 0; j < 4; ++j) a[i][j] = number(row[j]);
    }
    return DensityMatrix::from_matrix(from_bloch(BlochTensor(a)));
  }
  const json& v = sized_array(doc["matrix"], 4, "\"matrix\"");
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    const json& row = sized_array(v[i], 4, "\"matrix\" row");
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = parse_complex(row[j]);
  }
  return DensityMatrix::from_matrix(m);
}

json analysis(const DensityMatrix& rho) {
  const QuarticSpectrum spec = eigenvalues(coeffs_from_traces(rho.matrix()));
  const BlochTensor bloch = to_bloch(rho);
  const SeparabilityReport sep = peres_test(rho);
  const EntanglementReport ent = entanglement_report(rho);

  json out;
  out["eigenvalues"] = spec.lambdas;
  out["branch"] = std::string(to_string(spec.branch));
  json rows = json::array();
  for (const auto& row : bloch.coefficients()) rows.push_back(row);
  out["bloch"] = rows;
  out["bloch_in_range"] = bloch.in_physical_range();
  out["purity"] = bloch.purity();
  out["pt_eigenvalues"] = sep.pt_eigenvalues;
  out["separable"] = sep.separable;
  out["marginal"] = sep.marginal;
  out["concurrence"] = ent.concurrence;
  out["eof"] = ent.eof;
  out["negativity"] = ent.negativity;
  out["eof_upper_bound"] = ent.eof_upper_bound ? json(*ent.eof_upper_bound) : json(nullptr);
  return out;
}

void print_text(const json& a, std::ostream& out) {
  auto list = [](const json& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + format_double(x.get<double>());
    return s;
  };
  out << "eigenvalues     " << list(a["eigenvalues"]) << "\n"
      << "branch          " << a["branch"].get<std::string>() << "\n"
      << "purity          " << format_double(a["purity"].get<double>()) << "\n"
      << "pt_eigenvalues  " << list(a["pt_eigenvalues"]) << "\n"
      << "separable       " << (a["separable"].get<bool>() ? "yes" : "no")
      << (a["marginal"].get<bool>() ? " (marginal)" : "") << "\n"
      << "concurrence     " << format_double(a["concurrence"].get<double>()) << "\n"
      << "eof             " << format_double(a["eof"].get<double>()) << "\n"
      << "negativity      " << format_double(a["negativity"].get<double>()) << "\n"
      << "eof_upper_bound "
      << (a["eof_upper_bound"].is_null() ? "n/a"
                                         : format_double(a["eof_upper_bound"].get<double>()))
      << "\n";
}

int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  const json a = analysis(parse_state(doc));
  if (as_json)
    out << a.dump(2) << "\n";
  else
    print_text(a, out);
  return kOk;
}

// ------------------------------------------------------------------ chain

struct Sweep {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

Sweep parse_sweep(const std::string& s) {
  Sweep out;
  double* fields[] = {&out.start, &out.stop, &out.step};
  const char* p = s.data();
  const char* end = s.data() + s.size();
  for (int k = 0; k < 3; ++k) {
    const auto res = std::from_chars(p, end, *fields[k]);
    if (res.ec != std::errc() || (k < 2 && (res.ptr == end || *res.ptr != ':')) ||
        (k == 2 && res.ptr != end))
      throw ParseError("--sweep expects start:stop:step");
    p = res.ptr + 1;
  }
  return out;
}

constexpr long kMaxSweepPoints = 1000000;

int cmd_chain(double q, double epsilon, std::optional<int> n,
              const std::optional<std::string>& sweep_arg, bool csv, std::ostream& out) {
  if (sweep_arg) {
    const Sweep sw = parse_sweep(*sweep_arg);
    if (!(sw.step > 0.0) || !(sw.start <= sw.stop))
      throw PreconditionError("--sweep needs start ≤ stop and step > 0");
    const double span = (sw.stop - sw.start) / sw.step;
    if (span > kMaxSweepPoints) throw PreconditionError("--sweep has too many points");
    const long count = static_cast<long>(std::floor(span * (1.0 + 1e-12))) + 1;
    json rows = json::array();
    if (csv) out << "epsilon,n_max\n";
    for (long k = 0; k < count; ++k) {
      const double eps = sw.start + static_cast<double>(k) * sw.step;
      const TransferDistance d = max_transfer_distance(q, eps);
      if (csv) {
        out << format_double(eps) << "," << (d.unbounded ? "inf" : std::to_string(d.steps))
            << "\n";
      } else {
        rows.push_back({{"epsilon", eps},
                        {"n_max", d.unbounded ? json(nullptr) : json(d.steps)}});
      }
    }
    if (!csv) out << json{{"q", q}, {"rows", rows}}.dump(2) << "\n";
    return kOk;
  }

  const ChainReport rep = chain_report(q, epsilon, n);
  const auto& lm = rep.lambda_min_per_step;
  const json n_max = rep.n_max.unbounded ? json(nullptr) : json(rep.n_max.steps);
  if (csv) {
    out << "n,lambda_min,entangled,n_max\n";
    const std::string tail = rep.n_max.unbounded ? "inf" : std::to_string(rep.n_max.steps);
    for (std::size_t i = 0; i < lm.size(); ++i)
      out << i << "," << format_double(lm[i]) << ","
          << (lm[i] < -tolerance::kSeparability ? "true" : "false") << "," << tail << "\n";
    return kOk;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < lm.size(); ++i)
    rows.push_back({{"n", i},
                    {"lambda_min", lm[i]},
                    {"entangled", lm[i] < -tolerance::kSeparability}});
  json doc{{"q", q}, {"epsilon", epsilon}, {"n_max", n_max}, {"unbounded", rep.n_max.unbounded}};
  if (rep.epsilon_critical) doc["epsilon_critical"] = *rep.epsilon_critical;
  doc["rows"] = rows;
  out << doc.dump(2) << "\n";
  return kOk;
}

// ------------------------------------------------------------------- fuzz

enum class Family { Ginibre, Hermitian, Pure, Rank2, Rank3, Werner };

constexpr int kShards = 8;
constexpr std::size_t kCounterexamplesPerShard = 10;

// Tolerances of the fuzz checks.
constexpr double kEigTol = 1e-9;
constexpr double kCoeffTol = 1e-10;
constexpr double kPureTol = 1e-12;
constexpr double kPureConcurrenceTol = 1e-10;
constexpr double kBand = 1e-10;

struct Counterexample {
  int shard = 0;
  long index = 0;
  std::string check;
  double value = 0.0;
  Matrix4 m;
};

struct ShardResult {
  double eig = 0.0;
  double coeff = 0.0;
  double pt = 0.0;
  double concurrence = 0.0;
  long verdict_checks = 0;
  long verdict_disagreements = 0;
  long marginal = 0;
  long breaches = 0;
  std::vector<Counterexample> examples;
};

double max_abs_diff(std::array<double, 4> a, std::array<double, 4> b) {
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

struct Sample {
  Matrix4 m;
  std::optional<PureState> psi;
};

Sample draw(Family f, Rng& rng) {
  switch (f) {
    case Family::Ginibre: return {random_ginibre_state(rng), {}};
    case Family::Hermitian: return {random_hermitian_trace_one(rng), {}};
    case Family::Rank2: return {random_ginibre_state(rng, 2), {}};
    case Family::Rank3: return {random_ginibre_state(rng, 3), {}};
    case Family::Werner: return {random_local_werner(rng), {}};
    case Family::Pure: {
      const PureState psi = random_pure_state(rng);
      return {psi.projector(), psi};
    }
  }
  return {};
}

void check_sample(Family f, const Sample& s, ShardResult& r,
                  const std::function<void(const std::string&, double)>& breach) {
  const Matrix4& m = s.m;
  auto track = [&](double& slot, double err, double tol, const char* name) {
    slot = std::max(slot, err);
    if (!(err <= tol)) breach(name, err);
  };

  track(r.eig, max_abs_diff(eigenvalues(coeffs_from_traces(m)).lambdas, eig_hermitian_oracle(m)),
        kEigTol, "eigenvalues");

  const CharCoeffs fromb = coeffs_from_bloch(to_bloch(m));
  const MonicQuartic flv = charpoly_flv(m);
  track(r.coeff,
        std::max({std::abs(fromb.b0 - flv.c0), std::abs(fromb.b1 - flv.c1),
                  std::abs(fromb.b2 - flv.c2)}),
        kCoeffTol, "bloch_coefficients");

  const bool psd = f != Family::Hermitian;
  const DensityMatrix rho =
      psd ? DensityMatrix::from_matrix(m) : DensityMatrix::hermitian_trace_one(m);
  const SeparabilityReport rep = peres_test(rho);
  const auto pt_oracle = eig_hermitian_oracle(partial_transpose(m));
  track(r.pt, max_abs_diff(rep.pt_eigenvalues, pt_oracle), kEigTol, "pt_eigenvalues");
  if (!psd) return;

  const double lmin = pt_oracle[3];
  if (std::abs(lmin) <= kBand) {
    ++r.marginal;
  } else {
    const bool entangled = lmin < 0.0;
    const EntanglementReport e = entanglement_report(rho);
    ++r.verdict_checks;
    const bool agree = rep.separable == !entangled && (e.concurrence > kBand) == entangled &&
                       (e.negativity > kBand) == entangled;
    if (!agree) {
      ++r.verdict_disagreements;
      breach("verdicts", lmin);
    }
  }

  if (s.psi) {
    const double det = std::abs(s.psi->determinant());
    track(r.pt, max_abs_diff(pure_pt_spectrum(*s.psi), pt_oracle), kPureTol, "pure_pt_spectrum");
    track(r.concurrence, std::abs(concurrence(rho) - 2.0 * det), kPureConcurrenceTol,
          "pure_concurrence");
    ++r.verdict_checks;
    if (pure_separable(*s.psi) != (det <= kBand)) {
      ++r.verdict_disagreements;
      breach("pure_separable", det);
    }
  }
}

ShardResult run_shard(Family f, std::uint64_t seed, int shard, long samples) {
  ShardResult r;
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(shard)));
  for (long i = 0; i < samples; ++i) {
    const Sample s = draw(f, rng);
    auto breach = [&](const std::string& check, double value) {
      ++r.breaches;
      if (r.examples.size() < kCounterexamplesPerShard)
        r.examples.push_back({shard, i, check, value, s.m});
    };
    try {
      check_sample(f, s, r, breach);
    } catch (const Error& e) {
      breach(std::string("exception: ") + e.what(), 0.0);
    }
  }
  return r;
}

int cmd_fuzz(long samples, std::uint64_t seed, Family family, const std::string& family_name,
             std::ostream& out) {
  if (samples < 1) throw PreconditionError("--samples must be at least 1");
  std::vector<ShardResult> results(kShards);
  std::vector<std::thread> workers;
  for (int s = 0; s < kShards; ++s) {
    const long share = samples / kShards + (s < samples % kShards ? 1 : 0);
    workers.emplace_back([&, s, share] { results[s] = run_shard(family, seed, s, share); });
  }
  for (auto& w : workers) w.join();

  ShardResult total;
  std::vector<Counterexample> examples;
  for (const ShardResult& r : results) {
    total.eig = std::max(total.eig, r.eig);
    total.coeff = std::max(total.coeff, r.coeff);
    total.pt = std::max(total.pt, r.pt);
    total.concurrence = std::max(total.concurrence, r.concurrence);
    total.verdict_checks += r.verdict_checks;
    total.verdict_disagreements += r.verdict_disagreements;
    total.marginal += r.marginal;
    total.breaches += r.breaches;
    examples.insert(examples.end(), r.examples.begin(), r.examples.end());
  }

  json ce = json::array();
  for (const Counterexample& c : examples)
    ce.push_back({{"shard", c.shard},
                  {"index", c.index},
                  {"check", c.check},
                  {"value", c.value},
                  {"matrix", matrix_json(c.m)}});
  json doc{{"family", family_name},
           {"samples", samples},
           {"seed", seed},
           {"shards", kShards},
           {"max_eigenvalue_error", total.eig},
           {"max_coefficient_error", total.coeff},
           {"max_pt_eigenvalue_error", total.pt},
           {"verdict_checks", total.verdict_checks},
           {"verdict_disagreements", total.verdict_disagreements},
           {"marginal_skipped", total.marginal},
           {"breaches", total.breaches},
           {"counterexamples", ce}};
  if (family == Family::Pure) doc["max_concurrence_error"] = total.concurrence;
  out << doc.dump(2) << "\n";
  return total.breaches == 0 ? kOk : kBreach;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form spectra, separability and entanglement of two-qubit states",
               "twoqubit"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a state from a JSON file");
  analyze->add_option("file", path, "JSON with one of \"matrix\", \"bloch\", \"pure\"")
      ->required();
  analyze->add_flag("--json", as_json, "Print the report as JSON");

  double q = 0.0;
  double epsilon = 0.0;
  std::optional<int> n;
  std::optional<std::string> sweep;
  bool csv = false;
  auto* chain = app.add_subcommand("chain", "Entanglement transfer along a noisy swap chain");
  chain->add_option("--q", q, "|ad − bc| of the initial pair")->required();
  auto* eps_opt = chain->add_option("--epsilon", epsilon, "Depolarizing noise per step");
  chain->add_option("--n", n, "Also report the critical noise for n steps");
  auto* sweep_opt =
      chain->add_option("--sweep", sweep, "Sweep epsilon as start:stop:step, reporting n_max");
  chain->add_flag("--csv", csv, "CSV instead of JSON");
  eps_opt->excludes(sweep_opt);

  long samples = 0;
  std::uint64_t seed = 0;
  std::string family_name;
  const std::map<std::string, Family> families{
      {"ginibre", Family::Ginibre}, {"hermitian", Family::Hermitian}, {"pure", Family::Pure},
      {"rank2", Family::Rank2},     {"rank3", Family::Rank3},         {"werner", Family::Werner}};
  auto* fuzz = app.add_subcommand("fuzz", "Compare the closed forms against oracles");
  fuzz->add_option("--samples", samples, "Number of random inputs")->required();
  fuzz->add_option("--seed", seed, "Master seed")->required();
  fuzz->add_option("--family", family_name, "Input family")
      ->required()
      ->check(CLI::IsMember({"ginibre", "hermitian", "pure", "rank2", "rank3", "werner"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (*analyze) return cmd_analyze(path, as_json, out);
    if (*chain) {
      if (!*eps_opt && !sweep) throw ParseError("chain needs --epsilon or --sweep");
      if (sweep && n) throw ParseError("--n cannot be combined with --sweep");
      return cmd_chain(q, epsilon, n, sweep, csv, out);
    }
    return cmd_fuzz(samples, seed, families.at(family_name), family_name, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kBreach;
  }
}

}  // namespace twoqubit::cli
