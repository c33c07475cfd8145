// Copyright 2026 The lpopt Authors
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

#include "commands.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI/CLI.hpp>

#include "lpopt/error.h"
#include "lpopt/hpopt.h"
#include "lpopt/mlopt.h"
#include "lpopt/oracle.h"
#include "lpopt/pqnorm.h"
#include "lpopt/symmetry.h"
#include "lpopt/tensor_io.h"

namespace lpopt::cli {
namespace {

using Clock = std::chrono::system_clock;

Json VecJson(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json VecsJson(const std::vector<Eigen::VectorXd>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(VecJson(v));
  return out;
}

const char* StrategyName(RoundingStrategy s) {
  return s == RoundingStrategy::kKrivine ? "krivine" : "hyperplane";
}

const char* ModeName(OracleMode m) {
  switch (m) {
    case OracleMode::kMl:
      return "ml";
    case OracleMode::kHp:
      return "hp";
    case OracleMode::kPqnorm:
      return "pqnorm";
  }
  return "ml";
}

std::string Timestamp(Clock::time_point t) {
  const std::time_t tt = Clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Common report skeleton; the caller fills in the certificate.
class ReportBuilder {
 public:
  ReportBuilder(std::string command, const CliOptions& opts)
      : start_(Clock::now()) {
    r_.command = std::move(command);
    r_.file = opts.file;
    r_.p = opts.p.ToString();
    r_.seed = opts.cfg.seed;
    const SolverConfig& c = opts.cfg;
    r_.config = {{"tol", c.tol},
                 {"max_iter", c.max_iter},
                 {"trials", c.trials},
                 {"strategy", StrategyName(c.strategy)},
                 {"max_samples", c.max_samples},
                 {"amplified", c.amplified},
                 {"threads", c.threads},
                 {"steps", opts.steps},
                 {"oracle", opts.oracle}};
  }

  void SetInstance(const Tensor& a) {
    r_.dims = a.dims();
    r_.order = a.order();
  }
  Json& certificate() { return r_.certificate; }
  void SetOracle(Json o) { r_.oracle = std::move(o); }

  RunReport Finish() {
    const auto end = Clock::now();
    r_.started_at = Timestamp(start_);
    r_.wall_time_ms =
        std::chrono::duration<double, std::milli>(end - start_).count();
    return std::move(r_);
  }

 private:
  Clock::time_point start_;
  RunReport r_;
};

Json OracleJson(const OracleResult& o, double solver_value) {
  Json j = {{"method", std::string(OracleMethodName(o.method))},
            {"value", o.value},
            {"resolution", o.resolution},
            {"argmax", VecsJson(o.argmax)}};
  if (o.value > 0.0) j["ratio"] = solver_value / o.value;
  return j;
}

bool VertexEnumFits(const Tensor& a) {
  int bits = 0;
  for (int n : a.dims()) bits += n;
  return bits <= 24;
}

OracleResult BestMlOracle(const Tensor& a, const Exponent& p, int steps) {
  if (p.is_infinite() && VertexEnumFits(a)) return ExactMlLinf(a);
  return PolishMl(a, p, GridMl(a, p, steps));
}

OracleResult BestHpOracle(const Tensor& a, const Exponent& p, int steps) {
  return PolishHp(a, p, GridHp(a, p, steps));
}

void RequireSolverP(const Exponent& p) {
  if (!p.is_infinite() && !(p.value() > 2.0)) {
    throw DomainError("p must lie in (2, inf], got " + p.ToString());
  }
}

}  // namespace

RunReport CmdSolveHp(const CliOptions& opts) {
  ReportBuilder rb("solve-hp", opts);
  Tensor a = ReadTensorFile(opts.file, opts.cfg.max_entries);
  rb.SetInstance(a);
  HpInstance inst{SymmetricTensor::Check(std::move(a)), opts.p, opts.cfg};
  const HpCertificate cert = SolveHp(inst, Rng(opts.cfg.seed));
  const int d = inst.tensor.order();
  double factor = 1.0;
  for (int i = 2; i <= d; ++i) factor *= i;
  factor *= std::pow(d, -d);
  Json& c = rb.certificate();
  c["value"] = cert.value;
  c["x_hat"] = VecJson(cert.x_hat);
  c["ml_value"] = cert.ml_value;
  c["parity"] = cert.parity == Parity::kOdd ? "odd" : "even";
  c["beta"] = cert.beta;
  if (cert.parity == Parity::kOdd) {
    c["guarantee"] = {{"statement", "value >= d! d^-d ml_value"},
                      {"bound", factor * cert.ml_value},
                      {"holds", true}};
  } else {
    c["guarantee"] = {
        {"statement",
         "value - min f >= 2 d! d^-d ml_value (min f not computed)"},
        {"factor", 2.0 * factor}};
  }
  c["ml"] = {{"value", cert.ml.value},
             {"relax_value", cert.ml.relax_value},
             {"xs", VecsJson(cert.ml.xs)},
             {"trials_used", cert.ml.trials_used},
             {"sample_cap_hit", cert.ml.sample_cap_hit}};
  if (opts.oracle) {
    rb.SetOracle(OracleJson(BestHpOracle(inst.tensor.tensor(), opts.p,
                                         opts.steps),
                            cert.value));
  }
  return rb.Finish();
}

RunReport CmdSolveMl(const CliOptions& opts) {
  ReportBuilder rb("solve-ml", opts);
  const Tensor a = ReadTensorFile(opts.file, opts.cfg.max_entries);
  rb.SetInstance(a);
  const MlCertificate cert =
      SolveMl(MlInstance{a, opts.p, opts.cfg}, Rng(opts.cfg.seed));
  Json& c = rb.certificate();
  c["value"] = cert.value;
  c["relax_value"] = cert.relax_value;
  c["xs"] = VecsJson(cert.xs);
  c["trials_used"] = cert.trials_used;
  c["sample_cap_hit"] = cert.sample_cap_hit;
  c["sign_flipped"] = cert.sign_flipped;
  if (opts.oracle) {
    rb.SetOracle(OracleJson(BestMlOracle(a, opts.p, opts.steps), cert.value));
  }
  return rb.Finish();
}

RunReport CmdPqnorm(const CliOptions& opts) {
  ReportBuilder rb("pqnorm", opts);
  const Tensor a = ReadTensorFile(opts.file, opts.cfg.max_entries);
  rb.SetInstance(a);
  if (a.order() != 2) throw ShapeError("pqnorm needs an order-2 tensor");
  RequireSolverP(opts.p);
  const Eigen::MatrixXd b = a.ToMatrix();
  const PqNormEstimate est = PqNormLb(b, opts.p, opts.cfg, Rng(opts.cfg.seed));
  Json& c = rb.certificate();
  c["value"] = est.rounded.value;
  c["y"] = VecJson(est.rounded.y);
  c["z"] = VecJson(est.rounded.z);
  c["relax_value"] = est.relaxation.value;
  c["relax_iterations"] = est.relaxation.iterations;
  c["relax_gap"] = est.relaxation.gap;
  c["strategy"] = StrategyName(opts.cfg.strategy);
  c["trials_used"] = est.rounded.trials_used;
  if (opts.oracle) {
    rb.SetOracle(
        OracleJson(BestMlOracle(a, opts.p, opts.steps), est.rounded.value));
  }
  return rb.Finish();
}

RunReport CmdSymmetrize(const CliOptions& opts) {
  ReportBuilder rb("symmetrize", opts);
  const Tensor a = ReadTensorFile(opts.file, opts.cfg.max_entries);
  rb.SetInstance(a);
  const Tensor s = Symmetrize(a, opts.cfg.max_entries);
  WriteTensorFile(opts.out, s);
  rb.certificate() = {{"out", opts.out}, {"dims", s.dims()}};
  return rb.Finish();
}

RunReport CmdOracle(const CliOptions& opts) {
  ReportBuilder rb("oracle", opts);
  const Tensor a = ReadTensorFile(opts.file, opts.cfg.max_entries);
  rb.SetInstance(a);
  OracleResult o;
  switch (opts.mode) {
    case OracleMode::kMl:
      o = BestMlOracle(a, opts.p, opts.steps);
      break;
    case OracleMode::kHp:
      SymmetricTensor::Check(a);
      o = BestHpOracle(a, opts.p, opts.steps);
      break;
    case OracleMode::kPqnorm:
      if (a.order() != 2) throw ShapeError("pqnorm needs an order-2 tensor");
      o = BestMlOracle(a, opts.p, opts.steps);
      break;
  }
  rb.certificate() = OracleJson(o, o.value);
  rb.certificate().erase("ratio");
  rb.certificate()["mode"] = ModeName(opts.mode);
  return rb.Finish();
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kShape:
      return 2;
    case ErrorCode::kDomain:
    case ErrorCode::kDegenerate:
      return 3;
    case ErrorCode::kResource:
      return 4;
    case ErrorCode::kConvergence:
      return 5;
    case ErrorCode::kInternal:
      return 1;
  }
  return 1;
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Approximate maximization of multilinear forms and "
               "homogeneous polynomials over L_p balls"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lpopt 0.1.0");

  const char* env_config = std::getenv("LPOPT_CONFIG");
  app.set_config("--config", env_config ? env_config : "",
                 "INI/TOML file with default flag values "
                 "(default: $LPOPT_CONFIG)");

  CliOptions opts;
  std::string p_text = "inf";
  std::string format = "text";
  std::string strategy = "krivine";
  std::string mode = "ml";
  uint64_t seed = 0;

  app.add_option("--p", p_text, "Norm exponent: rational a/b, decimal or inf")
      ->capture_default_str();
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--trials", opts.cfg.trials, "Rounding trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", opts.cfg.tol, "Relaxation solver tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", opts.cfg.max_iter, "Relaxation iteration cap")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--steps", opts.steps, "Oracle grid steps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--strategy", strategy, "Rounding strategy")
      ->capture_default_str()
      ->check(CLI::IsMember({"hyperplane", "krivine"}));
  app.add_option("--max-samples", opts.cfg.max_samples,
                 "Cap on slot-1 candidates per recursion level")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--max-entries", opts.cfg.max_entries,
                 "Cap on dense tensor entries")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", opts.cfg.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--oracle", opts.oracle, "Compare against a brute-force oracle");

  auto add_file = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("file", opts.file, "Tensor JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    return sub;
  };
  CLI::App* hp = add_file(app.add_subcommand(
      "solve-hp", "Maximize f_A over the L_p ball (A super-symmetric)"));
  CLI::App* ml = add_file(app.add_subcommand(
      "solve-ml", "Maximize F_A over a product of L_p balls"));
  CLI::App* pq = add_file(app.add_subcommand(
      "pqnorm", "Lower-bound the p->q norm of a matrix"));
  CLI::App* sym = add_file(
      app.add_subcommand("symmetrize", "Write sym(A) in tensor JSON format"));
  sym->add_option("--out", opts.out, "Output path")->required();
  CLI::App* orc = add_file(
      app.add_subcommand("oracle", "Run a brute-force oracle"));
  orc->add_option("--mode", mode, "Problem to solve")
      ->capture_default_str()
      ->check(CLI::IsMember({"ml", "hp", "pqnorm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? 0 : 2;
  }

  try {
    opts.p = Exponent::Parse(p_text);
    opts.cfg.seed = seed;
    opts.cfg.strategy = strategy == "krivine" ? RoundingStrategy::kKrivine
                                              : RoundingStrategy::kHyperplane;
    opts.mode = mode == "hp"       ? OracleMode::kHp
                : mode == "pqnorm" ? OracleMode::kPqnorm
                                   : OracleMode::kMl;
    RunReport report;
    if (*hp) {
      report = CmdSolveHp(opts);
    } else if (*ml) {
      report = CmdSolveMl(opts);
    } else if (*pq) {
      report = CmdPqnorm(opts);
    } else if (*sym) {
      report = CmdSymmetrize(opts);
    } else {
      report = CmdOracle(opts);
    }
    out << (format == "json" ? RenderJson(report) : RenderText(report));
    return 0;
  } catch (const Error& e) {
    err << "lpopt: " << ErrorCodeName(e.code()) << " error: " << e.what()
        << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "lpopt: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lpopt::cli
