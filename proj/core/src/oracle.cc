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

#include "lpopt/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpopt/error.h"
#include "lpopt/norms.h"
#include "lpopt/pqnorm.h"
#include "lpopt/symmetry.h"

namespace lpopt {
namespace {

double Factorial(int d) {
  double f = 1.0;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

// Closed-form best last slot: max_{||z||_p <= 1} w'z = ||w||_q.
double BestLastSlot(const Eigen::VectorXd& w, const Exponent& p,
                    Eigen::VectorXd& z) {
  if (w.cwiseAbs().maxCoeff() == 0.0) {
    z = Eigen::VectorXd::Unit(w.size(), 0);
    return 0.0;
  }
  z = HolderDualOf(w, p);
  return w.dot(z);
}

// Depth-first search over per-slot candidate sets for all but the last slot.
class SlotSearch {
 public:
  SlotSearch(const Exponent& p,
             const std::vector<std::vector<Eigen::VectorXd>>& sets)
      : p_(p), sets_(sets) {}

  void Run(const Tensor& a) {
    current_.clear();
    Visit(a);
  }

  double best_value() const { return best_value_; }
  const std::vector<Eigen::VectorXd>& best() const { return best_; }

 private:
  void Visit(const Tensor& t) {
    if (t.order() == 1) {
      Eigen::VectorXd z;
      const double v = BestLastSlot(t.ToVector(), p_, z);
      if (v > best_value_) {
        best_value_ = v;
        best_ = current_;
        best_.push_back(z);
      }
      return;
    }
    for (const auto& x : sets_[current_.size()]) {
      current_.push_back(x);
      Visit(ContractFirst(t, x));
      current_.pop_back();
    }
  }

  Exponent p_;
  const std::vector<std::vector<Eigen::VectorXd>>& sets_;
  std::vector<Eigen::VectorXd> current_;
  std::vector<Eigen::VectorXd> best_;
  double best_value_ = -std::numeric_limits<double>::infinity();
};

std::vector<Eigen::VectorXd> SignVectors(int n) {
  std::vector<Eigen::VectorXd> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1u ? -1.0 : 1.0;
    out.push_back(x);
  }
  return out;
}

double GridPointCount(int n, int steps) {
  return std::pow(steps + 1.0, n) - std::pow(steps - 1.0, n);
}

OracleResult Finish(const Tensor& a, std::vector<Eigen::VectorXd> argmax,
                    OracleMethod method, double resolution) {
  OracleResult r;
  r.value = EvalMultilinear(a, argmax);
  r.argmax = std::move(argmax);
  r.method = method;
  r.resolution = resolution;
  return r;
}

}  // namespace

std::string_view OracleMethodName(OracleMethod m) {
  switch (m) {
    case OracleMethod::kVertexEnum:
      return "vertex_enum";
    case OracleMethod::kGrid:
      return "grid";
    case OracleMethod::kClosedForm:
      return "closed_form";
  }
  return "unknown";
}

OracleResult ExactMlLinf(const Tensor& a) {
  if (a.order() < 1) throw DomainError("oracle needs order >= 1");
  int bits = 0;
  for (int n : a.dims()) bits += n;
  if (bits > 24) {
    throw ResourceError("vertex enumeration over 2^" + std::to_string(bits) +
                        " sign tuples exceeds the 2^24 gate");
  }
  std::vector<std::vector<Eigen::VectorXd>> sets;
  for (int k = 0; k + 1 < a.order(); ++k) sets.push_back(SignVectors(a.dim(k)));
  SlotSearch search(Exponent::Infinity(), sets);
  search.Run(a);
  return Finish(a, search.best(), OracleMethod::kVertexEnum, 0.0);
}

std::vector<Eigen::VectorXd> SphereGrid(int n, int steps, const Exponent& p) {
  if (n < 1) throw DomainError("grid dimension must be positive");
  if (steps < 1) throw DomainError("grid steps must be positive");
  std::vector<Eigen::VectorXd> out;
  std::vector<int> k(n, 0);
  Eigen::VectorXd x(n);
  while (true) {
    bool on_boundary = false;
    for (int i = 0; i < n; ++i) {
      on_boundary = on_boundary || k[i] == 0 || k[i] == steps;
      x[i] = -1.0 + 2.0 * k[i] / steps;
    }
    if (on_boundary) out.push_back(x / LpNorm(x, p));
    int i = n - 1;
    while (i >= 0 && ++k[i] > steps) k[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

OracleResult GridMl(const Tensor& a, const Exponent& p, int steps) {
  if (a.order() < 1) throw DomainError("oracle needs order >= 1");
  double evals = 1.0;
  for (int k = 0; k + 1 < a.order(); ++k) evals *= GridPointCount(a.dim(k), steps);
  if (evals > kGridBudget) {
    throw ResourceError("grid needs " + std::to_string(evals) +
                        " evaluations, budget is 1e8");
  }
  std::vector<std::vector<Eigen::VectorXd>> sets;
  for (int k = 0; k + 1 < a.order(); ++k) {
    sets.push_back(SphereGrid(a.dim(k), steps, p));
  }
  SlotSearch search(p, sets);
  search.Run(a);
  return Finish(a, search.best(),
                a.order() == 1 ? OracleMethod::kClosedForm : OracleMethod::kGrid,
                a.order() == 1 ? 0.0 : 2.0 / steps);
}

OracleResult PolishMl(const Tensor& a, const Exponent& p,
                      const OracleResult& start, int max_sweeps) {
  const int d = a.order();
  std::vector<Eigen::VectorXd> xs = start.argmax;
  double value = EvalMultilinear(a, xs);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = value;
    for (int k = 0; k < d; ++k) {
      ContractionSpec spec;
      for (int j = 0; j < d; ++j) {
        if (j != k) spec.assignments[j] = xs[j];
      }
      const Eigen::VectorXd w =
          d == 1 ? Eigen::VectorXd(a.ToVector()) : Contract(a, spec).ToVector();
      Eigen::VectorXd z;
      if (BestLastSlot(w, p, z) > w.dot(xs[k])) xs[k] = z;
    }
    value = EvalMultilinear(a, xs);
    if (value - before <= 1e-15 * (1.0 + std::abs(value))) break;
  }
  OracleResult r = Finish(a, std::move(xs), start.method, start.resolution);
  if (r.value < start.value) return start;
  return r;
}

OracleResult GridHp(const Tensor& a, const Exponent& p, int steps) {
  if (!a.IsCubical() || a.order() < 1) {
    throw DomainError("polynomial oracle needs a cubical tensor");
  }
  const int n = a.dim(0);
  if (GridPointCount(n, steps) > kGridBudget) {
    throw ResourceError("grid exceeds the 1e8 evaluation budget");
  }
  const std::vector<Eigen::VectorXd> grid = SphereGrid(n, steps, p);
  double best = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd arg;
  for (const auto& x : grid) {
    const double v =
        EvalMultilinear(a, std::vector<Eigen::VectorXd>(a.order(), x));
    if (v > best) {
      best = v;
      arg = x;
    }
  }
  if (best < 0.0) {
    // Negative on the whole sphere: the ball maximum is at the origin.
    arg = Eigen::VectorXd::Zero(n);
  }
  OracleResult r = Finish(a, std::vector<Eigen::VectorXd>(a.order(), arg),
                          OracleMethod::kGrid, 2.0 / steps);
  r.argmax.resize(1);
  return r;
}

OracleResult PolishHp(const Tensor& a, const Exponent& p,
                      const OracleResult& start, int rounds) {
  if (start.argmax.empty()) return start;
  const int n = a.dim(0);
  auto poly = [&](const Eigen::VectorXd& x) {
    return EvalMultilinear(a, std::vector<Eigen::VectorXd>(a.order(), x));
  };
  Eigen::VectorXd best = start.argmax[0];
  if (LpNorm(best, p) == 0.0) return start;
  double best_value = poly(best);
  // Cube-boundary coordinates of the current point.
  Eigen::VectorXd c = best / best.cwiseAbs().maxCoeff();
  double h = start.resolution > 0.0 ? start.resolution : 0.1;
  for (int round = 0; round < rounds; ++round) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < n; ++i) {
        for (double dir : {-1.0, 1.0}) {
          Eigen::VectorXd trial = c;
          trial[i] += dir * h;
          const double m = trial.cwiseAbs().maxCoeff();
          if (m == 0.0) continue;
          trial /= m;
          const Eigen::VectorXd x = trial / LpNorm(trial, p);
          const double v = poly(x);
          if (v > best_value) {
            best_value = v;
            best = x;
            c = trial;
            moved = true;
          }
        }
      }
    }
    h *= 0.5;
  }
  if (best_value <= start.value) return start;
  OracleResult r = Finish(a, std::vector<Eigen::VectorXd>(a.order(), best),
                          start.method, start.resolution);
  r.argmax.resize(1);
  return r;
}

double FnValue(const std::vector<double>& x, int d, double p) {
  double total = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double term = std::pow(x[i], 1.0 / p);
    for (size_t j = 0; j < x.size(); ++j) {
      if (j != i) term *= std::pow(std::max(d - x[j], 0.0), 1.0 / p);
    }
    total += term;
  }
  return total;
}

FnCheckResult FnCheck(int n, int d, double p, int steps) {
  if (n < 2 || n > d) throw DomainError("f_n needs 2 <= n <= d");
  if (!(p >= 2.0) || std::isinf(p)) throw DomainError("f_n needs finite p >= 2");
  if (steps < 1) throw DomainError("grid steps must be positive");
  if (std::pow(steps + 1.0, n) > kGridBudget) {
    throw ResourceError("grid exceeds the 1e8 evaluation budget");
  }
  FnCheckResult r;
  r.formula = std::pow(d, n / p) * std::pow(n, 1.0 - 1.0 / p) *
              std::pow(1.0 - 1.0 / n, (n - 1.0) / p);
  r.balanced_value = FnValue(std::vector<double>(n, double(d) / n), d, p);
  r.grid_max = -std::numeric_limits<double>::infinity();
  std::vector<int> k(n, 0);
  std::vector<double> x(n);
  while (true) {
    for (int i = 0; i < n; ++i) x[i] = double(d) * k[i] / steps;
    const double v = FnValue(x, d, p);
    if (v > r.grid_max) {
      r.grid_max = v;
      r.argmax = x;
    }
    int i = n - 1;
    while (i >= 0 && ++k[i] > steps) k[i--] = 0;
    if (i < 0) break;
  }
  return r;
}

SymEquivalenceResult SymEquivalenceCheck(const Tensor& a, const Exponent& p,
                                         int steps, double rel_tol) {
  const int d = a.order();
  if (d < 2) throw DomainError("equivalence check needs order >= 2");
  const Tensor s = Symmetrize(a);
  SymEquivalenceResult r;
  if (p.is_infinite()) {
    r.ml_side = Factorial(d) * ExactMlLinf(a).value;
    r.sym_side = ExactMlLinf(s).value;
  } else {
    r.ml_side = Factorial(d) * PolishMl(a, p, GridMl(a, p, steps), 1000).value;
    r.sym_side = std::pow(d, d / p.value()) *
                 PolishMl(s, p, GridMl(s, p, steps), 1000).value;
  }
  const double scale = std::max({std::abs(r.ml_side), std::abs(r.sym_side), 1e-300});
  r.passed = std::abs(r.ml_side - r.sym_side) <= rel_tol * scale;
  return r;
}

}  // namespace lpopt
