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

#include "lpopt/pqnorm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "lpopt/norms.h"

namespace lpopt {
namespace {

constexpr double kKrivineC = 0.88137358701954302523;  // ln(1 + sqrt 2)
constexpr int kMaxDykstra = 2000;
constexpr double kDykstraTol = 1e-10;

// Projection of the vector x onto {t : sum |t_i|^s <= 1}, s > 1. The KKT
// conditions give t_i + lambda s t_i^{s-1} = |x_i|; lambda is found by a
// safeguarded Newton iteration on sum t_i(lambda)^s = 1.
void ProjectLsBall(Eigen::Ref<Eigen::VectorXd> x, double s,
                   double& lambda_hint) {
  const Eigen::Index n = x.size();
  double mass = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) mass += std::pow(std::abs(x[i]), s);
  if (mass <= 1.0) return;

  const Eigen::VectorXd a = x.cwiseAbs();
  Eigen::VectorXd t = a;
  Eigen::VectorXd dt(n);
  // Fills t(lambda) and dt/dlambda; returns sum t^s - 1 and its derivative.
  auto eval = [&](double lambda, double& deriv) {
    double h = -1.0;
    deriv = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a[i] == 0.0) {
        t[i] = 0.0;
        dt[i] = 0.0;
        continue;
      }
      double lo = 0.0;
      double hi = a[i];
      double ti = std::clamp(t[i], 0.0, a[i]);
      if (ti <= 0.0) ti = 0.5 * a[i];
      for (int it = 0; it < 100; ++it) {
        const double pw = std::pow(ti, s - 2.0);
        const double g = ti + lambda * s * pw * ti - a[i];
        if (g > 0) hi = ti; else lo = ti;
        const double dg = 1.0 + lambda * s * (s - 1.0) * pw;
        double next = ti - g / dg;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const bool done = std::abs(next - ti) <= 1e-15 * a[i];
        ti = next;
        if (done || hi - lo <= 1e-15 * a[i]) break;
      }
      t[i] = ti;
      const double pw = std::pow(ti, s - 2.0);
      dt[i] = -s * pw * ti / (1.0 + lambda * s * (s - 1.0) * pw);
      const double ts1 = pw * ti;  // t^{s-1}
      h += ts1 * ti;
      deriv += s * ts1 * dt[i];
    }
    return h;
  };
  // Bracket the root, starting from the caller's hint.
  double deriv = 0.0;
  double lambda = lambda_hint > 0.0 ? lambda_hint : 1.0;
  double lo = 0.0;
  double hi = 0.0;
  double h = eval(lambda, deriv);
  if (h > 0.0) {
    lo = lambda;
    // One Newton step usually lands past the root; fall back to doubling.
    hi = deriv < 0.0 ? lambda - 2.0 * h / deriv : 2.0 * lambda;
    while (eval(hi, deriv) > 0.0) {
      lo = hi;
      hi *= 2.0;
    }
  } else {
    hi = lambda;
    lo = 0.5 * lambda;
    while (lo > 1e-300 && eval(lo, deriv) < 0.0) {
      hi = lo;
      lo *= 0.5;
    }
    if (lo <= 1e-300) lo = 0.0;
  }
  lambda = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    h = eval(lambda, deriv);
    if (std::abs(h) <= 1e-14) break;
    if (h > 0) lo = lambda; else hi = lambda;
    double next = deriv < 0.0 ? lambda - h / deriv : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-15 * hi) break;
    lambda = next;
  }
  lambda_hint = lambda;
  eval(lambda, deriv);
  for (Eigen::Index i = 0; i < n; ++i) {
    x[i] = (x[i] < 0 ? -1.0 : 1.0) * t[i];
  }
}

class VecpProblem {
 public:
  VecpProblem(const Eigen::MatrixXd& b, const Exponent& p)
      : m_(b.rows()), n_(b.cols()), p_(p) {
    const Eigen::Index k = m_ + n_;
    c_ = Eigen::MatrixXd::Zero(k, k);
    c_.topRightCorner(m_, n_) = 0.5 * b;
    c_.bottomLeftCorner(n_, m_) = 0.5 * b.transpose();
    const double e = p.is_infinite() ? 1.0 : 1.0 - 2.0 / p.value();
    diameter_ = 2.0 * (std::pow(static_cast<double>(m_), e) +
                       std::pow(static_cast<double>(n_), e));
  }

  const Eigen::MatrixXd& c() const { return c_; }
  double diameter() const { return diameter_; }

  double Objective(const Eigen::MatrixXd& x) const {
    return (c_.array() * x.array()).sum();
  }

  Eigen::MatrixXd InitialPoint() const {
    const Eigen::Index k = m_ + n_;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      const double size = static_cast<double>(i < m_ ? m_ : n_);
      x(i, i) = p_.is_infinite() ? 1.0 : std::pow(size, -2.0 / p_.value());
    }
    return x;
  }

  static Eigen::MatrixXd ProjectPsd(const Eigen::MatrixXd& x) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (x + x.transpose()));
    const Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
    return eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
  }

  void ProjectDiagonal(Eigen::MatrixXd& x) const {
    Eigen::VectorXd diag = x.diagonal();
    if (p_.is_infinite()) {
      diag = diag.cwiseMax(-1.0).cwiseMin(1.0);
    } else {
      const double s = p_.value() / 2.0;
      ProjectLsBall(diag.head(m_), s, lambda_hint_[0]);
      ProjectLsBall(diag.tail(n_), s, lambda_hint_[1]);
    }
    x.diagonal() = diag;
  }

  // Dykstra alternation between the PSD cone and the diagonal constraint
  // set. Dykstra is block coordinate ascent on the dual, so it converges to
  // the exact projection from any starting increments; `warm_p`, `warm_q`
  // carry them across calls.
  Eigen::MatrixXd Project(const Eigen::MatrixXd& y0, Eigen::MatrixXd& warm_p,
                          Eigen::MatrixXd& warm_q) const {
    Eigen::MatrixXd& p = warm_p;
    Eigen::MatrixXd& q = warm_q;
    Eigen::MatrixXd x = y0 - p - q;
    Eigen::MatrixXd y = x;
    const double scale = 1.0 + y0.norm();
    for (int it = 0; it < kMaxDykstra; ++it) {
      y = ProjectPsd(x + p);
      p = x + p - y;
      Eigen::MatrixXd xn = y + q;
      ProjectDiagonal(xn);
      q = y + q - xn;
      const double move = (xn - x).norm();
      x = std::move(xn);
      if ((x - y).norm() <= kDykstraTol * scale && move <= kDykstraTol * scale) {
        last_dykstra_ = it + 1;
        return Repair(y);
      }
    }
    last_dykstra_ = kMaxDykstra;
    return Repair(y);
  }

  int last_dykstra() const { return last_dykstra_; }

  // Rescales the diagonal blocks of a PSD matrix into the constraint set
  // (X -> D X D with a positive diagonal D, so X stays PSD).
  Eigen::MatrixXd Repair(Eigen::MatrixXd x) const {
    for (auto [off, len] : {std::pair{Eigen::Index{0}, m_}, std::pair{m_, n_}}) {
      const Eigen::VectorXd diag = x.diagonal().segment(off, len).cwiseMax(0.0);
      const double norm =
          p_.is_infinite() ? diag.maxCoeff() : LpNorm(diag, p_.value() / 2.0);
      if (norm > 1.0) {
        const double f = 1.0 / std::sqrt(norm);
        x.middleRows(off, len) *= f;
        x.middleCols(off, len) *= f;
      }
    }
    return x;
  }

 private:
  Eigen::Index m_;
  Eigen::Index n_;
  Exponent p_;
  Eigen::MatrixXd c_;
  double diameter_;
  mutable int last_dykstra_ = 0;
  mutable double lambda_hint_[2] = {0.0, 0.0};
};

// Gram factors of the PSD part of x, with block lengths scaled back into the
// unit L_p ball.
GramSolution Extract(const Eigen::MatrixXd& b, const Eigen::MatrixXd& x,
                     const Exponent& p) {
  const Eigen::Index m = b.rows();
  const Eigen::Index n = b.cols();
  const Eigen::Index k = m + n;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (x + x.transpose()));
  const Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd factor =
      lam.cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();  // k x k

  Eigen::VectorXd lens(k);
  Eigen::MatrixXd dirs(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    lens[i] = factor.col(i).norm();
    if (lens[i] > 0.0) {
      dirs.col(i) = factor.col(i) / lens[i];
    } else {
      dirs.col(i) = Eigen::VectorXd::Unit(k, k - 1);
    }
  }
  GramSolution g;
  g.u_dirs = dirs.leftCols(m);
  g.v_dirs = dirs.rightCols(n);
  g.u_lens = lens.head(m);
  g.v_lens = lens.tail(n);
  // Scaling one block's lengths is X -> D X D, which keeps X PSD.
  for (Eigen::VectorXd* l : {&g.u_lens, &g.v_lens}) {
    const double norm = LpNorm(*l, p);
    if (norm > 1.0) *l /= norm;
  }
  g.value = GramValue(b, g);
  return g;
}

// Sign-rounding directions for each row/column. Krivine maps u and v to unit
// vectors with <phi(u), psi(v)> = sin(c <u, v>), realized through the kernel
// matrix of the truncated odd power series.
Eigen::MatrixXd RoundingVectors(const GramSolution& g,
                                RoundingStrategy strategy) {
  const Eigen::Index m = g.u_dirs.cols();
  const Eigen::Index n = g.v_dirs.cols();
  Eigen::MatrixXd dirs(g.u_dirs.rows(), m + n);
  dirs << g.u_dirs, g.v_dirs;
  if (strategy == RoundingStrategy::kHyperplane) return dirs;

  // c^{2k+1} / (2k+1)!, truncated once the remaining tail is below 1e-8.
  std::vector<double> coef;
  double term = kKrivineC;
  for (int k = 0;; ++k) {
    coef.push_back(term);
    term *= kKrivineC * kKrivineC / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    if (term * 2.0 < 1e-8) break;
  }
  const Eigen::MatrixXd inner = dirs.transpose() * dirs;
  Eigen::MatrixXd kernel(m + n, m + n);
  for (Eigen::Index i = 0; i < m + n; ++i) {
    for (Eigen::Index j = 0; j < m + n; ++j) {
      const bool mixed = (i < m) != (j < m);
      const double t = inner(i, j);
      double sum = 0.0;
      double power = t;
      for (size_t k = 0; k < coef.size(); ++k) {
        const double sign = (mixed && (k % 2 == 1)) ? -1.0 : 1.0;
        sum += sign * coef[k] * power;
        power *= t * t;
      }
      kernel(i, j) = sum;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(kernel);
  const Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd embed =
      lam.cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
  for (Eigen::Index i = 0; i < embed.cols(); ++i) {
    const double norm = embed.col(i).norm();
    if (norm > 0.0) embed.col(i) /= norm;
  }
  return embed;
}

struct TrialResult {
  Eigen::VectorXd y;
  Eigen::VectorXd z;
  double value;
};

TrialResult RunTrial(const Eigen::MatrixXd& b, const GramSolution& g,
                     const Eigen::MatrixXd& vecs, Rng stream) {
  const Eigen::Index m = b.rows();
  const Eigen::Index n = b.cols();
  Eigen::VectorXd gauss(vecs.rows());
  for (Eigen::Index i = 0; i < gauss.size(); ++i) gauss[i] = stream.Normal();
  const Eigen::VectorXd proj = vecs.transpose() * gauss;
  TrialResult r;
  r.y.resize(m);
  r.z.resize(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    r.y[i] = (proj[i] < 0 ? -1.0 : 1.0) * g.u_lens[i];
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    r.z[j] = (proj[m + j] < 0 ? -1.0 : 1.0) * g.v_lens[j];
  }
  r.value = r.y.dot(b * r.z);
  return r;
}

void CheckGram(const Eigen::MatrixXd& b, const GramSolution& g) {
  if (g.u_dirs.cols() != b.rows() || g.v_dirs.cols() != b.cols() ||
      g.u_lens.size() != b.rows() || g.v_lens.size() != b.cols() ||
      g.u_dirs.rows() != g.v_dirs.rows()) {
    throw ShapeError("Gram solution does not match the matrix shape");
  }
}

}  // namespace

double KrivineConstant() { return std::numbers::pi / (2.0 * kKrivineC); }

double GramValue(const Eigen::MatrixXd& b, const GramSolution& g) {
  const Eigen::MatrixXd inner = g.u_dirs.transpose() * g.v_dirs;
  return (g.u_lens.asDiagonal() * (b.array() * inner.array()).matrix() *
          g.v_lens.asDiagonal())
      .sum();
}

GramSolution SolveVecp(const Eigen::MatrixXd& b, const Exponent& p, double tol,
                       int max_iter) {
  if (b.size() == 0) throw ShapeError("empty matrix");
  if (!p.is_infinite() && !(p.value() > 2.0)) {
    throw DomainError("p must lie in (2, inf], got " + p.ToString());
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double scale = b.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw DegenerateError("matrix is zero");
  const Eigen::MatrixXd bs = b / scale;

  VecpProblem prob(bs, p);
  Eigen::MatrixXd x = prob.InitialPoint();
  double f = prob.Objective(x);
  const double cnorm = prob.c().norm();
  double t = 1.0 / cnorm;
  const double t_max = 1e4 / cnorm;
  const double t_min = 1e-6 / cnorm;
  double gap = std::numeric_limits<double>::infinity();
  const Eigen::Index k = b.rows() + b.cols();
  Eigen::MatrixXd dual_p = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd dual_q = Eigen::MatrixXd::Zero(k, k);
  double t_dual = t;
  int iter = 0;
  bool converged = false;
  for (; iter < max_iter; ++iter) {
    Eigen::MatrixXd wp = dual_p * (t / t_dual);
    Eigen::MatrixXd wq = dual_q * (t / t_dual);
    const Eigen::MatrixXd xn = prob.Project(x + t * prob.c(), wp, wq);
    const double fn = prob.Objective(xn);
    if (fn + 1e-15 < f) {
      // Only an inexact projection can lose ground on a linear objective.
      dual_p.setZero();
      dual_q.setZero();
      t *= 0.5;
      if (t < t_min) break;
      continue;
    }
    gap = (xn - x).norm() / t * prob.diameter();
    dual_p = std::move(wp);
    dual_q = std::move(wq);
    t_dual = t;
    x = xn;
    f = fn;
    if (gap <= tol * (1.0 + std::abs(f))) {
      converged = true;
      ++iter;
      break;
    }
    t = std::min(2.0 * t, t_max);
  }
  GramSolution g = Extract(bs, x, p);
  g.value *= scale;
  g.iterations = iter;
  g.gap = gap * scale;
  if (!converged) {
    throw ConvergenceError("vector relaxation did not converge in " +
                               std::to_string(max_iter) + " iterations",
                           std::move(g));
  }
  return g;
}

std::vector<double> RoundingTrialValues(const Eigen::MatrixXd& b,
                                        const GramSolution& g,
                                        RoundingStrategy strategy, int trials,
                                        const Rng& rng) {
  CheckGram(b, g);
  const Eigen::MatrixXd vecs = RoundingVectors(g, strategy);
  std::vector<double> values(std::max(trials, 0));
  for (int t = 0; t < trials; ++t) {
    values[t] = RunTrial(b, g, vecs, rng.Stream(t)).value;
  }
  return values;
}

RoundedPair RoundGram(const Eigen::MatrixXd& b, const GramSolution& g,
                      RoundingStrategy strategy, int trials, const Rng& rng) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  CheckGram(b, g);
  const Eigen::MatrixXd vecs = RoundingVectors(g, strategy);
  RoundedPair best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    TrialResult r = RunTrial(b, g, vecs, rng.Stream(t));
    if (r.value > best.value) {
      best.y = std::move(r.y);
      best.z = std::move(r.z);
      best.value = r.value;
    }
  }
  best.trials_used = trials;
  return best;
}

Eigen::VectorXd HolderDual(const Eigen::VectorXd& y, double q) {
  if (!(q >= 1.0)) throw DomainError("Holder exponent q must be >= 1");
  const double m = y.size() == 0 ? 0.0 : y.cwiseAbs().maxCoeff();
  if (m == 0.0) throw DomainError("Holder dual of a zero vector");
  Eigen::VectorXd x(y.size());
  if (q == 1.0) {
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      x[i] = y[i] > 0 ? 1.0 : (y[i] < 0 ? -1.0 : 0.0);
    }
    return x;
  }
  const Eigen::VectorXd ys = y / m;
  const double denom = std::pow(LpNorm(ys, q), q - 1.0);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double mag = std::pow(std::abs(ys[i]), q - 1.0) / denom;
    x[i] = ys[i] < 0 ? -mag : mag;
  }
  return x;
}

Eigen::VectorXd HolderDualOf(const Eigen::VectorXd& y, const Exponent& p) {
  return HolderDual(y, p.conjugate());
}

PqNormEstimate PqNormLb(const Eigen::MatrixXd& b, const Exponent& p,
                        const SolverConfig& cfg, const Rng& rng) {
  PqNormEstimate est;
  est.relaxation = SolveVecp(b, p, cfg.tol, cfg.max_iter);
  est.rounded = RoundGram(b, est.relaxation, cfg.strategy, cfg.trials, rng);
  return est;
}

}  // namespace lpopt
