// Copyright 2026 The Groverian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groverian/mixed_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>

#include "groverian/detail/parallel.hpp"
#include "groverian/random.hpp"

namespace groverian {

SeparableEnsemble::SeparableEnsemble(std::vector<double> weights, std::vector<ProductStateParams> terms)
    : weights_(std::move(weights)), terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("separable ensemble needs at least one term");
  if (weights_.size() != terms_.size()) throw std::invalid_argument("separable ensemble: weight/term count mismatch");
  const int n = terms_.front().num_qubits();
  if (n < 1) throw std::invalid_argument("separable ensemble: terms must cover at least one qubit");
  double total = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0.0)) throw std::invalid_argument("separable ensemble: negative weight");
    if (terms_[i].num_qubits() != n) throw std::invalid_argument("separable ensemble: terms differ in qubit count");
    total += weights_[i];
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "separable ensemble weights sum to " << total;
    throw std::invalid_argument(msg.str());
  }
}

KrausSet::KrausSet(int num_qubits, std::vector<std::vector<Matrix2>> operators)
    : num_qubits_(num_qubits), operators_(std::move(operators)) {
  if (num_qubits_ < 1 || num_qubits_ > kMaxMixedQubits + 1) throw std::invalid_argument("Kraus set: qubit count out of range");
  if (operators_.empty()) throw std::invalid_argument("Kraus set: no operators");
  for (const auto& op : operators_) {
    if (static_cast<int>(op.size()) != num_qubits_) throw std::invalid_argument("Kraus set: operator needs one factor per qubit");
  }
  const double residual = completeness_residual();
  if (!(residual <= kStructuralTol)) {
    std::ostringstream msg;
    msg << "Kraus set is not complete: ||sum M^dag M - I||_F = " << residual;
    throw std::invalid_argument(msg.str());
  }
}

Matrix KrausSet::full_operator(int i) const {
  const auto& factors = operators_.at(static_cast<std::size_t>(i));
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

double KrausSet::completeness_residual() const {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  Matrix sum = Matrix::Zero(dim, dim);
  for (int i = 0; i < size(); ++i) {
    const Matrix m = full_operator(i);
    sum.noalias() += m.adjoint() * m;
  }
  return (sum - Matrix::Identity(dim, dim)).norm();
}

int default_ensemble_terms(int num_qubits) {
  return num_qubits >= 3 ? 32 : 1 << (2 * num_qubits);
}

DensityMatrix ensemble_to_density(const SeparableEnsemble& ensemble) {
  const int n = ensemble.num_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix sigma = Matrix::Zero(dim, dim);
  for (int mu = 0; mu < ensemble.num_terms(); ++mu) {
    const PureState a = product_state(ensemble.terms()[static_cast<std::size_t>(mu)]);
    sigma.noalias() += ensemble.weights()[static_cast<std::size_t>(mu)] * (a.amplitudes() * a.amplitudes().adjoint());
  }
  sigma = 0.5 * (sigma + sigma.adjoint());
  return DensityMatrix(n, std::move(sigma));
}

double fidelity_objective(const DensityMatrix& rho, const SeparableEnsemble& ensemble) {
  if (rho.num_qubits() != ensemble.num_qubits()) {
    throw std::invalid_argument("fidelity_objective: density matrix has " + std::to_string(rho.num_qubits()) +
                                " qubits, ensemble has " + std::to_string(ensemble.num_qubits()));
  }
  return fidelity(rho, ensemble_to_density(ensemble));
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Term {
  std::vector<Vector2> qubits;
  double amplitude = 0.0;  // sqrt(P_mu)
};

Vector product_vector(const std::vector<Vector2>& qubits) {
  Vector v = Vector::Ones(1);
  for (const auto& q : qubits) {
    Vector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      next(2 * i) = v(i) * q(0);
      next(2 * i + 1) = v(i) * q(1);
    }
    v = std::move(next);
  }
  return v;
}

Matrix assemble(const std::vector<Term>& terms, Eigen::Index dim) {
  Matrix b(dim, static_cast<Eigen::Index>(terms.size()));
  for (std::size_t mu = 0; mu < terms.size(); ++mu) {
    b.col(static_cast<Eigen::Index>(mu)) = terms[mu].amplitude * product_vector(terms[mu].qubits);
  }
  return b;
}

// rho = R^dag R with R = diag(sqrt(lambda)) V^dag restricted to the numerical
// support of rho. ||sqrt(rho) B||_1 = ||R B||_1, and R B has at most rank(rho)
// rows, so its singular values come from a small, well-conditioned Gram matrix.
Matrix support_factor(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const double cutoff = 1e-14 * std::max(evals.maxCoeff(), 0.0);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) > cutoff) keep.push_back(i);
  }
  Matrix r(static_cast<Eigen::Index>(keep.size()), rho.dim());
  for (std::size_t j = 0; j < keep.size(); ++j) {
    const Eigen::Index i = keep[j];
    r.row(static_cast<Eigen::Index>(j)) = std::sqrt(evals(i)) * solver.eigenvectors().col(i).adjoint();
  }
  return r;
}

struct TraceNormEval {
  double value = 0.0;
  /// R^dag W with W the polar factor of R B: column mu is the vector whose
  /// overlap with column mu of B is linear part of the objective.
  Matrix aligned;
};

TraceNormEval evaluate(const Matrix& factor, const Matrix& b, bool with_alignment) {
  const Matrix k = factor * b;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(k * k.adjoint());
  const Eigen::VectorXd& evals = solver.eigenvalues();
  const double top = std::max(evals.maxCoeff(), 0.0);
  TraceNormEval out;
  Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const double sv = std::sqrt(std::max(evals(i), 0.0));
    out.value += sv;
    if (evals(i) > 1e-16 * top) inv_sv(i) = 1.0 / sv;
  }
  if (with_alignment) {
    const Matrix& u = solver.eigenvectors();
    out.aligned = factor.adjoint() * (u * inv_sv.asDiagonal() * u.adjoint() * k);
  }
  return out;
}

// -||R B||_1 / ||B||_F over unnormalized single-qubit factors v_{mu,k},
// column mu of B being v_{mu,1} (x) ... (x) v_{mu,n}. The objective is
// scale-free, so the weights need no simplex constraint.
class SeparableFidelityCost final : public ceres::FirstOrderFunction {
 public:
  SeparableFidelityCost(const Matrix& factor, int n, int m) : factor_(factor), n_(n), m_(m) {}

  int NumParameters() const override { return 4 * n_ * m_; }

  bool Evaluate(const double* x, double* cost, double* gradient) const override {
    const Eigen::Index dim = factor_.cols();
    std::vector<std::vector<Vector2>> factors(static_cast<std::size_t>(m_));
    Matrix b(dim, m_);
    double norm2 = 0.0;
    for (int mu = 0; mu < m_; ++mu) {
      auto& f = factors[static_cast<std::size_t>(mu)];
      for (int k = 0; k < n_; ++k) {
        const double* v = x + 4 * (mu * n_ + k);
        f.emplace_back(Complex(v[0], v[1]), Complex(v[2], v[3]));
      }
      b.col(mu) = product_vector(f);
      norm2 += b.col(mu).squaredNorm();
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) return false;
    const double norm = std::sqrt(norm2);
    const TraceNormEval eval = evaluate(factor_, b, gradient != nullptr);
    *cost = -eval.value / norm;
    if (gradient == nullptr) return true;

    for (int mu = 0; mu < m_; ++mu) {
      const auto& f = factors[static_cast<std::size_t>(mu)];
      const Vector target = eval.aligned.col(mu);
      for (int kq = 0; kq < n_; ++kq) {
        double others = 1.0;
        for (int j = 0; j < n_; ++j) {
          if (j != kq) others *= f[static_cast<std::size_t>(j)].squaredNorm();
        }
        const Vector2 e = contract_except(target, n_, f, kq);
        const Vector2 grad = -(e / norm - (eval.value / (norm2 * norm)) * others * f[static_cast<std::size_t>(kq)]);
        double* out = gradient + 4 * (mu * n_ + kq);
        out[0] = grad(0).real();
        out[1] = grad(0).imag();
        out[2] = grad(1).real();
        out[3] = grad(1).imag();
      }
    }
    return true;
  }

 private:
  const Matrix& factor_;
  int n_;
  int m_;
};

struct RestartOutcome {
  double fidelity = -1.0;
  std::vector<Term> terms;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;
};

void normalize_amplitudes(std::vector<Term>& terms) {
  double total = 0.0;
  for (const auto& t : terms) total += t.amplitude * t.amplitude;
  if (total > 0.0) {
    for (auto& t : terms) t.amplitude /= std::sqrt(total);
  }
}

RestartOutcome alternating_ascent(const Matrix& factor, int n, int m, const MixedMeasureConfig& config, Rng rng) {
  const Eigen::Index dim = factor.cols();
  RestartOutcome out;
  out.terms.resize(static_cast<std::size_t>(m));
  for (auto& t : out.terms) {
    for (int k = 0; k < n; ++k) {
      const double theta = std::acos(1.0 - 2.0 * rng.uniform());
      const double phi = kTwoPi * rng.uniform();
      t.qubits.emplace_back(std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi));
    }
    t.amplitude = 0.5 + rng.uniform();
  }
  normalize_amplitudes(out.terms);

  double previous = -1.0;
  for (int iter = 0;; ++iter) {
    const TraceNormEval eval = evaluate(factor, assemble(out.terms, dim), true);
    const double fid = eval.value * eval.value;
    out.fidelity = fid;
    out.iterations = iter;
    if (previous >= 0.0) {
      out.residual = fid - previous;
      if (out.residual < config.tol) {
        out.converged = true;
        break;
      }
    }
    if (iter == config.max_iterations) break;
    previous = fid;

    for (std::size_t mu = 0; mu < out.terms.size(); ++mu) {
      auto& t = out.terms[mu];
      const Vector target = eval.aligned.col(static_cast<Eigen::Index>(mu));
      for (int q = 0; q < n; ++q) {
        const Vector2 c = contract_except(target, n, t.qubits, q);
        const double cn = c.norm();
        if (cn > 1e-14) t.qubits[static_cast<std::size_t>(q)] = c / cn;
      }
      const Vector2 c = contract_except(target, n, t.qubits, n - 1);
      t.amplitude = std::abs(t.qubits.back().dot(c));
    }
    normalize_amplitudes(out.terms);
  }
  return out;
}

void quasi_newton_polish(const Matrix& factor, int n, RestartOutcome& outcome, int max_iterations) {
  auto& terms = outcome.terms;
  const int m = static_cast<int>(terms.size());
  std::vector<double> x(static_cast<std::size_t>(4 * n * m));
  for (int mu = 0; mu < m; ++mu) {
    const auto& t = terms[static_cast<std::size_t>(mu)];
    for (int k = 0; k < n; ++k) {
      // The term amplitude rides on the first factor.
      const Vector2 v = (k == 0 ? t.amplitude : 1.0) * t.qubits[static_cast<std::size_t>(k)];
      double* out = x.data() + 4 * (mu * n + k);
      out[0] = v(0).real();
      out[1] = v(0).imag();
      out[2] = v(1).real();
      out[3] = v(1).imag();
    }
  }
  ceres::GradientProblem problem(new SeparableFidelityCost(factor, n, m));
  ceres::GradientProblemSolver::Options options;
  options.line_search_direction_type = ceres::LBFGS;
  options.max_num_iterations = max_iterations;
  options.function_tolerance = 1e-16;
  options.gradient_tolerance = 1e-15;
  options.parameter_tolerance = 1e-16;
  options.logging_type = ceres::SILENT;
  options.minimizer_progress_to_stdout = false;
  ceres::GradientProblemSolver::Summary summary;
  ceres::Solve(options, problem, x.data(), &summary);

  std::vector<Term> polished = terms;
  for (int mu = 0; mu < m; ++mu) {
    auto& t = polished[static_cast<std::size_t>(mu)];
    t.amplitude = 1.0;
    for (int k = 0; k < n; ++k) {
      const double* v = x.data() + 4 * (mu * n + k);
      const Vector2 q(Complex(v[0], v[1]), Complex(v[2], v[3]));
      const double qn = q.norm();
      t.amplitude *= qn;
      if (qn > 0.0) t.qubits[static_cast<std::size_t>(k)] = q / qn;
    }
  }
  normalize_amplitudes(polished);
  const double root = evaluate(factor, assemble(polished, factor.cols()), false).value;
  outcome.iterations += static_cast<int>(summary.iterations.size());
  if (root * root > outcome.fidelity) {
    outcome.residual = root * root - outcome.fidelity;
    outcome.fidelity = root * root;
    outcome.terms = std::move(polished);
  }
  outcome.converged = outcome.converged || summary.termination_type == ceres::CONVERGENCE;
}

SeparableEnsemble to_ensemble(const std::vector<Term>& terms) {
  std::vector<double> weights;
  std::vector<ProductStateParams> params;
  double total = 0.0;
  for (const auto& t : terms) total += t.amplitude * t.amplitude;
  for (const auto& t : terms) {
    weights.push_back(t.amplitude * t.amplitude / total);
    std::vector<BlochAngles> angles;
    for (const auto& q : t.qubits) angles.push_back(ProductStateParams::angles_of(q));
    params.emplace_back(std::move(angles));
  }
  return SeparableEnsemble(std::move(weights), std::move(params));
}

}  // namespace

SeparableFidelityResult max_fidelity_separable(const DensityMatrix& rho, const MixedMeasureConfig& config) {
  const int n = rho.num_qubits();
  if (n > kMaxMixedQubits) {
    throw std::invalid_argument("max_fidelity_separable supports at most " + std::to_string(kMaxMixedQubits) + " qubits");
  }
  if (config.restarts < 1) throw std::invalid_argument("max_fidelity_separable: need at least one restart");
  const int m = config.terms > 0 ? config.terms : default_ensemble_terms(n);
  const Matrix factor = support_factor(rho);

  const Rng root(config.seed);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  detail::parallel_for(config.restarts, config.threads, [&](int r) {
    outcomes[static_cast<std::size_t>(r)] =
        alternating_ascent(factor, n, m, config, root.fork(static_cast<std::uint64_t>(r)));
  });

  // Polish the leading restarts; ties keep the lower restart index.
  std::vector<std::size_t> order(outcomes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return outcomes[a].fidelity > outcomes[b].fidelity; });
  const int polished = std::min<int>(config.polish_restarts, static_cast<int>(order.size()));
  if (config.polish_iterations > 0) {
    detail::parallel_for(polished, config.threads, [&](int i) {
      quasi_newton_polish(factor, n, outcomes[order[static_cast<std::size_t>(i)]], config.polish_iterations);
    });
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].fidelity > outcomes[best].fidelity) best = r;
  }
  const RestartOutcome& win = outcomes[best];
  SeparableEnsemble ensemble = to_ensemble(win.terms);
  // The reported value is the fidelity of the returned ensemble, recomputed
  // from scratch, so it is a certified lower bound.
  const double value = fidelity_objective(rho, ensemble);
  return SeparableFidelityResult{value, std::move(ensemble),
                                 OptimizerDiagnostics{config.restarts, win.iterations, win.converged, win.residual}};
}

MixedMeasureResult groverian_mixed(const DensityMatrix& rho, const MixedMeasureConfig& config) {
  SeparableFidelityResult best = max_fidelity_separable(rho, config);
  return MixedMeasureResult{best.fidelity, groverian_from_probability(best.fidelity), std::move(best.ensemble),
                            best.diagnostics};
}

DensityMatrix werner_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("werner_state: p must lie in [0, 1]");
  Vector singlet = Vector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  Matrix m = p * (singlet * singlet.adjoint()) + (1.0 - p) / 4.0 * Matrix::Identity(4, 4);
  return DensityMatrix(2, std::move(m));
}

Matrix partial_transpose(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("partial_transpose expects a two-qubit operator");
  Matrix out(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
      }
    }
  }
  return out;
}

PptResult ppt_check(const DensityMatrix& rho) {
  if (rho.num_qubits() != 2) throw std::invalid_argument("ppt_check is defined for two-qubit states only");
  const Matrix pt = partial_transpose(rho.matrix());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (pt + pt.adjoint()), Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return PptResult{min_eig >= -1e-12, min_eig};
}

KrausSet random_kraus_set(int num_qubits, int num_terms, std::uint64_t seed) {
  if (num_terms < 1) throw std::invalid_argument("random_kraus_set: need at least one term");
  if (num_qubits < 1 || num_qubits > kMaxMixedQubits + 1) throw std::invalid_argument("random_kraus_set: qubit count out of range");
  Rng rng(seed);

  // Spread the prime factors of num_terms over the qubits.
  std::vector<int> outcomes(static_cast<std::size_t>(num_qubits), 1);
  std::vector<int> primes;
  for (int rest = num_terms, p = 2; rest > 1;) {
    if (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    } else {
      ++p;
    }
  }
  std::sort(primes.rbegin(), primes.rend());
  for (int p : primes) *std::min_element(outcomes.begin(), outcomes.end()) *= p;

  // sqrt of each POVM element, per qubit.
  std::vector<std::vector<Matrix2>> roots(static_cast<std::size_t>(num_qubits));
  for (int k = 0; k < num_qubits; ++k) {
    const int count = outcomes[static_cast<std::size_t>(k)];
    std::vector<Matrix2> positives;
    Matrix2 sum = Matrix2::Zero();
    for (int j = 0; j < count; ++j) {
      const Matrix a = ginibre(2, 2, rng);
      const Matrix2 p = a * a.adjoint();
      positives.push_back(p);
      sum += p;
    }
    Eigen::SelfAdjointEigenSolver<Matrix2> solver(sum);
    const Matrix2 inv_root = solver.eigenvectors() * solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                             solver.eigenvectors().adjoint();
    for (const auto& p : positives) {
      const Matrix2 element = inv_root * p * inv_root;
      roots[static_cast<std::size_t>(k)].push_back(psd_sqrt(element));
    }
  }

  std::vector<std::vector<Matrix2>> operators;
  for (int j = 0; j < num_terms; ++j) {
    std::vector<Matrix2> factors;
    int rest = j;
    // Mixed-radix digits, last qubit least significant.
    std::vector<int> digits(static_cast<std::size_t>(num_qubits));
    for (int k = num_qubits - 1; k >= 0; --k) {
      const int base = outcomes[static_cast<std::size_t>(k)];
      digits[static_cast<std::size_t>(k)] = rest % base;
      rest /= base;
    }
    for (int k = 0; k < num_qubits; ++k) {
      const Matrix2 u = random_unitary(2, rng);
      factors.push_back(u * roots[static_cast<std::size_t>(k)][static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])]);
    }
    operators.push_back(std::move(factors));
  }
  return KrausSet(num_qubits, std::move(operators));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus) {
  if (rho.num_qubits() != kraus.num_qubits()) throw std::invalid_argument("apply_channel: dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (int i = 0; i < kraus.size(); ++i) {
    const Matrix m = kraus.full_operator(i);
    out.noalias() += m * rho.matrix() * m.adjoint();
  }
  out = 0.5 * (out + out.adjoint());
  return DensityMatrix(rho.num_qubits(), std::move(out));
}

}  // namespace groverian
