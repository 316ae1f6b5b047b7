// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "furst/measure.hpp"
#include "furst/nonsingular.hpp"
#include "furst/rng.hpp"

namespace furst {

/// Dense computation only; enough for desk-scale systems.
inline constexpr std::size_t kMaxSpectralStates = 4096;

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void add_scaled(const Matrix& other, double scale) {
    if (other.rows_ != rows_ || other.cols_ != cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += scale * other.data_[k];
  }

  std::vector<double> apply(const std::vector<double>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: size mismatch");
    std::vector<double> out(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) acc += data_[i * cols_ + j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  std::vector<double> apply_transpose(const std::vector<double>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("Matrix: size mismatch");
    std::vector<double> out(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[j] += data_[i * cols_ + j] * v[i];
    return out;
  }

  friend Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a.at(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

/// Inner product of L2 of a finite measure: sum of eta(x) f(x) h(x).
inline double eta_inner(const std::vector<double>& eta, const std::vector<double>& f,
                        const std::vector<double>& h) {
  double acc = 0.0;
  for (std::size_t i = 0; i < eta.size(); ++i) acc += eta[i] * f[i] * h[i];
  return acc;
}

/// Adjoint with respect to the eta-weighted inner product:
/// A*(x,y) = eta(y) A(y,x) / eta(x). For a Koopman matrix this realizes
/// pi(g)* = pi(g^-1).
inline Matrix eta_adjoint(const Matrix& m, const std::vector<double>& eta) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t x = 0; x < m.cols(); ++x)
    for (std::size_t y = 0; y < m.rows(); ++y)
      out.at(x, y) = eta[y] * m.at(y, x) / eta[x];
  return out;
}

/// The weighted Koopman matrix of one group element, acting on function
/// values: M[x][y] = sqrt(eta(g^-1 x)/eta(x)) if y = g^-1 x, else 0. Unitary
/// on L2(eta) (check against eta_adjoint, not the plain transpose).
template <typename G>
Matrix koopman(const FiniteNonsingularSystem<G>& system, const typename G::Element& g) {
  const std::size_t n = system.n_states();
  if (n > kMaxSpectralStates)
    throw std::invalid_argument("koopman: state space exceeds the dense cap");
  const auto ginv = system.group().inverse(g);
  Matrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = system.apply(ginv, x);
    m.at(x, y) = std::sqrt(system.eta()[y] / system.eta()[x]);
  }
  return m;
}

/// The Markov operator of a measure: the mu-average of Koopman matrices.
/// Operator norm on L2(eta) never exceeds 1.
template <typename G>
Matrix markov_operator(const FiniteNonsingularSystem<G>& system,
                       const FiniteSupportMeasure<G>& mu) {
  if (!(system.group() == mu.group()))
    throw std::invalid_argument("markov_operator: group mismatch");
  Matrix acc(system.n_states(), system.n_states());
  for (const auto& [g, w] : mu.atoms()) acc.add_scaled(koopman(system, g), w);
  return acc;
}

enum class Subspace { Full, ComplementOfConstants };

/// Largest singular value of M as an operator on L2(eta), optionally
/// compressed to the orthogonal complement of the constant functions.
/// Conjugates into orthonormal coordinates (where Euclidean geometry matches
/// the eta-weighted one) and runs power iteration on M*M. Stops when the
/// eigenvector residual certifies the tolerance, or when the Rayleigh
/// quotient has stalled at machine precision; the quotient converges at the
/// squared rate, which covers clustered top eigenvalues whose residual decay
/// would outlast the iteration cap.
inline double operator_norm(const Matrix& m, Subspace subspace,
                            const std::vector<double>& eta, double tol = 1e-10,
                            std::size_t max_iter = 10000) {
  const std::size_t n = m.rows();
  if (m.cols() != n || eta.size() != n)
    throw std::invalid_argument("operator_norm: square matrix and matching eta required");
  if (n == 1 && subspace == Subspace::ComplementOfConstants) return 0.0;

  std::vector<double> sqrt_eta(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(eta[i] > 0.0))
      throw std::invalid_argument("operator_norm: eta must be strictly positive");
    sqrt_eta[i] = std::sqrt(eta[i]);
  }
  // B = D^(1/2) M D^(-1/2): same operator, orthonormal basis.
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.at(i, j) = sqrt_eta[i] * m.at(i, j) / sqrt_eta[j];

  // Constants correspond to the unit vector sqrt_eta (eta has total mass 1).
  const auto project = [&](std::vector<double>& v) {
    if (subspace != Subspace::ComplementOfConstants) return;
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += sqrt_eta[i] * v[i];
    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * sqrt_eta[i];
  };
  const auto norm2 = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
  };

  std::vector<double> v(n);
  SeedStream start(0x5EC7A11C0FFEEULL);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) v[i] = start.next_unit() - 0.5;
    project(v);
    const double len = norm2(v);
    if (len > 1e-8) {
      for (double& x : v) x /= len;
      break;
    }
  }

  double rho = 0.0;
  double prev_rho = -1.0;
  int stalled = 0;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::vector<double> w = b.apply(v);
    project(w);
    std::vector<double> u = b.apply_transpose(w);
    project(u);

    rho = 0.0;
    for (std::size_t i = 0; i < n; ++i) rho += v[i] * u[i];
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = u[i] - rho * v[i];
      resid += r * r;
    }
    resid = std::sqrt(resid);
    if (resid <= tol * std::max(1.0, std::abs(rho)))
      return std::sqrt(std::max(rho, 0.0));

    stalled = std::abs(rho - prev_rho) <= 4e-16 * std::max(1.0, std::abs(rho))
                  ? stalled + 1
                  : 0;
    if (stalled >= 20) return std::sqrt(std::max(rho, 0.0));
    prev_rho = rho;

    const double len = norm2(u);
    if (len == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / len;
  }
  throw std::runtime_error("operator_norm: power iteration did not converge");
}

struct JensenBound {
  double lhs;  // -2 log <1, pi(g) 1>
  double rhs;  // integral of -log d(g^-1)_* eta / d eta
  bool holds;
};

/// Both sides of the Jensen inequality for one group element, computed
/// exactly on a finite system: -2 log sum_x sqrt(eta(x) eta(g^-1 x)) on the
/// left, the entropy integrand's integral on the right.
template <typename G>
JensenBound jensen_bound_check(const FiniteNonsingularSystem<G>& system,
                               const typename G::Element& g) {
  const auto ginv = system.group().inverse(g);
  const auto& eta = system.eta();
  double overlap = 0.0;
  double rhs = 0.0;
  for (std::size_t x = 0; x < system.n_states(); ++x) {
    overlap += std::sqrt(eta[x] * eta[system.apply(ginv, x)]);
    rhs += eta[x] * -system.log_rn_inv(g, x);
  }
  const double lhs = -2.0 * std::log(overlap);
  return {lhs, rhs, lhs <= rhs + 1e-10};
}

struct AppendixBound {
  double norm;       // ||pi(bar mu)|| on L2(eta)
  double lhs;        // -2 log norm
  double rhs;        // exact entropy under the truncated bar measure
  unsigned trunc_n;
  double tail_mass;
  bool holds;        // lhs <= rhs + tail slack
};

/// The spectral chain on a finite system: the norm of the Markov operator of
/// the truncated geometric average bounds the bar-measure entropy from below
/// via -2 log ||pi(bar mu)|| <= h. The truncation tail is granted as slack.
template <typename G>
AppendixBound appendix_bound_check(const FiniteNonsingularSystem<G>& system,
                                   const FiniteSupportMeasure<G>& mu,
                                   unsigned trunc_n) {
  const auto bar = geometric_bar(mu, trunc_n);
  const Matrix op = markov_operator(system, bar.measure);
  const double norm = operator_norm(op, Subspace::Full, system.eta());
  const double lhs = -2.0 * std::log(norm);
  const double rhs = exact_entropy_finite(system, bar.measure);
  const bool holds = lhs <= rhs + bar.tail_mass + 1e-10;
  return {norm, lhs, rhs, trunc_n, bar.tail_mass, holds};
}

struct GapPoint {
  std::uint32_t n;
  double norm;  // on the complement of constants
  double gap;   // -2 log norm
};

/// Rotation quotients of the integers: for each n, the norm of the averaged
/// Markov operator on Z/n away from constants, and the induced gap. As n
/// grows the norm climbs to 1 and the gap dies.
inline std::vector<GapPoint> cyclic_gap_curve(const std::vector<std::uint32_t>& n_list,
                                              const FiniteSupportMeasure<IntegerGroup>& mu,
                                              unsigned trunc_n) {
  const auto bar = geometric_bar(mu, trunc_n);
  std::vector<GapPoint> out;
  out.reserve(n_list.size());
  for (std::uint32_t n : n_list) {
    if (n < 2) throw std::invalid_argument("cyclic_gap_curve: n must be >= 2");
    const auto system = integer_rotation(n);
    const Matrix op = markov_operator(system, bar.measure);
    const double norm =
        operator_norm(op, Subspace::ComplementOfConstants, system.eta());
    out.push_back({n, norm, -2.0 * std::log(norm)});
  }
  return out;
}

}  // namespace furst
