#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wigner {

enum class BasisFamily { symmetric_hermite, asymmetric_hermite };

/// Momentum-space basis description: family, truncation size N and the
/// dimensionless constants epsilon (effective Planck constant) and
/// b_strength (potential strength).
struct BasisSpec {
  BasisFamily family = BasisFamily::symmetric_hermite;
  int n_basis = 16;
  double epsilon = 1.0;
  double b_strength = 1.0;

  void validate() const {
    if (n_basis < 1) throw std::invalid_argument("BasisSpec: n_basis must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("BasisSpec: epsilon must be > 0");
    if (!std::isfinite(b_strength)) throw std::invalid_argument("BasisSpec: b_strength must be finite");
  }
};

/// Physicists' Hermite polynomial H_k(v) via the three-term recursion
/// H_{k+1} = 2 v H_k - 2 k H_{k-1}.
inline double hermite_polynomial(int k, double v) {
  if (k < 0) throw std::invalid_argument("hermite_polynomial: k must be >= 0");
  double hm = 1.0;
  if (k == 0) return hm;
  double h = 2.0 * v;
  for (int j = 1; j < k; ++j) {
    const double hn = 2.0 * v * h - 2.0 * j * hm;
    hm = h;
    h = hn;
  }
  return h;
}

/// Orthonormal Hermite function phi_k(v) = e^{-v^2/2} H_k(v) / sqrt(sqrt(pi) 2^k k!).
/// Runs the recursion on phi itself, so all intermediates stay bounded and
/// large k (200 and beyond) neither overflows nor loses the normalization.
inline double hermite_function(int k, double v) {
  if (k < 0) throw std::invalid_argument("hermite_function: k must be >= 0");
  double pm = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * v * v);
  if (k == 0) return pm;
  double p = std::numbers::sqrt2 * v * pm;
  for (int j = 1; j < k; ++j) {
    const double pn = std::sqrt(2.0 / (j + 1)) * v * p - std::sqrt(double(j) / (j + 1)) * pm;
    pm = p;
    p = pn;
  }
  return p;
}

/// Fills out[0..count) with the Gaussian-free parts r_k of the Hermite
/// functions, phi_k(v) = e^{-v^2/2} r_k(v). Splitting the Gaussian off keeps
/// quadrature integrands in polynomial form; Scalar may be complex for
/// contour-shifted integrals.
template <typename Scalar>
inline void scaled_hermite_all(int count, Scalar v, Scalar* out) {
  if (count <= 0) return;
  out[0] = Scalar(std::pow(std::numbers::pi, -0.25));
  if (count == 1) return;
  out[1] = Scalar(std::numbers::sqrt2) * v * out[0];
  for (int j = 1; j + 1 < count; ++j)
    out[j + 1] = Scalar(std::sqrt(2.0 / (j + 1))) * v * out[j] -
                 Scalar(std::sqrt(double(j) / (j + 1))) * out[j - 1];
}

/// Nodes and weights of a Gauss rule for the weight e^{-v^2} on the real line.
struct Quadrature {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-node Gauss-Hermite rule, exact for polynomials of degree <= 2n-1.
/// Nodes are the roots of H_n, obtained as eigenvalues of the symmetric
/// Jacobi matrix with off-diagonals sqrt(k/2); weights come from the squared
/// first components of the eigenvectors scaled by sqrt(pi). The rule is
/// symmetrized about 0 so paired nodes are exact negatives.
inline Quadrature gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = b;
    jacobi(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(jacobi);
  if (solve.info() != Eigen::Success)
    throw std::runtime_error("gauss_hermite: node solve failed to converge at n = " + std::to_string(n));
  Quadrature q;
  q.nodes = solve.eigenvalues();
  q.weights.resize(n);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < n; ++i) {
    const double c = solve.eigenvectors()(0, i);
    q.weights[i] = sqrt_pi * c * c;
  }
  // Eigenvalues arrive ascending; pair up mirrored nodes.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double s = 0.5 * (q.nodes[j] - q.nodes[i]);
    q.nodes[i] = -s;
    q.nodes[j] = s;
    const double w = 0.5 * (q.weights[i] + q.weights[j]);
    q.weights[i] = w;
    q.weights[j] = w;
  }
  if (n % 2 == 1) q.nodes[n / 2] = 0.0;
  return q;
}

/// Basis integrals w_k = \int phi_k(v) dv for the symmetric Hermite family.
/// Substituting v = sqrt(2) u turns the integrand into polynomial times
/// e^{-u^2}, so ceil((N+2)/2) Gauss-Hermite nodes integrate it exactly.
/// Odd k vanish by parity and are set to zero structurally.
inline Eigen::VectorXd basis_integrals(const BasisSpec& spec) {
  spec.validate();
  if (spec.family != BasisFamily::symmetric_hermite)
    throw std::invalid_argument("basis_integrals: requires the symmetric Hermite family");
  const int n = spec.n_basis;
  const Quadrature q = gauss_hermite((n + 2 + 1) / 2);
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd r(n);
  for (int i = 0; i < q.nodes.size(); ++i) {
    const double u = q.nodes[i];
    scaled_hermite_all<double>(n, std::numbers::sqrt2 * u, r.data());
    for (int k = 0; k < n; k += 2) w[k] += std::numbers::sqrt2 * q.weights[i] * r[k];
  }
  return w;
}

}  // namespace wigner
