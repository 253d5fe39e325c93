#include "qkd/modes.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qkd {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

}  // namespace

double b_coeff(int n, int m, int k) {
  if (n < 0 || m < 0) throw std::invalid_argument("b_coeff: n, m must be nonnegative");
  const int order = n + m;
  if (k < 0 || k > order) throw std::invalid_argument("b_coeff: k out of range [0, n+m]");
  // coefficient of t^k in (1-t)^n (1+t)^m
  double c = 0.0;
  for (int j = std::max(0, k - m); j <= std::min(n, k); ++j)
    c += ((j % 2) ? -1.0 : 1.0) * binomial(n, j) * binomial(m, k - j);
  const double scale =
      std::sqrt(factorial(order - k) * factorial(k) /
                (std::pow(2.0, order) * factorial(n) * factorial(m)));
  return scale * c;
}

ModeBasisMatrix u_matrix(int q, int order) {
  if (q < 0 || q > 2) throw std::invalid_argument("u_matrix: q must be in {0,1,2}");
  if (order < 0) throw std::invalid_argument("u_matrix: order must be nonnegative");
  const int d = order + 1;
  if (q == 2) return {q, order, Cmat::Identity(d, d)};

  const Complex i_unit(0.0, 1.0);
  Cmat u(d, d);
  for (int row = 0; row < d; ++row) {
    const int n = order - row;
    const int m = row;
    for (int k = 0; k < d; ++k) {
      Complex phase = 1.0;
      if (q == 1) phase = std::pow(i_unit, k);
      u(row, k) = phase * b_coeff(n, m, k);
    }
  }
  return {q, order, u};
}

EncodingBasis mode_basis(int q, int order) {
  const Cmat u = u_matrix(q, order).entries;
  std::vector<Cvec> states;
  states.reserve(u.rows());
  for (Eigen::Index r = 0; r < u.rows(); ++r) states.push_back(u.row(r).transpose());
  return EncodingBasis::single_photon("q=" + std::to_string(q), std::move(states));
}

HermitianOperator c_operator(int q, int order) {
  const Cmat u = u_matrix(q, order).entries;
  const int d = order + 1;
  Cmat c = Cmat::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j) {
    const Cvec a = u.row(j).transpose();
    const Cmat p = a * a.adjoint();
    c += detail::kron(p, p.transpose());
  }
  return HermitianOperator(detail::sym(c));
}

HermitianOperator error_operator(int q, int order) {
  const Cmat c = c_operator(q, order).mat();
  return HermitianOperator(Cmat::Identity(c.rows(), c.cols()) - c);
}

double mpub_bias_angle(int order) {
  if (order < 1) throw std::invalid_argument("mpub_bias_angle: order must be >= 1");
  const EncodingBasis b0 = mode_basis(0, order);
  const EncodingBasis b1 = mode_basis(1, order);
  const EncodingBasis b2 = mode_basis(2, order);
  double theta = bias_angle_single_photon(b0, b1);
  theta = std::max(theta, bias_angle_single_photon(b0, b2));
  theta = std::max(theta, bias_angle_single_photon(b1, b2));
  return 2.0 * theta;
}

}  // namespace qkd
