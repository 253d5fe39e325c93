#include "qkd/bias.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qkd {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNormTol = 1e-10;
}  // namespace

EncodingBasis EncodingBasis::single_photon(std::string label, std::vector<Cvec> states) {
  if (states.empty()) throw std::invalid_argument("EncodingBasis: no states");
  const Eigen::Index d = states.front().size();
  for (const Cvec& s : states) {
    if (s.size() != d) throw std::invalid_argument("EncodingBasis: inconsistent state dimensions");
    if (std::abs(s.norm() - 1.0) > kNormTol)
      throw std::invalid_argument("EncodingBasis: state not normalized within 1e-10");
  }
  EncodingBasis b(Kind::kSinglePhoton, std::move(label));
  b.states_ = std::move(states);
  return b;
}

EncodingBasis EncodingBasis::coherent(std::string label, std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) throw std::invalid_argument("EncodingBasis: no amplitudes");
  EncodingBasis b(Kind::kCoherent, std::move(label));
  b.amplitudes_ = std::move(amplitudes);
  return b;
}

int EncodingBasis::size() const {
  return static_cast<int>(kind_ == Kind::kSinglePhoton ? states_.size() : amplitudes_.size());
}

double bias_angle_single_photon(const EncodingBasis& basis_k, const EncodingBasis& basis_l) {
  if (basis_k.kind() != EncodingBasis::Kind::kSinglePhoton ||
      basis_l.kind() != EncodingBasis::Kind::kSinglePhoton)
    throw std::invalid_argument("bias_angle_single_photon: single-photon bases required");
  if (basis_k.states().front().size() != basis_l.states().front().size())
    throw std::invalid_argument("bias_angle_single_photon: dimension mismatch");

  double best = 0.0;
  for (const Cvec& a : basis_k.states()) {
    std::vector<double> ov;
    ov.reserve(basis_l.states().size());
    for (const Cvec& b : basis_l.states()) ov.push_back(std::norm(Complex(a.adjoint() * b)));
    for (std::size_t n = 0; n < ov.size(); ++n)
      for (std::size_t p = 0; p < ov.size(); ++p)
        if (p != n) best = std::max(best, std::abs(ov[n] - ov[p]));
  }
  return 0.5 * std::asin(std::min(best, 1.0));
}

Complex coherent_overlap(Complex alpha, Complex beta) {
  return std::exp(-(std::norm(alpha) + std::norm(beta)) / 2.0 + std::conj(alpha) * beta);
}

CoherentBias bias_angle_coherent(const EncodingBasis& basis_k, const EncodingBasis& basis_l) {
  if (basis_k.kind() != EncodingBasis::Kind::kCoherent ||
      basis_l.kind() != EncodingBasis::Kind::kCoherent)
    throw std::invalid_argument("bias_angle_coherent: coherent bases required");

  CoherentBias out;
  for (Complex a : basis_k.amplitudes()) {
    std::vector<double> lm;  // |ln <a|b>| per state of basis l
    for (Complex b : basis_l.amplitudes()) {
      const Complex ov = coherent_overlap(a, b);
      if (std::abs(ov) == 0.0) {
        out.saturated = true;
        continue;
      }
      lm.push_back(std::abs(std::log(ov)));
    }
    for (std::size_t n = 0; n < lm.size(); ++n)
      for (std::size_t p = 0; p < lm.size(); ++p)
        if (p != n) out.theta = std::max(out.theta, 0.5 * std::abs(lm[n] - lm[p]));
  }
  if (out.theta > kPi / 4) out.saturated = true;
  if (out.saturated) out.theta = kPi / 4;
  return out;
}

double m_factor(double theta_b) {
  if (theta_b < 0.0 || theta_b > kPi / 2 + 1e-12)
    throw std::invalid_argument("m_factor: theta_b must lie in [0, pi/2]");
  const double s = std::sin(theta_b);
  return 1.0 / std::sqrt(1.0 + s * s);
}

double modify_error(double e_exp, double theta_b) {
  if (e_exp < 0.0 || e_exp > 0.5)
    throw std::invalid_argument("modify_error: e_exp must lie in [0, 1/2]");
  return (1.0 - m_factor(theta_b) * (1.0 - 2.0 * e_exp)) / 2.0;
}

BiasModel BiasModel::from_theta(double theta) {
  if (theta < 0.0 || theta > kPi / 4 + 1e-12)
    throw std::invalid_argument("BiasModel: theta must lie in [0, pi/4]");
  return {theta, 2.0 * theta, m_factor(2.0 * theta)};
}

BiasModel BiasModel::from_theta_b(double theta_b) { return from_theta(theta_b / 2.0); }

ChannelStats::ChannelStats(double q_ideal_, double n_ij_)
    : q_ideal(q_ideal_), n_ij(n_ij_), e_exp((1.0 - n_ij_ * (1.0 - 2.0 * q_ideal_)) / 2.0) {
  if (q_ideal < 0.0 || q_ideal > 0.5)
    throw std::invalid_argument("ChannelStats: Q must lie in [0, 1/2]");
}

}  // namespace qkd
