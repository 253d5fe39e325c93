#pragma once

// Bias angles between encoding bases, the correction factor M and the
// modified error rates that feed the optimization constraints.

#include "qkd/quantum.hpp"

#include <string>
#include <vector>

namespace qkd {

/// A basis of d encoding states: unit vectors for a single-photon source,
/// or one complex amplitude per state for a weak coherent source.
class EncodingBasis {
 public:
  enum class Kind { kSinglePhoton, kCoherent };

  static EncodingBasis single_photon(std::string label, std::vector<Cvec> states);
  static EncodingBasis coherent(std::string label, std::vector<Complex> amplitudes);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  int size() const;
  const std::vector<Cvec>& states() const { return states_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }

 private:
  EncodingBasis(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}
  Kind kind_;
  std::string label_;
  std::vector<Cvec> states_;
  std::vector<Complex> amplitudes_;
};

/// Maximum bias angle between two single-photon bases:
///   theta = 1/2 arcsin(max over m,n,p!=n | |<k_m|l_n>|^2 - |<k_m|l_p>|^2 |),
/// in [0, pi/4].
double bias_angle_single_photon(const EncodingBasis& basis_k, const EncodingBasis& basis_l);

struct CoherentBias {
  double theta = 0.0;
  bool saturated = false;  // a vanishing overlap forced theta = pi/4
};

/// Coherent-source bias angle from moduli of log-overlaps:
///   theta = 1/2 max over m,n,p!=n | |ln<k_m|l_n>| - |ln<k_m|l_p>| |,
/// where ln is the principal branch and |.| the complex modulus.
CoherentBias bias_angle_coherent(const EncodingBasis& basis_k, const EncodingBasis& basis_l);

/// <alpha|beta> = exp(-(|alpha|^2+|beta|^2)/2 + conj(alpha)*beta).
Complex coherent_overlap(Complex alpha, Complex beta);

/// M = 1/sqrt(1 + sin^2 theta_b), theta_b in [0, pi/2].
double m_factor(double theta_b);

/// Modified error rate e_ij = (1 - M(1 - 2 e_exp)) / 2.
double modify_error(double e_exp, double theta_b);

/// Bias angle plus its derived quantities.
struct BiasModel {
  double theta;      // [0, pi/4]
  double theta_b;    // = 2 theta
  double m;          // m_factor(theta_b)

  static BiasModel from_theta(double theta);
  static BiasModel from_theta_b(double theta_b);
};

/// Experimentally measured error rate e_exp = (1 - N_ij (1 - 2 Q)) / 2.
/// The event-probability factor N_ij has no fixed functional form in the
/// theory; it is caller-supplied and defaults to 1.
struct ChannelStats {
  double q_ideal;
  double n_ij;
  double e_exp;

  explicit ChannelStats(double q_ideal_, double n_ij_ = 1.0);
};

}  // namespace qkd
