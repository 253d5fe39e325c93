#pragma once

// Fiber and twin-field channel models, vacuum+weak decoy-state bounds and
// the quantum-coin phase-error correction.

#include "qkd/quantum.hpp"

namespace qkd {

struct ChannelParams {
  double y0;               // background / dark count probability
  double alpha_db_per_km;  // fiber attenuation
  double e_d;              // intrinsic detector error probability
  double eta_det;          // detection efficiency
  double f_ec;             // error-correction inefficiency

  void validate() const;
};

struct DecoyIntensities {
  double mu;
  double nu;
  double omega = 0.0;

  void validate() const;  // mu > nu > omega >= 0
};

struct GainQber {
  double gain = 0.0;
  double qber = 0.5;
};

/// Overall gain and QBER at one intensity:
///   eta = eta_det 10^(-alpha L / 10),
///   Q   = Y0 + 1 - exp(-eta mu),
///   E Q = Y0/2 + e_d (1 - exp(-eta mu)).
/// Q = 0 yields E = 1/2 by convention.
GainQber simulate_gain_qber(const ChannelParams& ch, double intensity, double distance_km);

struct DecoyEstimates {
  double q_mu, e_mu;
  double q_nu, e_nu;
  double y1_lower = 0.0;  // lower bound on the single-photon yield
  double e1_upper = 0.5;  // upper bound on the single-photon error
  double q1 = 0.0;        // Q_1 = Y_1^L mu e^(-mu)
  bool has_yield = false; // false when the bound gives Y_1^L <= 0
  bool gain_anomaly = false;  // Q_nu e^nu >= Q_mu e^mu (allowed, flagged)
};

/// Vacuum+weak decoy bounds from measured signal/decoy statistics:
///   Y1^L = mu/(mu nu - nu^2) (Q_nu e^nu - Q_mu e^mu nu^2/mu^2
///                             - (mu^2-nu^2)/mu^2 Y0),
///   e1^U = (E_nu Q_nu e^nu - Y0/2) / (Y1^L nu),
/// clamped to [0,1] and [0,1/2].
DecoyEstimates vacuum_weak_bounds(const GainQber& at_mu, const GainQber& at_nu, double y0,
                                  double mu, double nu);

/// Delta = (1 - F(rho_z, rho_x)) / 2 in [0, 1/2].
double fidelity_imbalance(const DensityMatrix& rho_z, const DensityMatrix& rho_x);

struct GllpParams {
  double delta_fid;        // quantum-coin imbalance Delta
  double delta_prime;      // min(Delta / Y1^L, 1/2)
  double e_phase_upper;    // corrected phase error, clamped to 1/2
  double e_phase_relaxed;  // looser bound e1 + 4 Delta' + 4 sqrt(Delta' e1)
};

/// Quantum-coin phase error:
///   e_ph = e1 + 4 D'(1-D')(1-2 e1) + 4 (1-2D') sqrt(D'(1-D') e1 (1-e1)),
/// with D' = min(Delta / Y1^L, 1/2). Requires Y1^L > 0.
GllpParams gllp_phase_error(double e1_upper, double delta_fid, double y1_lower);

/// Intrinsic error of phase post-selection into 1/M1 slices:
/// the average of sin^2(phi/2) over a slice, (1 - (M1/pi) sin(pi/M1))/2.
double tf_slice_error(int phase_slices);

/// Twin-field gain/QBER: per-arm transmittance eta_arm = eta_det
/// 10^(-alpha (L/2)/10), detected mean photon number mu_tot =
/// (mu_a+mu_b) eta_arm, Q = 1 - (1-2 P_d) exp(-mu_tot) with P_d = ch.y0.
GainQber tf_gain_qber(const ChannelParams& ch, double mu_a, double mu_b, double distance_km,
                      int phase_slices);

struct TfSinglePhoton {
  double y1;
  double e1;
  double q1;
};

/// Single-photon statistics of the twin-field link under the infinite-decoy
/// idealization used in Test mode: Y1 = 1 - (1-2 P_d)(1-eta_arm),
/// e1 = (e_slice eta_arm + P_d (1-eta_arm)) / Y1, Q1 = mu_s e^(-mu_s) Y1.
TfSinglePhoton tf_single_photon(const ChannelParams& ch, double mu_a, double mu_b,
                                double distance_km, int phase_slices);

}  // namespace qkd
