#pragma once

// Spatial-mode algebra for same-order HG / LG / rotated-HG bases:
// decomposition coefficients b(n,m,k), conversion matrices U_q,
// correlation and error operators, and the MPUB bias angle.

#include "qkd/bias.hpp"
#include "qkd/quantum.hpp"

namespace qkd {

/// Transverse mode index; order N = n + m fixes the encoding dimension d = N+1.
struct ModeIndex {
  int n = 0;
  int m = 0;
  int order() const { return n + m; }
};

/// Real coefficient of the HG decomposition,
///   b(n,m,k) = sqrt((N-k)! k! / (2^N n! m!)) * [t^k] (1-t)^n (1+t)^m,
/// evaluated by exact binomial convolution.
double b_coeff(int n, int m, int k);

/// Conversion matrix U_q for q in {0,1,2} ~ {rotated-HG, LG, HG}.
/// Rows run over (n,m) = (N,0), (N-1,1), ..., (0,N); columns over k;
/// entry (i^k)^q b(n,m,k).  U_2 is the identity.
struct ModeBasisMatrix {
  int q;
  int order;
  Cmat entries;
};

ModeBasisMatrix u_matrix(int q, int order);

/// Basis-q states (rows of U_q) as a single-photon encoding basis.
EncodingBasis mode_basis(int q, int order);

/// Bipartite correlation operator for basis q on the (N+1)^2-dim joint
/// space: C_q = sum_j P_j (x) P_j^T with P_j the j-th basis projector.
/// The transpose on the second factor makes the maximally entangled
/// state perfectly correlated in every basis q.
HermitianOperator c_operator(int q, int order);

/// E_q = I - C_q.
HermitianOperator error_operator(int q, int order);

/// Basis bias angle theta_b = 2*theta, theta maximized over the three
/// distinct basis pairs from {rotated-HG, LG, HG} at this order.
double mpub_bias_angle(int order);

}  // namespace qkd
