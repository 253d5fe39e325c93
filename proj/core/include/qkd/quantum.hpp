#pragma once

// Complex Hermitian matrix algebra used throughout: eigendecomposition,
// clipped matrix logarithm, key-map pinching, Uhlmann fidelity and the
// d-dimensional entropy function.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qkd {

using Complex = std::complex<double>;
using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;
using Rvec = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kProjTol = 1e-10;
inline constexpr double kLogFloor = 1e-12;

namespace detail {

inline Cmat sym(const Cmat& a) { return 0.5 * (a + a.adjoint()); }

double herm_deviation(const Cmat& a);
Cmat kron(const Cmat& a, const Cmat& b);
Cmat log_clipped_raw(const Cmat& h, double floor);
Cmat pinch_raw(const Cmat& rho, const std::vector<Cmat>& projectors);

}  // namespace detail

/// Square complex matrix validated to equal its conjugate transpose
/// (max-abs entrywise, tolerance 1e-12).
class HermitianOperator {
 public:
  explicit HermitianOperator(Cmat entries);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Cmat& mat() const { return mat_; }

 private:
  Cmat mat_;
};

/// Unit-trace positive semidefinite operator (trace within 1e-10,
/// eigenvalues >= -1e-10).
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op);
  explicit DensityMatrix(const Cmat& entries) : DensityMatrix(HermitianOperator(entries)) {}

  int dim() const { return op_.dim(); }
  const Cmat& mat() const { return op_.mat(); }
  const HermitianOperator& op() const { return op_; }

 private:
  HermitianOperator op_;
};

/// Ordered complete set of orthogonal projectors; the key-generation
/// measurement driving the pinching channel.
class KeyMap {
 public:
  explicit KeyMap(std::vector<HermitianOperator> projectors);

  int dim() const { return projectors_.front().dim(); }
  std::size_t size() const { return projectors_.size(); }
  const HermitianOperator& operator[](std::size_t i) const { return projectors_[i]; }
  std::vector<Cmat> raw() const;

 private:
  std::vector<HermitianOperator> projectors_;
};

struct EigSystem {
  Rvec eigenvalues;   // ascending
  Cmat eigenvectors;  // columns, unitary
};

/// Eigendecomposition H = V diag(lambda) V^dag, eigenvalues ascending.
EigSystem herm_eig(const HermitianOperator& h);

/// Matrix natural logarithm with eigenvalues clipped at `floor` before
/// taking logs, so rank-deficient states stay finite.
HermitianOperator matrix_log_clipped(const DensityMatrix& rho, double floor = kLogFloor);

/// Key-map dephasing: sum_j Z^j rho Z^j. Trace preserving.
DensityMatrix pinch(const DensityMatrix& rho, const KeyMap& z);

/// Uhlmann fidelity F = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, so F(rho,rho)=1.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Entropy function in dimension d:
///   h(x) = -x log2(x/(d-1)) - (1-x) log2(1-x),  h(0)=0, h(1)=log2(d-1).
double entropy_h_d(double x, int d);

/// Binary entropy, entropy_h_d with d=2.
inline double binary_entropy(double x) { return entropy_h_d(x, 2); }

/// Tensor (Kronecker) product.
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace qkd
