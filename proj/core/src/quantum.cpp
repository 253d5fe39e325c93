#include "qkd/quantum.hpp"

#include <cmath>

namespace qkd {

namespace detail {

double herm_deviation(const Cmat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Cmat kron(const Cmat& a, const Cmat& b) {
  Cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Cmat log_clipped_raw(const Cmat& h, double floor) {
  Eigen::SelfAdjointEigenSolver<Cmat> es(sym(h));
  Rvec w = es.eigenvalues();
  for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = std::log(std::max(w[i], floor));
  return sym(es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint());
}

Cmat pinch_raw(const Cmat& rho, const std::vector<Cmat>& projectors) {
  Cmat out = Cmat::Zero(rho.rows(), rho.cols());
  for (const Cmat& p : projectors) out += p * rho * p;
  return out;
}

}  // namespace detail

HermitianOperator::HermitianOperator(Cmat entries) : mat_(std::move(entries)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0)
    throw std::invalid_argument("HermitianOperator: matrix must be square and nonempty");
  if (detail::herm_deviation(mat_) > kHermTol)
    throw std::invalid_argument("HermitianOperator: matrix is not Hermitian within 1e-12");
  mat_ = detail::sym(mat_);
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  const double tr = op_.mat().trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace must be 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<Cmat> es(op_.mat(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond 1e-10");
}

KeyMap::KeyMap(std::vector<HermitianOperator> projectors) : projectors_(std::move(projectors)) {
  if (projectors_.empty()) throw std::invalid_argument("KeyMap: empty projector list");
  const int d = projectors_.front().dim();
  Cmat sum = Cmat::Zero(d, d);
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const Cmat& p = projectors_[i].mat();
    if (projectors_[i].dim() != d) throw std::invalid_argument("KeyMap: dimension mismatch");
    if ((p * p - p).cwiseAbs().maxCoeff() > kProjTol)
      throw std::invalid_argument("KeyMap: projector not idempotent within 1e-10");
    for (std::size_t j = 0; j < i; ++j)
      if ((p * projectors_[j].mat()).cwiseAbs().maxCoeff() > kProjTol)
        throw std::invalid_argument("KeyMap: projectors not orthogonal within 1e-10");
    sum += p;
  }
  if ((sum - Cmat::Identity(d, d)).cwiseAbs().maxCoeff() > kProjTol)
    throw std::invalid_argument("KeyMap: projectors must sum to identity within 1e-10");
}

std::vector<Cmat> KeyMap::raw() const {
  std::vector<Cmat> out;
  out.reserve(projectors_.size());
  for (const auto& p : projectors_) out.push_back(p.mat());
  return out;
}

EigSystem herm_eig(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Cmat> es(h.mat());
  if (es.info() != Eigen::Success) throw std::runtime_error("herm_eig: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

HermitianOperator matrix_log_clipped(const DensityMatrix& rho, double floor) {
  if (floor <= 0) throw std::invalid_argument("matrix_log_clipped: floor must be positive");
  return HermitianOperator(detail::log_clipped_raw(rho.mat(), floor));
}

DensityMatrix pinch(const DensityMatrix& rho, const KeyMap& z) {
  if (z.dim() != rho.dim()) throw std::invalid_argument("pinch: dimension mismatch");
  return DensityMatrix(detail::sym(detail::pinch_raw(rho.mat(), z.raw())));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Cmat> er(rho.mat());
  Eigen::SelfAdjointEigenSolver<Cmat> es(sigma.mat());
  const Rvec& wr = er.eigenvalues();
  const Rvec& ws = es.eigenvalues();
  const int d = rho.dim();

  // rank-1 shortcut: both pure within tolerance on the second eigenvalue
  if (d >= 2 && std::abs(wr[d - 2]) <= kPsdTol && std::abs(ws[d - 2]) <= kPsdTol) {
    const Complex ov = er.eigenvectors().col(d - 1).adjoint() * es.eigenvectors().col(d - 1);
    return std::min(1.0, std::norm(ov));
  }

  Rvec sq = wr;
  for (Eigen::Index i = 0; i < sq.size(); ++i) sq[i] = std::sqrt(std::max(sq[i], 0.0));
  Cmat sqrt_rho = er.eigenvectors() * sq.asDiagonal() * er.eigenvectors().adjoint();
  Cmat m = sqrt_rho * sigma.mat() * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Cmat> em(detail::sym(m), Eigen::EigenvaluesOnly);
  double tr = 0.0;
  for (Eigen::Index i = 0; i < em.eigenvalues().size(); ++i)
    tr += std::sqrt(std::max(em.eigenvalues()[i], 0.0));
  return std::min(1.0, tr * tr);
}

double entropy_h_d(double x, int d) {
  if (d < 2) throw std::invalid_argument("entropy_h_d: d must be >= 2");
  if (x < 0.0 || x > 1.0) throw std::invalid_argument("entropy_h_d: x must be in [0,1]");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x / (d - 1));
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(detail::kron(a.mat(), b.mat()));
}

}  // namespace qkd
