#include "fockradial/orthogonal.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace fockradial {

namespace {

Eigen::MatrixXd as_eigen(std::size_t dim, const std::vector<double>& entries)
{
  Eigen::MatrixXd m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = entries[i * dim + j];
  return m;
}

} // namespace

OrthogonalMatrix::OrthogonalMatrix(std::size_t dim, std::vector<double> row_major)
  : dim_(dim), entries_(std::move(row_major))
{
  require(dim_ >= 1, "OrthogonalMatrix: dim must be >= 1");
  require(entries_.size() == dim_ * dim_, "OrthogonalMatrix: expected dim*dim entries");
  const Eigen::MatrixXd u = as_eigen(dim_, entries_);
  const double defect = (u.transpose() * u - Eigen::MatrixXd::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  require(defect <= 1e-12, "OrthogonalMatrix: U^T U deviates from I by " + std::to_string(defect));
}

OrthogonalMatrix OrthogonalMatrix::identity(std::size_t dim)
{
  std::vector<double> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return OrthogonalMatrix(dim, std::move(e));
}

OrthogonalMatrix OrthogonalMatrix::plane_rotation(std::size_t dim, double angle)
{
  require(dim >= 2, "plane_rotation: needs dim >= 2");
  std::vector<double> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  e[0] = std::cos(angle);
  e[1] = -std::sin(angle);
  e[dim] = std::sin(angle);
  e[dim + 1] = std::cos(angle);
  return OrthogonalMatrix(dim, std::move(e));
}

OrthogonalMatrix OrthogonalMatrix::reflection(std::size_t dim)
{
  std::vector<double> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  e[0] = -1.0;
  return OrthogonalMatrix(dim, std::move(e));
}

OrthogonalMatrix OrthogonalMatrix::random(std::size_t dim, Rng& rng)
{
  Eigen::MatrixXd g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < dim; ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  std::vector<double> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) e[i * dim + j] = q(i, j);
  return OrthogonalMatrix(dim, std::move(e));
}

double OrthogonalMatrix::determinant() const
{
  return as_eigen(dim_, entries_).determinant();
}

RealPoint OrthogonalMatrix::apply(std::span<const double> x) const
{
  require(x.size() == dim_, "OrthogonalMatrix::apply: dimension mismatch");
  RealPoint y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) y[i] += entries_[i * dim_ + j] * x[j];
  return y;
}

ComplexPoint OrthogonalMatrix::apply(std::span<const Complex> z) const
{
  require(z.size() == dim_, "OrthogonalMatrix::apply: dimension mismatch");
  ComplexPoint w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      re += entries_[i * dim_ + j] * z[j].real();
      im += entries_[i * dim_ + j] * z[j].imag();
    }
    w[i] = Complex(re, im);
  }
  return w;
}

} // namespace fockradial
