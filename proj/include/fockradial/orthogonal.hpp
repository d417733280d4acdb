#pragma once

#include "fockradial/rng.hpp"
#include "fockradial/types.hpp"

#include <span>
#include <vector>

namespace fockradial {

/// Real d x d matrix with U^T U = I (to 1e-12), stored row-major.
class OrthogonalMatrix {
public:
  OrthogonalMatrix(std::size_t dim, std::vector<double> row_major);

  static OrthogonalMatrix identity(std::size_t dim);
  /// Rotation by angle in the (0,1) coordinate plane.
  static OrthogonalMatrix plane_rotation(std::size_t dim, double angle);
  /// x_0 -> -x_0.
  static OrthogonalMatrix reflection(std::size_t dim);
  /// Haar-distributed draw: QR of a Gaussian matrix with the signs of R's
  /// diagonal moved into Q. Both determinant signs occur.
  static OrthogonalMatrix random(std::size_t dim, Rng& rng);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  double determinant() const;

  RealPoint apply(std::span<const double> x) const;
  /// Uz = U Re(z) + i U Im(z).
  ComplexPoint apply(std::span<const Complex> z) const;

private:
  std::size_t dim_;
  std::vector<double> entries_;
};

} // namespace fockradial
