#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "kgs/grid.hpp"

namespace kgs {

using cplx = std::complex<double>;

/// A field on a GridSpec, represented canonically by its sine-basis spectral
/// coefficients (flat row-major multi-index order). Physical samples are
/// derived views, never the source of truth.
template <class Scalar>
class FieldT {
 public:
  explicit FieldT(GridSpec grid) : grid_(std::move(grid)), coeffs_(grid_.total()) {}
  FieldT(GridSpec grid, std::vector<Scalar> coeffs)
      : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != grid_.total()) throw ShapeError("Field: coefficient count mismatch");
  }

  const GridSpec& grid() const { return grid_; }
  std::size_t size() const { return coeffs_.size(); }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  std::vector<Scalar>& coeffs() { return coeffs_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  FieldT& operator+=(const FieldT& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  FieldT& operator-=(const FieldT& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  FieldT& operator*=(Scalar a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
  }

  friend FieldT operator+(FieldT a, const FieldT& b) { return a += b; }
  friend FieldT operator-(FieldT a, const FieldT& b) { return a -= b; }
  friend FieldT operator*(Scalar a, FieldT f) { return f *= a; }

  /// y += a*x
  void axpy(Scalar a, const FieldT& x) {
    require_same_grid(grid_, x.grid_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += a * x.coeffs_[i];
  }

  double l2() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
  }

 private:
  GridSpec grid_;
  std::vector<Scalar> coeffs_;
};

using RealField = FieldT<double>;
using ComplexField = FieldT<cplx>;

inline ComplexField to_complex(const RealField& f) {
  ComplexField out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = cplx(f[i], 0.0);
  return out;
}

/// L2 inner product (f | g) = sum_k f_k conj(g_k) in the orthonormal basis.
inline cplx inner(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f.grid(), g.grid());
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
  return s;
}

inline double inner(const RealField& f, const RealField& g) {
  require_same_grid(f.grid(), g.grid());
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

}  // namespace kgs
