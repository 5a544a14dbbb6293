#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

namespace kgs {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dirichlet box (0,L_1)x...x(0,L_N) discretized in the sine eigenbasis.
/// Mode k (k_d = 1..M_d) has eigenvalue lambda_k = sum_d (pi k_d / L_d)^2
/// of -Laplace, and the collocation nodes are x_j = j L_d / (M_d + 1).
class GridSpec {
 public:
  GridSpec(int dim, std::array<int, 3> modes, std::array<double, 3> lengths)
      : dim_(dim), modes_(modes), lengths_(lengths) {
    if (dim < 1 || dim > 3) throw ShapeError("GridSpec: dim must be 1, 2 or 3");
    for (int d = 0; d < dim; ++d) {
      if (modes_[d] < 4) throw ShapeError("GridSpec: need at least 4 modes per axis");
      if (!(lengths_[d] > 0.0)) throw ShapeError("GridSpec: lengths must be positive");
    }
    for (int d = dim; d < 3; ++d) {
      modes_[d] = 1;
      lengths_[d] = 1.0;
    }
    std::size_t n = total();
    auto lam = std::make_shared<std::vector<double>>(n);
    for_each_mode([&](std::size_t flat, const std::array<int, 3>& k) {
      double s = 0.0;
      for (int d = 0; d < dim_; ++d) {
        double w = M_PI * k[d] / lengths_[d];
        s += w * w;
      }
      (*lam)[flat] = s;
    });
    lambda_ = std::move(lam);
  }

  static GridSpec make_1d(int m, double len) { return {1, {m, 1, 1}, {len, 1, 1}}; }
  static GridSpec make_2d(int m1, int m2, double l1, double l2) {
    return {2, {m1, m2, 1}, {l1, l2, 1}};
  }
  static GridSpec make_3d(int m, double len) { return {3, {m, m, m}, {len, len, len}}; }

  int dim() const { return dim_; }
  int modes(int d) const { return modes_[d]; }
  double length(int d) const { return lengths_[d]; }

  std::size_t total() const {
    std::size_t n = 1;
    for (int d = 0; d < dim_; ++d) n *= static_cast<std::size_t>(modes_[d]);
    return n;
  }

  /// Eigenvalues of -Laplace, flat row-major order (first axis slowest).
  const std::vector<double>& lambda() const { return *lambda_; }

  /// Quadrature cell volume prod_d L_d/(pad*M_d + 1) for pad-times refined sampling.
  double cell_volume(int pad = 1) const {
    double v = 1.0;
    for (int d = 0; d < dim_; ++d) v *= lengths_[d] / (pad * modes_[d] + 1);
    return v;
  }

  std::size_t padded_total(int pad) const {
    std::size_t n = 1;
    for (int d = 0; d < dim_; ++d) n *= static_cast<std::size_t>(pad * modes_[d]);
    return n;
  }

  std::size_t flat_index(const std::array<int, 3>& k) const {
    std::size_t idx = 0;
    for (int d = 0; d < dim_; ++d) idx = idx * modes_[d] + (k[d] - 1);
    return idx;
  }

  template <class F>
  void for_each_mode(F&& f) const {
    std::array<int, 3> k{1, 1, 1};
    std::size_t flat = 0;
    for (k[0] = 1; k[0] <= modes_[0]; ++k[0])
      for (k[1] = 1; k[1] <= modes_[1]; ++k[1])
        for (k[2] = 1; k[2] <= modes_[2]; ++k[2]) f(flat++, k);
  }

  bool operator==(const GridSpec& o) const {
    if (dim_ != o.dim_) return false;
    for (int d = 0; d < dim_; ++d)
      if (modes_[d] != o.modes_[d] || lengths_[d] != o.lengths_[d]) return false;
    return true;
  }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }

 private:
  int dim_;
  std::array<int, 3> modes_;
  std::array<double, 3> lengths_;
  std::shared_ptr<const std::vector<double>> lambda_;
};

inline void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (a != b) throw ShapeError("grid mismatch");
}

}  // namespace kgs
