#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "kgs/field.hpp"

namespace kgs {

/// Smoothing level n of J_n = (I - Lap/n)^{-1}. n = infinity means J = I.
class RegLevel {
 public:
  explicit RegLevel(std::uint64_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("RegLevel: n must be >= 1 (use infinity())");
  }
  static RegLevel infinity() {
    RegLevel r;
    return r;
  }
  bool is_infinite() const { return n_ == kInf; }
  std::uint64_t n() const { return n_; }
  double value() const {
    return is_infinite() ? std::numeric_limits<double>::infinity()
                         : static_cast<double>(n_);
  }
  std::string str() const { return is_infinite() ? "inf" : std::to_string(n_); }
  bool operator==(const RegLevel& o) const { return n_ == o.n_; }

  /// Encoding used in checkpoints: 0 stands for infinity.
  std::uint64_t encoded() const { return is_infinite() ? 0 : n_; }
  static RegLevel decode(std::uint64_t v) { return v == 0 ? infinity() : RegLevel(v); }

 private:
  RegLevel() : n_(kInf) {}
  static constexpr std::uint64_t kInf = ~0ULL;
  std::uint64_t n_;
};

/// Diagonal spectral operator: (m . f)^_k = m_k f^_k.
template <class Scalar>
struct Multiplier {
  GridSpec grid;
  std::vector<Scalar> values;

  template <class S>
  FieldT<decltype(Scalar{} * S{})> apply(const FieldT<S>& f) const {
    require_same_grid(grid, f.grid());
    FieldT<decltype(Scalar{} * S{})> out(f.grid());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = values[i] * f[i];
    return out;
  }

  Multiplier compose(const Multiplier& o) const {
    require_same_grid(grid, o.grid);
    Multiplier r{grid, values};
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
    return r;
  }
};

using RealMultiplier = Multiplier<double>;
using ComplexMultiplier = Multiplier<cplx>;

/// Per-mode value of J_n: 1/(1 + lambda/n); 1 at n = infinity.
inline double yosida_value(double lambda, const RegLevel& n) {
  return n.is_infinite() ? 1.0 : 1.0 / (1.0 + lambda / n.value());
}

inline RealMultiplier yosida_multiplier(const GridSpec& g, const RegLevel& n) {
  RealMultiplier m{g, std::vector<double>(g.total())};
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < m.values.size(); ++i) m.values[i] = yosida_value(lam[i], n);
  return m;
}

template <class S>
FieldT<S> yosida_apply(const FieldT<S>& f, const RegLevel& n) {
  if (n.is_infinite()) return f;
  FieldT<S> out(f.grid());
  const auto& lam = f.grid().lambda();
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * yosida_value(lam[i], n);
  return out;
}

/// J_n^2, the smoothing actually used by the regularized system.
template <class S>
FieldT<S> yosida_sq_apply(const FieldT<S>& f, const RegLevel& n) {
  if (n.is_infinite()) return f;
  FieldT<S> out(f.grid());
  const auto& lam = f.grid().lambda();
  for (std::size_t i = 0; i < f.size(); ++i) {
    double j = yosida_value(lam[i], n);
    out[i] = f[i] * (j * j);
  }
  return out;
}

/// omega^s with omega = (I - Lap)^{1/2}: multiplier (1 + lambda)^{s/2}.
template <class S>
FieldT<S> omega_apply(const FieldT<S>& f, double s) {
  FieldT<S> out(f.grid());
  const auto& lam = f.grid().lambda();
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = f[i] * std::pow(1.0 + lam[i], 0.5 * s);
  return out;
}

template <class S>
FieldT<S> laplacian_apply(const FieldT<S>& f) {
  FieldT<S> out(f.grid());
  const auto& lam = f.grid().lambda();
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = -lam[i] * f[i];
  return out;
}

/// U(t) = exp(it Lap): multiplier exp(-i lambda_k t). Unitary.
inline ComplexMultiplier schrodinger_propagator(const GridSpec& g, double t) {
  ComplexMultiplier m{g, std::vector<cplx>(g.total())};
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < m.values.size(); ++i)
    m.values[i] = std::polar(1.0, -lam[i] * t);
  return m;
}

/// K(t) = omega^{-1} sin(t omega) and Kdot(t) = cos(t omega).
inline std::pair<RealMultiplier, RealMultiplier> kg_propagator(const GridSpec& g, double t) {
  RealMultiplier k{g, std::vector<double>(g.total())};
  RealMultiplier kd{g, std::vector<double>(g.total())};
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < lam.size(); ++i) {
    double mu = std::sqrt(1.0 + lam[i]);
    k.values[i] = std::sin(t * mu) / mu;
    kd.values[i] = std::cos(t * mu);
  }
  return {std::move(k), std::move(kd)};
}

/// In-place free Klein-Gordon rotation (v, vt) -> (Kd v + K vt, -omega^2 K v + Kd vt).
/// Conserves the per-mode energy (1+lambda)|v_k|^2 + |vt_k|^2 exactly.
inline void kg_rotate(RealField& v, RealField& vt, double t) {
  const auto& lam = v.grid().lambda();
  for (std::size_t i = 0; i < v.size(); ++i) {
    double mu = std::sqrt(1.0 + lam[i]);
    double c = std::cos(t * mu), s = std::sin(t * mu) / mu;
    double nv = c * v[i] + s * vt[i];
    double nvt = -mu * mu * s * v[i] + c * vt[i];
    v[i] = nv;
    vt[i] = nvt;
  }
}

inline void schrodinger_rotate(ComplexField& u, double t) {
  const auto& lam = u.grid().lambda();
  for (std::size_t i = 0; i < u.size(); ++i) u[i] *= std::polar(1.0, -lam[i] * t);
}

}  // namespace kgs
