#pragma once

#include <algorithm>
#include <cmath>

#include "kgs/field.hpp"
#include "kgs/transform.hpp"

namespace kgs {

struct NormSet {
  double l2 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double hm1 = 0.0;
};

/// Sobolev norms as exact weighted coefficient sums:
/// ||f||_{H^s}^2 = sum_k (1+lambda_k)^s |f_k|^2.
template <class S>
NormSet norms(const FieldT<S>& f) {
  const auto& lam = f.grid().lambda();
  double s0 = 0, s1 = 0, s2 = 0, sm = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double a = std::norm(f[i]);
    double w = 1.0 + lam[i];
    s0 += a;
    s1 += w * a;
    s2 += w * w * a;
    sm += a / w;
  }
  return {std::sqrt(s0), std::sqrt(s1), std::sqrt(s2), std::sqrt(sm)};
}

template <class S>
double l2_norm(const FieldT<S>& f) {
  return f.l2();
}

template <class S>
double h1_norm(const FieldT<S>& f) {
  return norms(f).h1;
}

/// ||grad f||_2 = (sum lambda_k |f_k|^2)^{1/2}.
template <class S>
double grad_l2(const FieldT<S>& f) {
  const auto& lam = f.grid().lambda();
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += lam[i] * std::norm(f[i]);
  return std::sqrt(s);
}

/// ||Lap f||_2 = (sum lambda_k^2 |f_k|^2)^{1/2}.
template <class S>
double lap_l2(const FieldT<S>& f) {
  const auto& lam = f.grid().lambda();
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += lam[i] * lam[i] * std::norm(f[i]);
  return std::sqrt(s);
}

/// L^p norm by interior-node quadrature (weight prod_d h_d); p = inf is the
/// grid sup (documented as grid-sup, not the true supremum). Requires p >= 2.
template <class S>
double lp_norm(const FieldT<S>& f, double p, bool dealias = false) {
  if (p < 2.0) throw std::invalid_argument("lp_norm: p must be >= 2");
  const int pad = dealias ? 2 : 1;
  const auto s = to_physical(f, pad);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& x : s) m = std::max(m, std::abs(x));
    return m;
  }
  double acc = 0.0;
  for (const auto& x : s) acc += std::pow(std::abs(x), p);
  return std::pow(acc * f.grid().cell_volume(pad), 1.0 / p);
}

}  // namespace kgs
