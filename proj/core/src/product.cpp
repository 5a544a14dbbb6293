#include "kgs/product.hpp"

namespace kgs {
namespace {
int pad_of(bool dealias) { return dealias ? 2 : 1; }
}  // namespace

RealField pointwise_product(const RealField& f, const RealField& g, bool dealias) {
  require_same_grid(f.grid(), g.grid());
  const int pad = pad_of(dealias);
  auto a = to_physical(f, pad);
  const auto b = to_physical(g, pad);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return to_spectral_truncated(a, f.grid(), pad);
}

ComplexField pointwise_product(const RealField& f, const ComplexField& g, bool dealias) {
  require_same_grid(f.grid(), g.grid());
  const int pad = pad_of(dealias);
  const auto a = to_physical(f, pad);
  auto b = to_physical(g, pad);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] *= a[i];
  return to_spectral_truncated(b, f.grid(), pad);
}

ComplexField pointwise_product(const ComplexField& f, const RealField& g, bool dealias) {
  return pointwise_product(g, f, dealias);
}

ComplexField pointwise_product(const ComplexField& f, const ComplexField& g, bool dealias) {
  require_same_grid(f.grid(), g.grid());
  const int pad = pad_of(dealias);
  auto a = to_physical(f, pad);
  const auto b = to_physical(g, pad);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return to_spectral_truncated(a, f.grid(), pad);
}

RealField modulus_squared(const ComplexField& u, bool dealias) {
  const int pad = pad_of(dealias);
  const auto a = to_physical(u, pad);
  std::vector<double> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::norm(a[i]);
  return to_spectral_truncated(m, u.grid(), pad);
}

double quad_w_modsq(const RealField& w, const ComplexField& z, bool dealias) {
  require_same_grid(w.grid(), z.grid());
  const int pad = pad_of(dealias);
  const auto ws = to_physical(w, pad);
  const auto zs = to_physical(z, pad);
  double s = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) s += ws[i] * std::norm(zs[i]);
  return s * w.grid().cell_volume(pad);
}

double quad_w_gradsq(const RealField& w, const ComplexField& z, bool dealias) {
  require_same_grid(w.grid(), z.grid());
  const int pad = pad_of(dealias);
  const auto ws = to_physical(w, pad);
  std::vector<double> gsq(ws.size(), 0.0);
  for (int d = 0; d < z.grid().dim(); ++d) {
    const auto dz = gradient_samples(z, d, pad);
    for (std::size_t i = 0; i < gsq.size(); ++i) gsq[i] += std::norm(dz[i]);
  }
  double s = 0.0;
  for (std::size_t i = 0; i < ws.size(); ++i) s += ws[i] * gsq[i];
  return s * w.grid().cell_volume(pad);
}

double quad_pair(const RealField& a, const RealField& b, bool dealias) {
  require_same_grid(a.grid(), b.grid());
  const int pad = pad_of(dealias);
  const auto as = to_physical(a, pad);
  const auto bs = to_physical(b, pad);
  double s = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) s += as[i] * bs[i];
  return s * a.grid().cell_volume(pad);
}

}  // namespace kgs
