#include "kgs/data.hpp"

#include <cmath>

#include "kgs/norms.hpp"
#include "kgs/rng.hpp"
#include "kgs/transform.hpp"

namespace kgs {
namespace {

template <class F>
void rescale_h1(F& f, double target) {
  double h1 = norms(f).h1;
  if (h1 > 0.0 && target > 0.0) f *= (target / h1);
}

std::vector<double> node_coords(const GridSpec& g, int axis) {
  int m = g.modes(axis);
  std::vector<double> x(m);
  for (int j = 1; j <= m; ++j) x[j - 1] = j * g.length(axis) / (m + 1);
  return x;
}

}  // namespace

ComplexField smooth_random_complex(const GridSpec& g, std::uint64_t seed,
                                   double h1_amplitude, double decay) {
  Rng rng(seed);
  ComplexField f(g);
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < f.size(); ++i) {
    double w = std::pow(1.0 + lam[i], -decay);
    f[i] = cplx(rng.next_gaussian(), rng.next_gaussian()) * w;
  }
  rescale_h1(f, h1_amplitude);
  return f;
}

RealField smooth_random_real(const GridSpec& g, std::uint64_t seed, double h1_amplitude,
                             double decay) {
  Rng rng(seed);
  RealField f(g);
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = rng.next_gaussian() * std::pow(1.0 + lam[i], -decay);
  rescale_h1(f, h1_amplitude);
  return f;
}

ComplexField rough_random_complex(const GridSpec& g, std::uint64_t seed,
                                  double h1_amplitude, double beta) {
  Rng rng(seed);
  ComplexField f(g);
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < f.size(); ++i) {
    double mag = std::pow(1.0 + lam[i], -beta);
    double ph = 2.0 * M_PI * rng.next_double();
    f[i] = std::polar(mag, ph);
  }
  rescale_h1(f, h1_amplitude);
  return f;
}

RealField rough_random_real(const GridSpec& g, std::uint64_t seed, double h1_amplitude,
                            double beta) {
  Rng rng(seed);
  RealField f(g);
  const auto& lam = g.lambda();
  for (std::size_t i = 0; i < f.size(); ++i) {
    double sign = rng.next_double() < 0.5 ? -1.0 : 1.0;
    f[i] = sign * std::pow(1.0 + lam[i], -beta);
  }
  rescale_h1(f, h1_amplitude);
  return f;
}

RealField gauss_bump(const GridSpec& g, double center_frac, double width_frac,
                     double amplitude) {
  std::vector<std::vector<double>> xs;
  for (int d = 0; d < g.dim(); ++d) xs.push_back(node_coords(g, d));
  std::size_t n = g.total();
  std::vector<double> samples(n);
  std::array<int, 3> m{g.modes(0), g.dim() > 1 ? g.modes(1) : 1,
                       g.dim() > 2 ? g.modes(2) : 1};
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    std::array<int, 3> j{};
    for (int d = g.dim() - 1; d >= 0; --d) {
      j[d] = static_cast<int>(rest % m[d]);
      rest /= m[d];
    }
    double val = 1.0;
    for (int d = 0; d < g.dim(); ++d) {
      double L = g.length(d);
      double x = xs[d][j[d]];
      double c = center_frac * L;
      double w = width_frac * L;
      val *= std::exp(-((x - c) * (x - c)) / (2.0 * w * w)) * std::sin(M_PI * x / L);
    }
    samples[idx] = amplitude * val;
  }
  return to_spectral(samples, g);
}

ComplexField gauss_bump_complex(const GridSpec& g, double center_frac, double width_frac,
                                double amplitude, double phase_winding) {
  RealField base = gauss_bump(g, center_frac, width_frac, amplitude);
  ComplexField out(g);
  if (phase_winding == 0.0) {
    for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i];
    return out;
  }
  // impose a plane-wave-like phase exp(i w x_1 / L_1) on the samples
  auto samples = to_physical(base, 1);
  std::vector<cplx> cs(samples.size());
  std::size_t n1_rest = g.total() / g.modes(0);
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    int j1 = static_cast<int>(idx / n1_rest) + 1;
    double x = j1 * g.length(0) / (g.modes(0) + 1);
    cs[idx] = samples[idx] * std::polar(1.0, phase_winding * x / g.length(0));
  }
  return to_spectral(cs, g);
}

RealField eigenmode(const GridSpec& g, const std::array<int, 3>& k, double amp) {
  RealField f(g);
  f[g.flat_index(k)] = amp;
  return f;
}

ComplexField eigenmode_complex(const GridSpec& g, const std::array<int, 3>& k, cplx amp) {
  ComplexField f(g);
  f[g.flat_index(k)] = amp;
  return f;
}

InitialData make_initial_data(const GridSpec& g, const std::string& family,
                              const DataFamilyParams& p) {
  if (family == "smooth_random") {
    return InitialData(smooth_random_complex(g, p.seed, p.amplitude, p.decay),
                       smooth_random_real(g, p.seed + 1, p.amplitude, p.decay),
                       smooth_random_real(g, p.seed + 2, p.amplitude, p.decay));
  }
  if (family == "rough_random") {
    return InitialData(rough_random_complex(g, p.seed, p.amplitude, p.beta),
                       rough_random_real(g, p.seed + 1, p.amplitude, p.beta),
                       rough_random_real(g, p.seed + 2, p.amplitude, p.beta));
  }
  if (family == "gauss_bump") {
    return InitialData(
        gauss_bump_complex(g, p.center, p.width, p.amplitude, 2.0 * M_PI),
        gauss_bump(g, 1.0 - p.center, p.width, 0.5 * p.amplitude), RealField(g));
  }
  if (family == "two_modes") {
    ComplexField phi = eigenmode_complex(g, {1, 1, 1}, p.amplitude);
    phi.axpy(cplx(0.0, 0.5 * p.amplitude), eigenmode_complex(g, {2, 1, 1}, 1.0));
    RealField psi0 = eigenmode(g, {1, 1, 1}, 0.5 * p.amplitude);
    RealField psi1 = eigenmode(g, {2, 1, 1}, 0.25 * p.amplitude);
    return InitialData(std::move(phi), std::move(psi0), std::move(psi1));
  }
  throw std::invalid_argument("unknown data family: " + family);
}

}  // namespace kgs
