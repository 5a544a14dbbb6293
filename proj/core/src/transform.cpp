#include "kgs/transform.hpp"

#include <fftw3.h>

#include <array>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>

namespace kgs {
namespace {

// Plan cache. Plans are created once per (dims, kinds) with FFTW_ESTIMATE
// (deterministic plan choice) and executed via the new-array interface.
// Planning is serialized; execution is thread-safe.
struct PlanKey {
  std::array<int, 3> dims;
  std::array<int, 3> kinds;
  int rank;
  bool operator<(const PlanKey& o) const {
    if (rank != o.rank) return rank < o.rank;
    if (dims != o.dims) return dims < o.dims;
    return kinds < o.kinds;
  }
};

class PlanCache {
 public:
  fftw_plan get(const int* dims, const fftw_r2r_kind* kinds, int rank) {
    PlanKey key{{1, 1, 1}, {0, 0, 0}, rank};
    std::size_t n = 1;
    for (int d = 0; d < rank; ++d) {
      key.dims[d] = dims[d];
      key.kinds[d] = static_cast<int>(kinds[d]);
      n *= static_cast<std::size_t>(dims[d]);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<double> in(n), out(n);
    fftw_plan p = fftw_plan_r2r(rank, dims, in.data(), out.data(), kinds,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void run_r2r(const int* dims, const fftw_r2r_kind* kinds, int rank, const double* in,
             double* out) {
  fftw_plan p = cache().get(dims, kinds, rank);
  fftw_execute_r2r(p, const_cast<double*>(in), out);
}

void run_dst(const int* dims, int rank, const double* in, double* out) {
  fftw_r2r_kind kinds[3] = {FFTW_RODFT00, FFTW_RODFT00, FFTW_RODFT00};
  run_r2r(dims, kinds, rank, in, out);
}

double synthesis_scale(const GridSpec& g) {
  double s = 1.0;
  for (int d = 0; d < g.dim(); ++d) s *= std::sqrt(2.0 / g.length(d)) / 2.0;
  return s;
}

double analysis_scale(const GridSpec& g, int pad) {
  double s = 1.0;
  for (int d = 0; d < g.dim(); ++d)
    s *= std::sqrt(g.length(d) / 2.0) / (pad * g.modes(d) + 1);
  return s;
}

// Scatter band coefficients into the (possibly padded) transform buffer.
void embed(const GridSpec& g, const double* coef, int pad, double* buf) {
  const int rank = g.dim();
  int pd[3] = {1, 1, 1};
  std::size_t pn = 1;
  for (int d = 0; d < rank; ++d) {
    pd[d] = pad * g.modes(d);
    pn *= static_cast<std::size_t>(pd[d]);
  }
  std::memset(buf, 0, pn * sizeof(double));
  if (pad == 1) {
    std::memcpy(buf, coef, g.total() * sizeof(double));
    return;
  }
  g.for_each_mode([&](std::size_t flat, const std::array<int, 3>& k) {
    std::size_t idx = 0;
    for (int d = 0; d < rank; ++d) idx = idx * pd[d] + (k[d] - 1);
    buf[idx] = coef[flat];
  });
}

// Gather the low band out of a padded coefficient buffer.
void extract(const GridSpec& g, const double* buf, int pad, double* coef) {
  const int rank = g.dim();
  int pd[3] = {1, 1, 1};
  for (int d = 0; d < rank; ++d) pd[d] = pad * g.modes(d);
  if (pad == 1) {
    std::memcpy(coef, buf, g.total() * sizeof(double));
    return;
  }
  g.for_each_mode([&](std::size_t flat, const std::array<int, 3>& k) {
    std::size_t idx = 0;
    for (int d = 0; d < rank; ++d) idx = idx * pd[d] + (k[d] - 1);
    coef[flat] = buf[idx];
  });
}

std::vector<double> synth_real(const GridSpec& g, const double* coef, int pad) {
  const int rank = g.dim();
  int pd[3] = {1, 1, 1};
  std::size_t pn = 1;
  for (int d = 0; d < rank; ++d) {
    pd[d] = pad * g.modes(d);
    pn *= static_cast<std::size_t>(pd[d]);
  }
  std::vector<double> buf(pn), out(pn);
  embed(g, coef, pad, buf.data());
  run_dst(pd, rank, buf.data(), out.data());
  const double s = synthesis_scale(g);
  for (auto& x : out) x *= s;
  return out;
}

std::vector<double> analyze_real(const GridSpec& g, const std::vector<double>& samples,
                                 int pad) {
  const int rank = g.dim();
  int pd[3] = {1, 1, 1};
  std::size_t pn = 1;
  for (int d = 0; d < rank; ++d) {
    pd[d] = pad * g.modes(d);
    pn *= static_cast<std::size_t>(pd[d]);
  }
  if (samples.size() != pn) throw ShapeError("to_spectral: sample count mismatch");
  std::vector<double> buf(pn), coef(g.total());
  run_dst(pd, rank, samples.data(), buf.data());
  const double s = analysis_scale(g, pad);
  for (auto& x : buf) x *= s;
  extract(g, buf.data(), pad, coef.data());
  return coef;
}

// Derivative along `axis`: the series becomes cosine in that axis. The
// evaluation grid along a cosine axis is REDFT00 of logical size P+1 where
// P = pad*M+1; its output indices 0..P include the two boundary nodes, which
// are stripped so the layout matches the sine-grid samples.
std::vector<double> grad_real(const GridSpec& g, const double* coef, int axis, int pad) {
  const int rank = g.dim();
  int pd[3], bd[3];
  fftw_r2r_kind kinds[3];
  std::size_t bn = 1;
  for (int d = 0; d < rank; ++d) {
    pd[d] = pad * g.modes(d);
    if (d == axis) {
      bd[d] = pd[d] + 2;  // REDFT00 size: nodes j = 0..P with P = pad*M+1
      kinds[d] = FFTW_REDFT00;
    } else {
      bd[d] = pd[d];
      kinds[d] = FFTW_RODFT00;
    }
    bn *= static_cast<std::size_t>(bd[d]);
  }
  std::vector<double> buf(bn, 0.0), out(bn);
  const double fac = M_PI / g.length(axis);
  g.for_each_mode([&](std::size_t flat, const std::array<int, 3>& k) {
    std::size_t idx = 0;
    for (int d = 0; d < rank; ++d) {
      int pos = (d == axis) ? k[d] : k[d] - 1;  // cosine axis: slot k holds mode k
      idx = idx * bd[d] + pos;
    }
    buf[idx] = coef[flat] * (fac * k[axis]);
  });
  run_r2r(bd, kinds, rank, buf.data(), out.data());

  // strip the two endpoint planes of the cosine axis
  std::size_t pn = 1;
  for (int d = 0; d < rank; ++d) pn *= static_cast<std::size_t>(pd[d]);
  std::vector<double> res(pn);
  std::size_t outer = 1, inner = 1;
  for (int d = 0; d < axis; ++d) outer *= static_cast<std::size_t>(bd[d]);
  for (int d = axis + 1; d < rank; ++d) inner *= static_cast<std::size_t>(bd[d]);
  const double s = synthesis_scale(g);
  for (std::size_t o = 0; o < outer; ++o)
    for (int j = 1; j <= pd[axis]; ++j) {
      const double* src = out.data() + (o * bd[axis] + j) * inner;
      double* dst = res.data() + (o * static_cast<std::size_t>(pd[axis]) + (j - 1)) * inner;
      for (std::size_t i = 0; i < inner; ++i) dst[i] = src[i] * s;
    }
  return res;
}

std::vector<double> real_part(const std::vector<cplx>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].real();
  return r;
}
std::vector<double> imag_part(const std::vector<cplx>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].imag();
  return r;
}
std::vector<cplx> join(const std::vector<double>& re, const std::vector<double>& im) {
  std::vector<cplx> c(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) c[i] = cplx(re[i], im[i]);
  return c;
}

}  // namespace

std::vector<double> to_physical(const RealField& f, int pad) {
  return synth_real(f.grid(), f.coeffs().data(), pad);
}

std::vector<cplx> to_physical(const ComplexField& f, int pad) {
  const auto re = real_part(f.coeffs());
  const auto im = imag_part(f.coeffs());
  return join(synth_real(f.grid(), re.data(), pad), synth_real(f.grid(), im.data(), pad));
}

RealField to_spectral(const std::vector<double>& samples, const GridSpec& grid) {
  return RealField(grid, analyze_real(grid, samples, 1));
}

ComplexField to_spectral(const std::vector<cplx>& samples, const GridSpec& grid) {
  return to_spectral_truncated(samples, grid, 1);
}

RealField to_spectral_truncated(const std::vector<double>& samples, const GridSpec& grid,
                                int pad) {
  return RealField(grid, analyze_real(grid, samples, pad));
}

ComplexField to_spectral_truncated(const std::vector<cplx>& samples, const GridSpec& grid,
                                   int pad) {
  auto re = analyze_real(grid, real_part(samples), pad);
  auto im = analyze_real(grid, imag_part(samples), pad);
  std::vector<cplx> c(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) c[i] = cplx(re[i], im[i]);
  return ComplexField(grid, std::move(c));
}

std::vector<double> gradient_samples(const RealField& f, int axis, int pad) {
  if (axis < 0 || axis >= f.grid().dim()) throw ShapeError("gradient_samples: bad axis");
  return grad_real(f.grid(), f.coeffs().data(), axis, pad);
}

std::vector<cplx> gradient_samples(const ComplexField& f, int axis, int pad) {
  if (axis < 0 || axis >= f.grid().dim()) throw ShapeError("gradient_samples: bad axis");
  const auto re = real_part(f.coeffs());
  const auto im = imag_part(f.coeffs());
  return join(grad_real(f.grid(), re.data(), axis, pad),
              grad_real(f.grid(), im.data(), axis, pad));
}

namespace detail {
void dst1(const double* in, double* out, const int* dims, int rank) {
  run_dst(dims, rank, in, out);
}
}  // namespace detail

}  // namespace kgs
