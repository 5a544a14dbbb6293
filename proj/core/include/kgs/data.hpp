#pragma once

#include <cstdint>

#include "kgs/state.hpp"

namespace kgs {

// Initial-data library. Every family is a finite sine combination or a
// boundary-compatible bump sampled into the band, so smooth families lie in
// D(Lap) by construction and rough families have the advertised regularity.

/// Seeded coefficients c_k = g_k (1+lambda_k)^{-decay}, rescaled so the H^1
/// norm equals `h1_amplitude`. decay >= 2 keeps the data comfortably in D(Lap).
ComplexField smooth_random_complex(const GridSpec& g, std::uint64_t seed,
                                   double h1_amplitude, double decay = 3.0);
RealField smooth_random_real(const GridSpec& g, std::uint64_t seed, double h1_amplitude,
                             double decay = 3.0);

/// Coefficients with algebraic decay (1+lambda)^{-beta} and random signs,
/// beta such that the family stays bounded in H^1 while the H^2 weight sum
/// diverges as the band widens (H_0^1 \ H^2 regularity).
ComplexField rough_random_complex(const GridSpec& g, std::uint64_t seed,
                                  double h1_amplitude, double beta = 1.2);
RealField rough_random_real(const GridSpec& g, std::uint64_t seed, double h1_amplitude,
                            double beta = 1.2);

/// Gaussian bump times prod_d sin(pi x_d / L_d), sampled and projected.
RealField gauss_bump(const GridSpec& g, double center_frac, double width_frac,
                     double amplitude);
ComplexField gauss_bump_complex(const GridSpec& g, double center_frac, double width_frac,
                                double amplitude, double phase_winding = 0.0);

/// Single unit eigenmode e_k.
RealField eigenmode(const GridSpec& g, const std::array<int, 3>& k, double amp = 1.0);
ComplexField eigenmode_complex(const GridSpec& g, const std::array<int, 3>& k,
                               cplx amp = 1.0);

struct DataFamilyParams {
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  double decay = 3.0;   // smooth_random
  double beta = 1.2;    // rough_random
  double center = 0.4;  // gauss_bump
  double width = 0.12;  // gauss_bump
};

/// Named families used by configs: "smooth_random", "rough_random",
/// "gauss_bump", "two_modes". Throws std::invalid_argument on unknown names.
InitialData make_initial_data(const GridSpec& g, const std::string& family,
                              const DataFamilyParams& p);

}  // namespace kgs
