#pragma once

#include <vector>

#include "kgs/field.hpp"

namespace kgs {

// Sine-basis synthesis/analysis built on FFTW's DST-I (RODFT00).
// With the orthonormal basis e_k = prod_d sqrt(2/L_d) sin(pi k_d x_d / L_d)
// and nodes x_j = j L_d/(pad*M_d + 1), analysis of band-limited samples is
// exact and Parseval holds to roundoff.
//
// pad >= 2 samples on a refined grid with pad*M_d interior nodes per axis;
// the band above M_d is implicitly zero (zero padding).

std::vector<double> to_physical(const RealField& f, int pad = 1);
std::vector<cplx> to_physical(const ComplexField& f, int pad = 1);

/// Analysis on the field's own collocation grid (pad = 1), sample count must
/// equal grid.total().
RealField to_spectral(const std::vector<double>& samples, const GridSpec& grid);
ComplexField to_spectral(const std::vector<cplx>& samples, const GridSpec& grid);

/// Analysis of samples living on the pad-refined grid, truncated back to the
/// grid's band. For pad = 1 this is plain analysis.
RealField to_spectral_truncated(const std::vector<double>& samples, const GridSpec& grid,
                                int pad);
ComplexField to_spectral_truncated(const std::vector<cplx>& samples, const GridSpec& grid,
                                   int pad);

/// Node values of the partial derivative along `axis` on the pad-refined grid
/// (the derivative of a sine series is a cosine series; evaluated exactly via
/// a mixed DST/DCT-I transform). Layout matches to_physical(f, pad).
std::vector<double> gradient_samples(const RealField& f, int axis, int pad);
std::vector<cplx> gradient_samples(const ComplexField& f, int axis, int pad);

namespace detail {
/// Raw multi-d DST-I (RODFT00, unnormalized) used by tests for oracle checks.
void dst1(const double* in, double* out, const int* dims, int rank);
}  // namespace detail

}  // namespace kgs
