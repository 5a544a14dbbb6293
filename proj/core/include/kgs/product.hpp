#pragma once

#include "kgs/field.hpp"
#include "kgs/transform.hpp"

namespace kgs {

/// Pointwise products projected back onto the retained band. With dealias on,
/// the product is sampled on a 2x zero-padded grid before projection, which
/// removes in-band aliasing of the quadrature projection.
RealField pointwise_product(const RealField& f, const RealField& g, bool dealias = true);
ComplexField pointwise_product(const RealField& f, const ComplexField& g,
                               bool dealias = true);
ComplexField pointwise_product(const ComplexField& f, const ComplexField& g,
                               bool dealias = true);
ComplexField pointwise_product(const ComplexField& f, const RealField& g,
                               bool dealias = true);

/// |u|^2 as a real field (band projection of the pointwise modulus squared).
RealField modulus_squared(const ComplexField& u, bool dealias = true);

// Quadrature pairings on the (possibly padded) collocation grid. These are the
// discrete inner products under which the semi-discrete flow is Hamiltonian,
// so charge and E_n built from them are conserved exactly in time-continuous
// limit.

/// sum_j W_j w(x_j) |z(x_j)|^2
double quad_w_modsq(const RealField& w, const ComplexField& z, bool dealias = true);

/// sum_j W_j w(x_j) |grad z(x_j)|^2
double quad_w_gradsq(const RealField& w, const ComplexField& z, bool dealias = true);

/// sum_j W_j a(x_j) b(x_j)
double quad_pair(const RealField& a, const RealField& b, bool dealias = true);

}  // namespace kgs
