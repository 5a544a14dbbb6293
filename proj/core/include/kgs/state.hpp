#pragma once

#include "kgs/field.hpp"

namespace kgs {

/// The evolving triple (u, v, dv/dt) at time t. u is the complex nucleon
/// field, v the real meson field; all on one grid.
struct State {
  ComplexField u;
  RealField v;
  RealField vt;
  double t = 0.0;

  State(ComplexField u_, RealField v_, RealField vt_, double t_ = 0.0)
      : u(std::move(u_)), v(std::move(v_)), vt(std::move(vt_)), t(t_) {
    require_same_grid(u.grid(), v.grid());
    require_same_grid(u.grid(), vt.grid());
  }

  static State zero(const GridSpec& g) {
    return State(ComplexField(g), RealField(g), RealField(g), 0.0);
  }

  const GridSpec& grid() const { return u.grid(); }
};

/// Initial data triple (phi, psi0, psi1).
struct InitialData {
  ComplexField phi;
  RealField psi0;
  RealField psi1;

  InitialData(ComplexField p, RealField p0, RealField p1)
      : phi(std::move(p)), psi0(std::move(p0)), psi1(std::move(p1)) {
    require_same_grid(phi.grid(), psi0.grid());
    require_same_grid(phi.grid(), psi1.grid());
  }

  const GridSpec& grid() const { return phi.grid(); }
};

}  // namespace kgs
