#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kgs/operators.hpp"
#include "kgs/state.hpp"

namespace kgs {

enum class Scheme { LawsonRk4, Rk4 };

struct IntegratorConfig {
  Scheme scheme = Scheme::LawsonRk4;
  double dt = 1e-3;
  bool dealias = true;
  bool coupling = true;  // test hook: off makes the flow exactly linear

  IntegratorConfig() = default;
  IntegratorConfig(Scheme s, double dt_, bool dealias_ = true, bool coupling_ = true)
      : scheme(s), dt(dt_), dealias(dealias_), coupling(coupling_) {
    if (!(dt != 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be nonzero finite");
  }
};

struct Tangent {
  ComplexField du;
  RealField dv;
  RealField dvt;
};

/// Numerical fault: a norm exceeded the blow-up threshold or went non-finite.
/// The theorems guarantee global existence, so this always indicates a fault
/// (usually a step size far beyond the scheme's accuracy range).
struct BlowUpError : std::runtime_error {
  double time;
  explicit BlowUpError(double t)
      : std::runtime_error("solution norm blew up at t = " + std::to_string(t)), time(t) {}
};

/// Tangent of the regularized flow at `state`:
///   du  = i(Lap u + J^2(J^2 v . J^2 u))
///   dv  = vt
///   dvt = Lap v - v + J^2 |J^2 u|^2
/// n = infinity recovers the unregularized coupling.
Tangent rhs(const State& state, const RegLevel& n, const IntegratorConfig& cfg);

/// Data smoothing (J^2 phi, J^2 psi0, J^2 psi1); `single_smoothing` applies
/// J once instead (the finite-energy scheme's data). n = infinity is identity.
State regularized_initial_data(const InitialData& data, const RegLevel& n,
                               bool single_smoothing = false);

/// One-step integrator with the linear flow handled exactly (LawsonRk4) or
/// fully explicit (Rk4). Stateless between steps apart from cached
/// per-dt propagator tables.
class Stepper {
 public:
  Stepper(GridSpec grid, RegLevel n, IntegratorConfig cfg);

  State step(const State& s) const;
  const IntegratorConfig& config() const { return cfg_; }
  const RegLevel& reg() const { return n_; }

 private:
  State step_lawson(const State& s) const;
  State step_rk4(const State& s) const;
  void check_finite(const State& s) const;

  GridSpec grid_;
  RegLevel n_;
  IntegratorConfig cfg_;
  // propagator tables at dt/2 and dt
  std::vector<cplx> eu_half_, eu_full_;
  std::vector<double> c_half_, s_half_, c_full_, s_full_, mu2_;
};

struct ObsRecord;  // observables.hpp

struct RunResult {
  std::vector<ObsRecord> records;
  std::vector<State> samples;  // filled when keep_samples
  std::optional<double> blowup_time;
  double dt = 0.0;
  int sample_every = 1;
};

struct RunOptions {
  int sample_every = 1;
  bool keep_samples = false;
  /// Called after each sampled record; return false to stop early.
  std::function<bool(const State&, int step)> on_sample;
};

/// Advance the regularized flow from smoothed data to horizon T, emitting one
/// observable record every sample_every steps (plus t = 0 and the final time).
/// On blow-up the partial records are preserved and blowup_time is set.
RunResult run(const InitialData& data, const RegLevel& n, const IntegratorConfig& cfg,
              double T, const RunOptions& opts = {});

/// As `run` but starting from an arbitrary state (resume path).
RunResult run_from(const State& start, const RegLevel& n, const IntegratorConfig& cfg,
                   double T, const RunOptions& opts = {});

}  // namespace kgs
