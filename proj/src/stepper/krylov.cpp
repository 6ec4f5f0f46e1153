// Semi-implicit step as a linear solve:
//   (D + S) u = rhs,  D = 1 + tau nu |k|^2 (diagonal),  S u = tau P Pi_N(u^n . grad u).
// On divergence-free fields in X_N, S is skew-adjoint in L2, so the adjoint is
// D - S and CG on the normal equations (D - S)(D + S) u = (D - S) rhs applies.
// ||(D + S)^{-1}|| <= 1, so the state error is bounded by the residual.
#include <cmath>
#include <string>

#include "nsfourier/advection.hpp"
#include "nsfourier/error.hpp"
#include "nsfourier/snapshot.hpp"
#include "nsfourier/spectral.hpp"
#include "nsfourier/stepper.hpp"
#include "stepper_detail.hpp"

namespace nsfourier {

using namespace detail;

namespace {

class SemiImplicitOperator {
 public:
  SemiImplicitOperator(const SpectralVectorField& u_n, double tau, double nu)
      : advect_(u_n), tau_(tau) {
    const auto& t = u_n.grid().tables();
    diag_.resize(t.k_sq.size());
    for (std::size_t i = 0; i < diag_.size(); ++i) diag_[i] = 1.0 + tau * nu * t.k_sq[i];
  }

  SpectralVectorField apply(const SpectralVectorField& x) const {
    return scaled_axpy(diag_, x, 0.0, x) + tau_ * advect_.apply(x);
  }

  SpectralVectorField apply_adjoint(const SpectralVectorField& x) const {
    return scaled_axpy(diag_, x, 0.0, x) - tau_ * advect_.apply(x);
  }

 private:
  AdvectionOperator advect_;
  double tau_;
  std::vector<double> diag_;
};

double norm_sq(const SpectralVectorField& v) { return inner_product(v, v); }

}  // namespace

StepResult krylov_step(const SpectralVectorField& u_n_in, const StepperConfig& cfg, double t_n) {
  cfg.validate();
  const SpectralVectorField u_n = with_radius(u_n_in, effective_truncation(cfg, u_n_in));
  require_finite(l2_norm(u_n), "krylov_step");
  const SpectralVectorField rhs = step_rhs(u_n, cfg, t_n);
  const SemiImplicitOperator op(u_n, cfg.tau, cfg.nu);

  // Restart from the true residual every so often; the recursive one drifts
  // over long runs at large tau.
  constexpr int kRestart = 200;
  StepResult result{u_n, 0, 0.0, {}};
  SpectralVectorField& x = result.state;
  int iterations = 0;
  while (true) {
    SpectralVectorField r = rhs - op.apply(x);
    const double true_residual = l2_norm(r);
    require_finite(true_residual, "krylov_step");
    result.residuals.push_back(true_residual);
    result.final_residual = true_residual;
    result.iterations_used = iterations;
    if (true_residual < cfg.tolerance) return result;
    if (iterations >= cfg.krylov_max_iterations) break;

    SpectralVectorField z = op.apply_adjoint(r);
    SpectralVectorField p = z;
    double z_sq = norm_sq(z);
    for (int j = 0; j < kRestart && iterations < cfg.krylov_max_iterations; ++j) {
      const SpectralVectorField w = op.apply(p);
      const double w_sq = norm_sq(w);
      if (w_sq == 0.0) break;
      const double alpha = z_sq / w_sq;
      x = axpy(x, alpha, p);
      r = axpy(r, -alpha, w);
      ++iterations;
      if (l2_norm(r) < 0.5 * cfg.tolerance) break;
      z = op.apply_adjoint(r);
      const double z_sq_next = norm_sq(z);
      p = axpy(z, z_sq_next / z_sq, p);
      z_sq = z_sq_next;
    }
  }
  throw ConvergenceError("krylov_step: residual " + format_double(result.final_residual) +
                             " above tolerance after " + std::to_string(iterations) +
                             " iterations",
                         iterations, result.final_residual);
}

}  // namespace nsfourier
