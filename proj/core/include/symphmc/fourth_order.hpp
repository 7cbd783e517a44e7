#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symphmc/flow.hpp"
#include "symphmc/hmc.hpp"
#include "symphmc/phase_state.hpp"
#include "symphmc/splitting.hpp"
#include "symphmc/targets.hpp"

namespace symphmc {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  constexpr bool positive() const noexcept { return (num > 0) == (den > 0) && num != 0; }
};

constexpr Rational operator+(Rational a, Rational b) noexcept {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

constexpr bool operator==(Rational a, Rational b) noexcept { return a.num * b.den == b.num * a.den; }

/// Exact coefficients of the Rowlands kernel and of its starting map kappa.
namespace rowlands {

inline constexpr Rational kKernelKick{1, 2};
inline constexpr Rational kKernelCurvature{1, 48};

inline constexpr Rational kKappaKick1{23, 72};
inline constexpr Rational kKappaCurvature1{55, 1728};
inline constexpr Rational kKappaDrift1{6, 7};
inline constexpr Rational kKappaKick2{49, 72};
inline constexpr Rational kKappaDrift2{1, 7};

}  // namespace rowlands

/// Rowlands kernel psi = mkick(1/2, 1/48) drift(1) mkick(1/2, 1/48) and the
/// starting map kappa (action order: mkick(23/72, 55/1728), drift(6/7),
/// kick(49/72), drift(1/7)). A leg of N >= 2 steps is
/// kappa* o psi^(N-2) o kappa, which is fourth order with every substep
/// coefficient positive.
struct RowlandsScheme {
  FlowSchedule kernel;
  FlowSchedule kappa;
  FlowSchedule kappa_star;

  static RowlandsScheme standard();

  /// Every coefficient that multiplies h, including modified-kick weights,
  /// as exact rationals.
  static std::vector<Rational> coefficients();
};

/// kappa, then n_steps - 2 kernel steps, then kappa*. Throws
/// InsufficientSteps when n_steps < 2.
LegResult rowlands_leg(PhaseState s0, double h, std::int64_t n_steps,
                       const RowlandsScheme& scheme, TargetModel& target,
                       LegOptions options = {});

/// n_steps plain kernel steps (no processing).
LegResult rowlands_kernel_leg(PhaseState s0, double h, std::int64_t n_steps,
                              const RowlandsScheme& scheme, TargetModel& target);

/// grad Vmod(q) = b grad V(q) - 2 h^2 c Hess V(q) M^{-1} grad V(q).
std::vector<double> modified_force(std::span<const double> q, double b_mod, double c_mod,
                                   double h, TargetModel& target);

/// Leg factory for HMC use; legs shorter than two steps are lengthened to two.
LegFactory rowlands_leg_factory(RowlandsScheme scheme);

enum class OrderScheme { ProcessedRowlands, RowlandsKernel, VelocityVerlet };

struct OrderReport {
  std::vector<double> step_sizes;
  std::vector<double> errors;
  /// log2(error(h) / error(h/2)) for consecutive levels.
  std::vector<double> orders;
};

/// Runs `scheme` from s0 to time T at h0, h0/2, ..., h0/2^(levels-1) and
/// compares with the target's exact flow when available, otherwise with a
/// processed Rowlands run at h0/64. Errors are max-norm over (q, p).
OrderReport order_estimate(TargetModel& target, const RowlandsScheme& rowlands,
                           OrderScheme scheme, const PhaseState& s0, double T, double h0,
                           int levels);

}  // namespace symphmc
