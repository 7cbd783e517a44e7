#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symphmc/flow.hpp"
#include "symphmc/phase_state.hpp"
#include "symphmc/targets.hpp"

namespace symphmc::detail {

// Applies flows in place at a fixed step size.
//
// With fusion on, a gradient is paid for once per position: any drift with a
// nonzero coefficient starts a new position. For targets with a diagonal
// precision, plain kicks use w o q directly and a kick followed by a drift is
// done in one pass; the per-entry arithmetic is the same as the generic path.
class FlowExecutor {
 public:
  FlowExecutor(TargetModel& target, double h, bool fuse_gradients);

  void apply(PhaseState& s, const ElementaryFlow& f);
  void apply(PhaseState& s, const FlowSchedule& schedule);

 private:
  void drift(PhaseState& s, double tau);
  void kick(PhaseState& s, double tau);
  void modified_kick(PhaseState& s, const ElementaryFlow& f);
  void kick_drift(PhaseState& s, double kick_tau, double drift_tau);
  void pay_for_gradient();
  void ensure_gradient(const PhaseState& s);
  void ensure_curvature(const PhaseState& s);
  void moved();

  TargetModel& target_;
  double h_;
  bool fuse_;
  std::span<const double> diagonal_;
  bool identity_mass_;
  std::vector<double> grad_;
  std::vector<double> work_;
  std::vector<double> curvature_;
  bool paid_ = false;             // gradient at the current q already counted
  bool grad_valid_ = false;       // grad_ holds grad V(current q)
  bool curvature_valid_ = false;  // curvature_ holds Hess V M^{-1} grad V
};

// Whole-leg execution for diagonal quadratic targets with identity mass.
// Coordinates are independent there, so each block of coordinates is carried
// through every flow of the leg while it sits in cache. Each entry sees the
// same operations in the same order as under FlowExecutor.
struct DiagonalLeg {
  static bool applicable(const TargetModel& target, const FlowSchedule& pre,
                         const FlowSchedule& kernel, const FlowSchedule& post);
  static void run(PhaseState& s, TargetModel& target, double h, std::int64_t n_steps,
                  const FlowSchedule& pre, const FlowSchedule& kernel, const FlowSchedule& post,
                  bool fuse_gradients);
};

}  // namespace symphmc::detail
