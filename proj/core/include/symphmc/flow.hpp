#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace symphmc {

enum class FlowKind { Drift, Kick, ModifiedKick };

/// One exact flow of a split Hamiltonian, advanced for `coefficient * h`.
///
/// Drift:        q <- q + coefficient*h * M^{-1} p
/// Kick:         p <- p - coefficient*h * grad V(q)
/// ModifiedKick: p <- p - coefficient*h * grad Vmod(q), where
///               Vmod = b_mod V - h^2 c_mod grad V^T M^{-1} grad V.
struct ElementaryFlow {
  FlowKind kind = FlowKind::Drift;
  double coefficient = 0.0;
  double b_mod = 1.0;
  double c_mod = 0.0;

  static ElementaryFlow drift(double coefficient);
  static ElementaryFlow kick(double coefficient);
  static ElementaryFlow modified_kick(double coefficient, double b_mod, double c_mod);

  bool is_kick() const noexcept { return kind != FlowKind::Drift; }

  /// Weight this flow contributes to the consistency sum of kicks.
  double kick_weight() const noexcept;

  bool operator==(const ElementaryFlow&) const = default;
};

/// An ordered list of elementary flows, stored in action order: flows()[0]
/// acts on the state first. Composition notation (right-to-left) therefore
/// reads this list backwards.
class FlowSchedule {
 public:
  FlowSchedule() = default;
  explicit FlowSchedule(std::vector<ElementaryFlow> flows);

  std::span<const ElementaryFlow> flows() const noexcept { return flows_; }
  std::size_t size() const noexcept { return flows_.size(); }
  bool empty() const noexcept { return flows_.empty(); }
  const ElementaryFlow& operator[](std::size_t i) const { return flows_[i]; }

  bool is_palindromic() const noexcept;
  double drift_sum() const noexcept;
  double kick_sum() const noexcept;

  bool operator==(const FlowSchedule&) const = default;

 private:
  std::vector<ElementaryFlow> flows_;
};

/// Adjoint of a composition of exact (self-adjoint) flows: the same flows in
/// reverse order.
FlowSchedule adjoint_schedule(const FlowSchedule& s);

/// a = b / (6b - 1), the drift weight that keeps the two-stage kernel's
/// stability interval long. Throws DegenerateParameter when |6b - 1| < 1e-12.
double kernel_drift_weight(double b);

/// Two-stage palindromic kernel kick(1/2-b) drift(a) kick(b) drift(1-2a)
/// kick(b) drift(a) kick(1/2-b) with a = b/(6b-1).
FlowSchedule build_kernel(double b);

/// Preprocessor kick(d) drift(c) kick(-d) drift(-c) in action order. Its
/// adjoint drift(-c) kick(-d) drift(c) kick(d) is the postprocessor.
FlowSchedule build_processor(double c, double d);

/// kick(1/2) drift(1) kick(1/2).
FlowSchedule velocity_verlet_kernel();

}  // namespace symphmc
