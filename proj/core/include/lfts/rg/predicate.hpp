#pragma once

#include <functional>
#include <string>

#include "lfts/rg/types.hpp"

namespace lfts::rg {

/// A named, total, deterministic boolean observation of the global state.
///
/// One-state predicates look at a single state; two-state predicates relate
/// the state before an environment step to the state after it, which is
/// where before/after-valued rely conditions live.
class Predicate {
public:
  enum class Arity { OneState, TwoState };

  static Predicate one_state(std::string name,
                             std::function<bool(const State&)> fn);
  static Predicate two_state(
      std::string name, std::function<bool(const State&, const State&)> fn);

  const std::string& name() const noexcept { return name_; }
  Arity arity() const noexcept { return arity_; }

  /// Strict single-state evaluation; ArityError for two-state predicates.
  bool eval(const State& state) const;
  /// Strict pair evaluation; ArityError for one-state predicates.
  bool eval(const State& before, const State& after) const;

  /// Does the transition before->after respect this predicate?
  /// Two-state: evaluated on the pair. One-state: stability — if it held
  /// before the step it must still hold after it.
  bool holds_on_transition(const State& before, const State& after) const;

  /// Does this predicate enable an operation in `state`?
  /// One-state: evaluated directly. Two-state: evaluated reflexively on
  /// (state, state) — before/after-valued relies never gate execution.
  bool gates(const State& state) const;

private:
  Predicate(std::string name, Arity arity,
            std::function<bool(const State&)> one,
            std::function<bool(const State&, const State&)> two)
      : name_(std::move(name)),
        arity_(arity),
        one_(std::move(one)),
        two_(std::move(two)) {}

  std::string name_;
  Arity arity_;
  std::function<bool(const State&)> one_;
  std::function<bool(const State&, const State&)> two_;
};

/// Evaluate a rely condition against an environment step.
///
/// `after` may be null for one-state relies; a two-state rely without an
/// after-state raises ArityError. Both states must share one schema, else
/// SchemaError. One-state relies are evaluated on `before`.
bool evaluate_rely(const Predicate& rely, const State& before,
                   const State* after = nullptr);
bool evaluate_rely(const Predicate& rely, const State& before,
                   const State& after);

}  // namespace lfts::rg
