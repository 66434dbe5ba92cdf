#include "lfts/rg/predicate.hpp"

namespace lfts::rg {

Predicate Predicate::one_state(std::string name,
                               std::function<bool(const State&)> fn) {
  return Predicate(std::move(name), Arity::OneState, std::move(fn), {});
}

Predicate Predicate::two_state(
    std::string name, std::function<bool(const State&, const State&)> fn) {
  return Predicate(std::move(name), Arity::TwoState, {}, std::move(fn));
}

bool Predicate::eval(const State& state) const {
  if (arity_ != Arity::OneState) {
    throw ArityError("two-state predicate '" + name_ +
                     "' evaluated with a single state");
  }
  return one_(state);
}

bool Predicate::eval(const State& before, const State& after) const {
  if (arity_ != Arity::TwoState) {
    throw ArityError("one-state predicate '" + name_ +
                     "' evaluated with a state pair");
  }
  return two_(before, after);
}

bool Predicate::holds_on_transition(const State& before,
                                    const State& after) const {
  if (arity_ == Arity::TwoState) return two_(before, after);
  return !one_(before) || one_(after);
}

bool Predicate::gates(const State& state) const {
  if (arity_ == Arity::OneState) return one_(state);
  return two_(state, state);
}

bool evaluate_rely(const Predicate& rely, const State& before,
                   const State* after) {
  if (after != nullptr && before.schema() != after->schema()) {
    throw SchemaError("rely '" + rely.name() +
                      "' evaluated over states of different schemas");
  }
  if (rely.arity() == Predicate::Arity::TwoState) {
    if (after == nullptr) {
      throw ArityError("two-state rely '" + rely.name() +
                       "' needs both a before and an after state");
    }
    return rely.eval(before, *after);
  }
  return rely.eval(before);
}

bool evaluate_rely(const Predicate& rely, const State& before,
                   const State& after) {
  return evaluate_rely(rely, before, &after);
}

}  // namespace lfts::rg
