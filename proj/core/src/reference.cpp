#include "lfts/rg/reference.hpp"

#include <algorithm>
#include <numeric>

namespace lfts::rg {

std::uint64_t find_min(std::span<const std::uint64_t> values) {
  if (values.empty()) {
    throw PreconditionError("P(S): S ≠ ∅");
  }
  return *std::min_element(values.begin(), values.end());
}

namespace {

// Values are stored as indices into 1..n, so number = index + 1.
std::uint64_t number(const State& s, std::size_t var) {
  return static_cast<std::uint64_t>(s.get(var)) + 1;
}

Value index_for(std::uint64_t n) { return static_cast<Value>(n - 1); }

}  // namespace

std::uint64_t GcdSystem::value_a(const State& state) const {
  return number(state, var_a);
}

std::uint64_t GcdSystem::value_b(const State& state) const {
  return number(state, var_b);
}

State GcdSystem::make_state(std::uint64_t a, std::uint64_t b) const {
  State s = initial;
  s.set(var_a, index_for(a));
  s.set(var_b, index_for(b));
  return s;
}

GcdSystem build_gcd_system(std::uint64_t a0, std::uint64_t b0) {
  if (a0 == 0 || b0 == 0) {
    throw DomainError("gcd system needs positive initial values");
  }
  const std::uint64_t top = std::max(a0, b0);
  auto schema = std::make_shared<const StateSchema>(std::vector<StateSchema::Variable>{
      {"a", Domain::range("a", 1, top)},
      {"b", Domain::range("b", 1, top)},
  });
  const std::size_t var_a = schema->index_of("a");
  const std::size_t var_b = schema->index_of("b");

  // The rely of the a-process: the environment never touches a, leaves b
  // alone whenever a >= b held before its step, and preserves the gcd.
  // The guard is read over the pre-step values; a step of the b-process
  // only changes b from states where b > a.
  Predicate rely_a = Predicate::two_state(
      "rely(reduce_a)", [var_a, var_b](const State& before, const State& after) {
        const std::uint64_t a0 = number(before, var_a);
        const std::uint64_t b0 = number(before, var_b);
        const std::uint64_t a1 = number(after, var_a);
        const std::uint64_t b1 = number(after, var_b);
        if (a1 != a0) return false;
        if (a0 >= b0 && b1 != b0) return false;
        return std::gcd(a1, b1) == std::gcd(a0, b0);
      });
  Predicate rely_b = Predicate::two_state(
      "rely(reduce_b)", [var_a, var_b](const State& before, const State& after) {
        const std::uint64_t a0 = number(before, var_a);
        const std::uint64_t b0 = number(before, var_b);
        const std::uint64_t a1 = number(after, var_a);
        const std::uint64_t b1 = number(after, var_b);
        if (b1 != b0) return false;
        if (a0 <= b0 && a1 != a0) return false;
        return std::gcd(a1, b1) == std::gcd(a0, b0);
      });

  // while (a != b) if (a > b) a := a - b;  — the disabled branch is a NoOp.
  GuaranteeFn step_a = [var_a, var_b](const State& s, const Args&) {
    StateUpdate update;
    const std::uint64_t a = number(s, var_a);
    const std::uint64_t b = number(s, var_b);
    if (a != b && a > b) {
      update.push(var_a, index_for(a - b));
    }
    return update;
  };
  GuaranteeFn step_b = [var_a, var_b](const State& s, const Args&) {
    StateUpdate update;
    const std::uint64_t a = number(s, var_a);
    const std::uint64_t b = number(s, var_b);
    if (a != b && b > a) {
      update.push(var_b, index_for(b - a));
    }
    return update;
  };

  RGOperation reduce_a("reduce_a", {},
                       [rely_a](const Args&) { return rely_a; }, step_a);
  RGOperation reduce_b("reduce_b", {},
                       [rely_b](const Args&) { return rely_b; }, step_b);

  std::vector<Value> init{index_for(a0), index_for(b0)};
  State initial(schema, std::move(init));

  return GcdSystem{schema,   initial, std::move(reduce_a), std::move(reduce_b),
                   var_a,    var_b};
}

}  // namespace lfts::rg
