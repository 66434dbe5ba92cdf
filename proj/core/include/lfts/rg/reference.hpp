#pragma once

#include <cstdint>
#include <span>

#include "lfts/rg/operation.hpp"

namespace lfts::rg {

/// Smallest element of a non-empty set of naturals.
/// Pre:  P(S): S ≠ ∅ — violated calls raise PreconditionError.
/// Post: Q(S,r): r ∈ S ∧ (∀ e ∈ S)(r ≤ e).
std::uint64_t find_min(std::span<const std::uint64_t> values);

/// Two interfering processes jointly reducing (a, b) to their greatest
/// common divisor by repeated subtraction over a shared two-variable state.
///
/// reduce_a decrements a while a > b; reduce_b decrements b while b > a.
/// Each process's rely permits exactly the other's interference, so the
/// rely of one is the guarantee of the other.
struct GcdSystem {
  SchemaPtr schema;
  State initial;
  RGOperation reduce_a;
  RGOperation reduce_b;
  std::size_t var_a;
  std::size_t var_b;

  std::uint64_t value_a(const State& state) const;
  std::uint64_t value_b(const State& state) const;
  State make_state(std::uint64_t a, std::uint64_t b) const;
  std::vector<RGOperation> operations() const { return {reduce_a, reduce_b}; }
};

/// DomainError unless a0 ≥ 1 and b0 ≥ 1.
GcdSystem build_gcd_system(std::uint64_t a0, std::uint64_t b0);

}  // namespace lfts::rg
