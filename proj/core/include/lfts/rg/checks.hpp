#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lfts/rg/operation.hpp"

namespace lfts::rg {

inline constexpr std::uint64_t kDefaultStateCap = 1'000'000;

/// Visit every state of the schema in canonical order.
/// Raises ExplosionError when the state space exceeds `cap`.
void for_each_state(const SchemaPtr& schema, std::uint64_t cap,
                    const std::function<void(const State&)>& visit);

/// All argument tuples of a parameter list, in canonical order.
std::vector<Args> enumerate_args(std::span<const Param> params);

struct LayerWitness {
  State state;
  Args args;
  std::size_t stronger;  // layer whose rely holds
  std::size_t weaker;    // later layer whose rely fails on the same state
  std::string to_string(const LayeredOperation& op) const;
};

struct LayerCheckResult {
  bool holds = true;
  std::optional<LayerWitness> witness;
  std::uint64_t states_checked = 0;
};

/// Are the layers ordered from strongest to weakest rely? Exhaustively
/// checks rely_i(s) implies rely_j(s) for all i < j over every state and
/// argument tuple; a failure comes with a concrete witness.
LayerCheckResult check_layer_weakening(const LayeredOperation& op,
                                       const SchemaPtr& schema,
                                       std::uint64_t cap = kDefaultStateCap);
LayerCheckResult check_layer_weakening(const LayeredOperation& op,
                                       const SchemaPtr& schema,
                                       std::span<const Args> argspace,
                                       std::uint64_t cap = kDefaultStateCap);

struct TransitionWitness {
  std::string writer;
  Args writer_args;
  std::string reader;
  Args reader_args;
  std::string rely_name;
  State before;
  State after;
  std::string to_string() const;
};

struct CompatibilityResult {
  bool holds = true;
  std::optional<TransitionWitness> witness;
  std::uint64_t transitions_checked = 0;
};

/// Do the operations tolerate each other? Every transition realizable by
/// one operation's guarantee (from a state where its rely gates) must
/// satisfy every other operation's rely: two-state relies are evaluated on
/// the transition, one-state relies must be stable across it.
CompatibilityResult check_rg_compatibility(std::span<const RGOperation> ops,
                                           const SchemaPtr& schema,
                                           std::uint64_t cap = kDefaultStateCap);

}  // namespace lfts::rg
