#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lfts/rg/predicate.hpp"
#include "lfts/rg/types.hpp"

namespace lfts::rg {

/// A declared operation parameter ranging over a finite domain.
struct Param {
  std::string name;
  Domain domain;
};

/// Actual arguments: one value index per declared parameter.
using Args = std::vector<Value>;

/// Guard failures that are caller errors rather than interference.
/// Strict stepping raises the matching typed error; permissive stepping
/// (simulation, exploration) treats the step as blocked.
enum class PrecheckKind {
  Domain,
  AlreadyAssigned,
  Unassigned,
  NoNextBlock,
  NotLastBlock,
  Precondition,
};

struct PrecheckFailure {
  PrecheckKind kind;
  std::string message;
};

[[noreturn]] void raise(const PrecheckFailure& failure);

using RelyFactory = std::function<Predicate(const Args&)>;
using GuaranteeFn = std::function<StateUpdate(const State&, const Args&)>;
using PrecheckFn =
    std::function<std::optional<PrecheckFailure>(const State&, const Args&)>;

/// A named operation with a rely condition and a guarantee transformer.
///
/// The rely is instantiated per argument tuple; the guarantee builds the
/// atomic StateUpdate an enabled step would apply. The guarantee is only
/// ever invoked on states where the rely gates true.
class RGOperation {
public:
  RGOperation(std::string name, std::vector<Param> params, RelyFactory rely,
              GuaranteeFn guarantee, PrecheckFn precheck = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<Param>& params() const noexcept { return params_; }

  Predicate rely(const Args& args = {}) const;
  StateUpdate guarantee(const State& state, const Args& args = {}) const;
  std::optional<PrecheckFailure> precheck(const State& state,
                                          const Args& args) const;

  /// Raises DomainError unless the tuple matches the declared parameters.
  void check_args(const Args& args) const;

private:
  std::string name_;
  std::vector<Param> params_;
  RelyFactory rely_;
  GuaranteeFn guarantee_;
  PrecheckFn precheck_;
};

enum class Outcome { Applied, NoOp, Blocked };
std::string_view to_string(Outcome outcome);

struct StepResult {
  Outcome outcome;
  State state;        // post state; equals the input unless Applied
  StateUpdate update; // the update applied (empty when Blocked)
  std::optional<std::size_t> layer;  // set by layered stepping
};

enum class StepMode { Strict, Permissive };

/// One atomic step of `op`: if the rely gates on `state` the guarantee's
/// update is applied, otherwise the step is Blocked and the state is
/// returned untouched. A step whose update leaves the state identical is
/// reported as NoOp (a disabled branch guard, not an interference error).
StepResult step_operation(const RGOperation& op, const State& state,
                          const Args& args = {},
                          StepMode mode = StepMode::Strict);

/// One rely/guarantee level of a layered operation.
struct Layer {
  RelyFactory rely;
  GuaranteeFn guarantee;
};

/// An operation specified in ordered layers: layer 0 describes normal
/// behavior, later layers (with weaker relies) the abnormal cases.
class LayeredOperation {
public:
  LayeredOperation(std::string name, std::vector<Param> params,
                   std::vector<Layer> layers, PrecheckFn precheck = {});

  /// A plain operation seen as a single-layer one.
  static LayeredOperation from_operation(const RGOperation& op);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Param>& params() const noexcept { return params_; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  const Layer& layer(std::size_t i) const { return layers_.at(i); }
  Predicate layer_rely(std::size_t i, const Args& args = {}) const;
  std::optional<PrecheckFailure> precheck(const State& state,
                                          const Args& args) const;
  void check_args(const Args& args) const;

private:
  std::string name_;
  std::vector<Param> params_;
  std::vector<Layer> layers_;
  PrecheckFn precheck_;
};

/// nullopt means no layer's rely holds.
using LayerSelection = std::optional<std::size_t>;

/// Smallest layer index whose rely gates on (state, args).
LayerSelection select_layer(const LayeredOperation& op, const State& state,
                            const Args& args = {});

/// Step through the first satisfied layer; Blocked when none is.
StepResult step_layered(const LayeredOperation& op, const State& state,
                        const Args& args = {},
                        StepMode mode = StepMode::Strict);

}  // namespace lfts::rg
