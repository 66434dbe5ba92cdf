#include "lfts/rg/operation.hpp"

namespace lfts::rg {

void raise(const PrecheckFailure& failure) {
  switch (failure.kind) {
    case PrecheckKind::Domain:
      throw DomainError(failure.message);
    case PrecheckKind::AlreadyAssigned:
      throw AlreadyAssignedError(failure.message);
    case PrecheckKind::Unassigned:
      throw UnassignedError(failure.message);
    case PrecheckKind::NoNextBlock:
      throw NoNextBlockError(failure.message);
    case PrecheckKind::NotLastBlock:
      throw NotLastBlockError(failure.message);
    case PrecheckKind::Precondition:
      throw PreconditionError(failure.message);
  }
  throw Error(failure.message);
}

RGOperation::RGOperation(std::string name, std::vector<Param> params,
                         RelyFactory rely, GuaranteeFn guarantee,
                         PrecheckFn precheck)
    : name_(std::move(name)),
      params_(std::move(params)),
      rely_(std::move(rely)),
      guarantee_(std::move(guarantee)),
      precheck_(std::move(precheck)) {}

Predicate RGOperation::rely(const Args& args) const {
  check_args(args);
  return rely_(args);
}

StateUpdate RGOperation::guarantee(const State& state, const Args& args) const {
  check_args(args);
  return guarantee_(state, args);
}

std::optional<PrecheckFailure> RGOperation::precheck(const State& state,
                                                     const Args& args) const {
  if (!precheck_) return std::nullopt;
  return precheck_(state, args);
}

namespace {

void check_args_against(const std::string& op_name,
                        const std::vector<Param>& params, const Args& args) {
  if (args.size() != params.size()) {
    throw DomainError("operation '" + op_name + "' takes " +
                      std::to_string(params.size()) + " arguments, got " +
                      std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!params[i].domain.contains(args[i])) {
      throw DomainError("argument '" + params[i].name + "' of '" + op_name +
                        "' outside its domain");
    }
  }
}

StepResult blocked(const State& state) {
  return {Outcome::Blocked, state, {}, std::nullopt};
}

StepResult apply_guarantee(const GuaranteeFn& guarantee, const State& state,
                           const Args& args) {
  StateUpdate update = guarantee(state, args);
  State next = update.apply(state);
  const Outcome outcome = next == state ? Outcome::NoOp : Outcome::Applied;
  return {outcome, std::move(next), std::move(update), std::nullopt};
}

}  // namespace

void RGOperation::check_args(const Args& args) const {
  check_args_against(name_, params_, args);
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Applied:
      return "Applied";
    case Outcome::NoOp:
      return "NoOp";
    case Outcome::Blocked:
      return "Blocked";
  }
  return "?";
}

StepResult step_operation(const RGOperation& op, const State& state,
                          const Args& args, StepMode mode) {
  op.check_args(args);
  if (auto failure = op.precheck(state, args)) {
    if (mode == StepMode::Strict) raise(*failure);
    return blocked(state);
  }
  if (!op.rely(args).gates(state)) {
    return blocked(state);
  }
  return apply_guarantee(
      [&op](const State& s, const Args& a) { return op.guarantee(s, a); },
      state, args);
}

LayeredOperation::LayeredOperation(std::string name, std::vector<Param> params,
                                   std::vector<Layer> layers,
                                   PrecheckFn precheck)
    : name_(std::move(name)),
      params_(std::move(params)),
      layers_(std::move(layers)),
      precheck_(std::move(precheck)) {
  if (layers_.empty()) {
    throw ConfigError("layered operation '" + name_ + "' has no layers");
  }
}

LayeredOperation LayeredOperation::from_operation(const RGOperation& op) {
  Layer only{[op](const Args& args) { return op.rely(args); },
             [op](const State& s, const Args& a) { return op.guarantee(s, a); }};
  PrecheckFn pre = [op](const State& s, const Args& a) {
    return op.precheck(s, a);
  };
  return LayeredOperation(op.name(), op.params(), {std::move(only)},
                          std::move(pre));
}

Predicate LayeredOperation::layer_rely(std::size_t i, const Args& args) const {
  check_args(args);
  return layers_.at(i).rely(args);
}

std::optional<PrecheckFailure> LayeredOperation::precheck(
    const State& state, const Args& args) const {
  if (!precheck_) return std::nullopt;
  return precheck_(state, args);
}

void LayeredOperation::check_args(const Args& args) const {
  check_args_against(name_, params_, args);
}

LayerSelection select_layer(const LayeredOperation& op, const State& state,
                            const Args& args) {
  op.check_args(args);
  for (std::size_t i = 0; i < op.layer_count(); ++i) {
    if (op.layer(i).rely(args).gates(state)) return i;
  }
  return std::nullopt;
}

StepResult step_layered(const LayeredOperation& op, const State& state,
                        const Args& args, StepMode mode) {
  op.check_args(args);
  if (auto failure = op.precheck(state, args)) {
    if (mode == StepMode::Strict) raise(*failure);
    return blocked(state);
  }
  const LayerSelection selected = select_layer(op, state, args);
  if (!selected) {
    return blocked(state);
  }
  StepResult result = apply_guarantee(op.layer(*selected).guarantee, state, args);
  result.layer = *selected;
  return result;
}

}  // namespace lfts::rg
