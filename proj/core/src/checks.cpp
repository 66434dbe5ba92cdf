#include "lfts/rg/checks.hpp"

#include <sstream>

namespace lfts::rg {

void for_each_state(const SchemaPtr& schema, std::uint64_t cap,
                    const std::function<void(const State&)>& visit) {
  schema->state_space_size(cap);
  const std::size_t n = schema->variable_count();
  State state = State::uniform(schema);
  while (true) {
    visit(state);
    // Odometer increment over the variable value indices.
    std::size_t i = 0;
    for (; i < n; ++i) {
      const std::size_t domain_size = schema->variable(i).domain.size();
      if (state.get(i) + 1u < domain_size) {
        state.set(i, static_cast<Value>(state.get(i) + 1));
        break;
      }
      state.set(i, 0);
    }
    if (i == n) return;
  }
}

std::vector<Args> enumerate_args(std::span<const Param> params) {
  std::vector<Args> tuples;
  Args current(params.size(), 0);
  while (true) {
    tuples.push_back(current);
    std::size_t i = 0;
    for (; i < params.size(); ++i) {
      if (current[i] + 1u < params[i].domain.size()) {
        ++current[i];
        break;
      }
      current[i] = 0;
    }
    if (i == params.size()) return tuples;
  }
}

namespace {

std::string render_args(const std::vector<Param>& params, const Args& args) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out << ',';
    out << params[i].domain.label(args[i]);
  }
  out << ')';
  return out.str();
}

}  // namespace

std::string LayerWitness::to_string(const LayeredOperation& op) const {
  std::ostringstream out;
  out << op.name() << render_args(op.params(), args) << ": layer " << stronger
      << " rely holds but layer " << weaker << " rely fails on state ["
      << state.to_string() << ']';
  return out.str();
}

LayerCheckResult check_layer_weakening(const LayeredOperation& op,
                                       const SchemaPtr& schema,
                                       std::uint64_t cap) {
  const std::vector<Args> argspace = enumerate_args(op.params());
  return check_layer_weakening(op, schema, argspace, cap);
}

LayerCheckResult check_layer_weakening(const LayeredOperation& op,
                                       const SchemaPtr& schema,
                                       std::span<const Args> argspace,
                                       std::uint64_t cap) {
  LayerCheckResult result;
  if (op.layer_count() < 2) {
    // Nothing to order.
    result.states_checked = 0;
    return result;
  }
  for_each_state(schema, cap, [&](const State& state) {
    if (!result.holds) return;
    ++result.states_checked;
    for (const Args& args : argspace) {
      std::vector<bool> gates(op.layer_count());
      for (std::size_t i = 0; i < op.layer_count(); ++i) {
        gates[i] = op.layer(i).rely(args).gates(state);
      }
      for (std::size_t i = 0; i + 1 < gates.size() && result.holds; ++i) {
        if (!gates[i]) continue;
        for (std::size_t j = i + 1; j < gates.size(); ++j) {
          if (!gates[j]) {
            result.holds = false;
            result.witness = LayerWitness{state, args, i, j};
            break;
          }
        }
      }
      if (!result.holds) break;
    }
  });
  return result;
}

std::string TransitionWitness::to_string() const {
  std::ostringstream out;
  out << "transition of '" << writer << "' violates rely '" << rely_name
      << "' of '" << reader << "': [" << before.to_string() << "] -> ["
      << after.to_string() << ']';
  return out.str();
}

CompatibilityResult check_rg_compatibility(std::span<const RGOperation> ops,
                                           const SchemaPtr& schema,
                                           std::uint64_t cap) {
  CompatibilityResult result;
  if (ops.size() < 2) return result;

  std::vector<std::vector<Args>> tuples;
  tuples.reserve(ops.size());
  for (const auto& op : ops) tuples.push_back(enumerate_args(op.params()));

  for_each_state(schema, cap, [&](const State& before) {
    if (!result.holds) return;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      for (const Args& wargs : tuples[i]) {
        if (ops[i].precheck(before, wargs)) continue;
        if (!ops[i].rely(wargs).gates(before)) continue;
        const State after = ops[i].guarantee(before, wargs).apply(before);
        for (std::size_t j = 0; j < ops.size(); ++j) {
          if (j == i) continue;
          for (const Args& rargs : tuples[j]) {
            ++result.transitions_checked;
            const Predicate rely = ops[j].rely(rargs);
            if (!rely.holds_on_transition(before, after)) {
              result.holds = false;
              result.witness =
                  TransitionWitness{ops[i].name(), wargs,    ops[j].name(),
                                    rargs,         rely.name(), before,
                                    after};
              return;
            }
          }
        }
      }
    }
  });
  return result;
}

}  // namespace lfts::rg
