#include "lfts/rg/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lfts::rg {

Domain::Domain(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw SchemaError("domain '" + name_ + "' is empty");
  }
  if (labels_.size() > kMaxDomainSize) {
    throw SchemaError("domain '" + name_ + "' has " +
                      std::to_string(labels_.size()) + " values, limit is " +
                      std::to_string(kMaxDomainSize));
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw SchemaError("domain '" + name_ + "' repeats value '" + label + "'");
    }
  }
}

Domain Domain::range(std::string name, std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) {
    throw SchemaError("domain '" + name + "' has empty range");
  }
  std::vector<std::string> labels;
  labels.reserve(hi - lo + 1);
  for (std::uint64_t v = lo; v <= hi; ++v) {
    labels.push_back(std::to_string(v));
  }
  return Domain(std::move(name), std::move(labels));
}

const std::string& Domain::label(Value v) const {
  if (v >= labels_.size()) {
    throw DomainError("value index " + std::to_string(v) +
                      " outside domain '" + name_ + "'");
  }
  return labels_[v];
}

std::optional<Value> Domain::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Value>(i);
  }
  return std::nullopt;
}

Value Domain::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw DomainError("value '" + std::string(label) + "' outside domain '" +
                    name_ + "'");
}

StateSchema::StateSchema(std::vector<Variable> variables)
    : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (!index_.emplace(variables_[i].name, i).second) {
      throw SchemaError("schema repeats variable '" + variables_[i].name + "'");
    }
  }
}

const StateSchema::Variable& StateSchema::variable(std::size_t index) const {
  if (index >= variables_.size()) {
    throw SchemaError("variable index " + std::to_string(index) +
                      " outside schema");
  }
  return variables_[index];
}

std::optional<std::size_t> StateSchema::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t StateSchema::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw SchemaError("unknown variable '" + std::string(name) + "'");
}

std::uint64_t StateSchema::state_space_size(std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (const auto& v : variables_) {
    const std::uint64_t n = v.domain.size();
    if (total > cap / n + 1) {
      // Saturate: the exact product no longer matters once it passed the cap.
      throw ExplosionError("state space exceeds cap of " + std::to_string(cap),
                           total * n);
    }
    total *= n;
    if (total > cap) {
      throw ExplosionError("state space of " + std::to_string(total) +
                               " states exceeds cap of " + std::to_string(cap),
                           total);
    }
  }
  return total;
}

State::State(SchemaPtr schema, std::vector<Value> values)
    : schema_(std::move(schema)), values_(std::move(values)) {
  if (!schema_) {
    throw SchemaError("state constructed without a schema");
  }
  if (values_.size() != schema_->variable_count()) {
    throw SchemaError("state has " + std::to_string(values_.size()) +
                      " values for a schema of " +
                      std::to_string(schema_->variable_count()) +
                      " variables");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!schema_->variable(i).domain.contains(values_[i])) {
      throw DomainError("value of '" + schema_->variable(i).name +
                        "' outside its domain");
    }
  }
}

State State::uniform(SchemaPtr schema) {
  if (!schema) throw SchemaError("state constructed without a schema");
  std::vector<Value> values(schema->variable_count(), 0);
  return State(std::move(schema), std::move(values));
}

Value State::get(std::size_t var) const {
  if (var >= values_.size()) {
    throw SchemaError("variable index " + std::to_string(var) +
                      " outside schema");
  }
  return values_[var];
}

Value State::get(std::string_view var) const {
  return values_[schema_->index_of(var)];
}

const std::string& State::label(std::size_t var) const {
  return schema_->variable(var).domain.label(get(var));
}

const std::string& State::label(std::string_view var) const {
  return label(schema_->index_of(var));
}

void State::set(std::size_t var, Value v) {
  if (var >= values_.size()) {
    throw SchemaError("variable index " + std::to_string(var) +
                      " outside schema");
  }
  if (!schema_->variable(var).domain.contains(v)) {
    throw DomainError("value outside domain of '" +
                      schema_->variable(var).name + "'");
  }
  values_[var] = v;
}

void State::set(std::string_view var, std::string_view value_label) {
  const std::size_t i = schema_->index_of(var);
  values_[i] = schema_->variable(i).domain.index_of(value_label);
}

State State::with(std::size_t var, Value v) const {
  State copy = *this;
  copy.set(var, v);
  return copy;
}

State State::with(std::string_view var, std::string_view value_label) const {
  State copy = *this;
  copy.set(var, value_label);
  return copy;
}

std::string State::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out << ' ';
    out << schema_->variable(i).name << '=' << label(i);
  }
  return out.str();
}

State StateUpdate::apply(const State& state) const {
  State next = state;
  for (const auto& a : assignments_) {
    next.set(a.variable, a.value);
  }
  return next;
}

std::string StateUpdate::render(const StateSchema& schema) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    if (i > 0) out << ';';
    const auto& var = schema.variable(assignments_[i].variable);
    out << var.name << ":=" << var.domain.label(assignments_[i].value);
  }
  return out.str();
}

}  // namespace lfts::rg
