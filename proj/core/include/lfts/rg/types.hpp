#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfts/errors.hpp"

namespace lfts::rg {

/// Index of a value within its variable's finite domain.
using Value = std::uint8_t;

inline constexpr std::size_t kMaxDomainSize = 256;

/// A named, finite, ordered set of symbolic values.
class Domain {
public:
  Domain(std::string name, std::vector<std::string> labels);

  /// Domain of the naturals lo..hi (inclusive), labelled decimally.
  static Domain range(std::string name, std::uint64_t lo, std::uint64_t hi);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Value v) const;
  std::optional<Value> find(std::string_view label) const;
  /// Like find(), but raises DomainError for unknown labels.
  Value index_of(std::string_view label) const;
  bool contains(Value v) const noexcept { return v < labels_.size(); }

private:
  std::string name_;
  std::vector<std::string> labels_;
};

/// The finite variables making up a global state, each with its domain.
class StateSchema {
public:
  struct Variable {
    std::string name;
    Domain domain;
  };

  explicit StateSchema(std::vector<Variable> variables);

  std::size_t variable_count() const noexcept { return variables_.size(); }
  const Variable& variable(std::size_t index) const;
  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find(), but raises SchemaError for unknown variables.
  std::size_t index_of(std::string_view name) const;

  /// Number of distinct states; raises ExplosionError beyond `cap`.
  std::uint64_t state_space_size(std::uint64_t cap) const;

private:
  std::vector<Variable> variables_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using SchemaPtr = std::shared_ptr<const StateSchema>;

/// A total assignment of every schema variable to a value of its domain.
/// Plain value semantics: stepping copies, nothing is shared but the schema.
class State {
public:
  State(SchemaPtr schema, std::vector<Value> values);

  /// All variables set to the first value of their domain.
  static State uniform(SchemaPtr schema);

  const SchemaPtr& schema() const noexcept { return schema_; }
  std::size_t size() const noexcept { return values_.size(); }

  Value get(std::size_t var) const;
  Value get(std::string_view var) const;
  const std::string& label(std::size_t var) const;
  const std::string& label(std::string_view var) const;

  void set(std::size_t var, Value v);
  void set(std::string_view var, std::string_view value_label);
  State with(std::size_t var, Value v) const;
  State with(std::string_view var, std::string_view value_label) const;

  /// Canonical byte encoding (one byte per variable, schema order).
  std::string_view bytes() const noexcept {
    return {reinterpret_cast<const char*>(values_.data()), values_.size()};
  }
  std::string encode() const { return std::string(bytes()); }

  std::string to_string() const;

  friend bool operator==(const State& a, const State& b) {
    return a.schema_ == b.schema_ && a.values_ == b.values_;
  }
  friend bool operator!=(const State& a, const State& b) { return !(a == b); }

private:
  SchemaPtr schema_;
  std::vector<Value> values_;
};

struct Assignment {
  std::size_t variable;
  Value value;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// An ordered list of assignments applied atomically as one unit.
/// Updates are plain data so the error injector can drop, duplicate or
/// fabricate them before they reach a state.
class StateUpdate {
public:
  StateUpdate() = default;
  StateUpdate(std::initializer_list<Assignment> assignments)
      : assignments_(assignments) {}

  void push(std::size_t variable, Value value) {
    assignments_.push_back({variable, value});
  }

  bool empty() const noexcept { return assignments_.empty(); }
  std::size_t size() const noexcept { return assignments_.size(); }
  const Assignment& at(std::size_t i) const { return assignments_.at(i); }
  auto begin() const noexcept { return assignments_.begin(); }
  auto end() const noexcept { return assignments_.end(); }

  /// New state with the assignments applied in order; the input is untouched.
  State apply(const State& state) const;

  /// "var:=value;var:=value" using schema names and labels.
  std::string render(const StateSchema& schema) const;

  friend bool operator==(const StateUpdate&, const StateUpdate&) = default;

private:
  std::vector<Assignment> assignments_;
};

}  // namespace lfts::rg
