#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lfts {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed schema, or a state/update that does not fit its schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

/// A two-state predicate evaluated with a single state (or vice versa).
class ArityError : public Error {
public:
  using Error::Error;
};

/// A value or argument outside its declared finite domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// An operation precondition was violated by the caller.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// The state space to enumerate exceeds the configured cap.
class ExplosionError : public Error {
public:
  ExplosionError(const std::string& what, std::uint64_t size)
      : Error(what), size_(size) {}
  std::uint64_t state_space_size() const noexcept { return size_; }

private:
  std::uint64_t size_;
};

/// Reserving a route for a train that already holds one.
class AlreadyAssignedError : public Error {
public:
  using Error::Error;
};

/// A train operation that needs an assigned route, called without one.
class UnassignedError : public Error {
public:
  using Error::Error;
};

/// moving_on_route called at the last block of a route.
class NoNextBlockError : public Error {
public:
  using Error::Error;
};

/// exit_route called at a block that is not the last of the route.
class NotLastBlockError : public Error {
public:
  using Error::Error;
};

/// Scripted fault whose target matches nothing in the update.
class ScheduleMismatchError : public Error {
public:
  using Error::Error;
};

/// The injector fabricated an update outside its own scope (engine bug).
class ScopeViolationError : public Error {
public:
  using Error::Error;
};

/// A replayed event no longer matches its recorded outcome.
class ReplayMismatchError : public Error {
public:
  ReplayMismatchError(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

private:
  std::size_t step_;
};

/// Invalid run configuration or input file contents.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Input file that cannot be parsed at all.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace lfts
