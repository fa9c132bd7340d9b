#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cmp {

using NodeId = std::uint64_t;
using PortId = std::uint32_t;

// nxt_port sentinel for the last child in the sibling chain; also "no port".
inline constexpr PortId kNoPort = std::numeric_limits<PortId>::max();
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Fault taxonomy. Strict-mode kernel violations and accounting errors are
// thrown; the CLI maps them to exit codes.
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Kernel semantics violated (double read/write, send on dead port, ...).
struct SimulationFault : SimError {
  using SimError::SimError;
};

// Memory meter: budget exceeded or unbalanced release.
struct BudgetFault : SimError {
  using SimError::SimError;
};

// Invalid configuration (e.g. adversarial policy with a pull-only protocol).
struct ConfigError : SimError {
  using SimError::SimError;
};

// A protocol detected broken preconditions at run time (e.g. nxt_port chain).
struct ProtocolFault : SimError {
  using SimError::SimError;
};

// Routing decision hit a malformed label or dangling link.
struct RoutingFault : SimError {
  using SimError::SimError;
};

// Out-of-scope request (delete root, repeated deletion, ...).
struct UnsupportedOperation : SimError {
  using SimError::SimError;
};

}  // namespace cmp
