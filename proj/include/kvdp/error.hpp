#pragma once

#include <stdexcept>
#include <string>

namespace kvdp {

enum class Errc {
  NonPlanarEmbedding,
  MalformedRotation,
  DisconnectedGraph,
  UnknownVertex,
  NotClosedWalk,
  TerminalsNotDistinct,
  TerminalNotOnBoundary,
  OrderViolation,
  PerturbationCollision,
  BorderNotPath,
  CycleDetected,
  OverlappingSharedLevels,
  ReconstructionMismatch,
  LimitExceeded,
  Timeout,
  SpecTooSmall,
  EndpointNotOnPath,
  ParseError,
  AuditFailed,
};

const char* errc_name(Errc c);

// Hard failure. Legal negative outcomes (unreachable vertex, infeasible
// instance, empty table entry) are returned as empty optionals instead.
struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace kvdp
