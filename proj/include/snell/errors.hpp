#pragma once

#include <stdexcept>
#include <string>

namespace snell {

// Base for every rejection the engine can signal at runtime: invalid scenes,
// angles outside a law's domain, unreachable targets, solver breakdowns.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Speed profile parameters out of range, or an indicatrix that fails the
// strong-convexity requirement.
struct InvalidProfile : DomainError {
  using DomainError::DomainError;
};

// Incidence angle outside (-pi/2, pi/2), i.e. a ray that does not hit the
// interface from region 1.
struct InvalidIncidence : DomainError {
  using DomainError::DomainError;
};

// Requested raypath-parameter value outside the branch's attainable range.
struct TargetOutOfRange : DomainError {
  using DomainError::DomainError;
};

// Operation needs a critical angle that does not exist for this scene.
struct MissingCriticalAngle : DomainError {
  using DomainError::DomainError;
};

// Wavefront query at a time before the requested feature is born.
struct TooEarly : DomainError {
  using DomainError::DomainError;
};

// Iterative solver failed to bracket or converge.
struct NoConvergence : DomainError {
  using DomainError::DomainError;
};

// Trajectory segments are not contiguous in space.
struct MalformedTrajectory : DomainError {
  using DomainError::DomainError;
};

// Endpoints lie in the wrong region(s) for the requested construction.
struct RegionMismatch : DomainError {
  using DomainError::DomainError;
};

// Scene file rejected; carries the 1-based line number of the offence.
struct SceneParseError : DomainError {
  SceneParseError(int line_no, const std::string& message)
      : DomainError("line " + std::to_string(line_no) + ": " + message),
        line(line_no) {}
  int line;
};

}  // namespace snell
