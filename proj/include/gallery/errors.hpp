#pragma once

#include <stdexcept>
#include <string>

namespace gallery {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Line intersection requested for parallel or identical lines.
struct ParallelLines : Error {
  ParallelLines() : Error("parallel lines have no unique intersection") {}
};

// A polygon operation received a non-simple or non-CCW boundary.
struct NotSimple : Error {
  explicit NotSimple(const std::string& what) : Error("polygon not simple: " + what) {}
};

// Visibility or coverage query with a point outside the closed polygon.
struct PointOutside : Error {
  explicit PointOutside(const std::string& what) : Error("point outside polygon: " + what) {}
};

// Enumeration budget exceeded in a brute-force solver.
struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error("instance too large: " + what) {}
};

// A construction invariant failed while building an instance.
struct GeometryDegenerate : Error {
  explicit GeometryDegenerate(const std::string& what) : Error("degenerate construction: " + what) {}
};

// Malformed text in one of the interchange formats.
struct FormatError : Error {
  explicit FormatError(const std::string& what) : Error("format error: " + what) {}
};

struct UnknownPocket : Error {
  using Error::Error;
};

struct InvalidInstance : Error {
  explicit InvalidInstance(const std::string& what) : Error("invalid instance: " + what) {}
};

}  // namespace gallery
