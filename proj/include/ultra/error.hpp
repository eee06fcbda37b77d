#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ultra {

// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An expansion would produce a polynomial whose degree exceeds the configured cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(std::uint64_t degree, std::uint64_t cap)
      : Error("degree cap exceeded: degree " + std::to_string(degree) + " > cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}

  std::uint64_t degree() const { return degree_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t degree_;
  std::uint64_t cap_;
};

// Malformed textual or JSON input. `position` is a 0-based character offset when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An internal certificate or mathematical invariant failed. Indicates a bug
// (or, for bound checks, a counterexample) and is never silently absorbed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ultra
