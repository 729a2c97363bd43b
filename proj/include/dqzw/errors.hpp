// Exception types shared across the library.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqzw {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ZeroDivisor : Error {
  using Error::Error;
};

// Leading minor `minor_index` (1-based) of the standard part is singular.
struct SingularMinor : Error {
  explicit SingularMinor(int index, const std::string& context = "")
      : Error(context + "singular leading minor " + std::to_string(index)),
        minor_index(index) {}
  int minor_index;
};

struct RankDeficient : Error {
  explicit RankDeficient(int col, const std::string& context = "")
      : Error(context + "rank-deficient standard part at diagonal " + std::to_string(col + 1)),
        column(col) {}
  int column;
};

struct DegenerateSpectrum : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

struct UndefinedDivision : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct NotAppreciable : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

struct NotSquare : Error {
  using Error::Error;
};

struct BadKey : Error {
  using Error::Error;
};

struct BadParameters : Error {
  using Error::Error;
};

struct ZeroImage : Error {
  using Error::Error;
};

struct FormatError : Error {
  FormatError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  explicit FormatError(const std::string& msg) : Error(msg), offset(0) {}
  std::size_t offset;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace dqzw
