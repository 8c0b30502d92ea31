#ifndef SIMR_ERRORS_HPP
#define SIMR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateFit : Error {
  DegenerateFit() : Error("all points share the same x coordinate") {}
};

struct EmptyText : Error {
  EmptyText() : Error("text has zero characters") {}
};

struct EmptyChainSet : Error {
  EmptyChainSet() : Error("no chains to choose from") {}
};

struct EmptyGold : Error {
  EmptyGold() : Error("gold TBM has no points") {}
};

struct SegmentCountMismatch : Error {
  SegmentCountMismatch(std::size_t nx, std::size_t ny)
      : Error("segment counts differ: " + std::to_string(nx) + " vs " +
              std::to_string(ny)) {}
};

struct TextReconstructionMismatch : Error {
  explicit TextReconstructionMismatch(const std::string& which)
      : Error("concatenated " + which +
              " segments do not reproduce the raw text") {}
};

struct InvalidBounds : Error {
  explicit InvalidBounds(const std::string& what) : Error(what) {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace simr

#endif
