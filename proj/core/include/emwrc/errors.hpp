#pragma once

#include <stdexcept>
#include <string>

namespace emwrc {

// Base class for all library errors so callers can catch emwrc::Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// GF(2) layer
struct ErasedOperand : Error {
  using Error::Error;
};
struct InconsistentSystem : Error {
  using Error::Error;
};

// Strategy / analytics layer
struct TooFewUsers : Error {
  using Error::Error;
};
struct SchemeMismatch : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NegativeMass : Error {
  using Error::Error;
};

// Oracle / harness layer
struct TooLarge : Error {
  using Error::Error;
};
struct RoundLimitExceeded : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace emwrc
