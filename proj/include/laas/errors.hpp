#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laas {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration (estimator parameters, scale factors, ...). Never
// downgraded to an undefined cell; always propagates.
struct InvalidParameter : Error {
  using Error::Error;
};

// Malformed input objects (non-finite samples, empty series, bad manifests).
struct InvalidInput : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Data-dependent failures. Sweeps catch these and record the affected grid
// cell as undefined instead of aborting the run.
struct DataError : Error {
  using Error::Error;
};

// Series too short for the requested operation.
struct TooShort : DataError {
  using DataError::DataError;
};

// No observation satisfies the attention criterion (e.g. peaks of a
// monotone series).
struct EmptySelection : DataError {
  using DataError::DataError;
};

// Coarse-graining produced no output (tau > N).
struct EmptyOutput : DataError {
  using DataError::DataError;
};

// Fewer attention observations than the scale factor requires (M < tau).
struct InsufficientAttention : DataError {
  using DataError::DataError;
};

struct EmptyFile : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::size_t line;
};

// Both samples have zero variance; t statistic / correlation undefined.
struct DegenerateVariance : Error {
  using Error::Error;
};

// Covariate missing or outside its valid domain.
struct InvalidCovariate : Error {
  using Error::Error;
};

}  // namespace laas
