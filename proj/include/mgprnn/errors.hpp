#pragma once

#include <stdexcept>
#include <string>

namespace mgprnn {

// Malformed input files (bad JSON, missing header line, ...).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed data that violates a domain invariant.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad configuration values (rates, fractions, score tables, ...).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape mismatches between data, parameters and checkpoints.
struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failed factorizations, NaN propagation and similar numeric trouble.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File I/O failures.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Metrics that are undefined for the given inputs (single-class AUROC, ...).
struct metric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mgprnn
