#pragma once

#include <stdexcept>
#include <string>

namespace vfl {

/// Invalid or inconsistent configuration (bad distribution parameters,
/// missing schedule constants, malformed run config).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Problems with input data: parse failures, bad labels, shape mismatches
/// at the dataset boundary.
class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Shape or tape mismatches inside the model kernels.
class ModelError : public std::runtime_error {
public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// Violations of the client/server message contract.
class ProtocolError : public std::runtime_error {
public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

/// Domain violations in the analysis toolkit (divergent constants,
/// nonpositive series values, insufficient history).
class AnalysisError : public std::runtime_error {
public:
  explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failures while reading or writing run artifacts.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vfl
