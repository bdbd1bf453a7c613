#pragma once

#include <stdexcept>
#include <string>

namespace netcx {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed value (bad CIDR, bad taxonomy line, bad parameters).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Input text that does not follow a dialect profile.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A (dialect, type_name) pair with no taxonomy entry.
class TaxonomyError : public Error {
public:
  TaxonomyError(std::string dialect, std::string type_name)
      : Error("unmapped type '" + type_name + "' in dialect '" + dialect + "'"),
        dialect_(std::move(dialect)), type_name_(std::move(type_name)) {}

  const std::string &dialect() const noexcept { return dialect_; }
  const std::string &type_name() const noexcept { return type_name_; }

private:
  std::string dialect_;
  std::string type_name_;
};

/// Graph construction failure, e.g. an unresolved tight reference.
class BuildError : public Error {
public:
  using Error::Error;
};

/// Metric undefined for the given graph (zero endpoints).
class MetricsError : public Error {
public:
  using Error::Error;
};

} // namespace netcx
