// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace docdeg {

/// Malformed input file (PBM, TIFF, CSV, JSON).
class ParseError : public std::runtime_error {
public:
  enum class Kind { bad_magic, truncated, bad_dimensions, malformed };

  ParseError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Well-formed input that uses a feature this library does not decode.
class UnsupportedFeature : public std::runtime_error {
public:
  explicit UnsupportedFeature(const std::string& feature)
      : std::runtime_error("unsupported TIFF feature: " + feature),
        feature_(feature) {}

  const std::string& feature() const noexcept { return feature_; }

private:
  std::string feature_;
};

class DegenerateDesign : public std::runtime_error {
public:
  DegenerateDesign() : std::runtime_error("degenerate design") {}
};

class InsufficientData : public std::runtime_error {
public:
  InsufficientData() : std::runtime_error("insufficient data") {}
};

class LayoutError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace docdeg
