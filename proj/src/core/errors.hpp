#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace freelip {

// A rejected input: metric axiom violations, bad witnesses, mode mixing and
// friends. `code` is a stable machine-readable tag; `details` names the
// offending points/values so callers can surface the witness of the failure.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message,
              nlohmann::json details = nlohmann::json::object())
      : std::runtime_error(message),
        code_(std::move(code)),
        details_(std::move(details)) {}

  const std::string& code() const { return code_; }
  const nlohmann::json& details() const { return details_; }

 private:
  std::string code_;
  nlohmann::json details_;
};

// Malformed input text: JSON syntax or schema problems, bad literals.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace freelip
