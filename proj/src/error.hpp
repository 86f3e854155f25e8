#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace permlat {

// Broad failure classes; the C API maps them onto status codes and the CLI
// onto exit codes (parse/invalid/range -> usage, domain -> negative verdict).
enum class ErrorClass {
  Invalid,
  Parse,
  Range,
  Domain,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& message)
      : std::runtime_error(message), cls_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const { return cls_; }
  const std::string& kind() const { return kind_; }

  static Error invalid(const std::string& msg) {
    return {ErrorClass::Invalid, "invalid-argument", msg};
  }
  static Error invalid(std::string kind, const std::string& msg) {
    return {ErrorClass::Invalid, std::move(kind), msg};
  }
  static Error parse(const std::string& msg) {
    return {ErrorClass::Parse, "parse", msg};
  }
  static Error range(std::string kind, const std::string& msg) {
    return {ErrorClass::Range, std::move(kind), msg};
  }
  static Error domain(std::string kind, const std::string& msg) {
    return {ErrorClass::Domain, std::move(kind), msg};
  }
  static Error internal(const std::string& msg) {
    return {ErrorClass::Internal, "internal", msg};
  }

 private:
  ErrorClass cls_;
  std::string kind_;
};

}  // namespace permlat
