#ifndef AMC_VALIDATION_HPP
#define AMC_VALIDATION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace amc {

struct Violation {
  std::string axiom;
  std::vector<std::int64_t> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of checking an input against the axioms of the structure it
/// claims to be. ok() holds exactly when there are no violations.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::int64_t> witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
  std::string summary() const;
};

class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(ValidationReport report)
      : std::runtime_error(report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Either a validated value or the report explaining why validation failed.
template <class T>
class Validated {
 public:
  Validated(T value) : state_(std::move(value)) {}                   // NOLINT
  Validated(ValidationReport report) : state_(std::move(report)) {}  // NOLINT

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  /// Throws InvalidInput if validation failed.
  const T& value() const& {
    if (!ok()) throw InvalidInput(report());
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw InvalidInput(report());
    return std::get<T>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const ValidationReport& report() const {
    static const ValidationReport empty;
    return ok() ? empty : std::get<ValidationReport>(state_);
  }

 private:
  std::variant<T, ValidationReport> state_;
};

}  // namespace amc

#endif  // AMC_VALIDATION_HPP
