#ifndef UNCERTAIN_VALIDATION_HPP
#define UNCERTAIN_VALIDATION_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uncertain {

// One failed invariant. `where` locates the offending piece of data
// (element id, edge, key) and `message` states the violated condition.
struct Violation {
  std::string code;
  std::string where;
  std::string message;
};

class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string code, std::string where, std::string message) {
    violations_.push_back({std::move(code), std::move(where), std::move(message)});
  }

  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

  bool has(const std::string& code) const {
    for (const auto& v : violations_)
      if (v.code == code) return true;
    return false;
  }

  std::string to_string() const {
    std::ostringstream out;
    for (const auto& v : violations_) {
      out << v.code;
      if (!v.where.empty()) out << " at " << v.where;
      out << ": " << v.message << "\n";
    }
    return out.str();
  }

 private:
  std::vector<Violation> violations_;
};

// Precondition failures. Validation findings go into ValidationReport;
// these are thrown only when an operation cannot produce a result at all.
struct DomainError : std::runtime_error {
  DomainError(std::string code_, const std::string& what_)
      : std::runtime_error(what_), code(std::move(code_)) {}
  std::string code;
};

struct ArityMismatchError : DomainError {
  explicit ArityMismatchError(const std::string& what_)
      : DomainError("ArityMismatch", what_) {}
};
struct NoPathError : DomainError {
  explicit NoPathError(const std::string& what_) : DomainError("NoPath", what_) {}
};
struct NoWitnessError : DomainError {
  explicit NoWitnessError(const std::string& what_)
      : DomainError("NoWitness", what_) {}
};
struct NotSingletonError : DomainError {
  explicit NotSingletonError(const std::string& what_)
      : DomainError("NotSingleton", what_) {}
};
struct TooFewEvaluationsError : DomainError {
  explicit TooFewEvaluationsError(const std::string& what_)
      : DomainError("TooFewEvaluations", what_) {}
};
struct UnsupportedDimsError : DomainError {
  explicit UnsupportedDimsError(const std::string& what_)
      : DomainError("UnsupportedDims", what_) {}
};
struct AmbiguousValueError : DomainError {
  explicit AmbiguousValueError(const std::string& what_)
      : DomainError("AmbiguousValue", what_) {}
};
struct WrongDepthError : DomainError {
  explicit WrongDepthError(const std::string& what_)
      : DomainError("WrongDepth", what_) {}
};
struct BadKeyError : DomainError {
  explicit BadKeyError(const std::string& what_) : DomainError("BadKey", what_) {}
};
struct WrongArityError : DomainError {
  explicit WrongArityError(const std::string& what_)
      : DomainError("WrongArity", what_) {}
};
struct UniverseMismatchError : DomainError {
  explicit UniverseMismatchError(const std::string& what_)
      : DomainError("UniverseMismatch", what_) {}
};
struct NotASubsetError : DomainError {
  explicit NotASubsetError(const std::string& what_)
      : DomainError("NotASubset", what_) {}
};
struct CapExceededError : DomainError {
  CapExceededError(const std::string& what_, std::string predicted_)
      : DomainError("CapExceeded", what_), predicted(std::move(predicted_)) {}
  std::string predicted;  // e.g. "4294967296" or "2^256"
};
struct EmptyAfterNormalizationError : DomainError {
  explicit EmptyAfterNormalizationError(const std::string& what_)
      : DomainError("EmptyAfterNormalization", what_) {}
};
struct NonBinaryEdgeError : DomainError {
  explicit NonBinaryEdgeError(const std::string& what_)
      : DomainError("NonBinaryEdge", what_) {}
};
struct NonSingletonError : DomainError {
  explicit NonSingletonError(const std::string& what_)
      : DomainError("NonSingleton", what_) {}
};
struct UnmentionedError : DomainError {
  explicit UnmentionedError(const std::string& what_)
      : DomainError("Unmentioned", what_) {}
};
struct DisconnectedBaseError : DomainError {
  explicit DisconnectedBaseError(const std::string& what_)
      : DomainError("DisconnectedBase", what_) {}
};
struct WitnessFailureError : DomainError {
  WitnessFailureError(const std::string& what_, std::string edge_)
      : DomainError("WitnessFailure", what_), edge(std::move(edge_)) {}
  std::string edge;
};
struct UnknownKindError : DomainError {
  explicit UnknownKindError(const std::string& what_)
      : DomainError("UnknownKind", what_) {}
};
struct NotEquivalenceError : DomainError {
  explicit NotEquivalenceError(const std::string& what_)
      : DomainError("NotEquivalence", what_) {}
};

}  // namespace uncertain

#endif
