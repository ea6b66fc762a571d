#pragma once

#include <stdexcept>
#include <string>

namespace homcheck {

/// Base class of every error raised by the library. `kind()` is a stable
/// identifier used by reports and by the CLI exit-code mapping.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HOMCHECK_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name, what) {}    \
  };

HOMCHECK_DEFINE_ERROR(DomainError)
HOMCHECK_DEFINE_ERROR(DenominatorVanishes)
HOMCHECK_DEFINE_ERROR(SymbolTableSealed)
HOMCHECK_DEFINE_ERROR(StepBudgetExceeded)
HOMCHECK_DEFINE_ERROR(OutOfWindow)
HOMCHECK_DEFINE_ERROR(WindowOverflow)
HOMCHECK_DEFINE_ERROR(NotEndomorphism)
HOMCHECK_DEFINE_ERROR(NotOrderPreserving)
HOMCHECK_DEFINE_ERROR(RuleOrderViolation)
HOMCHECK_DEFINE_ERROR(RelationViolated)
HOMCHECK_DEFINE_ERROR(SurjectivityUnverified)
HOMCHECK_DEFINE_ERROR(InjectivityUnverified)
HOMCHECK_DEFINE_ERROR(CompatibilityFailed)
HOMCHECK_DEFINE_ERROR(NonunitXiForbidden)
HOMCHECK_DEFINE_ERROR(StructureMismatch)

#undef HOMCHECK_DEFINE_ERROR

}  // namespace homcheck
