#pragma once

#include <stdexcept>
#include <string>

namespace gfrob {

/// Base class for every error raised by the library. `kind()` is the
/// stable machine-readable name used in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define GFROB_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

GFROB_DEFINE_ERROR(NotAGroup)
GFROB_DEFINE_ERROR(SizeLimit)
GFROB_DEFINE_ERROR(UnknownVariable)
GFROB_DEFINE_ERROR(IndexOutOfRange)
GFROB_DEFINE_ERROR(SourceTargetMismatch)
GFROB_DEFINE_ERROR(InvalidAction)
GFROB_DEFINE_ERROR(DegreeMismatch)
GFROB_DEFINE_ERROR(NotZ2)
GFROB_DEFINE_ERROR(ModuleMismatch)
GFROB_DEFINE_ERROR(InvalidMorphism)
GFROB_DEFINE_ERROR(DegenerateMetric)
GFROB_DEFINE_ERROR(UnitFails)
GFROB_DEFINE_ERROR(RestrictionMismatch)
GFROB_DEFINE_ERROR(BlockDegreeViolation)
GFROB_DEFINE_ERROR(BadIndex)
GFROB_DEFINE_ERROR(IntegrabilityFailure)
GFROB_DEFINE_ERROR(ParseError)

#undef GFROB_DEFINE_ERROR

}  // namespace gfrob
