#pragma once

#include <stdexcept>
#include <string>

namespace kgw {

// Base for every error raised by the library. Operations named "check" or
// "suite" never throw; they report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KGW_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

KGW_DEFINE_ERROR(InvalidMorphism);
KGW_DEFINE_ERROR(TypeMismatch);
KGW_DEFINE_ERROR(NotAConflation);
KGW_DEFINE_ERROR(NotAnInflation);
KGW_DEFINE_ERROR(NotADeflation);
KGW_DEFINE_ERROR(NoFill);
KGW_DEFINE_ERROR(InvalidForm);
KGW_DEFINE_ERROR(NotIsotropic);
KGW_DEFINE_ERROR(NotLagrangian);
KGW_DEFINE_ERROR(RestrictionDegenerate);
KGW_DEFINE_ERROR(NotHyperbolic);
KGW_DEFINE_ERROR(UnknownObject);
KGW_DEFINE_ERROR(AssociativityViolation);
KGW_DEFINE_ERROR(UnitViolation);
KGW_DEFINE_ERROR(CompositionViolation);
KGW_DEFINE_ERROR(ParseError);
KGW_DEFINE_ERROR(SizeLimit);
KGW_DEFINE_ERROR(UsageError);
KGW_DEFINE_ERROR(IOError);

#undef KGW_DEFINE_ERROR

}  // namespace kgw
