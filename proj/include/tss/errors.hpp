#pragma once

#include <stdexcept>
#include <string>

namespace tss {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TSS_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

TSS_DEFINE_ERROR(ZeroDivision)
TSS_DEFINE_ERROR(NotRepresentable)
TSS_DEFINE_ERROR(ShapeMismatch)
TSS_DEFINE_ERROR(NoSolution)
TSS_DEFINE_ERROR(Singular)
TSS_DEFINE_ERROR(NoneInvertible)
TSS_DEFINE_ERROR(NotInvariant)
TSS_DEFINE_ERROR(NotComplementary)
TSS_DEFINE_ERROR(NoStrongWitness)
TSS_DEFINE_ERROR(EqualEigenvalues)
TSS_DEFINE_ERROR(DuplicateEigenvalue)
TSS_DEFINE_ERROR(NotInjective)
TSS_DEFINE_ERROR(NotAnEigenvalue)
TSS_DEFINE_ERROR(NotCommutative)
TSS_DEFINE_ERROR(MissingWitness)
TSS_DEFINE_ERROR(ParseError)
TSS_DEFINE_ERROR(KindMismatch)
TSS_DEFINE_ERROR(UnknownConstruction)
TSS_DEFINE_ERROR(BadParams)

#undef TSS_DEFINE_ERROR

}  // namespace tss
