#pragma once

#include <stdexcept>
#include <string>

namespace epw {

/// Base class for every error caused by bad input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a structural property that the theory guarantees fails to hold
/// (for example a witness set that is not an affine coset). These are never
/// caused by user input; the CLI reports them with a distinct exit code.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define EPW_DEFINE_ERROR(Name, Base)      \
  class Name : public Base {              \
   public:                                \
    explicit Name(const std::string& msg) \
        : Base(#Name ": " + msg) {}       \
  }

// formula
EPW_DEFINE_ERROR(SyntaxError, Error);
EPW_DEFINE_ERROR(VariableOutOfRange, Error);
EPW_DEFINE_ERROR(LengthMismatch, Error);
EPW_DEFINE_ERROR(TooManyVariables, Error);

// gf2
EPW_DEFINE_ERROR(MixedLengths, Error);
EPW_DEFINE_ERROR(NotACoset, InvariantViolation);

// obdd
EPW_DEFINE_ERROR(BadOrder, Error);
EPW_DEFINE_ERROR(OrderMismatch, Error);
EPW_DEFINE_ERROR(UnknownVariable, Error);
EPW_DEFINE_ERROR(MalformedObdd, Error);

// negequiv
EPW_DEFINE_ERROR(VariableCountMismatch, Error);

// twodag
EPW_DEFINE_ERROR(Cyclic, Error);
EPW_DEFINE_ERROR(NoRoot, Error);
EPW_DEFINE_ERROR(MultipleRoots, Error);
EPW_DEFINE_ERROR(BadOutDegree, Error);
EPW_DEFINE_ERROR(Unreachable, Error);
EPW_DEFINE_ERROR(UnknownNode, Error);
EPW_DEFINE_ERROR(DepthTooLarge, Error);

// fewamp
EPW_DEFINE_ERROR(EmptySet, Error);
EPW_DEFINE_ERROR(SetExhausted, Error);
EPW_DEFINE_ERROR(OutOfRange, Error);
EPW_DEFINE_ERROR(TooManyPaths, Error);

// cep
EPW_DEFINE_ERROR(InvalidInstance, Error);

#undef EPW_DEFINE_ERROR

}  // namespace epw
