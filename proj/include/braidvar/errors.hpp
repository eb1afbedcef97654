#pragma once

#include <stdexcept>
#include <string>

namespace braidvar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define BV_ERROR_TYPE(Name)                  \
  struct Name : Error {                      \
    using Error::Error;                      \
    Name() : Error(#Name) {}                 \
  }

BV_ERROR_TYPE(ContextMismatch);
BV_ERROR_TYPE(DivisionByZero);
BV_ERROR_TYPE(NotInChart);
BV_ERROR_TYPE(NotAdjacent);
BV_ERROR_TYPE(InvalidChain);
BV_ERROR_TYPE(InvalidSubpoint);
BV_ERROR_TYPE(NotInComponent);
BV_ERROR_TYPE(FrozenVertex);
BV_ERROR_TYPE(DemazureNotLongest);
BV_ERROR_TYPE(Unsupported);
BV_ERROR_TYPE(NoDeepPoints);
BV_ERROR_TYPE(NotOnVariety);
BV_ERROR_TYPE(EmptyWord);
BV_ERROR_TYPE(ParseError);
// Bugs, violated internal invariants, and search stalls that should be
// impossible by theory. Never a user error.
BV_ERROR_TYPE(InternalError);

#undef BV_ERROR_TYPE

}  // namespace braidvar
