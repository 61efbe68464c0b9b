#pragma once

#include <stdexcept>
#include <string>

namespace tfkit {

// Every failure raised by the library derives from Error so callers can
// catch the whole family at once; the subclasses mirror the error kinds
// named in the operation contracts.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGroup : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct InvalidLattice : Error {
  using Error::Error;
};

struct ZeroWindow : Error {
  using Error::Error;
};

// Carries the bounds that were measured when the frame test failed.
struct NonFrame : Error {
  NonFrame(const std::string& what, double lower, double upper)
      : Error(what), lower_bound(lower), upper_bound(upper) {}
  double lower_bound;
  double upper_bound;
};

struct NotParseval : Error {
  using Error::Error;
};

}  // namespace tfkit
