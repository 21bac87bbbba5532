#pragma once

#include <stdexcept>
#include <string>

namespace f2q {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct UnsupportedScheme : Error {
  using Error::Error;
};

struct LimitExceeded : Error {
  using Error::Error;
};

}  // namespace f2q
