#pragma once

#include <stdexcept>
#include <string>

namespace tiletopo {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation touched an incomplete cell or lacked the completeness
/// margin it needs to give an exact answer.
struct MarginError : Error {
  using Error::Error;
};

/// The incidence structure violates a property every genuine tiling has.
struct StructureError : Error {
  using Error::Error;
};

/// Malformed tiling or curve document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace tiletopo
