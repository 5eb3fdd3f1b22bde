// Exception types shared across the library.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupcover {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// group construction
struct InvalidPermutation : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
struct InvalidTable : Error { using Error::Error; };

// lattice / quotients
struct LatticeCapExceeded : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };

// isomorphism search and cover enumeration share a generic cap error
struct CapExceeded : Error { using Error::Error; };

// covers
struct ForeignSubgroup : Error { using Error::Error; };
struct EmptyMaximalList : Error { using Error::Error; };
struct CyclicGroupError : Error { using Error::Error; };
struct TargetMismatch : Error { using Error::Error; };

// product maximals / theorem engine
struct NotAProduct : Error { using Error::Error; };
struct DescriptorMismatch : Error { using Error::Error; };
struct NotMinimal : Error { using Error::Error; };
struct BadQuotients : Error { using Error::Error; };
struct NotVerified : Error { using Error::Error; };
struct WrongSize : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

// expression parsing
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos + 1) + ")"), position(pos) {}
  std::size_t position;
};
struct CapError : Error { using Error::Error; };

}  // namespace groupcover
