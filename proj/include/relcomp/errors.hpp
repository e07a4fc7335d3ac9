#pragma once

#include <stdexcept>
#include <string>

namespace relcomp {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Cover relation contains a directed cycle.
struct CycleError : Error { using Error::Error; };

/// Some pair of elements has no unique least upper / greatest lower bound.
struct NotALattice : Error {
  NotALattice(const std::string& msg, unsigned first, unsigned second)
      : Error(msg), x(first), y(second) {}
  unsigned x;  // first offending pair, ascending (x, y)
  unsigned y;
};

/// No unique least or greatest element.
struct NoBounds : Error { using Error::Error; };

/// Interval bounds a, b with a not below b.
struct NotComparable : Error { using Error::Error; };

/// Element or subset not contained in the interval it is queried against.
struct OutsideInterval : Error { using Error::Error; };

/// Two element sets over different lattices were combined.
struct UniverseMismatch : Error { using Error::Error; };

struct MnTooSmall : Error { using Error::Error; };
struct SizeOverflow : Error { using Error::Error; };
struct DegenerateInterval : Error { using Error::Error; };
struct InjectivityFailed : Error { using Error::Error; };
struct NotComplemented : Error { using Error::Error; };
struct BadFactors : Error { using Error::Error; };
struct SizeBound : Error { using Error::Error; };
struct UnknownStatement : Error { using Error::Error; };
struct UnknownElement : Error { using Error::Error; };

/// Lattice file syntax error; line numbers are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no) : Error(msg), line(line_no) {}
  int line;
};

}  // namespace relcomp
