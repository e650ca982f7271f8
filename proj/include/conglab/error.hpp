#pragma once

#include <stdexcept>
#include <string>

namespace conglab {

// Every precondition violation in the library throws Error with a code.
// The suite runner turns these into SKIP rows (the code name lands in the
// note column); the CLI maps them onto exit codes.
enum class ErrorCode {
  NotInvertible,      // gcd(a, m) != 1 where an inverse was required
  DivByP,             // argument divisible by p where a unit was required
  KTooLarge,          // binomial_mod needs k < p
  NonResidue,         // square root requested of a quadratic non-residue
  WrongResidueClass,  // p in the wrong class mod 4 for a two-square splitting
  ModulusMismatch,    // arithmetic between residues of different moduli
  OrderMismatch,      // arithmetic between power series of different orders
  ZeroConstantTerm,   // series inversion needs a unit constant term
  IndexPastOrder,     // coefficient index beyond series truncation order
  EvenIndex,          // tangent numbers carry odd index only
  InexactDivision,    // an exact integer division left a remainder
  NonIntegerSolution, // a triangular solve produced a non-integer
  TooLarge,           // enumeration or table size beyond the supported cap
  UnknownCheck,
  UnknownIdentity,
  UnknownFamily,
  BadArgument,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace conglab
