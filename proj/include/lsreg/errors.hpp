#pragma once

#include <stdexcept>
#include <string>

namespace lsreg {

// Any input that leaves the domain of one of the maps surfaces as a
// DomainError. Callers that only care about "this point is bad, skip it"
// (the scans, the finite-difference probes) catch this base; callers that
// need to distinguish catch the concrete type. The CLI maps these to exit
// code 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(const char* kind, const std::string& msg)
      : std::runtime_error(std::string(kind) + ": " + msg), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

#define LSREG_DEFINE_ERROR(NAME)                              \
  class NAME : public DomainError {                           \
   public:                                                    \
    explicit NAME(const std::string& msg)                     \
        : DomainError(#NAME, msg) {}                          \
  }

LSREG_DEFINE_ERROR(CollisionState);         // |q| = 0
LSREG_DEFINE_ERROR(ZeroEnergy);             // |H| inside the dead zone around 0
LSREG_DEFINE_ERROR(DegenerateDenominator);  // 1 - r0 (or a norm it divides by) vanishes
LSREG_DEFINE_ERROR(NonFinite);              // NaN or infinity in an input
LSREG_DEFINE_ERROR(NoRootInBracket);        // transcendental solve found no sign change
LSREG_DEFINE_ERROR(NorthPole);              // stereographic chart undefined at xi0 = 1
LSREG_DEFINE_ERROR(ZeroZ);                  // squaring map needs z != 0
LSREG_DEFINE_ERROR(ZeroY);                  // inverse squaring map needs y != 0
LSREG_DEFINE_ERROR(ZeroPoint);              // Hamiltonian undefined at w = z = 0
LSREG_DEFINE_ERROR(PrimaryCollision);       // rotating-frame state on top of a primary
LSREG_DEFINE_ERROR(EvaluationFailed);       // a finite-difference probe left the domain
LSREG_DEFINE_ERROR(ZeroGradient);           // level set has no well-defined tangent space
LSREG_DEFINE_ERROR(InfeasibleStart);        // minimizer started outside the feasible set
LSREG_DEFINE_ERROR(AllNegative);            // no cutoff radius separates the negative bins
LSREG_DEFINE_ERROR(NonNegativeEnergy);      // operation requires a bound orbit

#undef LSREG_DEFINE_ERROR

}  // namespace lsreg
