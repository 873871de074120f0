#pragma once

// Independent oracle for the free-field engine, used only by tests.
//
// Realizes the vacuum module as a polynomial space and every generator as an
// explicit family of modes acting on it. Nothing here calls the engine's
// normal-product or bracket routines, so agreement between engine n-th
// products and oracle mode actions is a genuine cross-check.
//
// Module: polynomials in
//   c0^{+-1}, c1, c2, ...   (charge-slot gamma tower, c0 invertible)
//   b1, b2, ...             (charge-slot beta tower)
//   xc0, xc1, ..., xb1, ... (slot-x beta-gamma tower)
//   yc0, yc1, ..., yb1, ... (slot-y beta-gamma tower)
// with coefficients in Q(k).
//
// Generator realization on the charge slot: lamp acts as the gamma tower,
// lamm as its formal inverse (defined by a mode recursion), and
// eta = :beta gamma: + (k + 5/2) :(d gamma) inverse:.

#include <map>
#include <memory>
#include <vector>

#include "vac/engine.hpp"

namespace fock {

using vac::Scalar;

enum class Fam : uint8_t { ELB, ELC, XB, XC, YB, YC };

struct VarExp {
  Fam f;
  int idx;
  int exp; // > 0

  auto operator<=>(const VarExp&) const = default;
};

// One monomial of the module: c0 exponent (any integer) plus the remaining
// variables sorted by (family, index).
struct FMono {
  int c0 = 0;
  std::vector<VarExp> v;

  auto operator<=>(const FMono&) const = default;
  int weight() const;
};

// Linear combination, no zero coefficients.
using FVec = std::map<FMono, Scalar>;

FVec fvScaled(const FVec& a, const Scalar& s);
void fvAdd(FVec& into, const FVec& a, const Scalar& s = Scalar::fromInt(1));
bool fvEqual(const FVec& a, const FVec& b);

// A weight-homogeneous field: modes n act on the module, mode n shifts weight
// by delta - n - 1. States of negative weight do not exist, which bounds every
// mode sum.
struct FField {
  int delta = 0;
  virtual ~FField() = default;
  virtual FVec modeMono(long n, const FMono& m) const = 0;
  FVec mode(long n, const FVec& x) const;
};

using FFieldPtr = std::shared_ptr<const FField>;

// Oracle context: shared mode memo for the inverse field plus field and state
// caches keyed by engine monomials.
class Oracle {
 public:
  Oracle();

  // Field attached to a canonical engine monomial (right-nested normal
  // product of its factors; unit field for the vacuum).
  FFieldPtr fieldFor(vac::MonoId id);
  FFieldPtr fieldForFactor(const vac::Factor& f);

  // State of a monomial / field: factor modes at -1 applied to the vacuum.
  FVec stateOf(vac::MonoId id);
  FVec stateOf(const vac::Field& f);

  // a_(n) b computed purely by oracle modes.
  FVec nthState(vac::MonoId a, long n, vac::MonoId b);

 private:
  FFieldPtr beta_, gamma_, inv_, eta_;
  FFieldPtr bx_, gx_, by_, gy_;
  std::map<std::pair<int, int>, FFieldPtr> factorCache_;
  std::map<vac::MonoId, FFieldPtr> fieldCache_;
  std::map<vac::MonoId, FVec> stateCache_;
};

} // namespace fock
