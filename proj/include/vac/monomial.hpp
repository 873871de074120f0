#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vac/errors.hpp"

namespace vac {

// Factor sectors in canonical order. A monomial is the right-nested normally
// ordered product of its factors, factors sorted by (sector, descending order).
// CHARGE holds the power n of the invertible function lambda (lamm = power -1);
// at most one CHARGE factor, never with n = 0. JET(m) is the m-th derivative
// of lambda, m >= 1 (order-0 jets live in the charge coordinate).
enum class Sector : uint8_t {
    BX = 0,   // slot-x beta derivatives
    GX = 1,   // slot-x gamma derivatives
    ETA = 2,  // eta derivatives
    JET = 3,  // lambda jets
    CHARGE = 4,
    BY = 5,   // slot-y beta derivatives
    GY = 6,   // slot-y gamma derivatives
};

struct Factor {
    Sector s;
    int32_t m; // derivative order, or the charge value for CHARGE

    bool operator==(const Factor& o) const { return s == o.s && m == o.m; }
};

// Canonical position order: earlier sector first; within a derivative sector,
// higher order first. Returns <0, 0, >0.
int factorCmp(const Factor& a, const Factor& b);

bool factorValid(const Factor& f);

// Conformal-weight-like grading of a single factor.
int factorGrading(const Factor& f);

struct Monomial {
    std::vector<Factor> f; // canonically sorted

    bool operator==(const Monomial& o) const { return f == o.f; }
    bool isVacuum() const { return f.empty(); }
    int grading() const;
    int charge() const;
    bool canonical() const;
    // True when every factor is in the commutative function sector
    // (jets and charge only).
    bool functionOnly() const;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

using MonoId = uint32_t;
inline constexpr MonoId VACUUM_ID = 0;

// Process-wide append-only intern table; inserts are idempotent, ids are stable.
MonoId intern(const Monomial& m);
const Monomial& monomial(MonoId id);

MonoId internFactor(Factor f);

// Total order on monomials independent of interning order: by grading, then
// factor count, then lexicographic factor comparison. Used for rendering.
bool structuralLess(MonoId a, MonoId b);

// Free-field algebra descriptor: a named subset of the seven-generator
// universe, one bit per sector.
struct Algebra {
    std::string name;
    uint8_t mask = 0;

    bool allows(Sector s) const { return mask & (1u << static_cast<unsigned>(s)); }
    bool allowsMonomial(const Monomial& m) const;
};

// Generator metadata as declared per algebra.
enum class GenKind { Current, FunctionUnit, BosonB, BosonG };
struct GenSpec {
    std::string name;
    GenKind kind;
    int slot; // 0 = beta-gamma x, 1 = EL, 2 = beta-gamma y
};

// The seven concrete generators: bx gx (slot x), eta lamp lamm (EL), by gy (slot y).
const std::vector<GenSpec>& generatorUniverse();

extern const Algebra ALG_EL;
extern const Algebra ALG_BG_X;
extern const Algebra ALG_BG_Y;
extern const Algebra ALG_BX_EL;
extern const Algebra ALG_DCHU;

// Union of slots; throws SlotClash on overlap.
Algebra tensorAlgebras(const std::vector<Algebra>& parts);

// Generator name -> single-factor monomial, if the name is one of the seven.
bool lookupGenerator(const std::string& name, Factor& out);
// Sector of a generator factor for algebra-membership checks.
Sector factorSector(const Factor& f);

} // namespace vac
