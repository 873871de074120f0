#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vac/expr.hpp"

namespace vac {

// Presented vertex algebra: named generators, a bracket table storing one
// orientation per unordered pair (pole -> coefficient expression over the
// presentation's generators; omitted pairs have regular OPE), relation fields
// and an optional conformal vector.
struct AlgebraPresentation {
    std::string name;
    std::vector<std::string> gens;
    std::map<std::pair<std::string, std::string>, std::map<int, ExprPtr>> brackets;
    std::vector<ExprPtr> relations;
    ExprPtr conformal; // may be null

    bool hasGen(const std::string& g) const;
    // Entry for the pair in stored orientation: returns the key actually
    // stored ((x,y) or (y,x)) or nullopt when the pair is regular.
    std::optional<std::pair<std::string, std::string>> storedPair(
        const std::string& x, const std::string& y) const;
};

// Generator images defining a homomorphism from a presented algebra into a
// free-field target.
struct HomAssignment {
    std::string name;
    std::string source; // presentation name
    std::string target; // free-field algebra name
    std::map<std::string, ExprPtr> images;
};

// Data for the second (right) free-field embedding of the affine algebra:
// function-coefficient matrix, one-form images, and the invariant pairing.
struct PiRData {
    std::vector<std::string> currents; // e, h, f
    std::map<std::pair<std::string, std::string>, ExprPtr> coeff; // f^{i,j}
    std::map<std::string, ExprPtr> omega;                          // omega_j
    std::map<std::pair<std::string, std::string>, Scalar> pairing; // (x,y)
};

// The quantum-to-classical generator dictionary used by the C2 comparison.
struct C2Dictionary {
    // quantum generator -> (classical generator, sign)
    std::map<std::string, std::pair<std::string, Scalar>> entries;
};

const AlgebraPresentation& builtinPresentation(const std::string& name);
const HomAssignment& builtinHom(const std::string& name);
ExprPtr builtinExpr(const std::string& name); // omega_U, omega_I
const PiRData& builtinPiR();
const C2Dictionary& builtinC2Dictionary();

// Free-field target algebras by name: EL, BetaGamma, BxEL, DchU.
const Algebra& targetAlgebra(const std::string& name);

// Names accepted by builtin lookups (for diagnostics).
std::vector<std::string> builtinNames();

// Identity assignment of a presentation whose generators are free-field
// generator names.
HomAssignment identityHom(const AlgebraPresentation& p, const std::string& target);

// Parse the line-oriented definition format:
//   algebra <name> / generators: g1 g2 ... /
//   bracket g1 g2 : <pole>=<expr> ; ... / relation: <expr> / conformal: <expr>
//   map <name> from <algebra> to <target> / image g : <expr>
// Returns all blocks; load_presentation returns the single algebra block.
struct Definitions {
    std::vector<AlgebraPresentation> algebras;
    std::vector<HomAssignment> maps;
};
Definitions load_definitions(const std::string& text);
AlgebraPresentation load_presentation(const std::string& text);

// Rendering for display and round-trip checks.
std::string renderPresentation(const AlgebraPresentation& p);
std::string renderHom(const HomAssignment& h);

} // namespace vac
