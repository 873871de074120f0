#pragma once

#include <map>
#include <string>
#include <vector>

#include "vac/verify.hpp"

namespace vac {

// Laurent monomial: one exponent per generator of the owning presentation.
// Negative exponents are only valid on generators flagged invertible.
using PExp = std::vector<int>;
// Canonical element: sorted monomials, no zero coefficients, coefficients in Q.
using PoissonElement = std::map<PExp, BigRat>;

// Presented Poisson algebra: the bracket stores one orientation per pair and
// extends by antisymmetry, bilinearity and Leibniz.
struct PoissonPresentation {
    std::string name;
    std::vector<std::string> gens;
    std::vector<bool> invertible;
    std::map<std::pair<int, int>, PoissonElement> table;
    std::vector<PoissonElement> ideal;

    int genIndex(const std::string& g) const; // -1 when absent
    PoissonElement genElement(int i, int power = 1) const;
    PoissonElement constant(BigRat c) const;
};

struct PoissonMap {
    std::string name;
    PoissonPresentation source;
    PoissonPresentation target;
    std::map<std::string, PoissonElement> images; // elements of the target
};

bool peIsZero(const PoissonElement& e);
PoissonElement peAdd(const PoissonElement& a, const PoissonElement& b);
PoissonElement peScale(const PoissonElement& a, const BigRat& c);
PoissonElement peMul(const PoissonElement& a, const PoissonElement& b);
// Inverting requires a single-monomial element over invertible generators.
PoissonElement pePow(const PoissonElement& a, int e, const PoissonPresentation& p);

PoissonElement pbracket(const PoissonPresentation& p, const PoissonElement& f,
                        const PoissonElement& g);

// Polynomial syntax: terms of rational * name^exp factors, e.g.
// "X^2*S - Y^2 + 1", "-b*gh^-1". Throws ParseError / UnknownGenerator.
PoissonElement parsePoissonElement(const std::string& text,
                                   const PoissonPresentation& p);
std::string renderPoissonElement(const PoissonElement& e,
                                 const PoissonPresentation& p);

// Division by the leading monomial (lexicographic in generator order);
// sufficient for principal ideals whose leading term is a true monomial.
PoissonElement reduceModPrincipal(PoissonElement e, const PoissonElement& idealGen,
                                  const PoissonPresentation& p);

// Push an element of the map's source through the generator images.
PoissonElement applyPoissonMap(const PoissonElement& e, const PoissonMap& m);

// Jacobi identity on generator triples, no self-paired table entries, and
// every ideal generator a Casimir modulo the ideal.
VerificationReport check_poisson_axioms(const PoissonPresentation& p);

// Bracket transport on all generator pairs plus ideal membership of the ideal
// images; a failing constant is retried with the constant term negated and the
// calibration recorded as a note.
VerificationReport verify_poisson_map(const PoissonMap& m);

// Classical shadow of a quantum presentation: bracket = first-pole entry with
// every derivative-bearing term dropped and normal products read as
// commutative; ideal = relations treated the same way.
PoissonPresentation c2_reduce(const AlgebraPresentation& p);

// Generator dictionary as a Poisson map (quantum name -> sign * classical gen).
PoissonMap c2DictionaryMap(const C2Dictionary& dict, const PoissonPresentation& src,
                           const PoissonPresentation& tgt);

// Compares the classical shadow of the quantum relation against the stored
// Casimir, searching the overall sign and the constant-term sign; both are
// reported as notes.
VerificationReport c2_relation_check(const C2Dictionary& dict);

const PoissonPresentation& builtinPoisson(const std::string& name); // OZG, KT
const PoissonMap& builtinPoissonMap(const std::string& name);       // chart
PoissonMap identityPoissonMap(const PoissonPresentation& p);

// Definition-file block: "poisson <name>", "generators: a b*" (star marks
// invertible), "pbracket a b : <element>", "ideal: <element>".
PoissonPresentation load_poisson(const std::string& text);
std::string renderPoissonPresentation(const PoissonPresentation& p);

VerificationReport classical_suite();
VerificationReport c2_suite();

} // namespace vac
