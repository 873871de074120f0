#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vac/presentation.hpp"

namespace vac {

// One exact check: pass iff the residual vanished identically. The rendered
// residual is kept only on failure.
struct CheckResult {
    std::string label;
    bool pass;
    std::string residual;
};

struct VerificationReport {
    std::string suite;
    std::string level;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes; // calibration conventions, skipped checks

    void add(std::string label, bool pass, std::string residual = "");
    bool overall() const;
};

std::string toText(const VerificationReport& r);
std::string toJson(const VerificationReport& r);

// Checks that the generator assignment extends to a homomorphism: every
// unordered source pair must reproduce its table entry (or be regular when
// the table has none), and every relation field must map to zero.
VerificationReport verify_hom(const AlgebraPresentation& src, const HomAssignment& hom,
                              Engine& engine);
VerificationReport verify_hom_by_name(const std::string& mapName, Level level);

// Builds the second family of affine currents from the coefficient matrix and
// one-form data pushed through the first embedding, fixes the undetermined
// sign by a closure test (recorded as a note), then checks the affine OPE
// table at the dual level and regularity against the first family.
VerificationReport verify_pi_R(Level level);

struct VirasoroData {
    Scalar centralCharge;
    std::map<std::string, Scalar> weights;
    std::map<std::string, bool> primaryFlags;
};

// Requires [L_w L] = dL + 2wL + (c/12) w^3 exactly; returns c.
VirasoroData central_charge(const ExprPtr& L, const Algebra& target, Engine& engine);

struct WeightInfo {
    Scalar delta;
    bool primary;
};

// Reads the conformal weight of a from [L_w a] = da + delta*w*a + higher;
// primary iff the higher part vanishes.
WeightInfo weight_of(const ExprPtr& L, const ExprPtr& a, const Algebra& target,
                     Engine& engine);

// Central charges of the three conformal vectors plus weight spot-checks.
VerificationReport conformal_suite(Level level);

// Seeded random fields in the target, checked against skew-symmetry,
// sesquilinearity in both slots, the Jacobi identity and quasi-associativity.
VerificationReport run_axiom_suite(const Algebra& target, int maxGrading,
                                   int sampleCount, uint64_t seed, Level level);

} // namespace vac
