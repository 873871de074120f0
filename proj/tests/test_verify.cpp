#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "vac/errors.hpp"
#include "vac/parse.hpp"
#include "vac/render.hpp"
#include "vac/verify.hpp"

using namespace vac;

namespace {

Scalar ki(long v) { return Scalar::fromInt(v); }

const CheckResult* findCheck(const VerificationReport& r, const std::string& needle) {
    for (const auto& c : r.checks)
        if (c.label.find(needle) != std::string::npos) return &c;
    return nullptr;
}

bool hasNote(const VerificationReport& r, const std::string& needle) {
    for (const auto& n : r.notes)
        if (n.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("identity assignment is a homomorphism") {
    Engine eng(Level::symbolic());
    const AlgebraPresentation& el = builtinPresentation("EL");
    VerificationReport rep = verify_hom(el, identityHom(el, "EL"), eng);
    CHECK(rep.overall());
    CHECK(rep.checks.size() == 7); // 6 unordered pairs + 1 relation
    CHECK(findCheck(rep, "[lamp,lamm] regular") != nullptr);
    CHECK(findCheck(rep, "relation 1 maps to zero") != nullptr);
}

TEST_CASE("builtin map suites pass symbolically and at numeric levels") {
    for (const char* name : {"map_nu", "map_ds1", "map_r"}) {
        VerificationReport sym = verify_hom_by_name(name, Level::symbolic());
        CHECK(sym.overall());
        CHECK(sym.level == "symbolic");
        for (const auto& c : sym.checks) CHECK(c.residual.empty());

        VerificationReport num = verify_hom_by_name(name, Level::at(BigRat(1)));
        CHECK(num.overall());
        CHECK(num.level == "1");
        CHECK(num.checks.size() == sym.checks.size());
    }
    // check counts: 3 source generators for nu, 5 for ds1, 7 for r
    CHECK(verify_hom_by_name("map_nu", Level::symbolic()).checks.size() == 7);
    CHECK(verify_hom_by_name("map_ds1", Level::symbolic()).checks.size() == 16);
    CHECK(verify_hom_by_name("map_r", Level::symbolic()).checks.size() == 29);
}

TEST_CASE("a corrupted image fails with a rendered residual") {
    Engine eng(Level::symbolic());
    HomAssignment bad = builtinHom("map_nu");
    bad.images["C"] = eScale(ki(2), bad.images["C"]);
    VerificationReport rep = verify_hom(builtinPresentation("Itilde"), bad, eng);
    CHECK_FALSE(rep.overall());
    bool sawResidual = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.residual.empty()) sawResidual = true;
    CHECK(sawResidual);
}

TEST_CASE("second affine family closes at the dual level") {
    VerificationReport rep = verify_pi_R(Level::symbolic());
    CHECK(rep.overall());
    CHECK(hasNote(rep, "alpha = +1"));
    CHECK(hasNote(rep, "-(k+4)"));
    CHECK(findCheck(rep, "commutant") != nullptr);
}

TEST_CASE("central charges of the three conformal vectors") {
    Engine eng(Level::symbolic());
    VirasoroData unit =
        central_charge(builtinExpr("omega_I"), targetAlgebra("EL"), eng);
    CHECK(renderScalar(unit.centralCharge) == "26");

    VirasoroData full =
        central_charge(builtinExpr("omega_U"), targetAlgebra("DchU"), eng);
    CHECK(renderScalar(full.centralCharge) == "6");

    ExprPtr quad = eScale(Scalar::fromInt(-1) / (Scalar::k() + ki(2)),
                          builtinHom("map_nu").images.at("F"));
    VirasoroData q = central_charge(quad, targetAlgebra("EL"), eng);
    CHECK(renderScalar(q.centralCharge) == "-(2*k+1)*(3*k+4)/(k+2)");

    CHECK_THROWS_AS(central_charge(parse_expr("lamp"), targetAlgebra("EL"), eng),
                    NotVirasoro);
}

TEST_CASE("quadratic-image central charge equals the closed form") {
    Scalar k = Scalar::k();
    Scalar lhs = Scalar::fromInt(-1) * (ki(2) * k + ki(1)) * (ki(3) * k + ki(4)) /
                 (k + ki(2));
    Scalar rhs = ki(1) - ki(6) * (k + ki(1)) * (k + ki(1)) / (k + ki(2));
    CHECK(lhs == rhs);
}

TEST_CASE("conformal weights and primality") {
    Engine eng(Level::symbolic());
    ExprPtr L = builtinExpr("omega_U");
    const Algebra& dchu = targetAlgebra("DchU");
    WeightInfo bx = weight_of(L, parse_expr("bx"), dchu, eng);
    CHECK(renderScalar(bx.delta) == "1");
    WeightInfo gx = weight_of(L, parse_expr("gx"), dchu, eng);
    CHECK(renderScalar(gx.delta) == "0");
    CHECK_THROWS_AS(weight_of(L, parse_expr("bx + :(bx bx):"), dchu, eng), NotEigen);
}

TEST_CASE("conformal suite passes and skips the quadratic image at the pole") {
    VerificationReport sym = conformal_suite(Level::symbolic());
    CHECK(sym.overall());
    CHECK(findCheck(sym, "central charge 26") != nullptr);

    VerificationReport critical = conformal_suite(Level::at(BigRat(-2)));
    CHECK(critical.overall());
    CHECK(hasNote(critical, "skipped"));
}

TEST_CASE("axiom suite on small random samples") {
    const Algebra& el = targetAlgebra("EL");
    VerificationReport rep = run_axiom_suite(el, 2, 10, 42, Level::symbolic());
    CHECK(rep.overall());
    CHECK(rep.checks.size() == 5);

    // deterministic under the seed
    VerificationReport again = run_axiom_suite(el, 2, 10, 42, Level::symbolic());
    CHECK(toJson(rep) == toJson(again));

    // grading cap zero still produces valid (charge-sector) fields
    CHECK(run_axiom_suite(el, 0, 5, 7, Level::symbolic()).overall());
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.suite = "demo";
    rep.level = "symbolic";
    rep.add("first", true);
    rep.add("second", false, "leftover");
    rep.notes.push_back("calibration note");

    CHECK_FALSE(rep.overall());
    std::string text = toText(rep);
    CHECK(text.find("pass  first") != std::string::npos);
    CHECK(text.find("FAIL  second") != std::string::npos);
    CHECK(text.find("residual: leftover") != std::string::npos);
    CHECK(text.find("overall: FAIL") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(toJson(rep));
    CHECK(j["suite"] == "demo");
    CHECK(j["level"] == "symbolic");
    CHECK(j["overall"] == false);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["label"] == "first");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK(j["checks"][1]["residual_rendered"] == "leftover");
    CHECK(j["notes"][0] == "calibration note");

    // passing checks never carry a residual
    rep.add("third", true, "ignored");
    CHECK(rep.checks.back().residual.empty());
}
