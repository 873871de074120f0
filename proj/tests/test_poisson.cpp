#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vac/errors.hpp"
#include "vac/poisson.hpp"

using namespace vac;

namespace {

PoissonElement pe(const char* text, const PoissonPresentation& p) {
    return parsePoissonElement(text, p);
}

std::string render(const PoissonElement& e, const PoissonPresentation& p) {
    return renderPoissonElement(e, p);
}

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

// Random polynomial over p with small integer coefficients and total degree
// bounded by maxDeg; invertible generators may take exponents down to -2.
PoissonElement sampleElement(const PoissonPresentation& p, std::mt19937_64& rng,
                             int maxDeg) {
    std::uniform_int_distribution<int> termCount(1, 3);
    std::uniform_int_distribution<int> coefPick(-3, 3);
    PoissonElement acc;
    int terms = termCount(rng);
    for (int t = 0; t < terms; ++t) {
        int coef = coefPick(rng);
        if (coef == 0) coef = 1;
        PExp m(p.gens.size(), 0);
        int budget = maxDeg;
        for (size_t i = 0; i < p.gens.size(); ++i) {
            if (budget <= 0) break;
            if (p.invertible[i]) {
                std::uniform_int_distribution<int> ex(-2, std::min(2, budget));
                m[i] = ex(rng);
                budget -= std::abs(m[i]);
            } else {
                std::uniform_int_distribution<int> ex(0, budget);
                m[i] = ex(rng);
                budget -= m[i];
            }
        }
        acc = peAdd(acc, PoissonElement{{m, BigRat(coef)}});
    }
    return acc;
}

} // namespace

TEST_CASE("bracket table examples on the base presentation") {
    const PoissonPresentation& p = builtinPoisson("OZG");
    CHECK(render(pbracket(p, pe("S", p), pe("X", p)), p) == "Y");
    CHECK(render(pbracket(p, pe("X", p), pe("S", p)), p) == "-Y");
    CHECK(render(pbracket(p, pe("S", p), pe("Y", p)), p) == "X*S");
    CHECK(render(pbracket(p, pe("X", p), pe("Y", p)), p) == "-1/2*X^2");
    CHECK(peIsZero(pbracket(p, pe("X", p), pe("X", p))));
    // the stored relation is a Casimir before any reduction
    PoissonElement casimir = pe("S*X^2 - Y^2 + 1", p);
    CHECK(render(casimir, p) == "X^2*S - Y^2 + 1");
    for (const char* g : {"X", "Y", "S"})
        CHECK(peIsZero(pbracket(p, casimir, pe(g, p))));
}

TEST_CASE("element arithmetic and pretty printing") {
    const PoissonPresentation& p = builtinPoisson("OZG");
    CHECK(render(pe("1", p), p) == "1");
    CHECK(render(pe("-1/2*X^2", p), p) == "-1/2*X^2");
    CHECK(render(peAdd(pe("X", p), pe("-X", p)), p) == "0");
    CHECK(render(peMul(pe("X + 1", p), pe("X - 1", p)), p) == "X^2 - 1");
    CHECK(render(peScale(pe("2*Y", p), BigRat(1, 2)), p) == "Y");
    CHECK(render(pePow(pe("X + Y", p), 2, p), p) == "X^2 + 2*X*Y + Y^2");
    CHECK(render(pePow(pe("3*X", p), 0, p), p) == "1");
    CHECK_THROWS_AS(pePow(pe("X + Y", p), -1, p), Error);
    CHECK_THROWS_AS(pePow(pe("X", p), -1, p), Error); // X is not invertible

    const PoissonPresentation& kt = builtinPoisson("KT");
    CHECK(render(pePow(pe("2*gh", kt), -2, kt), kt) == "1/4*gh^-2");
    CHECK(render(pe("b^2 + gh^2", kt), kt) == "gh^2 + b^2");
}

TEST_CASE("element parser rejects malformed input") {
    const PoissonPresentation& p = builtinPoisson("OZG");
    CHECK_THROWS_AS(pe("Q", p), UnknownGenerator);
    CHECK_THROWS_AS(pe("X^-1", p), ParseError);     // not invertible
    CHECK_THROWS_AS(pe("X Y", p), ParseError);      // missing operator
    CHECK_THROWS_AS(pe("2*", p), ParseError);
    CHECK_THROWS_AS(pe("X^", p), ParseError);
    CHECK_THROWS_AS(pe("1/0", p), DivisionByZero);
    try {
        pe("X + ", p);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
        CHECK(e.expected == "generator name");
    }
}

TEST_CASE("render and reparse round-trips") {
    const PoissonPresentation& p = builtinPoisson("OZG");
    const PoissonPresentation& kt = builtinPoisson("KT");
    for (const char* t :
         {"X^2*S - Y^2 + 1", "-1/2*X^2", "Y", "3/4*X*Y*S", "X^3 - 2*X + 5"}) {
        PoissonElement e = pe(t, p);
        CHECK(parsePoissonElement(render(e, p), p) == e);
    }
    for (const char* t : {"gh^-1", "-b*gh^-1", "gh^2 + b^2", "1/4*gh^-2*b"}) {
        PoissonElement e = pe(t, kt);
        CHECK(parsePoissonElement(render(e, kt), kt) == e);
    }
}

TEST_CASE("principal reduction divides by the leading monomial") {
    const PoissonPresentation& p = builtinPoisson("OZG");
    PoissonElement ideal = pe("S*X^2 - Y^2 + 1", p);
    CHECK(peIsZero(reduceModPrincipal(pe("S*X^2 - Y^2 + 1", p), ideal, p)));
    CHECK(peIsZero(reduceModPrincipal(pe("2*S^2*X^2 - 2*S*Y^2 + 2*S", p), ideal, p)));
    // leading term not divisible: untouched
    CHECK(render(reduceModPrincipal(pe("X^2 + 1", p), ideal, p), p) == "X^2 + 1");
    CHECK(render(reduceModPrincipal(pe("S*X^2", p), ideal, p), p) == "Y^2 - 1");
}

TEST_CASE("axioms hold for the builtin presentations") {
    VerificationReport ozg = check_poisson_axioms(builtinPoisson("OZG"));
    CHECK(ozg.overall());
    CHECK(ozg.checks.size() == 3);
    CHECK(ozg.notes.empty());
    VerificationReport kt = check_poisson_axioms(builtinPoisson("KT"));
    CHECK(kt.overall());
}

TEST_CASE("axioms fail for a corrupted table") {
    PoissonPresentation bad = builtinPoisson("OZG");
    bad.table[{2, 0}] = pe("X", bad); // {S,X} = X instead of Y
    VerificationReport rep = check_poisson_axioms(bad);
    CHECK_FALSE(rep.overall());
    const CheckResult* jac = findCheck(rep, "Jacobi");
    REQUIRE(jac != nullptr);
    CHECK_FALSE(jac->pass);
    CHECK(jac->residual.find("cycle") != std::string::npos);
}

TEST_CASE("self-paired table entries are rejected") {
    PoissonPresentation bad = builtinPoisson("KT");
    bad.table[{0, 0}] = pe("gh", bad);
    VerificationReport rep = check_poisson_axioms(bad);
    CHECK_FALSE(rep.overall());
    const CheckResult* c = findCheck(rep, "self-paired");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
}

TEST_CASE("chart map is Poisson and lands on the shifted sheet") {
    VerificationReport rep = verify_poisson_map(builtinPoissonMap("chart"));
    CHECK(rep.overall());
    CHECK(rep.checks.size() == 4); // 3 pairs + 1 ideal generator
    CHECK(hasNote(rep, "sigma = -1"));

    // spot values of the images
    const PoissonMap& m = builtinPoissonMap("chart");
    const PoissonPresentation& kt = m.target;
    CHECK(render(pbracket(kt, m.images.at("S"), m.images.at("X")), kt) ==
          "-gh^-1*b");
    CHECK(render(applyPoissonMap(pe("S*X^2 - Y^2 + 1", m.source), m), kt) == "2");
}

TEST_CASE("identity map transports without any calibration") {
    VerificationReport rep = verify_poisson_map(identityPoissonMap(builtinPoisson("OZG")));
    CHECK(rep.overall());
    CHECK(rep.notes.empty());
}

TEST_CASE("a broken chart image fails with a rendered residual") {
    PoissonMap bad = builtinPoissonMap("chart");
    bad.images["Y"] = pe("b*gh^-1", bad.target); // dropped sign
    VerificationReport rep = verify_poisson_map(bad);
    CHECK_FALSE(rep.overall());
    bool sawResidual = false;
    for (const auto& c : rep.checks)
        if (!c.pass && !c.residual.empty()) sawResidual = true;
    CHECK(sawResidual);
}

TEST_CASE("classical shadows of the builtin quantum presentations") {
    PoissonPresentation it = c2_reduce(builtinPresentation("Itilde"));
    CHECK(renderPoissonPresentation(it) ==
          "poisson C2(Itilde)\n"
          "generators: C D F\n"
          "pbracket C D : 1/2*C^2\n"
          "pbracket F C : D\n"
          "pbracket F D : -C*F\n"
          "ideal: C^2*F + D^2 + 1\n");

    PoissonPresentation el = c2_reduce(builtinPresentation("EL"));
    CHECK(renderPoissonPresentation(el) ==
          "poisson C2(EL)\n"
          "generators: eta lamp lamm\n"
          "pbracket eta lamp : lamp\n"
          "pbracket eta lamm : -lamm\n"
          "ideal: lamp*lamm - 1\n");

    for (const char* name : {"Itilde", "Wtilde", "EL", "DchG"}) {
        VerificationReport rep =
            check_poisson_axioms(c2_reduce(builtinPresentation(name)));
        CHECK(rep.overall());
    }
    // the quintic-family shadow needs the ideal for two Jacobi triples
    VerificationReport wt = check_poisson_axioms(c2_reduce(builtinPresentation("Wtilde")));
    CHECK(hasNote(wt, "modulo the ideal on 2 of 10 triples"));
}

TEST_CASE("level-dependent first-order coefficients refuse to classicalize") {
    AlgebraPresentation q = load_presentation(
        "algebra Toy\n"
        "generators: u v\n"
        "bracket u v : 1 = k*u\n");
    CHECK_THROWS_AS(c2_reduce(q), Error);
    // but a level-dependent coefficient on a derivative term is dropped
    AlgebraPresentation ok = load_presentation(
        "algebra Toy2\n"
        "generators: u v\n"
        "bracket u v : 1 = v + (k+2)*d(u)\n");
    PoissonPresentation p = c2_reduce(ok);
    CHECK(render(p.table.at({0, 1}), p) == "v");
}

TEST_CASE("dictionary transport and relation comparison") {
    VerificationReport rep = c2_relation_check(builtinC2Dictionary());
    CHECK(rep.overall());
    CHECK(hasNote(rep, "(-1) * (Casimir with its constant term * (-1))"));

    C2Dictionary bad = builtinC2Dictionary();
    bad.entries["D"] = {"Y", Scalar::fromInt(1)}; // sign dropped
    CHECK_FALSE(c2_relation_check(bad).overall());
    PoissonMap badMap = c2DictionaryMap(bad, c2_reduce(builtinPresentation("Itilde")),
                                        builtinPoisson("OZG"));
    CHECK_FALSE(verify_poisson_map(badMap).overall());
}

TEST_CASE("classical and c2 suites pass end to end") {
    VerificationReport cl = classical_suite();
    CHECK(cl.overall());
    CHECK(cl.suite == "classical");
    CHECK(cl.level == "level-free");
    CHECK(hasNote(cl, "chart: ideal generator 1 maps to zero after negating"));

    VerificationReport c2 = c2_suite();
    CHECK(c2.overall());
    CHECK(findCheck(c2, "relation image matches") != nullptr);
    CHECK(findCheck(c2, "charge shadow: {lamp, lamm} = 0") != nullptr);
}

TEST_CASE("poisson definition blocks round-trip") {
    for (const char* name : {"OZG", "KT"}) {
        const PoissonPresentation& p = builtinPoisson(name);
        PoissonPresentation q = load_poisson(renderPoissonPresentation(p));
        CHECK(q.name == p.name);
        CHECK(q.gens == p.gens);
        CHECK(q.invertible == p.invertible);
        CHECK(q.table == p.table);
        CHECK(q.ideal == p.ideal);
    }

    PoissonPresentation p = load_poisson(
        "# commutative toy\n"
        "poisson Toy\n"
        "generators: u* v\n"
        "pbracket u v : 2*u - 1 # tail comment\n"
        "ideal: u*v + 1\n");
    CHECK(p.name == "Toy");
    CHECK(p.invertible == std::vector<bool>{true, false});
    CHECK(render(p.table.at({0, 1}), p) == "2*u - 1");
    CHECK(p.ideal.size() == 1);
}

TEST_CASE("poisson definition blocks report malformed lines") {
    CHECK_THROWS_AS(load_poisson("generators: u v\n"), ParseError);
    CHECK_THROWS_AS(load_poisson("poisson P\n"), ParseError); // no generators
    CHECK_THROWS_AS(load_poisson("poisson P\ngenerators: u u\n"), ParseError);
    CHECK_THROWS_AS(load_poisson("poisson P\ngenerators: u v\npbracket u q : v\n"),
                    UnknownGenerator);
    CHECK_THROWS_AS(load_poisson("poisson P\ngenerators: u v\npbracket u u : v\n"),
                    ParseError);
    CHECK_THROWS_AS(
        load_poisson("poisson P\ngenerators: u v\npbracket u v : 1\npbracket v u : 1\n"),
        DuplicatePair);
    try {
        load_poisson("poisson P\ngenerators: u v\nideal: u + *\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.isLine);
        CHECK(e.position == 3);
        CHECK(e.expected.find("column") != std::string::npos);
    }
}

TEST_CASE("bracket is antisymmetric and a derivation on random elements") {
    for (const char* name : {"OZG", "KT"}) {
        const PoissonPresentation& p = builtinPoisson(name);
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        for (int trial = 0; trial < 60; ++trial) {
            PoissonElement f = sampleElement(p, rng, 4);
            PoissonElement g = sampleElement(p, rng, 4);
            PoissonElement h = sampleElement(p, rng, 3);
            CHECK(peIsZero(peAdd(pbracket(p, f, g), pbracket(p, g, f))));
            PoissonElement lhs = pbracket(p, f, peMul(g, h));
            PoissonElement rhs =
                peAdd(peMul(pbracket(p, f, g), h), peMul(g, pbracket(p, f, h)));
            CHECK(peIsZero(peAdd(lhs, peScale(rhs, BigRat(-1)))));
        }
    }
}
