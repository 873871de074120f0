#include "vac/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "vac/parse.hpp"
#include "vac/render.hpp"

namespace vac {

void VerificationReport::add(std::string label, bool pass, std::string residual) {
    checks.push_back({std::move(label), pass, pass ? std::string() : std::move(residual)});
}

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string toText(const VerificationReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << "  (level " << r.level << ")\n";
    for (const auto& c : r.checks) {
        out << (c.pass ? "  pass  " : "  FAIL  ") << c.label << "\n";
        if (!c.pass && !c.residual.empty()) out << "        residual: " << c.residual << "\n";
    }
    for (const auto& n : r.notes) out << "  note  " << n << "\n";
    out << "overall: " << (r.overall() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string toJson(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["level"] = r.level;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"label", c.label},
                               {"pass", c.pass},
                               {"residual_rendered", c.residual}});
    }
    j["notes"] = r.notes;
    j["overall"] = r.overall();
    return j.dump(2);
}

namespace {

// Expected bracket of a stored table entry, with generators replaced by their
// images: pole p lists the (p-1)-th product.
LambdaPoly tableBracket(const std::map<int, ExprPtr>& entry,
                        const std::map<std::string, ExprPtr>& images,
                        const Algebra& target, Engine& engine) {
    std::vector<std::pair<int, Field>> nth;
    for (const auto& [pole, e] : entry)
        nth.emplace_back(pole - 1, eval_expr(substitute(e, images), target, engine));
    return LambdaPoly::fromNth(nth);
}

} // namespace

VerificationReport verify_hom(const AlgebraPresentation& src, const HomAssignment& hom,
                              Engine& engine) {
    VerificationReport rep;
    rep.suite = hom.name;
    rep.level = engine.level().str();
    const Algebra& target = targetAlgebra(hom.target);

    std::map<std::string, Field> img;
    for (const auto& g : src.gens) img[g] = eval_expr(hom.images.at(g), target, engine);

    for (size_t i = 0; i < src.gens.size(); ++i) {
        for (size_t j = i; j < src.gens.size(); ++j) {
            std::string x = src.gens[i], y = src.gens[j];
            auto stored = src.storedPair(x, y);
            if (stored) std::tie(x, y) = *stored;
            LambdaPoly actual = engine.bracket(img.at(x), img.at(y));
            LambdaPoly expected;
            if (stored) expected = tableBracket(src.brackets.at({x, y}), hom.images,
                                                target, engine);
            LambdaPoly residual = actual - expected;
            rep.add("[" + x + "," + y + "]" + (stored ? "" : " regular"),
                    residual.isZero(), renderOPE(residual));
        }
    }
    int relNo = 0;
    for (const auto& r : src.relations) {
        ++relNo;
        Field image = eval_expr(substitute(r, hom.images), target, engine);
        rep.add("relation " + std::to_string(relNo) + " maps to zero", image.isZero(),
                renderField(image));
    }
    return rep;
}

VerificationReport verify_hom_by_name(const std::string& mapName, Level level) {
    const HomAssignment& hom = builtinHom(mapName);
    const AlgebraPresentation& src = builtinPresentation(hom.source);
    Engine engine(level);
    return verify_hom(src, hom, engine);
}

namespace {

struct AffineEntry {
    const char* x;
    const char* y;
    const char* comm; // nullptr when [x,y] = 0
    int commCoef;
};

// sl2 commutators in the orientation of the matrix-algebra table.
constexpr AffineEntry AFFINE_TABLE[] = {
    {"e", "e", nullptr, 0}, {"e", "h", "e", -2}, {"e", "f", "h", 1},
    {"h", "h", nullptr, 0}, {"h", "f", "f", -2}, {"f", "f", nullptr, 0},
};

std::map<std::string, Field> buildSecondFamily(int alpha, const Scalar& kstarSym,
                                               Engine& engine) {
    const PiRData& d = builtinPiR();
    const auto& images = builtinHom("map_r").images;
    std::map<std::string, Field> P;
    for (const auto& i : d.currents) {
        std::vector<ExprPtr> parts;
        for (const auto& j : d.currents)
            parts.push_back(eNProd(d.coeff.at({i, j}), eGen(j)));
        for (const auto& [pair, val] : d.pairing) {
            ExprPtr w = eNProd(d.coeff.at({i, pair.first}), d.omega.at(pair.second));
            parts.push_back(eScale(Scalar::fromInt(alpha) * kstarSym * val, w));
        }
        P[i] = eval_expr(substitute(eSum(parts), images), ALG_DCHU, engine);
    }
    return P;
}

bool affineChecks(const std::map<std::string, Field>& P, const Scalar& kstar,
                  Engine& engine, VerificationReport* rep) {
    const PiRData& d = builtinPiR();
    bool all = true;
    for (const AffineEntry& t : AFFINE_TABLE) {
        LambdaPoly actual = engine.bracket(P.at(t.x), P.at(t.y));
        LambdaPoly expected;
        if (t.comm) expected.set(0, P.at(t.comm).scaled(Scalar::fromInt(t.commCoef)));
        auto pv = d.pairing.find({t.x, t.y});
        if (pv != d.pairing.end())
            expected.set(1, Field::vacuum(kstar * pv->second));
        LambdaPoly residual = actual - expected;
        all = all && residual.isZero();
        if (rep)
            rep->add("affine [P_" + std::string(t.x) + ",P_" + t.y + "] at the dual level",
                     residual.isZero(), renderOPE(residual));
    }
    return all;
}

} // namespace

VerificationReport verify_pi_R(Level level) {
    VerificationReport rep;
    rep.suite = "pir";
    rep.level = level.str();
    Engine engine(level);

    Scalar kstarSym = -Scalar::k() - Scalar::fromInt(4);
    Scalar kstar = eval_at_level(kstarSym, level);

    // The sign of the one-form correction is not determined by the stored
    // data; fix it by requiring affine closure.
    int alpha = 1;
    {
        auto trial = buildSecondFamily(1, kstarSym, engine);
        if (!affineChecks(trial, kstar, engine, nullptr)) alpha = -1;
    }
    auto P = buildSecondFamily(alpha, kstarSym, engine);
    affineChecks(P, kstar, engine, &rep);

    const auto& images = builtinHom("map_r").images;
    for (const auto& i : builtinPiR().currents) {
        for (const auto& j : builtinPiR().currents) {
            Field rj = eval_expr(images.at(j), ALG_DCHU, engine);
            LambdaPoly b = engine.bracket(P.at(i), rj);
            rep.add("commutant [P_" + i + ",r(" + j + ")] regular", b.isZero(),
                    renderOPE(b));
        }
    }

    rep.notes.push_back("calibration: one-form correction sign alpha = " +
                        std::string(alpha > 0 ? "+1" : "-1") +
                        ", pairing (e,f)=(f,e)=1, (h,h)=2, dual level k* = " +
                        renderScalar(kstar));
    return rep;
}

VirasoroData central_charge(const ExprPtr& L, const Algebra& target, Engine& engine) {
    Field Lf = eval_expr(L, target, engine);
    LambdaPoly b = engine.bracket(Lf, Lf);

    Scalar c = b.at(3).coeff(VACUUM_ID) * Scalar::fromInt(12);
    LambdaPoly expected;
    expected.set(0, engine.derive(Lf));
    expected.set(1, Lf.scaled(Scalar::fromInt(2)));
    expected.set(3, Field::vacuum(c * Scalar::fromRatio(1, 12)));
    LambdaPoly residual = b - expected;
    if (!residual.isZero()) throw NotVirasoro(renderOPE(residual));

    VirasoroData out;
    out.centralCharge = c;
    return out;
}

WeightInfo weight_of(const ExprPtr& L, const ExprPtr& a, const Algebra& target,
                     Engine& engine) {
    Field Lf = eval_expr(L, target, engine);
    Field af = eval_expr(a, target, engine);
    LambdaPoly b = engine.bracket(Lf, af);

    Field translation = b.at(0) - engine.derive(af);
    if (!translation.isZero())
        throw NotEigen("w^0 coefficient is not the derivative: " +
                       renderField(translation));

    WeightInfo out;
    out.delta = Scalar::fromInt(0);
    Field eigen = b.at(1);
    if (!eigen.isZero()) {
        if (af.isZero()) throw NotEigen("weight of the zero field");
        MonoId lead = af.terms().front().m;
        Scalar den = af.coeff(lead);
        Scalar num = eigen.coeff(lead);
        if (den.isZero() || num.isZero())
            throw NotEigen("w^1 coefficient is not proportional: " + renderField(eigen));
        out.delta = num / den;
        if (eigen != af.scaled(out.delta))
            throw NotEigen("w^1 coefficient is not proportional: " + renderField(eigen));
    }
    out.primary = true;
    for (int n = 2; n <= b.degree(); ++n) out.primary = out.primary && b.at(n).isZero();
    return out;
}

namespace {

// Recorded on first symbolic computation; cross-checked at k = 0 against the
// mode-space oracle in the acceptance tests.
const char* FULL_CONFORMAL_CENTRAL_CHARGE = "6";

void addCentralChargeCheck(VerificationReport& rep, const std::string& label,
                           const ExprPtr& L, const Algebra& target, Engine& engine,
                           const Scalar& expectedSym, Level level) {
    try {
        VirasoroData data = central_charge(L, target, engine);
        Scalar expected = eval_at_level(expectedSym, level);
        Scalar diff = data.centralCharge - expected;
        rep.add(label, diff.isZero(),
                "central charge " + renderScalar(data.centralCharge) + ", expected " +
                    renderScalar(expected));
    } catch (const NotVirasoro& e) {
        rep.add(label, false, e.residual);
    }
}

void addWeightCheck(VerificationReport& rep, const std::string& label, const ExprPtr& L,
                    const ExprPtr& a, const Algebra& target, Engine& engine,
                    const Scalar& expected, bool requirePrimary) {
    try {
        WeightInfo w = weight_of(L, a, target, engine);
        bool pass = (w.delta == expected) && (!requirePrimary || w.primary);
        rep.add(label, pass,
                "weight " + renderScalar(w.delta) + ", expected " + renderScalar(expected) +
                    (requirePrimary && !w.primary ? ", not primary" : ""));
    } catch (const NotEigen& e) {
        rep.add(label, false, e.what());
    }
}

} // namespace

VerificationReport conformal_suite(Level level) {
    VerificationReport rep;
    rep.suite = "conformal";
    rep.level = level.str();
    Engine engine(level);

    addCentralChargeCheck(rep, "unit-constrained conformal vector has central charge 26",
                          builtinExpr("omega_I"), ALG_EL, engine, Scalar::fromInt(26),
                          level);

    // The quadratic image scaled by -1/(k+2); undefined at k = -2.
    bool critical = level.numeric && level.value == BigRat(-2);
    if (critical) {
        rep.notes.push_back(
            "skipped the normalized quadratic image: its normalization has a pole at k = -2");
    } else {
        ExprPtr L2 = eScale(-(Scalar::k() + Scalar::fromInt(2)).inverse(),
                            builtinHom("map_nu").images.at("F"));
        addCentralChargeCheck(
            rep, "normalized quadratic image has central charge -(2k+1)(3k+4)/(k+2)", L2,
            ALG_EL, engine, parse_scalar("-(2*k+1)*(3*k+4)/(k+2)"), level);
    }

    ExprPtr omegaU = builtinExpr("omega_U");
    addCentralChargeCheck(rep, "full conformal vector matches the recorded central charge",
                          omegaU, ALG_DCHU, engine,
                          parse_scalar(FULL_CONFORMAL_CENTRAL_CHARGE), level);

    addWeightCheck(rep, "vacuum has weight 0 and is primary", omegaU, eUnit(), ALG_DCHU,
                   engine, Scalar::fromInt(0), true);
    addWeightCheck(rep, "bx has weight 1", omegaU, eGen("bx"), ALG_DCHU, engine,
                   Scalar::fromInt(1), false);
    addWeightCheck(rep, "gx has weight 0", omegaU, eGen("gx"), ALG_DCHU, engine,
                   Scalar::fromInt(0), false);
    return rep;
}

namespace {

struct FieldSampler {
    std::mt19937_64 rng;
    std::vector<Sector> allowed;
    int maxGrading;
    std::vector<Scalar> coefPool;

    FieldSampler(const Algebra& target, int maxG, uint64_t seed)
        : rng(seed), maxGrading(maxG) {
        for (int s = 0; s <= static_cast<int>(Sector::GY); ++s) {
            Sector sec = static_cast<Sector>(s);
            if (target.allows(sec)) allowed.push_back(sec);
        }
        coefPool = {Scalar::fromInt(1),      Scalar::fromInt(-1),
                    Scalar::fromInt(2),      Scalar::fromRatio(1, 2),
                    Scalar::fromRatio(-1, 3), Scalar::k(),
                    Scalar::k() + Scalar::fromInt(2),
                    -(Scalar::k() + Scalar::k() + Scalar::fromInt(1))};
    }

    long pick(long n) { return static_cast<long>(rng() % static_cast<uint64_t>(n)); }

    MonoId sampleMonomial() {
        std::vector<Factor> fs;
        int remaining = maxGrading;
        long count = pick(4);
        for (long t = 0; t < count; ++t) {
            Sector s = allowed[pick(static_cast<long>(allowed.size()))];
            switch (s) {
                case Sector::BX:
                case Sector::BY:
                case Sector::ETA: {
                    if (remaining < 1) break;
                    int m = static_cast<int>(pick(remaining));
                    fs.push_back({s, m});
                    remaining -= m + 1;
                    break;
                }
                case Sector::GX:
                case Sector::GY: {
                    int m = static_cast<int>(pick(remaining + 1));
                    fs.push_back({s, m});
                    remaining -= m;
                    break;
                }
                case Sector::JET: {
                    if (remaining < 1) break;
                    int m = 1 + static_cast<int>(pick(remaining));
                    fs.push_back({s, m});
                    remaining -= m;
                    break;
                }
                case Sector::CHARGE: {
                    static const int ns[4] = {-2, -1, 1, 2};
                    fs.push_back({s, ns[pick(4)]});
                    break;
                }
            }
        }
        std::stable_sort(fs.begin(), fs.end(),
                         [](const Factor& a, const Factor& b) { return factorCmp(a, b) < 0; });
        // merge charge factors into one, clamped to the sampled range
        std::vector<Factor> out;
        int charge = 0;
        for (const Factor& f : fs) {
            if (f.s == Sector::CHARGE) charge += f.m;
            else out.push_back(f);
        }
        charge = std::clamp(charge, -2, 2);
        if (charge != 0) {
            Factor cf{Sector::CHARGE, charge};
            auto it = std::upper_bound(out.begin(), out.end(), cf,
                                       [](const Factor& a, const Factor& b) {
                                           return factorCmp(a, b) < 0;
                                       });
            out.insert(it, cf);
        }
        Monomial m{std::move(out)};
        return intern(m);
    }

    Field sampleField() {
        Field f;
        long terms = 1 + pick(2);
        for (long t = 0; t < terms; ++t)
            f = f + Field::mono(sampleMonomial(),
                                coefPool[pick(static_cast<long>(coefPool.size()))]);
        return f;
    }
};

LambdaPoly lpDerive(Engine& engine, const LambdaPoly& p) {
    LambdaPoly out;
    for (int n = 0; n <= p.degree(); ++n) out.set(n, engine.derive(p.at(n)));
    out.trim();
    return out;
}

} // namespace

VerificationReport run_axiom_suite(const Algebra& target, int maxGrading,
                                   int sampleCount, uint64_t seed, Level level) {
    VerificationReport rep;
    rep.suite = "axioms " + target.name;
    rep.level = level.str();
    Engine engine(level);

    FieldSampler sampler(target, maxGrading, seed);
    std::vector<Field> fields;
    fields.reserve(sampleCount);
    for (int i = 0; i < sampleCount; ++i) fields.push_back(sampler.sampleField());

    long pairs = sampleCount >= 2 ? sampleCount - 1 : 0;
    long triples = sampleCount >= 3 ? sampleCount - 2 : 0;

    bool pass = true;
    std::string firstResidual;
    auto record = [&](bool ok, const std::string& residual) {
        if (!ok && pass) firstResidual = residual;
        pass = pass && ok;
    };

    for (long i = 0; i < pairs; ++i) {
        LambdaPoly r = engine.skewResidual(fields[i], fields[i + 1]);
        record(r.isZero(), renderOPE(r));
    }
    rep.add("skew-symmetry (" + std::to_string(pairs) + " pairs)", pass, firstResidual);

    pass = true;
    firstResidual.clear();
    for (long i = 0; i < pairs; ++i) {
        LambdaPoly base = engine.bracket(fields[i], fields[i + 1]);
        LambdaPoly left =
            engine.bracket(engine.derive(fields[i]), fields[i + 1]) + base.shifted(1);
        record(left.isZero(), renderOPE(left));
    }
    rep.add("sesquilinearity in the first slot (" + std::to_string(pairs) + " pairs)",
            pass, firstResidual);

    pass = true;
    firstResidual.clear();
    for (long i = 0; i < pairs; ++i) {
        LambdaPoly base = engine.bracket(fields[i], fields[i + 1]);
        LambdaPoly right = engine.bracket(fields[i], engine.derive(fields[i + 1])) -
                           base.shifted(1) - lpDerive(engine, base);
        record(right.isZero(), renderOPE(right));
    }
    rep.add("sesquilinearity in the second slot (" + std::to_string(pairs) + " pairs)",
            pass, firstResidual);

    pass = true;
    firstResidual.clear();
    for (long i = 0; i < triples; ++i) {
        LambdaPoly2 r = engine.jacobiResidual(fields[i], fields[i + 1], fields[i + 2]);
        record(r.isZero(), r.isZero() ? "" : "nonzero two-variable residual");
    }
    rep.add("Jacobi identity (" + std::to_string(triples) + " triples)", pass,
            firstResidual);

    pass = true;
    firstResidual.clear();
    for (long i = 0; i < triples; ++i) {
        Field r = engine.quasiAssocResidual(fields[i], fields[i + 1], fields[i + 2]);
        record(r.isZero(), renderField(r));
    }
    rep.add("quasi-associativity (" + std::to_string(triples) + " triples)", pass,
            firstResidual);

    return rep;
}

} // namespace vac
