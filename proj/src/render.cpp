#include "vac/render.hpp"

#include <algorithm>

namespace vac {

namespace {

std::string bigStr(const BigInt& v) { return v.str(); }

// Plain polynomial, no spaces, descending powers: "2*k^2-k+3".
std::string polyPlain(const IntPoly& p) {
    if (p.isZero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const BigInt& c = p.c[i];
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        bool coefOne = (a == 1);
        if (i == 0) {
            out += bigStr(a);
        } else {
            if (!coefOne) { out += bigStr(a); out += "*"; }
            out += "k";
            if (i >= 2) { out += "^"; out += std::to_string(i); }
        }
    }
    return out;
}

// Pull monic-over-Q linear factors q*k - p (rational roots p/q) out of a
// primitive polynomial; returns the factors as primitive linear IntPolys and
// leaves the residual in p.
std::vector<IntPoly> splitLinearFactors(IntPoly& p) {
    std::vector<IntPoly> out;
    bool found = true;
    while (p.degree() >= 1 && found) {
        found = false;
        const BigInt& lead = p.leading();
        const BigInt& cons = p.c[0];
        if (cons == 0) {
            IntPoly lin({BigInt(0), BigInt(1)}); // k
            p = divExact(p, lin);
            out.push_back(lin);
            found = true;
            continue;
        }
        // candidate roots p/q: q | lead, p | cons
        BigInt qa = lead < 0 ? BigInt(-lead) : lead;
        BigInt pa = cons < 0 ? BigInt(-cons) : cons;
        for (BigInt q = 1; q <= qa && !found; ++q) {
            if (qa % q != 0) continue;
            for (BigInt r = 1; r <= pa && !found; ++r) {
                if (pa % r != 0) continue;
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    BigInt num = sign > 0 ? r : BigInt(-r);
                    if (p.evalRat(BigRat(num, q)) == 0) {
                        IntPoly lin({BigInt(-num), q});
                        lin = lin.primitivePart();
                        if (lin.leading() < 0) lin = -lin;
                        p = divExact(p, lin);
                        out.push_back(lin);
                        found = true;
                    }
                }
            }
        }
    }
    return out;
}

// One multiplicative entity: bare when it is "k" or an integer; otherwise
// parenthesized.
std::string factorStr(const IntPoly& f) {
    if (f.degree() == 1 && f.c[0] == 0 && f.c[1] == 1) return "k";
    return "(" + polyPlain(f) + ")";
}

} // namespace

std::string renderScalar(const Scalar& s) {
    if (s.isZero()) return "0";

    IntPoly num = s.num(), den = s.den();
    BigInt cn = num.content();
    IntPoly pn = num.divContent(cn);
    bool neg = false;
    if (pn.leading() < 0) { pn = -pn; neg = true; }
    BigInt cd = den.content();
    IntPoly pd = den.divContent(cd); // positive leading by Scalar invariant

    std::vector<IntPoly> nf = splitLinearFactors(pn);
    std::vector<IntPoly> df = splitLinearFactors(pd);

    std::string out;
    if (neg) out += "-";
    std::vector<std::string> numParts;
    bool haveNumFactors = !nf.empty() || pn.degree() >= 1;
    if (cn != 1 || !haveNumFactors) numParts.push_back(bigStr(cn));
    for (const auto& f : nf) numParts.push_back(factorStr(f));
    if (pn.degree() >= 1) numParts.push_back(factorStr(pn));
    for (size_t i = 0; i < numParts.size(); ++i) {
        if (i) out += "*";
        out += numParts[i];
    }
    if (cd != 1) { out += "/"; out += bigStr(cd); }
    for (const auto& f : df) { out += "/"; out += factorStr(f); }
    if (pd.degree() >= 1) { out += "/"; out += factorStr(pd); }
    return out;
}

std::string renderMonomial(MonoId id) {
    const Monomial& m = monomial(id);
    if (m.isVacuum()) return "1";
    std::vector<std::string> parts;
    for (const Factor& f : m.f) {
        auto derName = [&](const char* base, int order) {
            if (order == 0) return std::string(base);
            if (order == 1) return "d(" + std::string(base) + ")";
            return "d^" + std::to_string(order) + "(" + base + ")";
        };
        switch (f.s) {
            case Sector::BX: parts.push_back(derName("bx", f.m)); break;
            case Sector::GX: parts.push_back(derName("gx", f.m)); break;
            case Sector::BY: parts.push_back(derName("by", f.m)); break;
            case Sector::GY: parts.push_back(derName("gy", f.m)); break;
            case Sector::ETA: parts.push_back(derName("eta", f.m)); break;
            case Sector::JET: parts.push_back(derName("lamp", f.m)); break;
            case Sector::CHARGE: {
                const char* unit = f.m > 0 ? "lamp" : "lamm";
                for (int i = 0; i < std::abs(f.m); ++i) parts.push_back(unit);
                break;
            }
        }
    }
    if (parts.size() == 1) return parts[0];
    std::string out = ":(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i];
    }
    out += "):";
    return out;
}

std::string renderField(const Field& f) {
    if (f.isZero()) return "0";
    std::vector<Field::Term> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const Field::Term& a, const Field::Term& b) { return structuralLess(a.m, b.m); });
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        const bool vac = monomial(terms[i].m).isVacuum();
        if (vac) {
            out += renderScalar(terms[i].c);
            continue;
        }
        if (!terms[i].c.isOne()) {
            std::string c = renderScalar(terms[i].c);
            if (c[0] == '-') c = "(" + c + ")";
            out += c;
            out += "*";
        }
        out += renderMonomial(terms[i].m);
    }
    return out;
}

std::string renderOPE(const LambdaPoly& p) {
    std::string out;
    for (int n = p.degree(); n >= 0; --n) {
        Field f = p.nth(n);
        if (f.isZero()) continue;
        if (!out.empty()) out += " + ";
        std::string fs = renderField(f);
        if (f.size() > 1) fs = "(" + fs + ")";
        out += fs;
        out += "/(z-w)";
        if (n >= 1) { out += "^"; out += std::to_string(n + 1); }
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string renderAtom(const ExprPtr& e) {
    switch (e->kind) {
        case FieldExpr::Kind::Gen:
            return e->name;
        case FieldExpr::Kind::Derive: {
            std::string inner = renderExpr(e->kids[0]);
            if (e->order == 1) return "d(" + inner + ")";
            return "d^" + std::to_string(e->order) + "(" + inner + ")";
        }
        case FieldExpr::Kind::NProd: {
            std::vector<ExprPtr> elems;
            elems.push_back(e->kids[0]);
            ExprPtr rest = e->kids[1];
            while (rest->kind == FieldExpr::Kind::NProd) {
                elems.push_back(rest->kids[0]);
                rest = rest->kids[1];
            }
            elems.push_back(rest);
            std::string out = ":(";
            for (size_t i = 0; i < elems.size(); ++i) {
                if (i) out += " ";
                out += renderAtom(elems[i]);
            }
            out += "):";
            return out;
        }
        default:
            throw InternalError("expression does not fit the display grammar");
    }
}

std::string renderTerm(const ExprPtr& e) {
    switch (e->kind) {
        case FieldExpr::Kind::Unit:
            return "1";
        case FieldExpr::Kind::Scale: {
            if (e->kids[0]->kind == FieldExpr::Kind::Unit) return renderScalar(e->coef);
            if (e->coef == Scalar::fromInt(-1)) return "-" + renderTerm(e->kids[0]);
            std::string c = renderScalar(e->coef);
            if (c[0] == '-') return "-" + renderScalar(-e->coef) + "*" + renderAtom(e->kids[0]);
            return c + "*" + renderAtom(e->kids[0]);
        }
        default:
            return renderAtom(e);
    }
}

} // namespace

std::string renderExpr(const ExprPtr& e) {
    if (e->kind == FieldExpr::Kind::Sum) {
        std::string out;
        for (size_t i = 0; i < e->kids.size(); ++i) {
            const ExprPtr& t = e->kids[i];
            std::string ts = renderTerm(t);
            if (i == 0) {
                out += ts;
            } else if (ts.size() && ts[0] == '-') {
                out += " - ";
                out += ts.substr(1);
            } else {
                out += " + ";
                out += ts;
            }
        }
        return out;
    }
    if (e->kind == FieldExpr::Kind::Scale && e->kids[0]->kind == FieldExpr::Kind::Sum) {
        // distribute so the result fits the grammar
        std::vector<ExprPtr> parts;
        for (const auto& k : e->kids[0]->kids) parts.push_back(eScale(e->coef, k));
        return renderExpr(eSum(std::move(parts)));
    }
    return renderTerm(e);
}

} // namespace vac
