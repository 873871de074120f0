#include "vac/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "vac/parse.hpp"
#include "vac/render.hpp"

namespace vac {

bool AlgebraPresentation::hasGen(const std::string& g) const {
    return std::find(gens.begin(), gens.end(), g) != gens.end();
}

std::optional<std::pair<std::string, std::string>> AlgebraPresentation::storedPair(
    const std::string& x, const std::string& y) const {
    if (brackets.count({x, y})) return std::make_pair(x, y);
    if (brackets.count({y, x})) return std::make_pair(y, x);
    return std::nullopt;
}

namespace {

ExprPtr P(const std::string& text) { return parse_expr(text); }

void addBracket(AlgebraPresentation& p, const std::string& a, const std::string& b,
                std::vector<std::pair<int, std::string>> poles) {
    auto& entry = p.brackets[{a, b}];
    for (auto& [pole, text] : poles) entry[pole] = P(text);
}

AlgebraPresentation makeEL() {
    AlgebraPresentation p;
    p.name = "EL";
    p.gens = {"eta", "lamp", "lamm"};
    addBracket(p, "eta", "eta", {{2, "2*(k+2)"}});
    addBracket(p, "eta", "lamp", {{1, "lamp"}});
    addBracket(p, "eta", "lamm", {{1, "-lamm"}});
    p.relations.push_back(P(":(lamp lamm): - 1"));
    p.conformal = P(
        ":(eta d(lamp) lamm): - :(d(lamp) d(lamm)): - (k+3)*:(d^2(lamp) lamm): + d(eta)");
    return p;
}

AlgebraPresentation makeBetaGamma() {
    AlgebraPresentation p;
    p.name = "BetaGamma";
    p.gens = {"bx", "gx"};
    addBracket(p, "bx", "gx", {{1, "1"}});
    return p;
}

AlgebraPresentation makeDchU() {
    AlgebraPresentation p;
    p.name = "DchU";
    p.gens = {"bx", "gx", "eta", "lamp", "lamm", "by", "gy"};
    addBracket(p, "bx", "gx", {{1, "1"}});
    addBracket(p, "by", "gy", {{1, "1"}});
    addBracket(p, "eta", "eta", {{2, "2*(k+2)"}});
    addBracket(p, "eta", "lamp", {{1, "lamp"}});
    addBracket(p, "eta", "lamm", {{1, "-lamm"}});
    p.relations.push_back(P(":(lamp lamm): - 1"));
    p.conformal = P(
        ":(eta d(lamp) lamm): + :(bx d(gx)): + :(by d(gy)): + (k+1)*:(d(lamp) d(lamm)): - "
        ":(d^2(lamp) lamm):");
    return p;
}

AlgebraPresentation makeDchG() {
    AlgebraPresentation p;
    p.name = "DchG";
    p.gens = {"e", "h", "f", "a", "b", "c", "d"};
    addBracket(p, "e", "h", {{1, "-2*e"}});
    addBracket(p, "e", "f", {{2, "k"}, {1, "h"}});
    addBracket(p, "h", "h", {{2, "2*k"}});
    addBracket(p, "h", "f", {{1, "-2*f"}});
    addBracket(p, "e", "b", {{1, "a"}});
    addBracket(p, "e", "d", {{1, "c"}});
    addBracket(p, "h", "a", {{1, "a"}});
    addBracket(p, "h", "b", {{1, "-b"}});
    addBracket(p, "h", "c", {{1, "c"}});
    addBracket(p, "h", "d", {{1, "-d"}});
    addBracket(p, "f", "a", {{1, "b"}});
    addBracket(p, "f", "c", {{1, "d"}});
    p.relations.push_back(P(":(a d): - :(b c): - 1"));
    return p;
}

AlgebraPresentation makeWtilde() {
    AlgebraPresentation p;
    p.name = "Wtilde";
    p.gens = {"wa", "wb", "wc", "wd", "wf"};
    addBracket(p, "wa", "wb", {{1, "1/2*:(wa wa):"}});
    addBracket(p, "wa", "wd", {{1, "1/2*:(wa wc):"}});
    addBracket(p, "wb", "wc", {{1, "-1/2*:(wa wc):"}});
    addBracket(p, "wc", "wd", {{1, "1/2*:(wc wc):"}});
    addBracket(p, "wb", "wb",
               {{2, "(2*k+3)/4*:(wa wa):"}, {1, "(2*k+3)/4*:(d(wa) wa):"}});
    addBracket(p, "wd", "wd",
               {{2, "(2*k+3)/4*:(wc wc):"}, {1, "(2*k+3)/4*:(d(wc) wc):"}});
    addBracket(p, "wb", "wd",
               {{2, "(2*k+3)/4*:(wa wc):"}, {1, "1/2 + (2*k+3)/4*:(d(wa) wc):"}});
    addBracket(p, "wf", "wa", {{2, "(2*k+1)/4*wa"}, {1, "wb"}});
    addBracket(p, "wf", "wc", {{2, "(2*k+1)/4*wc"}, {1, "wd"}});
    addBracket(p, "wf", "wb",
               {{3, "-(k+2)*(2*k+1)/2*wa"}, {2, "-(2*k+7)/4*wb"}, {1, "-:(wf wa):"}});
    addBracket(p, "wf", "wd",
               {{3, "-(k+2)*(2*k+1)/2*wc"}, {2, "-(2*k+7)/4*wd"}, {1, "-:(wf wc):"}});
    addBracket(p, "wf", "wf",
               {{4, "-(k+2)*(2*k+1)*(3*k+4)/2"}, {2, "-2*(k+2)*wf"}, {1, "-(k+2)*d(wf)"}});
    p.relations.push_back(P(":(wa wd): - :(wb wc): - :(d(wa) wc): - 1"));
    return p;
}

AlgebraPresentation makeItilde() {
    AlgebraPresentation p;
    p.name = "Itilde";
    p.gens = {"C", "D", "F"};
    addBracket(p, "C", "D", {{1, "1/2*:(C C):"}});
    addBracket(p, "D", "D",
               {{2, "(2*k+3)/4*:(C C):"}, {1, "(2*k+3)/4*:(d(C) C):"}});
    addBracket(p, "F", "C", {{2, "(2*k+1)/4*C"}, {1, "D"}});
    addBracket(p, "F", "D",
               {{3, "-(k+2)*(2*k+1)/2*C"}, {2, "-(2*k+7)/4*D"}, {1, "-:(F C):"}});
    addBracket(p, "F", "F",
               {{4, "-(k+2)*(2*k+1)*(3*k+4)/2"}, {2, "-2*(k+2)*F"}, {1, "-(k+2)*d(F)"}});
    p.relations.push_back(
        P(":(F C C): + :(D D): - (2*k+7)/2*:(C d(D)): + (2*k+7)/2*:(d(C) D): + "
          "(2*k+7)/4*:(d(C) d(C)): - (2*k+3)/8*:(d^2(C) C): + 1"));
    return p;
}

HomAssignment makeMapR() {
    HomAssignment h;
    h.name = "map_r";
    h.source = "DchG";
    h.target = "DchU";
    h.images["a"] = P(":(lamp gx):");
    h.images["b"] = P(":(lamp gx gy): - lamm");
    h.images["c"] = P("lamp");
    h.images["d"] = P(":(lamp gy):");
    h.images["e"] = P("by");
    h.images["h"] = P("eta - 2*:(gy by):");
    h.images["f"] = P("-:(lamm lamm bx): - :(gy gy by): + :(gy eta): + k*d(gy)");
    return h;
}

HomAssignment makeMapDs1() {
    HomAssignment h;
    h.name = "map_ds1";
    h.source = "Wtilde";
    h.target = "BxEL";
    h.images["wa"] = P(":(lamp gx):");
    h.images["wb"] = P("-1/2*:(gx eta lamp): - lamm");
    h.images["wc"] = P("lamp");
    h.images["wd"] = P("-1/2*:(eta lamp):");
    h.images["wf"] = P("-1/4*:(eta eta): - :(bx lamm lamm): - (k+1)/2*d(eta)");
    return h;
}

HomAssignment makeMapNu() {
    HomAssignment h;
    h.name = "map_nu";
    h.source = "Itilde";
    h.target = "EL";
    h.images["C"] = P("lamp");
    h.images["D"] = P("-1/2*:(eta lamp):");
    h.images["F"] = P("-1/4*:(eta eta): - :(lamm lamm): - (k+1)/2*d(eta)");
    return h;
}

PiRData makePiR() {
    PiRData d;
    d.currents = {"e", "h", "f"};
    d.coeff[{"e", "e"}] = P("-:(d d):");
    d.coeff[{"e", "h"}] = P("-:(c d):");
    d.coeff[{"e", "f"}] = P(":(c c):");
    d.coeff[{"h", "e"}] = P("-2*:(b d):");
    d.coeff[{"h", "h"}] = P("-:(a d): - :(b c):");
    d.coeff[{"h", "f"}] = P("2*:(a c):");
    d.coeff[{"f", "e"}] = P(":(b b):");
    d.coeff[{"f", "h"}] = P(":(a b):");
    d.coeff[{"f", "f"}] = P("-:(a a):");
    d.omega["e"] = P(":(d d(b)): - :(b d(d)):");
    d.omega["h"] = P(
        "1/2*:(d d(a)): + 1/2*:(c d(b)): - 1/2*:(b d(c)): - 1/2*:(a d(d)):");
    d.omega["f"] = P("-:(c d(a)): + :(a d(c)):");
    d.pairing[{"e", "f"}] = Scalar::fromInt(1);
    d.pairing[{"f", "e"}] = Scalar::fromInt(1);
    d.pairing[{"h", "h"}] = Scalar::fromInt(2);
    return d;
}

C2Dictionary makeC2Dict() {
    C2Dictionary d;
    d.entries["C"] = {"X", Scalar::fromInt(1)};
    d.entries["D"] = {"Y", Scalar::fromInt(-1)};
    d.entries["F"] = {"S", Scalar::fromInt(-1)};
    return d;
}

} // namespace

const AlgebraPresentation& builtinPresentation(const std::string& name) {
    static const std::map<std::string, AlgebraPresentation> reg = [] {
        std::map<std::string, AlgebraPresentation> m;
        m["EL"] = makeEL();
        m["BetaGamma"] = makeBetaGamma();
        m["DchU"] = makeDchU();
        m["DchG"] = makeDchG();
        m["Wtilde"] = makeWtilde();
        m["Itilde"] = makeItilde();
        return m;
    }();
    auto it = reg.find(name);
    if (it == reg.end()) throw UnknownBuiltin(name);
    return it->second;
}

const HomAssignment& builtinHom(const std::string& name) {
    static const std::map<std::string, HomAssignment> reg = [] {
        std::map<std::string, HomAssignment> m;
        m["map_r"] = makeMapR();
        m["map_ds1"] = makeMapDs1();
        m["map_nu"] = makeMapNu();
        return m;
    }();
    auto it = reg.find(name);
    if (it == reg.end()) throw UnknownBuiltin(name);
    return it->second;
}

ExprPtr builtinExpr(const std::string& name) {
    if (name == "omega_U") return builtinPresentation("DchU").conformal;
    if (name == "omega_I") return builtinPresentation("EL").conformal;
    throw UnknownBuiltin(name);
}

const PiRData& builtinPiR() {
    static const PiRData d = makePiR();
    return d;
}

const C2Dictionary& builtinC2Dictionary() {
    static const C2Dictionary d = makeC2Dict();
    return d;
}

const Algebra& targetAlgebra(const std::string& name) {
    if (name == "EL") return ALG_EL;
    if (name == "BetaGamma") return ALG_BG_X;
    if (name == "BxEL") return ALG_BX_EL;
    if (name == "DchU") return ALG_DCHU;
    throw UnknownBuiltin(name);
}

std::vector<std::string> builtinNames() {
    return {"DchG",  "Wtilde", "Itilde",  "EL",      "BetaGamma", "DchU",
            "map_r", "map_ds1", "map_nu", "omega_U", "omega_I",   "piR_data",
            "dict_c2"};
}

HomAssignment identityHom(const AlgebraPresentation& p, const std::string& target) {
    HomAssignment h;
    h.name = "identity_" + p.name;
    h.source = p.name;
    h.target = target;
    for (const auto& g : p.gens) h.images[g] = eGen(g);
    return h;
}

namespace {

// Validates that every generator name in e is declared.
void checkResolves(const ExprPtr& e, const std::vector<std::string>& gens, long line) {
    std::vector<std::string> used;
    collectGenerators(e, used);
    for (const auto& g : used) {
        if (std::find(gens.begin(), gens.end(), g) == gens.end())
            throw UnknownGenerator(g + " (line " + std::to_string(line) + ")");
    }
}

std::vector<std::string> targetGeneratorNames(const std::string& target) {
    const Algebra& alg = targetAlgebra(target);
    std::vector<std::string> out;
    for (const auto& gs : generatorUniverse()) {
        Factor f;
        lookupGenerator(gs.name, f);
        if (alg.allows(factorSector(f))) out.push_back(gs.name);
    }
    return out;
}

struct LineSplitter {
    std::vector<std::pair<long, std::string>> lines; // (1-based line, content)
    explicit LineSplitter(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        long n = 0;
        while (std::getline(in, raw)) {
            ++n;
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw = raw.substr(0, hash);
            size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            size_t e = raw.find_last_not_of(" \t\r");
            lines.emplace_back(n, raw.substr(b, e - b + 1));
        }
    }
};

ExprPtr parseLineExpr(const std::string& text, long line) {
    try {
        return parse_expr(text);
    } catch (const ParseError& pe) {
        throw ParseError(line, std::string(pe.expected) + " (column " +
                                   std::to_string(pe.position) + ")",
                         true);
    }
}

} // namespace

Definitions load_definitions(const std::string& text) {
    Definitions out;
    AlgebraPresentation* alg = nullptr;
    HomAssignment* hom = nullptr;

    auto algGens = [&](const std::string& src) -> const std::vector<std::string>* {
        for (const auto& a : out.algebras)
            if (a.name == src) return &a.gens;
        try {
            return &builtinPresentation(src).gens;
        } catch (const UnknownBuiltin&) {
            return nullptr;
        }
    };

    LineSplitter split(text);
    for (const auto& [lineNo, line] : split.lines) {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "algebra") {
            std::string name;
            if (!(ls >> name)) throw ParseError(lineNo, "algebra name", true);
            out.algebras.emplace_back();
            alg = &out.algebras.back();
            alg->name = name;
            hom = nullptr;
        } else if (word == "map") {
            std::string name, fromKw, src, toKw, tgt;
            if (!(ls >> name >> fromKw >> src >> toKw >> tgt) || fromKw != "from" ||
                toKw != "to")
                throw ParseError(lineNo, "map <name> from <algebra> to <target>", true);
            targetAlgebra(tgt); // throws UnknownBuiltin on bad target
            out.maps.emplace_back();
            hom = &out.maps.back();
            hom->name = name;
            hom->source = src;
            hom->target = tgt;
            alg = nullptr;
        } else if (word == "generators:") {
            if (!alg) throw ParseError(lineNo, "generators outside an algebra block", true);
            std::string g;
            while (ls >> g) alg->gens.push_back(g);
        } else if (word == "bracket") {
            if (!alg) throw ParseError(lineNo, "bracket outside an algebra block", true);
            std::string g1, g2;
            if (!(ls >> g1 >> g2)) throw ParseError(lineNo, "bracket g1 g2 : ...", true);
            if (!alg->hasGen(g1)) throw UnknownGenerator(g1 + " (line " + std::to_string(lineNo) + ")");
            if (!alg->hasGen(g2)) throw UnknownGenerator(g2 + " (line " + std::to_string(lineNo) + ")");
            std::string rest;
            std::getline(ls, rest);
            size_t colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError(lineNo, "':' after pair", true);
            rest = rest.substr(colon + 1);
            if (alg->storedPair(g1, g2)) throw DuplicatePair(g1, g2);
            auto& entry = alg->brackets[{g1, g2}];
            std::istringstream parts(rest);
            std::string piece;
            while (std::getline(parts, piece, ';')) {
                size_t eq = piece.find('=');
                if (eq == std::string::npos) throw ParseError(lineNo, "<pole>=<expr>", true);
                int pole = 0;
                try {
                    pole = std::stoi(piece.substr(0, eq));
                } catch (...) {
                    throw ParseError(lineNo, "integer pole", true);
                }
                if (pole < 1) throw ParseError(lineNo, "pole >= 1", true);
                if (entry.count(pole)) throw ParseError(lineNo, "duplicate pole", true);
                ExprPtr e = parseLineExpr(piece.substr(eq + 1), lineNo);
                checkResolves(e, alg->gens, lineNo);
                entry[pole] = e;
            }
            if (entry.empty()) throw ParseError(lineNo, "<pole>=<expr>", true);
        } else if (word == "relation:") {
            if (!alg) throw ParseError(lineNo, "relation outside an algebra block", true);
            std::string rest;
            std::getline(ls, rest);
            ExprPtr e = parseLineExpr(rest, lineNo);
            checkResolves(e, alg->gens, lineNo);
            alg->relations.push_back(e);
        } else if (word == "conformal:") {
            if (!alg) throw ParseError(lineNo, "conformal outside an algebra block", true);
            std::string rest;
            std::getline(ls, rest);
            ExprPtr e = parseLineExpr(rest, lineNo);
            checkResolves(e, alg->gens, lineNo);
            alg->conformal = e;
        } else if (word == "image") {
            if (!hom) throw ParseError(lineNo, "image outside a map block", true);
            std::string g;
            if (!(ls >> g)) throw ParseError(lineNo, "image g : <expr>", true);
            std::string rest;
            std::getline(ls, rest);
            size_t c = rest.find(':');
            if (c == std::string::npos) throw ParseError(lineNo, "':' after generator", true);
            const std::vector<std::string>* srcGens = algGens(hom->source);
            if (srcGens &&
                std::find(srcGens->begin(), srcGens->end(), g) == srcGens->end())
                throw UnknownGenerator(g + " (line " + std::to_string(lineNo) + ")");
            ExprPtr e = parseLineExpr(rest.substr(c + 1), lineNo);
            checkResolves(e, targetGeneratorNames(hom->target), lineNo);
            hom->images[g] = e;
        } else {
            throw ParseError(lineNo, "directive (algebra/generators/bracket/relation/conformal/map/image)", true);
        }
    }
    return out;
}

AlgebraPresentation load_presentation(const std::string& text) {
    Definitions d = load_definitions(text);
    if (d.algebras.size() != 1)
        throw ParseError(1, "exactly one algebra block", true);
    return d.algebras[0];
}

std::string renderPresentation(const AlgebraPresentation& p) {
    std::ostringstream out;
    out << "algebra " << p.name << "\n";
    out << "generators:";
    for (const auto& g : p.gens) out << " " << g;
    out << "\n";
    for (const auto& [pair, entry] : p.brackets) {
        out << "bracket " << pair.first << " " << pair.second << " : ";
        bool first = true;
        for (auto it = entry.rbegin(); it != entry.rend(); ++it) {
            if (!first) out << " ; ";
            first = false;
            out << it->first << "=" << renderExpr(it->second);
        }
        out << "\n";
    }
    for (const auto& r : p.relations) out << "relation: " << renderExpr(r) << "\n";
    if (p.conformal) out << "conformal: " << renderExpr(p.conformal) << "\n";
    return out.str();
}

std::string renderHom(const HomAssignment& h) {
    std::ostringstream out;
    out << "map " << h.name << " from " << h.source << " to " << h.target << "\n";
    for (const auto& [g, e] : h.images) out << "image " << g << " : " << renderExpr(e) << "\n";
    return out.str();
}

} // namespace vac
