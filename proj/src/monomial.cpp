#include "vac/monomial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace vac {

int factorCmp(const Factor& a, const Factor& b) {
    if (a.s != b.s) return static_cast<int>(a.s) < static_cast<int>(b.s) ? -1 : 1;
    if (a.m != b.m) return a.m > b.m ? -1 : 1; // higher derivative order first
    return 0;
}

bool factorValid(const Factor& f) {
    switch (f.s) {
        case Sector::JET: return f.m >= 1;
        case Sector::CHARGE: return f.m != 0;
        default: return f.m >= 0;
    }
}

int factorGrading(const Factor& f) {
    switch (f.s) {
        case Sector::BX:
        case Sector::BY:
        case Sector::ETA: return f.m + 1;
        case Sector::GX:
        case Sector::GY: return f.m;
        case Sector::JET: return f.m;
        case Sector::CHARGE: return 0;
    }
    return 0;
}

int Monomial::grading() const {
    int g = 0;
    for (const auto& x : f) g += factorGrading(x);
    return g;
}

int Monomial::charge() const {
    for (const auto& x : f)
        if (x.s == Sector::CHARGE) return x.m;
    return 0;
}

bool Monomial::canonical() const {
    int chargeCount = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        if (!factorValid(f[i])) return false;
        if (f[i].s == Sector::CHARGE && ++chargeCount > 1) return false;
        if (i + 1 < f.size()) {
            int c = factorCmp(f[i], f[i + 1]);
            if (c > 0) return false;
            if (c == 0 && f[i].s == Sector::CHARGE) return false;
        }
    }
    return true;
}

bool Monomial::functionOnly() const {
    for (const auto& x : f)
        if (x.s != Sector::JET && x.s != Sector::CHARGE) return false;
    return true;
}

size_t MonomialHash::operator()(const Monomial& m) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& x : m.f) {
        size_t v = (static_cast<size_t>(x.s) << 32) ^ static_cast<uint32_t>(x.m);
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

struct InternTable {
    std::shared_mutex mu;
    std::unordered_map<Monomial, MonoId, MonomialHash> ids;
    std::deque<Monomial> byId;

    InternTable() {
        ids.emplace(Monomial{}, VACUUM_ID);
        byId.push_back(Monomial{});
    }
};

InternTable& table() {
    static InternTable t;
    return t;
}

} // namespace

MonoId intern(const Monomial& m) {
    auto& t = table();
    {
        std::shared_lock lock(t.mu);
        auto it = t.ids.find(m);
        if (it != t.ids.end()) return it->second;
    }
    if (!m.canonical()) throw InternalError("interning a non-canonical monomial");
    std::unique_lock lock(t.mu);
    auto it = t.ids.find(m);
    if (it != t.ids.end()) return it->second;
    MonoId id = static_cast<MonoId>(t.byId.size());
    t.byId.push_back(m);
    t.ids.emplace(t.byId.back(), id);
    return id;
}

const Monomial& monomial(MonoId id) {
    auto& t = table();
    std::shared_lock lock(t.mu);
    if (id >= t.byId.size()) throw InternalError("monomial id out of range");
    return t.byId[id];
}

MonoId internFactor(Factor f) {
    Monomial m;
    m.f.push_back(f);
    return intern(m);
}

bool structuralLess(MonoId a, MonoId b) {
    if (a == b) return false;
    const Monomial ma = monomial(a), mb = monomial(b);
    int ga = ma.grading(), gb = mb.grading();
    if (ga != gb) return ga < gb;
    if (ma.f.size() != mb.f.size()) return ma.f.size() < mb.f.size();
    for (size_t i = 0; i < ma.f.size(); ++i) {
        int c = factorCmp(ma.f[i], mb.f[i]);
        if (c != 0) return c < 0;
        if (ma.f[i].m != mb.f[i].m) return ma.f[i].m < mb.f[i].m;
    }
    return false;
}

bool Algebra::allowsMonomial(const Monomial& m) const {
    for (const auto& x : m.f)
        if (!allows(x.s)) return false;
    return true;
}

namespace {
constexpr uint8_t bit(Sector s) { return static_cast<uint8_t>(1u << static_cast<unsigned>(s)); }
}

const Algebra ALG_EL{"EL", static_cast<uint8_t>(bit(Sector::ETA) | bit(Sector::JET) | bit(Sector::CHARGE))};
const Algebra ALG_BG_X{"BetaGamma", static_cast<uint8_t>(bit(Sector::BX) | bit(Sector::GX))};
const Algebra ALG_BG_Y{"BetaGammaY", static_cast<uint8_t>(bit(Sector::BY) | bit(Sector::GY))};
const Algebra ALG_BX_EL{"BxEL", static_cast<uint8_t>(ALG_BG_X.mask | ALG_EL.mask)};
const Algebra ALG_DCHU{"DchU", static_cast<uint8_t>(ALG_BG_X.mask | ALG_EL.mask | ALG_BG_Y.mask)};

const std::vector<GenSpec>& generatorUniverse() {
    static const std::vector<GenSpec> u = {
        {"bx", GenKind::BosonB, 0},   {"gx", GenKind::BosonG, 0},
        {"eta", GenKind::Current, 1}, {"lamp", GenKind::FunctionUnit, 1},
        {"lamm", GenKind::FunctionUnit, 1},
        {"by", GenKind::BosonB, 2},   {"gy", GenKind::BosonG, 2},
    };
    return u;
}

Algebra tensorAlgebras(const std::vector<Algebra>& parts) {
    Algebra out;
    for (const auto& p : parts) {
        if (out.mask & p.mask)
            throw SlotClash("algebras " + out.name + " and " + p.name + " share a slot");
        out.mask |= p.mask;
        out.name = out.name.empty() ? p.name : out.name + "*" + p.name;
    }
    return out;
}

bool lookupGenerator(const std::string& name, Factor& out) {
    if (name == "bx") { out = {Sector::BX, 0}; return true; }
    if (name == "gx") { out = {Sector::GX, 0}; return true; }
    if (name == "eta") { out = {Sector::ETA, 0}; return true; }
    if (name == "lamp") { out = {Sector::CHARGE, 1}; return true; }
    if (name == "lamm") { out = {Sector::CHARGE, -1}; return true; }
    if (name == "by") { out = {Sector::BY, 0}; return true; }
    if (name == "gy") { out = {Sector::GY, 0}; return true; }
    return false;
}

Sector factorSector(const Factor& f) { return f.s; }

} // namespace vac
