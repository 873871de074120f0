#include "vac/engine.hpp"

namespace vac {

namespace {

uint64_t pairKey(MonoId a, MonoId b) {
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint64_t>(b);
}

constexpr int MAX_DEPTH = 512;

} // namespace

struct Engine::Guard {
    Engine& e;
    explicit Guard(Engine& eng) : e(eng) {
        if (++e.depth_ > MAX_DEPTH) throw InternalError("engine recursion depth exceeded");
    }
    ~Guard() { --e.depth_; }
};

Scalar binom(int n, int m) {
    if (m < 0 || m > n) return Scalar();
    BigInt r = 1;
    for (int i = 0; i < m; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Scalar::fromInt(r);
}

Engine::Engine(Level level) : level_(std::move(level)) {
    Scalar two_k_plus_4 = Scalar::fromInt(2) * Scalar::k() + Scalar::fromInt(4);
    etaEta_ = eval_at_level(two_k_plus_4, level_);
}

Field Engine::derive(const Field& a) {
    Field out;
    for (const auto& t : a.terms()) out = out + deriveMono(t.m).scaled(t.c);
    return out;
}

Field Engine::derivePow(const Field& a, int m) {
    Field out = a;
    for (int i = 0; i < m; ++i) out = derive(out);
    return out;
}

Field Engine::deriveFactor(const Factor& u) {
    switch (u.s) {
        case Sector::BX:
        case Sector::GX:
        case Sector::ETA:
        case Sector::BY:
        case Sector::GY: return Field::generator({u.s, u.m + 1});
        case Sector::JET: return Field::generator({Sector::JET, u.m + 1});
        case Sector::CHARGE: {
            // d(lambda^n) = n * lambda^(n-1) * jet(1)
            Monomial m;
            m.f.push_back({Sector::JET, 1});
            if (u.m != 1) m.f.push_back({Sector::CHARGE, u.m - 1});
            return Field::mono(intern(m), Scalar::fromInt(u.m));
        }
    }
    return Field();
}

Field Engine::deriveMono(MonoId id) {
    if (id == VACUUM_ID) return Field();
    auto it = deriveCache_.find(id);
    if (it != deriveCache_.end()) return it->second;
    Guard g(*this);
    const Monomial m = monomial(id);
    Factor u = m.f[0];
    Monomial rest;
    rest.f.assign(m.f.begin() + 1, m.f.end());
    MonoId restId = intern(rest);
    Field out = nprod(deriveFactor(u), Field::mono(restId)) +
                nprod(Field::generator(u), deriveMono(restId));
    deriveCache_.emplace(id, out);
    return out;
}

Field Engine::nprod(const Field& a, const Field& b) {
    Field out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out = out + nprodMono(ta.m, tb.m).scaled(ta.c * tb.c);
    return out;
}

Field Engine::nprodMono(MonoId a, MonoId b) {
    if (a == VACUUM_ID) return Field::mono(b);
    if (b == VACUUM_ID) return Field::mono(a);
    uint64_t key = pairKey(a, b);
    auto it = nprodCache_.find(key);
    if (it != nprodCache_.end()) return it->second;
    Guard g(*this);
    const Monomial ma = monomial(a);
    Field out;
    if (ma.f.size() == 1) {
        out = insertFactor(ma.f[0], b);
    } else {
        // ::u A':B: = :u(:A'B:): + sum_n :(d^(n+1)u)P_n:/(n+1)
        //                        + sum_n :(d^(n+1)A')Q_n:/(n+1),
        // P = [A'_l B], Q = [u_l B] (quasi-associativity).
        Factor u = ma.f[0];
        Monomial restM;
        restM.f.assign(ma.f.begin() + 1, ma.f.end());
        MonoId rest = intern(restM);
        Field uField = Field::generator(u);
        Field restField = Field::mono(rest);
        Field bField = Field::mono(b);
        out = nprod(uField, nprodMono(rest, b));
        LambdaPoly P = bracketMono(rest, b);
        for (int n = 0; n <= P.degree(); ++n)
            out = out + nprod(derivePow(uField, n + 1), P.at(n)).scaled(Scalar::fromRatio(1, n + 1));
        LambdaPoly Q = bracket(uField, bField);
        for (int n = 0; n <= Q.degree(); ++n)
            out = out + nprod(derivePow(restField, n + 1), Q.at(n)).scaled(Scalar::fromRatio(1, n + 1));
    }
    nprodCache_.emplace(key, out);
    return out;
}

Field Engine::insertFactor(const Factor& u, MonoId b) {
    if (b == VACUUM_ID) {
        if (u.s == Sector::CHARGE && u.m == 0) return Field::vacuum();
        return Field::generator(u);
    }
    const Monomial mb = monomial(b);
    const Factor v = mb.f[0];
    if (u.s == Sector::CHARGE && v.s == Sector::CHARGE) {
        // Charge factors merge: lambda^n * lambda^n' = lambda^(n+n'). Valid in
        // place because everything after the charge factor is in a later slot
        // with zero bracket against functions.
        Monomial merged;
        int n = u.m + v.m;
        if (n != 0) merged.f.push_back({Sector::CHARGE, n});
        merged.f.insert(merged.f.end(), mb.f.begin() + 1, mb.f.end());
        return Field::mono(intern(merged));
    }
    if (factorCmp(u, v) <= 0) {
        Monomial joined;
        joined.f.reserve(mb.f.size() + 1);
        joined.f.push_back(u);
        joined.f.insert(joined.f.end(), mb.f.begin(), mb.f.end());
        return Field::mono(intern(joined));
    }
    // :u(:v rest:): = :v(:u rest:): + :K(u,v) rest:
    Monomial restM;
    restM.f.assign(mb.f.begin() + 1, mb.f.end());
    MonoId rest = intern(restM);
    Field out = prependFactor(v, insertFactor(u, rest));
    Field K = kCorrection(u, v);
    if (!K.isZero()) out = out + nprod(K, Field::mono(rest));
    return out;
}

Field Engine::prependFactor(const Factor& v, const Field& x) {
    Field out;
    for (const auto& t : x.terms()) {
        const Monomial& m = monomial(t.m);
        bool fastPath = m.isVacuum() ||
                        (factorCmp(v, m.f[0]) <= 0 &&
                         !(v.s == Sector::CHARGE && m.f[0].s == Sector::CHARGE));
        if (fastPath) {
            Monomial joined;
            joined.f.reserve(m.f.size() + 1);
            joined.f.push_back(v);
            joined.f.insert(joined.f.end(), m.f.begin(), m.f.end());
            out.add(intern(joined), t.c);
        } else {
            out = out + insertFactor(v, t.m).scaled(t.c);
        }
    }
    return out;
}

// K(a,b) = :ab: - :ba: = sum_n (-1)^n d^(n+1)(P_n)/(n+1) for [a_l b] = sum l^n P_n.
Field Engine::kCorrection(const Factor& u, const Factor& v) {
    LambdaPoly p = baseBracket(u, v);
    Field out;
    for (int n = 0; n <= p.degree(); ++n) {
        Scalar c = Scalar::fromRatio((n % 2 == 0) ? 1 : -1, n + 1);
        out = out + derivePow(p.at(n), n + 1).scaled(c);
    }
    return out;
}

LambdaPoly Engine::shiftPowField(const Field& f, int m) {
    LambdaPoly out;
    for (int i = 0; i <= m; ++i) out.addTo(i, derivePow(f, m - i).scaled(binom(m, i)));
    return out;
}

// Generator-pair brackets; everything else is zero.
LambdaPoly Engine::baseBracket(const Factor& u, const Factor& v) {
    LambdaPoly out;
    auto su = u.s, sv = v.s;
    // beta-gamma pairs, per slot
    auto bgPair = [&](Sector sb, Sector sg) -> bool {
        if (su == sb && sv == sg) {
            Scalar c = Scalar::fromInt((u.m % 2 == 0) ? 1 : -1);
            out.addTo(u.m + v.m, Field::vacuum(c));
            return true;
        }
        if (su == sg && sv == sb) {
            Scalar c = Scalar::fromInt((u.m % 2 == 0) ? -1 : 1);
            out.addTo(u.m + v.m, Field::vacuum(c));
            return true;
        }
        return false;
    };
    if (bgPair(Sector::BX, Sector::GX) || bgPair(Sector::BY, Sector::GY)) return out;

    if (su == Sector::ETA && sv == Sector::ETA) {
        Scalar c = etaEta_ * Scalar::fromInt((u.m % 2 == 0) ? 1 : -1);
        out.addTo(u.m + v.m + 1, Field::vacuum(c));
        return out;
    }
    if (su == Sector::ETA && sv == Sector::CHARGE) {
        // [eta_l lambda^n] = n lambda^n, then sesquilinearity in the first slot.
        out.addTo(u.m, Field::mono(internFactor(v), Scalar::fromInt(v.m))
                           .scaled(Scalar::fromInt((u.m % 2 == 0) ? 1 : -1)));
        return out;
    }
    if (su == Sector::ETA && sv == Sector::JET) {
        // [eta_l jet(j)] = (l+d)^j lambda, then (-l)^m for the eta derivative.
        LambdaPoly p = shiftPowField(Field::generator({Sector::CHARGE, 1}), v.m);
        Scalar sign = Scalar::fromInt((u.m % 2 == 0) ? 1 : -1);
        for (int i = 0; i <= p.degree(); ++i) out.addTo(i + u.m, p.at(i).scaled(sign));
        return out;
    }
    if (su == Sector::CHARGE && sv == Sector::ETA) {
        // [lambda^n_l eta] = -n lambda^n, then (l+d)^m for the eta derivative.
        LambdaPoly p = shiftPowField(Field::mono(internFactor(u), Scalar::fromInt(-u.m)), v.m);
        return p;
    }
    if (su == Sector::JET && sv == Sector::ETA) {
        // [jet(j)_l eta] = (-l)^j (l+d)^m (-lambda).
        LambdaPoly p = shiftPowField(Field::generator({Sector::CHARGE, 1}).scaled(Scalar::fromInt(-1)), v.m);
        Scalar sign = Scalar::fromInt((u.m % 2 == 0) ? 1 : -1);
        for (int i = 0; i <= p.degree(); ++i) out.addTo(i + u.m, p.at(i).scaled(sign));
        return out;
    }
    return out;
}

LambdaPoly Engine::bracket(const Field& a, const Field& b) {
    LambdaPoly out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out = out + bracketMono(ta.m, tb.m).scaled(ta.c * tb.c);
    return out;
}

LambdaPoly Engine::bracketMono(MonoId a, MonoId b) {
    if (a == VACUUM_ID || b == VACUUM_ID) return LambdaPoly();
    uint64_t key = pairKey(a, b);
    auto it = bracketCache_.find(key);
    if (it != bracketCache_.end()) return it->second;
    Guard g(*this);
    const Monomial ma = monomial(a);
    const Monomial mb = monomial(b);
    LambdaPoly out;
    if (ma.f.size() == 1 && mb.f.size() == 1) {
        out = baseBracket(ma.f[0], mb.f[0]);
    } else if (ma.f.size() == 1) {
        // Left Wick: [u_l :vB:] = :[u_l v]B: + :v[u_l B]: + int_0^l [[u_l v]_m B] dm.
        Factor u = ma.f[0];
        Factor v = mb.f[0];
        Monomial restM;
        restM.f.assign(mb.f.begin() + 1, mb.f.end());
        MonoId rest = intern(restM);
        Field restField = Field::mono(rest);
        LambdaPoly Q = baseBracket(u, v);
        for (int i = 0; i <= Q.degree(); ++i) out.addTo(i, nprod(Q.at(i), restField));
        LambdaPoly R = bracketMono(a, rest);
        Field vField = Field::generator(v);
        for (int i = 0; i <= R.degree(); ++i) out.addTo(i, nprod(vField, R.at(i)));
        for (int i = 0; i <= Q.degree(); ++i) {
            LambdaPoly S = bracket(Q.at(i), restField);
            for (int m = 0; m <= S.degree(); ++m)
                out.addTo(i + m + 1, S.at(m).scaled(Scalar::fromRatio(1, m + 1)));
        }
    } else {
        // Right Wick:
        // [:uA:_l b] = :(e^{d d_l}u)[A_l b]: + :(e^{d d_l}A)[u_l b]:
        //              + int_0^l [A_m [u_{l-m} b]] dm.
        Factor u = ma.f[0];
        Monomial restM;
        restM.f.assign(ma.f.begin() + 1, ma.f.end());
        MonoId rest = intern(restM);
        Field uField = Field::generator(u);
        Field restField = Field::mono(rest);
        LambdaPoly P = bracketMono(rest, b);
        for (int n = 0; n <= P.degree(); ++n)
            for (int m = 0; m <= n; ++m)
                out.addTo(n - m, nprod(derivePow(uField, m), P.at(n)).scaled(binom(n, m)));
        LambdaPoly Q = bracketMono(intern(Monomial{{u}}), b);
        for (int n = 0; n <= Q.degree(); ++n)
            for (int m = 0; m <= n; ++m)
                out.addTo(n - m, nprod(derivePow(restField, m), Q.at(n)).scaled(binom(n, m)));
        for (int n = 0; n <= Q.degree(); ++n) {
            LambdaPoly S = bracket(restField, Q.at(n));
            for (int i = 0; i <= n; ++i) {
                Scalar c = binom(n, i) * Scalar::fromRatio((i % 2 == 0) ? 1 : -1, 1);
                for (int m = 0; m <= S.degree(); ++m)
                    out.addTo(n - i + i + m + 1,
                              S.at(m).scaled(c * Scalar::fromRatio(1, i + m + 1)));
            }
        }
    }
    bracketCache_.emplace(key, out);
    return out;
}

Field Engine::nthProduct(const Field& a, long n, const Field& b) {
    if (n >= 0) return bracket(a, b).nth(static_cast<int>(n));
    int j = static_cast<int>(-n - 1);
    BigInt fact = 1;
    for (int i = 2; i <= j; ++i) fact *= i;
    return nprod(derivePow(a, j).scaled(Scalar::fromRatio(1, fact)), b);
}

LambdaPoly Engine::skewTransport(const LambdaPoly& p) {
    LambdaPoly out;
    for (int n = 0; n <= p.degree(); ++n) {
        Scalar sign = Scalar::fromInt((n % 2 == 0) ? -1 : 1); // the leading minus times (-1)^n
        for (int j = 0; j <= n; ++j)
            out.addTo(n - j, derivePow(p.at(n), j).scaled(sign * binom(n, j)));
    }
    return out;
}

LambdaPoly Engine::skewResidual(const Field& a, const Field& b) {
    return bracket(a, b) - skewTransport(bracket(b, a));
}

LambdaPoly2 Engine::jacobiResidual(const Field& a, const Field& b, const Field& c) {
    LambdaPoly2 out;
    LambdaPoly bc = bracket(b, c);
    for (int j = 0; j <= bc.degree(); ++j) {
        LambdaPoly abc = bracket(a, bc.at(j));
        for (int i = 0; i <= abc.degree(); ++i) out.addTo(i, j, abc.at(i));
    }
    LambdaPoly ac = bracket(a, c);
    for (int i = 0; i <= ac.degree(); ++i) {
        LambdaPoly bac = bracket(b, ac.at(i));
        for (int j = 0; j <= bac.degree(); ++j) out.addTo(i, j, -bac.at(j));
    }
    LambdaPoly ab = bracket(a, b);
    for (int i = 0; i <= ab.degree(); ++i) {
        LambdaPoly abTc = bracket(ab.at(i), c);
        // lambda^i (lambda+mu)^m expansion.
        for (int m = 0; m <= abTc.degree(); ++m)
            for (int s = 0; s <= m; ++s)
                out.addTo(i + s, m - s, -abTc.at(m).scaled(binom(m, s)));
    }
    return out;
}

Field Engine::quasiAssocResidual(const Field& a, const Field& b, const Field& c) {
    // ::ab:c: - :a:bc:: - sum_n :(d^(n+1)a)[b_l c]_n:/(n+1) - sum_n :(d^(n+1)b)[a_l c]_n:/(n+1)
    Field lhs = nprod(nprod(a, b), c);
    Field rhs = nprod(a, nprod(b, c));
    LambdaPoly P = bracket(b, c);
    for (int n = 0; n <= P.degree(); ++n)
        rhs = rhs + nprod(derivePow(a, n + 1), P.at(n)).scaled(Scalar::fromRatio(1, n + 1));
    LambdaPoly Q = bracket(a, c);
    for (int n = 0; n <= Q.degree(); ++n)
        rhs = rhs + nprod(derivePow(b, n + 1), Q.at(n)).scaled(Scalar::fromRatio(1, n + 1));
    return lhs - rhs;
}

} // namespace vac
