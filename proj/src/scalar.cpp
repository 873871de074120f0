#include "vac/scalar.hpp"

#include <boost/multiprecision/integer.hpp>

namespace vac {

namespace {

BigInt intGcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

IntPoly IntPoly::constant(BigInt v) {
    IntPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::variable() {
    IntPoly p;
    p.c = {BigInt(0), BigInt(1)};
    return p;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const BigInt& IntPoly::leading() const {
    if (c.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.isZero() || b.isZero()) return IntPoly{};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c) {
        g = intGcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    if (s == 0) return IntPoly{};
    IntPoly r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

IntPoly IntPoly::divContent(const BigInt& s) const {
    if (s == 0) throw InternalError("division of polynomial coefficients by zero");
    IntPoly r = *this;
    for (auto& x : r.c) {
        if (x % s != 0) throw InternalError("inexact coefficient division");
        x /= s;
    }
    return r;
}

IntPoly IntPoly::primitivePart() const {
    if (isZero()) return IntPoly{};
    BigInt g = content();
    if (leading() < 0) g = -g;
    return divContent(g);
}

BigRat IntPoly::evalRat(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a reduced mod b.
IntPoly pseudoRem(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    while (!a.isZero() && a.degree() >= db) {
        int shift = a.degree() - db;
        BigInt lead = a.leading();
        a = a.scaled(b.leading());
        IntPoly sub;
        sub.c.assign(static_cast<size_t>(shift), BigInt(0));
        sub.c.insert(sub.c.end(), b.c.begin(), b.c.end());
        a = a - IntPoly(std::move(sub.c)).scaled(lead);
    }
    return a;
}

} // namespace

IntPoly polyGcd(const IntPoly& a, const IntPoly& b) {
    if (a.isZero()) return b.isZero() ? IntPoly{} : b.primitivePart().scaled(b.content());
    if (b.isZero()) return a.primitivePart().scaled(a.content());
    BigInt g = intGcd(a.content(), b.content());
    IntPoly x = a.primitivePart(), y = b.primitivePart();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.isZero()) {
        IntPoly r = pseudoRem(x, y);
        x = y;
        y = r.isZero() ? IntPoly{} : r.primitivePart();
    }
    return x.primitivePart().scaled(g);
}

IntPoly divExact(const IntPoly& a, const IntPoly& b) {
    if (b.isZero()) throw InternalError("exact division by zero polynomial");
    if (a.isZero()) return IntPoly{};
    IntPoly rem = a, q;
    q.c.assign(static_cast<size_t>(a.degree() - b.degree() + 1), BigInt(0));
    while (!rem.isZero() && rem.degree() >= b.degree()) {
        if (rem.leading() % b.leading() != 0) throw InternalError("inexact polynomial division");
        BigInt qc = rem.leading() / b.leading();
        int shift = rem.degree() - b.degree();
        q.c[static_cast<size_t>(shift)] = qc;
        IntPoly sub;
        sub.c.assign(static_cast<size_t>(shift), BigInt(0));
        sub.c.insert(sub.c.end(), b.c.begin(), b.c.end());
        rem = rem - IntPoly(std::move(sub.c)).scaled(qc);
    }
    if (!rem.isZero()) throw InternalError("inexact polynomial division (remainder)");
    q.trim();
    return q;
}

std::string Level::str() const {
    if (!numeric) return "symbolic";
    return value.str();
}

Level Level::parse(const std::string& text) {
    if (text == "symbolic") return Level::symbolic();
    try {
        return Level::at(BigRat(text));
    } catch (const std::exception&) {
        throw ParseError(0, "a level: 'symbolic' or an exact rational like -1/2");
    }
}

Scalar Scalar::make(IntPoly num, IntPoly den) {
    if (den.isZero()) throw DivisionByZero();
    Scalar s;
    if (num.isZero()) return s;
    IntPoly g = polyGcd(num, den);
    s.num_ = divExact(num, g);
    s.den_ = divExact(den, g);
    if (s.den_.leading() < 0) {
        s.num_ = -s.num_;
        s.den_ = -s.den_;
    }
    return s;
}

Scalar Scalar::fromInt(BigInt v) { return make(IntPoly::constant(std::move(v)), IntPoly::constant(1)); }

Scalar Scalar::fromRatio(BigInt num, BigInt den) {
    return make(IntPoly::constant(std::move(num)), IntPoly::constant(std::move(den)));
}

Scalar Scalar::fromRational(const BigRat& v) {
    return fromRatio(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v));
}

Scalar Scalar::k() { return make(IntPoly::variable(), IntPoly::constant(1)); }

bool Scalar::isOne() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.c[0] == 1 && den_.c[0] == 1;
}

BigRat Scalar::asRational() const {
    if (!isConstant()) throw InternalError("asRational on a nonconstant scalar");
    if (isZero()) return BigRat(0);
    return BigRat(num_.c[0]) / BigRat(den_.c[0]);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar::make(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.isZero()) throw DivisionByZero();
    return Scalar::make(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (isZero()) throw DivisionByZero();
    return make(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = fromInt(1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar eval_at_level(const Scalar& a, const Level& l) {
    if (!l.numeric) return a;
    BigRat dv = a.den().evalRat(l.value);
    if (dv == 0) throw PoleAtLevel("k = " + l.value.str());
    return Scalar::fromRational(a.num().evalRat(l.value) / dv);
}

} // namespace vac
