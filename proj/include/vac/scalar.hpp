#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "vac/errors.hpp"

namespace vac {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense polynomial in the level variable k over Z.
// Invariant: coefficient vector is empty (the zero polynomial) or has a
// nonzero leading entry.
struct IntPoly {
    std::vector<BigInt> c; // c[i] is the coefficient of k^i

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> cs) : c(std::move(cs)) { trim(); }

    static IntPoly constant(BigInt v);
    static IntPoly variable(); // the polynomial k

    void trim();
    bool isZero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const BigInt& leading() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c == o.c; }

    BigInt content() const;     // gcd of coefficients, >= 0 (0 for the zero polynomial)
    IntPoly primitivePart() const;
    IntPoly scaled(const BigInt& s) const;
    IntPoly divContent(const BigInt& s) const; // exact coefficient-wise division

    BigRat evalRat(const BigRat& x) const;
};

// gcd in Z[k] including integer content; result has positive leading coefficient.
IntPoly polyGcd(const IntPoly& a, const IntPoly& b);
IntPoly divExact(const IntPoly& a, const IntPoly& b);

// Formal level: symbolic k or an exact rational.
struct Level {
    bool numeric = false;
    BigRat value; // meaningful only when numeric

    static Level symbolic() { return Level{}; }
    static Level at(BigRat v) { return Level{true, std::move(v)}; }
    bool operator==(const Level& o) const {
        return numeric == o.numeric && (!numeric || value == o.value);
    }
    std::string str() const;
    // Accepts "symbolic" or an exact rational like "-1/2" or "3".
    static Level parse(const std::string& text);
};

// Element of Q(k): fully reduced fraction num/den in Z[k], den with positive
// leading coefficient, zero stored as 0/1. Equality is structural.
class Scalar {
  public:
    Scalar() : num_(), den_(IntPoly::constant(1)) {}
    static Scalar make(IntPoly num, IntPoly den);
    static Scalar fromInt(BigInt v);
    static Scalar fromRatio(BigInt num, BigInt den);
    static Scalar fromRational(const BigRat& v);
    static Scalar k(); // the level variable

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const;
    bool isConstant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    // Requires isConstant().
    BigRat asRational() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b); // throws DivisionByZero
    Scalar operator-() const;
    Scalar inverse() const; // throws DivisionByZero
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

  private:
    IntPoly num_, den_;
};

// Identity when the level is symbolic; otherwise exact substitution.
// Throws PoleAtLevel when the denominator vanishes at a numeric level.
Scalar eval_at_level(const Scalar& a, const Level& l);

} // namespace vac
