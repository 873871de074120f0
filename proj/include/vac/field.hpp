#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vac/monomial.hpp"
#include "vac/scalar.hpp"

namespace vac {

// Canonical linear combination of interned monomials. Terms are sorted by
// MonoId and never carry a zero coefficient; the vacuum is the empty monomial.
class Field {
  public:
    struct Term {
        MonoId m;
        Scalar c;
    };

    Field() = default;
    static Field zero() { return Field(); }
    static Field vacuum(Scalar c = Scalar::fromInt(1));
    static Field mono(MonoId id, Scalar c = Scalar::fromInt(1));
    static Field generator(const Factor& f);

    bool isZero() const { return t_.empty(); }
    const std::vector<Term>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    void add(MonoId m, const Scalar& c);
    friend Field operator+(const Field& a, const Field& b);
    friend Field operator-(const Field& a, const Field& b);
    Field operator-() const;
    Field scaled(const Scalar& s) const;
    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Coefficient of a monomial (zero scalar if absent).
    Scalar coeff(MonoId m) const;
    // Max grading over terms; 0 for the zero field.
    int maxGrading() const;
    bool functionOnly() const;

  private:
    std::vector<Term> t_;
};

// Polynomial in lambda with Field coefficients. Internally stores the plain
// lambda-power coefficients; the n-th product a_(n)b equals n! times coeff n
// and is exposed through nth().
class LambdaPoly {
  public:
    LambdaPoly() = default;

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Field& at(int n) const; // lambda^n coefficient (zero field if absent)
    Field nth(int n) const;       // a_(n)b = n! * at(n)
    void set(int n, Field f);
    void addTo(int n, const Field& f);
    static LambdaPoly fromNth(const std::vector<std::pair<int, Field>>& nthProducts);

    friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
    LambdaPoly operator-() const;
    LambdaPoly scaled(const Scalar& s) const;
    // Multiply by lambda^j.
    LambdaPoly shifted(int j) const;
    // Integral from 0 to lambda: lambda^n -> lambda^(n+1)/(n+1).
    LambdaPoly integrated() const;
    bool operator==(const LambdaPoly& o) const;
    bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

    void trim();

  private:
    std::vector<Field> c_;
    static const Field ZERO_FIELD;
};

// Polynomial in two formal variables (lambda, mu) with Field coefficients,
// used by the Jacobi check.
class LambdaPoly2 {
  public:
    void addTo(int i, int j, const Field& f);
    bool isZero() const { return m_.empty(); }
    const std::map<std::pair<int, int>, Field>& entries() const { return m_; }
    friend LambdaPoly2 operator-(const LambdaPoly2& a, const LambdaPoly2& b);
    bool operator==(const LambdaPoly2& o) const { return m_ == o.m_; }

  private:
    std::map<std::pair<int, int>, Field> m_; // no zero entries
};

} // namespace vac
