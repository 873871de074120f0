#include "vac/field.hpp"

#include <algorithm>

namespace vac {

const Field LambdaPoly::ZERO_FIELD{};

Field Field::vacuum(Scalar c) { return mono(VACUUM_ID, std::move(c)); }

Field Field::mono(MonoId id, Scalar c) {
    Field f;
    if (!c.isZero()) f.t_.push_back({id, std::move(c)});
    return f;
}

Field Field::generator(const Factor& f) { return mono(internFactor(f)); }

void Field::add(MonoId m, const Scalar& c) {
    if (c.isZero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, MonoId id) { return t.m < id; });
    if (it != t_.end() && it->m == m) {
        it->c = it->c + c;
        if (it->c.isZero()) t_.erase(it);
    } else {
        t_.insert(it, Term{m, c});
    }
}

Field operator+(const Field& a, const Field& b) {
    Field r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        if (a.t_[i].m < b.t_[j].m) {
            r.t_.push_back(a.t_[i++]);
        } else if (b.t_[j].m < a.t_[i].m) {
            r.t_.push_back(b.t_[j++]);
        } else {
            Scalar c = a.t_[i].c + b.t_[j].c;
            if (!c.isZero()) r.t_.push_back({a.t_[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
    return r;
}

Field operator-(const Field& a, const Field& b) { return a + (-b); }

Field Field::operator-() const {
    Field r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
}

Field Field::scaled(const Scalar& s) const {
    if (s.isZero()) return Field();
    Field r = *this;
    for (auto& t : r.t_) t.c = t.c * s;
    return r;
}

bool Field::operator==(const Field& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
    return true;
}

Scalar Field::coeff(MonoId m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, MonoId id) { return t.m < id; });
    if (it != t_.end() && it->m == m) return it->c;
    return Scalar();
}

int Field::maxGrading() const {
    int g = 0;
    for (const auto& t : t_) g = std::max(g, monomial(t.m).grading());
    return g;
}

bool Field::functionOnly() const {
    for (const auto& t : t_)
        if (!monomial(t.m).functionOnly()) return false;
    return true;
}

const Field& LambdaPoly::at(int n) const {
    if (n < 0 || n >= static_cast<int>(c_.size())) return ZERO_FIELD;
    return c_[static_cast<size_t>(n)];
}

Field LambdaPoly::nth(int n) const {
    Field f = at(n);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return f.scaled(Scalar::fromInt(fact));
}

void LambdaPoly::set(int n, Field f) {
    if (n < 0) throw InternalError("negative lambda power");
    if (n >= static_cast<int>(c_.size())) {
        if (f.isZero()) return;
        c_.resize(static_cast<size_t>(n) + 1);
    }
    c_[static_cast<size_t>(n)] = std::move(f);
    trim();
}

void LambdaPoly::addTo(int n, const Field& f) {
    if (f.isZero()) return;
    if (n < 0) throw InternalError("negative lambda power");
    if (n >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(n) + 1);
    c_[static_cast<size_t>(n)] = c_[static_cast<size_t>(n)] + f;
    trim();
}

LambdaPoly LambdaPoly::fromNth(const std::vector<std::pair<int, Field>>& nthProducts) {
    LambdaPoly p;
    for (const auto& [n, f] : nthProducts) {
        BigInt fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        p.addTo(n, f.scaled(Scalar::fromRatio(1, fact)));
    }
    return p;
}

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r = a;
    for (int n = 0; n <= b.degree(); ++n) r.addTo(n, b.at(n));
    return r;
}

LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) { return a + (-b); }

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r = *this;
    for (auto& f : r.c_) f = -f;
    return r;
}

LambdaPoly LambdaPoly::scaled(const Scalar& s) const {
    if (s.isZero()) return LambdaPoly();
    LambdaPoly r = *this;
    for (auto& f : r.c_) f = f.scaled(s);
    r.trim();
    return r;
}

LambdaPoly LambdaPoly::shifted(int j) const {
    if (isZero() || j == 0) return *this;
    LambdaPoly r;
    r.c_.resize(c_.size() + static_cast<size_t>(j));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(j)] = c_[i];
    return r;
}

LambdaPoly LambdaPoly::integrated() const {
    LambdaPoly r;
    for (int n = 0; n <= degree(); ++n)
        r.addTo(n + 1, at(n).scaled(Scalar::fromRatio(1, n + 1)));
    return r;
}

bool LambdaPoly::operator==(const LambdaPoly& o) const { return c_ == o.c_; }

void LambdaPoly::trim() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

void LambdaPoly2::addTo(int i, int j, const Field& f) {
    if (f.isZero()) return;
    auto key = std::make_pair(i, j);
    auto it = m_.find(key);
    if (it == m_.end()) {
        m_.emplace(key, f);
    } else {
        it->second = it->second + f;
        if (it->second.isZero()) m_.erase(it);
    }
}

LambdaPoly2 operator-(const LambdaPoly2& a, const LambdaPoly2& b) {
    LambdaPoly2 r = a;
    for (const auto& [key, f] : b.m_) r.addTo(key.first, key.second, -f);
    return r;
}

} // namespace vac
