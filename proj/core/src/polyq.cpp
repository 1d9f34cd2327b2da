#include "isoparity/polyq.hpp"

#include <algorithm>

namespace isoparity {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }

void PolyQ::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ({c}); }

PolyQ PolyQ::x() { return PolyQ({Rational(0), Rational(1)}); }

Rational PolyQ::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[i];
}

Rational PolyQ::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& ci : r.c_) ci = -ci;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    prune();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rational(0));
    for (size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    prune();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& rhs) {
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    c_ = std::move(out);
    prune();
    return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& ci : c_) ci *= s;
    return *this;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rational> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return PolyQ(std::move(out));
}

Rational PolyQ::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyQ PolyQ::monic() const {
    if (c_.empty()) return *this;
    PolyQ r = *this;
    Rational inv = Rational(1) / c_.back();
    r *= inv;
    return r;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw Error("divmod: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {PolyQ(), a};
    std::vector<Rational> quo(da - db + 1, Rational(0));
    Rational lead_inv = Rational(1) / b.leading();
    for (long i = da; i >= db; --i) {
        Rational q = rem[i] * lead_inv;
        if (q == 0) continue;
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

bool divides(const PolyQ& b, const PolyQ& a) { return divmod(a, b).second.is_zero(); }

PolyQ divide_exact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("divide_exact: remainder nonzero");
    return q;
}

PolyQ gcd_poly(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyQ compose_linear(const PolyQ& h, const Rational& a, const Rational& b) {
    PolyQ lin({b, a});
    PolyQ acc;
    for (long i = h.degree(); i >= 0; --i) {
        acc *= lin;
        acc += PolyQ::constant(h.coeff(i));
    }
    return acc;
}

}  // namespace isoparity
