#ifndef ISOPARITY_POLYQ_HPP
#define ISOPARITY_POLYQ_HPP

#include <utility>
#include <vector>

#include "isoparity/numbers.hpp"

namespace isoparity {

// Univariate polynomial over Q, coefficients low degree first, trailing zeros
// pruned (leading coefficient nonzero unless the zero polynomial).
class PolyQ {
   public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs);

    static PolyQ constant(const Rational& c);
    static PolyQ x();

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Rational coeff(long i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& rhs);
    PolyQ& operator-=(const PolyQ& rhs);
    PolyQ& operator*=(const PolyQ& rhs);
    PolyQ& operator*=(const Rational& s);

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
    friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
    friend PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    PolyQ derivative() const;
    Rational eval(const Rational& x) const;
    PolyQ monic() const;

   private:
    std::vector<Rational> c_;
    void prune();
};

// Quotient and remainder; b nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

// True iff b divides a exactly (b nonzero).
bool divides(const PolyQ& b, const PolyQ& a);

// a / b, throwing if the division is not exact.
PolyQ divide_exact(const PolyQ& a, const PolyQ& b);

// Monic gcd; gcd(0,0) = 0.
PolyQ gcd_poly(PolyQ a, PolyQ b);

// h(a*x + b)
PolyQ compose_linear(const PolyQ& h, const Rational& a, const Rational& b);

}  // namespace isoparity

#endif
