#ifndef ISOPARITY_WEIERSTRASS_HPP
#define ISOPARITY_WEIERSTRASS_HPP

#include <optional>
#include <string>

#include "isoparity/numbers.hpp"

namespace isoparity {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, discriminant nonzero.
struct WeierstrassModel {
    Rational a1, a2, a3, a4, a6;

    bool is_integral() const;
    std::string to_string() const;  // "[a1,a2,a3,a4,a6]"
    friend bool operator==(const WeierstrassModel& l, const WeierstrassModel& r) = default;
};

struct Invariants {
    Rational b2, b4, b6, b8, c4, c6, disc, j;
};

// Throws SingularModel when disc = 0; asserts 1728*disc = c4^3 - c6^2.
Invariants invariants(const WeierstrassModel& m);

// Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t, mapping a model
// to an isomorphic one; disc' = u^-12 disc, c4' = u^-4 c4, omega' = u * omega.
struct Transformation {
    Rational u, r, s, t;

    static Transformation identity() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }
    Transformation compose(const Transformation& then) const;  // apply *this, then `then`
    Transformation inverse() const;
    friend bool operator==(const Transformation& l, const Transformation& r) = default;
};

WeierstrassModel transform(const WeierstrassModel& m, const Transformation& t);

// The transformation carrying `from` to `to`, if the models are isomorphic
// with u > 0 (every Q-isomorphism can be so normalized).
std::optional<Transformation> transform_between(const WeierstrassModel& from,
                                                const WeierstrassModel& to);

// Short form y^2 = x^3 - 27 c4 x - 54 c6 and the transformation reaching it.
struct ShortModel {
    Rational A, B;
    Transformation to_short;  // transform(m, to_short) = the short model
};
ShortModel short_model(const WeierstrassModel& m);

WeierstrassModel short_to_model(const Rational& A, const Rational& B);

}  // namespace isoparity

#endif
