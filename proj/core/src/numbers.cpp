#include "isoparity/numbers.hpp"

#include <algorithm>
#include <cstdlib>

namespace isoparity {

Rational rational(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational(long num, long den) { return rational(Int(num), Int(den)); }

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    const auto ok_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + i, t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!ok_int(num) || !ok_int(den)) return std::nullopt;
    // mpz_class accepts a leading '-' but not '+'
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    Int n(num), d(den);
    if (d == 0) return std::nullopt;
    return rational(n, d);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::optional<long> valuation(const Int& x, const Int& ell) {
    if (x == 0) return std::nullopt;
    Int a = abs(x);
    long v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

std::optional<long> valuation(const Rational& x, const Int& ell) {
    if (x == 0) return std::nullopt;
    return *valuation(x.get_num(), ell) - *valuation(x.get_den(), ell);
}

Int modpow(Int base, Int exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

int legendre(const Int& a, const Int& ell) {
    return mpz_legendre(a.get_mpz_t(), ell.get_mpz_t());
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<std::pair<Int, long>> factorize(const Int& n, long factor_bound) {
    if (n == 0) throw Error("factorize: zero");
    Int a = abs(n);
    std::vector<std::pair<Int, long>> out;
    auto strip = [&](const Int& q) {
        if (a % q == 0) {
            long e = 0;
            while (a % q == 0) {
                a /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
    };
    strip(2);
    strip(3);
    for (Int q = 5; q <= factor_bound && q * q <= a; q += (q % 6 == 5) ? 2 : 4)
        strip(q);
    if (a > 1) {
        if (!is_prime(a))
            throw FactorBoundExceeded("factorize: composite cofactor " + a.get_str() +
                                      " beyond trial-division bound");
        out.emplace_back(a, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> denominator_primes(const std::vector<Rational>& xs, long factor_bound) {
    Int lcm = 1;
    for (const auto& x : xs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> out;
    if (lcm > 1)
        for (const auto& [q, e] : factorize(lcm, factor_bound)) out.push_back(q);
    return out;
}

}  // namespace isoparity
