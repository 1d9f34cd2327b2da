#include "isoparity/polyf.hpp"

#include <algorithm>
#include <map>

#include "isoparity/errors.hpp"

namespace isoparity {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;
    return s >= m ? s - m : s;
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

uint64_t invmod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw Error("invmod: not invertible");
    return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

}  // namespace

PolyF::PolyF(uint64_t ell, std::vector<uint64_t> coeffs) : ell_(ell), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= ell_;
    prune();
}

void PolyF::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyF PolyF::x(uint64_t ell) { return PolyF(ell, {0, 1}); }

PolyF PolyF::constant(uint64_t ell, uint64_t c) { return PolyF(ell, {c}); }

uint64_t PolyF::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
    return c_[i];
}

PolyF PolyF::operator-() const {
    PolyF r = *this;
    for (auto& v : r.c_)
        if (v != 0) v = ell_ - v;
    return r;
}

PolyF operator+(const PolyF& a, const PolyF& b) {
    PolyF r(a.ell_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addmod(a.coeff(i), b.coeff(i), a.ell_);
    r.prune();
    return r;
}

PolyF operator-(const PolyF& a, const PolyF& b) {
    PolyF r(a.ell_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = submod(a.coeff(i), b.coeff(i), a.ell_);
    r.prune();
    return r;
}

PolyF operator*(const PolyF& a, const PolyF& b) {
    PolyF r(a.ell_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = addmod(r.c_[i + j], mulmod(a.c_[i], b.c_[j], a.ell_), a.ell_);
    }
    r.prune();
    return r;
}

PolyF PolyF::derivative() const {
    if (c_.size() <= 1) return PolyF(ell_);
    std::vector<uint64_t> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = mulmod(c_[i], i % ell_, ell_);
    return PolyF(ell_, std::move(out));
}

PolyF PolyF::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    uint64_t inv = invmod(c_.back(), ell_);
    PolyF r = *this;
    for (auto& v : r.c_) v = mulmod(v, inv, ell_);
    return r;
}

uint64_t PolyF::eval(uint64_t x) const {
    uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, x % ell_, ell_), *it, ell_);
    return acc;
}

std::pair<PolyF, PolyF> divmod(const PolyF& a, const PolyF& b) {
    if (b.is_zero()) throw Error("divmod: division by zero polynomial");
    uint64_t ell = a.modulus();
    std::vector<uint64_t> rem(a.coeffs());
    long db = b.degree(), da = a.degree();
    if (da < db) return {PolyF(ell), a};
    std::vector<uint64_t> quo(da - db + 1, 0);
    uint64_t lead_inv = invmod(b.leading(), ell);
    for (long i = da; i >= db; --i) {
        uint64_t q = mulmod(rem[i], lead_inv, ell);
        if (q == 0) continue;
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = submod(rem[i - db + j], mulmod(q, b.coeff(j), ell), ell);
    }
    return {PolyF(ell, std::move(quo)), PolyF(ell, std::move(rem))};
}

PolyF gcd_poly(PolyF a, PolyF b) {
    while (!b.is_zero()) {
        PolyF r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyF powmod(const PolyF& base, const Int& exp, const PolyF& g) {
    if (exp < 0) throw Error("powmod: negative exponent");
    PolyF acc = PolyF::constant(base.modulus(), 1);
    PolyF b = divmod(base, g).second;
    size_t nbits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return acc;
    for (size_t i = nbits; i-- > 0;) {
        acc = divmod(acc * acc, g).second;
        if (mpz_tstbit(exp.get_mpz_t(), i)) acc = divmod(acc * b, g).second;
    }
    return acc;
}

std::optional<PolyF> reduce_mod(const PolyQ& f, uint64_t ell) {
    std::vector<uint64_t> out(f.degree() + 1, 0);
    Int L(static_cast<long>(ell));
    for (long i = 0; i <= f.degree(); ++i) {
        const Rational& c = f.coeff(i);
        Int den = c.get_den() % L;
        if (den == 0) return std::nullopt;
        Int num = c.get_num() % L;
        if (num < 0) num += L;
        uint64_t inv = invmod(den.get_ui(), ell);
        out[i] = mulmod(num.get_ui(), inv, ell);
    }
    return PolyF(ell, std::move(out));
}

std::vector<std::pair<long, long>> factor_degree_pattern(const PolyF& f) {
    if (f.is_zero()) throw NotSquarefree("zero polynomial");
    if (gcd_poly(f, f.derivative()).degree() > 0)
        throw NotSquarefree("polynomial not squarefree over F_ell");
    std::map<long, long> pattern;
    PolyF rest = f.monic();
    uint64_t ell = f.modulus();
    PolyF w = PolyF::x(ell);
    long d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            pattern[rest.degree()] += 1;
            break;
        }
        w = powmod(w, Int(static_cast<long>(ell)), rest);
        PolyF g = gcd_poly(w - PolyF::x(ell), rest);
        if (g.degree() > 0) {
            pattern[d] += g.degree() / d;
            rest = divmod(rest, g).first;
            w = divmod(w, rest).second;
        }
    }
    return {pattern.begin(), pattern.end()};
}

namespace {

PolyF random_poly_below(uint64_t ell, long deg_bound, std::mt19937_64& rng) {
    // Raw-draw modulo reduction keeps the stream implementation-independent.
    std::vector<uint64_t> c(deg_bound);
    for (auto& v : c) v = rng() % ell;
    return PolyF(ell, std::move(c));
}

// f = product of distinct irreducibles of degree d, deg f > d; find a proper factor.
PolyF split_once(const PolyF& f, long d, std::mt19937_64& rng) {
    uint64_t ell = f.modulus();
    Int q = 1;
    for (long i = 0; i < d; ++i) q *= static_cast<long>(ell);
    Int e = (q - 1) / 2;
    while (true) {
        PolyF a = random_poly_below(ell, f.degree(), rng);
        if (a.degree() < 1) continue;
        PolyF g = gcd_poly(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) return g;
        PolyF b = powmod(a, e, f) - PolyF::constant(ell, 1);
        g = gcd_poly(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) return g;
    }
}

}  // namespace

PolyF irreducible_factor(const PolyF& f, long d, std::mt19937_64& rng) {
    if (f.modulus() == 2) throw Error("irreducible_factor: ell = 2 unsupported");
    if (f.degree() < d || d < 1 || f.degree() % d != 0)
        throw DegreeMismatch("irreducible_factor: degree not a multiple of d");
    PolyF m = f.monic();
    // Verify the equal-degree hypothesis: x^(ell^d) = x mod f and no factor of
    // degree properly dividing d.
    uint64_t ell = f.modulus();
    PolyF w = PolyF::x(ell);
    std::vector<PolyF> frob{w};  // frob[i] = x^(ell^i) mod f
    for (long i = 1; i <= d; ++i) {
        w = powmod(w, Int(static_cast<long>(ell)), m);
        frob.push_back(w);
    }
    if (!(divmod(frob[d] - PolyF::x(ell), m).second.is_zero()))
        throw DegreeMismatch("irreducible_factor: a factor has degree not dividing d");
    for (long r = 1; r < d; ++r) {
        if (d % r != 0) continue;
        bool maximal = true;  // only prime quotients need checking, but cheap
        if (gcd_poly(frob[r] - PolyF::x(ell), m).degree() > 0) maximal = false;
        if (!maximal) throw DegreeMismatch("irreducible_factor: factor of smaller degree present");
    }
    PolyF cur = m;
    while (cur.degree() > d) {
        PolyF g = split_once(cur, d, rng);
        cur = (g.degree() % d == 0 && g.degree() >= d) ? g : divmod(cur, g).first;
        if (cur.degree() % d != 0) throw DegreeMismatch("irreducible_factor: uneven split");
    }
    return cur.monic();
}

bool is_square_in_extension(const PolyF& a, const PolyF& g) {
    if (g.modulus() == 2) throw Error("is_square_in_extension: ell = 2 unsupported");
    PolyF r = divmod(a, g).second;
    if (r.is_zero()) throw ZeroElement("is_square_in_extension: zero element");
    Int q = 1;
    for (long i = 0; i < g.degree(); ++i) q *= static_cast<long>(g.modulus());
    PolyF s = powmod(r, (q - 1) / 2, g);
    return s == PolyF::constant(g.modulus(), 1);
}

}  // namespace isoparity
