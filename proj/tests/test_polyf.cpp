#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "isoparity/polyf.hpp"

using namespace isoparity;

// Brute polynomial arithmetic over F_ell on plain vectors (low degree first),
// independent of PolyF, used as the factorization oracle.
namespace {

using VP = std::vector<long>;

VP vtrim(VP a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

VP vmul(const VP& a, const VP& b, long ell) {
    if (a.empty() || b.empty()) return {};
    VP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % ell;
    return vtrim(std::move(c));
}

// remainder of a by monic b
VP vmod(VP a, const VP& b, long ell) {
    a = vtrim(std::move(a));
    while (a.size() >= b.size() && !b.empty()) {
        long lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - lead * b[i]) % ell + ell) % ell;
        a = vtrim(std::move(a));
    }
    return a;
}

bool vdivides(const VP& b, const VP& a, long ell) { return vmod(a, b, ell).empty(); }

// all monic polynomials of exact degree d, lexicographic
std::vector<VP> monics(long ell, long d) {
    std::vector<VP> out;
    long total = 1;
    for (long i = 0; i < d; ++i) total *= ell;
    for (long code = 0; code < total; ++code) {
        VP p(static_cast<size_t>(d) + 1, 0);
        long c = code;
        for (long i = 0; i < d; ++i) {
            p[static_cast<size_t>(i)] = c % ell;
            c /= ell;
        }
        p[static_cast<size_t>(d)] = 1;
        out.push_back(std::move(p));
    }
    return out;
}

bool virreducible(const VP& f, long ell) {
    long d = static_cast<long>(f.size()) - 1;
    if (d <= 1) return d == 1;
    for (long e = 1; 2 * e <= d; ++e)
        for (const VP& g : monics(ell, e))
            if (vdivides(g, f, ell)) return false;
    return true;
}

// degrees with multiplicity of the irreducible factors, ascending
std::vector<std::pair<long, long>> vpattern(VP f, long ell) {
    std::vector<long> degs;
    long d = static_cast<long>(f.size()) - 1;
    for (long e = 1; e <= d && static_cast<long>(f.size()) > 1; ++e) {
        for (const VP& g : monics(ell, e)) {
            while (static_cast<long>(f.size()) > 1 && vdivides(g, f, ell)) {
                degs.push_back(e);
                // exact division: f = f / g via repeated subtraction of the quotient steps
                VP q(f.size() - g.size() + 1, 0);
                VP r = f;
                while (r.size() >= g.size() && !r.empty()) {
                    long lead = r.back();
                    size_t shift = r.size() - g.size();
                    q[shift] = lead;
                    for (size_t i = 0; i < g.size(); ++i)
                        r[shift + i] = ((r[shift + i] - lead * g[i]) % ell + ell) % ell;
                    r = vtrim(std::move(r));
                }
                f = vtrim(std::move(q));
            }
            if (static_cast<long>(f.size()) <= 1) break;
        }
    }
    std::sort(degs.begin(), degs.end());
    std::vector<std::pair<long, long>> out;
    for (long e : degs)
        if (!out.empty() && out.back().first == e)
            ++out.back().second;
        else
            out.push_back({e, 1});
    return out;
}

PolyF to_polyf(const VP& v, long ell) {
    std::vector<uint64_t> c;
    for (long x : v) c.push_back(static_cast<uint64_t>(x));
    return PolyF(static_cast<uint64_t>(ell), std::move(c));
}

VP vgcd(VP a, VP b, long ell) {
    while (!b.empty()) {
        // make b monic for vmod
        long inv = 1;
        long lead = b.back();
        for (long x = 1; x < ell; ++x)
            if ((x * lead) % ell == 1) inv = x;
        for (long& c : b) c = (c * inv) % ell;
        VP r = vmod(a, b, ell);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

VP vderiv(const VP& f, long ell) {
    VP d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back((static_cast<long>(i) * f[i]) % ell);
    return vtrim(std::move(d));
}

}  // namespace

TEST_CASE("PolyF arithmetic is integer arithmetic reduced") {
    std::mt19937_64 rng(3);
    for (long ell : {3L, 7L, 31L}) {
        for (int it = 0; it < 30; ++it) {
            VP a, b;
            for (int i = 0; i < 5; ++i) a.push_back(static_cast<long>(rng() % static_cast<unsigned long>(ell)));
            for (int i = 0; i < 4; ++i) b.push_back(static_cast<long>(rng() % static_cast<unsigned long>(ell)));
            a = vtrim(std::move(a));
            b = vtrim(std::move(b));
            PolyF pa = to_polyf(a, ell), pb = to_polyf(b, ell);
            CHECK(pa * pb == to_polyf(vmul(a, b, ell), ell));
            CHECK((pa + pb) - pb == pa);
        }
    }
}

TEST_CASE("divmod invariant over F_ell") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        long ell = 11;
        std::vector<uint64_t> ca, cb;
        for (int i = 0; i < 7; ++i) ca.push_back(rng() % 11);
        for (int i = 0; i < 3; ++i) cb.push_back(rng() % 11);
        PolyF a(11, ca), b(11, cb);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        (void)ell;
    }
}

TEST_CASE("powmod matches repeated multiplication and Frobenius fixes F_ell") {
    PolyF g(7, {3, 0, 1});  // x^2 + 3, irreducible mod 7 (-3 is a nonresidue)
    PolyF x = PolyF::x(7);
    PolyF acc = PolyF::constant(7, 1);
    for (long e = 0; e <= 12; ++e) {
        CHECK(powmod(x, Int(e), g) == divmod(acc, g).second);
        acc = acc * x;
    }
    // x^(ell^2) = x mod any irreducible quadratic
    CHECK(powmod(x, Int(49), g) == divmod(x, g).second);
}

TEST_CASE("factor_degree_pattern vs brute factorization") {
    std::mt19937_64 rng(9);
    int tested = 0;
    for (long ell : {3L, 5L, 7L, 13L}) {
        for (int it = 0; it < 40 && tested < 120; ++it) {
            VP f;
            long d = 2 + static_cast<long>(rng() % 5);
            for (long i = 0; i < d; ++i) f.push_back(static_cast<long>(rng() % static_cast<unsigned long>(ell)));
            f.push_back(1 + static_cast<long>(rng() % static_cast<unsigned long>(ell - 1)));
            // skip non-squarefree draws (the contract requires squarefree)
            if (vgcd(f, vderiv(f, ell), ell).size() > 1) continue;
            auto got = factor_degree_pattern(to_polyf(f, ell));
            auto want = vpattern(f, ell);
            CHECK(got == want);
            ++tested;
        }
    }
    CHECK(tested > 40);
    // non-squarefree input is rejected: (x+1)^2 mod 5
    CHECK_THROWS_AS(factor_degree_pattern(PolyF(5, {1, 2, 1})), NotSquarefree);
}

TEST_CASE("irreducible_factor splits equal-degree products") {
    std::mt19937_64 rng(42);
    for (auto [ell, d] : std::vector<std::pair<long, long>>{{5, 2}, {7, 2}, {3, 3}}) {
        std::vector<VP> irr;
        for (const VP& g : monics(ell, d))
            if (virreducible(g, ell)) irr.push_back(g);
        REQUIRE(irr.size() >= 3);
        VP prod = vmul(vmul(irr[0], irr[1], ell), irr[2], ell);
        PolyF f = to_polyf(prod, ell);
        PolyF fac = irreducible_factor(f, d, rng);
        CHECK(fac.degree() == d);
        CHECK(fac.leading() == 1);
        VP vfac;
        for (uint64_t c : fac.coeffs()) vfac.push_back(static_cast<long>(c));
        CHECK(vdivides(vfac, prod, ell));
        CHECK(virreducible(vfac, ell));
    }
    // wrong degree hint
    std::mt19937_64 rng2(1);
    CHECK_THROWS_AS(irreducible_factor(PolyF(5, {1, 1}), 2, rng2), DegreeMismatch);
}

TEST_CASE("is_square_in_extension vs exhaustive squaring") {
    // (ell, irreducible g) with ell^deg <= 81
    std::vector<std::pair<long, VP>> fields;
    for (auto [ell, d] : std::vector<std::pair<long, long>>{{3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
        for (const VP& g : monics(ell, d))
            if (virreducible(g, ell)) {
                fields.push_back({ell, g});
                break;
            }
    }
    for (const auto& [ell, g] : fields) {
        long d = static_cast<long>(g.size()) - 1;
        long total = 1;
        for (long i = 0; i < d; ++i) total *= ell;
        // collect all squares by brute enumeration
        std::set<VP> squares;
        for (long code = 1; code < total; ++code) {
            VP a;
            long c = code;
            for (long i = 0; i < d; ++i) {
                a.push_back(c % ell);
                c /= ell;
            }
            squares.insert(vmod(vmul(a, a, ell), g, ell));
        }
        PolyF pg = to_polyf(g, ell);
        for (long code = 1; code < total; ++code) {
            VP a;
            long c = code;
            for (long i = 0; i < d; ++i) {
                a.push_back(c % ell);
                c /= ell;
            }
            CHECK(is_square_in_extension(to_polyf(a, ell), pg) == (squares.count(vtrim(a)) > 0));
        }
        CHECK_THROWS_AS(is_square_in_extension(PolyF(static_cast<uint64_t>(ell)), pg), ZeroElement);
    }
}

TEST_CASE("reduce_mod handles denominators") {
    PolyQ f({rational(1, 2), rational(3, 1), rational(-1, 3)});
    auto g5 = reduce_mod(f, 5);
    REQUIRE(g5.has_value());
    // 1/2 = 3, 3 = 3, -1/3 = -2 = 3 mod 5
    CHECK(*g5 == PolyF(5, {3, 3, 3}));
    CHECK(!reduce_mod(f, 3));
    CHECK(!reduce_mod(f, 2));
    auto z = reduce_mod(PolyQ({rational(5), rational(10)}), 5);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
}
