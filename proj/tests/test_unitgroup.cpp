#include <numeric>
#include <set>

#include "doctest.h"
#include "isoparity/unitgroup.hpp"

using namespace isoparity;

namespace {

long phi_brute(long m) {
    long c = 0;
    for (long x = 1; x <= m; ++x)
        if (std::gcd(x, m) == 1) ++c;
    return c;
}

long order_brute(long g, long m) {
    long x = g % m, o = 1;
    while (x != 1 % m) {
        x = (x * g) % m;
        ++o;
    }
    return o;
}

}  // namespace

TEST_CASE("crt_pair") {
    for (long m1 : {3L, 4L, 5L, 7L})
        for (long m2 : {8L, 9L, 11L}) {
            if (std::gcd(m1, m2) != 1) continue;
            for (long r1 = 0; r1 < m1; ++r1)
                for (long r2 = 0; r2 < m2; ++r2) {
                    Int x = crt_pair(Int(r1), Int(m1), Int(r2), Int(m2));
                    CHECK(x >= 0);
                    CHECK(x < m1 * m2);
                    CHECK(x % m1 == r1);
                    CHECK(x % m2 == r2);
                }
        }
}

TEST_CASE("euler_phi vs brute") {
    for (long m = 1; m <= 150; ++m) CHECK(euler_phi(Int(m)) == phi_brute(m));
    CHECK(euler_phi(Int(2 * 3 * 5 * 7 * 11)) == 1 * 2 * 4 * 6 * 10);
}

TEST_CASE("primitive_root has full order") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 101L, 191L}) {
        Int g = primitive_root(Int(p));
        CHECK(g > 0);
        CHECK(g < p);
        CHECK(order_brute(g.get_si(), p) == p - 1);
        // smallest: nothing below has full order
        for (long h = 2; h < g.get_si(); ++h) CHECK(order_brute(h, p) != p - 1);
    }
}

TEST_CASE("unit_group_generators generate all of (Z/M)^x with claimed orders") {
    for (long M = 1; M <= 130; ++M) {
        auto gens = unit_group_generators(Int(M));
        if (M == 1) {
            CHECK(gens.empty());
            continue;
        }
        Int prod = 1;
        for (const auto& g : gens) {
            CHECK(std::gcd(g.residue.get_si() % M, M) == 1);
            CHECK(order_brute(g.residue.get_si() % M, M) == g.order.get_si());
            prod *= g.order;
            // component support: residue = 1 mod M / q^e
            Int rest = Int(M) / g.prime_power;
            CHECK(Int(M) % g.prime_power == 0);
            if (rest > 1) CHECK(g.residue % rest == 1);
        }
        CHECK(prod == phi_brute(M));
        // closure of the generated subgroup is everything
        std::set<long> seen = {1 % M};
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<long> next = seen;
            for (long x : seen)
                for (const auto& g : gens) {
                    long y = (x * (g.residue.get_si() % M)) % M;
                    if (next.insert(y).second) grew = true;
                }
            seen = std::move(next);
        }
        CHECK(static_cast<long>(seen.size()) == phi_brute(M));
    }
}

TEST_CASE("two-power structure") {
    // (Z/2)^x trivial, (Z/4)^x = {-1}, (Z/2^a)^x = {-1} x <5> for a >= 3
    CHECK(unit_group_generators(Int(2)).empty());
    auto g4 = unit_group_generators(Int(4));
    REQUIRE(g4.size() == 1);
    CHECK(g4[0].order == 2);
    auto g16 = unit_group_generators(Int(16));
    Int prod = 1;
    for (const auto& g : g16) prod *= g.order;
    CHECK(prod == 8);
}
