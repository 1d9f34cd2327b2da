#include "isoparity/unitgroup.hpp"

namespace isoparity {

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
        throw Error("crt_pair: moduli not coprime");
    Int m = m1 * m2;
    Int x = r1 + m1 * (((r2 - r1) * inv) % m2);
    x %= m;
    if (x < 0) x += m;
    return x;
}

Int euler_phi(const Int& M) {
    Int phi = 1;
    for (const auto& [q, e] : factorize(M)) {
        Int qe = 1;
        for (long i = 0; i < e - 1; ++i) qe *= q;
        phi *= qe * (q - 1);
    }
    return phi;
}

Int primitive_root(const Int& p) {
    if (p == 2) return Int(1);
    Int order = p - 1;
    auto fac = factorize(order);
    for (Int g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac)
            if (modpow(g, order / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("primitive_root: none found (p not prime?)");
}

std::vector<UnitGen> unit_group_generators(const Int& M) {
    if (M < 1) throw Error("unit_group_generators: M < 1");
    std::vector<UnitGen> gens;
    if (M <= 2) return gens;  // trivial group
    for (const auto& [q, e] : factorize(M)) {
        Int qe = 1;
        for (long i = 0; i < e; ++i) qe *= q;
        Int rest = M / qe;
        auto push = [&](const Int& g, const Int& order) {
            gens.push_back({crt_pair(g, qe, Int(1), rest), order, q, qe});
        };
        if (q == 2) {
            if (e == 1) continue;
            if (e == 2) {
                push(Int(3), Int(2));
            } else {
                Int half = qe / 4;  // 2^(e-2)
                push(qe - 1, Int(2));
                push(Int(5), half);
            }
            continue;
        }
        Int g = primitive_root(q);
        Int phi = (q - 1) * (qe / q);
        // Lift to a primitive root mod q^e.
        if (e > 1 && modpow(g, q - 1, q * q) == 1) g += q;
        push(g, phi);
    }
    return gens;
}

}  // namespace isoparity
