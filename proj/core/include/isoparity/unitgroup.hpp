#ifndef ISOPARITY_UNITGROUP_HPP
#define ISOPARITY_UNITGROUP_HPP

#include <vector>

#include "isoparity/numbers.hpp"

namespace isoparity {

// CRT lift: x = r1 mod m1, x = r2 mod m2 (m1, m2 coprime), 0 <= x < m1*m2.
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

struct UnitGen {
    Int residue;
    Int order;
    Int prime;        // prime q of the component this generator spans
    Int prime_power;  // q^e, the component modulus; residue = 1 mod M/q^e
};

// Independent generators of (Z/M)^x with their orders; product of orders =
// phi(M). Built per prime power: primitive roots for odd q^a, {-1, 5} for 2^a.
std::vector<UnitGen> unit_group_generators(const Int& M);

// Smallest primitive root mod an odd prime p.
Int primitive_root(const Int& p);

Int euler_phi(const Int& M);

}  // namespace isoparity

#endif
