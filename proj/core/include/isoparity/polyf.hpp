#ifndef ISOPARITY_POLYF_HPP
#define ISOPARITY_POLYF_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "isoparity/polyq.hpp"

namespace isoparity {

// Univariate polynomial over F_ell, ell an odd prime < 2^31; coefficients in
// [0, ell), low degree first, leading coefficient nonzero unless zero.
class PolyF {
   public:
    explicit PolyF(uint64_t ell) : ell_(ell) {}
    PolyF(uint64_t ell, std::vector<uint64_t> coeffs);

    static PolyF x(uint64_t ell);
    static PolyF constant(uint64_t ell, uint64_t c);

    uint64_t modulus() const { return ell_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint64_t coeff(long i) const;
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    PolyF operator-() const;
    friend PolyF operator+(const PolyF& a, const PolyF& b);
    friend PolyF operator-(const PolyF& a, const PolyF& b);
    friend PolyF operator*(const PolyF& a, const PolyF& b);
    friend bool operator==(const PolyF& a, const PolyF& b) {
        return a.ell_ == b.ell_ && a.c_ == b.c_;
    }

    PolyF derivative() const;
    PolyF monic() const;
    uint64_t eval(uint64_t x) const;

   private:
    uint64_t ell_;
    std::vector<uint64_t> c_;
    void prune();
};

std::pair<PolyF, PolyF> divmod(const PolyF& a, const PolyF& b);
PolyF gcd_poly(PolyF a, PolyF b);  // monic

// base^exp mod g
PolyF powmod(const PolyF& base, const Int& exp, const PolyF& g);

// Reduction mod ell; nullopt when a denominator is divisible by ell.
std::optional<PolyF> reduce_mod(const PolyQ& f, uint64_t ell);

// Irreducible-factor degrees with multiplicities, ascending by degree.
// Requires f squarefree (gcd(f, f') = 1), else NotSquarefree.
std::vector<std::pair<long, long>> factor_degree_pattern(const PolyF& f);

// One monic irreducible factor of degree d of f, where f is a nonempty product
// of distinct irreducibles all of degree d (DegreeMismatch otherwise).
// Randomized equal-degree splitting, deterministic for a fixed rng state.
PolyF irreducible_factor(const PolyF& f, long d, std::mt19937_64& rng);

// Euler criterion in F_{ell^d} = F_ell[x]/(g), g irreducible of degree d.
// ZeroElement when a = 0 mod g.
bool is_square_in_extension(const PolyF& a, const PolyF& g);

}  // namespace isoparity

#endif
