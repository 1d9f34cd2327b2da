#include "isoparity/sturm.hpp"

#include <algorithm>

#include "isoparity/errors.hpp"

namespace isoparity {

namespace {

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<PolyQ> sturm_chain(const PolyQ& f) {
    std::vector<PolyQ> chain{f, f.derivative()};
    while (!chain.back().is_zero()) {
        PolyQ r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

long variations_at(const std::vector<PolyQ>& chain, const Rational& x) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// All real roots lie strictly inside (-B, B).
Rational cauchy_bound(const PolyQ& f) {
    Rational m(0);
    Rational lead = abs(f.leading());
    for (long i = 0; i < f.degree(); ++i) {
        Rational a = abs(f.coeff(i)) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

void require_squarefree(const PolyQ& f) {
    if (f.is_zero()) throw NotSquarefree("zero polynomial");
    if (gcd_poly(f, f.derivative()).degree() > 0)
        throw NotSquarefree("polynomial has a repeated root");
}

struct Isolator {
    const PolyQ& f;
    const std::vector<PolyQ>& chain;
    std::vector<RootInterval> out;

    // Roots of f in (a, b]; f(a), f(b) != 0.
    void descend(const Rational& a, const Rational& b, long va, long vb) {
        long count = va - vb;
        if (count == 0) return;
        if (count == 1) {
            out.emplace_back(a, b);
            return;
        }
        Rational mid = (a + b) / 2;
        if (f.eval(mid) != 0) {
            long vm = variations_at(chain, mid);
            descend(a, mid, va, vm);
            descend(mid, b, vm, vb);
            return;
        }
        // Exact rational root at mid; carve out a bracket around it.
        Rational w = (b - a) / 4;
        while (f.eval(mid - w) == 0 || f.eval(mid + w) == 0 ||
               variations_at(chain, mid - w) - variations_at(chain, mid + w) != 1)
            w /= 2;
        long vl = variations_at(chain, mid - w);
        long vr = variations_at(chain, mid + w);
        descend(a, mid - w, va, vl);
        out.emplace_back(mid, mid);
        descend(mid + w, b, vr, vb);
    }
};

}  // namespace

long real_root_count(const PolyQ& f) {
    require_squarefree(f);
    if (f.degree() == 0) return 0;
    auto chain = sturm_chain(f);
    Rational b = cauchy_bound(f);
    return variations_at(chain, -b) - variations_at(chain, b);
}

std::vector<RootInterval> real_root_isolate(const PolyQ& f) {
    require_squarefree(f);
    if (f.degree() == 0) return {};
    auto chain = sturm_chain(f);
    Rational b = cauchy_bound(f);
    Isolator iso{f, chain, {}};
    iso.descend(-b, b, variations_at(chain, -b), variations_at(chain, b));
    return iso.out;
}

int sign_at_root(const PolyQ& g, const PolyQ& f, RootInterval iv) {
    if (g.is_zero()) throw ZeroElement("sign_at_root: zero polynomial");
    if (iv.first == iv.second) {
        int s = sgn(g.eval(iv.first));
        if (s == 0) throw ZeroElement("sign_at_root: g vanishes at the root");
        return s;
    }
    PolyQ common = gcd_poly(f, g);
    auto fchain = sturm_chain(f);
    if (common.degree() > 0) {
        auto cchain = sturm_chain(common);
        if (variations_at(cchain, iv.first) - variations_at(cchain, iv.second) > 0)
            throw ZeroElement("sign_at_root: g vanishes at the root");
    }
    PolyQ gsq = divide_exact(g, gcd_poly(g, g.derivative()));  // radical: same sign pattern roots
    auto gchain = sturm_chain(gsq);
    Rational a = iv.first, b = iv.second;
    while (true) {
        if (sgn(g.eval(a)) != 0 &&
            variations_at(gchain, a) - variations_at(gchain, b) == 0)
            return sgn(g.eval(a));
        Rational mid = (a + b) / 2;
        if (f.eval(mid) == 0) {
            int s = sgn(g.eval(mid));
            if (s == 0) throw ZeroElement("sign_at_root: g vanishes at the root");
            return s;
        }
        // Keep the half holding f's root.
        if (variations_at(fchain, a) - variations_at(fchain, mid) == 1)
            b = mid;
        else
            a = mid;
    }
}

}  // namespace isoparity
