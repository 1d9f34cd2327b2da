// End-to-end acceptance runner: one pass/fail line per shipped guarantee.
// Usage: isoparity_acceptance <corpus.jsonl> <fixtures-dir>

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "isoparity/run.hpp"

using namespace isoparity;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Gate {
    bool all_ok = true;

    void report(int n, const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        all_ok = all_ok && ok;
    }
};

std::vector<Int> primes_up_to(long n) {
    std::vector<Int> out;
    for (Int q(2); q <= n; q = next_prime(q)) out.push_back(q);
    return out;
}

bool divides_any(const Int& q, const std::vector<Int>& set) {
    for (const Int& b : set)
        if (b == q) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: isoparity_acceptance <corpus.jsonl> <fixtures-dir>\n";
        return 2;
    }
    std::vector<CorpusEntry> corpus;
    try {
        corpus = load_corpus(argv[1]);
    } catch (const Error& e) {
        std::cerr << "cannot load corpus: " << e.what() << "\n";
        return 2;
    }
    Gate gate;
    RunConfig cfg;
    cfg.good_place_sample = 3;
    cfg.seed = 7;

    // Shared pipeline pass over the whole corpus, timed for the throughput
    // requirement attached to the per-place identity.
    auto t0 = Clock::now();
    std::vector<EntryAnalysis> analyses;
    std::string pipeline_error;
    try {
        for (const CorpusEntry& e : corpus) analyses.push_back(prepare_entry(e, cfg));
    } catch (const Error& e) {
        pipeline_error = e.what();
    }
    double elapsed = seconds_since(t0);

    // 1. w = symbol * sigma at every supported place of every entry.
    {
        bool ok = pipeline_error.empty();
        long places = 0;
        std::ostringstream why;
        if (!ok) why << pipeline_error;
        for (size_t i = 0; ok && i < analyses.size(); ++i) {
            for (const PlaceVerdict& v : analyses[i].report.places) {
                if (!v.w.has_value()) continue;  // outside the supported table
                ++places;
                if (!v.holds.value_or(false)) {
                    ok = false;
                    why << corpus[i].label << " at " << (v.infinite ? "inf" : v.place.get_str());
                    break;
                }
            }
        }
        if (ok && elapsed >= 120.0) {
            ok = false;
            why << "corpus pass took " << elapsed << "s";
        }
        std::ostringstream d;
        d << places << " places, " << elapsed << "s";
        gate.report(1, "per-place identity on the bundled corpus", ok,
                    ok ? d.str() : why.str());
    }

    // 2. The global root number equals the product of the local signs.
    {
        bool ok = pipeline_error.empty();
        std::string why = pipeline_error;
        for (size_t i = 0; ok && i < analyses.size(); ++i) {
            const GlobalReport& r = analyses[i].report;
            if (!r.w_global.has_value() || !r.global_holds.value_or(false)) {
                ok = false;
                why = corpus[i].label;
            }
        }
        gate.report(2, "global root number equals the product of isogeny signs", ok, why);
    }

    // 3. Character reconstruction: ramification support, product formula,
    //    the two routes to the symbol at p and at infinity, and the holdout.
    {
        bool ok = pipeline_error.empty();
        std::string why = pipeline_error;
        try {
        for (size_t i = 0; ok && i < analyses.size(); ++i) {
            const EntryAnalysis& a = analyses[i];
            const CharacterData& chi = a.study.chi;
            std::vector<Int> bad = bad_primes(a.iso);
            int product = 1;
            for (const CharacterComponent& c : chi.components) {
                if (c.q != chi.p && !divides_any(c.q, bad)) {
                    ok = false;
                    why = corpus[i].label + ": ramified at " + c.q.get_str();
                }
                product *= local_symbol(chi, c.q);
            }
            if (!ok) break;
            if (product * infinite_symbol(chi) != 1) {
                ok = false;
                why = corpus[i].label + ": symbol product != 1";
                break;
            }
            long e = static_cast<long>(ramification_index_at_p(chi).get_si());
            if (local_symbol(chi, chi.p) != jnt_symbol(chi.p, 1, e)) {
                ok = false;
                why = corpus[i].label + ": value at p disagrees with the parity formula";
                break;
            }
            bool real = kernel_is_real(a.iso.domain, a.iso.kernel);
            if (real != (infinite_symbol(chi) == 1)) {
                ok = false;
                why = corpus[i].label + ": real-kernel test disagrees with the symbol at infinity";
                break;
            }
            if (evaluate(chi, a.study.holdout.ell) != a.study.holdout.lambda) {
                ok = false;
                why = corpus[i].label + ": holdout Frobenius mismatch";
                break;
            }
        }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        gate.report(3, "kernel character: support, product formula, two-path checks, holdout",
                    ok, why);
    }

    // 4. Isogeny invariants: matching traces at good primes up to 100, the
    //    differential scaling valuation, its dual complement, and the
    //    discriminant ratio being a twelfth power.
    {
        bool ok = pipeline_error.empty();
        std::string why = pipeline_error;
        std::map<std::string, size_t> index;
        for (size_t i = 0; i < corpus.size(); ++i) index[corpus[i].label] = i;
        std::vector<Int> ells = primes_up_to(100);
        long traces = 0;
        try {
        for (size_t i = 0; ok && i < analyses.size(); ++i) {
            const EntryAnalysis& a = analyses[i];
            std::vector<Int> bad = bad_primes(a.iso);
            for (const Int& ell : ells) {
                if (divides_any(ell, bad)) continue;
                if (a_ell(a.iso.domain, ell) != a_ell(a.iso.codomain_min, ell)) {
                    ok = false;
                    why = corpus[i].label + ": trace mismatch at " + ell.get_str();
                    break;
                }
                ++traces;
            }
            if (!ok) break;
            long va = alpha_valuation_at_p(a.iso);
            if (va != 0 && va != 1) {
                ok = false;
                why = corpus[i].label + ": scaling valuation out of range";
                break;
            }
            if (!corpus[i].dual_of.empty() && index.count(corpus[i].dual_of)) {
                long vb = alpha_valuation_at_p(analyses[index[corpus[i].dual_of]].iso);
                if (va + vb != 1) {
                    ok = false;
                    why = corpus[i].label + ": dual valuations do not complement";
                    break;
                }
            }
            // disc(codomain) / disc(domain)^p must be a rational 12th power
            Rational dd = invariants(a.iso.domain).disc;
            Rational dc = invariants(a.iso.codomain_min).disc;
            if ((dd < 0) != (dc < 0)) {
                ok = false;
                why = corpus[i].label + ": discriminant ratio is negative";
                break;
            }
            for (const Int& q : bad) {
                long vq_d = *valuation(dd, q);
                long vq_c = *valuation(dc, q);
                long p = static_cast<long>(a.iso.kernel.p.get_si());
                if (((vq_c - p * vq_d) % 12 + 12) % 12 != 0) {
                    ok = false;
                    why = corpus[i].label + ": discriminant ratio valuation at " + q.get_str();
                    break;
                }
            }
        }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        std::ostringstream d;
        d << traces << " traces compared";
        gate.report(4, "isogeny invariants: traces, scaling valuation, discriminant ratio",
                    ok, ok ? d.str() : why);
    }

    // 5. Quadratic-twist coherence for a fixed set of twisting integers.
    {
        bool ok = pipeline_error.empty();
        std::string why = pipeline_error;
        const long ds[] = {-1, 2, -2, 3, -3, 5};
        try {
        for (size_t i = 0; ok && i < analyses.size(); ++i) {
            for (long d : ds) {
                TwistReport tr =
                    twist_report(analyses[i].iso, analyses[i].study.chi, Int(d),
                                 cfg.frobenius_bound);
                std::string tag = corpus[i].label + " by " + std::to_string(d);
                if (!tr.delta_matches) {
                    ok = false;
                    why = tag + ": discriminant law";
                    break;
                }
                if (!tr.character_matches) {
                    ok = false;
                    why = tag + ": character law";
                    break;
                }
                for (const PlaceVerdict& v : tr.twisted.places) {
                    if (v.holds.has_value() && !*v.holds) {
                        ok = false;
                        why = tag + ": identity fails at " +
                              (v.infinite ? "inf" : v.place.get_str());
                        break;
                    }
                }
                if (!ok) break;
                if (tr.twisted.global_holds.has_value() && !*tr.twisted.global_holds) {
                    ok = false;
                    why = tag + ": global identity";
                    break;
                }
            }
        }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        gate.report(5, "quadratic twists preserve every identity", ok, why);
    }

    // 6. The symbolic case grid sweeps clean within its time budget.
    {
        auto t1 = Clock::now();
        GridReport g = grid_verify(500);
        double dt = seconds_since(t1);
        bool ok = g.counterexamples.empty() && g.cases_checked > 0 && dt < 30.0;
        std::ostringstream d;
        if (ok)
            d << g.cases_checked << " cases, " << dt << "s";
        else if (!g.counterexamples.empty())
            d << g.counterexamples.front();
        else
            d << "took " << dt << "s";
        gate.report(6, "symbolic case grid up to 500 has no counterexample", ok, d.str());
    }

    // 7. A corrupted fixture is rejected loudly, naming entry and place.
    {
        bool ok = false;
        std::string why;
        try {
            std::vector<CorpusEntry> bad = load_corpus(std::string(argv[2]) + "/corrupt.jsonl");
            std::ostringstream os;
            int code = cmd_verify(bad, cfg, os);
            ok = code == 1 && os.str().find("counterexample") != std::string::npos &&
                 os.str().find("p5-b1") != std::string::npos &&
                 os.str().find("11") != std::string::npos;
            if (!ok) why = "exit " + std::to_string(code);
        } catch (const Error& e) {
            why = e.what();
        }
        gate.report(7, "corrupted fixture fails with the offending entry and place named", ok,
                    why);
    }

    // 8. At split multiplicative places away from p the Tamagawa numbers of
    //    the two curves differ by exactly one factor of p.
    {
        bool ok = pipeline_error.empty();
        std::string why = pipeline_error;
        long checked = 0;
        try {
        for (size_t i = 0; ok && i < analyses.size(); ++i) {
            const EntryAnalysis& a = analyses[i];
            for (const Int& q : bad_primes(a.iso)) {
                if (q == a.iso.kernel.p) continue;
                LocalData dom = tate_algorithm(a.iso.domain, q);
                if (dom.cls != ReductionClass::MultiplicativeSplit) continue;
                LocalData cod = tate_algorithm(a.iso.codomain_min, q);
                if (cod.cls != ReductionClass::MultiplicativeSplit) {
                    ok = false;
                    why = corpus[i].label + ": reduction type not shared at " + q.get_str();
                    break;
                }
                long vd = *valuation(dom.c, a.iso.kernel.p);
                long vc = *valuation(cod.c, a.iso.kernel.p);
                if (vc - vd != 1 && vc - vd != -1) {
                    ok = false;
                    why = corpus[i].label + ": Tamagawa ratio at " + q.get_str();
                    break;
                }
                ++checked;
            }
        }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        if (ok && checked == 0) {
            ok = false;
            why = "no split multiplicative places exercised";
        }
        std::ostringstream d;
        d << checked << " places";
        gate.report(8, "Tamagawa ratio is one factor of p at split places", ok,
                    ok ? d.str() : why);
    }

    return gate.all_ok ? 0 : 1;
}
