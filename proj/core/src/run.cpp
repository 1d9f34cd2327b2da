#include "isoparity/run.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "isoparity/character.hpp"
#include "isoparity/errors.hpp"
#include "isoparity/localdata.hpp"
#include "isoparity/minimal.hpp"
#include "isoparity/numbers.hpp"
#include "json.hpp"

namespace isoparity {

namespace {

using ordered_json = nlohmann::ordered_json;

// Deterministic per-entry stream: the sample must not depend on corpus order.
std::mt19937_64 entry_rng(unsigned long long seed, const std::string& label) {
    unsigned long long h = seed ^ 0xcbf29ce484222325ull;
    for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return std::mt19937_64(h);
}

std::vector<Int> pick_good_sample(const CorpusEntry& e, const IsogenyData& iso,
                                  const RunConfig& cfg) {
    std::vector<Int> bad = bad_primes(iso);
    std::vector<Int> pool;
    for (Int q(2); q < 300; q = next_prime(q)) {
        if (q == e.p) continue;
        if (std::find(bad.begin(), bad.end(), q) != bad.end()) continue;
        pool.push_back(q);
    }
    auto rng = entry_rng(cfg.seed, e.label);
    std::shuffle(pool.begin(), pool.end(), rng);
    long n = std::min<long>(cfg.good_place_sample, static_cast<long>(pool.size()));
    pool.resize(n < 0 ? 0 : n);
    std::sort(pool.begin(), pool.end());
    return pool;
}

// Flip the computed sigma at one finite place and rederive everything that
// depends on it. Used by corpus fixtures to prove the checker can fail.
void apply_corruption(GlobalReport& rep, const Int& place) {
    for (PlaceVerdict& v : rep.places) {
        if (v.infinite || v.place != place) continue;
        v.sigma = -v.sigma;
        if (v.w) v.holds = (*v.w == v.symbol * v.sigma);
        rep.sigma_product = -rep.sigma_product;
        if (rep.w_global) rep.global_holds = (*rep.w_global == rep.sigma_product);
        return;
    }
    throw Error("test_corrupt: place " + place.get_str() + " is not among the verified places");
}

std::string place_str(const PlaceVerdict& v) {
    return v.infinite ? std::string("inf") : v.place.get_str();
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

struct Row {
    std::string label;
    std::string place;
    std::optional<int> w;
    int symbol = 1;
    int sigma = 1;
    std::optional<bool> holds;
};

void emit_table(const std::vector<Row>& rows, std::ostream& os) {
    size_t lw = 5, pw = 5;
    for (const Row& r : rows) {
        lw = std::max(lw, r.label.size());
        pw = std::max(pw, r.place.size());
    }
    os << std::left << std::setw(static_cast<int>(lw)) << "label" << "  "
       << std::setw(static_cast<int>(pw)) << "place" << "  "
       << std::setw(4) << "w" << "  " << std::setw(6) << "symbol" << "  "
       << std::setw(5) << "sigma" << "  " << "holds" << "\n";
    for (const Row& r : rows) {
        os << std::left << std::setw(static_cast<int>(lw)) << r.label << "  "
           << std::setw(static_cast<int>(pw)) << r.place << "  "
           << std::setw(4) << (r.w ? sign_str(*r.w) : "n/a") << "  "
           << std::setw(6) << sign_str(r.symbol) << "  "
           << std::setw(5) << sign_str(r.sigma) << "  "
           << (r.holds ? (*r.holds ? "ok" : "FAIL") : "skip") << "\n";
    }
}

void emit_csv(const std::vector<Row>& rows, std::ostream& os) {
    os << "label,place,w,symbol,sigma,holds\n";
    for (const Row& r : rows) {
        os << r.label << ',' << r.place << ','
           << (r.w ? std::to_string(*r.w) : std::string()) << ','
           << r.symbol << ',' << r.sigma << ','
           << (r.holds ? (*r.holds ? "true" : "false") : std::string()) << "\n";
    }
}

ordered_json row_json(const Row& r) {
    ordered_json j;
    j["label"] = r.label;
    j["place"] = r.place;
    if (r.w) j["w"] = *r.w; else j["w"] = nullptr;
    j["symbol"] = r.symbol;
    j["sigma"] = r.sigma;
    if (r.holds) j["holds"] = *r.holds; else j["holds"] = nullptr;
    return j;
}

void rows_from_report(const std::string& label, const GlobalReport& rep, std::vector<Row>& out) {
    for (const PlaceVerdict& v : rep.places)
        out.push_back({label, place_str(v), v.w, v.symbol, v.sigma, v.holds});
    Row g;
    g.label = label;
    g.place = "global";
    g.w = rep.w_global;
    g.symbol = rep.symbol_product;
    g.sigma = rep.sigma_product;
    g.holds = rep.global_holds;
    out.push_back(g);
}

int exit_from_rows(const std::vector<Row>& rows) {
    bool fail = false, skip = false;
    for (const Row& r : rows) {
        if (r.holds && !*r.holds) fail = true;
        if (!r.holds) skip = true;
    }
    if (fail) return 1;
    return skip ? 3 : 0;
}

const Row* first_failure(const std::vector<Row>& rows) {
    for (const Row& r : rows)
        if (r.holds && !*r.holds) return &r;
    return nullptr;
}

}  // namespace

EntryAnalysis prepare_entry(const CorpusEntry& e, const RunConfig& cfg) {
    IsogenyData iso = build_isogeny(e.model, KernelPolynomial{e.p, e.kernel});
    std::vector<Int> bad = bad_primes(iso);
    CharacterStudy st = study_character(iso.domain, iso.kernel, bad, cfg.frobenius_bound);
    std::vector<Int> sample = pick_good_sample(e, iso, cfg);
    GlobalReport rep = verify_global_report(iso, st.chi, sample);
    if (e.corrupt_place) apply_corruption(rep, *e.corrupt_place);
    return EntryAnalysis{std::move(iso), std::move(st), std::move(sample), std::move(rep)};
}

int cmd_verify(const std::vector<CorpusEntry>& corpus, const RunConfig& cfg, std::ostream& os) {
    std::vector<Row> rows;
    for (const CorpusEntry& e : corpus) {
        EntryAnalysis a;
        try {
            a = prepare_entry(e, cfg);
        } catch (const Error& err) {
            os << "error: entry " << e.label << ": " << err.what() << "\n";
            return 2;
        }
        rows_from_report(e.label, a.report, rows);
    }
    int code = exit_from_rows(rows);
    const Row* ff = first_failure(rows);
    if (cfg.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const Row& r : rows) j["rows"].push_back(row_json(r));
        j["summary"]["entries"] = corpus.size();
        j["summary"]["exit"] = code;
        if (ff) {
            j["summary"]["first_failure"]["label"] = ff->label;
            j["summary"]["first_failure"]["place"] = ff->place;
        } else {
            j["summary"]["first_failure"] = nullptr;
        }
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_csv(rows, os);
    } else {
        emit_table(rows, os);
        if (ff)
            os << "counterexample: entry " << ff->label << " at place " << ff->place << "\n";
        else if (code == 3)
            os << "incomplete: some places lack a computable root number\n";
        else
            os << "all identities hold (" << corpus.size() << " entries)\n";
    }
    return code;
}

int cmd_local(const std::string& curve, const Int& ell, const RunConfig& cfg, std::ostream& os) {
    std::vector<Rational> a;
    std::stringstream ss(curve);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) { a.clear(); break; }
        std::optional<Rational> r = parse_rational(tok.substr(b, e - b + 1));
        if (!r) { a.clear(); break; }
        a.push_back(*r);
    }
    if (a.size() != 5) {
        os << "error: --curve expects five comma-separated rationals a1,a2,a3,a4,a6\n";
        return 2;
    }
    if (ell < 2 || !is_prime(ell)) {
        os << "error: --prime expects a rational prime\n";
        return 2;
    }
    WeierstrassModel m{a[0], a[1], a[2], a[3], a[4]};
    LocalData d;
    try {
        d = tate_algorithm(global_minimal_model(m).first, ell);
    } catch (const Error& err) {
        os << "error: " << err.what() << "\n";
        return 2;
    }
    std::optional<int> w = root_number(d, ell);
    if (cfg.format == "json") {
        ordered_json j;
        j["ell"] = ell.get_str();
        j["kodaira"] = d.kodaira.to_string();
        j["v_disc"] = d.vdisc_min;
        j["tamagawa"] = d.c.get_str();
        j["class"] = to_string(d.cls);
        if (w) j["w"] = *w; else j["w"] = nullptr;
        os << j.dump(2) << "\n";
    } else {
        os << "ell       " << ell.get_str() << "\n"
           << "kodaira   " << d.kodaira.to_string() << "\n"
           << "v_disc    " << d.vdisc_min << "\n"
           << "tamagawa  " << d.c.get_str() << "\n"
           << "class     " << to_string(d.cls) << "\n"
           << "w         " << (w ? sign_str(*w) : "n/a") << "\n";
    }
    return 0;
}

int cmd_character(const std::vector<CorpusEntry>& corpus, const std::string& label,
                  const RunConfig& cfg, std::ostream& os) {
    const CorpusEntry* e = nullptr;
    for (const CorpusEntry& c : corpus)
        if (c.label == label) e = &c;
    if (!e) {
        os << "error: no entry labeled " << label << "\n";
        return 2;
    }
    IsogenyData iso;
    CharacterStudy st;
    try {
        iso = build_isogeny(e->model, KernelPolynomial{e->p, e->kernel});
        st = study_character(iso.domain, iso.kernel, bad_primes(iso), cfg.frobenius_bound);
    } catch (const Error& err) {
        os << "error: entry " << label << ": " << err.what() << "\n";
        return 2;
    }
    const CharacterData& chi = st.chi;
    bool real = kernel_is_real(iso.domain, iso.kernel);

    // Independent consistency probe: the reconstruction never saw the holdout
    // prime, so a mismatch here is a genuine counterexample.
    bool holdout_ok = evaluate(chi, st.holdout.ell) == st.holdout.lambda;

    int inf = infinite_symbol(chi);
    if (cfg.format == "json") {
        ordered_json j;
        j["label"] = e->label;
        j["p"] = chi.p.get_str();
        j["modulus"] = chi.modulus.get_str();
        j["order"] = character_order(chi).get_str();
        j["ramification_at_p"] = ramification_index_at_p(chi).get_str();
        j["infinite_symbol"] = inf;
        j["kernel_real"] = real;
        j["components"] = ordered_json::array();
        for (const CharacterComponent& c : chi.components) {
            ordered_json cj;
            cj["q"] = c.q.get_str();
            cj["q_pow"] = c.q_pow.get_str();
            cj["local_symbol"] = local_symbol(chi, c.q);
            ordered_json ge = ordered_json::array();
            for (size_t i = 0; i < c.gens.size(); ++i) {
                ordered_json g;
                g["gen"] = c.gens[i].residue.get_str();
                g["exp"] = c.exps[i].get_str();
                ge.push_back(g);
            }
            cj["gens"] = ge;
            j["components"].push_back(cj);
        }
        j["samples"] = ordered_json::array();
        for (const FrobeniusSample& s : st.samples) {
            ordered_json sj;
            sj["ell"] = s.ell.get_str();
            sj["lambda"] = s.lambda.get_str();
            j["samples"].push_back(sj);
        }
        j["holdout"]["ell"] = st.holdout.ell.get_str();
        j["holdout"]["lambda"] = st.holdout.lambda.get_str();
        j["holdout"]["matches"] = holdout_ok;
        os << j.dump(2) << "\n";
    } else {
        os << "label              " << e->label << "\n"
           << "p                  " << chi.p.get_str() << "\n"
           << "modulus            " << chi.modulus.get_str() << "\n"
           << "order              " << character_order(chi).get_str() << "\n"
           << "ramification at p  " << ramification_index_at_p(chi).get_str() << "\n"
           << "infinite symbol    " << sign_str(inf) << "\n"
           << "kernel real        " << (real ? "yes" : "no") << "\n";
        for (const CharacterComponent& c : chi.components) {
            os << "component q=" << c.q.get_str() << " mod " << c.q_pow.get_str()
               << " symbol " << sign_str(local_symbol(chi, c.q)) << ":";
            for (size_t i = 0; i < c.gens.size(); ++i)
                os << " (" << c.gens[i].residue.get_str() << " -> g^" << c.exps[i].get_str() << ")";
            os << "\n";
        }
        os << "samples           ";
        for (const FrobeniusSample& s : st.samples)
            os << " " << s.ell.get_str() << ":" << s.lambda.get_str();
        os << "\n"
           << "holdout            " << st.holdout.ell.get_str() << ":"
           << st.holdout.lambda.get_str() << (holdout_ok ? " (matches)" : " (MISMATCH)") << "\n";
    }
    return holdout_ok ? 0 : 1;
}

int cmd_twist(const std::vector<CorpusEntry>& corpus, const std::string& label, const Int& d,
              const RunConfig& cfg, std::ostream& os) {
    const CorpusEntry* e = nullptr;
    for (const CorpusEntry& c : corpus)
        if (c.label == label) e = &c;
    if (!e) {
        os << "error: no entry labeled " << label << "\n";
        return 2;
    }
    if (d == 0 || mpz_perfect_square_p(d.get_mpz_t())) {
        os << "error: twist parameter must be a nonsquare nonzero integer\n";
        return 2;
    }
    TwistReport tr;
    try {
        IsogenyData iso = build_isogeny(e->model, KernelPolynomial{e->p, e->kernel});
        CharacterStudy st = study_character(iso.domain, iso.kernel, bad_primes(iso),
                                            cfg.frobenius_bound);
        std::vector<Int> sample = pick_good_sample(*e, iso, cfg);
        tr = twist_report(iso, st.chi, d, cfg.frobenius_bound, sample);
    } catch (const Error& err) {
        os << "error: entry " << label << ": " << err.what() << "\n";
        return 2;
    }
    std::vector<Row> rows;
    rows_from_report(label + "*" + d.get_str(), tr.twisted, rows);
    int code = exit_from_rows(rows);
    if (!tr.delta_matches || !tr.character_matches) code = 1;
    if (cfg.format == "json") {
        ordered_json j;
        j["label"] = label;
        j["d"] = d.get_str();
        j["discriminant_law"] = tr.delta_matches;
        j["character_law"] = tr.character_matches;
        j["rows"] = ordered_json::array();
        for (const Row& r : rows) j["rows"].push_back(row_json(r));
        j["exit"] = code;
        os << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        emit_csv(rows, os);
    } else {
        os << "twist of " << label << " by " << d.get_str() << "\n"
           << "discriminant law   " << (tr.delta_matches ? "ok" : "FAIL") << "\n"
           << "character law      " << (tr.character_matches ? "ok" : "FAIL") << "\n";
        emit_table(rows, os);
        const Row* ff = first_failure(rows);
        if (ff) os << "counterexample: entry " << ff->label << " at place " << ff->place << "\n";
    }
    return code;
}

int cmd_case_grid(long p_max, const RunConfig& cfg, std::ostream& os) {
    if (p_max < 5) {
        os << "error: --pmax must be at least 5\n";
        return 2;
    }
    GridReport g = grid_verify(p_max);
    if (cfg.format == "json") {
        ordered_json j;
        j["cases_checked"] = g.cases_checked;
        j["counterexamples"] = g.counterexamples;
        os << j.dump(2) << "\n";
    } else {
        os << g.cases_checked << " cases checked, " << g.counterexamples.size()
           << " counterexamples\n";
        for (const std::string& c : g.counterexamples) os << "  " << c << "\n";
    }
    return g.counterexamples.empty() ? 0 : 1;
}

}  // namespace isoparity
