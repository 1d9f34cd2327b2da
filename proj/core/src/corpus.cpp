#include "isoparity/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "isoparity/errors.hpp"
#include "isoparity/numbers.hpp"
#include "json.hpp"

namespace isoparity {

namespace {

using nlohmann::json;

Rational parse_entry_rational(const json& v, long line, const std::string& field) {
    if (v.is_number_integer()) return Rational(Int(v.get<int64_t>()));
    if (v.is_string()) {
        auto r = parse_rational(v.get<std::string>());
        if (r) return *r;
    }
    throw InvalidEntry(static_cast<int>(line), field + ": expected an integer or \"n/d\" string");
}

Int parse_entry_int(const json& v, long line, const std::string& field) {
    Rational r = parse_entry_rational(v, line, field);
    if (r.get_den() != 1) throw InvalidEntry(static_cast<int>(line), field + ": expected an integer");
    return r.get_num();
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path);
    std::vector<CorpusEntry> out;
    std::string raw;
    long lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(raw, nullptr, false);
        if (j.is_discarded()) throw ParseError(static_cast<int>(lineno), "malformed JSON");
        if (!j.is_object()) throw InvalidEntry(static_cast<int>(lineno), "expected a JSON object");
        for (const auto& item : j.items())
            if (item.key() != "label" && item.key() != "a" && item.key() != "p" &&
                item.key() != "kernel" && item.key() != "meta")
                throw InvalidEntry(static_cast<int>(lineno), "unknown field \"" + item.key() + "\"");

        CorpusEntry e;
        e.line = lineno;
        if (!j.contains("label") || !j["label"].is_string() ||
            j["label"].get<std::string>().empty())
            throw InvalidEntry(static_cast<int>(lineno), "missing or empty label");
        e.label = j["label"].get<std::string>();
        for (const auto& prev : out)
            if (prev.label == e.label)
                throw InvalidEntry(static_cast<int>(lineno), "duplicate label \"" + e.label + "\"");

        if (!j.contains("a") || !j["a"].is_array() || j["a"].size() != 5)
            throw InvalidEntry(static_cast<int>(lineno), "a: expected five coefficients");
        Rational a[5];
        for (size_t i = 0; i < 5; ++i) a[i] = parse_entry_rational(j["a"][i], lineno, "a");
        e.model = WeierstrassModel{a[0], a[1], a[2], a[3], a[4]};

        if (!j.contains("p")) throw InvalidEntry(static_cast<int>(lineno), "missing p");
        e.p = parse_entry_int(j["p"], lineno, "p");
        if (e.p < 5 || !is_prime(e.p))
            throw InvalidEntry(static_cast<int>(lineno), "p must be a prime >= 5");

        if (!j.contains("kernel") || !j["kernel"].is_array())
            throw InvalidEntry(static_cast<int>(lineno), "missing kernel");
        size_t want = static_cast<size_t>(Int((e.p - 1) / 2).get_si()) + 1;
        if (j["kernel"].size() != want)
            throw InvalidEntry(static_cast<int>(lineno), "kernel: wrong degree");
        std::vector<Rational> kc;
        for (const auto& c : j["kernel"]) kc.push_back(parse_entry_rational(c, lineno, "kernel"));
        if (kc.back() != 1) throw InvalidEntry(static_cast<int>(lineno), "kernel: not monic");
        e.kernel = PolyQ(kc);

        if (j.contains("meta")) {
            const json& m = j["meta"];
            if (!m.is_object()) throw InvalidEntry(static_cast<int>(lineno), "meta: expected an object");
            if (m.contains("rank_parity")) {
                Int rp = parse_entry_int(m["rank_parity"], lineno, "meta.rank_parity");
                if (rp != 0 && rp != 1)
                    throw InvalidEntry(static_cast<int>(lineno), "meta.rank_parity: expected 0 or 1");
                e.rank_parity = static_cast<int>(rp.get_si());
            }
            if (m.contains("source") && m["source"].is_string())
                e.source = m["source"].get<std::string>();
            if (m.contains("dual_of") && m["dual_of"].is_string())
                e.dual_of = m["dual_of"].get<std::string>();
            if (m.contains("test_corrupt")) {
                const json& tc = m["test_corrupt"];
                if (!tc.is_object() || !tc.contains("place"))
                    throw InvalidEntry(static_cast<int>(lineno),
                                       "meta.test_corrupt: expected {\"place\": <prime>}");
                e.corrupt_place = parse_entry_int(tc["place"], lineno, "meta.test_corrupt.place");
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace isoparity
