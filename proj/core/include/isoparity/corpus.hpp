#ifndef ISOPARITY_CORPUS_HPP
#define ISOPARITY_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "isoparity/polyq.hpp"
#include "isoparity/weierstrass.hpp"

namespace isoparity {

// One JSONL corpus line: a curve, an isogeny prime, the kernel polynomial
// (low-to-high coefficients, monic), and optional metadata.
struct CorpusEntry {
    std::string label;
    WeierstrassModel model;
    Int p;
    PolyQ kernel;
    std::optional<int> rank_parity;        // informational only
    std::string source;                    // free-form provenance note
    std::optional<Int> corrupt_place;      // test hook: flip one local sigma
    std::string dual_of;                   // label of the dual-direction entry
    long line = 0;                         // 1-based line in the source file
};

// Parses and shape-validates a JSON-lines corpus file. Kernel correctness
// (division-polynomial divisibility etc.) is checked by the pipeline, not
// here. ParseError/InvalidEntry carry the offending line number.
std::vector<CorpusEntry> load_corpus(const std::string& path);

}  // namespace isoparity

#endif
