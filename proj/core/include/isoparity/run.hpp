#ifndef ISOPARITY_RUN_HPP
#define ISOPARITY_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "isoparity/cases.hpp"
#include "isoparity/corpus.hpp"
#include "isoparity/parity.hpp"

namespace isoparity {

struct RunConfig {
    long frobenius_bound = 10000;
    long good_place_sample = 5;
    unsigned long long seed = 0;
    std::string format = "table";  // table | json | csv
};

// Pipeline output for one corpus entry. The report already reflects the
// test_corrupt hook when the entry carries one.
struct EntryAnalysis {
    IsogenyData iso;
    CharacterStudy study;
    std::vector<Int> good_sample;
    GlobalReport report;
};

EntryAnalysis prepare_entry(const CorpusEntry& e, const RunConfig& cfg);

// Exit codes across commands: 0 all identities hold, 1 mathematical
// counterexample, 2 usage/input error, 3 unsupported root number
// encountered (1 wins over 3 when both occur).
int cmd_verify(const std::vector<CorpusEntry>& corpus, const RunConfig& cfg, std::ostream& os);
int cmd_local(const std::string& curve, const Int& ell, const RunConfig& cfg, std::ostream& os);
int cmd_character(const std::vector<CorpusEntry>& corpus, const std::string& label,
                  const RunConfig& cfg, std::ostream& os);
int cmd_twist(const std::vector<CorpusEntry>& corpus, const std::string& label, const Int& d,
              const RunConfig& cfg, std::ostream& os);
int cmd_case_grid(long p_max, const RunConfig& cfg, std::ostream& os);

}  // namespace isoparity

#endif
