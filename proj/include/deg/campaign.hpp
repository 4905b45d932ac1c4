#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "deg/io.hpp"
#include "deg/llt.hpp"
#include "deg/macdonald.hpp"

namespace deg {

// runs body(0..count-1) on a small thread pool; body must only write its own slot
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body);
int default_threads();

struct Outcome {
    bool ok = true;
    std::string reason;
    json info = json::object();
};

// single-instance checks; each is also what --replay runs
Outcome check_standard_axioms(const Partition& lambda);
Outcome check_skew_axioms(const SkewShape& shape);
// classification multiplicities against SYam reading-word counts
Outcome check_skew_lr(const SkewShape& shape);
Outcome check_route_agreement(const Graph& g);
Outcome check_fixture(const Graph& f);
Outcome check_tau_scope(const TauWord& tau, const std::vector<Word>& scope);
Outcome check_gap_tau(const TauWord& tau);
Outcome check_llt_tuple(const SkewTuple& nu);
Outcome check_mac_shape(const Partition& mu);
Outcome check_mac_conjugate(const Partition& mu);
Outcome check_sharpness();

// the words of S_n that are shifted content words of some tuple with diameter <= 3,
// grouped by tau; data counts distinct (tau, cell order) configurations
struct LltScope {
    std::map<TauWord, std::vector<Word>> words;
    long data = 0;
};
LltScope llt_scope(int n);

std::vector<SkewTuple> straight_tuples(int k, int max_size);
// straight 2-tuples up to size 7 and straight 3-tuples up to size 6 with diameter <= 3
std::vector<SkewTuple> llt_corpus(int max2 = 7, int max3 = 6);

std::string fixture_path();

struct CampaignOptions {
    std::string name;
    int n = 0;  // 0 picks the campaign default
    int threads = 0;
    bool force = false;
};

extern const std::vector<std::string> campaign_names;

class CampaignError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// deterministic report: {"campaign","n","ok","checked","failures":[witness...],"summary"}
json run_campaign(const CampaignOptions& opt);
// re-runs the check named by a failure witness
Outcome replay(const json& witness);

}  // namespace deg
