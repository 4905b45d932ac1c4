#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "deg/graph.hpp"

namespace deg {

struct AxiomReport {
    std::string axiom;
    bool ok = true;
    std::string detail;
    std::vector<int> vertices;  // witness
    int color = 0;
};

// Allowed components on 2, 3 and 4 consecutive colors, taken from the standard
// graphs of size 4, 5, 6 and stored as unsigned canonical codes.
class LocalCatalog {
public:
    static const LocalCatalog& get();
    bool contains(int colors, const std::vector<int>& code) const;
    const std::set<std::vector<int>>& types(int colors) const { return types_.at(colors); }

private:
    LocalCatalog();
    std::vector<std::set<std::vector<int>>> types_;
};

// cached standard graph; safe to call from several threads
const Graph& standard_graph(const Partition& lambda);

AxiomReport check_axiom1(const Graph& g);
AxiomReport check_axiom2(const Graph& g);
AxiomReport check_axiom3(const Graph& g);
// the reformulation in terms of signatures alone
AxiomReport check_axiom3_signatures(const Graph& g);
AxiomReport check_axiom4(const Graph& g);
AxiomReport check_axiom5(const Graph& g);
AxiomReport check_axiom6(const Graph& g);
AxiomReport check_axiom4plus(const Graph& g);

struct FDetection {
    bool found = false;
    int color = 0;              // top color of the window
    int copies = 0;             // number of copies of each piece type
    std::vector<int> vertices;  // the offending component
};
// requires Axioms 1-5; throws std::invalid_argument otherwise
FDetection detect_f_family(const Graph& g);

struct DegReport {
    std::vector<AxiomReport> axioms;  // 1,2,3,4,5,6,4+
    bool route_a = false;             // 1-6
    bool route_b = false;             // 1,2,3,4+,5
};
DegReport deg_report(const Graph& g);

class RouteMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};
// throws RouteMismatch if the two axiom systems disagree
bool is_deg(const Graph& g);

class NotClassified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
// connected graph of type (n,n) -> the unique lambda with C isomorphic to G_lambda
Partition classify_component(const Graph& c, bool cross_check_rsk = false);

}  // namespace deg
