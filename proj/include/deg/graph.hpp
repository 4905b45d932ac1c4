#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deg/shapes.hpp"
#include "deg/words.hpp"

namespace deg {

struct Edge {
    int color = 0;
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Vertices are dense ints. Colors run over m+1..n-1, signatures have length N-1.
// An unsigned graph (plain edge colored graph) keeps empty signature strings.
class Graph {
public:
    int m = 1;
    int n = 1;
    int N = 1;
    bool is_signed = true;
    std::vector<std::string> sig;
    std::vector<std::string> label;
    std::vector<Word> words;  // optional payload, same indexing as sig

    int size() const { return static_cast<int>(sig.size()); }
    int add_vertex(std::string s, std::string l = {});
    void add_edge(int color, int u, int v);
    // sorts and dedupes edges, rebuilds adjacency; call after the last add_edge
    void finalize();

    const std::vector<Edge>& edges() const { return edges_; }
    // (color, neighbor), sorted
    const std::vector<std::pair<int, int>>& adj(int v) const { return adj_[v]; }
    // first neighbor of v along color c, or -1
    int partner(int v, int c) const;
    int degree(int v, int c) const;
    bool has_edge(int c, int u, int v) const;
    int min_color() const { return m + 1; }
    int max_color() const { return n - 1; }
    // sigma_i in the 1-based convention: +1 or -1
    int sigma(int v, int i) const { return sig[v][i - 1] == '+' ? 1 : -1; }
    bool sigma_defined(int i) const { return i >= 1 && i <= N - 1; }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

Graph graph_from_words(const std::vector<Word>& words, const std::function<Word(const Word&, int)>& move);
Graph build_standard_deg(const Partition& lambda);
Graph build_skew_deg(const SkewShape& shape);
Graph build_gn(int n);
Graph build_gn_tau(const TauWord& tau);

// (a,b)-restriction: drops colors >= a, keeps the first b-1 signature entries
Graph restrict_graph(const Graph& g, int a, int b);
Graph upward_restrict(const Graph& g, int h);
Graph downward_restrict(const Graph& g);
Graph color_reverse(const Graph& g);
// keeps only colors lo..hi; vertices keep their ids
Graph color_window(const Graph& g, int lo, int hi);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

// vertex sets of connected components using colors lo..hi, ordered by least vertex
std::vector<std::vector<int>> component_sets(const Graph& g, int lo, int hi);
std::vector<std::vector<int>> component_sets(const Graph& g);
std::vector<Graph> components(const Graph& g);

// Canonical code of a connected component in which every color is a matching.
// Colors are read relative to base. Returns nullopt if some color is not a matching.
std::optional<std::vector<int>> matching_canon(const Graph& g, const std::vector<int>& verts, int lo, int hi, int base,
                                               bool with_sig);

struct IsoOptions {
    bool allow_color_shift = false;
    bool compare_signatures = true;
};
using Morphism = std::vector<int>;
// witness maps vertices of g to vertices of h
std::optional<Morphism> isomorphic(const Graph& g, const Graph& h, IsoOptions opt = {});

bool check_morphism(const Morphism& phi, const Graph& g, const Graph& h, std::string* why = nullptr);
// every edge class of h at an image vertex is hit exactly once: a covering map
bool is_covering(const Morphism& phi, const Graph& g, const Graph& h);

struct PMorphism {
    Graph codomain;                 // disjoint union of the standard graphs, tagged by shape
    std::vector<Partition> tags;    // shape of each codomain vertex
    Morphism map;
};
// sends each word vertex to its insertion tableau
PMorphism induced_P_morphism(const Graph& g);
std::map<Partition, long> syam_schur_expansion(const std::vector<Word>& V);

std::string to_dot(const Graph& g);

}  // namespace deg
