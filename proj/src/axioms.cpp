#include "deg/axioms.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace deg {

namespace {

std::string vname(const Graph& g, int v) { return g.label[v].empty() ? std::to_string(v) : g.label[v]; }

AxiomReport pass(const std::string& name) { return {name, true, {}, {}, 0}; }

AxiomReport fail(const std::string& name, const std::string& detail, std::vector<int> verts, int color) {
    return {name, false, detail, std::move(verts), color};
}

bool admits(const Graph& g, int v, int i) {
    if (!g.sigma_defined(i - 1) || !g.sigma_defined(i)) return false;
    return g.sigma(v, i - 1) != g.sigma(v, i);
}

Graph unsigned_copy(const Graph& g) {
    Graph h = g;
    h.is_signed = false;
    return h;
}

}  // namespace

const Graph& standard_graph(const Partition& lambda) {
    static std::mutex mu;
    static std::map<Partition, std::unique_ptr<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[lambda];
    if (!slot) slot = std::make_unique<Graph>(build_standard_deg(lambda));
    return *slot;
}

LocalCatalog::LocalCatalog() : types_(5) {
    for (int w = 2; w <= 4; ++w) {
        for (auto& lam : partitions_of(w + 2)) {
            const Graph& s = standard_graph(lam);
            for (auto& vs : component_sets(s, 2, w + 1)) types_[w].insert(*matching_canon(s, vs, 2, w + 1, 2, false));
        }
    }
}

const LocalCatalog& LocalCatalog::get() {
    static const LocalCatalog cat;
    return cat;
}

bool LocalCatalog::contains(int colors, const std::vector<int>& code) const {
    if (colors < 2 || colors > 4) return false;
    return types_[colors].count(code) > 0;
}

AxiomReport check_axiom1(const Graph& g) {
    for (int v = 0; v < g.size(); ++v) {
        for (int i = g.m + 1; i < g.n; ++i) {
            int d = g.degree(v, i);
            if (d > 1) return fail("1", "vertex " + vname(g, v) + " has " + std::to_string(d) + " edges of color " + std::to_string(i), {v}, i);
            bool a = admits(g, v, i);
            if (a && d == 0) return fail("1", "vertex " + vname(g, v) + " admits an " + std::to_string(i) + "-neighbor but has none", {v}, i);
            if (!a && d == 1) return fail("1", "vertex " + vname(g, v) + " has an " + std::to_string(i) + "-edge without admitting one", {v}, i);
        }
    }
    return pass("1");
}

AxiomReport check_axiom2(const Graph& g) {
    for (auto& e : g.edges()) {
        int i = e.color;
        for (int h = 1; h <= g.N - 1; ++h) {
            bool differ = g.sig[e.u][h - 1] != g.sig[e.v][h - 1];
            if ((h == i || h == i - 1) && !differ)
                return fail("2", "edge " + vname(g, e.u) + " -" + std::to_string(i) + "- " + vname(g, e.v) + " keeps sigma_" + std::to_string(h), {e.u, e.v}, i);
            if ((h < i - 2 || h > i + 1) && differ)
                return fail("2", "edge " + vname(g, e.u) + " -" + std::to_string(i) + "- " + vname(g, e.v) + " changes sigma_" + std::to_string(h), {e.u, e.v}, i);
        }
    }
    return pass("2");
}

AxiomReport check_axiom3(const Graph& g) {
    for (auto& e : g.edges()) {
        int i = e.color;
        if (g.sigma_defined(i - 2) && !admits(g, e.u, i - 1) && !admits(g, e.v, i - 1))
            return fail("3", "neither end of the " + std::to_string(i) + "-edge at " + vname(g, e.u) + " admits an " + std::to_string(i - 1) + "-neighbor", {e.u, e.v}, i);
        if (g.sigma_defined(i + 1) && !admits(g, e.u, i + 1) && !admits(g, e.v, i + 1))
            return fail("3", "neither end of the " + std::to_string(i) + "-edge at " + vname(g, e.u) + " admits an " + std::to_string(i + 1) + "-neighbor", {e.u, e.v}, i);
    }
    return pass("3");
}

AxiomReport check_axiom3_signatures(const Graph& g) {
    for (auto& e : g.edges()) {
        int i = e.color;
        for (auto [v, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (i > 2 && g.sigma_defined(i - 2) && g.sigma(v, i - 2) != g.sigma(w, i - 2) && g.sigma(v, i - 2) == g.sigma(v, i - 1))
                return fail("3", "sigma_" + std::to_string(i - 2) + " flips along the " + std::to_string(i) + "-edge at " + vname(g, v), {v, w}, i);
            if (g.sigma_defined(i + 1) && g.sigma(v, i + 1) != g.sigma(w, i + 1) && g.sigma(v, i + 1) == g.sigma(v, i))
                return fail("3", "sigma_" + std::to_string(i + 1) + " flips along the " + std::to_string(i) + "-edge at " + vname(g, v), {v, w}, i);
        }
    }
    return pass("3");
}

static AxiomReport window_check(const Graph& g, const std::string& name, int max_width) {
    const auto& cat = LocalCatalog::get();
    for (int i = g.m + 2; i < g.n; ++i) {
        int lo = std::max(g.m + 1, i - max_width + 1);
        int w = i - lo + 1;
        for (auto& vs : component_sets(g, lo, i)) {
            auto code = matching_canon(g, vs, lo, i, lo, false);
            if (!code || !cat.contains(w, *code)) {
                std::string what = code ? "is not a component of any standard graph" : "has a repeated color at a vertex";
                return fail(name, "component of colors " + std::to_string(lo) + ".." + std::to_string(i) + " at " + vname(g, vs[0]) + " (" +
                                      std::to_string(vs.size()) + " vertices) " + what,
                            vs, i);
            }
        }
    }
    return pass(name);
}

AxiomReport check_axiom4(const Graph& g) { return window_check(g, "4", 3); }
AxiomReport check_axiom4plus(const Graph& g) { return window_check(g, "4+", 4); }

AxiomReport check_axiom5(const Graph& g) {
    for (auto& e : g.edges()) {
        int i = e.color;
        for (auto [v, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            for (auto [j, x] : g.adj(w)) {
                if (std::abs(i - j) <= 2) continue;
                bool found = false;
                for (auto [c, y] : g.adj(v))
                    if (c == j && g.has_edge(i, x, y)) {
                        found = true;
                        break;
                    }
                if (!found)
                    return fail("5", "colors " + std::to_string(i) + " and " + std::to_string(j) + " do not commute at " + vname(g, w), {v, w, x}, i);
            }
        }
    }
    return pass("5");
}

AxiomReport check_axiom6(const Graph& g) {
    for (int i = g.m + 1; i < g.n; ++i) {
        auto low = component_sets(g, g.m + 1, i - 1);
        auto all = component_sets(g, g.m + 1, i);
        std::vector<int> lid(g.size());
        for (size_t k = 0; k < low.size(); ++k)
            for (int v : low[k]) lid[v] = static_cast<int>(k);
        std::set<std::pair<int, int>> adjacent;
        for (auto& e : g.edges()) {
            if (e.color != i) continue;
            int a = lid[e.u], b = lid[e.v];
            if (a != b) adjacent.insert({std::min(a, b), std::max(a, b)});
        }
        for (auto& vs : all) {
            std::vector<int> parts;
            for (int v : vs) parts.push_back(lid[v]);
            std::sort(parts.begin(), parts.end());
            parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
            for (size_t a = 0; a < parts.size(); ++a)
                for (size_t b = a + 1; b < parts.size(); ++b)
                    if (!adjacent.count({parts[a], parts[b]})) {
                        int x = low[parts[a]][0], y = low[parts[b]][0];
                        return fail("6", "vertices " + vname(g, x) + " and " + vname(g, y) + " need two " + std::to_string(i) + "-edges to meet", {x, y}, i);
                    }
        }
    }
    return pass("6");
}

namespace {

struct FTypes {
    std::vector<std::vector<int>> piece_codes;  // distinct lower-color piece types
    std::vector<int> per_copy;                  // how often each type occurs in G_(3,2,1)
    Graph target;                               // unsigned G_(3,2,1)
};

const FTypes& f_types() {
    static const FTypes t = [] {
        FTypes r;
        const Graph& s = standard_graph({3, 2, 1});
        for (auto& vs : component_sets(s, 2, 4)) {
            auto code = *matching_canon(s, vs, 2, 4, 2, false);
            auto it = std::find(r.piece_codes.begin(), r.piece_codes.end(), code);
            if (it != r.piece_codes.end()) {
                ++r.per_copy[it - r.piece_codes.begin()];
            } else {
                r.piece_codes.push_back(code);
                r.per_copy.push_back(1);
            }
        }
        r.target = unsigned_copy(s);
        return r;
    }();
    return t;
}

// component (colors lo..lo+3) maps onto G_(3,2,1) as a covering
bool covers_staircase(const Graph& c, int lo) {
    const Graph& t = f_types().target;
    int shift = 2 - lo;
    for (int s = 0; s < t.size(); ++s) {
        Morphism phi(c.size(), -1);
        phi[0] = s;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int v = stack.back();
            stack.pop_back();
            for (int col = lo; col <= lo + 3 && ok; ++col) {
                int a = c.partner(v, col), b = t.partner(phi[v], col + shift);
                if ((a < 0) != (b < 0)) {
                    ok = false;
                    break;
                }
                if (a < 0) continue;
                if (phi[a] < 0) {
                    phi[a] = b;
                    stack.push_back(a);
                } else if (phi[a] != b) {
                    ok = false;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

FDetection detect_f_family(const Graph& g) {
    for (auto* check : {check_axiom1, check_axiom2, check_axiom3, check_axiom4, check_axiom5}) {
        auto r = check(g);
        if (!r.ok) throw std::invalid_argument("detect_f_family needs axioms 1-5; axiom " + r.axiom + " fails: " + r.detail);
    }
    const FTypes& ft = f_types();
    FDetection out;
    for (int i = g.m + 4; i < g.n; ++i) {
        int lo = i - 3;
        for (auto& vs : component_sets(g, lo, i)) {
            if (static_cast<int>(vs.size()) < 2 * ft.target.size()) continue;
            Graph c = induced_subgraph(color_window(g, lo, i), vs);
            bool busy = true;
            for (int v = 0; v < c.size() && busy; ++v) {
                std::set<int> nb;
                for (auto [col, u] : c.adj(v)) nb.insert(u);
                busy = nb.size() >= 2;
            }
            if (!busy) continue;
            auto pieces = component_sets(c, lo, i - 1);
            std::vector<int> pid(c.size()), count(ft.piece_codes.size(), 0);
            bool typed = true;
            for (size_t k = 0; k < pieces.size() && typed; ++k) {
                for (int v : pieces[k]) pid[v] = static_cast<int>(k);
                auto code = matching_canon(c, pieces[k], lo, i - 1, lo, false);
                auto it = code ? std::find(ft.piece_codes.begin(), ft.piece_codes.end(), *code) : ft.piece_codes.end();
                if (it == ft.piece_codes.end()) typed = false;
                else ++count[it - ft.piece_codes.begin()];
            }
            if (!typed) continue;
            std::vector<std::set<int>> qn(pieces.size());
            for (auto& e : c.edges()) {
                if (e.color != i || pid[e.u] == pid[e.v]) continue;
                qn[pid[e.u]].insert(pid[e.v]);
                qn[pid[e.v]].insert(pid[e.u]);
            }
            bool cycle = pieces.size() >= 6 && pieces.size() % 3 == 0;
            for (auto& s : qn) cycle = cycle && s.size() == 2;
            int copies = static_cast<int>(pieces.size() / 3);
            for (size_t t = 0; t < count.size(); ++t) cycle = cycle && count[t] == copies * ft.per_copy[t];
            if (!cycle || !covers_staircase(c, lo)) continue;
            out.found = true;
            out.color = i;
            out.copies = copies;
            out.vertices = vs;
            return out;
        }
    }
    return out;
}

DegReport deg_report(const Graph& g) {
    DegReport r;
    r.axioms = {check_axiom1(g), check_axiom2(g), check_axiom3(g), check_axiom4(g), check_axiom5(g), check_axiom6(g), check_axiom4plus(g)};
    auto ok = [&](int k) { return r.axioms[k].ok; };
    r.route_a = ok(0) && ok(1) && ok(2) && ok(3) && ok(4) && ok(5);
    r.route_b = ok(0) && ok(1) && ok(2) && ok(6) && ok(4);
    return r;
}

bool is_deg(const Graph& g) {
    auto r = deg_report(g);
    if (r.route_a != r.route_b) {
        std::string why;
        for (auto& a : r.axioms)
            if (!a.ok) why += " [" + a.axiom + "] " + a.detail;
        throw RouteMismatch("axioms 1-6 and 1,2,3,4+,5 disagree:" + why);
    }
    return r.route_a;
}

Partition classify_component(const Graph& c, bool cross_check_rsk) {
    if (c.size() == 0) throw NotClassified("empty graph");
    if (component_sets(c).size() != 1) throw NotClassified("graph is not connected");
    int n = c.n;
    if (c.m != 1 || c.N != n) throw NotClassified("classification expects a graph of type (n,n)");
    std::vector<std::string> sigs = c.sig;
    std::sort(sigs.begin(), sigs.end());
    for (auto& lam : partitions_of(n)) {
        const Graph& s = standard_graph(lam);
        if (s.size() != c.size()) continue;
        std::vector<std::string> ss = s.sig;
        std::sort(ss.begin(), ss.end());
        if (ss != sigs) continue;
        if (!isomorphic(s, c)) continue;
        if (cross_check_rsk && !c.words.empty()) {
            for (auto& w : c.words)
                if (rsk_shape(w) != lam) throw NotClassified("insertion shape of " + word_string(w) + " disagrees with " + partition_string(lam));
        }
        return lam;
    }
    throw NotClassified("component at " + c.label[0] + " matches no standard graph");
}

}  // namespace deg
