#include "deg/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deg {

int Graph::add_vertex(std::string s, std::string l) {
    sig.push_back(std::move(s));
    label.push_back(std::move(l));
    return size() - 1;
}

void Graph::add_edge(int color, int u, int v) {
    if (u == v) throw std::invalid_argument("self loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges_.push_back({color, u, v});
}

void Graph::finalize() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(size(), {});
    for (auto& e : edges_) {
        if (e.color <= m || e.color >= n) throw std::invalid_argument("edge color " + std::to_string(e.color) + " outside declared range");
        adj_[e.u].push_back({e.color, e.v});
        adj_[e.v].push_back({e.color, e.u});
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::partner(int v, int c) const {
    auto& a = adj_[v];
    auto it = std::lower_bound(a.begin(), a.end(), std::make_pair(c, -1));
    if (it != a.end() && it->first == c) return it->second;
    return -1;
}

int Graph::degree(int v, int c) const {
    auto& a = adj_[v];
    auto lo = std::lower_bound(a.begin(), a.end(), std::make_pair(c, -1));
    auto hi = std::lower_bound(a.begin(), a.end(), std::make_pair(c + 1, -1));
    return static_cast<int>(hi - lo);
}

bool Graph::has_edge(int c, int u, int v) const {
    auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), std::make_pair(c, v));
}

Graph graph_from_words(const std::vector<Word>& words, const std::function<Word(const Word&, int)>& move) {
    Graph g;
    int n = words.empty() ? 1 : static_cast<int>(words[0].size());
    g.m = 1;
    g.n = n;
    g.N = n;
    std::map<Word, int> index;
    for (auto& w : words) {
        if (static_cast<int>(w.size()) != n) throw std::invalid_argument("words of mixed length");
        int id = g.add_vertex(signature(w), word_string(w));
        g.words.push_back(w);
        if (!index.emplace(w, id).second) throw std::invalid_argument("duplicate word " + word_string(w));
    }
    for (int v = 0; v < g.size(); ++v) {
        for (int i = 2; i < n; ++i) {
            Word x = move(words[v], i);
            if (x == words[v]) continue;
            auto it = index.find(x);
            if (it == index.end())
                throw std::logic_error("move " + std::to_string(i) + " sends " + word_string(words[v]) + " outside the vertex set");
            g.add_edge(i, v, it->second);
        }
    }
    g.finalize();
    return g;
}

Graph build_skew_deg(const SkewShape& shape) {
    auto tabs = enumerate_syt(shape);
    std::vector<Word> rw;
    for (auto& t : tabs) rw.push_back(row_reading_word(t));
    Graph g = graph_from_words(rw, [](const Word& w, int i) { return dual_move(w, i); });
    g.n = g.N = shape.size();
    for (size_t k = 0; k < tabs.size(); ++k) {
        g.sig[k] = signature(content_reading_word(tabs[k]));
        g.label[k] = tableau_string(tabs[k]);
    }
    return g;
}

Graph build_standard_deg(const Partition& lambda) { return build_skew_deg(SkewShape(lambda)); }

Graph build_gn(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return graph_from_words(all_permutations(n), [](const Word& w, int i) { return dual_move(w, i); });
}

Graph build_gn_tau(const TauWord& tau) {
    if (!is_valid_tau(tau)) throw std::invalid_argument("malformed tau word");
    return graph_from_words(all_permutations(static_cast<int>(tau.size())),
                            [&](const Word& w, int i) { return d_tau_move(w, i, tau); });
}

static Graph copy_vertices(const Graph& g) {
    Graph h;
    h.m = g.m;
    h.n = g.n;
    h.N = g.N;
    h.is_signed = g.is_signed;
    h.sig = g.sig;
    h.label = g.label;
    h.words = g.words;
    return h;
}

Graph restrict_graph(const Graph& g, int a, int b) {
    if (a < 1 || b < 1 || a > g.n || b > g.N) throw std::out_of_range("restriction parameters outside the graph type");
    Graph h = copy_vertices(g);
    h.n = a;
    h.N = b;
    h.m = std::min(g.m, std::max(a - 1, 1));
    if (g.is_signed)
        for (auto& s : h.sig) s = s.substr(0, b - 1);
    for (auto& e : g.edges())
        if (e.color < a) h.add_edge(e.color, e.u, e.v);
    h.finalize();
    return h;
}

Graph upward_restrict(const Graph& g, int h) {
    if (h < 0 || h >= g.n || h >= g.N) throw std::out_of_range("upward shift outside the graph type");
    Graph r = copy_vertices(g);
    r.n = g.n - h;
    r.N = g.N - h;
    r.m = std::max(1, g.m - h);
    if (g.is_signed)
        for (auto& s : r.sig) s = s.substr(h);
    for (auto& e : g.edges())
        if (e.color - h > r.m) r.add_edge(e.color - h, e.u, e.v);
    r.finalize();
    return r;
}

Graph downward_restrict(const Graph& g) {
    if (g.n < 2) throw std::out_of_range("graph has no colors to drop");
    Graph r = copy_vertices(g);
    r.n = g.n - 1;
    for (auto& e : g.edges())
        if (e.color < r.n) r.add_edge(e.color, e.u, e.v);
    r.finalize();
    return r;
}

Graph color_reverse(const Graph& g) {
    Graph r = copy_vertices(g);
    r.m = g.N + 1 - g.n;
    r.n = g.N + 1 - g.m;
    if (g.is_signed)
        for (auto& s : r.sig) std::reverse(s.begin(), s.end());
    for (auto& e : g.edges()) r.add_edge(g.N + 1 - e.color, e.u, e.v);
    r.finalize();
    return r;
}

Graph color_window(const Graph& g, int lo, int hi) {
    Graph r = copy_vertices(g);
    r.m = lo - 1;
    r.n = hi + 1;
    for (auto& e : g.edges())
        if (e.color >= lo && e.color <= hi) r.add_edge(e.color, e.u, e.v);
    r.finalize();
    return r;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph r;
    r.m = g.m;
    r.n = g.n;
    r.N = g.N;
    r.is_signed = g.is_signed;
    std::vector<int> id(g.size(), -1);
    for (int v : verts) {
        id[v] = r.add_vertex(g.sig[v], g.label[v]);
        if (!g.words.empty()) r.words.push_back(g.words[v]);
    }
    for (int v : verts)
        for (auto [c, u] : g.adj(v))
            if (id[u] >= 0 && v < u) r.add_edge(c, id[v], id[u]);
    r.finalize();
    return r;
}

std::vector<std::vector<int>> component_sets(const Graph& g, int lo, int hi) {
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (auto [c, u] : g.adj(v)) {
                if (c < lo || c > hi || comp[u] >= 0) continue;
                comp[u] = id;
                stack.push_back(u);
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::vector<std::vector<int>> component_sets(const Graph& g) { return component_sets(g, g.m + 1, g.n - 1); }

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (auto& vs : component_sets(g)) out.push_back(induced_subgraph(g, vs));
    return out;
}

namespace {

struct Canon {
    std::vector<int> code;
    std::vector<int> order;  // order[label] = vertex
};

std::optional<Canon> canon_impl(const Graph& g, const std::vector<int>& verts, int lo, int hi, int base, bool with_sig) {
    int k = static_cast<int>(verts.size());
    int C = hi - lo + 1;
    auto local = [&](int v) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) return -1;
        return static_cast<int>(it - verts.begin());
    };
    std::vector<int> P(static_cast<size_t>(k) * std::max(C, 0), -1);
    for (int a = 0; a < k; ++a) {
        for (auto [c, u] : g.adj(verts[a])) {
            if (c < lo || c > hi) continue;
            int b = local(u);
            if (b < 0) continue;
            int& slot = P[a * C + (c - lo)];
            if (slot >= 0) return std::nullopt;
            slot = b;
        }
    }
    auto invariant = [&](int a) {
        std::vector<int> key;
        if (with_sig)
            for (char ch : g.sig[verts[a]]) key.push_back(ch == '+');
        for (int c = 0; c < C; ++c) key.push_back(P[a * C + c] >= 0);
        return key;
    };
    std::vector<int> best_inv;
    std::vector<int> starts;
    for (int a = 0; a < k; ++a) {
        auto inv = invariant(a);
        if (starts.empty() || inv < best_inv) {
            best_inv = inv;
            starts = {a};
        } else if (inv == best_inv) {
            starts.push_back(a);
        }
    }
    std::optional<Canon> best;
    std::vector<int> lab(k);
    for (int s : starts) {
        std::fill(lab.begin(), lab.end(), -1);
        Canon cur;
        cur.code = {k, lo - base, C};
        cur.order.push_back(s);
        lab[s] = 0;
        for (size_t q = 0; q < cur.order.size(); ++q) {
            int a = cur.order[q];
            for (int c = 0; c < C; ++c) {
                int b = P[a * C + c];
                if (b >= 0 && lab[b] < 0) {
                    lab[b] = static_cast<int>(cur.order.size());
                    cur.order.push_back(b);
                }
            }
        }
        if (static_cast<int>(cur.order.size()) != k) throw std::invalid_argument("canonical form requested for a disconnected vertex set");
        for (int a : cur.order) {
            if (with_sig)
                for (char ch : g.sig[verts[a]]) cur.code.push_back(ch == '+');
            for (int c = 0; c < C; ++c) {
                int b = P[a * C + c];
                cur.code.push_back(b < 0 ? -1 : lab[b]);
            }
        }
        if (!best || cur.code < best->code) best = std::move(cur);
    }
    if (!best) best = Canon{{0, lo - base, C}, {}};
    for (auto& a : best->order) a = verts[a];
    return best;
}

std::pair<int, int> used_colors(const Graph& g) {
    if (g.edges().empty()) return {0, -1};
    int lo = g.edges().front().color, hi = lo;
    for (auto& e : g.edges()) {
        lo = std::min(lo, e.color);
        hi = std::max(hi, e.color);
    }
    return {lo, hi};
}

bool all_matchings(const Graph& g) {
    for (int v = 0; v < g.size(); ++v) {
        auto& a = g.adj(v);
        for (size_t k = 1; k < a.size(); ++k)
            if (a[k].first == a[k - 1].first) return false;
    }
    return true;
}

// plain backtracking for graphs where some color is not a matching
std::optional<Morphism> iso_backtrack(const Graph& g, const Graph& h, int shift, bool with_sig) {
    int k = g.size();
    auto profile = [](const Graph& x, int v, int d) {
        std::vector<std::pair<int, int>> p;
        for (auto [c, u] : x.adj(v)) {
            if (!p.empty() && p.back().first == c + d) ++p.back().second;
            else p.push_back({c + d, 1});
        }
        return p;
    };
    std::vector<int> order;
    std::vector<bool> seen(k, false);
    for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        std::deque<int> q{s};
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            for (auto [c, u] : g.adj(v))
                if (!seen[u]) {
                    seen[u] = true;
                    q.push_back(u);
                }
        }
    }
    Morphism phi(k, -1);
    std::vector<bool> used(k, false);
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        auto pv = profile(g, v, shift);
        for (int w = 0; w < k; ++w) {
            if (used[w]) continue;
            if (with_sig && g.sig[v] != h.sig[w]) continue;
            if (profile(h, w, 0) != pv) continue;
            bool ok = true;
            for (auto [c, u] : g.adj(v)) {
                if (phi[u] < 0) continue;
                if (!h.has_edge(c + shift, w, phi[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi[v] = w;
            used[w] = true;
            if (rec(idx + 1)) return true;
            phi[v] = -1;
            used[w] = false;
        }
        return false;
    };
    if (rec(0)) return phi;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> matching_canon(const Graph& g, const std::vector<int>& verts, int lo, int hi, int base,
                                               bool with_sig) {
    auto c = canon_impl(g, verts, lo, hi, base, with_sig);
    if (!c) return std::nullopt;
    return c->code;
}

std::optional<Morphism> isomorphic(const Graph& g, const Graph& h, IsoOptions opt) {
    if (g.size() != h.size() || g.edges().size() != h.edges().size()) return std::nullopt;
    bool with_sig = opt.compare_signatures && g.is_signed && h.is_signed;
    if (with_sig) {
        std::vector<std::string> a = g.sig, b = h.sig;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    auto [glo, ghi] = used_colors(g);
    auto [hlo, hhi] = used_colors(h);
    int shift = 0;
    if (opt.allow_color_shift && !g.edges().empty()) shift = hlo - glo;
    if (!g.edges().empty() && (glo + shift != hlo || ghi + shift != hhi)) return std::nullopt;
    if (g.size() == 0) return Morphism{};
    if (!all_matchings(g) || !all_matchings(h)) return iso_backtrack(g, h, shift, with_sig);

    int lo = g.edges().empty() ? 0 : glo, hi = g.edges().empty() ? -1 : ghi;
    auto gc = component_sets(g, lo, hi);
    auto hc = component_sets(h, lo + shift, hi + shift);
    if (gc.size() != hc.size()) return std::nullopt;
    std::multimap<std::vector<int>, Canon> pool;
    for (auto& vs : gc) {
        auto c = canon_impl(g, vs, lo, hi, lo, with_sig);
        pool.emplace(c->code, std::move(*c));
    }
    Morphism phi(g.size(), -1);
    for (auto& vs : hc) {
        auto c = canon_impl(h, vs, lo + shift, hi + shift, lo + shift, with_sig);
        auto it = pool.find(c->code);
        if (it == pool.end()) return std::nullopt;
        for (size_t k = 0; k < c->order.size(); ++k) phi[it->second.order[k]] = c->order[k];
        pool.erase(it);
    }
    return phi;
}

bool check_morphism(const Morphism& phi, const Graph& g, const Graph& h, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (static_cast<int>(phi.size()) != g.size()) return fail("map has wrong domain size");
    for (int v = 0; v < g.size(); ++v) {
        if (phi[v] < 0 || phi[v] >= h.size()) return fail("vertex " + std::to_string(v) + " maps outside the codomain");
        if (g.is_signed && h.is_signed && g.sig[v] != h.sig[phi[v]])
            return fail("signature of vertex " + std::to_string(v) + " not preserved");
    }
    for (auto& e : g.edges())
        if (!h.has_edge(e.color, phi[e.u], phi[e.v]))
            return fail("edge " + std::to_string(e.color) + ":{" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not preserved");
    return true;
}

bool is_covering(const Morphism& phi, const Graph& g, const Graph& h) {
    if (!check_morphism(phi, g, h)) return false;
    for (int v = 0; v < g.size(); ++v)
        for (int c = std::min(g.m, h.m) + 1; c < std::max(g.n, h.n); ++c)
            if (g.degree(v, c) != h.degree(phi[v], c)) return false;
    return true;
}

PMorphism induced_P_morphism(const Graph& g) {
    if (static_cast<int>(g.words.size()) != g.size()) throw std::invalid_argument("P morphism needs word vertices");
    int n = g.size() ? static_cast<int>(g.words[0].size()) : 1;
    for (int v = 0; v < g.size(); ++v) {
        if (signature(g.words[v]) != g.sig[v].substr(0, n - 1)) throw std::invalid_argument("vertex " + word_string(g.words[v]) + " signature is not given by inverse descents");
        for (int i = g.m + 1; i < g.n; ++i) {
            int d = g.degree(v, i);
            bool admits = g.sigma(v, i - 1) != g.sigma(v, i);
            if (d > 1 || (d == 1) != admits)
                throw std::invalid_argument("axiom 1 fails at vertex " + word_string(g.words[v]) + " color " + std::to_string(i));
        }
    }
    for (auto& e : g.edges()) {
        Word dv = dual_move(g.words[e.u], e.color);
        if (insertion_tableau(dv) != insertion_tableau(g.words[e.v]))
            throw std::invalid_argument("edge " + word_string(g.words[e.u]) + " -" + std::to_string(e.color) + "- " +
                                        word_string(g.words[e.v]) + " is not Knuth equivalent to the dual move");
    }
    PMorphism out;
    out.codomain.n = out.codomain.N = n;
    std::map<std::pair<Partition, Word>, int> where;
    for (auto& lam : partitions_of(n)) {
        Graph s = build_standard_deg(lam);
        int off = out.codomain.size();
        for (int v = 0; v < s.size(); ++v) {
            out.codomain.add_vertex(s.sig[v], partition_string(lam) + " " + s.label[v]);
            out.codomain.words.push_back(s.words[v]);
            out.tags.push_back(lam);
            where[{lam, s.words[v]}] = off + v;
        }
        for (auto& e : s.edges()) out.codomain.add_edge(e.color, off + e.u, off + e.v);
    }
    out.codomain.finalize();
    out.map.resize(g.size());
    for (int v = 0; v < g.size(); ++v) {
        Tableau P = insertion_tableau(g.words[v]);
        out.map[v] = where.at({P.shape.outer, row_reading_word(P)});
    }
    return out;
}

std::map<Partition, long> syam_schur_expansion(const std::vector<Word>& V) {
    std::map<Partition, long> out;
    for (auto& w : V) {
        Tableau P = insertion_tableau(w);
        if (P == superstandard(P.shape.outer)) ++out[P.shape.outer];
    }
    return out;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.size(); ++v) {
        os << "  v" << v << " [label=\"" << g.label[v];
        if (g.is_signed) os << "\\n" << g.sig[v];
        os << "\"];\n";
    }
    std::map<std::pair<int, int>, std::vector<int>> merged;
    for (auto& e : g.edges()) merged[{e.u, e.v}].push_back(e.color);
    for (auto& [uv, cs] : merged) {
        os << "  v" << uv.first << " -- v" << uv.second << " [label=\"";
        for (size_t k = 0; k < cs.size(); ++k) os << (k ? "," : "") << cs[k];
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace deg
