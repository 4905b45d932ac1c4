#include <doctest.h>

#include <algorithm>
#include <set>

#include "deg/graph.hpp"

using namespace deg;

namespace {

int vertex_of(const Graph& g, const std::string& w) {
    for (int v = 0; v < g.size(); ++v)
        if (word_string(g.words[v]) == w) return v;
    return -1;
}

std::set<int> colors_between(const Graph& g, int u, int v) {
    std::set<int> out;
    for (auto [c, x] : g.adj(u))
        if (x == v) out.insert(c);
    return out;
}

}  // namespace

TEST_CASE("standard graph of (3,2)") {
    Graph g = build_standard_deg({3, 2});
    REQUIRE(g.size() == 5);
    CHECK(component_sets(g).size() == 1);
    std::multiset<std::string> sigs(g.sig.begin(), g.sig.end());
    CHECK(sigs == std::multiset<std::string>{"+-++", "-+-+", "-++-", "+-+-", "++-+"});

    // a chain: four adjacent pairs, two ends
    std::set<std::pair<int, int>> pairs;
    for (auto& e : g.edges()) pairs.insert({e.u, e.v});
    CHECK(pairs.size() == 4);
    std::vector<int> deg(g.size());
    for (auto [u, v] : pairs) ++deg[u], ++deg[v];
    CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
    std::multiset<std::set<int>> bundles;
    for (auto [u, v] : pairs) bundles.insert(colors_between(g, u, v));
    CHECK(bundles == std::multiset<std::set<int>>{{2, 3}, {3, 4}, {2}, {4}});
    for (auto [u, v] : pairs) {
        auto b = colors_between(g, u, v);
        if (b.size() == 2) CHECK((deg[u] == 1 || deg[v] == 1));
    }
    int left = -1;
    for (int v = 0; v < g.size(); ++v)
        if (g.label[v] == "34/125") left = v;
    REQUIRE(left >= 0);
    CHECK(deg[left] == 1);
}

TEST_CASE("small standard graphs") {
    Graph one = build_standard_deg({4});
    CHECK(one.size() == 1);
    CHECK(one.edges().empty());
    CHECK(one.sig[0] == "+++");

    Graph sq = build_standard_deg({2, 2});
    REQUIRE(sq.size() == 2);
    CHECK(colors_between(sq, 0, 1) == std::set<int>{2, 3});
    CHECK(sq.edges().size() == 2);
}

TEST_CASE("skew graphs") {
    Graph g = build_skew_deg(SkewShape({2, 1}, {1}));
    CHECK(g.size() == 2);
    CHECK(g.edges().empty());
    CHECK(component_sets(g).size() == 2);

    CHECK(isomorphic(build_skew_deg(SkewShape({3, 2})), build_standard_deg({3, 2})).has_value());

    SkewShape s({2, 2, 1}, {1, 1});
    Graph h = build_skew_deg(s);
    long lr = 0;
    for (auto& [lam, c] : syam_schur_expansion(h.words)) lr += c;
    CHECK(static_cast<long>(component_sets(h).size()) == lr);
    CHECK(lr == 2);
}

TEST_CASE("graphs on all permutations") {
    Graph g3 = build_gn(3);
    CHECK(g3.edges().size() == 2);
    CHECK(g3.has_edge(2, vertex_of(g3, "132"), vertex_of(g3, "231")));
    CHECK(g3.has_edge(2, vertex_of(g3, "213"), vertex_of(g3, "312")));
    CHECK(g3.adj(vertex_of(g3, "123")).empty());
    CHECK(g3.adj(vertex_of(g3, "321")).empty());

    long syt5 = 0;
    for (auto& p : partitions_of(5)) syt5 += static_cast<long>(enumerate_syt(SkewShape(p)).size());
    CHECK(static_cast<long>(component_sets(build_gn(5)).size()) == syt5);
    CHECK(syt5 == 26);

    for (int n = 1; n <= 5; ++n) {
        TauWord id;
        for (int i = 1; i <= n; ++i) id.push_back(i);
        Graph a = build_gn(n), b = build_gn_tau(id);
        REQUIRE(a.edges() == b.edges());
        REQUIRE(a.sig == b.sig);
    }

    Graph g = build_gn_tau({5, 6, 6, 6, 6, 6});
    int u = vertex_of(g, "312654"), v = vertex_of(g, "412653");
    CHECK(colors_between(g, u, v) == std::set<int>{3, 4});
    CHECK_THROWS(build_gn_tau({2, 1}));
}

TEST_CASE("restrictions and color reversal") {
    Graph g = build_standard_deg({3, 2, 1});
    Graph same = restrict_graph(g, g.n, g.N);
    CHECK(same.edges() == g.edges());
    CHECK(same.sig == g.sig);
    Graph rr = color_reverse(color_reverse(g));
    CHECK(rr.edges() == g.edges());
    CHECK(rr.sig == g.sig);
    CHECK_THROWS(restrict_graph(g, 9, 3));
    CHECK_THROWS(upward_restrict(g, 6));

    for (int n = 1; n <= 6; ++n)
        for (auto& lam : partitions_of(n)) {
            Graph s = build_standard_deg(lam);
            REQUIRE(isomorphic(color_reverse(s), s).has_value());
        }
}

TEST_CASE("upward restriction splits into skew graphs") {
    for (int n = 3; n <= 6; ++n)
        for (auto& lam : partitions_of(n))
            for (int h = 1; h <= 2; ++h) {
                Graph up = upward_restrict(build_standard_deg(lam), h);
                std::vector<Graph> pool;
                for (auto& rho : partitions_of(h)) {
                    bool inside = rho.size() <= lam.size();
                    for (size_t r = 0; inside && r < rho.size(); ++r) inside = rho[r] <= lam[r];
                    if (!inside) continue;
                    size_t copies = enumerate_syt(SkewShape(rho)).size();
                    for (auto& c : components(build_skew_deg(SkewShape(lam, rho))))
                        for (size_t k = 0; k < copies; ++k) pool.push_back(c);
                }
                auto parts = components(up);
                REQUIRE(parts.size() == pool.size());
                for (auto& c : parts) {
                    auto it = std::find_if(pool.begin(), pool.end(), [&](const Graph& x) { return isomorphic(c, x).has_value(); });
                    REQUIRE(it != pool.end());
                    pool.erase(it);
                }
            }
}

TEST_CASE("isomorphism") {
    Graph g = build_standard_deg({3, 2});
    auto phi = isomorphic(g, g);
    REQUIRE(phi);
    CHECK(check_morphism(*phi, g, g));
    CHECK_FALSE(isomorphic(build_standard_deg({2, 1}), build_standard_deg({1, 1, 1})));

    for (int n = 1; n <= 5; ++n) {
        auto ps = partitions_of(n);
        for (auto& a : ps)
            for (auto& b : ps) {
                Graph x = build_standard_deg(a), y = build_standard_deg(b);
                auto m = isomorphic(x, y);
                REQUIRE(m.has_value() == (a == b));
                if (!m) continue;
                for (int v = 0; v < x.size(); ++v) REQUIRE((*m)[v] == v);
            }
    }

    Graph shifted = upward_restrict(build_standard_deg({3, 2, 1}), 1);
    CHECK(isomorphic(components(shifted)[0], components(shifted)[0], {.allow_color_shift = true}));
}

TEST_CASE("morphisms") {
    Graph g = build_standard_deg({3, 1});
    Morphism id(g.size());
    for (int v = 0; v < g.size(); ++v) id[v] = v;
    CHECK(check_morphism(id, g, g));
    CHECK(is_covering(id, g, g));
    std::string why;
    std::swap(id[0], id[1]);
    CHECK_FALSE(check_morphism(id, g, g, &why));
    CHECK_FALSE(why.empty());

    for (int n = 2; n <= 6; ++n) {
        Graph all = build_gn(n);
        for (auto& c : components(all)) {
            PMorphism p = induced_P_morphism(c);
            REQUIRE(check_morphism(p.map, c, p.codomain));
            REQUIRE(is_covering(p.map, c, p.codomain));
            std::set<int> image(p.map.begin(), p.map.end());
            REQUIRE(image.size() == static_cast<size_t>(c.size()));
            Partition lam = p.tags[p.map[0]];
            for (int v : p.map) REQUIRE(p.tags[v] == lam);
            REQUIRE(static_cast<size_t>(c.size()) == enumerate_syt(SkewShape(lam)).size());
        }
    }
}

TEST_CASE("SYam counts") {
    auto s3 = syam_schur_expansion(all_permutations(3));
    CHECK(s3 == std::map<Partition, long>{{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}});
    CHECK(syam_schur_expansion({{1, 2, 3, 4}}) == std::map<Partition, long>{{{4}, 1}});
}

TEST_CASE("dot output") {
    std::string dot = to_dot(build_standard_deg({3, 2}));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"2,3\"") != std::string::npos);
    CHECK(dot.find("\"3,4\"") != std::string::npos);
}
