#include <doctest.h>

#include <algorithm>
#include <set>

#include "deg/axioms.hpp"
#include "deg/campaign.hpp"
#include "deg/llt.hpp"

using namespace deg;

namespace {

TupleFilling pair_filling(std::vector<std::vector<int>> a0, std::vector<std::vector<int>> a1) {
    Tableau t0{SkewShape({3, 2, 2}, {1}), std::move(a0)};
    Tableau t1{SkewShape({3, 1, 1}, {2}), std::move(a1)};
    return filling_from_tableaux({t0, t1});
}

// pairs (x, y) over all cells with 0 < sc(y) - sc(x) < k and T(x) > T(y)
int inv_brute(const TupleFilling& f) {
    int k = f.tuple.k(), inv = 0;
    std::vector<std::pair<int, int>> cells;  // (shifted content, value)
    for (int i = 0; i < k; ++i) {
        Tableau t = f.component(i);
        for (auto& c : t.shape.cells()) cells.push_back({k * (c.col - c.row) + i, t.at(c)});
    }
    for (auto& x : cells)
        for (auto& y : cells)
            if (y.first - x.first > 0 && y.first - x.first < k && x.second > y.second) ++inv;
    return inv;
}

bool increasing(const Tableau& t) {
    for (auto x : t.shape.cells()) {
        Cell right{x.row, x.col + 1}, up{x.row + 1, x.col};
        if (t.shape.contains(right) && t.at(right) < t.at(x)) return false;
        if (t.shape.contains(up) && t.at(up) < t.at(x)) return false;
    }
    return true;
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST_CASE("example fillings") {
    auto t = pair_filling({{1, 7}, {3, 6}, {4, 8}}, {{9}, {2}, {5}});
    CHECK(word_string(shifted_content_word(t)) == "453826179");
    CHECK(signature(shifted_content_word(t)) == "---+++-+");
    CHECK(inv_k(t) == 3);
    CHECK(inv_brute(t) == 3);
    CHECK(inv_of_word(t.tuple, t.values) == 3);
    CHECK(t.tuple.shifted_contents() == std::vector<int>{-4, -3, -2, -2, -1, 0, 2, 4, 5});

    auto u = pair_filling({{1, 7}, {4, 6}, {5, 8}}, {{9}, {2}, {3}});
    CHECK(word_string(shifted_content_word(u)) == "534826179");
    CHECK(word_string(tau_of(u.tuple)) == "456667899");
    CHECK(u.component(1) == Tableau{SkewShape({3, 1, 1}, {2}), {{9}, {2}, {3}}});
    CHECK_THROWS(filling_from_tableaux({superstandard({2}), superstandard({1})}));
}

TEST_CASE("one tuples reduce to tableaux") {
    for (auto& lam : partitions_of(5)) {
        SkewTuple nu = straight_tuple({lam});
        auto fs = enumerate_tuple_fillings(nu);
        REQUIRE(fs.size() == enumerate_syt(SkewShape(lam)).size());
        for (auto& f : fs) {
            REQUIRE(shifted_content_word(f) == content_reading_word(f.component(0)));
            REQUIRE(inv_k(f) == 0);
        }
        REQUIRE(diam(nu) <= 2);
        Graph g = build_llt_graph(nu);
        PMorphism p = induced_P_morphism(g);
        REQUIRE(is_covering(p.map, g, p.codomain));
        REQUIRE(std::set<int>(p.map.begin(), p.map.end()).size() == static_cast<size_t>(g.size()));
    }
    CHECK(diam(straight_tuple({{1}})) == 1);
}

TEST_CASE("tau words") {
    for (int n = 1; n <= 7; ++n) {
        TauWord expect;
        for (int i = 1; i <= n; ++i) expect.push_back(std::min(i + 1, n));
        CHECK(tau_of(straight_tuple({{n}})) == expect);
    }
    for (int n = 1; n <= 10; ++n) {
        auto all = all_tau_words(n);
        REQUIRE(static_cast<long>(all.size()) == catalan(n));
        REQUIRE(std::is_sorted(all.begin(), all.end()));
        for (auto& t : all) REQUIRE(is_valid_tau(t));
    }
    CHECK(tau_of_contents({0, 0, 3, 4}, 2) == TauWord{2, 2, 4, 4});
}

TEST_CASE("diameter") {
    SkewTuple nu1{{SkewShape({4, 3, 2, 2}), SkewShape({4, 3, 1, 1}, {2, 2})}};
    SkewTuple nu2{{SkewShape({1, 1, 1, 1}, {1}), SkewShape({5, 4, 4, 1}, {2, 1}), SkewShape({4, 2})}};
    SkewTuple nu3 = straight_tuple({{2, 1, 1, 1}, {1}, {1, 1}});
    CHECK(diam(nu1) == 3);
    CHECK(diam(nu2) == 3);
    CHECK(diam(nu3) == 4);
    CHECK(diam(straight_tuple({{2}, {1}, {1}})) == 4);
    CHECK(diam_of_contents({0, 1, 2, 3}, 2) == 3);
    CHECK(diam_of_contents({0, 0, 0}, 5) == 1);
}

TEST_CASE("fillings") {
    CHECK(enumerate_tuple_fillings(straight_tuple({{1}, {1}})).size() == 2);
    auto fs = enumerate_tuple_fillings(straight_tuple({{2}, {1}, {1}}));
    CHECK(fs.size() == 12);
    for (auto& f : fs) {
        REQUIRE(inv_k(f) == inv_brute(f));
        for (int i = 0; i < 3; ++i) REQUIRE(increasing(f.component(i)));
    }
    auto words = shifted_content_words(straight_tuple({{2}, {1}, {1}}));
    CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("LLT graphs") {
    Graph two = build_llt_graph(straight_tuple({{1}, {1}}));
    CHECK(two.size() == 2);
    CHECK(two.edges().empty());

    SkewTuple nu = straight_tuple({{2}, {2}, {1}, {1}});
    CHECK(word_string(tau_of(nu)) == "566666");
    Graph g = build_llt_graph(nu);
    int u = -1, v = -1;
    for (int x = 0; x < g.size(); ++x) {
        if (word_string(g.words[x]) == "312654") u = x;
        if (word_string(g.words[x]) == "412653") v = x;
    }
    REQUIRE(u >= 0);
    REQUIRE(v >= 0);
    CHECK(g.has_edge(3, u, v));
    CHECK(g.has_edge(4, u, v));
    for (auto& c : component_sets(g))
        if (std::count(c.begin(), c.end(), u)) CHECK(c.size() == 47);

    long total = 0;
    for (auto& c : component_sets(g)) total += static_cast<long>(c.size());
    CHECK(total == static_cast<long>(enumerate_tuple_fillings(nu).size()));
}

TEST_CASE("inv is constant on components and each carries one Yamanouchi word") {
    for (auto& nu : llt_corpus(6, 6)) {
        Graph g = build_llt_graph(nu);
        REQUIRE(check_axiom1(g).ok);
        REQUIRE(check_axiom2(g).ok);
        REQUIRE(check_axiom3(g).ok);
        REQUIRE(check_axiom5(g).ok);
        for (auto& c : component_sets(g)) {
            int inv = inv_of_word(nu, g.words[c[0]]);
            int yam = 0;
            for (int v : c) {
                REQUIRE(inv_of_word(nu, g.words[v]) == inv);
                bool hit = false;
                for (auto& lam : partitions_of(nu.size())) hit = hit || syam_member(g.words[v], lam);
                yam += hit;
            }
            REQUIRE(yam == 1);
        }
    }
}

TEST_CASE("components with at most two rows map isomorphically") {
    for (auto& nu : llt_corpus(6, 6)) {
        Graph g = build_llt_graph(nu);
        for (auto& c : components(g)) {
            if (rsk_shape(c.words[0]).size() > 2) continue;
            PMorphism p = induced_P_morphism(c);
            REQUIRE(is_covering(p.map, c, p.codomain));
            REQUIRE(std::set<int>(p.map.begin(), p.map.end()).size() == static_cast<size_t>(c.size()));
        }
    }
}

TEST_CASE("diameter decides the LLT graph") {
    for (int k = 1; k <= 4; ++k)
        for (auto& nu : straight_tuples(k, k <= 2 ? 7 : 6)) REQUIRE(is_deg(build_llt_graph(nu)) == (diam(nu) <= 3));
}

TEST_CASE("LLT expansions") {
    SkewTuple pair = straight_tuple({{1}, {1}});
    FExpansion f = llt_f_expansion(pair);
    CHECK(f.terms.at("+") == QTPoly::monomial(0, 0));
    CHECK(f.terms.at("-") == QTPoly::monomial(1, 0));
    CHECK(to_string(llt_schur_expansion(pair)) == "(q)s(1,1) + (1)s(2)");

    SchurExpansion one = llt_schur_expansion(straight_tuple({{3, 1}}));
    CHECK(one.terms.size() == 1);
    CHECK(one.coeff({3, 1}) == QTPoly::monomial(0, 0));
    CHECK(llt_f_expansion(straight_tuple({{3, 2}})) == schur_to_f(SkewShape({3, 2})));

    SkewTuple bad = straight_tuple({{2}, {1}, {1}});
    try {
        llt_schur_expansion(bad);
        FAIL("diameter four accepted");
    } catch (const DiameterTooLarge& e) {
        CHECK(e.diameter == 4);
    }
    SchurExpansion g = extract_schur(llt_f_expansion(bad));
    CHECK(g.coeff({2, 2}).coeff(2, 0) == 1);
    CHECK(yamanouchi_sum(bad).coeff({2, 2}).coeff(2, 0) == 0);

    for (auto& nu : llt_corpus(5, 5)) REQUIRE(f_equal(llt_f_expansion(nu), expand(llt_schur_expansion(nu))).equal);
}
