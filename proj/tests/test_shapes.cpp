#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "deg/shapes.hpp"
#include "deg/words.hpp"

using namespace deg;

namespace {

// transpose the cell set directly
Partition transpose_cells(const Partition& p) {
    std::map<int, int> cols;
    for (size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) ++cols[c];
    Partition out;
    for (auto& [c, h] : cols) out.push_back(h);
    return out;
}

// number of SYT by removing one corner at a time
long syt_count_dp(const Partition& p, std::map<Partition, long>& memo) {
    if (partition_size(p) <= 1) return 1;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    long total = 0;
    for (size_t r = 0; r < p.size(); ++r) {
        if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
        Partition q = p;
        if (--q[r] == 0) q.pop_back();
        total += syt_count_dp(q, memo);
    }
    return memo[p] = total;
}

Tableau brute_fill(const SkewShape& s, const Word& w) {
    Tableau t{s, {}};
    for (int r = 0; r < s.rows(); ++r) t.rows.emplace_back(s.row_length(r), 0);
    auto cells = s.cells();
    for (size_t k = 0; k < cells.size(); ++k) t.at(cells[k]) = w[k];
    return t;
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate({4}) == Partition{1, 1, 1, 1});
    CHECK(conjugate({}).empty());
    CHECK(conjugate({4, 3, 2, 2}) == transpose_cells({4, 3, 2, 2}));
    CHECK(conjugate({4, 3, 2, 2}) == Partition{4, 4, 2, 1});
    for (int n = 0; n <= 12; ++n)
        for (auto& p : partitions_of(n)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("partitions are listed in decreasing lexicographic order") {
    auto ps = partitions_of(5);
    CHECK(ps.size() == 7);
    CHECK(ps.front() == Partition{5});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1});
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
}

TEST_CASE("enumerate_syt") {
    CHECK(enumerate_syt(SkewShape({1})).size() == 1);
    auto five = enumerate_syt(SkewShape({3, 2}));
    REQUIRE(five.size() == 5);
    std::set<std::string> shown;
    for (auto& t : five) shown.insert(tableau_string(t));
    CHECK(shown == std::set<std::string>{"34/125", "24/135", "25/134", "35/124", "45/123"});

    SkewShape sk({2, 1}, {1});
    int brute = 0;
    for (auto& w : all_permutations(2)) brute += is_standard(brute_fill(sk, w));
    CHECK(enumerate_syt(sk).size() == static_cast<size_t>(brute));
    CHECK(brute == 2);

    std::map<Partition, long> memo;
    for (int n = 1; n <= 8; ++n)
        for (auto& p : partitions_of(n)) REQUIRE(static_cast<long>(enumerate_syt(SkewShape(p)).size()) == syt_count_dp(p, memo));

    auto ts = enumerate_syt(SkewShape({3, 2, 1}));
    CHECK(std::is_sorted(ts.begin(), ts.end(), [](auto& a, auto& b) { return row_reading_word(a) < row_reading_word(b); }));
}

TEST_CASE("reading words and signatures of the running examples") {
    Tableau t{SkewShape({4, 3, 2}), {{1, 2, 5, 7}, {3, 6, 9}, {4, 8}}};
    CHECK(word_string(row_reading_word(t)) == "483691257");
    CHECK(word_string(content_reading_word(t)) == "438162957");
    CHECK(signature(content_reading_word(t)) == "+--+-+-+");

    Tableau s{SkewShape({4, 1, 1}, {2}), {{1, 4}, {2}, {3}}};
    REQUIRE(is_standard(s));
    CHECK(word_string(row_reading_word(s)) == "3214");
    CHECK(word_string(content_reading_word(s)) == "3214");
    CHECK(signature(row_reading_word(s)) == "--+");

    CHECK(row_reading_word(superstandard({5})) == Word{1, 2, 3, 4, 5});
    Tableau col{SkewShape({1, 1, 1, 1}), {{1}, {2}, {3}, {4}}};
    CHECK(content_reading_word(col) == Word{4, 3, 2, 1});
    CHECK(signature({1, 2, 3, 4}) == "+++");
    CHECK(signature({1}).empty());
}

TEST_CASE("row and content words share a signature") {
    for (int n = 1; n <= 8; ++n)
        for (auto& s : skew_shapes_of_size(n)) {
            if (n == 8) continue;
            for (auto& t : enumerate_syt(s)) REQUIRE(signature(row_reading_word(t)) == signature(content_reading_word(t)));
        }
    // one 8-cell shape of each straight kind keeps the bound honest without the full skew sweep
    for (auto& p : partitions_of(8))
        for (auto& t : enumerate_syt(SkewShape(p))) REQUIRE(signature(row_reading_word(t)) == signature(content_reading_word(t)));
}

TEST_CASE("superstandard") {
    CHECK(superstandard({3, 2}).rows == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK(superstandard({2, 2}).rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    auto u = superstandard({4, 3, 1, 1});
    CHECK(u.rows == std::vector<std::vector<int>>{{1, 2, 3, 4}, {5, 6, 7}, {8}, {9}});
    CHECK(signature(content_reading_word(u)) == "+++-++--");
}

TEST_CASE("jeu de taquin") {
    auto straight = enumerate_syt(SkewShape({3, 1}))[2];
    CHECK(jdt_rectify(straight) == straight);

    Tableau s{SkewShape({4, 1, 1}, {2}), {{1, 4}, {2}, {3}}};
    CHECK(jdt_rectify(s) == insertion_tableau({3, 2, 1, 4}));

    for (int n = 1; n <= 7; ++n)
        for (auto& sh : skew_shapes_of_size(n))
            for (auto& x : enumerate_syt(sh)) REQUIRE(jdt_rectify(x) == insertion_tableau(row_reading_word(x)));
}

TEST_CASE("skew shape corpus") {
    std::vector<size_t> counts;
    for (int n = 1; n <= 7; ++n) counts.push_back(skew_shapes_of_size(n).size());
    CHECK(counts == std::vector<size_t>{1, 3, 9, 28, 87, 272, 850});
    for (auto& s : skew_shapes_of_size(5)) CHECK(skew_from_cells(s.cells()) == s);
    CHECK_THROWS(skew_from_cells({{0, 0}, {1, 1}}));
}

TEST_CASE("Yamanouchi words") {
    CHECK(is_yamanouchi({2, 5, 4, 3, 2, 4, 3, 1, 1, 2, 1}));
    CHECK_FALSE(is_yamanouchi({2, 3, 1, 3, 2, 1}));
    CHECK(is_yamanouchi({}));
    CHECK(standardize_yam({1, 1, 1, 1}) == Word{1, 2, 3, 4});
    CHECK_THROWS_AS(standardize_yam({1, 2}), std::invalid_argument);

    // brute force: the unique permutation of S_3 inserting to U_lambda with the letter pattern
    for (auto [yam, expect] : {std::pair{Word{1, 2, 1}, Word{1, 3, 2}}, std::pair{Word{2, 1, 1}, Word{3, 1, 2}}}) {
        std::vector<Word> hits;
        for (auto& w : all_permutations(3)) {
            bool pattern = true;
            for (int k = 0; k < 3; ++k) pattern = pattern && (yam[k] == 1) == (w[k] <= 2);
            if (pattern && insertion_tableau(w) == superstandard({2, 1})) hits.push_back(w);
        }
        REQUIRE(hits.size() == 1);
        CHECK(standardize_yam(yam) == hits[0]);
        CHECK(hits[0] == expect);
    }
}

TEST_CASE("SYam membership") {
    CHECK(syam_member({1, 3, 2}, {2, 1}));
    CHECK_FALSE(syam_member({1, 2, 3}, {2, 1}));
    CHECK(syam_member({1, 2, 3, 4}, {4}));

    for (int n = 1; n <= 7; ++n) {
        for (auto& lam : partitions_of(n)) {
            // Yamanouchi words of content lambda, generated letter by letter from the right
            std::set<Word> from_yam;
            std::vector<int> w(n), left = lam;
            std::function<void(int)> rec = [&](int pos) {
                if (pos < 0) {
                    from_yam.insert(standardize_yam(w));
                    return;
                }
                for (size_t x = 0; x < left.size(); ++x) {
                    if (!left[x]) continue;
                    int used = lam[x] - left[x];
                    if (x > 0 && used + 1 > lam[x - 1] - left[x - 1]) continue;
                    --left[x];
                    w[pos] = static_cast<int>(x) + 1;
                    rec(pos - 1);
                    ++left[x];
                }
            };
            rec(n - 1);
            std::set<Word> direct;
            for (auto& p : all_permutations(n))
                if (syam_member(p, lam)) direct.insert(p);
            REQUIRE(from_yam == direct);
        }
    }
}
