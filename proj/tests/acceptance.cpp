#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "deg/campaign.hpp"

using namespace deg;

namespace {

std::vector<std::string> notes;

bool expect(bool ok, const std::string& what) {
    if (!ok) notes.push_back(what);
    return ok;
}

bool campaign_ok(const std::string& name, int n = 0) {
    json r = run_campaign({name, n});
    std::cerr << "  " << name << " n=" << r["n"] << ": " << r["checked"] << " instances, " << r["failures"].size() << " failures\n";
    return expect(r["ok"].get<bool>(), name + " failed: " + r["failures"].dump());
}

bool criterion1() {
    bool ok = true;
    Tableau t{SkewShape({4, 3, 2}), {{1, 2, 5, 7}, {3, 6, 9}, {4, 8}}};
    ok &= expect(word_string(content_reading_word(t)) == "438162957", "content word");
    ok &= expect(word_string(row_reading_word(t)) == "483691257", "row word");
    ok &= expect(signature(content_reading_word(t)) == "+--+-+-+", "straight signature");

    Tableau s{SkewShape({4, 1, 1}, {2}), {{1, 4}, {2}, {3}}};
    ok &= expect(word_string(row_reading_word(s)) == "3214", "skew word");
    ok &= expect(signature(row_reading_word(s)) == "--+", "skew signature");

    auto pair = [](std::vector<std::vector<int>> a, std::vector<std::vector<int>> b) {
        return filling_from_tableaux({Tableau{SkewShape({3, 2, 2}, {1}), std::move(a)}, Tableau{SkewShape({3, 1, 1}, {2}), std::move(b)}});
    };
    TupleFilling f = pair({{1, 7}, {3, 6}, {4, 8}}, {{9}, {2}, {5}});
    ok &= expect(word_string(shifted_content_word(f)) == "453826179", "shifted content word");
    ok &= expect(signature(shifted_content_word(f)) == "---+++-+", "shifted content signature");
    ok &= expect(inv_k(f) == 3, "inv_2");

    TupleFilling g = pair({{1, 7}, {4, 6}, {5, 8}}, {{9}, {2}, {3}});
    TauWord tau = tau_of(g.tuple);
    ok &= expect(word_string(tau) == "456667899", "tau word");
    Word w = shifted_content_word(g);
    ok &= expect(word_string(w) == "534826179", "tau example word");
    ok &= expect(word_string(d_tau_move(w, 3, tau)) == "542836179", "D_3");
    ok &= expect(word_string(d_tau_move(w, 5, tau)) == "634825179", "D_5");

    Tableau mu{SkewShape({3, 3, 2, 1, 1}), {{2, 5, 10}, {6, 7, 8}, {3, 9}, {4}, {1}}};
    TupleFilling r = tr_from_filling(mu);
    ok &= expect(a_stat(r.tuple) == 3, "a");
    ok &= expect(mac_inv(r) == 1, "inv");
    ok &= expect(maj_stat(r.tuple) == 9, "maj");
    return ok;
}

bool criterion2() {
    bool ok = campaign_ok("axioms-std", 7);
    ok &= campaign_ok("theorem-4plus", 6);
    Graph f = load_graph(fixture_path());
    Outcome o = check_fixture(f);
    ok &= expect(o.ok, "fixture: " + o.reason);
    DegReport r = deg_report(f);
    ok &= expect(r.route_a == r.route_b && !r.route_a, "fixture routes");
    return ok;
}

bool criterion3() {
    bool ok = true;
    long shapes = 0;
    for (int n = 1; n <= 7; ++n)
        for (auto& s : skew_shapes_of_size(n)) {
            Outcome o = check_skew_lr(s);
            ++shapes;
            ok &= expect(o.ok, partition_string(s.outer) + "/" + partition_string(s.inner) + ": " + o.reason);
        }
    std::cerr << "  " << shapes << " skew shapes\n";
    return ok;
}

bool criterion4() {
    bool ok = campaign_ok("llt-n5");
    ok &= campaign_ok("llt-n6");
    ok &= campaign_ok("gap-tau", 6);
    return ok;
}

bool criterion5() { return campaign_ok("llt-expansion", 7); }

bool criterion6() {
    Outcome o = check_sharpness();
    if (!o.ok) notes.push_back("sharpness: " + o.reason);
    else std::cerr << "  " << o.info.dump() << "\n";
    return o.ok;
}

bool criterion7() { return campaign_ok("mac-expansion", 7); }

bool criterion8() {
    bool ok = true;
    for (auto& w : all_permutations(6)) {
        ok &= expect(rsk(w).Q == rsk(inverse(w)).P, "RSK duality at " + word_string(w));
        for (int i = 2; i < 6; ++i)
            for (int j = 2; j < 6; ++j) {
                Word a = knuth_move(dual_move(w, i), j), b = dual_move(knuth_move(w, j), i);
                ok &= expect(a == b && signature(a) == signature(b), "commutation at " + word_string(w));
            }
        if (!ok) return false;
    }

    for (auto& nu : llt_corpus()) {
        Graph g = build_llt_graph(nu);
        for (auto& c : component_sets(g)) {
            int inv = inv_of_word(nu, g.words[c[0]]);
            for (int v : c) ok &= expect(inv_of_word(nu, g.words[v]) == inv, "inv varies on " + tuple_string(nu));
        }
    }

    long cat = 1;
    for (int n = 1; n <= 10; ++n) {
        cat = cat * 2 * (2 * n - 1) / (n + 1);
        ok &= expect(static_cast<long>(all_tau_words(n).size()) == cat, "Catalan count at " + std::to_string(n));
    }

    for (int n = 1; n <= 7; ++n)
        for (auto& s : skew_shapes_of_size(n)) {
            bool avoids = !contains_subdiagram(s, {3, 3}) && !contains_subdiagram(s, {4});
            int d = tr_diam(s);
            ok &= expect((d <= 3) == avoids, "diameter criterion at " + partition_string(s.outer) + "/" + partition_string(s.inner));
            for (auto& r : tr_tuples(s)) ok &= expect(diam(r.tuple) == d, "ribbon diameter varies");
        }
    return ok;
}

}  // namespace

int main() {
    std::vector<std::function<bool()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                   criterion5, criterion6, criterion7, criterion8};
    bool all = true;
    for (size_t k = 0; k < criteria.size(); ++k) {
        notes.clear();
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[k]();
        } catch (const std::exception& e) {
            notes.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << k + 1 << ": " << (ok ? "PASS" : "FAIL") << std::endl;
        std::cerr << "  " << secs << " s\n";
        for (size_t i = 0; i < notes.size() && i < 5; ++i) std::cerr << "  " << notes[i] << "\n";
        all &= ok;
    }
    return all ? 0 : 1;
}
