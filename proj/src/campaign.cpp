#include "deg/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <set>
#include <thread>

namespace deg {

const std::vector<std::string> campaign_names = {"axioms-std", "theorem-4plus", "llt-n5",        "llt-n6",
                                                 "gap-tau",    "llt-expansion", "mac-expansion", "sharpness"};

int default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
    if (threads <= 0) threads = default_threads();
    threads = static_cast<int>(std::min<size_t>(threads, std::max<size_t>(count, 1)));
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](int id) {
        try {
            for (size_t i; (i = next++) < count;) body(i);
        } catch (...) {
            errors[id] = std::current_exception();
            next = count;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string fixture_path() { return std::string(DEG_DATA_DIR) + "/f_loop_m2.json"; }

namespace {

Outcome failed(std::string reason, json info = json::object()) { return {false, std::move(reason), std::move(info)}; }

std::string first_failure(const DegReport& r) {
    for (auto& a : r.axioms)
        if (!a.ok) return "axiom " + a.axiom + ": " + a.detail;
    return {};
}

Outcome all_axioms_pass(const Graph& g) {
    DegReport r = deg_report(g);
    json info{{"vertices", g.size()}};
    if (r.route_a != r.route_b) return failed("axiom routes disagree; " + first_failure(r), info);
    if (!r.route_a || !r.axioms[6].ok) return failed(first_failure(r), info);
    return {true, {}, info};
}

// P maps the component bijectively onto one standard graph, edges included
bool p_is_isomorphism(const Graph& c, Partition& shape, std::string& why) {
    PMorphism pm = induced_P_morphism(c);
    std::set<int> image(pm.map.begin(), pm.map.end());
    if (static_cast<int>(image.size()) != c.size()) {
        why = "P is not injective";
        return false;
    }
    shape = pm.tags[pm.map[0]];
    int target = 0;
    for (auto& t : pm.tags) target += t == shape;
    for (int v : pm.map)
        if (pm.tags[v] != shape) {
            why = "P meets two shapes";
            return false;
        }
    if (target != c.size()) {
        why = "P misses part of the standard graph";
        return false;
    }
    if (!check_morphism(pm.map, c, pm.codomain, &why)) return false;
    size_t edges = 0;
    for (auto& e : pm.codomain.edges()) edges += pm.tags[e.u] == shape;
    if (edges != c.edges().size()) {
        why = "P drops edges";
        return false;
    }
    return true;
}

json tau_json(const TauWord& t) { return t; }

}  // namespace

Outcome check_standard_axioms(const Partition& lambda) { return all_axioms_pass(build_standard_deg(lambda)); }

Outcome check_skew_axioms(const SkewShape& shape) { return all_axioms_pass(build_skew_deg(shape)); }

Outcome check_skew_lr(const SkewShape& shape) {
    Graph g = build_skew_deg(shape);
    std::map<Partition, long> classified;
    for (auto& c : components(g)) ++classified[classify_component(c)];
    std::vector<Word> reading;
    for (auto& t : enumerate_syt(shape)) reading.push_back(row_reading_word(t));
    auto yam = syam_schur_expansion(reading);
    json info{{"components", json::array()}};
    for (auto& [lam, m] : classified) info["components"].push_back({{"lambda", lam}, {"mult", m}});
    if (classified != yam) return failed("classification multiplicities differ from the Yamanouchi count", info);
    return {true, {}, info};
}

Outcome check_route_agreement(const Graph& g) {
    DegReport r = deg_report(g);
    json info{{"deg", r.route_a}, {"vertices", g.size()}};
    if (r.route_a != r.route_b) return failed("axiom routes disagree; " + first_failure(r), info);
    return {true, {}, info};
}

Outcome check_fixture(const Graph& f) {
    DegReport r = deg_report(f);
    json info = json::object();
    for (auto& a : r.axioms) info[a.axiom] = a.ok;
    for (int k = 0; k < 5; ++k)
        if (!r.axioms[k].ok) return failed("fixture fails axiom " + r.axioms[k].axiom, info);
    if (r.axioms[5].ok) return failed("fixture satisfies axiom 6", info);
    if (r.axioms[6].ok) return failed("fixture satisfies axiom 4+", info);
    FDetection d = detect_f_family(f);
    info["f_family"] = d.found;
    info["f_copies"] = d.copies;
    if (!d.found) return failed("loop family not detected", info);
    return {true, {}, info};
}

Outcome check_tau_scope(const TauWord& tau, const std::vector<Word>& scope) {
    Graph g = build_gn_tau(tau);
    std::set<Word> in(scope.begin(), scope.end());
    int checked = 0, outside_bad = 0;
    for (auto& vs : component_sets(g)) {
        bool meets = false, inside = true;
        for (int v : vs) {
            bool here = in.count(g.words[v]) > 0;
            meets = meets || here;
            inside = inside && here;
        }
        Graph c = induced_subgraph(g, vs);
        if (!meets) {
            outside_bad += !deg_report(c).route_a;
            continue;
        }
        ++checked;
        json w{{"word", g.words[vs[0]]}, {"size", vs.size()}};
        if (!inside) return failed("component leaves the realizable word set", w);
        try {
            if (!is_deg(c)) return failed("component is not a dual equivalence graph: " + first_failure(deg_report(c)), w);
        } catch (const RouteMismatch& e) {
            return failed(e.what(), w);
        }
    }
    return {true, {}, {{"components", checked}, {"outside_non_deg", outside_bad}}};
}

Outcome check_gap_tau(const TauWord& tau) {
    Graph g = build_gn_tau(tau);
    int checked = 0;
    for (auto& c : components(g)) {
        ++checked;
        json w{{"word", c.words[0]}};
        try {
            if (!is_deg(c)) return failed("component is not a dual equivalence graph: " + first_failure(deg_report(c)), w);
        } catch (const RouteMismatch& e) {
            return failed(e.what(), w);
        }
        Partition shape;
        std::string why;
        if (!p_is_isomorphism(c, shape, why)) return failed("P is not an isomorphism: " + why, w);
        if (classify_component(c) != shape) return failed("classification disagrees with P", w);
    }
    return {true, {}, {{"components", checked}}};
}

Outcome check_llt_tuple(const SkewTuple& nu) {
    Graph g = build_llt_graph(nu);
    for (auto* ax : {check_axiom1, check_axiom2, check_axiom3, check_axiom5}) {
        auto r = ax(g);
        if (!r.ok) return failed("axiom " + r.axiom + ": " + r.detail);
    }
    int d = diam(nu);
    int comps = 0;
    for (auto& vs : component_sets(g)) {
        ++comps;
        int inv0 = inv_of_word(nu, g.words[vs[0]]), yam = 0;
        for (int v : vs) {
            if (inv_of_word(nu, g.words[v]) != inv0) return failed("inv is not constant on the component of " + g.label[vs[0]]);
            yam += syam_member(g.words[v], rsk_shape(g.words[v]));
        }
        if (d <= 3 && yam != 1)
            return failed("component of " + g.label[vs[0]] + " carries " + std::to_string(yam) + " Yamanouchi words");
    }
    json info{{"diam", d}, {"components", comps}, {"vertices", g.size()}};
    if (d <= 3) {
        auto cmp = f_equal(llt_f_expansion(nu), expand(yamanouchi_sum(nu)));
        if (!cmp.equal) return failed("expansions differ at F[" + cmp.witness + "]", info);
    }
    return {true, {}, info};
}

Outcome check_mac_shape(const Partition& mu) {
    SkewShape s(mu);
    FExpansion direct = macdonald_f_expansion(s);
    auto cmp = f_equal(direct, macdonald_f_expansion_llt(s));
    if (!cmp.equal) return failed("filling sum and LLT sum differ at F[" + cmp.witness + "]");
    SchurExpansion e = macdonald_schur_expansion(s, MacMode::direct);
    cmp = f_equal(expand(e), direct);
    if (!cmp.equal) return failed("Schur expansion does not re-expand at F[" + cmp.witness + "]");
    return {true, {}, {{"terms", e.terms.size()}}};
}

Outcome check_mac_conjugate(const Partition& mu) {
    auto cmp = f_equal(macdonald_f_expansion(SkewShape(mu)).swap_qt(), macdonald_f_expansion(SkewShape(conjugate(mu))));
    if (!cmp.equal) return failed("conjugate symmetry fails at F[" + cmp.witness + "]");
    return {};
}

Outcome check_sharpness() {
    json rows = json::array();
    bool ok = true;
    auto record = [&](const std::string& what, const BigInt& full, const BigInt& yam) {
        rows.push_back({{"case", what}, {"full", full.str()}, {"yamanouchi", yam.str()}});
        ok = ok && full == 1 && yam == 0;
    };
    Partition l22{2, 2}, l42{4, 2};
    for (auto nu : {straight_tuple({{2}, {1}, {1}}), straight_tuple({{1}, {1}, {1}, {1}})}) {
        BigInt full = extract_schur(llt_f_expansion(nu)).coeff(l22).coeff(2, 0);
        BigInt yam = yamanouchi_sum(nu).coeff(l22).coeff(2, 0);
        record("llt " + tuple_string(nu) + " s(2,2)", full, yam);
    }
    for (auto [mu, lam] : {std::pair{Partition{4}, l22}, std::pair{Partition{3, 3}, l42}}) {
        SkewShape s(mu);
        BigInt full = extract_schur(macdonald_f_expansion(s)).coeff(lam).coeff(2, 0);
        BigInt yam = mac_yamanouchi_sum(s).coeff(lam).coeff(2, 0);
        record("mac " + partition_string(mu) + " s" + partition_string(lam), full, yam);
    }
    Outcome o{ok, ok ? "" : "a sharpness coefficient differs from 1 / 0", {{"cases", rows}}};
    return o;
}

namespace {

bool convex(const std::set<std::pair<int, int>>& S) {
    for (auto [r1, c1] : S)
        for (auto [r2, c2] : S)
            if (r1 <= r2 && c1 <= c2)
                for (int r = r1; r <= r2; ++r)
                    for (int c = c1; c <= c2; ++c)
                        if (!S.count({r, c})) return false;
    return true;
}

// cell sets of skew shapes with the given number of cells on each diagonal, up to translation
const std::vector<std::vector<std::pair<int, int>>>& placements(const std::vector<std::pair<int, int>>& mult, int n,
                                                                std::map<std::vector<std::pair<int, int>>, std::vector<std::vector<std::pair<int, int>>>>& cache) {
    auto it = cache.find(mult);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<std::pair<int, int>>> out;
    size_t d = mult.size();
    std::vector<int> start(d, 0);
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == d) {
            std::set<std::pair<int, int>> S;
            for (size_t a = 0; a < d; ++a)
                for (int t = 0; t < mult[a].second; ++t) S.insert({start[a] + t, start[a] + t + mult[a].first});
            if (convex(S)) out.emplace_back(S.begin(), S.end());
            return;
        }
        for (int a = -n; a <= n; ++a) {
            start[j] = a;
            rec(j + 1);
        }
    };
    if (d > 0) rec(1);
    return cache[mult] = out;
}

}  // namespace

LltScope llt_scope(int n) {
    LltScope scope;
    std::map<TauWord, std::set<Word>> words;
    std::set<std::pair<TauWord, std::vector<std::pair<int, int>>>> seen;
    std::map<std::vector<std::pair<int, int>>, std::vector<std::vector<std::pair<int, int>>>> cache;
    auto perms = all_permutations(n);
    for (int k = 1; k <= 7; ++k) {
        std::vector<int> seq{0};
        std::function<void()> rec = [&]() {
            if (static_cast<int>(seq.size()) < n) {
                for (int d = 0; d <= k + 1; ++d) {
                    seq.push_back(seq.back() + d);
                    rec();
                    seq.pop_back();
                }
                return;
            }
            if (diam_of_contents(seq, k) > 3) return;
            TauWord tau = tau_of_contents(seq, k);
            std::map<int, std::map<int, int>> comp;  // component -> content -> count
            for (int s : seq) ++comp[s % k][s / k];
            std::vector<int> keys;
            std::vector<const std::vector<std::vector<std::pair<int, int>>>*> options;
            for (auto& [i, m] : comp) {
                keys.push_back(i);
                options.push_back(&placements(std::vector<std::pair<int, int>>(m.begin(), m.end()), n, cache));
            }
            std::vector<size_t> pick(keys.size(), 0);
            std::function<void(size_t)> choose = [&](size_t j) {
                if (j < keys.size()) {
                    for (pick[j] = 0; pick[j] < options[j]->size(); ++pick[j]) choose(j + 1);
                    return;
                }
                // (shifted content, row, component, col)
                std::vector<std::array<int, 4>> cells;
                for (size_t a = 0; a < keys.size(); ++a)
                    for (auto [r, c] : (*options[a])[pick[a]]) cells.push_back({k * (c - r) + keys[a], r, keys[a], c});
                std::sort(cells.begin(), cells.end());
                std::map<std::array<int, 3>, int> idx;
                for (size_t p = 0; p < cells.size(); ++p) idx[{cells[p][2], cells[p][1], cells[p][3]}] = static_cast<int>(p);
                std::vector<std::pair<int, int>> cons;
                for (size_t p = 0; p < cells.size(); ++p) {
                    auto [sv, r, i, c] = cells[p];
                    for (std::array<int, 3> nb : {std::array<int, 3>{i, r, c + 1}, std::array<int, 3>{i, r + 1, c}}) {
                        auto f = idx.find(nb);
                        if (f != idx.end()) cons.push_back({static_cast<int>(p), f->second});
                    }
                }
                std::sort(cons.begin(), cons.end());
                if (!seen.insert({tau, cons}).second) return;
                auto& bucket = words[tau];
                for (auto& w : perms) {
                    bool ok = true;
                    for (auto [a, b] : cons)
                        if (w[a] > w[b]) {
                            ok = false;
                            break;
                        }
                    if (ok) bucket.insert(w);
                }
            };
            choose(0);
        };
        rec();
    }
    scope.data = static_cast<long>(seen.size());
    for (auto& [t, s] : words) scope.words[t] = std::vector<Word>(s.begin(), s.end());
    return scope;
}

std::vector<SkewTuple> straight_tuples(int k, int max_size) {
    std::vector<Partition> parts;
    for (int m = 1; m <= max_size; ++m)
        for (auto& p : partitions_of(m)) parts.push_back(p);
    std::vector<SkewTuple> out;
    std::vector<Partition> cur;
    std::function<void(int)> rec = [&](int left) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(straight_tuple(cur));
            return;
        }
        int rest = k - static_cast<int>(cur.size()) - 1;
        for (auto& p : parts) {
            if (partition_size(p) + rest > left) continue;
            cur.push_back(p);
            rec(left - partition_size(p));
            cur.pop_back();
        }
    };
    rec(max_size);
    return out;
}

std::vector<SkewTuple> llt_corpus(int max2, int max3) {
    auto out = straight_tuples(2, max2);
    for (auto& nu : straight_tuples(3, max3))
        if (diam(nu) <= 3) out.push_back(nu);
    return out;
}

namespace {

struct Item {
    json witness;
    std::function<Outcome()> run;
};

json sweep(const std::string& name, int n, std::vector<Item> items, int threads, json summary = json::object()) {
    std::vector<Outcome> results(items.size());
    parallel_for(items.size(), threads, [&](size_t i) {
        try {
            results[i] = items[i].run();
        } catch (const std::exception& e) {
            results[i] = failed(std::string("exception: ") + e.what());
        }
    });
    json failures = json::array();
    std::map<std::string, long> totals;
    for (size_t i = 0; i < items.size(); ++i) {
        for (auto& [key, val] : results[i].info.items())
            if (val.is_number_integer()) totals[key] += val.get<long>();
        if (results[i].ok) continue;
        json w = items[i].witness;
        w["reason"] = results[i].reason;
        if (!results[i].info.empty()) w["info"] = results[i].info;
        failures.push_back(w);
    }
    for (auto& [key, val] : totals) summary["total_" + key] = val;
    return {{"campaign", name}, {"n", n}, {"ok", failures.empty()}, {"checked", items.size()}, {"failures", failures}, {"summary", summary}};
}

Item standard_item(const Partition& lam) { return {{{"kind", "standard"}, {"lambda", lam}}, [lam] { return check_standard_axioms(lam); }}; }

Item skew_item(const SkewShape& s) {
    return {{{"kind", "skew"}, {"outer", s.outer}, {"inner", s.inner}}, [s] { return check_skew_axioms(s); }};
}

Item route_item(json witness, std::function<Graph()> make) {
    return {std::move(witness), [make] { return check_route_agreement(make()); }};
}

}  // namespace

json run_campaign(const CampaignOptions& opt) {
    const std::string& name = opt.name;
    if (std::find(campaign_names.begin(), campaign_names.end(), name) == campaign_names.end())
        throw CampaignError("unknown campaign " + name);
    int n = opt.n;
    if (n == 0) {
        if (name == "llt-n5") n = 5;
        else if (name == "llt-n6" || name == "gap-tau" || name == "theorem-4plus") n = 6;
        else n = 7;
    }
    if (n < 1) throw CampaignError("bound must be positive");
    if (n > 8 && !opt.force) throw CampaignError("bound " + std::to_string(n) + " exceeds 8; pass --force to run it anyway");
    if ((name == "llt-n5" && n != 5) || (name == "llt-n6" && n != 6)) throw CampaignError(name + " has a fixed bound");

    std::vector<Item> items;
    json summary = json::object();
    if (name == "axioms-std") {
        for (int m = 1; m <= n; ++m)
            for (auto& lam : partitions_of(m)) items.push_back(standard_item(lam));
        for (int m = 1; m <= n; ++m)
            for (auto& s : skew_shapes_of_size(m))
                if (!s.inner.empty()) items.push_back(skew_item(s));
    } else if (name == "theorem-4plus") {
        for (int m = 1; m <= n; ++m)
            for (auto& s : skew_shapes_of_size(m))
                items.push_back(route_item({{"kind", "route-skew"}, {"outer", s.outer}, {"inner", s.inner}}, [s] { return build_skew_deg(s); }));
        for (int m = 3; m <= n; ++m)
            for (auto& tau : all_tau_words(m))
                items.push_back(route_item({{"kind", "route-tau"}, {"tau", tau}}, [tau] { return build_gn_tau(tau); }));
        for (int k = 2; k <= 4; ++k)
            for (auto& nu : straight_tuples(k, n))
                if (nu.size() >= 3)
                    items.push_back(route_item({{"kind", "route-tuple"}, {"tuple", to_json(nu)}}, [nu] { return build_llt_graph(nu); }));
        items.push_back({{{"kind", "fixture"}}, [] { return check_fixture(load_graph(fixture_path())); }});
    } else if (name == "llt-n5" || name == "llt-n6") {
        auto scope = std::make_shared<LltScope>(llt_scope(n));
        summary["tau_count"] = scope->words.size();
        summary["data_count"] = scope->data;
        for (auto& [tau, ws] : scope->words)
            items.push_back({{{"kind", "tau-scope"}, {"tau", tau_json(tau)}}, [scope, tau] { return check_tau_scope(tau, scope->words.at(tau)); }});
    } else if (name == "gap-tau") {
        for (auto& tau : all_tau_words(n)) {
            bool gap = true;
            for (int i = 1; i <= n; ++i) gap = gap && tau[i - 1] <= i + 2;
            if (gap) items.push_back({{{"kind", "gap-tau"}, {"tau", tau_json(tau)}}, [tau] { return check_gap_tau(tau); }});
        }
    } else if (name == "llt-expansion") {
        int max3 = std::min(n, 6);
        for (auto& nu : llt_corpus(n, max3))
            items.push_back({{{"kind", "tuple"}, {"tuple", to_json(nu)}}, [nu] { return check_llt_tuple(nu); }});
    } else if (name == "mac-expansion") {
        for (int m = 1; m <= n; ++m)
            for (auto& mu : partitions_of(m)) {
                if (mu[0] <= 3 && (mu.size() < 2 || mu[1] <= 2))
                    items.push_back({{{"kind", "mac"}, {"mu", mu}}, [mu] { return check_mac_shape(mu); }});
                if (m <= std::min(n, 6))
                    items.push_back({{{"kind", "mac-conjugate"}, {"mu", mu}}, [mu] { return check_mac_conjugate(mu); }});
            }
    } else if (name == "sharpness") {
        items.push_back({{{"kind", "sharpness"}}, [] { return check_sharpness(); }});
    }
    json report = sweep(name, n, std::move(items), opt.threads, summary);
    if (name == "sharpness") {
        Outcome o = check_sharpness();
        report["summary"]["cases"] = o.info["cases"];
    }
    return report;
}

Outcome replay(const json& w) {
    std::string kind = w.at("kind");
    if (kind == "standard") return check_standard_axioms(partition_from_json(w.at("lambda")));
    if (kind == "skew") return check_skew_axioms(SkewShape(partition_from_json(w.at("outer")), partition_from_json(w.at("inner"))));
    if (kind == "lr") return check_skew_lr(SkewShape(partition_from_json(w.at("outer")), partition_from_json(w.at("inner"))));
    if (kind == "route-skew")
        return check_route_agreement(build_skew_deg(SkewShape(partition_from_json(w.at("outer")), partition_from_json(w.at("inner")))));
    if (kind == "route-tau") return check_route_agreement(build_gn_tau(w.at("tau").get<TauWord>()));
    if (kind == "route-tuple") return check_route_agreement(build_llt_graph(tuple_from_json(w.at("tuple"))));
    if (kind == "fixture") return check_fixture(load_graph(w.value("path", fixture_path())));
    if (kind == "tau-scope") {
        TauWord tau = w.at("tau").get<TauWord>();
        auto scope = llt_scope(static_cast<int>(tau.size()));
        auto it = scope.words.find(tau);
        if (it == scope.words.end()) return failed("tau is not realized by a tuple of diameter at most 3");
        return check_tau_scope(tau, it->second);
    }
    if (kind == "gap-tau") return check_gap_tau(w.at("tau").get<TauWord>());
    if (kind == "tuple") return check_llt_tuple(tuple_from_json(w.at("tuple")));
    if (kind == "mac") return check_mac_shape(partition_from_json(w.at("mu")));
    if (kind == "mac-conjugate") return check_mac_conjugate(partition_from_json(w.at("mu")));
    if (kind == "sharpness") return check_sharpness();
    throw CampaignError("unknown witness kind " + kind);
}

}  // namespace deg
