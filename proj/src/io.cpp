#include "deg/io.hpp"

#include <fstream>

namespace deg {

json to_json(const Graph& g) {
    json j;
    j["m"] = g.m;
    j["n"] = g.n;
    j["N"] = g.N;
    j["signed"] = g.is_signed;
    json vs = json::array();
    for (int v = 0; v < g.size(); ++v) {
        json x{{"id", v}, {"sig", g.sig[v]}};
        if (!g.label[v].empty()) x["label"] = g.label[v];
        if (!g.words.empty()) x["word"] = g.words[v];
        vs.push_back(x);
    }
    j["vertices"] = vs;
    json es = json::object();
    for (auto& e : g.edges()) es[std::to_string(e.color)].push_back({e.u, e.v});
    j["edges"] = es;
    return j;
}

Graph graph_from_json(const json& j) {
    Graph g;
    g.m = j.value("m", 1);
    g.n = j.at("n").get<int>();
    g.N = j.value("N", g.n);
    g.is_signed = j.value("signed", true);
    auto& vs = j.at("vertices");
    for (size_t k = 0; k < vs.size(); ++k) {
        if (vs[k].at("id").get<size_t>() != k) throw std::invalid_argument("vertex ids must be 0..V-1 in order");
        g.add_vertex(vs[k].value("sig", std::string()), vs[k].value("label", std::string()));
        if (vs[k].contains("word")) g.words.push_back(vs[k]["word"].get<Word>());
    }
    if (!g.words.empty() && static_cast<int>(g.words.size()) != g.size()) throw std::invalid_argument("either every vertex has a word or none");
    for (auto& [color, list] : j.at("edges").items())
        for (auto& e : list) g.add_edge(std::stoi(color), e.at(0).get<int>(), e.at(1).get<int>());
    g.finalize();
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return graph_from_json(json::parse(in));
}

json to_json(const QTPoly& p) {
    json a = json::array();
    for (auto& [k, c] : p.terms()) {
        json coeff;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) coeff = static_cast<long long>(c);
        else coeff = c.str();
        a.push_back({{"q", k.first}, {"t", k.second}, {"c", coeff}});
    }
    return a;
}

QTPoly qtpoly_from_json(const json& j) {
    QTPoly p;
    if (j.is_number_integer()) {
        p.add(0, 0, BigInt(j.get<long long>()));
        return p;
    }
    for (auto& term : j) {
        auto& c = term.at("c");
        BigInt v = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
        p.add(term.value("q", 0), term.value("t", 0), v);
    }
    return p;
}

FExpansion fexp_from_json(const json& j) {
    FExpansion f{j.at("n").get<int>(), {}};
    for (auto& [sig, c] : j.at("terms").items()) {
        for (char ch : sig)
            if (ch != '+' && ch != '-') throw std::invalid_argument("signature keys use only '+' and '-'");
        f.add(sig, qtpoly_from_json(c));
    }
    return f;
}

json to_json(const FExpansion& f) {
    json terms = json::object();
    for (auto& [sig, c] : f.terms) terms[sig] = to_json(c);
    return {{"n", f.n}, {"terms", terms}};
}

json to_json(const SchurExpansion& s) {
    json terms = json::array();
    // largest partitions first, matching the usual display
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) terms.push_back({{"lambda", it->first}, {"coeff", to_json(it->second)}});
    return {{"n", s.n}, {"terms", terms}};
}

json to_json(const AxiomReport& r) {
    json j{{"axiom", r.axiom}, {"ok", r.ok}};
    if (!r.ok) {
        j["detail"] = r.detail;
        j["witness"] = r.vertices;
        j["color"] = r.color;
    }
    return j;
}

json to_json(const SkewShape& s) { return {{"outer", s.outer}, {"inner", s.inner}}; }

json to_json(const Tableau& t) { return {{"shape", to_json(t.shape)}, {"rows", t.rows}}; }

Partition partition_from_json(const json& j) {
    Partition p = j.get<Partition>();
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + j.dump());
    return p;
}

SkewTuple tuple_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("tuple must be a nonempty array of [outer, inner] pairs");
    SkewTuple nu;
    for (auto& s : j) {
        if (s.is_array() && s.size() == 2 && s[0].is_array()) nu.shapes.emplace_back(partition_from_json(s[0]), partition_from_json(s[1]));
        else if (s.is_object()) nu.shapes.emplace_back(partition_from_json(s.at("outer")), partition_from_json(s.value("inner", json::array())));
        else nu.shapes.emplace_back(partition_from_json(s));
    }
    return nu;
}

json to_json(const SkewTuple& nu) {
    json a = json::array();
    for (auto& s : nu.shapes) a.push_back({s.outer, s.inner});
    return a;
}

}  // namespace deg
