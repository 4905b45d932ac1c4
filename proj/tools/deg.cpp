#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deg/campaign.hpp"

using namespace deg;

namespace {

struct Usage : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "3,2", "[3,2]" or "32"
Partition parse_partition(std::string s) {
    if (s.empty() || s == "[]") return {};
    json j;
    if (s.front() == '[') {
        j = json::parse(s);
    } else if (s.find(',') != std::string::npos) {
        j = json::parse("[" + s + "]");
    } else {
        j = json::array();
        for (char c : s) {
            if (c < '0' || c > '9') throw Usage("bad partition " + s);
            j.push_back(c - '0');
        }
    }
    return partition_from_json(j);
}

TauWord parse_tau(const std::string& s) {
    TauWord t;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        for (std::string tok; std::getline(ss, tok, ',');) t.push_back(std::stoi(tok));
    } else {
        for (char c : s) t.push_back(c - '0');
    }
    if (!is_valid_tau(t)) throw Usage("malformed tau word " + s);
    return t;
}

json read_json_arg(const std::string& s) {
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) return json::parse(s);
    std::ifstream in(s);
    if (!in) throw Usage("cannot open " + s);
    return json::parse(in);
}

struct GraphSource {
    std::string partition, outer, inner, tau, file;
    int gn = 0;

    void add(CLI::App* app) {
        app->add_option("--partition", partition, "standard graph of a partition, e.g. 3,2");
        app->add_option("--outer", outer, "outer shape of a skew graph");
        app->add_option("--inner", inner, "inner shape of a skew graph");
        app->add_option("--gn", gn, "graph on all permutations of n");
        app->add_option("--tau", tau, "graph on all permutations with tau-controlled moves");
        app->add_option("--file", file, "graph JSON file");
    }

    Graph build() const {
        int given = !partition.empty() + !outer.empty() + !tau.empty() + !file.empty() + (gn > 0);
        if (given != 1) throw Usage("give exactly one of --partition, --outer, --gn, --tau, --file");
        if (!partition.empty()) return build_standard_deg(parse_partition(partition));
        if (!outer.empty()) return build_skew_deg(SkewShape(parse_partition(outer), parse_partition(inner)));
        if (gn > 0) return build_gn(gn);
        if (!tau.empty()) return build_gn_tau(parse_tau(tau));
        return load_graph(file);
    }
};

void print(const json& j, const std::string& text, const std::string& out) {
    if (out == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string report_text(const DegReport& r) {
    std::string s;
    for (auto& a : r.axioms) s += "axiom " + a.axiom + ": " + (a.ok ? "ok" : "FAIL  " + a.detail) + "\n";
    s += std::string("dual equivalence graph: ") + (r.route_a ? "yes" : "no") + "\n";
    return s;
}

json report_json(const DegReport& r) {
    json a = json::array();
    for (auto& x : r.axioms) a.push_back(to_json(x));
    return {{"axioms", a}, {"deg", r.route_a}, {"routes_agree", r.route_a == r.route_b}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual equivalence graphs, LLT and Macdonald expansions"};
    app.require_subcommand(1);
    std::string out = "text";
    bool seedless = false;
    app.add_option("--out", out, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--seedless", seedless, "accepted for scripts; nothing here is random");

    auto* rsk_cmd = app.add_subcommand("rsk", "insertion and recording tableaux of a permutation");
    std::string word;
    rsk_cmd->add_option("word", word, "one-line permutation, digits or comma separated")->required();

    auto* graph_cmd = app.add_subcommand("graph", "signed colored graphs");
    graph_cmd->require_subcommand(1);
    GraphSource gsrc;
    bool build_dot = false;
    auto* g_build = graph_cmd->add_subcommand("build", "build a graph and print it");
    gsrc.add(g_build);
    g_build->add_flag("--dot", build_dot, "print Graphviz instead");
    auto* g_dot = graph_cmd->add_subcommand("dot", "Graphviz rendering");
    gsrc.add(g_dot);
    auto* g_check = graph_cmd->add_subcommand("check", "check the axioms");
    gsrc.add(g_check);

    auto* llt_cmd = app.add_subcommand("llt", "LLT tuples");
    llt_cmd->require_subcommand(1);
    std::string tuple_arg;
    bool f_only = false, llt_dot = false;
    auto* l_expand = llt_cmd->add_subcommand("expand", "Schur expansion of the LLT polynomial");
    l_expand->add_option("--tuple", tuple_arg, "e.g. [[[2],[]],[[1],[]]]")->required();
    l_expand->add_flag("--f-only", f_only, "print the quasisymmetric expansion instead");
    auto* l_graph = llt_cmd->add_subcommand("graph", "the LLT graph");
    l_graph->add_option("--tuple", tuple_arg)->required();
    l_graph->add_flag("--dot", llt_dot);
    auto* l_check = llt_cmd->add_subcommand("check-deg", "check the axioms on the LLT graph");
    l_check->add_option("--tuple", tuple_arg)->required();

    auto* mac_cmd = app.add_subcommand("mac", "modified Macdonald polynomials");
    mac_cmd->require_subcommand(1);
    std::string shape_arg, inner_arg;
    bool conj = false;
    auto* m_expand = mac_cmd->add_subcommand("expand", "Schur expansion");
    m_expand->add_option("--shape", shape_arg)->required();
    m_expand->add_option("--inner", inner_arg);
    m_expand->add_flag("--conjugate", conj, "use the conjugate shape with q and t exchanged");
    m_expand->add_flag("--f-only", f_only);

    auto* camp_cmd = app.add_subcommand("campaign", "verification campaigns");
    camp_cmd->require_subcommand(1);
    CampaignOptions copt;
    std::string replay_arg, report_path;
    auto* c_run = camp_cmd->add_subcommand("run", "run a named campaign");
    c_run->add_option("name", copt.name)->check(CLI::IsMember(campaign_names));
    c_run->add_option("--n", copt.n, "size bound");
    c_run->add_option("--threads", copt.threads, "worker count");
    c_run->add_flag("--force", copt.force, "allow bounds above 8");
    c_run->add_option("--replay", replay_arg, "failure witness (JSON text or file)");
    c_run->add_option("--report", report_path, "also write the JSON report here");

    auto* schur_cmd = app.add_subcommand("schur", "Schur functions");
    schur_cmd->require_subcommand(1);
    std::string fexp_arg;
    auto* s_extract = schur_cmd->add_subcommand("extract", "Schur expansion of an F expansion");
    s_extract->add_option("input", fexp_arg, "F expansion JSON (text or file)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*rsk_cmd) {
            Word w = parse_word(word);
            RSK r = rsk(w);
            json j{{"word", w}, {"P", r.P.rows}, {"Q", r.Q.rows}, {"shape", r.P.shape.outer}};
            print(j, "P " + tableau_string(r.P) + "\nQ " + tableau_string(r.Q) + "\nshape " + partition_string(r.P.shape.outer) + "\n", out);
            return 0;
        }
        if (*graph_cmd) {
            Graph g = gsrc.build();
            if (*g_dot || (*g_build && build_dot)) {
                std::cout << to_dot(g);
                return 0;
            }
            if (*g_build) {
                std::string text;
                for (int v = 0; v < g.size(); ++v) {
                    text += g.label[v] + " " + g.sig[v];
                    for (auto [c, u] : g.adj(v)) text += " " + std::to_string(c) + ":" + g.label[u];
                    text += "\n";
                }
                print(to_json(g), text, out);
                return 0;
            }
            DegReport r = deg_report(g);
            print(report_json(r), report_text(r), out);
            return r.route_a == r.route_b ? 0 : 1;
        }
        if (*llt_cmd) {
            SkewTuple nu = tuple_from_json(read_json_arg(tuple_arg));
            if (*l_expand) {
                if (f_only) {
                    FExpansion f = llt_f_expansion(nu);
                    print(to_json(f), to_string(f) + "\n", out);
                } else {
                    SchurExpansion s = llt_schur_expansion(nu);
                    print(to_json(s), to_string(s) + "\n", out);
                }
                return 0;
            }
            Graph g = build_llt_graph(nu);
            if (*l_graph) {
                if (llt_dot) std::cout << to_dot(g);
                else print(to_json(g), "tau " + word_string(tau_of(nu)) + "\ndiam " + std::to_string(diam(nu)) + "\nvertices " +
                                           std::to_string(g.size()) + "\ncomponents " + std::to_string(component_sets(g).size()) + "\n",
                           out);
                return 0;
            }
            DegReport r = deg_report(g);
            json j = report_json(r);
            j["diam"] = diam(nu);
            print(j, "diam " + std::to_string(diam(nu)) + "\n" + report_text(r), out);
            return r.route_a == r.route_b ? 0 : 1;
        }
        if (*mac_cmd) {
            SkewShape s(parse_partition(shape_arg), parse_partition(inner_arg));
            if (f_only) {
                FExpansion f = macdonald_f_expansion(s);
                print(to_json(f), to_string(f) + "\n", out);
            } else {
                SchurExpansion e = macdonald_schur_expansion(s, conj ? MacMode::conjugate : MacMode::direct);
                print(to_json(e), to_string(e) + "\n", out);
            }
            return 0;
        }
        if (*camp_cmd) {
            if (!replay_arg.empty()) {
                json w = read_json_arg(replay_arg);
                if (w.contains("failures")) {
                    if (w["failures"].empty()) throw Usage("report has no failures to replay");
                    w = w["failures"][0];
                }
                Outcome o = replay(w);
                json j{{"witness", w}, {"ok", o.ok}, {"reason", o.reason}, {"info", o.info}};
                print(j, std::string(o.ok ? "ok" : "FAIL " + o.reason) + "\n", out);
                return o.ok ? 0 : 1;
            }
            if (copt.name.empty()) throw Usage("campaign name required");
            auto t0 = std::chrono::steady_clock::now();
            json rep = run_campaign(copt);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cerr << copt.name << ": " << secs << " s\n";
            if (!report_path.empty()) std::ofstream(report_path) << rep.dump(2) << "\n";
            std::string text = copt.name + ": " + (rep["ok"].get<bool>() ? "PASS" : "FAIL") + ", " + std::to_string(rep["checked"].get<size_t>()) +
                               " instances, " + std::to_string(rep["failures"].size()) + " failures\n";
            for (auto& f : rep["failures"]) text += "  " + f.dump() + "\n";
            print(rep, text, out);
            return rep["ok"].get<bool>() ? 0 : 1;
        }
        if (*schur_cmd) {
            FExpansion f = fexp_from_json(read_json_arg(fexp_arg));
            SchurExpansion s = extract_schur(f);
            print(to_json(s), to_string(s) + "\n", out);
            return 0;
        }
    } catch (const Usage& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const CampaignError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "usage: bad JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
