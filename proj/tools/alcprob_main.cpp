#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcprob/errors.hpp"
#include "alcprob/oracle.hpp"
#include "alcprob/parser.hpp"
#include "alcprob/pipeline.hpp"

using json = nlohmann::ordered_json;
using namespace alcprob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
    std::string command;
    std::string kb_path;
    std::string query_text;
    std::string mode = "pinpoint";
    bool json_output = false;
    bool cross_check = false;
    std::string var_order_text;
    std::string emit_bdd_path;
    std::size_t budget = 1'000'000;
    int oracle_cap = 20;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open KB file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_probability(double p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", p);
    return buf;
}

std::vector<int> parse_var_order(const std::string& text, int axiom_count) {
    std::vector<int> order;
    std::set<int> seen;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("var-order entry is not an integer: " + item);
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size())
            throw std::runtime_error("var-order entry is not an integer: " + item);
        order.push_back(value);
        seen.insert(value);
    }
    bool permutation = static_cast<int>(order.size()) == axiom_count &&
                       static_cast<int>(seen.size()) == axiom_count;
    for (int v : order)
        if (v < 1 || v > axiom_count) permutation = false;
    if (!permutation)
        throw std::runtime_error("var-order must be a permutation of 1.." +
                                 std::to_string(axiom_count));
    return order;
}

json base_report(const RunConfig& cfg) {
    json report;
    report["query"] = cfg.query_text;
    report["entailed"] = false;
    report["probability"] = nullptr;
    report["minas"] = nullptr;
    report["pinpointing_formula"] = nullptr;
    report["mode"] = cfg.mode;
    report["stats"] = {{"rule_firings", 0}, {"bdd_nodes", 0}, {"worlds", nullptr}};
    return report;
}

json minas_json(const std::vector<MinA>& minas) {
    json out = json::array();
    for (const MinA& m : minas) {
        json one = json::array();
        for (int i : m.axiom_indices) one.push_back(i);
        out.push_back(std::move(one));
    }
    return out;
}

void emit(const RunConfig& cfg, const json& report, const std::string& human) {
    if (cfg.json_output)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

PipelineResult run_pipeline(const RunConfig& cfg, const KnowledgeBase& kb, const Query& q) {
    PipelineOptions opts;
    opts.mode = cfg.mode == "minas" ? ExplainMode::Minas : ExplainMode::Pinpoint;
    opts.budget = cfg.budget;
    if (!cfg.var_order_text.empty())
        opts.var_order = parse_var_order(cfg.var_order_text, kb.size());
    return run_query(kb, q, opts);
}

void maybe_emit_bdd(const RunConfig& cfg, const PipelineResult& result) {
    if (cfg.emit_bdd_path.empty()) return;
    std::ofstream out(cfg.emit_bdd_path);
    if (!out) throw std::runtime_error("cannot write BDD file: " + cfg.emit_bdd_path);
    out << result.bdd.to_text();
}

int cmd_prob(const RunConfig& cfg, const KnowledgeBase& kb, const Query& q) {
    PipelineResult result = run_pipeline(cfg, kb, q);
    maybe_emit_bdd(cfg, result);

    json report = base_report(cfg);
    report["entailed"] = result.entailed;
    report["probability"] = result.probability;
    report["minas"] = minas_json(result.minas);
    if (cfg.mode == "pinpoint") report["pinpointing_formula"] = result.formula.to_string();
    report["stats"]["rule_firings"] = result.rule_firings;
    report["stats"]["bdd_nodes"] = result.bdd.node_count();

    std::ostringstream human;
    human << "P = " << format_probability(result.probability) << "\n";

    if (cfg.cross_check) {
        OracleOptions oopts;
        oopts.max_probabilistic = cfg.oracle_cap;
        oopts.budget = cfg.budget;
        double reference = exact_probability(kb, q, oopts);
        report["stats"]["worlds"] =
            static_cast<std::size_t>(1) << kb.probabilistic_indices().size();
        human << "oracle P = " << format_probability(reference) << "\n";
        if (std::abs(reference - result.probability) > 1e-9) {
            std::cerr << "cross-check disagreement: pipeline "
                      << format_probability(result.probability) << " vs oracle "
                      << format_probability(reference) << "\n";
            emit(cfg, report, human.str());
            return kExitInternal;
        }
    }
    emit(cfg, report, human.str());
    return kExitOk;
}

int cmd_explain(const RunConfig& cfg, const KnowledgeBase& kb, const Query& q) {
    PipelineResult result = run_pipeline(cfg, kb, q);
    maybe_emit_bdd(cfg, result);

    json report = base_report(cfg);
    report["entailed"] = result.entailed;
    report["minas"] = minas_json(result.minas);
    if (cfg.mode == "pinpoint") report["pinpointing_formula"] = result.formula.to_string();
    report["stats"]["rule_firings"] = result.rule_firings;
    report["stats"]["bdd_nodes"] = result.bdd.node_count();

    std::ostringstream human;
    if (!result.entailed) {
        human << "not entailed\n";
    } else {
        for (const MinA& m : result.minas) {
            human << "{";
            bool first = true;
            for (int i : m.axiom_indices) {
                if (!first) human << ", ";
                human << i;
                first = false;
            }
            human << "}\n";
            for (int i : m.axiom_indices)
                human << "  F" << i << ": " << serialize_axiom(kb.at(i).axiom) << "\n";
        }
        if (cfg.mode == "pinpoint")
            human << "pinpointing formula: " << result.formula.to_string() << "\n";
    }
    emit(cfg, report, human.str());
    return kExitOk;
}

int cmd_check(const RunConfig& cfg, const KnowledgeBase& kb, const Query& q) {
    SaturateOptions opts;
    opts.budget = cfg.budget;
    std::size_t firings = 0;
    opts.firings = &firings;
    bool entailed = is_entailed(kb, q, opts);

    json report = base_report(cfg);
    report["entailed"] = entailed;
    report["stats"]["rule_firings"] = firings;

    emit(cfg, report, entailed ? "entailed\n" : "not entailed\n");
    return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, const KnowledgeBase& kb, const Query& q) {
    OracleOptions opts;
    opts.max_probabilistic = cfg.oracle_cap;
    opts.budget = cfg.budget;

    auto worlds = enumerate_worlds(kb, opts);
    double total = 0.0;
    int entailing = 0;
    std::vector<bool> entails(worlds.size());
    for (std::size_t i = 0; i < worlds.size(); ++i) {
        SaturateOptions sat;
        sat.budget = cfg.budget;
        sat.active_axioms = world_indices(worlds[i].selection, kb);
        entails[i] = is_entailed(kb, q, sat);
        if (entails[i]) {
            total += worlds[i].prob;
            ++entailing;
        }
    }

    json report = base_report(cfg);
    // The last world includes every probabilistic axiom: full-KB entailment.
    report["entailed"] = !entails.empty() && entails.back();
    report["probability"] = total;
    report["stats"]["worlds"] = worlds.size();

    std::ostringstream human;
    human << worlds.size() << " worlds, " << entailing << " entailing\n";
    human << "P = " << format_probability(total) << "\n";
    if (worlds.size() <= 64) {
        const auto& prob_indices = kb.probabilistic_indices();
        for (std::size_t i = 0; i < worlds.size(); ++i) {
            // Selection bits in axiom-index order, first probabilistic
            // axiom leftmost.
            std::string bits;
            for (int index : prob_indices)
                bits += worlds[i].selection.decisions.at(index) ? '1' : '0';
            human << (bits.empty() ? "-" : bits) << "  "
                  << format_probability(worlds[i].prob) << "  "
                  << (entails[i] ? "yes" : "no") << "\n";
        }
    }
    emit(cfg, report, human.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    CLI::App app{"Probabilistic ALC reasoner"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--kb", cfg.kb_path, "KB file")->required();
        sub->add_option("--query", cfg.query_text, "query axiom")->required();
        sub->add_option("--mode", cfg.mode, "explanation mode")
            ->check(CLI::IsMember({"minas", "pinpoint"}));
        sub->add_flag("--json", cfg.json_output, "JSON output");
        sub->add_flag("--cross-check", cfg.cross_check, "verify against the oracle");
        sub->add_option("--var-order", cfg.var_order_text, "BDD variable order");
        sub->add_option("--emit-bdd", cfg.emit_bdd_path, "write the BDD as text");
        sub->add_option("--budget", cfg.budget, "rule firing budget");
        sub->add_option("--oracle-cap", cfg.oracle_cap, "max probabilistic axioms for the oracle");
    };
    for (const char* name : {"prob", "explain", "check", "oracle"}) add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitParse;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        KnowledgeBase kb = parse_kb(read_file(cfg.kb_path));
        Query q = parse_query(cfg.query_text);
        if (cfg.command == "prob") return cmd_prob(cfg, kb, q);
        if (cfg.command == "explain") return cmd_explain(cfg, kb, q);
        if (cfg.command == "check") return cmd_check(cfg, kb, q);
        return cmd_oracle(cfg, kb, q);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const std::runtime_error& e) {
        // File and option plumbing problems are input errors.
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
