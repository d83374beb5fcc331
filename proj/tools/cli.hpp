#pragma once

// contactlie command-line front end. run() never touches process state other
// than the given streams and the --output file, so tests call it directly.

#include "contactlie/acceptance.hpp"
#include "contactlie/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef CONTACTLIE_VERSION
#define CONTACTLIE_VERSION "0.0.0"
#endif

namespace contactlie::cli {

using json = nlohmann::json;

inline constexpr std::uint64_t default_seed = 20240611;

struct RunConfig {
    std::string command;
    std::string type_name;
    std::string model = "hopf";
    int n = 1;
    int delta = 2;
    std::uint64_t seed = default_seed;
    int samples = 0;  ///< 0 picks the command default
    int fdeg = 1;
    int gdeg = 2;
    bool dump_forms = false;
    std::string output = "-";
};

inline int default_samples(const std::string& command)
{
    if (command == "verify-lemma22") return 50;
    if (command == "immersion") return 25;
    if (command == "adjoint") return 20;
    if (command == "quotient") return 100;
    return 10;
}

inline json config_json(const RunConfig& c)
{
    json j;
    j["command"] = c.command;
    if (!c.type_name.empty()) j["type"] = c.type_name;
    if (c.command.rfind("verify-", 0) == 0) {
        j["model"] = c.model;
        j["delta"] = c.model == "hopf" ? 2 : c.delta;
    }
    if (c.command.rfind("verify-", 0) == 0 || c.command == "quotient" || c.command == "immersion") j["n"] = c.n;
    if (c.command == "verify-lemma21") {
        j["fdeg"] = c.fdeg;
        j["gdeg"] = c.gdeg;
    }
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    return j;
}

inline json results_json(Report r)
{
    r.sort();
    json out = json::array();
    for (const auto& x : r.results()) {
        json e{{"check_id", x.check_id}, {"status", status_name(x.status)}};
        if (!x.witness.empty()) e["witness"] = x.witness;
        out.push_back(std::move(e));
    }
    return out;
}

inline json root_json(const Root& r) { return json(r); }

inline json roots_data(const RootSystem& rs)
{
    json d;
    d["rank"] = rs.rank();
    d["cartan"] = rs.cartan().entries();
    d["roots"] = json::array();
    for (const auto& r : rs.roots()) d["roots"].push_back(root_json(r));
    d["positive_count"] = rs.positive_count();
    d["rho_index"] = rs.highest_index();
    d["rho"] = root_json(rs.highest());
    return d;
}

inline Report roots_checks(const RootSystem& rs)
{
    Report r;
    bool closed = true;
    for (const auto& a : rs.roots()) closed = closed && rs.contains(negate(a));
    r.check("negation_closed", closed);
    bool simple = true;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        Root e(rs.rank(), 0);
        e[i] = 1;
        simple = simple && rs.contains(e);
    }
    r.check("simple_roots_present", simple);
    bool dominant = true;
    for (std::size_t i = 0; i < rs.rank(); ++i) dominant = dominant && rs.cartan().coroot_pairing(rs.highest(), i) >= 0;
    r.check("highest_root_dominant", dominant);
    return r;
}

inline json vector_json(const LieAlgebra& g, const ScalarVector& v)
{
    json o = json::object();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) o[g.labels()[k]] = v[k].to_string();
    return o;
}

inline json algebra_data(const AlgebraData& a)
{
    const auto& g = a.g;
    json d;
    d["dim"] = g.dim();
    d["labels"] = g.labels();
    json pieces = json::object();
    for (int i = -2; i <= 2; ++i) pieces[std::to_string(i)] = a.gd.piece_dim(i);
    d["piece_dims"] = pieces;
    d["dim_Z"] = a.gd.piece_dim(1) + 1;
    d["dim_P"] = a.gd.piece_dim(1) + 2;
    json table = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const auto& b = g.bracket_basis(i, j);
            if (b.empty()) continue;
            json terms = json::object();
            for (const auto& [k, c] : b) terms[g.labels()[k]] = c.to_string();
            table.push_back({{"x", g.labels()[i]}, {"y", g.labels()[j]}, {"bracket", terms}});
        }
    d["structure_constants"] = table;
    json gram = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(a.kd.gram(i, j).to_string());
        gram.push_back(row);
    }
    d["killing_gram"] = gram;
    d["H_rho"] = vector_json(g, a.kd.hrho);
    return d;
}

struct Outcome {
    json data = json::object();
    Report report;
};

inline Outcome execute(const RunConfig& c)
{
    Outcome o;
    Rng rng(c.seed);
    const std::string& cmd = c.command;
    if (cmd == "roots") {
        const RootSystem rs(CartanMatrix::of_type(c.type_name));
        o.data = roots_data(rs);
        o.report = roots_checks(rs);
    } else if (cmd == "algebra") {
        const AlgebraData a = algebra_of_type(c.type_name);
        o.data = algebra_data(a);
        o.report = algebra_suite(a.g, a.kd, a.gd);
    } else if (cmd == "adjoint") {
        const AlgebraData a = algebra_of_type(c.type_name);
        o.report = adjoint_full_suite(a, rng, c.samples);
        std::vector<Word> words;
        for (int k = 0; k < std::max(c.samples, 2); ++k) words.push_back(random_word(a.g, rng));
        const EmbeddingReport emb = embedding_check(a.g, a.gd, words);
        json table = json::array();
        for (std::size_t k = 0; k < emb.samples.size(); ++k) {
            json word = json::array();
            for (const auto& [root, t] : words[k]) word.push_back({{"root", root_json(root)}, {"t", t.to_string()}});
            table.push_back({{"word", word}, {"tangent_rank", emb.samples[k].tangent_rank}});
        }
        o.data["orbit_dim"] = a.gd.piece_dim(1) + 2;
        o.data["L0_kernel_dim"] = a.gd.L0.dim();
        o.data["moment_round_trip"] = [&] {
            for (const auto& x : o.report.results())
                if (x.check_id == "moment.kappa_round_trip") return status_name(x.status);
            return "skipped";
        }();
        o.data["embedding_ranks"] = table;
        o.data["coincident_samples"] = emb.coincident.size();
    } else if (cmd == "verify-contact" || cmd == "verify-lemma21" || cmd == "verify-lemma22") {
        const ContactChart cc = make_model(c.model, c.n, c.delta);
        o.data["theta"] = cc.theta().to_string();
        if (c.dump_forms) {
            o.data["dtheta"] = cc.dtheta().to_string();
            o.data["euler_field"] = euler_field(cc).to_string();
            o.data["omega_determinant"] = cc.omega_determinant().to_string();
        }
        if (cmd == "verify-contact")
            o.report = contact_suite(cc, rng, c.samples);
        else if (cmd == "verify-lemma21")
            o.report = lemma21_suite(cc, rng, c.fdeg, c.gdeg, c.samples);
        else
            o.report = lemma22_suite(cc, rng, c.samples);
    } else if (cmd == "cocycle") {
        o.report = cocycle_suite();
        const CStructureData p3 = reconstruct_cstructure(ContactChart::hopf(1), hopf_sections(1));
        json fs = json::object();
        for (const auto& t : p3.transitions) fs[p3.charts[t.i].label + "_" + p3.charts[t.j].label] = t.f.to_string();
        o.data["p3_transition_functions"] = fs;
        const CStructureData p1 = p1_standard();
        o.data["p1_f01"] = p1.transitions.front().f.to_string();
    } else if (cmd == "quotient") {
        o.report = quotient_check_hopf(c.n, rng, c.samples, 3);
    } else if (cmd == "immersion") {
        o.report = immersion_suite(c.n, rng, c.samples);
    } else if (cmd == "all") {
        o.report = run_acceptance(c.seed);
    }
    return o;
}

inline std::string render(const RunConfig& c, const Outcome& o)
{
    json j;
    j["schema"] = 1;
    j["tool_version"] = CONTACTLIE_VERSION;
    j["config"] = config_json(c);
    if (!o.data.empty()) j["data"] = o.data;
    j["summary"] = {{"pass", o.report.count(Status::pass)},
                    {"fail", o.report.count(Status::fail)},
                    {"skipped", o.report.count(Status::skipped)}};
    j["results"] = results_json(o.report);
    return j.dump(2) + "\n";
}

/// Validates names that the parser cannot; throws std::invalid_argument.
inline void validate(const RunConfig& c)
{
    if (!c.type_name.empty()) (void)CartanMatrix::of_type(c.type_name);
    if (c.command.rfind("verify-", 0) == 0) (void)make_model(c.model, c.n, c.delta);
    if (c.samples < 0) throw std::invalid_argument("--samples must be non-negative");
    if ((c.command == "quotient" || c.command == "immersion") && c.n < 0) throw std::invalid_argument("--n must be >= 0");
}

inline std::string type_list()
{
    std::string s;
    for (const auto& t : CartanMatrix::shipped_types()) s += (s.empty() ? "" : ", ") + t;
    return s;
}

/// Rewrites "verify contact" as "verify-contact" (likewise lemma21, lemma22).
inline std::vector<std::string> normalize_args(std::vector<std::string> args)
{
    if (args.size() >= 2 && args[0] == "verify" && (args[1] == "contact" || args[1] == "lemma21" || args[1] == "lemma22")) {
        args[1] = "verify-" + args[1];
        args.erase(args.begin());
    }
    return args;
}

/// 0 when every check passes, 1 otherwise. Configuration errors exit 2 before any check runs.
inline int exit_code(const Report& r) { return r.passed() ? 0 : 1; }

/// Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    args = normalize_args(std::move(args));
    RunConfig cfg;
    if (const char* env = std::getenv("CONTACTLIE_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "CONTACTLIE_SEED is not an unsigned integer: " << env << "\n";
            return 2;
        }
    }

    CLI::App app{"Exact verification of contact-geometric and Lie-theoretic identities", "contactlie"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(CONTACTLIE_VERSION));

    auto common = [&](CLI::App* s) {
        s->add_option("--seed", cfg.seed, "random seed (default from CONTACTLIE_SEED or built in)");
        s->add_option("--samples", cfg.samples, "sample count (0 = command default)");
        s->add_option("--output,-o", cfg.output, "output file, - for stdout");
    };
    auto with_type = [&](CLI::App* s) { s->add_option("type", cfg.type_name, "algebra type: " + type_list())->required(); };
    auto with_model = [&](CLI::App* s) {
        s->add_option("--model", cfg.model, "hopf or fibered");
        s->add_option("--n", cfg.n, "half the base dimension minus one");
        s->add_option("--delta", cfg.delta, "degree of the fibered model");
        s->add_flag("--dump-forms", cfg.dump_forms, "include d theta and the Euler field in the output");
    };

    struct Sub {
        const char* name;
        const char* help;
    };
    const std::vector<Sub> subs{
        {"roots", "root system of a Cartan type"},
        {"algebra", "structure constants, Killing form and grading"},
        {"verify-contact", "principal contact bundle axioms"},
        {"verify-lemma21", "Hamiltonian field identities on random homogeneous pairs"},
        {"verify-lemma22", "theta-preserving fields of degree delta"},
        {"cocycle", "c-structure transition cocycle against the canonical bundle"},
        {"quotient", "the +-1 quotient of the Hopf model"},
        {"immersion", "Jacobian rank against the Hamiltonian span"},
        {"adjoint", "orbit, moment map and embedding checks on the adjoint variety"},
        {"all", "every acceptance criterion"},
    };
    for (const auto& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        common(sc);
        const std::string name = s.name;
        if (name == "roots" || name == "algebra" || name == "adjoint") with_type(sc);
        if (name.rfind("verify-", 0) == 0) with_model(sc);
        if (name == "verify-lemma21") {
            sc->add_option("--fdeg", cfg.fdeg, "degree of f");
            sc->add_option("--gdeg", cfg.gdeg, "degree of g");
        }
        if (name == "quotient" || name == "immersion") sc->add_option("--n", cfg.n, "Hopf model on C^(2n+2)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << CONTACTLIE_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.samples == 0) cfg.samples = default_samples(cfg.command);

    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        if (!cfg.type_name.empty()) err << "known types: " << type_list() << "\n";
        err << "\n" << app.get_subcommands().front()->help();
        return 2;
    }

    Outcome outcome;
    try {
        outcome = execute(cfg);
    } catch (const std::exception& e) {
        outcome.report.fail("internal_error", e.what());
    }
    const std::string text = render(cfg, outcome);
    if (cfg.output == "-") {
        out << text;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << cfg.output << "\n";
            return 2;
        }
        f << text;
    }
    return exit_code(outcome.report);
}

}  // namespace contactlie::cli
