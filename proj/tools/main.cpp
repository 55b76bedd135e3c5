#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quadforest/catalog.hpp"
#include "quadforest/discharge.hpp"
#include "quadforest/formats.hpp"
#include "quadforest/generators.hpp"
#include "quadforest/inequality.hpp"
#include "quadforest/reduction.hpp"
#include "quadforest/solver.hpp"

using json = nlohmann::json;
using namespace qf;

namespace {

struct IoOptions {
    std::string input;
    std::string format = "graph6";
    std::string family;
    int size = 10;
    uint64_t seed = 1;
    std::string out;
    bool timing = false;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open input: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<CorpusEntry> load_entries(const IoOptions& io, bool need_plane) {
    std::vector<CorpusEntry> entries;
    if (!io.family.empty()) {
        if (io.family == "all") {
            for (Family f : all_families()) {
                auto part = generate_corpus(f, io.size, io.seed);
                entries.insert(entries.end(), part.begin(), part.end());
            }
        } else {
            auto fam = family_from_string(io.family);
            if (!fam) throw CLI::ValidationError("--family", "unknown family: " + io.family);
            entries = generate_corpus(*fam, io.size, io.seed);
        }
        return entries;
    }
    if (io.input.empty())
        throw CLI::ValidationError("input", "provide --input FILE or --family NAME");
    std::string bytes = slurp(io.input);
    if (io.format == "graph6") {
        if (need_plane)
            throw CLI::ValidationError("--format",
                                       "this command needs embeddings; use planar_code");
        int i = 0;
        for (auto& g : parse_graph6_stream(bytes)) {
            CorpusEntry e;
            e.id = "g6-" + std::to_string(i++);
            e.source = CorpusEntry::Source::File;
            e.graph = std::move(g);
            e.attested_planar = false;
            entries.push_back(std::move(e));
        }
    } else if (io.format == "planar_code") {
        int i = 0;
        for (auto& pg : parse_planar_code(bytes)) {
            CorpusEntry e;
            e.id = "pc-" + std::to_string(i++);
            e.source = CorpusEntry::Source::File;
            e.graph = pg.graph();
            e.plane = std::move(pg);
            e.attested_planar = true;
            entries.push_back(std::move(e));
        }
    } else {
        throw CLI::ValidationError("--format", "unknown format: " + io.format);
    }
    return entries;
}

struct Emitter {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Emitter(const std::string& out) {
        if (!out.empty() && out != "-") {
            file.open(out, std::ios::binary);
            if (!file) throw GraphError("cannot open output: " + out);
            os = &file;
        }
    }
    void line(const json& j) { (*os) << j.dump() << "\n"; }
    void raw(const std::string& bytes) { (*os) << bytes; }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

json certificate_json(const ForestCertificate& c) {
    return json{{"vertices", c.vertices.ids}, {"size", c.size}, {"target", c.bound_target}};
}

int cmd_solve(const IoOptions& io, uint64_t budget) {
    Emitter em(io.out);
    SolverOptions opt{budget};
    bool failed = false;
    for (const auto& e : load_entries(io, false)) {
        auto t0 = std::chrono::steady_clock::now();
        json j{{"id", e.id}, {"n", e.graph.n()}, {"edges", e.graph.edge_count()}};
        try {
            auto cert = a_exact(e.graph, opt);
            if (!induces_forest(e.graph, cert.vertices))
                throw GraphError("certificate failed revalidation");
            j["a"] = cert.size;
            j["certificate"] = certificate_json(cert);
            j["ok"] = true;
        } catch (const BudgetExceeded& ex) {
            j["error"] = ex.what();
            j["ok"] = false;
            failed = true;
        }
        if (io.timing) j["timing_ms"] = ms_since(t0);
        em.line(j);
    }
    return failed ? 1 : 0;
}

int cmd_verify_bound(const IoOptions& io, uint64_t budget) {
    Emitter em(io.out);
    SolverOptions opt{budget};
    bool failed = false;
    for (const auto& e : load_entries(io, false)) {
        auto t0 = std::chrono::steady_clock::now();
        json j{{"id", e.id}, {"n", e.graph.n()}};
        try {
            auto cert = a_exact(e.graph, opt);
            bool revalidated = induces_forest(e.graph, cert.vertices);
            int target = e.graph.n() > 0 ? bound(e.graph.n()) : 0;
            bool ok = revalidated && cert.size >= target;
            j["a"] = cert.size;
            j["target"] = target;
            j["bipartite"] = e.graph.bipartition().has_value();
            j["attested_planar"] = e.attested_planar;
            j["ok"] = ok;
            if (!j["bipartite"].get<bool>()) j["out_of_hypothesis"] = true;
            if (!ok) failed = true;
        } catch (const BudgetExceeded& ex) {
            j["error"] = ex.what();
            j["ok"] = false;
            failed = true;
        }
        if (io.timing) j["timing_ms"] = ms_since(t0);
        em.line(j);
    }
    return failed ? 1 : 0;
}

int cmd_audit(const IoOptions& io) {
    Emitter em(io.out);
    bool failed = false;
    for (const auto& e : load_entries(io, true)) {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = audit(e.plane);
        json j{{"id", e.id},
               {"n", e.plane.n()},
               {"shape",
                {{"connected", rep.shape.connected},
                 {"quadrangulation", rep.shape.quadrangulation},
                 {"min_degree_2", rep.shape.min_degree_2},
                 {"bipartite", rep.shape.bipartite}}},
               {"initial_total_q", rep.initial_total_q},
               {"final_total_q", rep.final_total_q},
               {"conserved", rep.conserved},
               {"negative_vertices", rep.negative_vertices},
               {"hits_present", rep.hits_present}};
        bool entry_ok = rep.conserved;
        if (e.graph.connected()) entry_ok = entry_ok && rep.initial_total_q == -32;
        if (rep.shape.all()) {
            entry_ok = entry_ok && rep.hits_present;
            auto bad = discharging_case_violations(e.plane);
            j["case_violations"] = bad;
            entry_ok = entry_ok && bad.empty();
        }
        j["ok"] = entry_ok;
        if (!entry_ok) failed = true;
        if (io.timing) j["timing_ms"] = ms_since(t0);
        em.line(j);
    }
    return failed ? 1 : 0;
}

int cmd_detect(const IoOptions& io) {
    Emitter em(io.out);
    for (const auto& e : load_entries(io, true)) {
        json hits = json::array();
        for (const auto& h : detect(e.plane)) {
            json one{{"tag", to_string(h.tag)}, {"witness", h.witness.ids}};
            if (h.suggested_step) {
                one["step"] = {{"kind", h.suggested_step->kind},
                               {"removed", h.suggested_step->removed.ids},
                               {"credit", h.suggested_step->credit}};
            }
            hits.push_back(one);
        }
        em.line(json{{"id", e.id}, {"n", e.plane.n()}, {"hits", hits}});
    }
    return 0;
}

int cmd_reduce(const IoOptions& io, uint64_t budget) {
    Emitter em(io.out);
    SolverOptions opt{budget};
    bool failed = false;
    for (const auto& e : load_entries(io, true)) {
        json steps = json::array();
        for (const auto& h : detect(e.plane)) {
            if (!h.suggested_step) continue;
            json one{{"tag", to_string(h.tag)},
                     {"witness", h.witness.ids},
                     {"kind", h.suggested_step->kind},
                     {"credit", h.suggested_step->credit}};
            try {
                auto rep = certify_reduction(e.plane, *h.suggested_step, opt);
                one["a_parent"] = rep.a_parent;
                one["a_child"] = rep.a_child;
                one["ok"] = rep.ok;
                if (!rep.ok) failed = true;
            } catch (const BudgetExceeded& ex) {
                one["error"] = ex.what();
                one["ok"] = false;
                failed = true;
            }
            steps.push_back(one);
        }
        auto built = build_forest(e.plane, opt);
        em.line(json{{"id", e.id},
                     {"n", e.plane.n()},
                     {"certifications", steps},
                     {"build_forest",
                      {{"size", built.certificate.size},
                       {"target", built.certificate.bound_target},
                       {"meets_bound", built.meets_bound},
                       {"rules", built.rules},
                       {"used_fallback", built.used_fallback}}}});
    }
    return failed ? 1 : 0;
}

int cmd_check_inequalities(const std::string& part, int range, int range_basic,
                           const std::string& out) {
    Emitter em(out);
    bool failed = false;
    auto verdict_json = [](const IneqVerdict& v) {
        json j{{"pass", v.pass}, {"tuples_checked", v.tuples_checked}};
        if (v.counterexample)
            j["counterexample"] = {{"params", v.counterexample->params},
                                   {"note", v.counterexample->note}};
        json exc = json::array();
        for (const auto& e : v.exceptions)
            exc.push_back(json{{"residues", e.residues},
                               {"realized", e.realized},
                               {"witness", e.witness}});
        j["exceptions"] = exc;
        return j;
    };
    if (part == "all" || part == "basic") {
        auto v = check_ineq1(range_basic);
        em.line(json{{"lemma", "max-split"}, {"range", range_basic},
                     {"verdict", verdict_json(v)}});
        failed |= !v.pass;
    }
    if (part == "all") {
        for (int p = 1; p <= 8; ++p) {
            auto v = check_ineq2(p, range);
            em.line(json{{"lemma", "ceiling-parts"}, {"part", p}, {"range", range},
                         {"verdict", verdict_json(v)}});
            failed |= !v.pass;
        }
    } else if (part != "basic") {
        int p = std::stoi(part);
        auto v = check_ineq2(p, range);
        em.line(json{{"lemma", "ceiling-parts"}, {"part", p}, {"range", range},
                     {"verdict", verdict_json(v)}});
        failed |= !v.pass;
    }
    return failed ? 1 : 0;
}

int cmd_gen(const IoOptions& io) {
    Emitter em(io.out);
    if (io.family.empty()) throw CLI::ValidationError("--family", "gen needs --family");
    auto fam = family_from_string(io.family);
    if (!fam) throw CLI::ValidationError("--family", "unknown family: " + io.family);
    auto entries = generate_corpus(*fam, io.size, io.seed);
    if (io.format == "graph6") {
        for (const auto& e : entries) em.raw(emit_graph6(e.graph) + "\n");
    } else if (io.format == "planar_code") {
        std::vector<PlaneGraph> graphs;
        for (const auto& e : entries) graphs.push_back(e.plane);
        em.raw(emit_planar_code(graphs));
    } else {
        throw CLI::ValidationError("--format", "unknown format: " + io.format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced-forest bound toolkit for bipartite planar graphs"};
    app.require_subcommand(1);

    IoOptions io;
    uint64_t budget = SolverOptions{}.node_budget;
    std::string part = "all";
    int range = 60, range_basic = 200;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", io.input, "input file ('-' for stdin)");
        sub->add_option("--format", io.format, "graph6 or planar_code")
            ->check(CLI::IsMember({"graph6", "planar_code"}));
        sub->add_option("--family", io.family, "generator family or 'all'");
        sub->add_option("--size", io.size, "entries per generated family");
        sub->add_option("--seed", io.seed, "generator seed");
        sub->add_option("--out", io.out, "output file (default stdout)");
        sub->add_flag("--timing", io.timing, "include timing_ms in reports");
    };

    auto* solve = app.add_subcommand("solve", "exact maximum induced forest per graph");
    add_io(solve);
    solve->add_option("--budget", budget, "solver node budget");

    auto* verify = app.add_subcommand("verify-bound", "check a(G) >= ceil((4n+3)/7)");
    add_io(verify);
    verify->add_option("--budget", budget, "solver node budget");

    auto* aud = app.add_subcommand("audit", "charges, rules, conservation, catalog cross-check");
    add_io(aud);

    auto* det = app.add_subcommand("detect", "reducible configuration hits");
    add_io(det);

    auto* red = app.add_subcommand("reduce", "certify suggested reductions and build forests");
    add_io(red);
    red->add_option("--budget", budget, "solver node budget");

    auto* ineq = app.add_subcommand("check-inequalities", "exhaustive arithmetic lemma checks");
    ineq->add_option("--part", part, "all, basic, or 1..8");
    ineq->add_option("--range", range, "enumeration range for the ceiling parts");
    ineq->add_option("--range-basic", range_basic, "range for the max-split lemma");
    ineq->add_option("--out", io.out, "output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "emit a generated corpus");
    add_io(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(io, budget);
        if (verify->parsed()) return cmd_verify_bound(io, budget);
        if (aud->parsed()) return cmd_audit(io);
        if (det->parsed()) return cmd_detect(io);
        if (red->parsed()) return cmd_reduce(io, budget);
        if (ineq->parsed()) return cmd_check_inequalities(part, range, range_basic, io.out);
        if (gen->parsed()) return cmd_gen(io);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
