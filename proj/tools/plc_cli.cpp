// plc: command-line front end for the stabilizer-state PLC toolkit.
//
// Exit codes: 0 success / equivalent, 1 definite negative, 2 inconclusive or
// partial, 3 bad input, 4 usage error, 5 internal self-check failure.

#include "plc/commutation.hpp"
#include "plc/egs.hpp"
#include "plc/equivalence.hpp"
#include "plc/io.hpp"
#include "plc/stabilizer.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace plc;

enum Exit : int { ok = 0, negative = 1, inconclusive = 2, bad_input = 3, usage = 4, internal = 5 };

struct RunConfig {
    unsigned d = 2;
    std::uint64_t seed = 0;
    std::uint64_t ring_budget = std::uint64_t{1} << 20;
    std::uint64_t congruence_budget = std::uint64_t{1} << 20;
    std::uint64_t random_samples = 4096;
    std::uint64_t graph_budget = std::uint64_t{1} << 24;
    unsigned workers = 0;
    std::string format = "json";
    std::string output;

    [[nodiscard]] SearchBudget budget() const { return {ring_budget, congruence_budget, random_samples, seed}; }
};

void env_default(const char* name, std::uint64_t& target) {
    if (const char* v = std::getenv(name)) {
        try {
            target = std::stoull(v);
        } catch (const std::exception&) {
            throw InputError(std::string("environment variable ") + name + " is not a number");
        }
    }
}

RunConfig defaults_from_env() {
    RunConfig c;
    env_default("PLC_RING_BUDGET", c.ring_budget);
    env_default("PLC_CONGRUENCE_BUDGET", c.congruence_budget);
    env_default("PLC_RANDOM_SAMPLES", c.random_samples);
    env_default("PLC_GRAPH_BUDGET", c.graph_budget);
    return c;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_field = true) {
    if (with_field) cmd->add_option("--d", cfg.d, "local dimension (prime) for edge-list inputs")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "seed for randomized search steps")->capture_default_str();
    cmd->add_option("--ring-budget", cfg.ring_budget, "max endomorphism-ring elements scanned exhaustively")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--congruence-budget", cfg.congruence_budget, "max candidates scanned exhaustively in congruence search")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--samples", cfg.random_samples, "random samples once a space is too large")->capture_default_str();
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    cmd->add_option("-o,--output", cfg.output, "write the report to a file instead of stdout");
}

class Output {
public:
    explicit Output(const RunConfig& cfg) : cfg_(cfg) {}

    void emit(const Json& j, const std::string& table) const {
        std::ostringstream text;
        if (cfg_.format == "json") {
            text << j.dump(2) << '\n';
        } else {
            text << table;
        }
        if (cfg_.output.empty()) {
            std::cout << text.str();
        } else {
            std::ofstream f(cfg_.output);
            if (!f) throw InputError("cannot write " + cfg_.output);
            f << text.str();
        }
    }

private:
    const RunConfig& cfg_;
};

std::string matrix_lines(const Matrix& m, const std::string& indent) {
    std::ostringstream s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) s << (j ? " " : "") << m(i, j);
        s << '\n';
    }
    return s.str();
}

std::string tuple_lines(const CommutationTuple& c) {
    std::ostringstream s;
    for (std::size_t a = 0; a < c.parties(); ++a) s << "  C_" << a + 1 << ":\n" << matrix_lines(c[a], "    ");
    return s.str();
}

PartyPartition partition_for(const std::string& text, const StabilizerTableau& s) {
    const auto p = PartyPartition::parse(text);
    if (p.sites() != s.sites()) {
        throw InputError("partition covers " + std::to_string(p.sites()) + " sites but the state has " +
                         std::to_string(s.sites()));
    }
    return p;
}

// ---------------------------------------------------------------------------

int cmd_info(const RunConfig& cfg, const std::string& file, const std::string& partition) {
    const auto s = load_state(file, FieldOrder(cfg.d));
    const auto p = partition_for(partition, s);
    const auto validity = is_valid_stabilizer(s);
    Json j;
    j["state"] = to_json(s);
    j["partition"] = p.to_string();
    j["valid"] = validity.valid;
    j["violations"] = validity.violations;
    std::ostringstream t;
    t << "state        " << s.sites() << " sites, d = " << s.field().value() << '\n';
    t << "partition    " << p.to_string() << '\n';
    t << "valid        " << (validity.valid ? "yes" : "no") << '\n';
    for (const auto& v : validity.violations) t << "  " << v << '\n';
    if (!validity.valid) {
        Output(cfg).emit(j, t.str());
        return Exit::bad_input;
    }
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> local;
    for (std::size_t a = 0; a < p.party_count(); ++a) {
        ranks.push_back(reduced_rank_exponent(s, p, a));
        local.push_back(local_subspace_dim(s, p, a));
    }
    const auto c = from_state(s, p);
    const auto delta = ghz_extraction_count(s, p);
    const auto rc = rank_condition(c);
    j["reduced_rank_exponents"] = ranks;
    j["local_subspace_dims"] = local;
    j["ghz_extraction_count"] = delta;
    j["rank_condition"] = rc;
    j["tuple"] = to_json(c);
    t << "reduced ranks";
    for (auto r : ranks) t << ' ' << r;
    t << "\nlocal dims   ";
    for (auto r : local) t << ' ' << r;
    t << "\nDelta        " << delta << "\nrank cond.   " << (rc ? "holds" : "violated") << "\ntuple\n" << tuple_lines(c);
    Output(cfg).emit(j, t.str());
    return Exit::ok;
}

int cmd_equiv(const RunConfig& cfg, const std::string& fa, const std::string& fb, const std::string& partition) {
    const auto a = load_state(fa, FieldOrder(cfg.d));
    const auto b = load_state(fb, FieldOrder(cfg.d));
    if (!(a.field() == b.field())) throw InputError("states have different local dimensions");
    if (a.sites() != b.sites()) throw InputError("states have different numbers of sites");
    for (const auto* s : {&a, &b}) {
        const auto v = is_valid_stabilizer(*s);
        if (!v.valid) throw InputError("invalid stabilizer state: " + (v.violations.empty() ? "" : v.violations[0]));
    }
    const auto p = partition_for(partition, a);
    const auto r = plc_equivalent(a, b, p, cfg.budget());
    Json j = to_json(r);
    j["partition"] = p.to_string();
    std::ostringstream t;
    t << "verdict    " << to_string(r.verdict) << '\n' << "reason     " << r.reason << '\n';
    t << "relaxation dimension " << r.solution_dimension << ", candidates " << r.candidates_examined
      << (r.exhaustive ? " (exhaustive)" : "") << '\n';
    if (r.witness) t << "witness Q (new generators of b in terms of a):\n" << matrix_lines(*r.witness, "  ");
    Output(cfg).emit(j, t.str());
    switch (r.verdict) {
        case Verdict::equivalent: return Exit::ok;
        case Verdict::inequivalent: return Exit::negative;
        case Verdict::inconclusive: break;
    }
    return Exit::inconclusive;
}

int cmd_decompose(const RunConfig& cfg, const std::string& file, const std::string& partition) {
    const auto s = load_state(file, FieldOrder(cfg.d));
    const auto v = is_valid_stabilizer(s);
    if (!v.valid) throw InputError("invalid stabilizer state: " + (v.violations.empty() ? "" : v.violations[0]));
    const auto p = partition_for(partition, s);
    const auto c = from_state(s, p);
    const auto budget = cfg.budget();
    const auto rep = decompose(c, budget);
    const auto named = named_counts(s, p, budget);
    Json j = to_json(rep);
    j["partition"] = p.to_string();
    j["named_counts"] = to_json(named);
    std::ostringstream t;
    t << "blocks     " << rep.blocks.size() << (rep.complete ? "" : " (incomplete)") << '\n';
    for (std::size_t k = 0; k < rep.blocks.size(); ++k) {
        const auto cls = classify_block(rep.blocks[k], budget);
        const char* kind = cls.kind == BlockClass::Kind::zero  ? "|0>"
                           : cls.kind == BlockClass::Kind::ghz ? (cls.parties.size() == 2 ? "Bell" : "GHZ")
                           : cls.kind == BlockClass::Kind::other ? "other"
                                                                 : "inconclusive";
        t << "  block " << k + 1 << ": size " << rep.blocks[k].size() << ", " << kind;
        if (!cls.parties.empty()) t << " on parties";
        for (auto a : cls.parties) t << ' ' << a + 1;
        t << '\n';
    }
    if (p.party_count() == 3 && rep.complete && named.other_blocks == 0 && named.inconclusive_blocks == 0) {
        const auto tri = tripartite_canonical_counts(s, p, budget);
        j["tripartite"] = to_json(tri);
        t << "tripartite zeros " << tri.zeros[0] << ' ' << tri.zeros[1] << ' ' << tri.zeros[2] << ", Bell(12,13,23) "
          << tri.bell[0] << ' ' << tri.bell[1] << ' ' << tri.bell[2] << ", GHZ " << tri.ghz << '\n';
    }
    j["budget"] = to_json(budget);
    Output(cfg).emit(j, t.str());
    return rep.complete ? Exit::ok : Exit::inconclusive;
}

int cmd_synth(const RunConfig& cfg, const std::string& file) {
    const auto c = load_tuple(file);
    const auto report = validate(c, false);
    if (!report.alternating || !report.zero_sum) {
        std::string why;
        for (const auto& v : report.violations) why += (why.empty() ? "" : "; ") + v;
        throw InputError("not a valid commutation tuple: " + why);
    }
    if (!rank_condition(c)) {
        std::cerr << "rank condition violated: stabilizer-code tuple, unsupported\n";
        Output(cfg).emit(Json{{"synthesized", false}, {"reason", "stabilizer-code tuple, unsupported"}},
                         "rank condition violated: stabilizer-code tuple, unsupported\n");
        return Exit::negative;
    }
    const auto r = synthesize_state(c);
    // self-check before writing anything
    if (!(from_state(r.tableau, r.partition) == c) || !is_valid_stabilizer(r.tableau).valid) {
        std::cerr << "internal error: synthesized state does not reproduce the tuple\n";
        return Exit::internal;
    }
    Json j = to_json(r.tableau);
    j["partition"] = r.partition.to_string();
    std::ostringstream t;
    t << "partition " << r.partition.to_string() << '\n';
    if (r.tableau.field().is_binary()) {
        for (const auto& g : j["generators"]) t << "  " << g.get<std::string>() << '\n';
    } else {
        t << matrix_lines(r.tableau.generators(), "  ");
    }
    Output(cfg).emit(j, t.str());
    return Exit::ok;
}

std::string egs_table(const EgsReport& r) {
    std::ostringstream t;
    t << "configuration " << r.configuration.to_string() << ", d = " << r.d << ": "
      << (r.complete ? "COMPLETE" : "PARTIAL") << '\n';
    if (!r.complete) t << "  " << r.partial_reason << '\n';
    t << "graphs " << r.graphs_in_space << ", examined " << r.graphs_examined << ", decomposable " << r.decomposable
      << ", indecomposable " << r.indecomposable << '\n';
    t << "classes " << r.class_count << " (" << r.class_count_up_to_relabeling << " up to relabeling equal-size parties)\n";
    for (std::size_t k = 0; k < r.representatives.size(); ++k) {
        const auto& rep = r.representatives[k];
        t << "  " << k + 1 << ". [" << rep.relabel_class + 1 << "] " << rep.members << " graphs; edges";
        for (const auto& e : rep.graph.edges()) {
            t << ' ' << e.i + 1 << '-' << e.j + 1;
            if (e.multiplicity != 1) t << 'x' << e.multiplicity;
        }
        t << '\n';
    }
    for (const auto& q : r.quarantine) t << "  quarantined (" << q.stage << "): " << q.reason << '\n';
    for (const auto& n : r.notes) t << "  note: " << n << '\n';
    return t.str();
}

int cmd_egs(const RunConfig& cfg, const std::string& sizes, const std::string& database) {
    const auto config = PartyConfiguration::parse(sizes);
    EgsOptions o;
    o.search = cfg.budget();
    o.graph_budget = cfg.graph_budget;
    o.workers = cfg.workers;
    const FieldOrder d(cfg.d);
    EgsReport r;
    if (database.empty()) {
        r = egs_search(config, d, o);
    } else {
        std::ifstream in(database);
        if (!in) throw InputError("cannot open " + database);
        r = egs_search_from_orbit_database(in, config, d, o);
    }
    Output(cfg).emit(to_json(r), egs_table(r));
    return r.complete ? Exit::ok : Exit::inconclusive;
}

int verify_spiral(const RunConfig& cfg, std::size_t n_min, std::size_t n_max) {
    const auto checks = verify_spiral_family(FieldOrder(cfg.d), n_min, n_max, cfg.budget());
    Json j = Json::array();
    std::ostringstream t;
    std::optional<std::size_t> failing;
    for (const auto& c : checks) {
        j.push_back(to_json(c));
        t << "n=" << c.n << "  " << to_string(c.verdict) << "  merged pair " << to_string(c.merged_pair)
          << "  layout " << (c.layout_ok ? "ok" : "BAD");
        if (c.splitting_namings != 0) t << "  (pair splits for " << c.splitting_namings << "/24 party namings)";
        t << '\n';
        if ((c.verdict != SplitVerdict::indecomposable || !c.layout_ok) && !failing) failing = c.n;
    }
    Json out{{"suite", "spiral"}, {"d", cfg.d}, {"checks", j}, {"passed", !failing}, {"budget", to_json(cfg.budget())}};
    if (failing) {
        out["minimal_failing_n"] = *failing;
        t << "FAIL: smallest failing n = " << *failing << '\n';
    } else {
        t << "PASS\n";
    }
    Output(cfg).emit(out, t.str());
    return failing ? Exit::negative : Exit::ok;
}

int verify_cosets(const RunConfig& cfg) {
    const auto r = verify_coset_table();
    std::ostringstream t;
    t << "group order " << r.group_order << ", local subgroup " << r.subgroup_order << ", cosets " << r.coset_count
      << '\n'
      << "table sequences verified " << r.sequences_verified << "/20, distinct cosets " << r.distinct_cosets << "/"
      << r.coset_count << '\n';
    for (const auto& f : r.failures) t << "  " << f << '\n';
    t << (r.ok() ? "PASS\n" : "FAIL\n");
    Json j = to_json(r);
    j["suite"] = "cosets";
    Output(cfg).emit(j, t.str());
    return r.ok() ? Exit::ok : Exit::negative;
}

int verify_properties(const RunConfig& cfg, std::size_t trials) {
    Rng rng(cfg.seed);
    std::optional<Json> state_failure;
    std::optional<Json> family_failure;
    std::size_t state_cases = 0;
    std::size_t family_cases = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const FieldOrder d(std::vector<unsigned>{2, 3, 5}[t % 3]);
        const std::size_t n = 1 + rng.below(8);
        const auto s = randomize_locally(graph_state(random_graph(d, n, rng)), rng);
        std::vector<std::vector<std::size_t>> parts(1 + rng.below(n));
        for (std::size_t site = 0; site < n; ++site) parts[site < parts.size() ? site : rng.below(parts.size())].push_back(site);
        const PartyPartition p(n, parts);
        ++state_cases;
        if (!rank_condition(from_state(s, p))) {
            Json f{{"state", to_json(s)}, {"partition", p.to_string()}};
            if (!state_failure || (*state_failure)["state"]["n"].get<std::size_t>() > n) state_failure = f;
        }
        const std::size_t m = 2 + rng.below(5);
        const std::size_t k = 1 + rng.below(8);
        const auto fam = random_zero_sum_family(k, m, d, rng);
        ++family_cases;
        if (!rank_inequality_check(fam)) {
            Json ms = Json::array();
            for (const auto& x : fam) ms.push_back(to_json(x));
            Json f{{"d", d.value()}, {"n", k}, {"matrices", ms}};
            if (!family_failure || (*family_failure)["n"].get<std::size_t>() > k) family_failure = f;
        }
    }
    const bool pass = !state_failure && !family_failure;
    Json j{{"suite", "properties"},
           {"seed", cfg.seed},
           {"states_checked", state_cases},
           {"families_checked", family_cases},
           {"rank_condition_failure", state_failure ? *state_failure : Json(nullptr)},
           {"rank_inequality_failure", family_failure ? *family_failure : Json(nullptr)},
           {"passed", pass}};
    std::ostringstream t;
    t << "rank condition on " << state_cases << " random states: " << (state_failure ? "FAIL" : "holds") << '\n';
    t << "rank inequality on " << family_cases << " random zero-sum families: " << (family_failure ? "FAIL" : "holds")
      << '\n';
    if (state_failure) t << "  minimal failing state: " << state_failure->dump() << '\n';
    if (family_failure) t << "  minimal failing family: " << family_failure->dump() << '\n';
    t << (pass ? "PASS\n" : "FAIL\n");
    Output(cfg).emit(j, t.str());
    return pass ? Exit::ok : Exit::negative;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        cfg = defaults_from_env();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::bad_input;
    }

    CLI::App app{"PLC equivalence, decomposition and EGS search for stabilizer states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "plc 1.0");

    std::string file_a;
    std::string file_b;
    std::string partition;

    auto* info = app.add_subcommand("info", "validity, local ranks, Delta and the commutation tuple of a state");
    info->add_option("state", file_a, "state file (JSON or edge list)")->required();
    info->add_option("-p,--partition", partition, "parties, e.g. \"1,2|3|4\"")->required();
    add_common(info, cfg);

    auto* equiv = app.add_subcommand("equiv", "decide PLC equivalence of two states");
    equiv->add_option("a", file_a, "first state")->required();
    equiv->add_option("b", file_b, "second state")->required();
    equiv->add_option("-p,--partition", partition, "parties, e.g. \"1,2|3|4\"")->required();
    add_common(equiv, cfg);

    auto* decomp = app.add_subcommand("decompose", "split a state into indecomposable blocks");
    decomp->add_option("state", file_a, "state file")->required();
    decomp->add_option("-p,--partition", partition, "parties, e.g. \"1,2|3|4\"")->required();
    add_common(decomp, cfg);

    auto* synth = app.add_subcommand("synth", "build a stabilizer state realizing a commutation tuple");
    synth->add_option("tuple", file_a, "tuple file (JSON)")->required();
    add_common(synth, cfg, false);

    std::string sizes;
    std::string database;
    auto* egs = app.add_subcommand("egs", "search indecomposable PLC classes for a party configuration");
    egs->add_option("--sizes", sizes, "party sizes, e.g. 2,1,1,1")->required();
    egs->add_option("--database", database, "LC-orbit database to distribute instead of enumerating graphs");
    egs->add_option("--graph-budget", cfg.graph_budget, "max graphs to enumerate")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    egs->add_option("--workers", cfg.workers, "worker threads (0 = all cores)")->capture_default_str();
    add_common(egs, cfg);

    auto* verify = app.add_subcommand("verify", "run a verification battery");
    verify->require_subcommand(1);
    std::size_t n_min = 4;
    std::size_t n_max = 12;
    std::size_t trials = 500;
    auto* spiral = verify->add_subcommand("spiral", "indecomposability of spiral graph states");
    spiral->add_option("--min", n_min, "smallest n")->capture_default_str();
    spiral->add_option("--max", n_max, "largest n")->capture_default_str();
    add_common(spiral, cfg);
    auto* cosets = verify->add_subcommand("cosets", "two-qubit coset table of the LCE generators");
    add_common(cosets, cfg, false);
    auto* props = verify->add_subcommand("properties", "rank condition and rank inequality on random samples");
    props->add_option("--trials", trials, "number of random samples")->capture_default_str();
    add_common(props, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return Exit::usage;
    }

    try {
        if (!is_prime(cfg.d)) throw InputError("--d must be a prime, got " + std::to_string(cfg.d));
        if (*info) return cmd_info(cfg, file_a, partition);
        if (*equiv) return cmd_equiv(cfg, file_a, file_b, partition);
        if (*decomp) return cmd_decompose(cfg, file_a, partition);
        if (*synth) return cmd_synth(cfg, file_a);
        if (*egs) return cmd_egs(cfg, sizes, database);
        if (*spiral) return verify_spiral(cfg, n_min, n_max);
        if (*cosets) return verify_cosets(cfg);
        if (*props) return verify_properties(cfg, trials);
    } catch (const OrbitDatabaseError& e) {
        std::cerr << "error: " << database << ": " << e.what() << '\n';
        return Exit::bad_input;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::bad_input;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Exit::inconclusive;
    }
    return Exit::usage;
}
