#include "plc/io.hpp"

#include <fstream>
#include <sstream>

namespace plc {

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string pauli_letters(const SymplecticVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.sites(); ++i) s += "IZXY"[2 * v.x(i) + v.z(i)];
    return s;
}

}  // namespace

Json to_json(const StabilizerTableau& t) {
    Json j;
    j["d"] = t.field().value();
    j["n"] = t.sites();
    Json gens = Json::array();
    for (std::size_t i = 0; i < t.generators().rows(); ++i) {
        if (t.field().is_binary()) {
            gens.push_back(pauli_letters(t.generator(i)));
        } else {
            Json row = Json::array();
            for (std::size_t k = 0; k < t.generators().cols(); ++k) row.push_back(t.generators()(i, k));
            gens.push_back(std::move(row));
        }
    }
    j["generators"] = std::move(gens);
    if (t.field().is_binary()) j["phases"] = t.phases();
    return j;
}

Json to_json(const CommutationTuple& c) {
    Json j;
    j["d"] = c.field().value();
    j["n"] = c.size();
    Json ms = Json::array();
    for (const auto& m : c.matrices()) ms.push_back(to_json(m));
    j["matrices"] = std::move(ms);
    return j;
}

Json to_json(const GraphAdjacency& g) {
    Json j;
    j["d"] = g.field().value();
    j["n"] = g.vertices();
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json edge = {e.i + 1, e.j + 1};
        if (e.multiplicity != 1) edge.push_back(e.multiplicity);
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const PartyPartition& p) { return p.to_string(); }

Json to_json(const SearchBudget& b) {
    return {{"ring_enumeration", b.ring_enumeration},
            {"congruence_search", b.congruence_search},
            {"random_samples", b.random_samples},
            {"seed", b.seed}};
}

Json to_json(const CongruenceResult& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["invariants_match"] = r.invariants_match;
    j["solution_dimension"] = r.solution_dimension;
    j["candidates_examined"] = r.candidates_examined;
    j["exhaustive"] = r.exhaustive;
    j["budget"] = to_json(r.budget);
    return j;
}

Json to_json(const SplitResult& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["method"] = r.method;
    j["first_size"] = r.first_size;
    j["second_size"] = r.second_size;
    j["ring_dimension"] = r.ring_dimension;
    j["elements_examined"] = r.elements_examined;
    j["exhaustive"] = r.exhaustive;
    if (r.verdict == SplitVerdict::split) j["witness"] = to_json(r.witness);
    return j;
}

Json to_json(const DecompositionReport& r) {
    Json j;
    j["complete"] = r.complete;
    j["inconclusive_blocks"] = r.inconclusive_blocks;
    Json sizes = Json::array();
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        sizes.push_back(b.size());
        blocks.push_back(to_json(b));
    }
    j["block_sizes"] = std::move(sizes);
    j["blocks"] = std::move(blocks);
    j["witness"] = to_json(r.witness);
    return j;
}

Json to_json(const NamedCounts& c) {
    Json j;
    j["zeros_per_party"] = c.zeros_per_party;
    Json ghz = Json::array();
    for (const auto& [parties, count] : c.ghz) {
        Json one_based = Json::array();
        for (std::size_t a : parties) one_based.push_back(a + 1);
        ghz.push_back({{"parties", std::move(one_based)}, {"count", count}});
    }
    j["ghz"] = std::move(ghz);
    j["other_blocks"] = c.other_blocks;
    j["inconclusive_blocks"] = c.inconclusive_blocks;
    return j;
}

Json to_json(const TripartiteCounts& c) {
    return {{"zeros", c.zeros},
            {"bell", {{"12", c.bell[0]}, {"13", c.bell[1]}, {"23", c.bell[2]}}},
            {"ghz", c.ghz}};
}

Json to_json(const EgsReport& r) {
    Json j;
    j["configuration"] = r.configuration.sizes();
    j["d"] = r.d;
    j["status"] = r.complete ? "COMPLETE" : "PARTIAL";
    if (!r.complete) j["partial_reason"] = r.partial_reason;
    j["class_count"] = r.class_count;
    j["class_count_up_to_relabeling"] = r.class_count_up_to_relabeling;
    j["graphs_in_space"] = r.graphs_in_space;
    j["graphs_examined"] = r.graphs_examined;
    j["decomposable"] = r.decomposable;
    j["indecomposable"] = r.indecomposable;
    Json reps = Json::array();
    for (const auto& rep : r.representatives) {
        Json e = to_json(rep.graph);
        e["partition"] = to_json(rep.partition);
        e["relabel_class"] = rep.relabel_class;
        e["members"] = rep.members;
        reps.push_back(std::move(e));
    }
    j["representatives"] = std::move(reps);
    Json q = Json::array();
    for (const auto& item : r.quarantine) {
        Json e = to_json(item.graph);
        e["partition"] = to_json(item.partition);
        e["stage"] = item.stage;
        e["reason"] = item.reason;
        q.push_back(std::move(e));
    }
    j["quarantine"] = std::move(q);
    j["notes"] = r.notes;
    j["budget"] = to_json(r.budget);
    j["graph_budget"] = r.graph_budget;
    return j;
}

Json to_json(const CosetCheckReport& r) {
    return {{"group_order", r.group_order},         {"subgroup_order", r.subgroup_order},
            {"coset_count", r.coset_count},         {"sequences_verified", r.sequences_verified},
            {"distinct_cosets", r.distinct_cosets}, {"failures", r.failures},
            {"ok", r.ok()}};
}

Json to_json(const SpiralCheck& s) {
    return {{"n", s.n},
            {"sizes", s.sizes},
            {"verdict", to_string(s.verdict)},
            {"merged_pair", to_string(s.merged_pair)},
            {"splitting_namings", s.splitting_namings},
            {"layout_ok", s.layout_ok}};
}

// ---------------------------------------------------------------------------

namespace {

unsigned field_of(const Json& j) {
    if (!j.contains("d")) return 2;
    if (!j["d"].is_number_unsigned()) throw InputError("\"d\" must be a positive integer");
    return j["d"].get<unsigned>();
}

long long integer(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw InputError(what + " must be an integer");
    return v.get<long long>();
}

}  // namespace

Matrix matrix_from_json(const Json& j, FieldOrder d) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j[0].size();
    Matrix m(d, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InputError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < cols; ++k) m.set(i, k, integer(j[i][k], "matrix entry"));
    }
    return m;
}

StabilizerTableau tableau_from_json(const Json& j) {
    try {
        const FieldOrder d(field_of(j));
        if (j.contains("edges")) {
            if (!j.contains("n")) throw InputError("graph state needs \"n\"");
            const auto n = static_cast<std::size_t>(integer(j["n"], "\"n\""));
            GraphAdjacency g(d, n);
            for (const auto& e : j["edges"]) {
                if (!e.is_array() || e.size() < 2 || e.size() > 3) throw InputError("edge must be [i, j] or [i, j, m]");
                const long long a = integer(e[0], "edge endpoint");
                const long long b = integer(e[1], "edge endpoint");
                const long long m = e.size() == 3 ? integer(e[2], "multiplicity") : 1;
                if (a < 1 || b < 1 || a > static_cast<long long>(n) || b > static_cast<long long>(n) || a == b) {
                    throw InputError("bad edge [" + std::to_string(a) + ", " + std::to_string(b) + "]");
                }
                g.set_multiplicity(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1), d.reduce(m));
            }
            return graph_state(g);
        }
        if (!j.contains("generators") || !j["generators"].is_array()) {
            throw InputError("state needs \"generators\" or \"edges\"");
        }
        const auto& gens = j["generators"];
        if (!gens.empty() && gens[0].is_string()) {
            if (!d.is_binary()) throw InputError("Pauli strings are only accepted for d = 2");
            std::vector<std::string> rows;
            for (const auto& g : gens) {
                if (!g.is_string()) throw InputError("generators must all be strings");
                rows.push_back(g.get<std::string>());
            }
            StabilizerTableau t = StabilizerTableau::from_pauli_strings(rows);
            if (j.contains("phases")) {
                std::vector<unsigned> ph;
                for (const auto& p : j["phases"]) ph.push_back(static_cast<unsigned>(integer(p, "phase") & 3));
                t = StabilizerTableau(t.generators(), ph);
            }
            return t;
        }
        return StabilizerTableau(matrix_from_json(gens, d));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

CommutationTuple tuple_from_json(const Json& j) {
    try {
        const FieldOrder d(field_of(j));
        if (!j.contains("matrices") || !j["matrices"].is_array()) throw InputError("tuple needs \"matrices\"");
        std::vector<Matrix> ms;
        for (const auto& m : j["matrices"]) ms.push_back(matrix_from_json(m, d));
        if (ms.empty()) throw InputError("tuple needs at least one matrix");
        const std::size_t n = j.contains("n") ? static_cast<std::size_t>(integer(j["n"], "\"n\"")) : ms[0].rows();
        for (const auto& m : ms) {
            if (m.rows() != n || m.cols() != n) throw InputError("every matrix must be " + std::to_string(n) + " x " + std::to_string(n));
        }
        return CommutationTuple(d, n, std::move(ms));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

GraphAdjacency parse_edge_list(std::istream& in, FieldOrder d) {
    auto graphs = parse_orbit_database(in, d);
    if (graphs.size() != 1) {
        throw InputError("edge list must contain exactly one graph, found " + std::to_string(graphs.size()));
    }
    return std::move(graphs[0]);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text, const std::string& path) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace

StabilizerTableau load_state(const std::string& path, FieldOrder d) {
    const std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return tableau_from_json(parse_json(text, path));
        } catch (const InputError& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    std::istringstream in(text);
    try {
        return graph_state(parse_edge_list(in, d));
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

CommutationTuple load_tuple(const std::string& path) {
    try {
        return tuple_from_json(parse_json(slurp(path), path));
    } catch (const InputError& e) {
        throw InputError(std::string(e.what()).rfind(path, 0) == 0 ? e.what() : path + ": " + e.what());
    }
}

}  // namespace plc
