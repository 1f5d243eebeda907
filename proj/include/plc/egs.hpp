#pragma once

#include "plc/commutation.hpp"
#include "plc/equivalence.hpp"
#include "plc/field.hpp"
#include "plc/stabilizer.hpp"
#include "plc/symplectic.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plc {

/// Ordered party sizes; party k owns a contiguous block of sites.
class PartyConfiguration {
public:
    explicit PartyConfiguration(std::vector<std::size_t> sizes);
    /// "2,1,1,1"
    static PartyConfiguration parse(std::string_view text);

    [[nodiscard]] const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    [[nodiscard]] std::size_t sites() const noexcept;
    [[nodiscard]] std::size_t parties() const noexcept { return sizes_.size(); }
    [[nodiscard]] PartyPartition partition() const { return PartyPartition::contiguous(sizes_); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PartyConfiguration&, const PartyConfiguration&) = default;

private:
    std::vector<std::size_t> sizes_;
};

/// Path 1-2-...-n with site j in party ((j-1) mod 4) + 1.
[[nodiscard]] std::pair<GraphAdjacency, PartyPartition> spiral_graph(std::size_t n, FieldOrder d = FieldOrder(2));

/// All labelled (multi)graphs on the configuration's sites, indexed by
/// 0 .. d^(n(n-1)/2) - 1 with one base-d digit per vertex pair (i < j in
/// lexicographic order, least significant first).
class GraphSpace {
public:
    GraphSpace(PartyConfiguration config, FieldOrder d);

    [[nodiscard]] const PartyConfiguration& configuration() const noexcept { return config_; }
    [[nodiscard]] const PartyPartition& partition() const noexcept { return partition_; }
    [[nodiscard]] FieldOrder field() const noexcept { return d_; }
    [[nodiscard]] std::size_t edge_slots() const noexcept { return pairs_.size(); }
    /// Number of graphs, saturating at UINT64_MAX.
    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }

    [[nodiscard]] GraphAdjacency graph(std::uint64_t index) const;
    /// True iff no permutation of sites inside parties maps this graph to a
    /// smaller index. Keeps one graph per orbit. Throws std::length_error when
    /// the parties have more than max_symmetries joint permutations.
    [[nodiscard]] bool is_canonical(std::uint64_t index) const;
    [[nodiscard]] bool has_canonical_filter() const noexcept { return symmetric_filter_; }

    static constexpr std::uint64_t max_symmetries = 40320;

private:
    PartyConfiguration config_;
    PartyPartition partition_;
    FieldOrder d_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::vector<std::size_t>> slot_perms_;  // non-identity, acting on edge slots
    std::uint64_t size_ = 0;
    bool symmetric_filter_ = false;
};

struct EnumerationOptions {
    bool canonical_only = false;
    std::uint64_t budget = std::uint64_t{1} << 24;  // max graphs in the space
};

/// Calls visit for every graph (or every canonical graph). Throws
/// std::length_error if the space exceeds the budget.
void enumerate_graph_states(const PartyConfiguration& config, FieldOrder d,
                            const std::function<void(const GraphAdjacency&, const PartyPartition&)>& visit,
                            const EnumerationOptions& options = {});

struct EgsOptions {
    SearchBudget search;
    std::uint64_t graph_budget = std::uint64_t{1} << 24;
    unsigned workers = 0;  // 0 = hardware concurrency
    bool canonical_filter = true;
};

struct EgsRepresentative {
    GraphAdjacency graph;
    PartyPartition partition;
    CommutationTuple tuple;
    std::size_t relabel_class = 0;  // index into the classes up to party relabeling
    std::size_t members = 0;        // examined graphs landing in this class
};

struct QuarantinedGraph {
    GraphAdjacency graph;
    PartyPartition partition;
    std::string stage;  // "decomposition" or "deduplication"
    std::string reason;
};

struct EgsReport {
    PartyConfiguration configuration{{1}};
    unsigned d = 2;
    std::vector<EgsRepresentative> representatives;
    std::size_t class_count = 0;
    std::size_t class_count_up_to_relabeling = 0;
    std::vector<QuarantinedGraph> quarantine;
    bool complete = true;  // nothing quarantined and the whole space examined
    std::string partial_reason;
    std::uint64_t graphs_in_space = 0;
    std::uint64_t graphs_examined = 0;  // after the canonical filter
    std::uint64_t decomposable = 0;
    std::uint64_t indecomposable = 0;
    SearchBudget budget;
    std::uint64_t graph_budget = 0;
    std::vector<std::string> notes;
};

/// Enumerates graphs, drops decomposable ones and keeps one representative
/// per PLC class. Inconclusive decisions are quarantined, never dropped.
/// The report does not depend on the number of workers.
[[nodiscard]] EgsReport egs_search(const PartyConfiguration& config, FieldOrder d, const EgsOptions& options = {});

/// Same pipeline on d = 3 multigraphs.
[[nodiscard]] EgsReport qutrit_egs_search(const PartyConfiguration& config, const EgsOptions& options = {});

class OrbitDatabaseError : public std::runtime_error {
public:
    OrbitDatabaseError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Blocks separated by blank lines; each block is a header "n=<count>"
/// followed by edge lines "i j [m]" (1-indexed). '#' starts a comment.
[[nodiscard]] std::vector<GraphAdjacency> parse_orbit_database(std::istream& in, FieldOrder d);

/// Runs the pipeline on every assignment of each database graph's vertices to
/// the configuration's parties (one assignment per choice of vertex sets).
/// Graphs whose vertex count differs from the configuration are skipped.
[[nodiscard]] EgsReport egs_search_from_orbit_database(std::istream& in, const PartyConfiguration& config, FieldOrder d,
                                                       const EgsOptions& options = {});

struct SpiralCheck {
    std::size_t n = 0;
    std::vector<std::size_t> sizes;
    SplitVerdict verdict = SplitVerdict::inconclusive;
    /// Fitting verdict on the two-matrix tuple (C_1 + C_2, C_2 + C_3).
    SplitVerdict merged_pair = SplitVerdict::inconclusive;
    /// How many of the 24 ways to name three of the four parties (a1, a2, a3)
    /// make the merged pair split; the layout only fixes the order along the path.
    std::size_t splitting_namings = 0;
    /// First and last generators touch two parties, all others three.
    bool layout_ok = false;
};

[[nodiscard]] std::vector<SpiralCheck> verify_spiral_family(FieldOrder d, std::size_t n_min, std::size_t n_max,
                                                            const SearchBudget& budget = {});

struct CosetCheckReport {
    std::size_t group_order = 0;
    std::size_t subgroup_order = 0;
    std::size_t coset_count = 0;
    std::size_t sequences_verified = 0;  // sequences whose product lies in the tabulated B's coset
    std::size_t distinct_cosets = 0;     // distinct cosets hit by the sequences
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
        return failures.empty() && coset_count == 20 && distinct_cosets == coset_count && sequences_verified == 20;
    }
};

/// Symplectic images (4 x 4 over Z_2, sites interleaved x1 z1 x2 z2) of the
/// two-qubit operators CZ, LC at 1 and LC at 2 when disconnected, LC at 1 and
/// LC at 2 when connected.
[[nodiscard]] std::vector<Matrix> two_qubit_lce_generators();

/// Product of the generators, leftmost index applied first. Throws
/// std::invalid_argument when an LC operator does not fit the current
/// connectivity (the qubits start disconnected; index 0 toggles it).
[[nodiscard]] Matrix compose_lce_sequence(const std::vector<std::size_t>& sequence);

/// True iff m lies in the local subgroup Sp(2,2) x Sp(2,2).
[[nodiscard]] bool is_local_symplectic(const Matrix& m);

/// Enumerates Sp(4,2) and checks the 20 tabulated coset representatives and
/// their generating sequences.
[[nodiscard]] CosetCheckReport verify_coset_table();

struct TreeNormalization {
    GraphAdjacency normalized;
    std::vector<std::pair<std::size_t, unsigned>> scalings;  // (vertex, factor) for qudit_edge_multiply, in order
};

/// Brings every edge multiplicity of a forest to 1 by scaling at vertices.
/// Throws std::invalid_argument if the graph has a cycle.
/// Index of the representative congruent to the tuple of (g, p), optionally
/// also trying every permutation of equally sized parties.
[[nodiscard]] std::optional<std::size_t> find_class(const EgsReport& report, const GraphAdjacency& g,
                                                    const PartyPartition& p, bool up_to_relabeling);

[[nodiscard]] TreeNormalization normalize_tree_multiplicities(const GraphAdjacency& g);

}  // namespace plc
