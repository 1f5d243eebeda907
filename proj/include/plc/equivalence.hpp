#pragma once

#include "plc/commutation.hpp"
#include "plc/field.hpp"
#include "plc/stabilizer.hpp"
#include "plc/symplectic.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plc {

/// Limits for the exhaustive parts of the decision procedures. A search that
/// would exceed its limit falls back to seeded random sampling and reports
/// "inconclusive" rather than guessing.
struct SearchBudget {
    /// Max endomorphism-ring elements scanned exhaustively (d^dim).
    std::uint64_t ring_enumeration = std::uint64_t{1} << 20;
    /// Max candidate matrices scanned exhaustively in a congruence search (d^dim).
    std::uint64_t congruence_search = std::uint64_t{1} << 20;
    /// Random samples tried once a space is too large to exhaust.
    std::uint64_t random_samples = 4096;
    std::uint64_t seed = 0;
};

enum class Verdict { equivalent, inequivalent, inconclusive };
[[nodiscard]] const char* to_string(Verdict v) noexcept;

/// Ranks of sum_{alpha in S} C_alpha for every non-empty subset S of parties
/// (indexed by bitmask; entry 0 holds the rank of the concatenation). Equal
/// vectors are necessary for congruence. Parties beyond the 12th are only
/// covered through singletons and pairs.
[[nodiscard]] std::vector<std::size_t> congruence_invariants(const CommutationTuple& c);

struct CongruenceResult {
    Verdict verdict = Verdict::inconclusive;
    std::optional<Matrix> witness;  // Q with Q A_alpha Q^T = B_alpha
    std::string reason;
    bool invariants_match = false;
    std::vector<std::size_t> invariants_a;
    std::vector<std::size_t> invariants_b;
    std::size_t solution_dimension = 0;  // dim of the linear relaxation projected to Q
    std::uint64_t candidates_examined = 0;
    bool exhaustive = false;
    SearchBudget budget;
};

/// Decides whether one invertible Q maps every A_alpha to B_alpha by
/// congruence. Phases: (1) subset-rank invariants; (2) the linear relaxation
/// Q A_alpha = B_alpha P in the unknowns (Q, P); (3) a search of the Q-part
/// of that solution space for an invertible Q with Q A Q^T = B, exhaustive
/// when it has at most budget.congruence_search points.
[[nodiscard]] CongruenceResult congruence_equivalent(const CommutationTuple& a, const CommutationTuple& b,
                                                     const SearchBudget& budget = {});

/// congruence_equivalent on the tuples of two states for the same partition.
[[nodiscard]] CongruenceResult plc_equivalent(const StabilizerTableau& a, const StabilizerTableau& b,
                                              const PartyPartition& p, const SearchBudget& budget = {});

/// Basis of { E : C_alpha E = E^T C_alpha for all alpha } (column-major system).
[[nodiscard]] std::vector<Matrix> endomorphism_basis(const CommutationTuple& c);

enum class SplitVerdict { indecomposable, split, inconclusive };
[[nodiscard]] const char* to_string(SplitVerdict v) noexcept;

struct SplitResult {
    SplitVerdict verdict = SplitVerdict::inconclusive;
    Matrix witness{FieldOrder(2), 0, 0};  // Q with Q C Q^T = B1 (+) B2 when split
    std::size_t first_size = 0;
    std::size_t second_size = 0;
    std::size_t ring_dimension = 0;
    std::uint64_t elements_examined = 0;
    bool exhaustive = false;
    std::string method;
};

/// Looks for a self-adjoint endomorphism that is neither nilpotent nor
/// invertible; the Fitting decomposition (image (+) kernel of E^n) of such an
/// element block-diagonalizes the tuple. Works for any alternating tuple,
/// zero-sum or not.
[[nodiscard]] SplitResult fitting_split(const CommutationTuple& c, const SearchBudget& budget = {});

struct DecompositionReport {
    std::vector<CommutationTuple> blocks;  // each indecomposable (unless complete == false)
    Matrix witness{FieldOrder(2), 0, 0};  // change_basis(c, witness) = (+) blocks
    bool complete = true;
    std::size_t inconclusive_blocks = 0;
};

/// Recursive Fitting splits. Blocks are ordered by decreasing size.
[[nodiscard]] DecompositionReport decompose(const CommutationTuple& c, const SearchBudget& budget = {});

/// Reference tuple for a GHZ state shared by the given parties (a Bell pair
/// for two parties, |0> for one), built from a star graph.
[[nodiscard]] CommutationTuple ghz_reference(FieldOrder d, std::size_t parties, const std::vector<std::size_t>& members);

/// Block label after matching against the reference tuples.
struct BlockClass {
    enum class Kind { zero, ghz, other, inconclusive } kind = Kind::other;
    std::vector<std::size_t> parties;  // parties with a nonzero matrix
};

[[nodiscard]] BlockClass classify_block(const CommutationTuple& block, const SearchBudget& budget = {});

struct NamedCounts {
    std::vector<std::size_t> zeros_per_party;
    /// GHZ-type blocks keyed by the set of parties they span (size 2 = Bell pair).
    std::map<std::vector<std::size_t>, std::size_t> ghz;
    std::size_t other_blocks = 0;
    std::size_t inconclusive_blocks = 0;
};

[[nodiscard]] NamedCounts named_counts(const StabilizerTableau& s, const PartyPartition& p,
                                       const SearchBudget& budget = {});

struct TripartiteCounts {
    std::array<std::size_t, 3> zeros{};
    std::array<std::size_t, 3> bell{};  // pairs (1,2), (1,3), (2,3)
    std::size_t ghz = 0;
    friend bool operator==(const TripartiteCounts&, const TripartiteCounts&) = default;
};

/// Every tripartite stabilizer state is PLC-equivalent to a product of |0>,
/// Bell pairs and GHZ states. Throws std::logic_error if a block matches none.
[[nodiscard]] TripartiteCounts tripartite_canonical_counts(const StabilizerTableau& s, const PartyPartition& p,
                                                           const SearchBudget& budget = {});

/// n - dim span of all colocal subspaces: the number of extractable GHZ states
/// across all parties.
[[nodiscard]] std::size_t ghz_extraction_count(const StabilizerTableau& s, const PartyPartition& p);

struct GhzConditionResult {
    bool holds = false;
    std::size_t first_party = 0;
    std::size_t excluded_party = 0;
    std::vector<SymplecticVector> witnesses;  // f_j supported on first (+) the j-th middle party
};

/// With first party a1 and excluded party aM: do stabilizer elements f_j exist,
/// supported exactly on a1 and the j-th remaining party, all with one common
/// nonzero restriction to a1? Requires every party to have a trivial local
/// subspace (std::invalid_argument otherwise) and at least three parties.
[[nodiscard]] GhzConditionResult ghz_extraction_condition(const StabilizerTableau& s, const PartyPartition& p,
                                                          std::size_t first_party, std::size_t excluded_party);

/// Tries every choice of (first, excluded) party.
[[nodiscard]] GhzConditionResult ghz_extraction_condition_any(const StabilizerTableau& s, const PartyPartition& p);

/// Four-party size test: a party more than twice as large as the smallest
/// forces decomposability. Throws unless exactly four sizes are given.
[[nodiscard]] bool forced_decomposable_by_sizes(const std::vector<std::size_t>& sizes);

struct OrderInvarianceReport {
    bool consistent = true;
    std::size_t trials = 0;
    std::size_t inconclusive = 0;
    std::vector<std::size_t> block_sizes;
};

/// Re-runs decompose after random basis changes and search orders and checks
/// that the blocks agree up to congruence and order.
[[nodiscard]] OrderInvarianceReport decomposition_order_invariance(const CommutationTuple& c, std::size_t trials,
                                                                   std::uint64_t seed, const SearchBudget& budget = {});

}  // namespace plc
