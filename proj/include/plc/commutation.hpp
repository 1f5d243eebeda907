#pragma once

#include "plc/field.hpp"
#include "plc/stabilizer.hpp"
#include "plc/symplectic.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plc {

/// One alternating n x n matrix per party. Entry (i, j) of matrix alpha is
/// omega(g_i restricted to alpha, g_j restricted to alpha) for some generator
/// basis g_1..g_n. Construction does not enforce the invariants; validate()
/// reports them.
class CommutationTuple {
public:
    CommutationTuple(FieldOrder d, std::size_t n, std::vector<Matrix> matrices);

    [[nodiscard]] FieldOrder field() const noexcept { return field_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t parties() const noexcept { return matrices_.size(); }
    [[nodiscard]] const Matrix& operator[](std::size_t alpha) const { return matrices_.at(alpha); }
    [[nodiscard]] const std::vector<Matrix>& matrices() const noexcept { return matrices_; }

    /// n x (n M) matrix [C_1 | C_2 | ... | C_M].
    [[nodiscard]] Matrix concatenated() const;
    /// Principal sub-tuple on the given index range (a block of a block-diagonal tuple).
    [[nodiscard]] CommutationTuple principal_block(std::size_t offset, std::size_t count) const;
    /// Same generators, matrices permuted: result[k] = (*this)[order[k]].
    [[nodiscard]] CommutationTuple reorder_parties(const std::vector<std::size_t>& order) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CommutationTuple&, const CommutationTuple&) = default;

private:
    FieldOrder field_;
    std::size_t n_;
    std::vector<Matrix> matrices_;
};

[[nodiscard]] bool is_alternating(const Matrix& m);

/// Tuple for the given generators (tableau rows) and party partition.
[[nodiscard]] CommutationTuple from_state(const StabilizerTableau& t, const PartyPartition& p);

/// Tuple for the canonical generators of a graph state, computed directly
/// from the adjacency matrix: the contribution of site i agrees with Gamma in
/// column i and with -Gamma in row i.
[[nodiscard]] CommutationTuple from_graph(const GraphAdjacency& g, const PartyPartition& p);

/// C_alpha -> Q C_alpha Q^T for every alpha. Row k of Q expresses the k-th new
/// generator in terms of the old ones.
[[nodiscard]] CommutationTuple change_basis(const CommutationTuple& c, const Matrix& q);

/// Replaces parties i and j by their union (stored at position min(i, j)).
[[nodiscard]] CommutationTuple merge_parties(const CommutationTuple& c, std::size_t i, std::size_t j);

/// Block-diagonal tuple a (+) b (party counts must agree).
[[nodiscard]] CommutationTuple direct_sum(const CommutationTuple& a, const CommutationTuple& b);

struct TupleReport {
    bool alternating = true;
    bool zero_sum = true;
    std::optional<bool> rank_condition;  // only computed when requested and the first two hold
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept { return alternating && zero_sum && rank_condition.value_or(true); }
};

[[nodiscard]] TupleReport validate(const CommutationTuple& c, bool check_rank_condition = false);

/// 2 rk([C_1 | ... | C_M]) == sum_alpha rk(C_alpha). Throws std::invalid_argument
/// when the tuple is not alternating and zero-sum.
[[nodiscard]] bool rank_condition(const CommutationTuple& c);

struct RankSides {
    std::size_t twice_concatenated = 0;
    std::size_t sum_of_ranks = 0;
};
[[nodiscard]] RankSides rank_sides(const std::vector<Matrix>& matrices);

/// 2 rk(concatenation) <= sum of ranks, for alternating zero-sum families of
/// any size. Throws std::invalid_argument if the precondition fails.
[[nodiscard]] bool rank_inequality_check(const std::vector<Matrix>& matrices);

/// p * c * p^T = H (+) ... (+) H (+) 0 with H = [[0, 1], [-1, 0]].
struct DicksonForm {
    Matrix transform;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (2k, 2k+1) in the new basis
    std::vector<std::size_t> zeros;
};

/// Symplectic Gram-Schmidt; always pairs the lowest remaining index first.
[[nodiscard]] DicksonForm dickson_normal_form(const Matrix& c);

struct SynthesisResult {
    StabilizerTableau tableau;
    PartyPartition partition;
};

/// Builds a stabilizer state whose tuple for its generators (in order) equals
/// c exactly. Party alpha receives rk(C_alpha)/2 sites; the n - rk(concat)
/// unentangled |0> sites all go to party 1 and are numbered last.
/// Throws std::invalid_argument if c is invalid or violates the rank condition.
[[nodiscard]] SynthesisResult synthesize_state(const CommutationTuple& c);

/// Random alternating matrix over Z_d.
[[nodiscard]] Matrix random_alternating(std::size_t n, FieldOrder d, Rng& rng);

/// M - 1 random alternating matrices and minus their sum.
[[nodiscard]] std::vector<Matrix> random_zero_sum_family(std::size_t n, std::size_t m, FieldOrder d, Rng& rng);

}  // namespace plc
