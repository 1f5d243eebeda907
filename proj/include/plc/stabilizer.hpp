#pragma once

#include "plc/field.hpp"
#include "plc/symplectic.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace plc {

/// n generators stored as the rows of an n x 2n interleaved matrix, plus one
/// phase exponent per generator: a power of i (mod 4) for qubits, a power of
/// eta = exp(2 pi i / d) (mod d) for odd d.
class StabilizerTableau {
public:
    StabilizerTableau(Matrix generators, std::vector<unsigned> phases);
    explicit StabilizerTableau(Matrix generators);

    static StabilizerTableau from_vectors(const std::vector<SymplecticVector>& generators);
    /// Qubit tableau from Pauli strings ("XZI", "ZXZ", ...). Phases are chosen
    /// so that every generator squares to +1.
    static StabilizerTableau from_pauli_strings(const std::vector<std::string>& generators);
    /// |0>^{(x) n}: generators Z_i.
    static StabilizerTableau product_zero(FieldOrder d, std::size_t n);

    [[nodiscard]] FieldOrder field() const noexcept { return generators_.field(); }
    [[nodiscard]] std::size_t sites() const noexcept { return generators_.rows(); }
    [[nodiscard]] const Matrix& generators() const noexcept { return generators_; }
    [[nodiscard]] const std::vector<unsigned>& phases() const noexcept { return phases_; }
    [[nodiscard]] SymplecticVector generator(std::size_t i) const { return SymplecticVector::from_row(generators_, i); }

    /// Qubits: phase i^{#Y-type sites} makes each generator Hermitian and square
    /// to +1. Odd d: all phases zero. Returns *this for chaining.
    StabilizerTableau& normalize_phases();

    friend bool operator==(const StabilizerTableau&, const StabilizerTableau&) = default;

private:
    Matrix generators_;
    std::vector<unsigned> phases_;
};

/// Tensor product: sites of `b` follow the sites of `a`.
[[nodiscard]] StabilizerTableau tensor_product(const StabilizerTableau& a, const StabilizerTableau& b);

/// Applies a 2x2 symplectic matrix (acting on the column vector (x, z)) to one
/// site of every generator. Qubit phases are re-normalized afterwards.
[[nodiscard]] StabilizerTableau apply_local_symplectic(const StabilizerTableau& t, std::size_t site, const Matrix& s);

/// Applies a random element of SL(2, d) on every site.
[[nodiscard]] StabilizerTableau randomize_locally(const StabilizerTableau& t, Rng& rng);

/// Moves sites: site i of the input becomes site perm[i] of the output.
[[nodiscard]] StabilizerTableau relabel_sites(const StabilizerTableau& t, const std::vector<std::size_t>& perm);

struct ValidityReport {
    bool valid = true;
    std::vector<std::string> violations;
};

[[nodiscard]] ValidityReport is_valid_stabilizer(const StabilizerTableau& t);

/// Symmetric adjacency matrix with zero diagonal. For odd d the entries are
/// edge multiplicities in Z_d.
class GraphAdjacency {
public:
    explicit GraphAdjacency(Matrix gamma);
    GraphAdjacency(FieldOrder d, std::size_t n);

    struct Edge {
        std::size_t i;
        std::size_t j;
        unsigned multiplicity = 1;
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    /// Edges are 0-indexed here; a missing multiplicity means 1.
    static GraphAdjacency from_edges(FieldOrder d, std::size_t n, const std::vector<Edge>& edges);

    [[nodiscard]] FieldOrder field() const noexcept { return gamma_.field(); }
    [[nodiscard]] std::size_t vertices() const noexcept { return gamma_.rows(); }
    [[nodiscard]] const Matrix& matrix() const noexcept { return gamma_; }
    [[nodiscard]] unsigned multiplicity(std::size_t i, std::size_t j) const { return gamma_(i, j); }
    void set_multiplicity(std::size_t i, std::size_t j, unsigned m);
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t v) const;

    friend bool operator==(const GraphAdjacency&, const GraphAdjacency&) = default;

private:
    Matrix gamma_;
};

/// Canonical generators g_i = X_i prod_j Z_j^{Gamma_ij}, trivial phases.
[[nodiscard]] StabilizerTableau graph_state(const GraphAdjacency& g);

/// dim { f in span(generators) : f vanishes outside party alpha }
[[nodiscard]] std::size_t local_subspace_dim(const StabilizerTableau& t, const PartyPartition& p, std::size_t alpha);

/// Basis (rows, interleaved 2n-vectors) of the stabilizer vectors vanishing on party alpha.
[[nodiscard]] Matrix colocal_subspace(const StabilizerTableau& t, const PartyPartition& p, std::size_t alpha);

/// log_d of the rank of the reduced state on party alpha.
[[nodiscard]] std::size_t reduced_rank_exponent(const StabilizerTableau& t, const PartyPartition& p, std::size_t alpha);

/// Qubit local complementation: toggles every edge inside N(v).
[[nodiscard]] GraphAdjacency local_complement(const GraphAdjacency& g, std::size_t v);

/// Qudit move: multiplies every edge at v by the nonzero scalar b.
[[nodiscard]] GraphAdjacency qudit_edge_multiply(const GraphAdjacency& g, std::size_t v, unsigned b);

/// Qudit local complementation with weight a:
///   Gamma_jk += a * Gamma_vj * Gamma_vk  for j != k, diagonal kept zero.
/// For d = 2 and a = 1 this is local_complement.
[[nodiscard]] GraphAdjacency qudit_local_complement(const GraphAdjacency& g, std::size_t v, unsigned a);

/// Gamma_ij += delta (and symmetrically).
[[nodiscard]] GraphAdjacency toggle_edge(const GraphAdjacency& g, std::size_t i, std::size_t j, unsigned delta);

struct ComplementMove {
    std::size_t vertex;
};
struct ToggleMove {
    std::size_t i;
    std::size_t j;
    unsigned delta = 1;
};
using LceMove = std::variant<ComplementMove, ToggleMove>;

/// Applies local complementations and intra-party edge toggles in order.
/// Throws std::invalid_argument on a toggle that crosses parties.
[[nodiscard]] GraphAdjacency apply_lce_sequence(const GraphAdjacency& g, const PartyPartition& p,
                                                const std::vector<LceMove>& moves);

[[nodiscard]] GraphAdjacency random_graph(FieldOrder d, std::size_t n, Rng& rng);
/// Uniformly random labelled tree (Pruefer sequence) with random nonzero multiplicities.
[[nodiscard]] GraphAdjacency random_tree(FieldOrder d, std::size_t n, Rng& rng);

}  // namespace plc
