#include "plc/stabilizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plc {

namespace {

unsigned y_count(const Matrix& g, std::size_t row) {
    unsigned y = 0;
    for (std::size_t s = 0; s < g.cols() / 2; ++s) {
        if (g(row, 2 * s) != 0 && g(row, 2 * s + 1) != 0) ++y;
    }
    return y;
}

// Gram matrix of the rows under omega: (G J G^T)_ij = omega(g_i, g_j).
Matrix omega_gram(const Matrix& g) {
    const SymplecticForm form(g.field(), g.cols() / 2);
    return g * form.gram() * g.transpose();
}

}  // namespace

StabilizerTableau::StabilizerTableau(Matrix generators, std::vector<unsigned> phases)
    : generators_(std::move(generators)), phases_(std::move(phases)) {
    if (generators_.cols() != 2 * generators_.rows()) {
        throw std::invalid_argument("tableau must have n generators on n sites (n x 2n matrix)");
    }
    if (phases_.size() != generators_.rows()) throw std::invalid_argument("one phase per generator required");
    const unsigned mod = generators_.field().is_binary() ? 4U : generators_.field().value();
    for (unsigned p : phases_) {
        if (p >= mod) throw std::invalid_argument("phase exponent out of range");
    }
}

StabilizerTableau::StabilizerTableau(Matrix generators)
    : StabilizerTableau(generators, std::vector<unsigned>(generators.rows(), 0U)) {
    normalize_phases();
}

StabilizerTableau StabilizerTableau::from_vectors(const std::vector<SymplecticVector>& generators) {
    if (generators.empty()) throw std::invalid_argument("tableau needs at least one generator");
    Matrix m(generators.front().field(), generators.size(), 2 * generators.front().sites());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].sites() != generators.front().sites()) throw std::invalid_argument("generator length mismatch");
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(i, c, generators[i].entries()[c]);
    }
    return StabilizerTableau(std::move(m));
}

StabilizerTableau StabilizerTableau::from_pauli_strings(const std::vector<std::string>& generators) {
    std::vector<SymplecticVector> vs;
    vs.reserve(generators.size());
    for (const auto& s : generators) vs.push_back(SymplecticVector::from_pauli_string(s));
    return from_vectors(vs);
}

StabilizerTableau StabilizerTableau::product_zero(FieldOrder d, std::size_t n) {
    Matrix m(d, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, 2 * i + 1, 1U);
    return StabilizerTableau(std::move(m));
}

StabilizerTableau& StabilizerTableau::normalize_phases() {
    for (std::size_t i = 0; i < phases_.size(); ++i) {
        phases_[i] = field().is_binary() ? y_count(generators_, i) % 2 : 0U;
    }
    return *this;
}

StabilizerTableau tensor_product(const StabilizerTableau& a, const StabilizerTableau& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("tensor product: field mismatch");
    std::vector<unsigned> phases = a.phases();
    phases.insert(phases.end(), b.phases().begin(), b.phases().end());
    return StabilizerTableau(a.generators().direct_sum(b.generators()), std::move(phases));
}

StabilizerTableau apply_local_symplectic(const StabilizerTableau& t, std::size_t site, const Matrix& s) {
    const FieldOrder d = t.field();
    if (s.rows() != 2 || s.cols() != 2 || !(s.field() == d)) throw std::invalid_argument("local map must be 2x2 over Z_d");
    if (d.sub(d.mul(s(0, 0), s(1, 1)), d.mul(s(0, 1), s(1, 0))) != 1) {
        throw std::invalid_argument("local map is not symplectic (determinant != 1)");
    }
    if (site >= t.sites()) throw std::out_of_range("site out of range");
    Matrix g = t.generators();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        const unsigned x = g(r, 2 * site);
        const unsigned z = g(r, 2 * site + 1);
        g.set(r, 2 * site, d.add(d.mul(s(0, 0), x), d.mul(s(0, 1), z)));
        g.set(r, 2 * site + 1, d.add(d.mul(s(1, 0), x), d.mul(s(1, 1), z)));
    }
    return StabilizerTableau(std::move(g));
}

StabilizerTableau randomize_locally(const StabilizerTableau& t, Rng& rng) {
    const FieldOrder d = t.field();
    StabilizerTableau out = t;
    for (std::size_t site = 0; site < t.sites(); ++site) {
        Matrix s(d, 2, 2);
        do {
            s = random_matrix(2, 2, d, rng);
        } while (d.sub(d.mul(s(0, 0), s(1, 1)), d.mul(s(0, 1), s(1, 0))) != 1);
        out = apply_local_symplectic(out, site, s);
    }
    return out;
}

StabilizerTableau relabel_sites(const StabilizerTableau& t, const std::vector<std::size_t>& perm) {
    const std::size_t n = t.sites();
    if (perm.size() != n) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::size_t> cols(2 * n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || used[perm[i]]) throw std::invalid_argument("relabel: not a permutation");
        used[perm[i]] = true;
        cols[2 * perm[i]] = 2 * i;
        cols[2 * perm[i] + 1] = 2 * i + 1;
    }
    return StabilizerTableau(t.generators().select_cols(cols), t.phases());
}

ValidityReport is_valid_stabilizer(const StabilizerTableau& t) {
    ValidityReport report;
    const auto fail = [&](std::string why) {
        report.valid = false;
        report.violations.push_back(std::move(why));
    };
    const std::size_t r = rank(t.generators());
    if (r != t.sites()) {
        fail("generators are linearly dependent (rank " + std::to_string(r) + " < " + std::to_string(t.sites()) + ")");
    }
    const Matrix gram = omega_gram(t.generators());
    for (std::size_t i = 0; i < gram.rows(); ++i) {
        for (std::size_t j = i + 1; j < gram.cols(); ++j) {
            if (gram(i, j) != 0) {
                fail("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
            }
        }
    }
    if (t.field().is_binary()) {
        for (std::size_t i = 0; i < t.sites(); ++i) {
            if ((t.phases()[i] + y_count(t.generators(), i)) % 2 != 0) {
                fail("generator " + std::to_string(i + 1) + " does not square to +1");
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

GraphAdjacency::GraphAdjacency(Matrix gamma) : gamma_(std::move(gamma)) {
    if (!gamma_.is_square()) throw std::invalid_argument("adjacency matrix must be square");
    for (std::size_t i = 0; i < gamma_.rows(); ++i) {
        if (gamma_(i, i) != 0) throw std::invalid_argument("adjacency matrix must have zero diagonal");
        for (std::size_t j = i + 1; j < gamma_.cols(); ++j) {
            if (gamma_(i, j) != gamma_(j, i)) throw std::invalid_argument("adjacency matrix must be symmetric");
        }
    }
}

GraphAdjacency::GraphAdjacency(FieldOrder d, std::size_t n) : gamma_(d, n, n) {}

GraphAdjacency GraphAdjacency::from_edges(FieldOrder d, std::size_t n, const std::vector<Edge>& edges) {
    GraphAdjacency g(d, n);
    for (const auto& e : edges) {
        if (e.i >= n || e.j >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.i == e.j) throw std::invalid_argument("self-loops are not allowed");
        g.set_multiplicity(e.i, e.j, d.add(g.multiplicity(e.i, e.j), d.reduce(e.multiplicity)));
    }
    return g;
}

void GraphAdjacency::set_multiplicity(std::size_t i, std::size_t j, unsigned m) {
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    gamma_.set(i, j, m);
    gamma_.set(j, i, m);
}

std::vector<GraphAdjacency::Edge> GraphAdjacency::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices(); ++i) {
        for (std::size_t j = i + 1; j < vertices(); ++j) {
            if (gamma_(i, j) != 0) out.push_back({i, j, gamma_(i, j)});
        }
    }
    return out;
}

std::vector<std::size_t> GraphAdjacency::neighbours(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < vertices(); ++j) {
        if (gamma_(v, j) != 0) out.push_back(j);
    }
    return out;
}

StabilizerTableau graph_state(const GraphAdjacency& g) {
    const std::size_t n = g.vertices();
    Matrix m(g.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, 2 * i, 1U);
        for (std::size_t j = 0; j < n; ++j) m.set(i, 2 * j + 1, g.multiplicity(i, j));
    }
    return StabilizerTableau(std::move(m), std::vector<unsigned>(n, 0U));
}

std::size_t local_subspace_dim(const StabilizerTableau& t, const PartyPartition& p, std::size_t alpha) {
    if (p.sites() != t.sites()) throw std::invalid_argument("partition does not match the tableau");
    // coefficient vectors whose combination vanishes on every other party
    const Matrix outside = t.generators().select_cols(interleaved_columns(p.complement(alpha)));
    return t.sites() - rank(outside);
}

Matrix colocal_subspace(const StabilizerTableau& t, const PartyPartition& p, std::size_t alpha) {
    if (p.sites() != t.sites()) throw std::invalid_argument("partition does not match the tableau");
    const Matrix inside = t.generators().select_cols(interleaved_columns(p.party(alpha)));
    const Matrix coeffs = left_null_space(inside);
    if (coeffs.rows() == 0) return Matrix(t.field(), 0, t.generators().cols());
    return coeffs * t.generators();
}

std::size_t reduced_rank_exponent(const StabilizerTableau& t, const PartyPartition& p, std::size_t alpha) {
    return p.party(alpha).size() - local_subspace_dim(t, p, alpha);
}

GraphAdjacency local_complement(const GraphAdjacency& g, std::size_t v) {
    if (!g.field().is_binary()) throw std::invalid_argument("local_complement is the qubit rule; use qudit_local_complement");
    return qudit_local_complement(g, v, 1);
}

GraphAdjacency qudit_edge_multiply(const GraphAdjacency& g, std::size_t v, unsigned b) {
    const FieldOrder d = g.field();
    if (d.reduce(b) == 0) throw std::invalid_argument("edge multiplier must be nonzero");
    if (v >= g.vertices()) throw std::out_of_range("vertex out of range");
    GraphAdjacency out = g;
    for (std::size_t j = 0; j < g.vertices(); ++j) {
        if (j != v) out.set_multiplicity(v, j, d.mul(g.multiplicity(v, j), d.reduce(b)));
    }
    return out;
}

GraphAdjacency qudit_local_complement(const GraphAdjacency& g, std::size_t v, unsigned a) {
    const FieldOrder d = g.field();
    if (v >= g.vertices()) throw std::out_of_range("vertex out of range");
    GraphAdjacency out = g;
    const auto nb = g.neighbours(v);
    for (std::size_t x = 0; x < nb.size(); ++x) {
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
            const std::size_t j = nb[x];
            const std::size_t k = nb[y];
            const unsigned delta = d.mul(d.reduce(a), d.mul(g.multiplicity(v, j), g.multiplicity(v, k)));
            out.set_multiplicity(j, k, d.add(out.multiplicity(j, k), delta));
        }
    }
    return out;
}

GraphAdjacency toggle_edge(const GraphAdjacency& g, std::size_t i, std::size_t j, unsigned delta) {
    if (i == j) throw std::invalid_argument("toggle_edge needs two distinct vertices");
    if (i >= g.vertices() || j >= g.vertices()) throw std::out_of_range("vertex out of range");
    GraphAdjacency out = g;
    out.set_multiplicity(i, j, g.field().add(g.multiplicity(i, j), g.field().reduce(delta)));
    return out;
}

GraphAdjacency apply_lce_sequence(const GraphAdjacency& g, const PartyPartition& p, const std::vector<LceMove>& moves) {
    if (p.sites() != g.vertices()) throw std::invalid_argument("partition does not match the graph");
    GraphAdjacency cur = g;
    for (const auto& move : moves) {
        if (const auto* c = std::get_if<ComplementMove>(&move)) {
            cur = cur.field().is_binary() ? local_complement(cur, c->vertex) : qudit_local_complement(cur, c->vertex, 1);
        } else {
            const auto& t = std::get<ToggleMove>(move);
            if (t.i >= g.vertices() || t.j >= g.vertices() || p.party_of(t.i) != p.party_of(t.j)) {
                throw std::invalid_argument("edge toggle " + std::to_string(t.i + 1) + "-" + std::to_string(t.j + 1) +
                                            " crosses parties");
            }
            cur = toggle_edge(cur, t.i, t.j, t.delta);
        }
    }
    return cur;
}

GraphAdjacency random_graph(FieldOrder d, std::size_t n, Rng& rng) {
    GraphAdjacency g(d, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.set_multiplicity(i, j, static_cast<unsigned>(rng.below(d.value())));
        }
    }
    return g;
}

GraphAdjacency random_tree(FieldOrder d, std::size_t n, Rng& rng) {
    GraphAdjacency g(d, n);
    if (n < 2) return g;
    const auto weight = [&] { return 1U + static_cast<unsigned>(rng.below(d.value() - 1)); };
    if (n == 2) {
        g.set_multiplicity(0, 1, weight());
        return g;
    }
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = static_cast<std::size_t>(rng.below(n));
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code) ++degree[c];
    for (std::size_t c : code) {
        std::size_t leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        g.set_multiplicity(leaf, c, weight());
        --degree[leaf];
        --degree[c];
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) last.push_back(v);
    }
    g.set_multiplicity(last.at(0), last.at(1), weight());
    return g;
}

}  // namespace plc
