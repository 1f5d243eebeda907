#include "plc/stabilizer.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

using namespace plc;
using plc::fixtures::F2;
using plc::fixtures::F3;

namespace {
std::vector<std::string> names(const StabilizerTableau& t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.sites(); ++i) out.push_back(t.generator(i).to_string());
    return out;
}
}  // namespace

TEST(GraphState, CanonicalGenerators) {
    EXPECT_EQ(names(graph_state(fixtures::path_graph(F2, 2))), (std::vector<std::string>{"X1Z2", "Z1X2"}));
    EXPECT_EQ(names(graph_state(fixtures::path_graph(F2, 3))), (std::vector<std::string>{"X1Z2", "Z1X2Z3", "Z2X3"}));
    EXPECT_EQ(names(graph_state(fixtures::qutrit_example_graph())),
              (std::vector<std::string>{"X1Z2Z4", "Z1X2", "X3Z4^2", "Z1Z3^2X4"}));
}

TEST(Validity, GraphStatesAreValid) {
    Rng rng(4);
    for (unsigned d : {2U, 3U, 5U}) {
        for (int t = 0; t < 20; ++t) {
            const auto g = random_graph(FieldOrder(d), 1 + rng.below(7), rng);
            EXPECT_TRUE(is_valid_stabilizer(graph_state(g)).valid);
            EXPECT_TRUE(is_valid_stabilizer(randomize_locally(graph_state(g), rng)).valid);
        }
    }
}


TEST(Validity, NonCommutingGenerators) {
    const auto t = StabilizerTableau::from_pauli_strings({"XI", "ZI"});
    const auto r = is_valid_stabilizer(t);
    EXPECT_FALSE(r.valid);
    ASSERT_FALSE(r.violations.empty());
}

TEST(Validity, PhaseOfYGenerators) {
    auto t = StabilizerTableau::from_pauli_strings({"YY", "ZZ"});
    EXPECT_TRUE(is_valid_stabilizer(t).valid);
    EXPECT_EQ(t.phases()[0], 0U);
    const StabilizerTableau bad(t.generators(), {1U, 0U});
    EXPECT_FALSE(is_valid_stabilizer(bad).valid);
}

TEST(LocalSubspace, Examples) {
    const auto ghz = graph_state(fixtures::star_graph(F2, 3));
    const auto singles = PartyPartition::singletons(3);
    for (std::size_t a = 0; a < 3; ++a) EXPECT_EQ(local_subspace_dim(ghz, singles, a), 0U);
    const auto zero = StabilizerTableau::product_zero(F2, 2);
    EXPECT_EQ(local_subspace_dim(zero, PartyPartition::singletons(2), 0), 1U);
    const auto bell = graph_state(fixtures::path_graph(F2, 2));
    EXPECT_EQ(local_subspace_dim(bell, PartyPartition::singletons(2), 0), 0U);
}

TEST(ColocalSubspace, Examples) {
    const auto ghz = graph_state(fixtures::path_graph(F2, 3));
    const auto singles = PartyPartition::singletons(3);
    const Matrix col = colocal_subspace(ghz, singles, 2);
    ASSERT_EQ(col.rows(), 1U);
    EXPECT_EQ(SymplecticVector::from_row(col, 0).to_string(), "X1Z2");

    const auto bell = graph_state(fixtures::path_graph(F2, 2));
    EXPECT_EQ(colocal_subspace(bell, PartyPartition::singletons(2), 0).rows(), 0U);

    const auto zb = tensor_product(StabilizerTableau::product_zero(F2, 1), bell);
    const Matrix c0 = colocal_subspace(zb, PartyPartition::singletons(3), 0);
    // Z on site 1 vanishes on the other parties; the Bell generators vanish on site 1
    EXPECT_EQ(c0.rows(), 2U);
    const Matrix c1 = colocal_subspace(zb, PartyPartition::singletons(3), 1);
    bool has_z = false;
    for (std::size_t r = 0; r < c1.rows(); ++r) has_z |= SymplecticVector::from_row(c1, r).to_string() == "Z1";
    EXPECT_TRUE(has_z);
}

TEST(ReducedRank, Examples) {
    const auto bell = graph_state(fixtures::path_graph(F2, 2));
    EXPECT_EQ(reduced_rank_exponent(bell, PartyPartition::singletons(2), 0), 1U);
    EXPECT_EQ(reduced_rank_exponent(StabilizerTableau::product_zero(F2, 1), PartyPartition::singletons(1), 0), 0U);
    const auto ghz = graph_state(fixtures::path_graph(F2, 3));
    EXPECT_EQ(reduced_rank_exponent(ghz, PartyPartition::parse("1,2|3"), 0), 1U);
}

TEST(LocalComplement, Examples) {
    const auto tri = GraphAdjacency::from_edges(F2, 3, {{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(local_complement(tri, 0), GraphAdjacency::from_edges(F2, 3, {{0, 1}, {0, 2}}));
    const auto star = fixtures::star_graph(F2, 4);
    const auto complete = local_complement(star, 0);
    EXPECT_EQ(complete.edges().size(), 6U);
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto g = random_graph(F2, 6, rng);
        EXPECT_EQ(local_complement(local_complement(g, 3), 3), g);
    }
    EXPECT_THROW((void)local_complement(GraphAdjacency(F3, 2), 0), std::invalid_argument);
}

TEST(QuditMoves, EdgeMultiply) {
    const auto g = GraphAdjacency::from_edges(F3, 2, {{0, 1, 2}});
    EXPECT_EQ(qudit_edge_multiply(g, 0, 2).multiplicity(0, 1), 1U);
    EXPECT_EQ(qudit_edge_multiply(g, 0, 1), g);
    Rng rng(3);
    const FieldOrder f5(5);
    const auto h = random_graph(f5, 5, rng);
    EXPECT_EQ(qudit_edge_multiply(qudit_edge_multiply(h, 2, 3), 2, f5.inv(3)), h);
    EXPECT_THROW((void)qudit_edge_multiply(g, 0, 3), std::invalid_argument);
}

TEST(QuditMoves, LocalComplementMatchesQubitRule) {
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_graph(F2, 5, rng);
        EXPECT_EQ(qudit_local_complement(g, 1, 1), local_complement(g, 1));
    }
}

TEST(ToggleEdge, Examples) {
    const GraphAdjacency empty(F2, 2);
    const auto one = toggle_edge(empty, 0, 1, 1);
    EXPECT_EQ(one.edges().size(), 1U);
    EXPECT_EQ(toggle_edge(one, 0, 1, 1), empty);
    const GraphAdjacency q(F3, 2);
    EXPECT_EQ(toggle_edge(toggle_edge(q, 0, 1, 2), 0, 1, 1), q);
    EXPECT_THROW((void)toggle_edge(empty, 1, 1, 1), std::invalid_argument);
}

TEST(LceSequence, Examples) {
    const auto g = GraphAdjacency::from_edges(F2, 4, {{0, 1}, {2, 3}});
    const auto p = PartyPartition::parse("1|2,3|4");
    EXPECT_EQ(apply_lce_sequence(g, p, {}), g);
    const auto out = apply_lce_sequence(g, p, {ToggleMove{1, 2, 1}, ComplementMove{2}});
    EXPECT_EQ(out, GraphAdjacency::from_edges(F2, 4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}));
    EXPECT_THROW((void)apply_lce_sequence(g, p, {ToggleMove{0, 1, 1}}), std::invalid_argument);
    EXPECT_THROW((void)apply_lce_sequence(g, PartyPartition::singletons(4), {ToggleMove{0, 1, 1}}),
                 std::invalid_argument);
}

TEST(RandomTree, IsATree) {
    Rng rng(12);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto t = random_tree(F3, n, rng);
        EXPECT_EQ(t.edges().size(), n - 1);
        for (const auto& e : t.edges()) EXPECT_NE(e.multiplicity, 0U);
    }
}

TEST(Tableau, RelabelAndTensor) {
    const auto bell = graph_state(fixtures::path_graph(F2, 2));
    const auto both = tensor_product(bell, StabilizerTableau::product_zero(F2, 1));
    EXPECT_EQ(both.sites(), 3U);
    const auto moved = relabel_sites(both, {2, 0, 1});
    EXPECT_EQ(moved.generator(0).to_string(), "Z1X3");
    EXPECT_TRUE(is_valid_stabilizer(moved).valid);
}

TEST(Validity, DuplicateGeneratorIsRankDeficient) {
    const auto dup = StabilizerTableau::from_pauli_strings({"XX", "XX"});
    EXPECT_FALSE(is_valid_stabilizer(dup).valid);
}
