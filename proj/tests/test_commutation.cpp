#include "plc/commutation.hpp"
#include "plc/equivalence.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

using namespace plc;
using plc::fixtures::F2;
using plc::fixtures::F3;

TEST(FromState, BellTuple) {
    const auto bell = graph_state(fixtures::path_graph(F2, 2));
    EXPECT_EQ(from_state(bell, PartyPartition::singletons(2)), fixtures::bell_tuple());
}

TEST(FromState, Ghz3Tuple) {
    const auto ghz = graph_state(fixtures::path_graph(F2, 3));
    EXPECT_EQ(from_state(ghz, PartyPartition::singletons(3)), fixtures::ghz3_tuple());
}

TEST(FromState, QutritTuple) {
    const auto s = graph_state(fixtures::qutrit_example_graph());
    EXPECT_EQ(from_state(s, PartyPartition::singletons(4)), fixtures::qutrit_example_tuple());
}

TEST(FromGraph, MatchesFromState) {
    Rng rng(21);
    for (unsigned dv : {2U, 3U, 5U}) {
        const FieldOrder d(dv);
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 1 + rng.below(7);
            const auto g = random_graph(d, n, rng);
            std::vector<std::vector<std::size_t>> parts(1 + rng.below(n));
            for (std::size_t s = 0; s < n; ++s) parts[s < parts.size() ? s : rng.below(parts.size())].push_back(s);
            const PartyPartition p(n, parts);
            EXPECT_EQ(from_graph(g, p), from_state(graph_state(g), p));
        }
    }
    EXPECT_EQ(from_graph(fixtures::qutrit_example_graph(), PartyPartition::singletons(4)),
              fixtures::qutrit_example_tuple());
    const auto zero = from_graph(GraphAdjacency(F2, 3), PartyPartition::parse("1|2,3"));
    for (const auto& m : zero.matrices()) EXPECT_TRUE(m.is_zero());
}

TEST(ChangeBasis, TildeTuple) {
    EXPECT_EQ(change_basis(fixtures::ghz3_tuple(), fixtures::ghz3_basis_change()), fixtures::ghz3_tilde_tuple());
    EXPECT_EQ(change_basis(fixtures::ghz3_tuple(), Matrix::identity(F2, 3)), fixtures::ghz3_tuple());
    const Matrix q = random_invertible(4, F3, 77);
    const auto c = fixtures::qutrit_example_tuple();
    EXPECT_EQ(change_basis(change_basis(c, q), invert(q).value()), c);
    EXPECT_THROW((void)change_basis(c, Matrix(F3, 4, 4)), std::invalid_argument);
}

TEST(MergeParties, Examples) {
    const auto merged = merge_parties(fixtures::ghz3_tuple(), 0, 1);
    ASSERT_EQ(merged.parties(), 2U);
    EXPECT_EQ(merged[0], fixtures::ghz3_tuple()[0] + fixtures::ghz3_tuple()[1]);
    EXPECT_TRUE(validate(merged).ok());
    const auto all = merge_parties(merge_parties(fixtures::ghz3_tuple(), 0, 1), 0, 1);
    EXPECT_TRUE(all[0].is_zero());
    EXPECT_TRUE(merge_parties(fixtures::bell_tuple(), 0, 1)[0].is_zero());
    EXPECT_THROW((void)merge_parties(fixtures::bell_tuple(), 1, 1), std::invalid_argument);
}

TEST(RankCondition, Examples) {
    EXPECT_TRUE(rank_condition(fixtures::bell_tuple()));
    EXPECT_TRUE(rank_condition(fixtures::ghz3_tuple()));
    EXPECT_TRUE(rank_condition(fixtures::qutrit_example_tuple()));
    EXPECT_EQ(rank(fixtures::qutrit_example_tuple().concatenated()), 4U);
}

TEST(RankCondition, IsomorphyExampleIsNotZeroSum) {
    // the printed 8x8 family is alternating but its sum is nonzero
    const auto mats = fixtures::isomorphy_example();
    const CommutationTuple c(F2, 8, mats);
    const auto report = validate(c, true);
    EXPECT_TRUE(report.alternating);
    EXPECT_FALSE(report.zero_sum);
    EXPECT_THROW((void)rank_condition(c), std::invalid_argument);
    const auto sides = rank_sides(mats);
    EXPECT_EQ(sides.twice_concatenated, 16U);
    EXPECT_EQ(sides.sum_of_ranks, 16U);
}

TEST(RankInequality, RandomFamilies) {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const FieldOrder d(t % 2 == 0 ? 2 : 3);
        const auto fam = random_zero_sum_family(1 + rng.below(7), 2 + rng.below(4), d, rng);
        EXPECT_TRUE(rank_inequality_check(fam));
    }
    EXPECT_TRUE(rank_inequality_check({Matrix(F2, 3, 3), Matrix(F2, 3, 3)}));
    EXPECT_THROW((void)rank_inequality_check({Matrix::from_rows(F2, {{0, 1}, {1, 0}})}), std::invalid_argument);
}

TEST(RankInequality, StrictForSomeNonStateFamily) {
    Rng rng(9);
    bool strict = false;
    for (int t = 0; t < 200 && !strict; ++t) {
        const auto fam = random_zero_sum_family(4, 3, F2, rng);
        const auto s = rank_sides(fam);
        strict = s.twice_concatenated < s.sum_of_ranks;
    }
    EXPECT_TRUE(strict);
}

TEST(RankCondition, HoldsForStatesAndMatchesReducedRanks) {
    Rng rng(31);
    for (unsigned dv : {2U, 3U, 5U}) {
        const FieldOrder d(dv);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 1 + rng.below(6);
            const auto s = randomize_locally(graph_state(random_graph(d, n, rng)), rng);
            std::vector<std::vector<std::size_t>> parts(1 + rng.below(n));
            for (std::size_t site = 0; site < n; ++site) {
                parts[site < parts.size() ? site : rng.below(parts.size())].push_back(site);
            }
            const PartyPartition p(n, parts);
            const auto c = from_state(s, p);
            EXPECT_TRUE(rank_condition(c));
            for (std::size_t a = 0; a < p.party_count(); ++a) {
                EXPECT_EQ(rank(c[a]), 2 * reduced_rank_exponent(s, p, a));
            }
        }
    }
}

TEST(Validate, Violations) {
    EXPECT_TRUE(validate(fixtures::bell_tuple()).ok());
    const Matrix diag = Matrix::from_rows(F3, {{1, 0}, {0, 0}});
    EXPECT_FALSE(validate(CommutationTuple(F3, 2, {diag, diag.negated()})).alternating);
    const Matrix j = Matrix::from_rows(F2, {{0, 1}, {1, 0}});
    const auto r = validate(CommutationTuple(F2, 2, {j, Matrix(F2, 2, 2)}));
    EXPECT_TRUE(r.alternating);
    EXPECT_FALSE(r.zero_sum);
}

TEST(Dickson, Examples) {
    const auto f = dickson_normal_form(Matrix::from_rows(F2, {{0, 1}, {1, 0}}));
    EXPECT_EQ(f.transform, Matrix::identity(F2, 2));
    EXPECT_EQ(f.pairs.size(), 1U);
    const auto z = dickson_normal_form(Matrix(F3, 3, 3));
    EXPECT_TRUE(z.pairs.empty());
    EXPECT_EQ(z.zeros.size(), 3U);
    const auto g = dickson_normal_form(fixtures::ghz3_tuple()[1]);
    EXPECT_EQ(g.pairs.size(), 1U);
    EXPECT_EQ(g.zeros.size(), 1U);
}

TEST(Dickson, RandomMatricesReachNormalForm) {
    Rng rng(17);
    for (unsigned dv : {2U, 3U, 5U, 7U}) {
        const FieldOrder d(dv);
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 1 + rng.below(8);
            const Matrix c = random_alternating(n, d, rng);
            const auto f = dickson_normal_form(c);
            ASSERT_TRUE(is_invertible(f.transform));
            const Matrix nf = f.transform * c * f.transform.transpose();
            Matrix expect(d, n, n);
            for (const auto& [u, v] : f.pairs) {
                expect.set(u, v, 1U);
                expect.set(v, u, d.neg(1));
            }
            EXPECT_EQ(nf, expect);
            EXPECT_EQ(2 * f.pairs.size(), rank(c));
        }
    }
}

TEST(Synthesis, BellState) {
    const auto r = synthesize_state(fixtures::bell_tuple());
    EXPECT_EQ(r.tableau, StabilizerTableau::from_pauli_strings({"XX", "ZZ"}));
    EXPECT_EQ(r.partition.to_string(), "1|2");
}

TEST(Synthesis, ZeroTuple) {
    const auto r = synthesize_state(CommutationTuple(F3, 1, {Matrix(F3, 1, 1), Matrix(F3, 1, 1)}));
    EXPECT_EQ(r.tableau, StabilizerTableau::product_zero(F3, 1));
    EXPECT_EQ(r.partition.party(0).size(), 1U);
    EXPECT_TRUE(r.partition.party(1).empty());
}

TEST(Synthesis, ExactRoundTrip) {
    Rng rng(8);
    for (unsigned dv : {2U, 3U, 5U}) {
        const FieldOrder d(dv);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 1 + rng.below(6);
            const auto g = random_graph(d, n, rng);
            std::vector<std::vector<std::size_t>> parts(1 + rng.below(n));
            for (std::size_t s = 0; s < n; ++s) parts[s < parts.size() ? s : rng.below(parts.size())].push_back(s);
            const auto c = change_basis(from_graph(g, PartyPartition(n, parts)), random_invertible(n, d, rng));
            const auto r = synthesize_state(c);
            EXPECT_TRUE(is_valid_stabilizer(r.tableau).valid);
            EXPECT_EQ(from_state(r.tableau, r.partition), c);
        }
    }
}

TEST(Synthesis, RejectsNonStateTuples) {
    Rng rng(10);
    bool rejected = false;
    for (int t = 0; t < 100 && !rejected; ++t) {
        const auto fam = random_zero_sum_family(4, 3, F2, rng);
        const auto s = rank_sides(fam);
        if (s.twice_concatenated < s.sum_of_ranks) {
            EXPECT_THROW((void)synthesize_state(CommutationTuple(F2, 4, fam)), std::invalid_argument);
            rejected = true;
        }
    }
    EXPECT_TRUE(rejected);
    EXPECT_THROW((void)synthesize_state(CommutationTuple(F2, 8, fixtures::isomorphy_example())), std::invalid_argument);
}
