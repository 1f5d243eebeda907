#include "plc/symplectic.hpp"

#include <gtest/gtest.h>

using plc::FieldOrder;
using plc::PartyPartition;
using plc::SymplecticVector;

TEST(Omega, QubitExamples) {
    const auto x1 = SymplecticVector::from_pauli_string("XI");
    const auto z1 = SymplecticVector::from_pauli_string("ZI");
    const auto x2 = SymplecticVector::from_pauli_string("IX");
    EXPECT_EQ(plc::omega(x1, z1), 1U);
    EXPECT_EQ(plc::omega(x1, x2), 0U);
    EXPECT_EQ(plc::omega(z1, z1), 0U);
}

TEST(Omega, AntisymmetricAndAdditiveOverParties) {
    plc::Rng rng(1);
    for (unsigned dv : {2U, 3U, 5U}) {
        const FieldOrder d(dv);
        const auto parts = PartyPartition::parse("1,4|2|3,5");
        for (int t = 0; t < 50; ++t) {
            std::vector<int> a(10), b(10);
            for (auto& v : a) v = static_cast<int>(rng.below(dv));
            for (auto& v : b) v = static_cast<int>(rng.below(dv));
            const SymplecticVector f(d, a), g(d, b);
            EXPECT_EQ(d.add(plc::omega(f, g), plc::omega(g, f)), 0U);
            EXPECT_EQ(plc::omega(f, f), 0U);
            unsigned sum = 0;
            for (const auto& party : parts.parties()) {
                sum = d.add(sum, plc::omega(plc::restrict_to(f, party), plc::restrict_to(g, party)));
            }
            EXPECT_EQ(sum, plc::omega(f, g));
            const plc::SymplecticForm form(d, 5);
            EXPECT_EQ((f.as_row() * form.gram() * g.as_row().transpose())(0, 0), plc::omega(f, g));
        }
    }
}

TEST(Omega, MismatchThrows) {
    EXPECT_THROW((void)plc::omega(SymplecticVector::from_pauli_string("X"), SymplecticVector::from_pauli_string("XZ")),
                 std::invalid_argument);
    EXPECT_THROW((void)plc::omega(SymplecticVector(FieldOrder(3), 1), SymplecticVector(FieldOrder(2), 1)),
                 std::invalid_argument);
}

TEST(Restrict, KeepsSelectedSites) {
    const auto f = SymplecticVector::from_pauli_string("XZ");
    EXPECT_EQ(plc::restrict_to(f, {0}), SymplecticVector::from_pauli_string("X"));
    EXPECT_EQ(plc::restrict_to(f, {1}), SymplecticVector::from_pauli_string("Z"));
    EXPECT_EQ(plc::restrict_to(f, {0, 1}), f);
    EXPECT_THROW((void)plc::restrict_to(f, {2}), std::out_of_range);
}

TEST(Support, Examples) {
    EXPECT_TRUE(plc::support(SymplecticVector(FieldOrder(2), 3)).empty());
    EXPECT_EQ(plc::support(SymplecticVector::from_pauli_string("XZ")), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(plc::support(SymplecticVector::from_pauli_string("ZXZ")), (std::vector<std::size_t>{0, 1, 2}));
    const auto f = SymplecticVector::from_pauli_string("XZII");
    const auto g = SymplecticVector::from_pauli_string("IZXI");
    const auto s = plc::support(f + g);
    EXPECT_EQ(s, (std::vector<std::size_t>{0, 2}));
}

TEST(PartySupport, SpiralEndpoint) {
    // path 1-2-3-4-5 with sites assigned cyclically to four parties
    const PartyPartition p(5, {{0, 4}, {1}, {2}, {3}});
    EXPECT_EQ(plc::party_support(SymplecticVector::from_pauli_string("XZIII"), p).size(), 2U);
    EXPECT_TRUE(plc::party_support(SymplecticVector(FieldOrder(2), 5), p).empty());
    EXPECT_EQ(plc::party_support(SymplecticVector::from_pauli_string("XYZXX"), p).size(), 4U);
}

TEST(Partition, ParseAndValidate) {
    const auto p = PartyPartition::parse("1,2|3|4");
    EXPECT_EQ(p.party_count(), 3U);
    EXPECT_EQ(p.sites(), 4U);
    EXPECT_EQ(p.to_string(), "1,2|3|4");
    EXPECT_EQ(p.party_of(2), 1U);
    EXPECT_THROW(PartyPartition::parse("1,2|2"), std::invalid_argument);
    EXPECT_THROW(PartyPartition::parse("1|3"), std::invalid_argument);
    EXPECT_THROW(PartyPartition::parse("1,,2"), std::invalid_argument);
    EXPECT_THROW(PartyPartition(2, {{0, 1}, {}}), std::invalid_argument);
    EXPECT_EQ(PartyPartition::contiguous({2, 1}).to_string(), "1,2|3");
}

TEST(Partition, EmptyPartiesWithHighIndices) {
    // party index 2 equals the site count
    const auto p = PartyPartition::allowing_empty(2, {{}, {0}, {1}});
    EXPECT_EQ(p.party_of(1), 2U);
    EXPECT_EQ(p.party_count(), 3U);
}

TEST(Pauli, StringRendering) {
    const SymplecticVector g(FieldOrder(3), {1, 0, 0, 2});
    EXPECT_EQ(g.to_string(), "X1Z2^2");
    EXPECT_EQ(SymplecticVector::from_pauli_string("II").to_string(), "I");
}
