#pragma once

// Reference data shared by the unit tests and the acceptance runner.

#include "plc/commutation.hpp"
#include "plc/stabilizer.hpp"

#include <vector>

namespace plc::fixtures {

inline const FieldOrder F2{2};
inline const FieldOrder F3{3};

inline CommutationTuple bell_tuple() {
    const Matrix c = Matrix::from_rows(F2, {{0, 1}, {1, 0}});
    return CommutationTuple(F2, 2, {c, c});
}

inline CommutationTuple ghz3_tuple() {
    return CommutationTuple(F2, 3,
                            {Matrix::from_rows(F2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
                             Matrix::from_rows(F2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}),
                             Matrix::from_rows(F2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}})});
}

// generator change g3 -> g2 + g3
inline Matrix ghz3_basis_change() { return Matrix::from_rows(F2, {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}); }

inline CommutationTuple ghz3_tilde_tuple() {
    return CommutationTuple(F2, 3,
                            {Matrix::from_rows(F2, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}),
                             Matrix::from_rows(F2, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
                             Matrix::from_rows(F2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}})});
}

// path 1-2-3
inline GraphAdjacency path_graph(FieldOrder d, std::size_t n) {
    GraphAdjacency g(d, n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.set_multiplicity(i, i + 1, 1U);
    return g;
}

inline GraphAdjacency star_graph(FieldOrder d, std::size_t n) {
    GraphAdjacency g(d, n);
    for (std::size_t i = 1; i < n; ++i) g.set_multiplicity(0, i, 1U);
    return g;
}

// four qutrits, edges {1,2} x1, {1,4} x1, {3,4} x2
inline GraphAdjacency qutrit_example_graph() {
    return GraphAdjacency::from_edges(F3, 4, {{0, 1, 1}, {0, 3, 1}, {2, 3, 2}});
}

inline CommutationTuple qutrit_example_tuple() {
    return CommutationTuple(F3, 4,
                            {Matrix::from_rows(F3, {{0, 2, 0, 2}, {1, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}),
                             Matrix::from_rows(F3, {{0, 1, 0, 0}, {2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                             Matrix::from_rows(F3, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 2, 0}}),
                             Matrix::from_rows(F3, {{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 2}, {2, 0, 1, 0}})});
}

// Four alternating 8x8 matrices used to separate isomorphy from congruence.
inline std::vector<Matrix> isomorphy_example() {
    return {Matrix::from_rows(F2, {{0, 1, 0, 0, 0, 0, 0, 0},
                                   {1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0}}),
            Matrix::from_rows(F2, {{0, 1, 0, 0, 0, 0, 0, 0},
                                   {1, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0}}),
            Matrix::from_rows(F2, {{0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1, 0, 1},
                                   {0, 0, 0, 0, 0, 0, 1, 0}}),
            Matrix::from_rows(F2, {{0, 0, 0, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0},
                                   {1, 0, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 0, 0}})};
}

inline Matrix isomorphy_example_left_factor() {
    return Matrix::from_rows(F2, {{1, 0, 0, 0, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0, 1, 0, 0},
                                  {0, 0, 1, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 0, 0, 0, 1},
                                  {1, 0, 0, 0, 1, 0, 0, 0},
                                  {0, 0, 0, 0, 0, 1, 0, 0},
                                  {0, 0, 1, 0, 0, 0, 1, 0},
                                  {0, 0, 0, 0, 0, 0, 0, 1}});
}

}  // namespace plc::fixtures
