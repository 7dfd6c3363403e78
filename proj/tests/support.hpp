#pragma once

#include <random>
#include <string>
#include <vector>

#include "carc/models.hpp"
#include "carc/oracle.hpp"

namespace carc::testing {

// Letter of vertex 'a' + k, as in the worked example.
inline Letter L(char c, int sup) { return Letter(c - 'a', sup); }

std::vector<Letter> random_arc_word(std::mt19937_64& rng, int n);
std::vector<int> random_permutation(std::mt19937_64& rng, int n);
ArcModel relabel(const ArcModel& m, const std::vector<int>& perm);

// Same graph, distinct random model: adjacent endpoints of different vertices
// swapped while the intersection graph stays put.
ArcModel perturb(std::mt19937_64& rng, const ArcModel& m, int steps);

// [a1 b1 c0 d1 e0][f1][h1 i0][c1 b0 e1 d0 a0][g0][i1 h0][g1][f0]
ArcModel worked_example();

// Circular-arc graphs on at most five vertices, cached in the build tree.
const std::vector<oracle::CorpusEntry>& corpus5();

}  // namespace carc::testing
