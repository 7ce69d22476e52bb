#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flipsurf/bmatrix.hpp"

namespace flipsurf {

// Matrix mutation at direction k (1-based).  Involutive at fixed k and
// preserves skew-symmetry.
BMatrix mutate_b(const BMatrix& b, int k);

/*
  Exchange matrix extended by a C-matrix for green tracking.  Row index runs
  over the initial seed, column index over the current one, so the initial
  C is the identity, a vertex is green when its column is entrywise >= 0,
  and a terminal seed of a maximal green sequence has C = -P for a
  permutation matrix P.
*/
struct FramedSeed {
    BMatrix b;
    BMatrix c;
    std::vector<int> history;

    static FramedSeed initial(const BMatrix& b);
};

// throws IndexOutOfRange, SignCoherenceViolation
FramedSeed mutate_framed(const FramedSeed& s, int k);

bool is_green(const FramedSeed& s, int k);
bool all_red(const FramedSeed& s);

// If c == -P for a permutation matrix P, returns P as a map old->new
// (perm[i] = j when c(j, i) == -1), else nullopt.
std::optional<std::vector<int>> terminal_permutation(const FramedSeed& s);

struct GreenSearchResult {
    // complete maximal green sequences, in lexicographic discovery order
    std::vector<std::vector<int>> sequences;
    std::int64_t truncated_branches = 0; // branches cut by the length bound
    std::int64_t nodes_explored = 0;
};

// Depth-first enumeration of all maximal green sequences of length <= max_len,
// visiting green directions in increasing order.
GreenSearchResult find_maximal_green_sequences(const BMatrix& b, int max_len);

} // namespace flipsurf
