#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flipsurf {

/*
  Skew-symmetric integer exchange matrix.  Rows and columns are labeled by
  arcs 1..n; b(i,j) > 0 means b(i,j) arrows from i to j in the associated
  quiver.  Triangulations only ever produce entries in {0,+-1,+-2}; entries
  are stored wide because mutation walks can grow them quickly.
*/
class BMatrix {
public:
    using Entry = long long;

    BMatrix() = default;
    explicit BMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

    static BMatrix from_arrows(int n,
                               std::initializer_list<std::pair<int, int>> arrows);

    int size() const { return n_; }

    Entry operator()(int i, int j) const { return a_[idx(i, j)]; }
    Entry& operator()(int i, int j) { return a_[idx(i, j)]; }

    bool skew_symmetric() const;
    bool is_zero() const;

    bool operator==(const BMatrix&) const = default;

    std::string to_string() const;

private:
    size_t idx(int i, int j) const;

    int n_ = 0;
    std::vector<Entry> a_;
};

struct Quiver {
    int n = 0;
    // (i, j) -> number of arrows i -> j; only positive multiplicities stored
    std::map<std::pair<int, int>, int> arrows;

    bool operator==(const Quiver&) const = default;
};

// throws NotSkewSymmetric
Quiver quiver(const BMatrix& b);

std::string quiver_dot(const Quiver& q);

// relabel: relabel[i] is the new label of old vertex i (1-based both ways)
BMatrix relabeled(const BMatrix& b, const std::vector<int>& relabel);

// true when p sends b1 to b2, i.e. b2(p(i),p(j)) == b1(i,j) for some
// permutation; the permutation is searched over all of S_n only for small n.
bool permutation_equivalent(const BMatrix& b1, const BMatrix& b2);

} // namespace flipsurf
