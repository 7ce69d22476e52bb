#include "flipsurf/bmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flipsurf/errors.hpp"

namespace flipsurf {

size_t BMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw IndexOutOfRange("BMatrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range for n=" +
                              std::to_string(n_));
    return static_cast<size_t>(i - 1) * n_ + (j - 1);
}

BMatrix BMatrix::from_arrows(int n,
                             std::initializer_list<std::pair<int, int>> arrows) {
    BMatrix b(n);
    for (auto [i, j] : arrows) {
        b(i, j) += 1;
        b(j, i) -= 1;
    }
    return b;
}

bool BMatrix::skew_symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

bool BMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
}

std::string BMatrix::to_string() const {
    std::ostringstream out;
    for (int i = 1; i <= n_; ++i) {
        out << (i == 1 ? "[" : " ") << "[";
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out << " ";
            out << (*this)(i, j);
        }
        out << "]" << (i == n_ ? "]" : "\n");
    }
    return out.str();
}

Quiver quiver(const BMatrix& b) {
    if (!b.skew_symmetric())
        throw NotSkewSymmetric("quiver: matrix is not skew-symmetric");
    Quiver q;
    q.n = b.size();
    for (int i = 1; i <= q.n; ++i)
        for (int j = 1; j <= q.n; ++j)
            if (b(i, j) > 0) q.arrows[{i, j}] = static_cast<int>(b(i, j));
    return q;
}

std::string quiver_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph quiver {\n";
    for (int i = 1; i <= q.n; ++i)
        out << "  v" << i << " [label=\"" << i << "\"];\n";
    for (const auto& [ij, mult] : q.arrows)
        for (int k = 0; k < mult; ++k)
            out << "  v" << ij.first << " -> v" << ij.second << ";\n";
    out << "}\n";
    return out.str();
}

BMatrix relabeled(const BMatrix& b, const std::vector<int>& relabel) {
    const int n = b.size();
    if (static_cast<int>(relabel.size()) != n + 1 &&
        static_cast<int>(relabel.size()) != n)
        throw IndexOutOfRange("relabeled: permutation size mismatch");
    auto map = [&](int i) {
        return static_cast<int>(relabel.size()) == n + 1 ? relabel[i] : relabel[i - 1];
    };
    BMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            r(map(i), map(j)) = b(i, j);
    return r;
}

bool permutation_equivalent(const BMatrix& b1, const BMatrix& b2) {
    if (b1.size() != b2.size()) return false;
    const int n = b1.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
            for (int j = 1; j <= n && ok; ++j)
                if (b2(perm[i - 1], perm[j - 1]) != b1(i, j)) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace flipsurf
