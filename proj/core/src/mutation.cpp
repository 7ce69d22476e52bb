#include "flipsurf/mutation.hpp"

#include <string>

#include "flipsurf/errors.hpp"

namespace flipsurf {

namespace {

long long sgn(long long x) { return (x > 0) - (x < 0); }

void check_direction(int n, int k) {
    if (k < 1 || k > n)
        throw IndexOutOfRange("mutation direction " + std::to_string(k) +
                              " out of range 1.." + std::to_string(n));
}

} // namespace

BMatrix mutate_b(const BMatrix& b, int k) {
    const int n = b.size();
    check_direction(n, k);
    BMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == k || j == k)
                r(i, j) = -b(i, j);
            else
                r(i, j) = b(i, j) + sgn(b(i, k)) * std::max<long long>(0, b(i, k) * b(k, j));
        }
    return r;
}

FramedSeed FramedSeed::initial(const BMatrix& b) {
    FramedSeed s;
    s.b = b;
    s.c = BMatrix(b.size());
    for (int i = 1; i <= b.size(); ++i) s.c(i, i) = 1;
    return s;
}

FramedSeed mutate_framed(const FramedSeed& s, int k) {
    const int n = s.b.size();
    check_direction(n, k);
    FramedSeed r;
    r.b = mutate_b(s.b, k);
    r.c = BMatrix(n);
    // column update from the framed quiver: the frozen block of the extended
    // exchange matrix mutates with it, c(i,j) being the (j, i') entry
    for (int i = 1; i <= n; ++i) {
        r.c(i, k) = -s.c(i, k);
        for (int j = 1; j <= n; ++j) {
            if (j == k) continue;
            r.c(i, j) = s.c(i, j) +
                        std::max<long long>(0, s.c(i, k)) * std::max<long long>(0, s.b(j, k)) -
                        std::max<long long>(0, -s.c(i, k)) * std::max<long long>(0, -s.b(j, k));
        }
    }
    for (int j = 1; j <= n; ++j) {
        bool nonneg = true, nonpos = true;
        for (int i = 1; i <= n; ++i) {
            nonneg = nonneg && r.c(i, j) >= 0;
            nonpos = nonpos && r.c(i, j) <= 0;
        }
        if (!nonneg && !nonpos)
            throw SignCoherenceViolation(
                "c-column " + std::to_string(j) + " lost sign coherence after mutating at " +
                std::to_string(k));
    }
    r.history = s.history;
    r.history.push_back(k);
    return r;
}

bool is_green(const FramedSeed& s, int k) {
    check_direction(s.c.size(), k);
    for (int i = 1; i <= s.c.size(); ++i)
        if (s.c(i, k) < 0) return false;
    return true;
}

bool all_red(const FramedSeed& s) {
    for (int k = 1; k <= s.c.size(); ++k)
        if (is_green(s, k)) return false;
    return true;
}

std::optional<std::vector<int>> terminal_permutation(const FramedSeed& s) {
    const int n = s.c.size();
    std::vector<int> perm(n + 1, 0);
    std::vector<bool> used(n + 1, false);
    for (int j = 1; j <= n; ++j) {
        int row = 0;
        for (int i = 1; i <= n; ++i) {
            if (s.c(i, j) == -1) {
                if (row) return std::nullopt;
                row = i;
            } else if (s.c(i, j) != 0) {
                return std::nullopt;
            }
        }
        if (!row || used[row]) return std::nullopt;
        used[row] = true;
        perm[row] = j;
    }
    perm.erase(perm.begin());
    return perm;
}

namespace {

void green_dfs(const FramedSeed& s, int max_len, GreenSearchResult& out) {
    ++out.nodes_explored;
    bool any_green = false;
    for (int k = 1; k <= s.b.size(); ++k) {
        if (!is_green(s, k)) continue;
        any_green = true;
        if (static_cast<int>(s.history.size()) == max_len) {
            ++out.truncated_branches;
            continue;
        }
        green_dfs(mutate_framed(s, k), max_len, out);
    }
    if (!any_green) out.sequences.push_back(s.history);
}

} // namespace

GreenSearchResult find_maximal_green_sequences(const BMatrix& b, int max_len) {
    GreenSearchResult out;
    green_dfs(FramedSeed::initial(b), max_len, out);
    return out;
}

} // namespace flipsurf
