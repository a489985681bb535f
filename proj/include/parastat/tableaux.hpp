#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "parastat/gz_basis.hpp"
#include "parastat/report.hpp"

namespace parastat::tableaux {

/// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

inline int part(const Partition& lam, int i) { // 1-based, 0 past the end
    return i <= static_cast<int>(lam.size()) ? lam[i - 1] : 0;
}

inline bool hook_ok(const Partition& lam, int m, int n) { return part(lam, m + 1) <= n; }

/// All partitions of `weight` with lambda_{m+1} <= n, largest part first
/// (the usual partition listing order).
inline std::vector<Partition> hook_partitions(int m, int n, int weight) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
        if (remaining == 0) {
            if (hook_ok(cur, m, n)) out.push_back(cur);
            return;
        }
        for (int v = std::min(remaining, maxpart); v >= 1; --v) {
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(weight, weight == 0 ? 1 : weight);
    return out;
}

/// Number of (m|n)-semistandard tableaux of shape lambda, counted by direct
/// fill enumeration. Alphabet 1 < ... < m < 1' < ... < n'; entries weakly
/// increase along rows and down columns, unprimed letters strict down
/// columns, primed letters strict along rows.
inline long covariant_dimension(const Partition& lam, int m, int n) {
    if (lam.empty()) return 1;
    const int rows = static_cast<int>(lam.size());
    std::vector<std::vector<int>> cell(rows);
    for (int i = 0; i < rows; ++i) cell[i].assign(lam[i], 0);
    long count = 0;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == rows) {
            ++count;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= lam[i]) { ni = i + 1; nj = 0; }
        int left = j > 0 ? cell[i][j - 1] : 1;
        int up = (i > 0 && j < lam[i - 1]) ? cell[i - 1][j] : 1;
        for (int v = std::max(left, up); v <= m + n; ++v) {
            bool primed = v > m;
            if (primed && j > 0 && cell[i][j - 1] == v) continue;
            if (!primed && i > 0 && j < lam[i - 1] && cell[i - 1][j] == v) continue;
            cell[i][j] = v;
            rec(ni, nj);
        }
    };
    rec(0, 0);
    return count;
}

/// GZ top row carried by the covariant module lambda: the first m slots take
/// lambda itself, the remaining n slots take max(lambda'_j - m, 0).
inline std::vector<int> top_row_for_partition(const Partition& lam, int m, int n) {
    std::vector<int> top(m + n, 0);
    for (int i = 1; i <= m; ++i) top[i - 1] = part(lam, i);
    for (int j = 1; j <= n; ++j) {
        int conj = 0; // lambda'_j
        for (int i = 1; i <= static_cast<int>(lam.size()); ++i)
            if (lam[i - 1] >= j) ++conj;
        top[m + j - 1] = std::max(conj - m, 0);
    }
    return top;
}

inline Partition partition_for_top_row(const std::vector<int>& top, int m, int n) {
    Partition lam;
    for (int i = 1; i <= m; ++i)
        if (top[i - 1] > 0) lam.push_back(top[i - 1]);
    // conjugate of the trailing n-tuple extends the column part
    std::vector<int> nu(top.begin() + m, top.begin() + m + n);
    for (int j = 1; j <= (nu.empty() ? 0 : nu[0]); ++j) {
        int col = 0;
        for (int v : nu)
            if (v >= j) ++col;
        lam.push_back(col);
    }
    return lam;
}

/// Counting identity between the pattern basis and the tableau oracle: per
/// level and per top row, the number of patterns equals the tableau count of
/// the matching hook partition (with the lambda_1 <= p cut).
inline Report verify_level_dimensions(const gz::Signature& sig) {
    Report rep("level-dimensions " + sig.str());
    std::map<std::vector<int>, long> by_top;
    std::map<int, long> by_level;
    for (const auto& pat : gz::basis_patterns(sig)) {
        ++by_top[pat.top()];
        ++by_level[pat.level()];
    }
    for (int level = 0; level <= sig.level_cap; ++level) {
        long expected_level = 0;
        for (const auto& lam : hook_partitions(sig.m, sig.n, level)) {
            if (part(lam, 1) > sig.p) continue;
            long dim = covariant_dimension(lam, sig.m, sig.n);
            expected_level += dim;
            auto top = top_row_for_partition(lam, sig.m, sig.n);
            long have = by_top.count(top) ? by_top[top] : 0;
            Check c;
            c.name = "top-row dimension";
            c.detail = "level=" + std::to_string(level) + " top=" + vec_str(top);
            c.ok = (have == dim);
            if (!c.ok)
                c.counterexample = "patterns=" + std::to_string(have) + " tableaux=" + std::to_string(dim);
            rep.add(std::move(c));
        }
        long have_level = by_level.count(level) ? by_level[level] : 0;
        Check c;
        c.name = "level dimension";
        c.detail = "level=" + std::to_string(level);
        c.ok = (have_level == expected_level);
        if (!c.ok)
            c.counterexample =
                "patterns=" + std::to_string(have_level) + " tableaux=" + std::to_string(expected_level);
        rep.add(std::move(c));
    }
    return rep;
}

} // namespace parastat::tableaux
