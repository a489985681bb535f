#pragma once

#include <string>
#include <vector>

#include "parastat/factor_ratio.hpp"
#include "parastat/gz_basis.hpp"

namespace parastat::reduced {

/// 1 iff x is even / odd; total over all integers.
inline int even_ind(long x) { return ((x % 2) + 2) % 2 == 0 ? 1 : 0; }
inline int odd_ind(long x) { return 1 - even_ind(x); }

namespace detail {

inline std::string context_str(int k, const std::vector<int>& top) {
    std::string s = "G(k=" + std::to_string(k) + ",top=";
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(top[i]);
    }
    return s + ")";
}

} // namespace detail

/// Reduced matrix element G_k of the creation family on the top row
/// [mu] -> [mu]_{+k}. Zero when the raised row violates the ordering/hook
/// constraints. Boundary 0/0 products are resolved by pairwise factor
/// cancellation (audited); an unpaired zero denominator throws.
inline RadicalSum reduced_element(int k, const std::vector<int>& top, const gz::Signature& sig) {
    const int m = sig.m, n = sig.n, r = sig.r(), p = sig.p;
    if (k < 1 || k > r) throw Error("reduced_element: k out of range");

    std::vector<int> raised = top;
    raised[k - 1] += 1;
    if (!gz::top_row_ok(raised, sig)) return RadicalSum();

    auto mu = [&](int j) { return static_cast<long>(top[j - 1]); }; // 1-based

    FactorRatio fr;
    int outer_sign = 1;

    if (k <= m && k % 2 == 0) {
        fr.num(Int(-1));
        long head = mu(k) + m - n - k;
        fr.num(Int(even_ind(m) ? head + 1 : 1));
        for (int j = 1; j <= m; ++j)
            if (j != k) fr.num(Int(mu(k) - mu(j) - k + j));
        for (int j = 1; j <= m / 2; ++j) {
            if (j == k / 2) continue;
            fr.den(Int(mu(k) - mu(2 * j) - k + 2 * j));
            fr.den(Int(mu(k) - mu(2 * j) - k + 2 * j + 1));
        }
        for (int j = 1; j <= n; ++j) {
            long base = mu(k) + mu(m + j) + m - j - k + 2;
            fr.num(Int(base));
            fr.den(Int(base - even_ind(m + mu(m + j))));
        }
    } else if (k <= m) { // k odd
        fr.num(Int(p - mu(k) + k - 1));
        long head = mu(k) + m - n - k;
        fr.num(Int(odd_ind(m) ? head + 1 : 1));
        for (int j = 1; j <= m; ++j)
            if (j != k) fr.num(Int(mu(k) - mu(j) - k + j));
        for (int j = 1; j <= (m + 1) / 2; ++j) {
            if (j == (k + 1) / 2) continue;
            fr.den(Int(mu(k) - mu(2 * j - 1) - k + 2 * j - 1));
            fr.den(Int(mu(k) - mu(2 * j - 1) - k + 2 * j));
        }
        for (int j = 1; j <= n; ++j) {
            long base = mu(k) + mu(m + j) + m - j - k + 2;
            fr.num(Int(base));
            fr.den(Int(base - odd_ind(m + mu(m + j))));
        }
    } else {
        const int kk = k - m;
        const long a = mu(m + kk);
        long tail = 0;
        for (int i = m + kk + 1; i <= r; ++i) tail += mu(i);
        outer_sign = (tail % 2 == 0) ? 1 : -1;

        fr.num(Int(odd_ind(a) ? (a - kk + n) + 1 : 1));
        fr.num(Int(even_ind(m + a) ? (p + a + m - kk) + 1 : 1));
        for (int j = 1; j <= m / 2; ++j)
            fr.num(Int(even_ind(m + a) ? (mu(2 * j) + a - 2 * j - kk + m + 1) + 1 : 1));
        for (int j = 1; j <= (m + 1) / 2; ++j)
            fr.den(Int(even_ind(m + a) ? (mu(2 * j - 1) + a - 2 * j - kk + m + 1) + 1 : 1));
        for (int j = 1; j <= (m + 1) / 2; ++j)
            fr.num(Int(odd_ind(m + a) ? (mu(2 * j - 1) + a - 2 * j - kk + m + 2) + 1 : 1));
        for (int j = 1; j <= m / 2; ++j)
            fr.den(Int(odd_ind(m + a) ? (mu(2 * j) + a - 2 * j - kk + m) + 1 : 1));
        for (int j = 1; j <= n; ++j) {
            if (j == kk) continue;
            long base = mu(m + j) - a - j + kk;
            fr.num(Int(base));
            fr.den(Int(base - odd_ind(mu(m + j) - a)));
        }
    }

    auto res = fr.collapse(detail::context_str(k, top));
    switch (res.status) {
        case FactorRatio::Status::Zero:
            return RadicalSum();
        case FactorRatio::Status::Singular:
            throw SingularReducedElement("unpaired zero denominator in " +
                                         detail::context_str(k, top));
        case FactorRatio::Status::Value:
            break;
    }
    RadicalSum value = RadicalSum::sqrt_of(res.value);
    return outer_sign < 0 ? -value : value;
}

/// Sign-twisted reduced element: the first m families flip by the parity of
/// the top-row sum, the rest are unchanged. |twisted| == |plain| everywhere.
inline RadicalSum reduced_element_twisted(int k, const std::vector<int>& top,
                                          const gz::Signature& sig) {
    RadicalSum g = reduced_element(k, top, sig);
    if (k > sig.m) return g;
    long level = 0;
    for (int v : top) level += v;
    return (level % 2 == 0) ? g : -g;
}

} // namespace parastat::reduced
