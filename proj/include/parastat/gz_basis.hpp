#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "parastat/radical.hpp"

namespace parastat::gz {

/// Algebra size and Fock parameters. r = m+n rows; p is the order of
/// statistics; level_cap bounds the total top-row sum kept in the basis.
struct Signature {
    int m = 1;
    int n = 1;
    int p = 1;
    int level_cap = 0;

    int r() const { return m + n; }
    bool ok() const { return m >= 1 && n >= 1 && p >= 1 && level_cap >= 0; }
    std::string str() const {
        std::ostringstream os;
        os << "(m=" << m << ",n=" << n << ",p=" << p << ",cap=" << level_cap << ")";
        return os.str();
    }
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.m == b.m && a.n == b.n && a.p == b.p && a.level_cap == b.level_cap;
    }
};

/// Triangular array mu_{is}, rows s = r..1 stored top row first; row s has s
/// entries. Basis vectors of the Fock space are labeled by valid patterns.
class GZPattern {
public:
    GZPattern() = default;
    explicit GZPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    static GZPattern zero(int r) {
        std::vector<std::vector<int>> rows;
        for (int s = r; s >= 1; --s) rows.emplace_back(s, 0);
        return GZPattern(std::move(rows));
    }

    int r() const { return static_cast<int>(rows_.size()); }
    bool shape_ok() const {
        for (int k = 0; k < r(); ++k)
            if (static_cast<int>(rows_[k].size()) != r() - k) return false;
        return r() >= 1;
    }

    /// mu_{is}: 1 <= i <= s <= r.
    int mu(int i, int s) const { return rows_[r() - s][i - 1]; }
    void set_mu(int i, int s, int v) { rows_[r() - s][i - 1] = v; }

    const std::vector<int>& row(int s) const { return rows_[r() - s]; }
    const std::vector<int>& top() const { return rows_.front(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// theta_{is} = mu_{i,s+1} - mu_{is}; defined for i <= m, m <= s <= r-1.
    int theta(int i, int s) const { return mu(i, s + 1) - mu(i, s); }

    int level() const { return std::accumulate(top().begin(), top().end(), 0); }
    int row_sum(int s) const {
        const auto& v = row(s);
        return std::accumulate(v.begin(), v.end(), 0);
    }

    friend bool operator==(const GZPattern& a, const GZPattern& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const GZPattern& a, const GZPattern& b) { return !(a == b); }

    /// Total order: level, then flattened rows (top first) lexicographically.
    friend bool operator<(const GZPattern& a, const GZPattern& b) {
        int la = a.level(), lb = b.level();
        if (la != lb) return la < lb;
        return a.rows_ < b.rows_;
    }

    std::string to_json(int m, int n) const {
        std::ostringstream os;
        os << "{\"m\":" << m << ",\"n\":" << n << ",\"rows\":[";
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (k) os << ",";
            os << "[";
            for (std::size_t i = 0; i < rows_[k].size(); ++i) {
                if (i) os << ",";
                os << rows_[k][i];
            }
            os << "]";
        }
        os << "]}";
        return os.str();
    }

    /// Compact text: rows joined by '/', entries by ','. "1,0/1"
    std::string to_text() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (k) os << "/";
            for (std::size_t i = 0; i < rows_[k].size(); ++i) {
                if (i) os << ",";
                os << rows_[k][i];
            }
        }
        return os.str();
    }

    static GZPattern from_text(const std::string& text) {
        std::vector<std::vector<int>> rows;
        std::stringstream ss(text);
        std::string rowtext;
        while (std::getline(ss, rowtext, '/')) {
            std::vector<int> row;
            std::stringstream rs(rowtext);
            std::string cell;
            while (std::getline(rs, cell, ',')) row.push_back(std::stoi(cell));
            rows.push_back(std::move(row));
        }
        return GZPattern(std::move(rows));
    }

private:
    std::vector<std::vector<int>> rows_;
};

struct ValidationResult {
    bool ok = true;
    int condition = 0; // first violated condition, 1..6
    std::string detail;
};

/// Condition 1 restricted to a bare r-tuple: ordering away from position m,
/// nonnegative entries, and the hook constraint
/// mu_m >= #{i > m : mu_i > 0}. No p-cap here.
inline bool top_row_ok(const std::vector<int>& t, const Signature& sig) {
    const int r = sig.r(), m = sig.m;
    if (static_cast<int>(t.size()) != r) return false;
    for (int j = 1; j <= r; ++j)
        if (t[j - 1] < 0) return false;
    for (int j = 1; j <= r - 1; ++j)
        if (j != m && t[j - 1] - t[j] < 0) return false;
    int positive = 0;
    for (int i = m + 1; i <= r; ++i)
        if (t[i - 1] > 0) ++positive;
    return t[m - 1] >= positive;
}

/// Checks the six pattern conditions; reports the first one violated.
/// Malformed shapes throw ShapeError.
inline ValidationResult validate(const GZPattern& pat, const Signature& sig) {
    const int m = sig.m, r = sig.r();
    if (pat.r() != r || !pat.shape_ok())
        throw ShapeError("pattern shape does not match signature " + sig.str());

    auto fail = [](int cond, std::string detail) {
        return ValidationResult{false, cond, std::move(detail)};
    };

    // 1: top row ordering (j != m), nonnegative entries, hook constraint.
    if (!top_row_ok(pat.top(), sig)) return fail(1, "top row ordering/hook");

    // 2: mu_{is} - mu_{i,s-1} in {0,1} for i <= m, m+1 <= s <= r.
    for (int s = m + 1; s <= r; ++s)
        for (int i = 1; i <= m; ++i) {
            int th = pat.mu(i, s) - pat.mu(i, s - 1);
            if (th != 0 && th != 1)
                return fail(2, "theta(" + std::to_string(i) + "," + std::to_string(s - 1) + ")=" +
                                   std::to_string(th));
        }

    // 3: per-row hook constraint on the rows above row m.
    for (int s = m + 1; s <= r; ++s) {
        int positive = 0;
        for (int i = m + 1; i <= s; ++i)
            if (pat.mu(i, s) > 0) ++positive;
        if (pat.mu(m, s) < positive)
            return fail(3, "row " + std::to_string(s) + " hook");
    }

    // 4: mu_{m,m+1} = 0 forces theta_{mm} = 0.
    if (pat.mu(m, m + 1) == 0 && pat.mu(m, m + 1) - pat.mu(m, m) != 0)
        return fail(4, "theta_mm nonzero at mu_{m,m+1}=0");

    // 5: ordering of the first m entries inside rows m+1..r-1.
    for (int s = m + 1; s <= r - 1; ++s)
        for (int i = 1; i <= m - 1; ++i)
            if (pat.mu(i, s) - pat.mu(i + 1, s) < 0)
                return fail(5, "row " + std::to_string(s) + " ordering at " + std::to_string(i));

    // 6: betweenness inside the two triangles.
    for (int j = 1; j <= m - 1; ++j)
        for (int i = 1; i <= j; ++i) {
            if (pat.mu(i, j + 1) - pat.mu(i, j) < 0 || pat.mu(i, j) - pat.mu(i + 1, j + 1) < 0)
                return fail(6, "betweenness rows " + std::to_string(j + 1) + "/" + std::to_string(j));
        }
    for (int j = m + 1; j <= r - 1; ++j)
        for (int i = m + 1; i <= j; ++i) {
            if (pat.mu(i, j + 1) - pat.mu(i, j) < 0 || pat.mu(i, j) - pat.mu(i + 1, j + 1) < 0)
                return fail(6, "betweenness rows " + std::to_string(j + 1) + "/" + std::to_string(j));
        }

    return ValidationResult{};
}

namespace detail {

/// Fills rows s = next_s..1 below the partially built pattern, emitting every
/// valid completion in ascending lexicographic order of the fill entries.
inline void fill_rows(GZPattern& pat, int next_s, const Signature& sig,
                      const std::function<void(const GZPattern&)>& emit) {
    const int m = sig.m;
    if (next_s == 0) {
        if (validate(pat, sig).ok) emit(pat);
        return;
    }
    const int s = next_s;
    // Candidate ranges per entry; recursion over positions keeps lexicographic
    // order of emitted fills.
    std::vector<std::pair<int, int>> range(s);
    for (int i = 1; i <= s; ++i) {
        if (s >= m && i <= m) {
            // theta link to row s+1 (rows m..r-1 relative to the row above).
            range[i - 1] = {pat.mu(i, s + 1) - 1, pat.mu(i, s + 1)};
        } else {
            // betweenness: mu_{i,s+1} >= mu_{is} >= mu_{i+1,s+1}.
            range[i - 1] = {pat.mu(i + 1, s + 1), pat.mu(i, s + 1)};
        }
    }
    std::function<void(int)> rec = [&](int idx) {
        if (idx == s) {
            fill_rows(pat, s - 1, sig, emit);
            return;
        }
        for (int v = range[idx].first; v <= range[idx].second; ++v) {
            pat.set_mu(idx + 1, s, v);
            rec(idx + 1);
        }
    };
    rec(0);
}

} // namespace detail

/// All valid patterns with the given top row, ascending lexicographic fills.
inline std::vector<GZPattern> enumerate_with_top(const std::vector<int>& top,
                                                 const Signature& sig) {
    if (!top_row_ok(top, sig))
        throw TopRowError("invalid top row for signature " + sig.str());
    std::vector<std::vector<int>> rows;
    rows.push_back(top);
    for (int s = sig.r() - 1; s >= 1; --s) rows.emplace_back(s, 0);
    GZPattern pat(std::move(rows));
    std::vector<GZPattern> out;
    detail::fill_rows(pat, sig.r() - 1, sig, [&](const GZPattern& p) { out.push_back(p); });
    return out;
}

/// All top rows with mu_1 <= p and level <= level_cap, ordered by
/// (level, lexicographic).
inline std::vector<std::vector<int>> top_rows(const Signature& sig) {
    const int r = sig.r(), m = sig.m;
    std::vector<std::vector<int>> out;
    std::vector<int> t(r, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == r) {
            if (top_row_ok(t, sig)) out.push_back(t);
            return;
        }
        int hi = sig.level_cap - used;
        if (pos == 0) hi = std::min(hi, sig.p);
        else if (pos != m) hi = std::min(hi, t[pos - 1]); // weakly decreasing away from the split
        for (int v = 0; v <= hi; ++v) {
            t[pos] = v;
            rec(pos + 1, used + v);
        }
        t[pos] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int la = std::accumulate(a.begin(), a.end(), 0);
        int lb = std::accumulate(b.begin(), b.end(), 0);
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

/// The truncated Fock basis: every valid pattern with mu_{1r} <= p and
/// level <= level_cap, ordered by (level, top row, fill).
inline std::vector<GZPattern> basis_patterns(const Signature& sig) {
    if (!sig.ok()) throw Error("invalid signature " + sig.str());
    std::vector<GZPattern> out;
    for (const auto& t : top_rows(sig)) {
        auto pats = enumerate_with_top(t, sig);
        out.insert(out.end(), pats.begin(), pats.end());
    }
    return out;
}

/// Cartan eigenvalues in the epsilon/delta basis. The vacuum sits at
/// (-p/2,...,-p/2 | p/2,...,p/2); row-sum differences shift it.
inline std::vector<Rational> weight(const GZPattern& pat, const Signature& sig) {
    const int m = sig.m, r = sig.r();
    std::vector<Rational> w(r);
    Rational half_p(sig.p, 2);
    for (int i = 1; i <= r; ++i) {
        int diff = pat.row_sum(i) - (i > 1 ? pat.row_sum(i - 1) : 0);
        w[i - 1] = (i <= m ? -half_p : half_p) + Rational(diff);
    }
    return w;
}

/// Enumerated basis with index lookup; the order is the canonical one.
class Basis {
public:
    explicit Basis(const Signature& sig) : sig_(sig), patterns_(basis_patterns(sig)) {
        for (int i = 0; i < size(); ++i) index_[patterns_[i]] = i;
    }

    const Signature& sig() const { return sig_; }
    int size() const { return static_cast<int>(patterns_.size()); }
    const GZPattern& pattern(int i) const { return patterns_[i]; }
    const std::vector<GZPattern>& patterns() const { return patterns_; }
    int level(int i) const { return patterns_[i].level(); }

    int index_of(const GZPattern& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

private:
    Signature sig_;
    std::vector<GZPattern> patterns_;
    std::map<GZPattern, int> index_;
};

} // namespace parastat::gz
