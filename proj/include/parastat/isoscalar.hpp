#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "parastat/factor_ratio.hpp"
#include "parastat/gz_basis.hpp"

namespace parastat::iso {

using gz::GZPattern;
using gz::Signature;

/// Which coupling-factor formula applies at one chain level. The first six
/// live in the graded chain (row above m), split by whether the raised
/// positions are in the first-m block ("f") or past it ("b") and whether the
/// lower row moves; the last two are the plain gl(t) > gl(t-1) factors.
enum class Case {
    SuperTopFLowerFixed,
    SuperTopBLowerFixed,
    SuperFF,
    SuperFB,
    SuperBF,
    SuperBB,
    GlLowerFixed,
    GlShifted,
};

inline const char* case_tag(Case c) {
    switch (c) {
        case Case::SuperTopFLowerFixed: return "super-top-f/lower-fixed";
        case Case::SuperTopBLowerFixed: return "super-top-b/lower-fixed";
        case Case::SuperFF: return "super-ff";
        case Case::SuperFB: return "super-fb";
        case Case::SuperBF: return "super-bf";
        case Case::SuperBB: return "super-bb";
        case Case::GlLowerFixed: return "gl/lower-fixed";
        case Case::GlShifted: return "gl/shifted";
    }
    return "?";
}

/// Shifted label coordinates: l = mu - i + m + 1 on the first m positions,
/// l = -mu + i - m past them. Strictly decreasing along the first block.
inline long lcoord(const GZPattern& pat, int i, int s, int m) {
    long mu = pat.mu(i, s);
    return i <= m ? mu - i + m + 1 : -mu + i - m;
}

inline int sign_flip_above(int k, int q) { return k <= q ? 1 : -1; } // S(k,q)

namespace detail {

inline std::string iso_context(Case c, int t, int k, int q) {
    return std::string(case_tag(c)) + "(t=" + std::to_string(t) + ",k=" + std::to_string(k) +
           ",q=" + std::to_string(q) + ")";
}

/// Assembles sign * pre * sqrt(num/den). `pre` carries the one factor that
/// sits outside the square root.
inline RadicalSum finish(Case c, int t, int k, int q, int sign, const Rational& pre,
                         const FactorRatio& fr) {
    auto res = fr.collapse(iso_context(c, t, k, q));
    switch (res.status) {
        case FactorRatio::Status::Zero:
            return RadicalSum();
        case FactorRatio::Status::Singular:
            throw SingularCoefficient("unpaired zero denominator in " + iso_context(c, t, k, q));
        case FactorRatio::Status::Value:
            break;
    }
    Radical root = sqrt_normalize(res.value);
    Rational coeff = root.coeff * pre;
    if (sign < 0) coeff = -coeff;
    if (coeff.is_zero()) return RadicalSum();
    return RadicalSum(Radical{coeff, root.radicand});
}

} // namespace detail

/// One isoscalar factor of the graded chain at level t (t > m): the upper row
/// gains a box at position k, the lower row at position q (q = 0 when the
/// lower row is unchanged). All labels are read from the source pattern.
inline RadicalSum iso_super(Case c, int k, int q, int t, const GZPattern& src,
                            const Signature& sig) {
    const int m = sig.m;
    auto l = [&](int i, int s) { return lcoord(src, i, s, m); };
    auto theta = [&](int i) { return src.theta(i, t - 1); };

    FactorRatio fr;
    int sign = 1;
    Rational pre(1);

    switch (c) {
        case Case::SuperTopFLowerFixed: { // k <= m, lower row fixed
            sign = (k % 2 == 1) ? 1 : -1;  // (-1)^(k-1)
            int th = 0;
            for (int i = k; i <= m; ++i) th += theta(i);
            if (th % 2) sign = -sign;
            for (int i = 1; i <= m; ++i) {
                if (i == k) continue;
                fr.num(Int(l(k, t) - l(i, t) + 1));
                fr.den(Int(l(k, t) - l(i, t - 1)));
            }
            for (int s = m + 1; s <= t - 1; ++s) fr.num(Int(l(k, t) - l(s, t - 1)));
            for (int s = m + 1; s <= t; ++s) fr.den(Int(l(k, t) - l(s, t) + 1));
            break;
        }
        case Case::SuperTopBLowerFixed: { // k > m, lower row fixed
            for (int i = 1; i <= m; ++i) {
                fr.num(Int(l(i, t) - l(k, t)));
                fr.den(Int(l(i, t - 1) - l(k, t) + 1));
            }
            for (int s = m + 1; s <= t - 1; ++s) fr.num(Int(l(s, t - 1) - l(k, t) + 1));
            for (int s = m + 1; s <= t; ++s)
                if (s != k) fr.den(Int(l(s, t) - l(k, t)));
            break;
        }
        case Case::SuperFF: { // k, q <= m
            sign = ((k + q) % 2 == 0) ? 1 : -1;
            int th = 0;
            for (int i = std::min(k, q) + 1; i <= std::max(k, q) - 1; ++i) th += theta(i);
            if (th % 2) sign = -sign;
            if (k != q) {
                // the k<->q antisymmetry lives entirely in the signed
                // difference; no extra flip for k > q
                pre = Rational(Int(1), Int(l(k, t) - l(q, t)));
            }
            if (theta(q) == 1) {
                int dkq = (k == q) ? 1 : 0;
                for (int i = 1; i <= m; ++i) {
                    if (i == k || i == q) continue;
                    fr.num(Int(l(i, t - 1) - l(k, t - 1) - 1 - dkq + 2 * theta(i)));
                    fr.num(Int(l(i, t - 1) - l(q, t - 1)));
                    fr.den(Int(l(i, t) - l(k, t)));
                    fr.den(Int(l(i, t) - l(q, t)));
                }
                for (int s = m + 1; s <= t; ++s) {
                    fr.num(Int(l(q, t) - l(s, t)));
                    fr.den(Int(l(k, t) - l(s, t) + 1));
                }
                for (int s = m + 1; s <= t - 1; ++s) {
                    fr.num(Int(l(k, t) - l(s, t - 1)));
                    fr.den(Int(l(q, t - 1) - l(s, t - 1)));
                }
            }
            break;
        }
        case Case::SuperFB: { // k <= m < q
            sign = (k % 2 == 0) ? 1 : -1; // (-1)^k
            int th = 0;
            for (int i = 1; i <= k - 1; ++i) th += theta(i);
            if (th % 2) sign = -sign;
            fr.den(Int(l(k, t) - l(q, t - 1)));
            for (int i = 1; i <= m; ++i) {
                if (i == k) continue;
                fr.num(Int(l(i, t - 1) - l(k, t - 1) - 1 + 2 * theta(i)));
                fr.num(Int(l(i, t - 1) - l(q, t - 1) + 1));
                fr.den(Int(l(i, t) - l(k, t)));
                fr.den(Int(l(i, t) - l(q, t - 1)));
            }
            for (int s = m + 1; s <= t; ++s) {
                fr.num(Int(std::labs(l(s, t) - l(q, t - 1))));
                fr.den(Int(l(k, t) - l(s, t) + 1));
            }
            for (int s = m + 1; s <= t - 1; ++s) {
                if (s == q) continue;
                fr.num(Int(l(k, t) - l(s, t - 1)));
                fr.den(Int(std::labs(l(s, t - 1) - l(q, t - 1) + 1)));
            }
            break;
        }
        case Case::SuperBF: { // q <= m < k
            sign = (q % 2 == 0) ? 1 : -1; // (-1)^q
            int th = 0;
            for (int i = q + 1; i <= m; ++i) th += theta(i);
            if (th % 2) sign = -sign;
            fr.den(Int(l(q, t) - l(k, t) + 1));
            for (int i = 1; i <= m; ++i) {
                fr.num(Int(l(i, t) - l(k, t)));
                fr.den(Int(l(i, t - 1) - l(k, t) + 1));
            }
            for (int i = 1; i <= m; ++i) {
                if (i == q) continue;
                fr.num(Int(std::labs(l(q, t - 1) - l(i, t - 1))));
                fr.den(Int(std::labs(l(q, t) - l(i, t))));
            }
            for (int s = m + 1; s <= t; ++s) {
                if (s == k) continue;
                fr.num(Int(std::labs(l(q, t) - l(s, t))));
                fr.den(Int(std::labs(l(s, t) - l(k, t))));
            }
            for (int s = m + 1; s <= t - 1; ++s) {
                fr.num(Int(std::labs(l(s, t - 1) - l(k, t) + 1)));
                fr.den(Int(std::labs(l(q, t) - l(s, t - 1) - 1)));
            }
            break;
        }
        case Case::SuperBB: { // k, q > m
            sign = sign_flip_above(k, q);
            int th = 0;
            for (int i = 1; i <= m; ++i) th += theta(i);
            if (th % 2) sign = -sign;
            for (int i = 1; i <= m; ++i) {
                fr.num(Int(l(i, t) - l(k, t)));
                fr.num(Int(l(i, t - 1) - l(q, t - 1) + 1));
                fr.den(Int(l(i, t - 1) - l(k, t) + 1));
                fr.den(Int(l(i, t) - l(q, t - 1)));
            }
            for (int s = m + 1; s <= t; ++s) {
                if (s == k) continue;
                fr.num(Int(std::labs(l(s, t) - l(q, t - 1))));
                fr.den(Int(std::labs(l(s, t) - l(k, t))));
            }
            for (int s = m + 1; s <= t - 1; ++s) {
                if (s == q) continue;
                fr.num(Int(std::labs(l(s, t - 1) - l(k, t) + 1)));
                fr.den(Int(std::labs(l(s, t - 1) - l(q, t - 1) + 1)));
            }
            break;
        }
        default:
            throw Error("iso_super: not a graded-chain case");
    }
    return detail::finish(c, t, k, q, sign, pre, fr);
}

/// Plain gl(t) > gl(t-1) factor (t <= m): upper row raised at k, lower row
/// raised at q or fixed (q = 0).
inline RadicalSum iso_classical(Case c, int k, int q, int t, const GZPattern& src,
                                const Signature& sig) {
    const int m = sig.m;
    auto l = [&](int i, int s) { return lcoord(src, i, s, m); };

    FactorRatio fr;
    int sign = 1;

    switch (c) {
        case Case::GlLowerFixed: {
            for (int i = 1; i <= t - 1; ++i) fr.num(Int(l(i, t - 1) - l(k, t) - 1));
            for (int i = 1; i <= t; ++i)
                if (i != k) fr.den(Int(l(i, t) - l(k, t)));
            break;
        }
        case Case::GlShifted: {
            sign = sign_flip_above(k, q);
            for (int i = 1; i <= t - 1; ++i) {
                if (i == q) continue;
                fr.num(Int(l(i, t - 1) - l(k, t) - 1));
                fr.den(Int(l(i, t - 1) - l(q, t - 1) - 1));
            }
            for (int i = 1; i <= t; ++i) {
                if (i == k) continue;
                fr.num(Int(l(i, t) - l(q, t - 1)));
                fr.den(Int(l(i, t) - l(k, t)));
            }
            break;
        }
        default:
            throw Error("iso_classical: not a gl-chain case");
    }
    return detail::finish(c, t, k, q, sign, Rational(1), fr);
}

/// A single-box creation path: rows j..r of `source` each gain one box, at
/// position inc[s] in row s; rows below j are untouched. Both endpoints are
/// valid patterns.
struct Transition {
    GZPattern source;
    GZPattern target;
    int j = 1;
    std::vector<int> inc; // inc[s] for s = 1..r (index s), 0 below row j

    int top_slot() const { return inc[source.r()]; }

    /// Reconstructs the path from a pattern pair, or nothing if the pair is
    /// not a single-box path for this j.
    static std::optional<Transition> between(const GZPattern& source, const GZPattern& target,
                                             int j, const Signature& sig) {
        const int r = sig.r();
        if (source.r() != r || target.r() != r) return std::nullopt;
        if (!gz::validate(source, sig).ok || !gz::validate(target, sig).ok) return std::nullopt;
        Transition tr{source, target, j, std::vector<int>(r + 1, 0)};
        for (int s = 1; s <= r; ++s) {
            int hits = 0;
            for (int i = 1; i <= s; ++i) {
                int d = target.mu(i, s) - source.mu(i, s);
                if (d == 0) continue;
                if (d != 1) return std::nullopt;
                ++hits;
                tr.inc[s] = i;
            }
            if (s >= j && hits != 1) return std::nullopt;
            if (s < j && hits != 0) return std::nullopt;
        }
        return tr;
    }
};

/// Which factor applies at chain level t of a path.
inline Case classify(int t, int k, int q, int j, int m) {
    if (t > m) {
        if (t == j) return k <= m ? Case::SuperTopFLowerFixed : Case::SuperTopBLowerFixed;
        if (k <= m) return q <= m ? Case::SuperFF : Case::SuperFB;
        return q <= m ? Case::SuperBF : Case::SuperBB;
    }
    return t == j ? Case::GlLowerFixed : Case::GlShifted;
}

struct FactorInfo {
    Case c;
    int t = 0, k = 0, q = 0;
    RadicalSum value;
};

/// Full coupling coefficient of a path: the parity prefactor times one factor
/// per chain level from r down to j. Optionally records the factor breakdown.
inline RadicalSum cgc(const Transition& tr, const Signature& sig,
                      std::vector<FactorInfo>* breakdown = nullptr) {
    const int m = sig.m, r = sig.r(), j = tr.j;
    int sign = 1;
    if (j > m) {
        int th = 0;
        for (int i = 1; i <= m; ++i)
            for (int q = m; q <= j - 1; ++q) th += tr.source.theta(i, q);
        if (th % 2) sign = -1;
    }
    RadicalSum value{Rational(sign)};
    if (breakdown)
        breakdown->push_back({Case::SuperTopFLowerFixed, 0, 0, 0, RadicalSum(Rational(sign))});
    for (int t = r; t >= j; --t) {
        int k = tr.inc[t];
        int q = (t > j) ? tr.inc[t - 1] : 0;
        Case c = classify(t, k, q, j, m);
        RadicalSum f = (t > m) ? iso_super(c, k, q, t, tr.source, sig)
                               : iso_classical(c, k, q, t, tr.source, sig);
        if (breakdown) breakdown->push_back({c, t, k, q, f});
        value = value * f;
        if (value.is_zero() && !breakdown) break;
    }
    return value;
}

/// Coupling coefficient of a pattern pair, 0 when the pair is not a
/// single-box path.
inline RadicalSum cgc_or_zero(const GZPattern& source, const GZPattern& target, int j,
                              const Signature& sig) {
    auto tr = Transition::between(source, target, j, sig);
    if (!tr) return RadicalSum();
    return cgc(*tr, sig);
}

/// All valid single-box creation paths from `src` for generator slot j with
/// the top row raised at position k.
inline std::vector<Transition> creation_transitions(const GZPattern& src, int j, int k,
                                                    const Signature& sig) {
    const int r = sig.r();
    std::vector<Transition> out;
    GZPattern work = src;
    std::vector<int> inc(r + 1, 0);
    work.set_mu(k, r, work.mu(k, r) + 1);
    inc[r] = k;
    std::function<void(int)> rec = [&](int s) {
        if (s < j) {
            if (gz::validate(work, sig).ok) out.push_back(Transition{src, work, j, inc});
            return;
        }
        for (int pos = 1; pos <= s; ++pos) {
            work.set_mu(pos, s, work.mu(pos, s) + 1);
            inc[s] = pos;
            rec(s - 1);
            work.set_mu(pos, s, work.mu(pos, s) - 1);
            inc[s] = 0;
        }
    };
    rec(r - 1);
    return out;
}

/// All valid single-box paths nu -> pat whose top row is lowered at k, i.e.
/// the sources nu contributing to annihilation on pat.
inline std::vector<Transition> annihilation_transitions(const GZPattern& pat, int j, int k,
                                                        const Signature& sig) {
    const int r = sig.r();
    std::vector<Transition> out;
    GZPattern work = pat;
    std::vector<int> inc(r + 1, 0);
    if (work.mu(k, r) == 0) return out;
    work.set_mu(k, r, work.mu(k, r) - 1);
    inc[r] = k;
    std::function<void(int)> rec = [&](int s) {
        if (s < j) {
            if (gz::validate(work, sig).ok) out.push_back(Transition{work, pat, j, inc});
            return;
        }
        for (int pos = 1; pos <= s; ++pos) {
            if (work.mu(pos, s) == 0) continue;
            work.set_mu(pos, s, work.mu(pos, s) - 1);
            inc[s] = pos;
            rec(s - 1);
            work.set_mu(pos, s, work.mu(pos, s) + 1);
            inc[s] = 0;
        }
    };
    rec(r - 1);
    return out;
}

} // namespace parastat::iso
