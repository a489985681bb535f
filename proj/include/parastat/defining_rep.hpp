#pragma once

#include <random>
#include <string>
#include <vector>

#include "parastat/fock_module.hpp"
#include "parastat/radical.hpp"
#include "parastat/report.hpp"

namespace parastat::defrep {

using fock::B;
using fock::F;
using fock::Family;
using fock::GeneratorLabel;
using fock::Variant;
using fock::Z2Z2Degree;

/// Dense exact matrix of dimension 2m+2n+1 with a Z2 x Z2 degree. The block
/// zones are: the first 2m rows/columns, the middle one, and the last 2n.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(int dim, Z2Z2Degree deg) : dim_(dim), deg_(deg), a_(dim * dim) {}

    int dim() const { return dim_; }
    const Z2Z2Degree& degree() const { return deg_; }
    void set_degree(Z2Z2Degree d) { deg_ = d; }

    const RadicalSum& at(int i, int j) const { return a_[(i - 1) * dim_ + (j - 1)]; } // 1-based
    RadicalSum& at(int i, int j) { return a_[(i - 1) * dim_ + (j - 1)]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend GradedMatrix operator+(const GradedMatrix& x, const GradedMatrix& y) {
        GradedMatrix out(x.dim_, x.deg_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
        return out;
    }
    friend GradedMatrix operator-(const GradedMatrix& x, const GradedMatrix& y) {
        GradedMatrix out(x.dim_, x.deg_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
        return out;
    }
    friend GradedMatrix operator*(const GradedMatrix& x, const GradedMatrix& y) {
        GradedMatrix out(x.dim_, x.deg_ + y.deg_);
        for (int i = 1; i <= x.dim_; ++i)
            for (int k = 1; k <= x.dim_; ++k) {
                const RadicalSum& xv = x.at(i, k);
                if (xv.is_zero()) continue;
                for (int j = 1; j <= x.dim_; ++j) {
                    const RadicalSum& yv = y.at(k, j);
                    if (yv.is_zero()) continue;
                    out.at(i, j) += xv * yv;
                }
            }
        return out;
    }
    GradedMatrix scaled(const RadicalSum& s) const {
        GradedMatrix out(dim_, deg_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = s * a_[i];
        return out;
    }
    friend bool operator==(const GradedMatrix& x, const GradedMatrix& y) {
        return x.dim_ == y.dim_ && x.a_ == y.a_;
    }

private:
    int dim_ = 0;
    Z2Z2Degree deg_;
    std::vector<RadicalSum> a_;
};

/// Generalized bracket xy - (-1)^(deg.deg) yx; degrees add.
inline GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y) {
    if (x.dim() != y.dim()) throw Error("graded_bracket: dimension mismatch");
    int s = x.degree().dot(y.degree());
    GradedMatrix xy = x * y;
    GradedMatrix yx = y * x;
    return (s % 2 == 0) ? xy - yx : xy + yx;
}

/// The defining matrices: the para-operator images in dimension 2m+2n+1,
/// sqrt(2) times a pair of matrix units.
inline GradedMatrix generator(const GeneratorLabel& gen, int m, int n) {
    const int dim = 2 * m + 2 * n + 1;
    GradedMatrix out(dim, gen.degree());
    RadicalSum rt2 = RadicalSum(Radical{Rational(1), Int(2)});
    const int mid = 2 * m + 1;
    if (gen.family == Family::Parafermion) {
        int j = gen.index;
        if (j < 1 || j > m) throw Error("generator: parafermion index out of range");
        if (gen.is_creation()) {
            out.at(j, mid) += rt2;
            out.at(mid, j + m) -= rt2;
        } else {
            out.at(mid, j) += rt2;
            out.at(j + m, mid) -= rt2;
        }
    } else {
        int k = gen.index;
        if (k < 1 || k > n) throw Error("generator: paraboson index out of range");
        if (gen.is_creation()) {
            out.at(mid, mid + n + k) += rt2;
            out.at(mid + k, mid) += rt2;
        } else {
            out.at(mid, mid + k) += rt2;
            out.at(mid + n + k, mid) -= rt2;
        }
    }
    return out;
}

namespace detail {

enum Zone { ZF = 0, ZM = 1, ZB = 2 };

inline Zone zone(int i, int m, int n) {
    if (i <= 2 * m) return ZF;
    if (i == 2 * m + 1) return ZM;
    (void)n;
    return ZB;
}

/// Degree of each block per the grading scheme: diagonal zones even, the
/// middle strip (1,1) against the first zone and (1,0) against the last,
/// (0,1) between the outer zones.
inline Z2Z2Degree block_degree(Zone a, Zone b) {
    if (a == b) return {0, 0};
    if ((a == ZF && b == ZM) || (a == ZM && b == ZF)) return {1, 1};
    if ((a == ZM && b == ZB) || (a == ZB && b == ZM)) return {1, 0};
    return {0, 1};
}

} // namespace detail

/// Nonzero entries confined to the blocks carrying the matrix's degree.
inline bool degree_blocks_ok(const GradedMatrix& x, int m, int n) {
    for (int i = 1; i <= x.dim(); ++i)
        for (int j = 1; j <= x.dim(); ++j) {
            if (x.at(i, j).is_zero()) continue;
            if (!(detail::block_degree(detail::zone(i, m, n), detail::zone(j, m, n)) ==
                  x.degree()))
                return false;
        }
    return true;
}

/// Structural membership: the block relations of the defining matrix form
/// (skew/symmetric sub-blocks, tied transposes, zero center).
inline bool shape_ok(const GradedMatrix& x, int m, int n) {
    const int mid = 2 * m + 1;
    auto at = [&](int i, int j) { return x.at(i, j); };
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (!(at(m + i, m + j) == -at(j, i))) return false;               // -a^t
            if (!(at(i, m + j) == -at(j, m + i))) return false;               // b skew
            if (!(at(m + i, j) == -at(m + j, i))) return false;               // c skew
        }
    for (int i = 1; i <= m; ++i) {
        if (!(at(mid, i) == -at(m + i, mid))) return false;                   // -v^t
        if (!(at(mid, m + i) == -at(i, mid))) return false;                   // -u^t
    }
    if (!at(mid, mid).is_zero()) return false;
    for (int k = 1; k <= n; ++k) {
        if (!(at(mid + k, mid) == at(mid, mid + n + k))) return false;        // z1^t
        if (!(at(mid + n + k, mid) == -at(mid, mid + k))) return false;       // -z^t
    }
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= n; ++k) {
            if (!(at(mid + k, i) == -at(m + i, mid + n + k))) return false;   // -y1^t
            if (!(at(mid + k, m + i) == -at(i, mid + n + k))) return false;   // -x1^t
            if (!(at(mid + n + k, i) == at(m + i, mid + k))) return false;    // y^t
            if (!(at(mid + n + k, m + i) == at(i, mid + k))) return false;    // x^t
        }
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
            if (!(at(mid + n + k, mid + n + l) == -at(mid + l, mid + k))) return false; // -d^t
            if (!(at(mid + k, mid + n + l) == at(mid + l, mid + n + k))) return false;  // e sym
            if (!(at(mid + n + k, mid + l) == at(mid + n + l, mid + k))) return false;  // f sym
        }
    return true;
}

namespace detail {

inline std::string ind3(int j, int k, int l) {
    return "[" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + "]";
}
inline std::string sgn3(int x, int h, int e) {
    auto s = [](int v) { return v > 0 ? "+" : "-"; };
    return std::string(s(x)) + s(h) + s(e);
}

inline void check_triple(Report& rep, const std::string& name, const std::string& indices,
                         const std::string& signs, const GradedMatrix& lhs,
                         const GradedMatrix& rhs) {
    GradedMatrix diff = lhs - rhs;
    Check c;
    c.name = name;
    c.indices = indices;
    c.signs = signs;
    c.ok = diff.is_zero();
    if (!c.ok) {
        for (int i = 1; i <= diff.dim() && c.counterexample.empty(); ++i)
            for (int j = 1; j <= diff.dim(); ++j)
                if (!diff.at(i, j).is_zero()) {
                    c.counterexample = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") lhs=" + lhs.at(i, j).to_text() +
                                       " rhs=" + rhs.at(i, j).to_text();
                    break;
                }
    }
    rep.add(std::move(c));
}

inline GradedMatrix comm_m(const GradedMatrix& a, const GradedMatrix& b) { return a * b - b * a; }
inline GradedMatrix acomm_m(const GradedMatrix& a, const GradedMatrix& b) { return a * b + b * a; }

} // namespace detail

/// Exhaustive check of the triple relations (both single-family sets and the
/// mixed anticommutator set) on the defining matrices, plus block-shape and
/// grading closure of all brackets.
inline Report verify_defining_relations(int m, int n) {
    Report rep("defining-realization m=" + std::to_string(m) + " n=" + std::to_string(n));
    const int signs[2] = {+1, -1};
    auto f = [&](int j, int s) { return generator(F(j, s, Variant::Pso), m, n); };
    auto b = [&](int j, int s) { return generator(B(j, s, Variant::Pso), m, n); };
    const int dim = 2 * m + 2 * n + 1;
    GradedMatrix zero_even(dim, Z2Z2Degree{0, 0});

    using detail::acomm_m;
    using detail::comm_m;
    using detail::check_triple;
    using fock::Z2Z2Degree;

    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= m; ++l)
                for (int x : signs)
                    for (int h : signs)
                        for (int e : signs) {
                            GradedMatrix lhs = comm_m(comm_m(f(j, x), f(k, h)), f(l, e));
                            GradedMatrix rhs(dim, lhs.degree());
                            if (k == l) rhs = rhs + f(j, x).scaled(Rational(std::abs(e - h)));
                            if (j == l) rhs = rhs - f(k, h).scaled(Rational(std::abs(e - x)));
                            check_triple(rep, "fff", detail::ind3(j, k, l),
                                         detail::sgn3(x, h, e), lhs, rhs);
                        }
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                for (int x : signs)
                    for (int h : signs)
                        for (int e : signs) {
                            GradedMatrix lhs = comm_m(acomm_m(b(j, x), b(k, h)), b(l, e));
                            GradedMatrix rhs(dim, lhs.degree());
                            if (j == l) rhs = rhs + b(k, h).scaled(Rational(e - x));
                            if (k == l) rhs = rhs + b(j, x).scaled(Rational(e - h));
                            check_triple(rep, "bbb", detail::ind3(j, k, l),
                                         detail::sgn3(x, h, e), lhs, rhs);
                        }
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= n; ++l)
                for (int x : signs)
                    for (int h : signs)
                        for (int e : signs)
                            check_triple(rep, "ffb", detail::ind3(j, k, l),
                                         detail::sgn3(x, h, e),
                                         comm_m(comm_m(f(j, x), f(k, h)), b(l, e)),
                                         GradedMatrix(dim, Z2Z2Degree{1, 0}));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= m; ++l)
                for (int x : signs)
                    for (int h : signs)
                        for (int e : signs)
                            check_triple(rep, "bbf", detail::ind3(j, k, l),
                                         detail::sgn3(x, h, e),
                                         comm_m(acomm_m(b(j, x), b(k, h)), f(l, e)),
                                         GradedMatrix(dim, Z2Z2Degree{1, 1}));
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= m; ++l)
                for (int x : signs)
                    for (int h : signs)
                        for (int e : signs) {
                            GradedMatrix lhs = acomm_m(acomm_m(f(j, x), b(k, h)), f(l, e));
                            GradedMatrix rhs(dim, lhs.degree());
                            if (j == l) rhs = rhs + b(k, h).scaled(Rational(std::abs(e - x)));
                            check_triple(rep, "fbf", detail::ind3(j, k, l),
                                         detail::sgn3(x, h, e), lhs, rhs);
                        }
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                for (int x : signs)
                    for (int h : signs)
                        for (int e : signs) {
                            GradedMatrix lhs = comm_m(acomm_m(f(j, x), b(k, h)), b(l, e));
                            GradedMatrix rhs(dim, lhs.degree());
                            if (k == l) rhs = rhs + f(j, x).scaled(Rational(e - h));
                            check_triple(rep, "fbb", detail::ind3(j, k, l),
                                         detail::sgn3(x, h, e), lhs, rhs);
                        }

    // closure: pairwise brackets stay inside the block form with added degrees
    std::vector<GradedMatrix> gens;
    for (int j = 1; j <= m; ++j)
        for (int s : signs) gens.push_back(f(j, s));
    for (int j = 1; j <= n; ++j)
        for (int s : signs) gens.push_back(b(j, s));
    bool closure = true;
    for (const auto& xg : gens)
        for (const auto& yg : gens) {
            GradedMatrix br = graded_bracket(xg, yg);
            if (!shape_ok(br, m, n) || !degree_blocks_ok(br, m, n)) closure = false;
        }
    rep.add("bracket-closure", "all generator pairs", closure);
    for (const auto& xg : gens)
        if (!shape_ok(xg, m, n) || !degree_blocks_ok(xg, m, n))
            rep.add("generator-shape", "", false);
    return rep;
}

/// Graded Jacobi identity on random homogeneous elements generated from the
/// para-operators; deterministic seed.
inline Report verify_jacobi_random(int m, int n, int samples, unsigned long seed) {
    Report rep("jacobi m=" + std::to_string(m) + " n=" + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::vector<GradedMatrix> pool;
    for (int j = 1; j <= m; ++j)
        for (int s : {+1, -1}) pool.push_back(generator(F(j, s, Variant::Pso), m, n));
    for (int j = 1; j <= n; ++j)
        for (int s : {+1, -1}) pool.push_back(generator(B(j, s, Variant::Pso), m, n));
    // extend with homogeneous brackets so all four degrees appear
    std::size_t base = pool.size();
    for (std::size_t t = 0; t < base; ++t) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        GradedMatrix br = graded_bracket(pool[pick(rng)], pool[pick(rng)]);
        if (!br.is_zero()) pool.push_back(br);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int bad = 0;
    for (int it = 0; it < samples; ++it) {
        const GradedMatrix& x = pool[pick(rng)];
        const GradedMatrix& y = pool[pick(rng)];
        const GradedMatrix& z = pool[pick(rng)];
        GradedMatrix lhs = graded_bracket(x, graded_bracket(y, z));
        GradedMatrix rhs = graded_bracket(graded_bracket(x, y), z);
        GradedMatrix tail = graded_bracket(y, graded_bracket(x, z));
        if (x.degree().dot(y.degree()) % 2 == 1) rhs = rhs - tail;
        else rhs = rhs + tail;
        if (!(lhs - rhs).is_zero()) ++bad;
    }
    rep.add("graded-jacobi", std::to_string(samples) + " samples", bad == 0,
            bad ? std::to_string(bad) + " failures" : "");
    return rep;
}

/// Fraction-free rank of an integer matrix (rows as vectors).
inline int bareiss_rank(std::vector<std::vector<Int>> a) {
    int rank = 0;
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    Int prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[row], a[pivot]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

/// The even-plus-parafermion span must have the dimension of
/// so(2m+1) + sp(2n) = m(2m+1) + n(2n+1); computed by exact integer rank
/// after scaling the sqrt(2) factors away.
inline Report verify_even_span_dimension(int m, int n) {
    Report rep("even-span m=" + std::to_string(m) + " n=" + std::to_string(n));
    const int dim = 2 * m + 2 * n + 1;
    std::vector<GradedMatrix> span;
    std::vector<GradedMatrix> fs, bs;
    for (int j = 1; j <= m; ++j)
        for (int s : {+1, -1}) fs.push_back(generator(F(j, s, Variant::Pso), m, n));
    for (int j = 1; j <= n; ++j)
        for (int s : {+1, -1}) bs.push_back(generator(B(j, s, Variant::Pso), m, n));
    for (const auto& g : fs) span.push_back(g.scaled(RadicalSum::sqrt_of(Rational(1, 2)))); // /sqrt2
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size(); ++j)
            span.push_back(graded_bracket(fs[i], fs[j]).scaled(RadicalSum(Rational(1, 2))));
    for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = 0; j < bs.size(); ++j)
            span.push_back(graded_bracket(bs[i], bs[j]).scaled(RadicalSum(Rational(1, 2))));

    std::vector<std::vector<Int>> rows;
    bool integral = true;
    for (const auto& mtx : span) {
        std::vector<Int> flat;
        flat.reserve(dim * dim);
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) {
                const RadicalSum& v = mtx.at(i, j);
                if (!v.is_rational() || !(v.rational_part().den() == 1)) integral = false;
                flat.push_back(v.rational_part().num());
            }
        rows.push_back(std::move(flat));
    }
    rep.add("rescaled-entries-integral", "", integral);
    int rank = bareiss_rank(std::move(rows));
    int expected = m * (2 * m + 1) + n * (2 * n + 1);
    rep.add("span-rank", "rank=" + std::to_string(rank) + " expected=" + std::to_string(expected),
            rank == expected);
    return rep;
}

} // namespace parastat::defrep
