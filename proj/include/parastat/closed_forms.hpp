#pragma once

#include <map>
#include <string>
#include <vector>

#include "parastat/fock_module.hpp"

namespace parastat::fock::m1n1 {

/// Basis label for m = n = 1: top row (a, b), fill c with c in {a-1, a},
/// b > 0 forcing a > 0, and a <= p.
struct Vec {
    int a = 0, b = 0, c = 0;

    friend bool operator<(const Vec& x, const Vec& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    }
    friend bool operator==(const Vec& x, const Vec& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    bool valid(int p) const {
        if (a < 0 || b < 0 || c < 0) return false;
        if (c != a && c != a - 1) return false;
        if (b > 0 && a == 0) return false;
        return a <= p;
    }
    int level() const { return a + b; }
    GZPattern pattern() const { return GZPattern({{a, b}, {c}}); }
};

/// First reduced element, split by the parity of the second label.
inline RadicalSum g1(int a, int b, int p) {
    FactorRatio fr;
    if (b % 2 == 0) {
        fr.num(Int(a));
        fr.num(Int(a + b + 1));
        fr.num(Int(p - a));
        fr.den(Int(a + b));
    } else {
        fr.num(Int(a));
        fr.num(Int(p - a));
    }
    auto res = fr.collapse("closed-form g1");
    if (res.status == FactorRatio::Status::Zero) return RadicalSum();
    if (res.status == FactorRatio::Status::Singular)
        throw SingularReducedElement("closed-form g1 singular");
    return RadicalSum::sqrt_of(res.value);
}

/// Second reduced element, split by the parity of the second label.
inline RadicalSum g2(int a, int b, int p) {
    FactorRatio fr;
    if (b % 2 == 0) {
        fr.num(Int(a + b + 1));
    } else {
        fr.num(Int(b + 1));
        fr.num(Int(p + b + 1));
        fr.den(Int(a + b));
    }
    auto res = fr.collapse("closed-form g2");
    if (res.status == FactorRatio::Status::Zero) return RadicalSum();
    if (res.status == FactorRatio::Status::Singular)
        throw SingularReducedElement("closed-form g2 singular");
    return RadicalSum::sqrt_of(res.value);
}

/// The closed-form action tables for m = n = 1, with invalid or over-cap
/// targets deleted before their coefficients are evaluated. The pso variant
/// twists the parafermion columns by +/- (-1)^(a+b).
inline std::map<Vec, RadicalSum> apply_closed(const GeneratorLabel& gen, const Vec& v, int p,
                                              int cap) {
    std::map<Vec, RadicalSum> out;
    const int a = v.a, b = v.b;
    const bool lowered_fill = (v.c == v.a - 1);
    auto emit = [&](Vec target, const std::function<RadicalSum()>& coeff) {
        if (!target.valid(p) || target.level() > cap) return;
        RadicalSum x = coeff();
        if (x.is_zero()) return;
        auto it = out.find(target);
        if (it == out.end()) out[target] = x;
        else {
            it->second += x;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    auto sq = [](int num, int den) { return RadicalSum::sqrt_of(Rational(num, den)); };

    if (gen.family == Family::Parafermion && gen.is_creation()) {
        if (!lowered_fill) {
            emit({a + 1, b, v.c + 1}, [&] { return g1(a, b, p); });
        } else {
            emit({a + 1, b, v.c + 1}, [&] { return sq(a + b, a + b + 1) * g1(a, b, p); });
            emit({a, b + 1, v.c + 1}, [&] { return -(sq(1, a + b + 1) * g2(a, b, p)); });
        }
    } else if (gen.family == Family::Paraboson && gen.is_creation()) {
        if (!lowered_fill) {
            emit({a + 1, b, v.c}, [&] { return sq(1, a + b + 1) * g1(a, b, p); });
            emit({a, b + 1, v.c}, [&] { return sq(a + b, a + b + 1) * g2(a, b, p); });
        } else {
            emit({a, b + 1, v.c}, [&] { return -g2(a, b, p); });
        }
    } else if (gen.family == Family::Parafermion) {
        if (!lowered_fill) {
            emit({a - 1, b, v.c - 1}, [&] { return g1(a - 1, b, p); });
            emit({a, b - 1, v.c - 1}, [&] { return -(sq(1, a + b) * g2(a, b - 1, p)); });
        } else {
            emit({a - 1, b, v.c - 1}, [&] { return sq(a + b - 1, a + b) * g1(a - 1, b, p); });
        }
    } else {
        if (!lowered_fill) {
            emit({a, b - 1, v.c}, [&] { return sq(a + b - 1, a + b) * g2(a, b - 1, p); });
        } else {
            emit({a - 1, b, v.c}, [&] { return sq(1, a + b) * g1(a - 1, b, p); });
            emit({a, b - 1, v.c}, [&] { return -g2(a, b - 1, p); });
        }
    }

    if (gen.variant == Variant::Pso && gen.family == Family::Parafermion) {
        int tw = gen.sign * (v.level() % 2 == 0 ? 1 : -1);
        if (tw < 0)
            for (auto& [t, val] : out) val = -val;
    }
    return out;
}

/// Entrywise comparison of the general construction against the closed-form
/// tables, for both variants and all four generators, plus the printed
/// mixed-triple contrast [[f+,b~],f-] = -2 b~ versus {{f+,b~},f-} = +2 b~.
inline Report verify_closed_forms(int p, int level_cap) {
    Signature sig{1, 1, p, level_cap};
    auto basis = std::make_shared<const Basis>(sig);
    Report rep("closed-forms m=n=1 p=" + std::to_string(p));

    for (Variant variant : {Variant::Osp, Variant::Pso}) {
        GenCache cache(basis, variant);
        for (const GeneratorLabel& gen :
             {F(1, +1, variant), F(1, -1, variant), B(1, +1, variant), B(1, -1, variant)}) {
            const auto& mat = cache.get(gen);
            Check c;
            c.name = std::string("closed-form ") + variant_name(variant);
            c.detail = gen.name();
            c.ok = true;
            for (int col = 0; col < basis->size() && c.ok; ++col) {
                const auto& pat = basis->pattern(col);
                Vec src{pat.mu(1, 2), pat.mu(2, 2), pat.mu(1, 1)};
                auto expected = apply_closed(gen, src, p, level_cap);
                std::map<Vec, RadicalSum> got;
                for (const auto& [rw, val] : mat.col(col)) {
                    const auto& t = basis->pattern(rw);
                    got[Vec{t.mu(1, 2), t.mu(2, 2), t.mu(1, 1)}] = val;
                }
                if (!(got == expected)) {
                    c.ok = false;
                    c.counterexample = "column " + pat.to_text();
                }
            }
            rep.add(std::move(c));
        }

        // mixed-triple contrast on the same truncation
        for (int e : {+1, -1}) {
            Expr lhs, rhs;
            if (variant == Variant::Osp) {
                lhs = comm(comm(Expr::generator(F(1, +1, variant)), Expr::generator(B(1, e, variant))),
                           Expr::generator(F(1, -1, variant)));
                rhs = Expr::generator(B(1, e, variant)).scaled(Rational(-2));
            } else {
                lhs = acomm(
                    acomm(Expr::generator(F(1, +1, variant)), Expr::generator(B(1, e, variant))),
                    Expr::generator(F(1, -1, variant)));
                rhs = Expr::generator(B(1, e, variant)).scaled(Rational(2));
            }
            detail::check_identity(rep, cache,
                                   std::string("mixed-triple ") + variant_name(variant),
                                   std::string("b") + (e > 0 ? "+" : "-"), lhs, rhs);
        }
    }
    return rep;
}

} // namespace parastat::fock::m1n1
