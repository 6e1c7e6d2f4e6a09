#pragma once

#include <array>
#include <cmath>

#include "adsfn/errors.hpp"
#include "adsfn/isometry.hpp"
#include "adsfn/split_complex.hpp"

namespace adsfn {

/// Admissible representation of the pants group <r, s, t | t s r = e>.
/// Generator indices: 0 = r, 1 = s, 2 = t.
struct PantsRep {
    Isometry rho_r;
    Isometry rho_s;
    Isometry rho_t;

    const Isometry& gen(int i) const {
        switch (i) {
            case 0: return rho_r;
            case 1: return rho_s;
            default: return rho_t;
        }
    }
    Isometry& gen(int i) {
        switch (i) {
            case 0: return rho_r;
            case 1: return rho_s;
            default: return rho_t;
        }
    }

    /// Relation residual: max entry deviation of rho_t rho_s rho_r from +-I.
    double relation_residual() const {
        Mat2 p = rho_t.plus * rho_s.plus * rho_r.plus;
        Mat2 m = rho_t.minus * rho_s.minus * rho_r.minus;
        auto res = [](const Mat2& w) {
            double s = w.a > 0 ? 1.0 : -1.0; // compare against sign-matched identity
            return std::max(std::max(std::abs(w.a - s), std::abs(w.d - s)),
                            std::max(std::abs(w.b), std::abs(w.c)));
        };
        return std::max(res(p), res(m));
    }

    bool admissible() const {
        for (int i = 0; i < 3; ++i)
            if (classify(gen(i)) == IsometryClass::Other) return false;
        return true;
    }

    PantsRep conjugated(const Isometry& C) const {
        Isometry Ci = C.inverse();
        return {C * rho_r * Ci, C * rho_s * Ci, C * rho_t * Ci};
    }
};

namespace detail {

/// Discrete faithful PSL(2,R) pants factor with boundary translation
/// lengths (l1, l2, l3) >= 0, normalized so that rho(r) has attracting
/// fixed point at infinity and repelling at 0 (parabolic r fixes only
/// infinity), and rho(s) has its repelling fixed point at -1. Uses the
/// all-negative-trace lift tr = -2 cosh(l/2).
inline std::array<Mat2, 2> pants_factor(double l1, double l2, double l3) {
    const double y = 2.0 * std::cosh(l2 / 2.0);
    const double z = 2.0 * std::cosh(l3 / 2.0);
    Mat2 R, S;
    if (l1 > 1e-12) {
        const double m = std::exp(l1 / 2.0);
        R = -Mat2::diag(m, 1.0 / m);
        // tr(S) = -y, tr(S R) = -z, fixed point of S at -1 repelling
        double a = (z + y / m) / (m - 1.0 / m);
        double d = -y - a;
        double b = 0.5 * ((a - d) - 2.0 * std::sinh(l2 / 2.0));
        double c = b + d - a;
        S = {a, b, c, d};
    } else {
        // parabolic r: translation normal form, gauge kappa fixed once
        const double kappa = -2.0;
        R = {-1.0, -kappa, 0.0, -1.0};
        double c = (y + z) / kappa;
        double u = -2.0 * c - 2.0 * std::sinh(l2 / 2.0);
        double a = 0.5 * (u - y);
        double d = 0.5 * (-u - y);
        double b = a + c - d;
        S = {a, b, c, d};
    }
    return {R, S};
}

} // namespace detail

/// Realize an admissible pants representation from boundary B-lengths in
/// the closure of the positive cone, normalized so that rho(r) has axis
/// (repelling [0,1], attracting [1,0]) and rho(s) repelling fixed point
/// [-1,1]. A zero idempotent coordinate yields a parabolic factor.
inline PantsRep realize_pants(SplitComplex l1, SplitComplex l2, SplitComplex l3) {
    for (SplitComplex l : {l1, l2, l3})
        if (cone_classify(l) == ConeClass::Outside)
            throw ConeViolation("realize_pants: length outside closure of C+");
    auto [p1, q1] = idempotent_split(l1);
    auto [p2, q2] = idempotent_split(l2);
    auto [p3, q3] = idempotent_split(l3);
    auto clamp0 = [](double v) { return v < 0.0 ? 0.0 : v; };
    auto Fp = detail::pants_factor(clamp0(p1), clamp0(p2), clamp0(p3));
    auto Fm = detail::pants_factor(clamp0(q1), clamp0(q2), clamp0(q3));
    PantsRep rep;
    rep.rho_r = Isometry(Fp[0], Fm[0]);
    rep.rho_s = Isometry(Fp[1], Fm[1]);
    rep.rho_t = (rep.rho_s * rep.rho_r).inverse();
    return rep;
}

/// Read back the boundary B-lengths of the generators.
inline std::array<SplitComplex, 3> b_lengths(const PantsRep& rep) {
    if (!rep.admissible())
        throw NotAdmissible("b_lengths: representation not admissible");
    return {b_length(rep.rho_r), b_length(rep.rho_s), b_length(rep.rho_t)};
}

/// Conjugate rep so that gen's axis is ([0,1] repelling, [1,0] attracting)
/// and the cyclically next generator has repelling fixed point [-1,1].
/// Returns the conjugated rep and the conjugator used.
inline std::pair<PantsRep, Isometry> normalize_rep(const PantsRep& rep, int gen) {
    if (classify(rep.gen(gen)) != IsometryClass::Loxodromic)
        throw NotLoxodromic("normalize_rep: generator image not loxodromic");
    FixedPoints fg = fixed_points(rep.gen(gen));
    FixedPoints fn = fixed_points(rep.gen((gen + 1) % 3));
    ProjectivePoint inf(1, 0), zero(0, 1), minus1(-1, 1);
    Mat2 Cp = mobius_through(fg.attracting.plus, fg.repelling.plus, fn.repelling.plus,
                             inf, zero, minus1);
    Mat2 Cm = mobius_through(fg.attracting.minus, fg.repelling.minus, fn.repelling.minus,
                             inf, zero, minus1);
    if (Cp.det() <= 0.0 || Cm.det() <= 0.0)
        throw NotAdmissible("normalize_rep: orientation-reversing conjugator required");
    Isometry C(Cp, Cm);
    return {rep.conjugated(C), C};
}

} // namespace adsfn
