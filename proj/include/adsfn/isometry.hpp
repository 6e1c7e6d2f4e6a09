#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "adsfn/boundary.hpp"
#include "adsfn/errors.hpp"
#include "adsfn/split_complex.hpp"

namespace adsfn {

/// Real 2x2 matrix, row major.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Mat2 inverse() const {
        double dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    /// Exact inverse of a unimodular matrix. For large near-unimodular
    /// matrices the computed determinant is ill-conditioned even though
    /// the entries are accurate, so it must not be divided out.
    Mat2 adjugate() const { return {d, -b, -c, a}; }

    friend Mat2 operator*(const Mat2& u, const Mat2& v) {
        return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d,
                u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d};
    }
    friend Mat2 operator*(double k, const Mat2& m) {
        return {k * m.a, k * m.b, k * m.c, k * m.d};
    }
    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

    ProjectivePoint apply(ProjectivePoint p) const {
        return ProjectivePoint(a * p.x + b * p.y, c * p.x + d * p.y);
    }
};

/// Scale a matrix with positive determinant to det = 1.
inline Mat2 unimodular(const Mat2& m) {
    double dt = m.det();
    if (dt <= 0.0)
        throw DomainError("unimodular: determinant not positive");
    double s = std::sqrt(dt);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
}

/// Projective equality of unimodular matrices (up to global sign).
inline bool projectively_equal(const Mat2& u, const Mat2& v, double tol = 1e-9) {
    auto close = [tol](const Mat2& x, const Mat2& y) {
        return std::abs(x.a - y.a) <= tol && std::abs(x.b - y.b) <= tol &&
               std::abs(x.c - y.c) <= tol && std::abs(x.d - y.d) <= tol;
    };
    return close(u, v) || close(u, -v);
}

/// The unique Mobius transformation carrying (p1, p2, p3) to (q1, q2, q3),
/// as a matrix of unit |det| (the determinant sign is dictated by the two
/// configurations' cyclic orders).
inline Mat2 mobius_through(ProjectivePoint p1, ProjectivePoint p2, ProjectivePoint p3,
                           ProjectivePoint q1, ProjectivePoint q2, ProjectivePoint q3) {
    // Map (p1,p2,p3) -> (inf, 0, 1): row 1 kills p2, row 2 kills p1, scaled
    // so the image of p3 is [1 : 1].
    auto standard = [](ProjectivePoint r1, ProjectivePoint r2, ProjectivePoint r3) {
        double d13 = projective_det(r1, r3);
        double d23 = projective_det(r2, r3);
        return Mat2{d13 * r2.y, -d13 * r2.x, d23 * r1.y, -d23 * r1.x};
    };
    Mat2 F = standard(p1, p2, p3);
    Mat2 G = standard(q1, q2, q3);
    Mat2 M = G.inverse() * F;
    double dt = M.det();
    if (std::abs(dt) < 1e-300)
        throw DomainError("mobius_through: degenerate point triple");
    double s = std::sqrt(std::abs(dt));
    return {M.a / s, M.b / s, M.c / s, M.d / s};
}

enum class FactorClass { Hyperbolic, Parabolic, Elliptic, Identity };

inline constexpr double kTraceTol = 1e-8;

inline FactorClass classify_factor(const Mat2& m, double tol = kTraceTol) {
    double t = std::abs(m.trace());
    if (t > 2.0 + tol) return FactorClass::Hyperbolic;
    if (t < 2.0 - tol) return FactorClass::Elliptic;
    double off = std::abs(m.b) + std::abs(m.c) + std::abs(m.a - m.d);
    return off <= 10.0 * tol ? FactorClass::Identity : FactorClass::Parabolic;
}

/// Fixed points of a non-elliptic factor on RP^1: {attracting, repelling}.
/// A parabolic (or identity) factor returns its unique fixed point twice.
inline std::array<ProjectivePoint, 2> factor_fixed_points(const Mat2& m) {
    FactorClass cls = classify_factor(m);
    if (cls == FactorClass::Elliptic)
        throw NotAdmissible("factor_fixed_points: elliptic factor");
    if (cls == FactorClass::Identity)
        return {ProjectivePoint(1, 0), ProjectivePoint(1, 0)};
    double t = m.trace();
    double disc = t * t - 4.0;
    if (disc < 0.0) disc = 0.0;
    double root = std::sqrt(disc);
    // eigenvalues, ordered by modulus
    double l1 = 0.5 * (t + (t >= 0 ? root : -root)); // larger |.|
    double l2 = t - l1;                              // smaller |.| (product is det=1)
    auto eigvec = [&](double lam) {
        // rows of (m - lam I) are proportional; take the numerically larger one
        double r1x = m.a - lam, r1y = m.b;
        double r2x = m.c, r2y = m.d - lam;
        if (std::hypot(r1x, r1y) >= std::hypot(r2x, r2y))
            return ProjectivePoint(-r1y, r1x);
        return ProjectivePoint(-r2y, r2x);
    };
    if (cls == FactorClass::Parabolic) {
        ProjectivePoint p = eigvec(t > 0 ? 1.0 : -1.0);
        return {p, p};
    }
    return {eigvec(l1), eigvec(l2)};
}

enum class IsometryClass {
    Loxodromic,
    SemiLoxodromicPlus,
    SemiLoxodromicMinus,
    Parabolic,
    Other
};

/// Element of PSL(2,B) as a pair of real unimodular matrices via the
/// idempotent splitting; composition is componentwise.
struct Isometry {
    Mat2 plus;
    Mat2 minus;

    Isometry() = default;
    Isometry(const Mat2& p, const Mat2& m) : plus(unimodular(p)), minus(unimodular(m)) {}

    static Isometry identity() { return {}; }

    // the factors are kept unimodular by construction; renormalizing a
    // product or inverse by its computed determinant would inject the
    // determinant's cancellation error into otherwise accurate entries
    Isometry inverse() const {
        Isometry out;
        out.plus = plus.adjugate();
        out.minus = minus.adjugate();
        return out;
    }

    friend Isometry operator*(const Isometry& u, const Isometry& v) {
        Isometry out;
        out.plus = u.plus * v.plus;
        out.minus = u.minus * v.minus;
        return out;
    }

    friend bool projectively_equal(const Isometry& u, const Isometry& v,
                                   double tol = 1e-9) {
        return projectively_equal(u.plus, v.plus, tol) &&
               projectively_equal(u.minus, v.minus, tol);
    }
};

inline IsometryClass classify(const Isometry& A) {
    FactorClass p = classify_factor(A.plus);
    FactorClass m = classify_factor(A.minus);
    if (p == FactorClass::Hyperbolic && m == FactorClass::Hyperbolic)
        return IsometryClass::Loxodromic;
    if (p == FactorClass::Hyperbolic && m == FactorClass::Parabolic)
        return IsometryClass::SemiLoxodromicPlus;
    if (p == FactorClass::Parabolic && m == FactorClass::Hyperbolic)
        return IsometryClass::SemiLoxodromicMinus;
    if (p == FactorClass::Parabolic && m == FactorClass::Parabolic)
        return IsometryClass::Parabolic;
    return IsometryClass::Other;
}

/// B-length 2 arccosh(tr/2), evaluated per factor on the trace lift with
/// trace >= 2. Lands in the closure of the positive cone.
inline SplitComplex b_length(const Isometry& A) {
    if (classify(A) == IsometryClass::Other)
        throw NotAdmissible("b_length: isometry has an elliptic or identity factor");
    auto len = [](const Mat2& m) {
        // acosh turns rounding noise in a parabolic trace into sqrt-size
        // error, so snap non-hyperbolic factors to zero exactly
        if (classify_factor(m) != FactorClass::Hyperbolic) return 0.0;
        double h = std::abs(m.trace()) / 2.0;
        return 2.0 * std::acosh(h < 1.0 ? 1.0 : h);
    };
    return idempotent_join(len(A.plus), len(A.minus));
}

/// Translation distance along the axis and hyperbolic rotation angle.
inline std::pair<double, double> translation_rotation(const Isometry& A) {
    if (classify(A) != IsometryClass::Loxodromic)
        throw NotLoxodromic("translation_rotation: not loxodromic");
    SplitComplex l = b_length(A);
    return {l.re, l.im};
}

struct FixedPoints {
    BoundaryPoint attracting;
    BoundaryPoint repelling;
    std::vector<BoundaryPoint> auxiliary;
};

/// Fixed points on PB^1, paired from the factor fixed points. Loxodromic
/// elements carry two auxiliary mixed pairs; parabolic elements have a
/// single fixed point reported as both attracting and repelling.
inline FixedPoints fixed_points(const Isometry& A) {
    if (classify(A) == IsometryClass::Other)
        throw NotAdmissible("fixed_points: isometry has an elliptic or identity factor");
    auto fp = factor_fixed_points(A.plus);
    auto fm = factor_fixed_points(A.minus);
    FixedPoints out;
    out.attracting = {fp[0], fm[0]};
    out.repelling = {fp[1], fm[1]};
    if (classify(A) == IsometryClass::Loxodromic) {
        out.auxiliary.push_back({fp[0], fm[1]});
        out.auxiliary.push_back({fp[1], fm[0]});
    }
    return out;
}

/// Componentwise Mobius action on the boundary.
inline BoundaryPoint act(const Isometry& A, const BoundaryPoint& p) {
    return {A.plus.apply(p.plus), A.minus.apply(p.minus)};
}

/// Diagonal pair in the centraliser of the standard loxodromic with axis
/// (0, inf), translating by Re(tw) and bending by Im(tw):
/// lambda = Re + Im, mu = Re - Im per factor.
inline Isometry centralizer_element(SplitComplex tw) {
    auto [lambda, mu] = idempotent_split(tw);
    return {Mat2::diag(std::exp(lambda / 2.0), std::exp(-lambda / 2.0)),
            Mat2::diag(std::exp(mu / 2.0), std::exp(-mu / 2.0))};
}

} // namespace adsfn
