#pragma once

#include <cmath>
#include <vector>

#include "adsfn/errors.hpp"
#include "adsfn/isometry.hpp"
#include "adsfn/split_complex.hpp"

namespace adsfn {

/// Element of the 4-dimensional algebra generated over B by j with
/// j^2 = -1 and j*tau = -tau*j, in the basis {1, tau, j, tau*j}.
struct AlgebraA {
    double x1 = 0.0; // 1
    double x2 = 0.0; // tau
    double x3 = 0.0; // j
    double x4 = 0.0; // tau*j

    AlgebraA() = default;
    AlgebraA(double a, double b, double c, double d) : x1(a), x2(b), x3(c), x4(d) {}
    AlgebraA(SplitComplex z) : x1(z.re), x2(z.im) {}

    friend AlgebraA operator+(const AlgebraA& u, const AlgebraA& v) {
        return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3, u.x4 + v.x4};
    }
    friend AlgebraA operator-(const AlgebraA& u, const AlgebraA& v) {
        return {u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3, u.x4 - v.x4};
    }
    friend AlgebraA operator*(double k, const AlgebraA& v) {
        return {k * v.x1, k * v.x2, k * v.x3, k * v.x4};
    }
};

/// Basis multiplication from tau^2 = 1, j^2 = -1, j*tau = -tau*j.
inline AlgebraA mul_A(const AlgebraA& u, const AlgebraA& v) {
    // with k = tau*j: tau*j = k, tau*k = j, j*tau = -k, j*k = tau,
    // k*tau = -j, k*j = -tau, k*k = 1
    return {u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3 + u.x4 * v.x4,
            u.x1 * v.x2 + u.x2 * v.x1 + u.x3 * v.x4 - u.x4 * v.x3,
            u.x1 * v.x3 + u.x3 * v.x1 + u.x2 * v.x4 - u.x4 * v.x2,
            u.x1 * v.x4 + u.x4 * v.x1 + u.x2 * v.x3 - u.x3 * v.x2};
}

/// Conjugation fixes 1 and negates tau, j and tau*j; under the isomorphism
/// with M(2,R) this is the adjugate, so conj(uv) = conj(v) conj(u) and
/// z * conj(z) = (x1^2 - x2^2 + x3^2 - x4^2) * 1.
inline AlgebraA conj_A(const AlgebraA& z) { return {z.x1, -z.x2, -z.x3, -z.x4}; }

inline double square_norm_A(const AlgebraA& z) {
    return z.x1 * z.x1 - z.x2 * z.x2 + z.x3 * z.x3 - z.x4 * z.x4;
}

inline AlgebraA invert_A(const AlgebraA& z, double tol = 1e-12) {
    double n = square_norm_A(z);
    double scale = z.x1 * z.x1 + z.x2 * z.x2 + z.x3 * z.x3 + z.x4 * z.x4;
    if (std::abs(n) <= tol * (1.0 + scale))
        throw BoundaryHit("invert_A: non-invertible element");
    return (1.0 / n) * conj_A(z);
}

/// Point of V = Span{1, tau, j} with x3 > 0 (interior chart of the model).
struct ModelPoint {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 1.0;
};

/// Tangent vector in V; the Minkowski form is dx1^2 - dx2^2 + dx3^2.
struct TangentVector {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

inline double minkowski(const TangentVector& u, const TangentVector& v) {
    return u.x1 * v.x1 - u.x2 * v.x2 + u.x3 * v.x3;
}

inline AlgebraA to_A(const ModelPoint& p) { return {p.x1, p.x2, p.x3, 0.0}; }

/// Lift the pair of real matrices to a single matrix over B inside A and
/// evaluate f(x) = (ax + b)(cx + d)^{-1}. The result is renormalized to
/// the x3 > 0 side of the involution j -> -j.
inline ModelPoint mobius_act(const Isometry& A, const ModelPoint& x) {
    auto entry = [&](double p, double m) {
        return AlgebraA(idempotent_join(p, m));
    };
    AlgebraA a = entry(A.plus.a, A.minus.a), b = entry(A.plus.b, A.minus.b);
    AlgebraA c = entry(A.plus.c, A.minus.c), d = entry(A.plus.d, A.minus.d);
    AlgebraA X = to_A(x);
    AlgebraA den = mul_A(c, X) + d;
    AlgebraA f = mul_A(mul_A(a, X) + b, invert_A(den));
    ModelPoint out{f.x1, f.x2, f.x3};
    if (out.x3 < 0.0) out.x3 = -out.x3;
    return out;
}

/// Differential df_x(u) = (xc+d)^{-1} u (cx+d)^{-1} (non-commutative
/// sandwich); conformal for the Minkowski form on V.
inline TangentVector differential(const Isometry& A, const ModelPoint& x,
                                  const TangentVector& u) {
    auto entry = [&](double p, double m) {
        return AlgebraA(idempotent_join(p, m));
    };
    AlgebraA c = entry(A.plus.c, A.minus.c), d = entry(A.plus.d, A.minus.d);
    AlgebraA X = to_A(x);
    AlgebraA left = invert_A(mul_A(X, c) + d);
    AlgebraA right = invert_A(mul_A(c, X) + d);
    AlgebraA U{u.x1, u.x2, u.x3, 0.0};
    AlgebraA r = mul_A(mul_A(left, U), right);
    return {r.x1, r.x2, r.x3};
}

enum class GeodesicKind { SpaceLike, TimeLike, LightLike };

/// Geodesic in the upper-half space chart. Space-like: the conic
/// |g - p|^2 = |delta|^2 in the plane p + Span{delta, j}; time-like:
/// |g - p|^2 = -|delta|^2; light-like: g(t) = p + v/t.
struct Geodesic {
    GeodesicKind kind = GeodesicKind::SpaceLike;
    SplitComplex p;       // base point / midpoint in B
    SplitComplex delta;   // displacement (space-/time-like variants)
    TangentVector v;      // light-like direction (light-like variant)
};

inline Geodesic geodesic_between(SplitComplex p1, SplitComplex p2) {
    SplitComplex delta = (p1 - p2) / 2.0;
    if (is_lightlike(delta))
        throw LightLikeDisplacement("geodesic_between: light-like displacement");
    return {GeodesicKind::SpaceLike, (p1 + p2) / 2.0, delta, {}};
}

inline Geodesic geodesic_timelike(SplitComplex p, SplitComplex delta) {
    if (square_norm(delta) >= 0.0)
        throw DomainError("geodesic_timelike: displacement not time-like");
    return {GeodesicKind::TimeLike, p, delta, {}};
}

inline Geodesic geodesic_lightlike(SplitComplex p, const TangentVector& v) {
    TangentVector vv = v;
    double n = minkowski(vv, vv);
    double scale = v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3;
    if (scale == 0.0 || std::abs(n) > 1e-10 * scale)
        throw DomainError("geodesic_lightlike: direction not light-like");
    return {GeodesicKind::LightLike, p, {}, vv};
}

/// Sample the geodesic in the chart. Space-like conics are swept by the
/// trigonometric/hyperbolic angle; time-like curves close after pi.
inline std::vector<ModelPoint> sample_geodesic(const Geodesic& g, int n = 256) {
    std::vector<ModelPoint> out;
    out.reserve(n);
    if (g.kind == GeodesicKind::SpaceLike) {
        double n2 = square_norm(g.delta);
        if (n2 > 0.0) {
            // ellipse: g = p + cos(t) delta + |delta| sin(t) j, t in (0, pi)
            double r = std::sqrt(n2);
            for (int i = 1; i <= n; ++i) {
                double t = M_PI * i / (n + 1);
                SplitComplex b = g.p + std::cos(t) * g.delta;
                out.push_back({b.re, b.im, r * std::sin(t)});
            }
        } else {
            // hyperbola: two branches g = p +- cosh(t) delta + s sinh(t) j
            double s = std::sqrt(-n2);
            int half = n / 2;
            double T = 5.0;
            for (int sgn = -1; sgn <= 1; sgn += 2)
                for (int i = 1; i <= half; ++i) {
                    double t = T * i / half;
                    SplitComplex b = g.p + (sgn * std::cosh(t)) * g.delta;
                    out.push_back({b.re, b.im, s * std::sinh(t)});
                }
        }
    } else if (g.kind == GeodesicKind::TimeLike) {
        double s = std::sqrt(-square_norm(g.delta));
        SplitComplex u = g.delta / s;
        for (int i = 0; i < n; ++i) {
            double t = M_PI * i / (n - 1);
            if (std::abs(std::cos(t)) < 1e-9) t += 2e-9; // dodge the chart seam
            SplitComplex b = g.p + (s * std::tan(t)) * u;
            double h = s / std::cos(t);
            out.push_back({b.re, b.im, std::abs(h)});
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            double t = 0.2 + 10.0 * i / n;
            out.push_back({g.p.re + g.v.x1 / t, g.p.im + g.v.x2 / t, g.v.x3 / t});
        }
    }
    return out;
}

/// Piecewise length in the metric (dx1^2 - dx2^2 + dx3^2) / x3^2 via
/// midpoint quadrature over consecutive samples.
inline double curve_length(const std::vector<ModelPoint>& samples) {
    double total = 0.0;
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        const ModelPoint& a = samples[i];
        const ModelPoint& b = samples[i + 1];
        TangentVector d{b.x1 - a.x1, b.x2 - a.x2, b.x3 - a.x3};
        double q = minkowski(d, d);
        if (q <= 0.0)
            throw NonSpacelikeSegment("curve_length: segment not space-like");
        double mid = 0.5 * (a.x3 + b.x3);
        total += std::sqrt(q) / mid;
    }
    return total;
}

} // namespace adsfn
