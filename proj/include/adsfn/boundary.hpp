#pragma once

#include <array>
#include <cmath>

#include "adsfn/errors.hpp"
#include "adsfn/split_complex.hpp"

namespace adsfn {

inline constexpr double kProjectiveTol = 1e-9;

/// Point of RP^1 in homogeneous coordinates [x : y], normalized to the unit
/// circle on construction. Equality is angular distance on R/(pi Z).
struct ProjectivePoint {
    double x = 1.0;
    double y = 0.0;

    ProjectivePoint() = default;
    ProjectivePoint(double x_, double y_) : x(x_), y(y_) {
        double n = std::hypot(x, y);
        if (n == 0.0)
            throw DomainError("ProjectivePoint: zero homogeneous pair");
        x /= n;
        y /= n;
    }

    double angle() const {
        double a = std::atan2(y, x);
        // reduce to [0, pi)
        if (a < 0.0) a += M_PI;
        if (a >= M_PI) a -= M_PI;
        return a;
    }
};

inline double projective_distance(ProjectivePoint p, ProjectivePoint q) {
    double d = std::abs(p.angle() - q.angle());
    return std::min(d, M_PI - d);
}

inline bool projectively_equal(ProjectivePoint p, ProjectivePoint q,
                               double tol = kProjectiveTol) {
    return projective_distance(p, q) <= tol;
}

/// Determinant x1*y2 - x2*y1 of the homogeneous pairs; vanishes iff the two
/// points coincide in RP^1.
inline double projective_det(ProjectivePoint p, ProjectivePoint q) {
    return p.x * q.y - q.x * p.y;
}

/// Point of the projective boundary PB^1 ~ RP^1 x RP^1, stored in factor
/// coordinates via the idempotent splitting [a e+ + b e-, c e+ + d e-]
/// = [a : c] e+ + [b : d] e-.
struct BoundaryPoint {
    ProjectivePoint plus;
    ProjectivePoint minus;
};

inline BoundaryPoint from_B(SplitComplex z) {
    auto [p, q] = idempotent_split(z);
    return {ProjectivePoint(p, 1.0), ProjectivePoint(q, 1.0)};
}

inline BoundaryPoint point_at_infinity() {
    return {ProjectivePoint(1.0, 0.0), ProjectivePoint(1.0, 0.0)};
}

inline bool boundary_equal(const BoundaryPoint& p, const BoundaryPoint& q,
                           double tol = kProjectiveTol) {
    return projectively_equal(p.plus, q.plus, tol) &&
           projectively_equal(p.minus, q.minus, tol);
}

/// Two boundary points are in space-like position iff the determinant
/// x1 y2 - x2 y1 is invertible in B, i.e. both factor points differ.
inline bool spacelike_position(const BoundaryPoint& p, const BoundaryPoint& q,
                               double tol = kProjectiveTol) {
    return !projectively_equal(p.plus, q.plus, tol) &&
           !projectively_equal(p.minus, q.minus, tol);
}

/// Classical real cross ratio in one RP^1 factor, with the convention
/// cr([1,0], [-1,1], [0,1], [z,1]) = z.
inline double cross_ratio_factor(ProjectivePoint p1, ProjectivePoint p2,
                                 ProjectivePoint p3, ProjectivePoint p4) {
    double num = projective_det(p2, p1) * projective_det(p4, p3);
    double den = projective_det(p1, p4) * projective_det(p2, p3);
    if (std::abs(den) <= 1e-14 * (1.0 + std::abs(num)))
        throw InfiniteCrossRatio("cross_ratio: factor denominator vanishes");
    return num / den;
}

/// B-valued cross ratio of four pairwise space-like points, computed
/// factorwise and joined through the idempotents.
inline SplitComplex cross_ratio(const BoundaryPoint& p1, const BoundaryPoint& p2,
                                const BoundaryPoint& p3, const BoundaryPoint& p4) {
    const std::array<const BoundaryPoint*, 4> ps{&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!spacelike_position(*ps[i], *ps[j]))
                throw NotSpacelike("cross_ratio: points not pairwise space-like");
    double cp = cross_ratio_factor(p1.plus, p2.plus, p3.plus, p4.plus);
    double cm = cross_ratio_factor(p1.minus, p2.minus, p3.minus, p4.minus);
    return idempotent_join(cp, cm);
}

enum class SawtoothOrientation { FutureDirected = +1, PastDirected = -1 };

/// A "vee" of two consecutive light-like segments joining the axis endpoints
/// of a loxodromic boundary holonomy. left-vertex and vertex-right are
/// light-like pairs; left and right are in space-like position.
struct Sawtooth {
    BoundaryPoint left;
    BoundaryPoint vertex;
    BoundaryPoint right;
    SawtoothOrientation orientation = SawtoothOrientation::FutureDirected;

    bool valid(double tol = kProjectiveTol) const {
        return !spacelike_position(left, vertex, tol) &&
               !spacelike_position(vertex, right, tol) &&
               spacelike_position(left, right, tol);
    }
};

} // namespace adsfn
