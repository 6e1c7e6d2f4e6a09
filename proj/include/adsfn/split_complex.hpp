#pragma once

#include <cmath>
#include <utility>

#include "adsfn/errors.hpp"

namespace adsfn {

/// Element a + tau*b of the two-dimensional real algebra with tau^2 = 1.
/// The square norm re^2 - im^2 is a Minkowski form and may be negative;
/// invertibility requires it to be nonzero.
struct SplitComplex {
    double re = 0.0;
    double im = 0.0;

    constexpr SplitComplex() = default;
    constexpr SplitComplex(double r, double i = 0.0) : re(r), im(i) {}

    friend constexpr SplitComplex operator+(SplitComplex u, SplitComplex v) {
        return {u.re + v.re, u.im + v.im};
    }
    friend constexpr SplitComplex operator-(SplitComplex u, SplitComplex v) {
        return {u.re - v.re, u.im - v.im};
    }
    friend constexpr SplitComplex operator-(SplitComplex u) { return {-u.re, -u.im}; }
    friend constexpr SplitComplex operator*(SplitComplex u, SplitComplex v) {
        return {u.re * v.re + u.im * v.im, u.re * v.im + u.im * v.re};
    }
    friend constexpr SplitComplex operator*(double k, SplitComplex v) {
        return {k * v.re, k * v.im};
    }
    friend constexpr SplitComplex operator*(SplitComplex v, double k) { return k * v; }
    friend constexpr SplitComplex operator/(SplitComplex v, double k) {
        return {v.re / k, v.im / k};
    }
};

constexpr SplitComplex tau{0.0, 1.0};
constexpr SplitComplex e_plus{0.5, 0.5};
constexpr SplitComplex e_minus{0.5, -0.5};

constexpr SplitComplex conj(SplitComplex z) { return {z.re, -z.im}; }

constexpr double square_norm(SplitComplex z) { return z.re * z.re - z.im * z.im; }

/// Scale-aware degeneracy test: an element counts as light-like when its
/// square norm is below tolerance relative to its size.
inline bool is_lightlike(SplitComplex z, double tol = 1e-10) {
    return std::abs(square_norm(z)) <= tol * (1.0 + z.re * z.re + z.im * z.im);
}

inline SplitComplex invert(SplitComplex z) {
    if (is_lightlike(z))
        throw LightLikeElement("invert: element is light-like (square norm ~ 0)");
    return conj(z) / square_norm(z);
}

inline SplitComplex operator/(SplitComplex u, SplitComplex v) { return u * invert(v); }

/// Coordinates with respect to the idempotents e+ = (1+tau)/2, e- = (1-tau)/2.
/// The split is an algebra isomorphism onto R (+) R.
constexpr std::pair<double, double> idempotent_split(SplitComplex z) {
    return {z.re + z.im, z.re - z.im};
}

constexpr SplitComplex idempotent_join(double p, double q) {
    return {0.5 * (p + q), 0.5 * (p - q)};
}

/// Apply a real function in each idempotent coordinate.
template <typename F>
SplitComplex apply_componentwise(F&& f, SplitComplex z) {
    auto [p, q] = idempotent_split(z);
    return idempotent_join(f(p), f(q));
}

inline SplitComplex exp_B(SplitComplex z) {
    return apply_componentwise([](double x) { return std::exp(x); }, z);
}

inline SplitComplex log_B(SplitComplex z) {
    auto [p, q] = idempotent_split(z);
    if (p <= 0.0 || q <= 0.0)
        throw DomainError("log_B: idempotent coordinate not positive");
    return idempotent_join(std::log(p), std::log(q));
}

inline SplitComplex cosh_B(SplitComplex z) {
    return apply_componentwise([](double x) { return std::cosh(x); }, z);
}

/// Nonnegative branch in each factor; coordinates slightly below 1 are
/// clamped so round trips through cosh stay inside the domain.
inline SplitComplex arccosh_B(SplitComplex z, double tol = 1e-9) {
    auto [p, q] = idempotent_split(z);
    if (p < 1.0 - tol || q < 1.0 - tol)
        throw DomainError("arccosh_B: idempotent coordinate below 1");
    auto ach = [](double x) { return std::acosh(x < 1.0 ? 1.0 : x); };
    return idempotent_join(ach(p), ach(q));
}

enum class ConeClass { InteriorCPlus, BoundaryCPlus, Outside };

/// Membership in the positive cone of space-like elements with Re > 0.
inline ConeClass cone_classify(SplitComplex z, double tol = 1e-10) {
    if (is_lightlike(z, tol)) {
        if (z.re >= 0.0 || std::abs(z.re) + std::abs(z.im) <= tol)
            return ConeClass::BoundaryCPlus;
        return ConeClass::Outside;
    }
    if (z.re > 0.0 && square_norm(z) > 0.0)
        return ConeClass::InteriorCPlus;
    return ConeClass::Outside;
}

} // namespace adsfn
