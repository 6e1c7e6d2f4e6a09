#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "adsfn/errors.hpp"
#include "adsfn/pants.hpp"

namespace adsfn {

/// Word in the generators: a letter "name" or its inverse "~name".
using Word = std::vector<std::string>;

inline std::string inverse_letter(const std::string& l) {
    return l.rfind('~', 0) == 0 ? l.substr(1) : "~" + l;
}

enum class GluingKind { Amalgamated, Hnn };

/// Transversal data recorded when a curve is glued. Twist extraction only
/// uses the generator roles, so it is invariant under global conjugation.
struct GluingRecord {
    GluingKind kind = GluingKind::Amalgamated;
    SplitComplex tw;     // parameter supplied at gluing
    Isometry normalizer; // conjugator bringing side 1 to the pinned frame
    Isometry canonical;  // A (amalgamated) or B0 (HNN) in that frame
    Isometry twist;      // centralizer element Z(tw)
    // generator roles for extraction
    std::string gen1;    // glued generator on side 1
    std::string next1;   // cyclically next generator on side 1
    std::string gen2;    // identified generator on side 2 (amalgamated)
    std::string next2;   // its cyclically next generator (amalgamated)
    std::string stable;  // stable letter (HNN)
};

struct GluedRep {
    std::map<std::string, Isometry> generators;
    std::vector<Word> relations;
    std::map<std::string, GluingRecord> gluing_records;

    Isometry evaluate(const Word& w) const {
        Isometry out = Isometry::identity();
        for (const std::string& l : w) {
            bool inv = l.rfind('~', 0) == 0;
            const Isometry& g = generators.at(inv ? l.substr(1) : l);
            out = out * (inv ? g.inverse() : g);
        }
        return out;
    }

    /// Worst deviation of the relation words from +-identity, relative to
    /// the largest partial product met while evaluating them (the words
    /// pass through conjugates with large entries, so the roundoff floor
    /// scales with them).
    double relation_residual() const {
        auto ent = [](const Mat2& x) {
            return std::max(std::max(std::abs(x.a), std::abs(x.b)),
                            std::max(std::abs(x.c), std::abs(x.d)));
        };
        double worst = 0.0;
        for (const Word& w : relations) {
            Isometry g = Isometry::identity();
            double scale = 1.0;
            for (const std::string& l : w) {
                bool inv = l.rfind('~', 0) == 0;
                const Isometry& h = generators.at(inv ? l.substr(1) : l);
                g = g * (inv ? h.inverse() : h);
                scale = std::max(scale, std::max(ent(g.plus), ent(g.minus)));
            }
            auto res = [](const Mat2& x) {
                double s = x.a + x.d > 0 ? 1.0 : -1.0;
                return std::max(std::max(std::abs(x.a - s), std::abs(x.d - s)),
                                std::max(std::abs(x.b), std::abs(x.c)));
            };
            worst = std::max(worst, std::max(res(g.plus), res(g.minus)) / scale);
        }
        return worst;
    }
};

namespace detail {

inline void check_lengths_match(const Isometry& g1, const Isometry& g2,
                                const char* where) {
    if (classify(g1) != IsometryClass::Loxodromic ||
        classify(g2) != IsometryClass::Loxodromic)
        throw NotLoxodromic(std::string(where) + ": glued generator not loxodromic");
    SplitComplex a = b_length(g1), b = b_length(g2);
    double diff = std::max(std::abs(a.re - b.re), std::abs(a.im - b.im));
    double scale = std::max(std::abs(a.re), std::abs(a.im));
    if (diff > 1e-8 && diff > 1e-8 * scale)
        throw LengthMismatch("glue: boundary lengths disagree");
}

/// Factor matrix sending (p1, p2) to (0, inf), orientation-preserving,
/// with the row scaling left free.
inline Mat2 axis_to_standard(ProjectivePoint p1, ProjectivePoint p2) {
    Mat2 m{p1.y, -p1.x, p2.y, -p2.x};
    if (m.det() < 0.0) {
        m.c = -m.c;
        m.d = -m.d;
    }
    return unimodular(m);
}

/// Extended-precision 2x2 helpers for twist extraction. The deeply
/// conjugated generators of an assembled surface carry large entries, and
/// the double roundoff of conjugating them into the extraction frame is
/// the accuracy bottleneck of the whole coordinate round trip; doing that
/// one computation in long double removes it.
struct XMat {
    long double a, b, c, d;
    XMat(const Mat2& m) : a(m.a), b(m.b), c(m.c), d(m.d) {}
    XMat(long double a_, long double b_, long double c_, long double d_)
        : a(a_), b(b_), c(c_), d(d_) {}
    XMat adjugate() const { return {d, -b, -c, a}; }
    friend XMat operator*(const XMat& u, const XMat& v) {
        return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d,
                u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d};
    }
};

struct XPt {
    long double x, y;
};

/// Eigendirections of a hyperbolic matrix: {attracting, repelling}. Uses
/// the trace only (eigenvalue sum), so near-unimodular determinant drift
/// of large stored matrices does not enter.
inline std::array<XPt, 2> xfixed(const XMat& m) {
    long double t = m.a + m.d;
    long double disc = t * t - 4.0L;
    if (disc < 0.0L) disc = 0.0L;
    long double root = std::sqrt(disc);
    long double l1 = 0.5L * (t + (t >= 0 ? root : -root));
    long double l2 = t - l1;
    auto eigvec = [&](long double lam) {
        long double r1x = m.a - lam, r1y = m.b;
        long double r2x = m.c, r2y = m.d - lam;
        if (std::hypot(r1x, r1y) >= std::hypot(r2x, r2y)) return XPt{-r1y, r1x};
        return XPt{-r2y, r2x};
    };
    return {eigvec(l1), eigvec(l2)};
}

inline XPt xapply(const XMat& m, XPt p) {
    return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
}

inline long double xcross(XPt p1, XPt p2, XPt p3, XPt p4) {
    auto det = [](XPt u, XPt v) { return u.x * v.y - u.y * v.x; };
    return (det(p2, p1) * det(p4, p3)) / (det(p1, p4) * det(p2, p3));
}

} // namespace detail

/// Conjugator A with A g2 A^{-1} diagonal (axis 0 -> infinity reversed:
/// attracting to [0,1], repelling to [1,0]) and A(third) = [1,1] in each
/// factor.
inline Isometry amalgam_conjugator(const Isometry& g2, const BoundaryPoint& third) {
    FixedPoints f = fixed_points(g2);
    ProjectivePoint zero(0, 1), inf(1, 0), one(1, 1);
    Mat2 Ap = mobius_through(f.attracting.plus, f.repelling.plus, third.plus,
                             zero, inf, one);
    Mat2 Am = mobius_through(f.attracting.minus, f.repelling.minus, third.minus,
                             zero, inf, one);
    if (Ap.det() <= 0.0 || Am.det() <= 0.0)
        throw NotAdmissible("amalgam_conjugator: orientation-reversing pinning");
    return {Ap, Am};
}

/// Canonical HNN matrix for a rep already in the pinned frame (glued
/// generator diagonal with attracting fixed point at infinity): maps the
/// partner generator's axis onto (0, infinity) reversed, with the
/// centralizer gauge fixed by cr(inf, B0^{-1} inf, 0, B0 0) = 1.
/// Fix the centralizer gauge of a candidate HNN matrix B (any matrix with
/// the right axis image: the diagonal ambiguity is exactly what the
/// cross-ratio condition pins down).
inline Isometry hnn_gauge(const Isometry& B) {
    BoundaryPoint q2 = act(B.inverse(), point_at_infinity());
    BoundaryPoint q4 = act(B, from_B({0, 0}));
    SplitComplex cr0 = cross_ratio(point_at_infinity(), q2, from_B({0, 0}), q4);
    auto [cp, cm] = idempotent_split(cr0);
    if (cp <= 0.0 || cm <= 0.0)
        throw NotSpacelike("hnn_canonical: degenerate pinning configuration");
    return centralizer_element(-1.0 * log_B(cr0)) * B;
}

inline Isometry hnn_canonical(const Isometry& gB) {
    FixedPoints f = fixed_points(gB);
    Mat2 Bp = detail::axis_to_standard(f.attracting.plus, f.repelling.plus);
    Mat2 Bm = detail::axis_to_standard(f.attracting.minus, f.repelling.minus);
    return hnn_gauge(Isometry(Bp, Bm));
}

/// Amalgamated gluing of two pants along gen1 (of rep1) and gen2 (of
/// rep2) with B-twist-bend tw. Side 1 is brought to the pinned frame;
/// side 2 is conjugated by Z(tw) A so that the glued images are mutually
/// inverse. Generators are exported as "p0.*" and "p1.*", the curve as
/// "c0".
inline GluedRep glue_distinct(const PantsRep& rep1, int gen1, const PantsRep& rep2,
                              int gen2, SplitComplex tw) {
    detail::check_lengths_match(rep1.gen(gen1), rep2.gen(gen2), "glue_distinct");
    auto [norm1, N] = normalize_rep(rep1, gen1);

    int next2 = (gen2 + 1) % 3;
    FixedPoints fn2 = fixed_points(rep2.gen(next2));
    Isometry A = amalgam_conjugator(rep2.gen(gen2), fn2.attracting);
    Isometry Z = centralizer_element(tw);
    PantsRep side2 = rep2.conjugated(Z * A);

    static const char* names[3] = {"r", "s", "t"};
    GluedRep out;
    for (int i = 0; i < 3; ++i) {
        out.generators["p0." + std::string(names[i])] = norm1.gen(i);
        out.generators["p1." + std::string(names[i])] = side2.gen(i);
    }
    out.relations.push_back({"p0.t", "p0.s", "p0.r"});
    out.relations.push_back({"p1.t", "p1.s", "p1.r"});
    out.relations.push_back({"p0." + std::string(names[gen1]),
                             "p1." + std::string(names[gen2])});

    GluingRecord rec;
    rec.kind = GluingKind::Amalgamated;
    rec.tw = tw;
    rec.normalizer = N;
    rec.canonical = A;
    rec.twist = Z;
    rec.gen1 = "p0." + std::string(names[gen1]);
    rec.next1 = "p0." + std::string(names[(gen1 + 1) % 3]);
    rec.gen2 = "p1." + std::string(names[gen2]);
    rec.next2 = "p1." + std::string(names[next2]);
    out.gluing_records["c0"] = rec;
    return out;
}

/// HNN self-gluing of one pants along genA and genB with B-twist-bend tw.
/// The stable letter "u0" conjugates the image of genB to the inverse of
/// the image of genA.
inline GluedRep glue_self(const PantsRep& rep, int genA, int genB, SplitComplex tw) {
    detail::check_lengths_match(rep.gen(genA), rep.gen(genB), "glue_self");
    auto [norm, N] = normalize_rep(rep, genA);
    Isometry B0 = hnn_canonical(norm.gen(genB));
    Isometry Z = centralizer_element(tw);
    Isometry U = Z * B0;

    static const char* names[3] = {"r", "s", "t"};
    GluedRep out;
    for (int i = 0; i < 3; ++i)
        out.generators["p0." + std::string(names[i])] = norm.gen(i);
    out.generators["u0"] = U;
    out.relations.push_back({"p0.t", "p0.s", "p0.r"});
    out.relations.push_back({"u0", "p0." + std::string(names[genB]), "~u0",
                             "p0." + std::string(names[genA])});

    GluingRecord rec;
    rec.kind = GluingKind::Hnn;
    rec.tw = tw;
    rec.normalizer = N;
    rec.canonical = B0;
    rec.twist = Z;
    rec.gen1 = "p0." + std::string(names[genA]);
    rec.next1 = "p0." + std::string(names[(genA + 1) % 3]);
    rec.gen2 = "p0." + std::string(names[genB]);
    rec.stable = "u0";
    out.gluing_records["c0"] = rec;
    return out;
}

/// Twist extraction from the recorded generator roles, via log of the
/// cross ratio. Invariant under global conjugation of the representation.
inline SplitComplex extract_twist(const GluedRep& glued, const std::string& curve) {
    auto it = glued.gluing_records.find(curve);
    if (it == glued.gluing_records.end())
        throw MissingRecord("extract_twist: no gluing record for curve " + curve);
    const GluingRecord& rec = it->second;
    const Isometry& g1 = glued.generators.at(rec.gen1);
    if (classify(g1) != IsometryClass::Loxodromic)
        throw NotLoxodromic("extract_twist: glued curve not loxodromic");
    // work in a frame where the axis of g1 is (0, infinity): the cross
    // ratio is unchanged, but every fixed point is then computed from
    // well-conditioned matrices. Start from the recorded normalizer (which
    // already standardizes the curve for freshly glued representations)
    // and polish with the axis of g1 as seen through it.
    Isometry g1n = rec.normalizer * g1 * rec.normalizer.inverse();
    FixedPoints f0 = fixed_points(g1n);
    Isometry W(detail::axis_to_standard(f0.attracting.plus, f0.repelling.plus),
               detail::axis_to_standard(f0.attracting.minus, f0.repelling.minus));
    W = W * rec.normalizer;
    auto factor_twist = [&](auto pick) -> long double {
        detail::XMat w(pick(W));
        detail::XMat wi = w.adjugate(); // inverse up to scale, irrelevant here
        auto conj = [&](const std::string& name) {
            return w * detail::XMat(pick(glued.generators.at(name))) * wi;
        };
        auto f1 = detail::xfixed(conj(rec.gen1));
        detail::XPt p1 = f1[0], p3 = f1[1], p2, p4;
        if (rec.kind == GluingKind::Amalgamated) {
            p2 = detail::xfixed(conj(rec.next1))[1];
            p4 = detail::xfixed(conj(rec.next2))[0];
        } else {
            detail::XMat u = conj(rec.stable);
            p2 = detail::xapply(u.adjugate(), p1);
            p4 = detail::xapply(u, p3);
        }
        long double cr = detail::xcross(p1, p2, p3, p4);
        if (!(cr > 0.0L))
            throw NotSpacelike("extract_twist: degenerate configuration");
        return std::log(cr);
    };
    long double lam = factor_twist([](const Isometry& g) -> const Mat2& { return g.plus; });
    long double mu = factor_twist([](const Isometry& g) -> const Mat2& { return g.minus; });
    return {static_cast<double>((lam + mu) / 2.0L),
            static_cast<double>((lam - mu) / 2.0L)};
}

/// Dehn twist along a glued curve: re-glue with tw increased by
/// k * b_length(curve).
inline GluedRep dehn_twist_rep(const GluedRep& glued, const std::string& curve, int k) {
    auto it = glued.gluing_records.find(curve);
    if (it == glued.gluing_records.end())
        throw MissingRecord("dehn_twist_rep: no gluing record for curve " + curve);
    const GluingRecord& rec = it->second;
    if (k == 0) return glued;
    const Isometry& g1 = glued.generators.at(rec.gen1);
    SplitComplex shift = static_cast<double>(k) * b_length(g1);
    Isometry Z = centralizer_element(rec.tw + shift) *
                 centralizer_element(rec.tw).inverse();
    // twisting moves only the far side of the curve
    GluedRep out = glued;
    GluingRecord& r2 = out.gluing_records[curve];
    r2.tw = rec.tw + shift;
    r2.twist = centralizer_element(r2.tw);
    if (rec.kind == GluingKind::Amalgamated) {
        for (auto& [name, g] : out.generators)
            if (name.rfind("p1.", 0) == 0) g = Z * g * Z.inverse();
    } else {
        out.generators[rec.stable] = Z * out.generators[rec.stable];
    }
    return out;
}

} // namespace adsfn
