#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "adsfn/errors.hpp"
#include "adsfn/gluing.hpp"
#include "adsfn/pants.hpp"

namespace adsfn {

/// Boundary slot of a pants node; slots 0, 1, 2 carry the generators
/// r, s, t.
struct SlotRef {
    int pants = 0;
    int slot = 0;

    friend bool operator==(const SlotRef& a, const SlotRef& b) {
        return a.pants == b.pants && a.slot == b.slot;
    }
};

/// Edge of the gluing graph. The two ends may sit on the same pants node
/// (self-gluing); end `a` is the near side, fixing the marking convention.
struct DecCurve {
    SlotRef a;
    SlotRef b;
};

struct PantsDecomposition {
    int num_pants = 0;
    std::vector<DecCurve> curves;
    std::vector<SlotRef> peripherals;

    int punctures() const { return static_cast<int>(peripherals.size()); }
    int genus() const { return (num_pants - punctures() + 2) / 2; }

    void validate() const {
        if (3 * num_pants !=
            2 * static_cast<int>(curves.size()) + static_cast<int>(peripherals.size()))
            throw DomainError("decomposition: slot count mismatch");
        std::vector<std::array<int, 3>> used(num_pants, {0, 0, 0});
        auto mark = [&](const SlotRef& s) {
            if (s.pants < 0 || s.pants >= num_pants || s.slot < 0 || s.slot > 2)
                throw DomainError("decomposition: slot out of range");
            if (used[s.pants][s.slot]++)
                throw DomainError("decomposition: slot used twice");
        };
        for (const DecCurve& c : curves) {
            if (c.a == c.b) throw DomainError("decomposition: degenerate edge");
            mark(c.a);
            mark(c.b);
        }
        for (const SlotRef& s : peripherals) mark(s);
        // connectivity
        std::vector<int> comp(num_pants, -1);
        std::queue<int> q;
        q.push(0);
        comp[0] = 0;
        while (!q.empty()) {
            int p = q.front();
            q.pop();
            for (const DecCurve& c : curves) {
                for (int other : {c.a.pants == p ? c.b.pants : -1,
                                  c.b.pants == p ? c.a.pants : -1})
                    if (other >= 0 && comp[other] < 0) {
                        comp[other] = 0;
                        q.push(other);
                    }
            }
        }
        for (int p = 0; p < num_pants; ++p)
            if (comp[p] < 0) throw DomainError("decomposition: graph not connected");
    }
};

struct CurveCoord {
    SplitComplex length;
    SplitComplex twist;
};

struct PeripheralCoord {
    SplitComplex length;
    double delta = 0.0;
};

/// Fenchel-Nielsen point: per curve a (length, twist-bend) pair with
/// length in the open cone, per peripheral a (length, delta) pair on the
/// constraint set delta^2 = |length|^2.
struct FNPoint {
    std::vector<CurveCoord> curves;
    std::vector<PeripheralCoord> peripherals;

    void validate(const PantsDecomposition& dec) const {
        if (curves.size() != dec.curves.size() ||
            peripherals.size() != dec.peripherals.size())
            throw DomainError("fn point: size mismatch with decomposition");
        for (const CurveCoord& c : curves)
            if (cone_classify(c.length) != ConeClass::InteriorCPlus)
                throw ConeViolation("fn point: curve length not in interior of C+");
        for (const PeripheralCoord& p : peripherals) {
            if (cone_classify(p.length) == ConeClass::Outside)
                throw ConeViolation("fn point: peripheral length outside closure of C+");
            double n = square_norm(p.length);
            double scale = 1.0 + p.length.re * p.length.re + p.delta * p.delta;
            if (std::abs(p.delta * p.delta - n) > 1e-10 * scale)
                throw LengthMismatch("fn point: peripheral delta^2 != |length|^2");
        }
    }
};

/// Degenerated-curve data: Im of the limiting B-length and the signed
/// delta whose sign is the sawtooth tag.
struct DegenerateData {
    double a = 0.0;
    double d = 0.0;

    // the emitted tuple stores (Im l, 0, 0, eps |l|), so |l|^2 = d^2 and
    // Re l = sqrt(d^2 + a^2); always in the closure of C+
    SplitComplex length() const { return {std::hypot(d, a), a}; }
    int tag() const { return d > 0 ? 1 : (d < 0 ? -1 : 0); }
};

struct StratumPoint {
    std::map<int, CurveCoord> undegenerate;            // curves outside D
    std::map<int, std::array<double, 4>> degenerate;   // curves in D
    std::vector<PeripheralCoord> peripherals;
};

/// A (possibly degenerate) structure: the holonomy of each connected
/// component of the surface cut along the degenerate multicurve, the
/// transversal gluing records of the surviving curves, and the tags.
struct SurfaceStructure {
    PantsDecomposition decomposition;
    std::vector<int> degenerate;                 // sorted curve indices (D')
    std::map<int, DegenerateData> degenerate_data;
    std::vector<GluedRep> components;
    std::vector<int> pants_component;            // pants index -> component
    std::map<int, int> curve_component;          // non-degenerate curve -> component
    std::vector<int> peripheral_eps;             // per peripheral, in {-1,0,+1}

    bool is_degenerate(int curve) const {
        return std::binary_search(degenerate.begin(), degenerate.end(), curve);
    }
};

namespace detail {

inline std::string slot_name(const SlotRef& s) {
    static const char* names[3] = {"r", "s", "t"};
    return "p" + std::to_string(s.pants) + "." + names[s.slot];
}

/// Conjugator to the pinned frame of g: attracting fixed point to [1,0],
/// repelling to [0,1], and the repelling point of `next` to [-1,1].
inline Isometry frame_normalizer(const Isometry& g, const Isometry& next) {
    if (classify(g) != IsometryClass::Loxodromic)
        throw NotLoxodromic("frame_normalizer: curve image not loxodromic");
    FixedPoints fg = fixed_points(g);
    FixedPoints fn = fixed_points(next);
    ProjectivePoint inf(1, 0), zero(0, 1), minus1(-1, 1);
    Mat2 Cp = mobius_through(fg.attracting.plus, fg.repelling.plus, fn.repelling.plus,
                             inf, zero, minus1);
    Mat2 Cm = mobius_through(fg.attracting.minus, fg.repelling.minus,
                             fn.repelling.minus, inf, zero, minus1);
    if (Cp.det() <= 0.0 || Cm.det() <= 0.0)
        throw NotAdmissible("frame_normalizer: orientation-reversing conjugator");
    return {Cp, Cm};
}

struct BuildInput {
    std::vector<SplitComplex> curve_length;   // per curve of the decomposition
    std::vector<SplitComplex> curve_twist;    // per non-degenerate curve
    std::vector<SplitComplex> peripheral_length;
    std::vector<int> peripheral_eps;
    std::vector<int> degenerate;              // sorted
    std::map<int, DegenerateData> degenerate_data;
};

/// Realize every pants and assemble the component holonomies: a spanning
/// tree of amalgamated gluings, then one stable letter per remaining edge.
inline SurfaceStructure assemble(const PantsDecomposition& dec, const BuildInput& in) {
    dec.validate();
    SurfaceStructure out;
    out.decomposition = dec;
    out.degenerate = in.degenerate;
    out.degenerate_data = in.degenerate_data;
    out.peripheral_eps = in.peripheral_eps;

    auto degenerate = [&](int c) {
        return std::binary_search(in.degenerate.begin(), in.degenerate.end(), c);
    };

    // boundary lengths per slot
    std::vector<std::array<SplitComplex, 3>> slot_len(dec.num_pants);
    for (size_t c = 0; c < dec.curves.size(); ++c) {
        SplitComplex l = in.curve_length[c];
        slot_len[dec.curves[c].a.pants][dec.curves[c].a.slot] = l;
        slot_len[dec.curves[c].b.pants][dec.curves[c].b.slot] = l;
    }
    for (size_t k = 0; k < dec.peripherals.size(); ++k)
        slot_len[dec.peripherals[k].pants][dec.peripherals[k].slot] =
            in.peripheral_length[k];

    std::vector<PantsRep> local(dec.num_pants);
    for (int p = 0; p < dec.num_pants; ++p)
        local[p] = realize_pants(slot_len[p][0], slot_len[p][1], slot_len[p][2]);

    // component discovery over non-degenerate curves
    out.pants_component.assign(dec.num_pants, -1);
    int n_comp = 0;
    for (int root = 0; root < dec.num_pants; ++root) {
        if (out.pants_component[root] >= 0) continue;
        int comp = n_comp++;
        out.components.emplace_back();
        GluedRep& rep = out.components.back();

        std::vector<PantsRep> global(dec.num_pants);
        out.pants_component[root] = comp;
        global[root] = local[root];
        std::vector<bool> curve_done(dec.curves.size(), false);

        // Per-pants conjugator to the component frame (global = conj local
        // conj^{-1}), with its spanning-tree factorization. All frames are
        // computed in the local pants coordinates, where the fixed points
        // are well conditioned, and only then composed with the
        // conjugators; recomputing them from the assembled generators
        // would lose accuracy with the square of their entry size.
        std::vector<Isometry> conj(dec.num_pants);
        std::vector<Isometry> tree_step(dec.num_pants);
        std::vector<int> tree_parent(dec.num_pants, -1);
        std::vector<int> tree_depth(dec.num_pants, 0);
        // conj[a]^{-1} conj[b] as a cancellation-free product of tree steps
        auto relative_conjugator = [&](int a, int b) {
            std::vector<int> up, down;
            int x = a, y = b;
            while (tree_depth[x] > tree_depth[y]) {
                up.push_back(x);
                x = tree_parent[x];
            }
            while (tree_depth[y] > tree_depth[x]) {
                down.push_back(y);
                y = tree_parent[y];
            }
            while (x != y) {
                up.push_back(x);
                down.push_back(y);
                x = tree_parent[x];
                y = tree_parent[y];
            }
            Isometry rel = Isometry::identity();
            for (int p : up) rel = rel * tree_step[p].inverse();
            for (auto it = down.rbegin(); it != down.rend(); ++it)
                rel = rel * tree_step[*it];
            return rel;
        };

        // spanning tree by BFS: amalgamated gluings
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int p = q.front();
            q.pop();
            for (size_t c = 0; c < dec.curves.size(); ++c) {
                if (curve_done[c] || degenerate(static_cast<int>(c))) continue;
                const DecCurve& e = dec.curves[c];
                SlotRef near, far;
                if (e.a.pants == p && out.pants_component[e.b.pants] < 0) {
                    near = e.a;
                    far = e.b;
                } else if (e.b.pants == p && out.pants_component[e.a.pants] < 0) {
                    near = e.b;
                    far = e.a;
                } else {
                    continue;
                }
                curve_done[c] = true;
                out.pants_component[far.pants] = comp;
                out.curve_component[static_cast<int>(c)] = comp;
                q.push(far.pants);

                SplitComplex tw = in.curve_twist[c];
                const PantsRep& lp = local[near.pants];
                Isometry Mloc = frame_normalizer(lp.gen(near.slot),
                                                 lp.gen((near.slot + 1) % 3));
                Isometry M = Mloc * conj[near.pants].inverse();
                const PantsRep& lq = local[far.pants];
                FixedPoints fn = fixed_points(lq.gen((far.slot + 1) % 3));
                Isometry A = amalgam_conjugator(lq.gen(far.slot), fn.attracting);
                Isometry S = Mloc.inverse() * centralizer_element(tw) * A;
                Isometry C = conj[near.pants] * S;
                conj[far.pants] = C;
                tree_step[far.pants] = S;
                tree_parent[far.pants] = near.pants;
                tree_depth[far.pants] = tree_depth[near.pants] + 1;
                global[far.pants] = lq.conjugated(C);

                GluingRecord rec;
                rec.kind = GluingKind::Amalgamated;
                rec.tw = tw;
                rec.normalizer = M;
                rec.canonical = A;
                rec.twist = centralizer_element(tw);
                rec.gen1 = slot_name(near);
                rec.next1 = slot_name({near.pants, (near.slot + 1) % 3});
                rec.gen2 = slot_name(far);
                rec.next2 = slot_name({far.pants, (far.slot + 1) % 3});
                rep.gluing_records["c" + std::to_string(c)] = rec;
            }
        }

        // remaining edges inside this component: stable letters
        for (size_t c = 0; c < dec.curves.size(); ++c) {
            if (curve_done[c] || degenerate(static_cast<int>(c))) continue;
            const DecCurve& e = dec.curves[c];
            if (out.pants_component[e.a.pants] != comp) continue;
            curve_done[c] = true;
            out.curve_component[static_cast<int>(c)] = comp;

            SplitComplex tw = in.curve_twist[c];
            const PantsRep& lp = local[e.a.pants];
            Isometry Mloc = frame_normalizer(lp.gen(e.a.slot),
                                             lp.gen((e.a.slot + 1) % 3));
            Isometry M = Mloc * conj[e.a.pants].inverse();
            Isometry rel = relative_conjugator(e.a.pants, e.b.pants);
            // candidate B with the axis of the partner generator as seen in
            // the pinned frame: built from the partner's local fixed points
            // (well conditioned) composed with the mapping, rather than from
            // the fixed points of the mapped generator, whose coordinates
            // nearly coincide when the mapping is large. The centralizer
            // gauge absorbs the difference.
            FixedPoints floc = fixed_points(local[e.b.pants].gen(e.b.slot));
            Isometry map = Mloc * rel;
            Isometry Baxis(
                detail::axis_to_standard(floc.attracting.plus, floc.repelling.plus),
                detail::axis_to_standard(floc.attracting.minus, floc.repelling.minus));
            Isometry B0 = hnn_gauge(Baxis * map.inverse());
            Isometry core = Mloc.inverse() * centralizer_element(tw) * B0 * Mloc;
            Isometry U = conj[e.a.pants] * core * conj[e.a.pants].inverse();

            std::string u = "u" + std::to_string(c);
            rep.generators[u] = U;

            GluingRecord rec;
            rec.kind = GluingKind::Hnn;
            rec.tw = tw;
            rec.normalizer = M;
            rec.canonical = B0;
            rec.twist = centralizer_element(tw);
            rec.gen1 = slot_name(e.a);
            rec.next1 = slot_name({e.a.pants, (e.a.slot + 1) % 3});
            rec.gen2 = slot_name(e.b);
            rec.stable = u;
            rep.gluing_records["c" + std::to_string(c)] = rec;
            rep.relations.push_back({u, slot_name(e.b), "~" + u, slot_name(e.a)});
        }

        for (int p = 0; p < dec.num_pants; ++p) {
            if (out.pants_component[p] != comp) continue;
            for (int i = 0; i < 3; ++i)
                rep.generators[slot_name({p, i})] = global[p].gen(i);
            rep.relations.push_back(
                {slot_name({p, 2}), slot_name({p, 1}), slot_name({p, 0})});
        }
        for (const auto& [name, rec] : rep.gluing_records)
            if (rec.kind == GluingKind::Amalgamated)
                rep.relations.push_back({rec.gen1, rec.gen2});
    }
    return out;
}

} // namespace detail

/// Phi_P^{-1}: realize the FN point as a surface structure (D' empty).
inline SurfaceStructure coords_to_structure(const PantsDecomposition& dec,
                                            const FNPoint& x) {
    x.validate(dec);
    detail::BuildInput in;
    for (const CurveCoord& c : x.curves) {
        in.curve_length.push_back(c.length);
        in.curve_twist.push_back(c.twist);
    }
    for (const PeripheralCoord& p : x.peripherals) {
        in.peripheral_length.push_back(p.length);
        in.peripheral_eps.push_back(p.delta > 0 ? 1 : (p.delta < 0 ? -1 : 0));
    }
    return detail::assemble(dec, in);
}

/// Phi_P: read the coordinates back off a non-degenerate structure.
inline FNPoint structure_to_coords(const PantsDecomposition& dec,
                                   const SurfaceStructure& s) {
    if (!s.degenerate.empty())
        throw DegenerateCurve("structure_to_coords: structure degenerate on D'");
    FNPoint x;
    for (size_t c = 0; c < dec.curves.size(); ++c) {
        const GluedRep& rep = s.components.at(s.curve_component.at(static_cast<int>(c)));
        std::string id = "c" + std::to_string(c);
        const GluingRecord& rec = rep.gluing_records.at(id);
        CurveCoord cc;
        cc.length = b_length(rep.generators.at(rec.gen1));
        cc.twist = extract_twist(rep, id);
        x.curves.push_back(cc);
    }
    for (size_t k = 0; k < dec.peripherals.size(); ++k) {
        const SlotRef& slot = dec.peripherals[k];
        const GluedRep& rep = s.components.at(s.pants_component.at(slot.pants));
        SplitComplex l = b_length(rep.generators.at(detail::slot_name(slot)));
        double n = square_norm(l);
        PeripheralCoord pc;
        pc.length = l;
        pc.delta = s.peripheral_eps.at(k) * std::sqrt(n > 0 ? n : 0.0);
        x.peripherals.push_back(pc);
    }
    return x;
}

/// Renormalized twist theta_B = 2 pi * twist / length; a Dehn twist
/// (twist += length) shifts it by exactly 2 pi.
inline SplitComplex theta_renorm(SplitComplex length, SplitComplex twist) {
    if (cone_classify(length) != ConeClass::InteriorCPlus)
        throw LightLikeElement("theta_renorm: length not invertible in C+");
    return (2.0 * M_PI) * (twist * invert(length));
}

/// Cylinder-to-R^4 chart around a degenerating curve.
inline std::array<double, 4> H_map(SplitComplex length, double angle, double c) {
    if (cone_classify(length) != ConeClass::InteriorCPlus)
        throw ConeViolation("H_map: length not in interior of C+");
    double mod = std::sqrt(square_norm(length));
    double sech = 1.0 / std::cosh(c);
    return {length.im, mod * sech * std::cos(angle), mod * sech * std::sin(angle),
            mod * std::tanh(c)};
}

/// Exact algebraic inverse of H_map.
inline std::tuple<SplitComplex, double, double> H_inverse(double x, double y, double z,
                                                          double w) {
    double axis = y * y + z * z;
    if (axis <= 1e-24)
        throw AxisDegenerate("H_inverse: (y,z) at the degenerate axis");
    SplitComplex length{std::sqrt(x * x + axis + w * w), x};
    double angle = std::atan2(z, y);
    double c = std::atanh(w / std::sqrt(axis + w * w));
    return {length, angle, c};
}

/// Phi_{P,D}: coordinates of a structure degenerate along D' inside the
/// stratum chart of the multicurve D.
inline StratumPoint stratum_coords(const PantsDecomposition& dec,
                                   const std::vector<int>& D,
                                   const SurfaceStructure& s) {
    for (int c : D)
        if (c < 0 || c >= static_cast<int>(dec.curves.size()))
            throw NotContained("stratum_coords: D not contained in the decomposition");
    for (int c : s.degenerate)
        if (std::find(D.begin(), D.end(), c) == D.end())
            throw NotContained("stratum_coords: D' not contained in D");

    StratumPoint out;
    for (size_t c = 0; c < dec.curves.size(); ++c) {
        int ci = static_cast<int>(c);
        bool in_D = std::find(D.begin(), D.end(), ci) != D.end();
        if (s.is_degenerate(ci)) {
            const DegenerateData& dd = s.degenerate_data.at(ci);
            out.degenerate[ci] = {dd.a, 0.0, 0.0, dd.d};
            continue;
        }
        const GluedRep& rep = s.components.at(s.curve_component.at(ci));
        std::string id = "c" + std::to_string(c);
        SplitComplex l = b_length(rep.generators.at(rep.gluing_records.at(id).gen1));
        SplitComplex tw = extract_twist(rep, id);
        if (!in_D) {
            out.undegenerate[ci] = {l, tw};
        } else {
            SplitComplex theta = theta_renorm(l, tw);
            double angle = std::fmod(theta.re, 2.0 * M_PI);
            if (angle < 0) angle += 2.0 * M_PI;
            out.degenerate[ci] = H_map(l, angle, theta.im);
        }
    }
    for (size_t k = 0; k < dec.peripherals.size(); ++k) {
        const SlotRef& slot = dec.peripherals[k];
        const GluedRep& rep = s.components.at(s.pants_component.at(slot.pants));
        SplitComplex l = b_length(rep.generators.at(detail::slot_name(slot)));
        double n = square_norm(l);
        out.peripherals.push_back(
            {l, s.peripheral_eps.at(k) * std::sqrt(n > 0 ? n : 0.0)});
    }
    return out;
}

/// Inverse of Phi_{P,D}: rebuild a structure, degenerate exactly where the
/// stratum tuple has b = c = 0.
inline SurfaceStructure stratum_coords_inverse(const PantsDecomposition& dec,
                                               const std::vector<int>& D,
                                               const StratumPoint& p) {
    detail::BuildInput in;
    in.curve_length.resize(dec.curves.size());
    in.curve_twist.resize(dec.curves.size());
    for (size_t c = 0; c < dec.curves.size(); ++c) {
        int ci = static_cast<int>(c);
        bool in_D = std::find(D.begin(), D.end(), ci) != D.end();
        if (!in_D) {
            const CurveCoord& cc = p.undegenerate.at(ci);
            if (cone_classify(cc.length) != ConeClass::InteriorCPlus)
                throw InvalidStratumPoint("stratum inverse: length not in C+");
            in.curve_length[c] = cc.length;
            in.curve_twist[c] = cc.twist;
            continue;
        }
        const std::array<double, 4>& t = p.degenerate.at(ci);
        if (t[1] == 0.0 && t[2] == 0.0) {
            DegenerateData dd{t[0], t[3]};
            in.curve_length[c] = dd.length();
            in.degenerate.push_back(ci);
            in.degenerate_data[ci] = dd;
        } else {
            auto [l, angle, cc] = H_inverse(t[0], t[1], t[2], t[3]);
            SplitComplex theta{angle, cc};
            in.curve_length[c] = l;
            in.curve_twist[c] = (1.0 / (2.0 * M_PI)) * (theta * l);
        }
    }
    std::sort(in.degenerate.begin(), in.degenerate.end());
    for (const PeripheralCoord& pc : p.peripherals) {
        in.peripheral_length.push_back(pc.length);
        in.peripheral_eps.push_back(pc.delta > 0 ? 1 : (pc.delta < 0 ? -1 : 0));
    }
    return detail::assemble(dec, in);
}

/// Surface-level Dehn twist: add k * length to the twist of one curve and
/// rebuild. Holonomies of curves disjoint from it are unchanged up to the
/// marking convention.
inline FNPoint dehn_twist_point(const FNPoint& x, int curve, int k) {
    FNPoint out = x;
    out.curves.at(curve).twist =
        out.curves.at(curve).twist + static_cast<double>(k) * out.curves.at(curve).length;
    return out;
}

/// Pinned far-side point of a glued curve, read in the curve's normalized
/// frame: at twist tw it sits at [e^lambda e+ + e^mu e-, 1] and converges
/// to [e+, e-] under future-directed pinching.
inline BoundaryPoint pinned_point(const GluedRep& rep, const std::string& curve) {
    const GluingRecord& rec = rep.gluing_records.at(curve);
    const Isometry& g1 = rep.generators.at(rec.gen1);
    Isometry M = detail::frame_normalizer(g1, rep.generators.at(rec.next1));
    BoundaryPoint p4;
    if (rec.kind == GluingKind::Amalgamated) {
        p4 = fixed_points(rep.generators.at(rec.next2)).attracting;
    } else {
        p4 = act(rep.generators.at(rec.stable), fixed_points(g1).repelling);
    }
    return act(M, p4);
}

/// One step of a pinch schedule: per pinched curve, the current length and
/// the bending coordinate Im theta_B.
struct PinchStep {
    std::map<int, std::pair<SplitComplex, double>> targets; // curve -> (length, Im theta)
};

struct PinchSample {
    FNPoint coords;
    StratumPoint stratum;
    std::map<int, BoundaryPoint> beta; // pinned far-side point per curve in D
};

/// Drive the coordinates of the curves in D along the schedule, keeping
/// each curve's initial twist angle, and emit the trajectory.
inline std::vector<PinchSample> pinch_path(const PantsDecomposition& dec,
                                           const std::vector<int>& D, const FNPoint& x0,
                                           const std::vector<PinchStep>& schedule) {
    x0.validate(dec);
    for (int c : D)
        if (c < 0 || c >= static_cast<int>(dec.curves.size()))
            throw NotContained("pinch_path: D not contained in the decomposition");
    // monotonicity of Im theta_B per curve
    for (int c : D) {
        double prev = 0.0;
        bool have = false;
        int dir = 0;
        for (const PinchStep& st : schedule) {
            auto it = st.targets.find(c);
            if (it == st.targets.end())
                throw ScheduleInvalid("pinch_path: step missing a curve of D");
            double v = it->second.second;
            if (have) {
                int d = v > prev ? 1 : (v < prev ? -1 : 0);
                if (d != 0 && dir != 0 && d != dir)
                    throw ScheduleInvalid("pinch_path: Im theta_B not monotone");
                if (d != 0) dir = d;
            }
            prev = v;
            have = true;
        }
    }

    // keep each pinched curve's initial angle
    std::map<int, double> angle0;
    for (int c : D) {
        const CurveCoord& cc = x0.curves.at(c);
        angle0[c] = theta_renorm(cc.length, cc.twist).re;
    }

    std::vector<PinchSample> out;
    for (const PinchStep& st : schedule) {
        FNPoint x = x0;
        for (int c : D) {
            auto [l, im] = st.targets.at(c);
            if (cone_classify(l) != ConeClass::InteriorCPlus)
                throw ConeViolation("pinch_path: scheduled length not in C+");
            SplitComplex theta{angle0[c], im};
            x.curves.at(c).length = l;
            x.curves.at(c).twist = (1.0 / (2.0 * M_PI)) * (theta * l);
        }
        PinchSample sample;
        sample.coords = x;
        SurfaceStructure s = coords_to_structure(dec, x);
        sample.stratum = stratum_coords(dec, D, s);
        for (int c : D) {
            const GluedRep& rep = s.components.at(s.curve_component.at(c));
            sample.beta[c] = pinned_point(rep, "c" + std::to_string(c));
        }
        out.push_back(std::move(sample));
    }
    return out;
}

/// Attracting fixed points of all holonomy words up to the length bound,
/// in deterministic (word-lexicographic) order.
inline std::vector<BoundaryPoint> limit_set_sample(const SurfaceStructure& s,
                                                   int max_word_length) {
    if (!s.degenerate.empty())
        throw DegenerateCurve("limit_set_sample: structure degenerate");
    std::vector<BoundaryPoint> out;
    for (const GluedRep& rep : s.components) {
        std::vector<std::pair<std::string, Isometry>> letters;
        for (const auto& [name, g] : rep.generators) {
            letters.push_back({name, g});
            letters.push_back({"~" + name, g.inverse()});
        }
        struct Item {
            std::string word;
            int last;
            Isometry g;
        };
        std::vector<Item> frontier;
        for (size_t i = 0; i < letters.size(); ++i)
            frontier.push_back({letters[i].first, static_cast<int>(i), letters[i].second});
        for (int len = 1; len <= max_word_length; ++len) {
            for (const Item& it : frontier)
                if (classify(it.g) == IsometryClass::Loxodromic)
                    out.push_back(fixed_points(it.g).attracting);
            if (len == max_word_length) break;
            std::vector<Item> next;
            for (const Item& it : frontier)
                for (size_t i = 0; i < letters.size(); ++i) {
                    int inv = static_cast<int>(it.last ^ 1);
                    if (static_cast<int>(i) == inv) continue;
                    next.push_back({it.word + " " + letters[i].first,
                                    static_cast<int>(i), it.g * letters[i].second});
                }
            frontier = std::move(next);
        }
    }
    return out;
}

} // namespace adsfn
