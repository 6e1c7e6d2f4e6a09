// Command-line front end: classify isometries, convert between
// Fenchel-Nielsen coordinates and holonomy representations, run pinch
// schedules, and emit geodesic / limit-set plot data.
//
// Exit codes:
//   0  success
//   2  parse error (bad usage, unreadable file, malformed JSON/schema)
//   3  not admissible (elliptic/identity factor with --admissible)
//   4  invariant violation (cone constraint, E-constraint, degeneracy)
//   5  invalid pinch schedule

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "adsfn/halfspace.hpp"
#include "adsfn/json_io.hpp"

namespace {

using namespace adsfn;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::FileError("cannot open " + path);
    return json::parse(in);
}

void write_out(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw CLI::FileError("cannot write " + out);
    f << text;
}

SplitComplex parse_pair(const std::string& s) {
    double re = 0.0, im = 0.0;
    char comma = 0;
    std::istringstream ss(s);
    if (!(ss >> re >> comma >> im) || comma != ',')
        throw CLI::ConversionError(s, "re,im pair");
    return {re, im};
}

const char* class_name(IsometryClass c) {
    switch (c) {
        case IsometryClass::Loxodromic: return "Loxodromic";
        case IsometryClass::SemiLoxodromicPlus: return "SemiLoxodromicPlus";
        case IsometryClass::SemiLoxodromicMinus: return "SemiLoxodromicMinus";
        case IsometryClass::Parabolic: return "Parabolic";
        default: return "Other";
    }
}

int cmd_classify(const std::string& file, bool admissible, const std::string& out) {
    Isometry g = load_json(file).get<Isometry>();
    IsometryClass c = classify(g);
    std::ostringstream os;
    os << "class: " << class_name(c) << "\n";
    if (c == IsometryClass::Other) {
        if (admissible) {
            write_out(out, os.str());
            return 3;
        }
    } else {
        SplitComplex l = b_length(g);
        os << "length: (" << fmt(l.re) << ", " << fmt(l.im) << ")\n";
        try {
            FixedPoints f = fixed_points(g);
            auto pt = [&](const BoundaryPoint& p) {
                return "[" + fmt(p.plus.x) + ", " + fmt(p.plus.y) + "] x [" +
                       fmt(p.minus.x) + ", " + fmt(p.minus.y) + "]";
            };
            os << "attracting: " << pt(f.attracting) << "\n";
            os << "repelling: " << pt(f.repelling) << "\n";
        } catch (const Error&) {
            // parabolic factors: no transverse fixed-point pair to report
        }
    }
    write_out(out, os.str());
    return 0;
}

int cmd_coords2rep(const std::string& dec_file, const std::string& point_file,
                   const std::string& out) {
    PantsDecomposition dec = load_json(dec_file).get<PantsDecomposition>();
    FNPoint x = load_json(point_file).get<FNPoint>();
    SurfaceStructure s = coords_to_structure(dec, x);
    write_out(out, canonical_dump(json(s)));
    return 0;
}

int cmd_rep2coords(const std::string& dec_file, const std::string& struct_file,
                   const std::string& out) {
    PantsDecomposition dec = load_json(dec_file).get<PantsDecomposition>();
    SurfaceStructure s = load_json(struct_file).get<SurfaceStructure>();
    FNPoint x = structure_to_coords(dec, s);
    write_out(out, canonical_dump(json(x)));
    return 0;
}

int cmd_stratum(const std::string& dec_file, const std::string& struct_file,
                const std::vector<int>& D, const std::string& out) {
    PantsDecomposition dec = load_json(dec_file).get<PantsDecomposition>();
    SurfaceStructure s = load_json(struct_file).get<SurfaceStructure>();
    StratumPoint p = stratum_coords(dec, D, s);
    write_out(out, canonical_dump(json(p)));
    return 0;
}

int cmd_pinch(const std::string& dec_file, const std::string& point_file,
              const std::string& schedule_file, const std::vector<int>& D,
              const std::string& out) {
    PantsDecomposition dec = load_json(dec_file).get<PantsDecomposition>();
    FNPoint x0 = load_json(point_file).get<FNPoint>();
    json sj = load_json(schedule_file);
    std::vector<PinchStep> schedule;
    for (const json& stj : sj.at("steps")) {
        PinchStep st;
        for (auto it = stj.at("targets").begin(); it != stj.at("targets").end(); ++it)
            st.targets[std::stoi(it.key())] = {
                it.value().at("length").get<SplitComplex>(),
                it.value().at("imtheta").get<double>()};
        schedule.push_back(std::move(st));
    }
    std::vector<PinchSample> path = pinch_path(dec, D, x0, schedule);
    std::ostringstream os;
    os << "step,curve,field,value\n";
    for (size_t n = 0; n < path.size(); ++n) {
        const PinchSample& sm = path[n];
        for (int c : D) {
            const std::array<double, 4>& q = sm.stratum.degenerate.at(c);
            const char* fields[4] = {"x", "y", "z", "w"};
            for (int i = 0; i < 4; ++i)
                os << n << "," << c << "," << fields[i] << "," << fmt(q[i]) << "\n";
            const BoundaryPoint& b = sm.beta.at(c);
            os << n << "," << c << ",beta_plus," << fmt(b.plus.angle()) << "\n";
            os << n << "," << c << ",beta_minus," << fmt(b.minus.angle()) << "\n";
        }
    }
    write_out(out, os.str());
    return 0;
}

int cmd_geodesic(const std::string& kind, const std::string& p1, const std::string& p2,
                 const std::string& p, const std::string& delta, const std::string& dir,
                 int samples, const std::string& out) {
    Geodesic g;
    std::vector<double> ts;
    if (kind == "spacelike") {
        g = geodesic_between(parse_pair(p1), parse_pair(p2));
    } else if (kind == "timelike") {
        g = geodesic_timelike(parse_pair(p), parse_pair(delta));
    } else if (kind == "lightlike") {
        double x1 = 0.0, x2 = 0.0, x3 = 0.0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(dir);
        if (!(ss >> x1 >> c1 >> x2 >> c2 >> x3) || c1 != ',' || c2 != ',')
            throw CLI::ConversionError(dir, "x1,x2,x3 triple");
        g = geodesic_lightlike(parse_pair(p), TangentVector{x1, x2, x3});
    } else {
        throw CLI::ConversionError(kind, "spacelike|timelike|lightlike");
    }
    // parameter values matching sample_geodesic's sweep
    int n = samples;
    if (g.kind == GeodesicKind::SpaceLike) {
        if (square_norm(g.delta) > 0.0) {
            for (int i = 1; i <= n; ++i) ts.push_back(M_PI * i / (n + 1));
        } else {
            int half = n / 2;
            for (int sgn = -1; sgn <= 1; sgn += 2)
                for (int i = 1; i <= half; ++i) ts.push_back(sgn * 5.0 * i / half);
        }
    } else if (g.kind == GeodesicKind::TimeLike) {
        for (int i = 0; i < n; ++i) {
            double t = M_PI * i / (n - 1);
            if (std::abs(std::cos(t)) < 1e-9) t += 2e-9;
            ts.push_back(t);
        }
    } else {
        for (int i = 1; i <= n; ++i) ts.push_back(0.2 + 10.0 * i / n);
    }
    std::vector<ModelPoint> pts = sample_geodesic(g, n);
    std::ostringstream os;
    os << "t,x1,x2,x3\n";
    for (size_t i = 0; i < pts.size(); ++i)
        os << fmt(ts[i]) << "," << fmt(pts[i].x1) << "," << fmt(pts[i].x2) << ","
           << fmt(pts[i].x3) << "\n";
    write_out(out, os.str());
    return 0;
}

int cmd_limitset(const std::string& dec_file, const std::string& point_file, int depth,
                 const std::string& out) {
    PantsDecomposition dec = load_json(dec_file).get<PantsDecomposition>();
    FNPoint x = load_json(point_file).get<FNPoint>();
    SurfaceStructure s = coords_to_structure(dec, x);
    std::vector<BoundaryPoint> pts = limit_set_sample(s, depth);
    std::ostringstream os;
    os << "plus_angle,minus_angle\n";
    for (const BoundaryPoint& b : pts)
        os << fmt(b.plus.angle()) << "," << fmt(b.minus.angle()) << "\n";
    write_out(out, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fenchel-Nielsen coordinates for GHM anti-de Sitter structures"};
    app.require_subcommand(1);

    int seed = 0;
    std::string out;
    app.add_option("--seed", seed, "seed for any randomized data (determinism)");

    auto* classify_cmd = app.add_subcommand("classify", "classify an isometry file");
    std::string matrix_file;
    bool admissible = false;
    classify_cmd->add_option("matrix-file", matrix_file)->required();
    classify_cmd->add_flag("--admissible", admissible,
                           "exit 3 unless the isometry is admissible");

    auto* c2r = app.add_subcommand("coords2rep", "FN coordinates -> holonomy");
    auto* r2c = app.add_subcommand("rep2coords", "holonomy -> FN coordinates");
    auto* strat = app.add_subcommand("stratum", "augmented coordinates of a structure");
    auto* pinch = app.add_subcommand("pinch", "drive a pinch schedule, emit CSV");
    auto* geod = app.add_subcommand("geodesic", "sample a model geodesic as CSV");
    auto* lims = app.add_subcommand("limitset", "sample the limit set as CSV");

    std::string dec_file, point_file, struct_file, schedule_file;
    std::vector<int> D;
    c2r->add_option("decomposition-file", dec_file)->required();
    c2r->add_option("point-file", point_file)->required();
    r2c->add_option("decomposition-file", dec_file)->required();
    r2c->add_option("structure-file", struct_file)->required();
    strat->add_option("decomposition-file", dec_file)->required();
    strat->add_option("structure-file", struct_file)->required();
    strat->add_option("--curves", D, "degenerate multicurve D");
    pinch->add_option("decomposition-file", dec_file)->required();
    pinch->add_option("point-file", point_file)->required();
    pinch->add_option("schedule-file", schedule_file)->required();
    pinch->add_option("--curves", D, "pinched multicurve D")->required();

    std::string kind, p1, p2, p, delta, dir;
    int samples = 256;
    geod->add_option("--kind", kind, "spacelike|timelike|lightlike")->required();
    geod->add_option("--p1", p1, "spacelike endpoint re,im");
    geod->add_option("--p2", p2, "spacelike endpoint re,im");
    geod->add_option("--p", p, "base point re,im");
    geod->add_option("--delta", delta, "timelike displacement re,im");
    geod->add_option("--dir", dir, "lightlike direction x1,x2,x3");
    geod->add_option("--samples", samples, "number of samples");

    int depth = 3;
    lims->add_option("decomposition-file", dec_file)->required();
    lims->add_option("point-file", point_file)->required();
    lims->add_option("--depth", depth, "maximum word length");

    for (CLI::App* sub : {classify_cmd, c2r, r2c, strat, pinch, geod, lims})
        sub->add_option("--out", out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(matrix_file, admissible, out);
        if (c2r->parsed()) return cmd_coords2rep(dec_file, point_file, out);
        if (r2c->parsed()) return cmd_rep2coords(dec_file, struct_file, out);
        if (strat->parsed()) return cmd_stratum(dec_file, struct_file, D, out);
        if (pinch->parsed())
            return cmd_pinch(dec_file, point_file, schedule_file, D, out);
        if (geod->parsed())
            return cmd_geodesic(kind, p1, p2, p, delta, dir, samples, out);
        if (lims->parsed()) return cmd_limitset(dec_file, point_file, depth, out);
    } catch (const adsfn::ScheduleInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const adsfn::NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const adsfn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const adsfn::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
