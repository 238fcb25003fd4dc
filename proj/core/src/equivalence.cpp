#include "dop4/equivalence.hpp"

#include <algorithm>
#include <cmath>

namespace dop4 {

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double tuple_distance(const std::vector<double>& u, const std::vector<double>& v) {
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, rel_diff(u[i], v[i]));
    return d;
}

} // namespace

Signature signature(const OperatorField& field, const std::vector<Point>& points,
                    const SignatureOptions& opt) {
    if (points.empty())
        throw math_error(errc::domain_error, "signature needs at least one sample point");

    std::vector<PointOperator> ops;
    ops.reserve(points.size());
    for (Point p : points) ops.push_back(field(p, opt.order));

    // decide the type over the regular samples
    bool constant = true;
    double max_dI0 = 0.0;
    int regular = 0;
    for (const auto& op : ops) {
        QuarticT<Jet> sig = op.symbol();
        double disc = constant_part(discriminant(sig));
        if (std::abs(disc) <= opt.regularity_rel_tol * std::pow(std::max(sig.norm(), 1e-30), 6))
            continue;
        ++regular;
        try {
            Jet i0 = absolute_invariant(sig, opt.i2_tol);
            double g = std::max(std::abs(i0.coeff(1, 0)), std::abs(i0.coeff(0, 1)));
            max_dI0 = std::max(max_dI0, g);
            if (g > opt.dI0_tol * (1.0 + std::abs(i0.value()))) constant = false;
        } catch (const math_error&) {
            continue;
        }
    }
    if (regular < opt.min_regular_points)
        throw math_error(errc::regularity_failure,
                         "fewer than " + std::to_string(opt.min_regular_points) +
                             " regular sample points");

    Signature sig_out;
    sig_out.type = constant ? SignatureType::constant_type : SignatureType::non_constant;

    if (constant) {
        GroupTypeOptions gopt;
        gopt.i2_tol = opt.i2_tol;
        gopt.dI0_tol = opt.dI0_tol;
        SymbolField sf = [&](Point p, int order) { return field(p, order).symbol(); };
        GroupTypeReport rep = group_type_classify(sf, points, gopt);
        sig_out.group_type = rep.type;
    }

    for (const auto& op : ops) {
        try {
            QuarticT<Jet> s = op.symbol();
            double disc = constant_part(discriminant(s));
            if (std::abs(disc) <= opt.regularity_rel_tol * std::pow(std::max(s.norm(), 1e-30), 6)) {
                ++sig_out.skipped;
                continue;
            }
            if (sig_out.type == SignatureType::non_constant) {
                std::vector<double> t;
                t.push_back(I0_jet(s, opt.i2_tol).value());
                t.push_back(I1_jet(s, opt.i2_tol).value());
                std::size_t lo = opt.full_alpha ? 0 : 1;
                std::size_t hi = opt.full_alpha ? kAlphaOrder.size() : 6;
                for (std::size_t k = lo; k < hi; ++k)
                    t.push_back(J_alpha(op, kAlphaOrder[k], opt.i2_tol));
                sig_out.tuples.push_back(std::move(t));
            } else if (sig_out.group_type == GroupType::non_parallel_torsion) {
                TotalSymbolOptions topt;
                topt.i2_tol = opt.i2_tol;
                topt.dI0_tol = opt.dI0_tol;
                TotalSymbolResult ts = total_symbol(op, topt);
                Torsion t = torsion(ts.gamma);
                Coframe cf = coframe(ts.gamma, t);
                auto j = frame_invariants(ts.symbols, cf);
                sig_out.tuples.emplace_back(j.begin(), j.end());
            } else {
                // group type: the coframe is degenerate by construction;
                // I0 and A(1) are the invariants that survive
                std::vector<double> t;
                t.push_back(I0_jet(s, opt.i2_tol).value());
                t.push_back(J_alpha(op, {0, 0}, opt.i2_tol));
                sig_out.tuples.push_back(std::move(t));
            }
        } catch (const math_error&) {
            ++sig_out.skipped;
        }
    }
    if (static_cast<int>(sig_out.tuples.size()) < opt.min_regular_points)
        throw math_error(errc::regularity_failure, "fewer than 3 usable sample points");
    return sig_out;
}

Verdict compare(const Signature& s1, const Signature& s2, double tol) {
    Verdict v;
    if (s1.type != s2.type) {
        v.kind = Verdict::Kind::incomparable;
        v.reason = "type tags differ (constant vs non-constant)";
        return v;
    }
    if (s1.type == SignatureType::constant_type && s1.group_type != s2.group_type) {
        v.kind = Verdict::Kind::incomparable;
        v.reason = std::string("group types differ: ") + group_type_name(s1.group_type) + " vs " +
                   group_type_name(s2.group_type);
        return v;
    }
    if (!s1.tuples.empty() && !s2.tuples.empty() &&
        s1.tuples[0].size() != s2.tuples[0].size()) {
        v.kind = Verdict::Kind::incomparable;
        v.reason = "tuple lengths differ";
        return v;
    }

    double hausdorff = 0.0;
    int witness = -1;
    auto one_sided = [&](const Signature& a, const Signature& b, bool record) {
        for (std::size_t i = 0; i < a.tuples.size(); ++i) {
            double nearest = 1e300;
            for (const auto& t : b.tuples) nearest = std::min(nearest, tuple_distance(a.tuples[i], t));
            if (nearest > hausdorff) {
                hausdorff = nearest;
                if (record) witness = static_cast<int>(i);
            }
        }
    };
    one_sided(s1, s2, true);
    one_sided(s2, s1, false);

    v.distance = hausdorff;
    if (hausdorff <= tol) {
        v.kind = Verdict::Kind::indistinguishable;
    } else {
        v.kind = Verdict::Kind::distinct;
        v.witness = witness;
    }
    return v;
}

DiffeoCheck verify_diffeo(const OperatorField& a, const OperatorField& b, const Diffeo& phi,
                          const std::vector<Point>& points, double tol) {
    DiffeoCheck out;
    for (Point p : points) {
        PointOperator pushed = pushforward(a(p, 4), phi.jet(p, 4));
        PointOperator target = b(pushed.base, 0);
        for (int s = 0; s < slot_count; ++s) {
            double u = pushed.c[static_cast<std::size_t>(s)].value();
            double w = target.c[static_cast<std::size_t>(s)].value();
            out.max_residual = std::max(out.max_residual, rel_diff(u, w));
        }
    }
    out.equivalent = out.max_residual <= tol;
    return out;
}

std::vector<Point> grid_points(double x0, double x1, int nx, double y0, double y1, int ny) {
    std::vector<Point> pts;
    if (nx < 1 || ny < 1) throw math_error(errc::domain_error, "grid needs at least 1x1 points");
    pts.reserve(static_cast<std::size_t>(nx * ny));
    for (int i = 0; i < nx; ++i) {
        double x = nx == 1 ? 0.5 * (x0 + x1) : x0 + (x1 - x0) * i / (nx - 1);
        for (int j = 0; j < ny; ++j) {
            double y = ny == 1 ? 0.5 * (y0 + y1) : y0 + (y1 - y0) * j / (ny - 1);
            pts.push_back({x, y});
        }
    }
    return pts;
}

} // namespace dop4
