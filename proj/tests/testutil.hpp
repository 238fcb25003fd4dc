#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dop4/equivalence.hpp"
#include "dop4/invariants.hpp"
#include "dop4/linsolve.hpp"
#include "dop4/operator4.hpp"
#include "dop4/quartic.hpp"

namespace testutil {

using namespace dop4;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(eng_);
    }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }

private:
    std::mt19937_64 eng_;
};

inline Quartic random_quartic(Rng& rng, double lo = -2.0, double hi = 2.0) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi),
            rng.uniform(lo, hi)};
}

inline Quartic random_regular_quartic(Rng& rng, double min_rel_disc = 1e-3) {
    for (int tries = 0; tries < 1000; ++tries) {
        Quartic q = random_quartic(rng);
        double n = q.norm();
        if (n < 0.2) continue;
        if (std::abs(discriminant(q)) > min_rel_disc * std::pow(n, 6)) return q;
    }
    return {1.0, 0.0, 0.0, 0.0, -1.0};
}

inline QuadForm random_quadform(Rng& rng) {
    return {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

inline LinearMap2 random_invertible_map(Rng& rng, double min_det = 0.25) {
    for (;;) {
        LinearMap2 m{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                     rng.uniform(-2.0, 2.0)};
        if (std::abs(m.det()) >= min_det) return m;
    }
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

/// Random polynomial chart map: invertible affine part plus small
/// quadratic and cubic corrections, well-behaved on [-1,1]^2.
inline Diffeo random_diffeo(Rng& rng) {
    LinearMap2 l = random_invertible_map(rng, 0.4);
    auto comp = [&](double lx, double ly) {
        std::ostringstream os;
        os.precision(17);
        os << fmt(rng.uniform(-0.5, 0.5)) << " + " << fmt(lx) << "*x + " << fmt(ly) << "*y";
        const char* quads[] = {"x*x", "x*y", "y*y", "x*x*y", "x*y*y"};
        for (const char* q : quads) os << " + " << fmt(rng.uniform(-0.04, 0.04)) << "*" << q;
        return os.str();
    };
    Diffeo d;
    d.x = Expression::parse(comp(l.a, l.b));
    d.y = Expression::parse(comp(l.c, l.d));
    return d;
}

/// Small random polynomial with constant term `c0`, for GL(2) entry
/// fields.
inline Expression small_poly(Rng& rng, double c0, double amp = 0.25) {
    std::ostringstream os;
    os.precision(17);
    os << fmt(c0) << " + " << fmt(rng.uniform(-amp, amp)) << "*x + "
       << fmt(rng.uniform(-amp, amp)) << "*y + " << fmt(rng.uniform(-amp / 2, amp / 2))
       << "*x*y";
    return Expression::parse(os.str());
}

struct GlField {
    Expression g11, g12, g21, g22;
    Quartic sigma_c;

    Mat2T<Jet> mat(Point p, int order) const {
        return {g11.eval(p, order), g12.eval(p, order), g21.eval(p, order), g22.eval(p, order)};
    }

    QuarticT<Jet> symbol(Point p, int order) const {
        Mat2T<Jet> m = mat(p, order);
        Jet zero(order, p);
        QuarticT<Jet> qc{zero + sigma_c.a0, zero + sigma_c.a1, zero + sigma_c.a2,
                         zero + sigma_c.a3, zero + sigma_c.a4};
        return act(m, qc);
    }

    SymbolField field() const {
        return [g = *this](Point p, int order) { return g.symbol(p, order); };
    }
};

/// Constant-type symbol family: pointwise GL(2) image of a fixed regular
/// quartic. Generic members have non-parallel torsion and a regular
/// coframe.
inline GlField random_gl_field(Rng& rng) {
    GlField f;
    f.g11 = small_poly(rng, 1.0);
    f.g12 = small_poly(rng, 0.0);
    f.g21 = small_poly(rng, 0.0);
    f.g22 = small_poly(rng, 1.0);
    f.sigma_c = random_regular_quartic(rng);
    return f;
}

/// Full constant-type operator field: GL-field symbol plus fixed
/// lower-order expression coefficients.
inline OperatorField gl_field_operator(const GlField& g, Rng& rng) {
    std::vector<Expression> lower;
    for (int s = slot_b0; s < slot_count; ++s)
        lower.push_back(small_poly(rng, rng.uniform(-1.0, 1.0), 0.4));
    return [g, lower](Point p, int order) {
        PointOperator op(p, order);
        QuarticT<Jet> sym = g.symbol(p, order);
        for (int i = 0; i < 5; ++i) op.c[static_cast<std::size_t>(i)] = sym[i];
        for (int s = slot_b0; s < slot_count; ++s)
            op.c[static_cast<std::size_t>(s)] = lower[static_cast<std::size_t>(s - slot_b0)].eval(p, order);
        return op;
    };
}

/// Central finite difference of a scalar point function.
inline double fd_dx(const std::function<double(Point)>& f, Point p, double h = 1e-5) {
    return (f({p.x + h, p.y}) - f({p.x - h, p.y})) / (2 * h);
}
inline double fd_dy(const std::function<double(Point)>& f, Point p, double h = 1e-5) {
    return (f({p.x, p.y + h}) - f({p.x, p.y - h})) / (2 * h);
}

/// Classical discriminant of the raw quartic polynomial via the Sylvester
/// resultant of (P, P') — the independent oracle for the I2³-27I3²
/// normalization (ratio 1/256 after dividing by the leading coefficient).
inline double resultant_discriminant(const Quartic& q) {
    double p[5] = {q.a0, 4 * q.a1, 6 * q.a2, 4 * q.a3, q.a4}; // degree 4
    double d[4] = {4 * p[0], 3 * p[1], 2 * p[2], p[3]};       // degree 3
    LinearSystem<double> s(7, 0.0);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 5; ++c) s.at(r, r + c) = p[c];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) s.at(3 + r, r + c) = d[c];
    return s.det_value() / p[0];
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max({1.0, std::abs(got), std::abs(want)});
}

inline std::vector<Point> sample_points() {
    return {{0.1, -0.2}, {-0.3, 0.25}, {0.4, 0.35}, {-0.15, -0.3}, {0.05, 0.12}};
}

} // namespace testutil
