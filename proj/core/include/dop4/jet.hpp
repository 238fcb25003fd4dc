#pragma once

#include <array>
#include <vector>

#include "dop4/errors.hpp"

namespace dop4 {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Truncated bivariate Taylor expansion of a smooth function at a chart
/// point. Coefficients are Taylor-normalized: coeff(i,j) stores
/// d^i_x d^j_y f / (i! j!), so multiplication is a plain truncated
/// convolution. Values are immutable in spirit: every operation returns
/// a fresh jet, and the order of any arithmetic result is the minimum of
/// the operand orders.
class Jet {
public:
    Jet() : Jet(0, Point{}) {}
    Jet(int order, Point base);

    static Jet constant(double v, int order, Point base);
    static Jet variable_x(int order, Point base); // x0 + (x - x0)
    static Jet variable_y(int order, Point base);

    int order() const { return order_; }
    const Point& base() const { return base_; }

    /// Value at the base point.
    double value() const { return c_[0]; }

    /// Taylor-normalized coefficient; zero if i+j exceeds the order.
    double coeff(int i, int j) const;
    void set_coeff(int i, int j, double v);

    /// The derivative d^i_x d^j_y f at the base point (i! j! * coeff).
    double deriv(int i, int j) const;

    Jet truncated(int new_order) const;

    /// Max |coefficient|.
    double norm() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);

    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);

    friend Jet operator+(const Jet& a, double s);
    friend Jet operator+(double s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, double s) { return a + (-s); }
    friend Jet operator-(double s, const Jet& a) { return -a + s; }
    friend Jet operator*(const Jet& a, double s);
    friend Jet operator*(double s, const Jet& a) { return a * s; }
    friend Jet operator/(const Jet& a, double s);

    static int coeff_count(int order) { return (order + 1) * (order + 2) / 2; }

private:
    int order_;
    Point base_;
    std::vector<double> c_; // degree-major triangular layout

    static int idx(int i, int j) {
        int d = i + j;
        return d * (d + 1) / 2 + j;
    }
    friend Jet div(const Jet&, const Jet&, double);
    friend Jet partial(const Jet&, int);
    friend class JetFn;
};

/// a / b over the jet ring. b must be a unit: |b(base)| > unit_tol.
Jet div(const Jet& a, const Jet& b, double unit_tol = 1e-10);
inline Jet operator/(const Jet& a, const Jet& b) { return div(a, b); }
Jet operator/(double s, const Jet& b);

/// Formal partial derivative; order drops by one. direction: 1 = x, 2 = y.
Jet partial(const Jet& f, int direction);

Jet exp(const Jet& f);
Jet log(const Jet& f);
Jet sin(const Jet& f);
Jet cos(const Jet& f);
Jet sqrt(const Jet& f);
Jet pow(const Jet& f, int n, double unit_tol = 1e-10);
Jet pow(const Jet& f, double p);

/// A pair of jets sharing base and order: the jet of a chart map.
class MapJet {
public:
    MapJet(Jet fx, Jet fy);

    static MapJet identity(int order, Point base);

    const Jet& x() const { return fx_; }
    const Jet& y() const { return fy_; }
    int order() const { return fx_.order(); }
    const Point& base() const { return fx_.base(); }

    /// Image of the base point.
    Point value() const { return {fx_.value(), fy_.value()}; }

    /// Row-major first-order part [[dφ¹/dx, dφ¹/dy], [dφ²/dx, dφ²/dy]].
    std::array<double, 4> linear() const;
    double jacobian_det() const;
    bool invertible(double tol = 1e-10) const;

private:
    Jet fx_, fy_;
};

/// Jet of f ∘ φ at φ's base. f must be based at φ's value point.
Jet compose(const Jet& f, const MapJet& phi);
MapJet compose(const MapJet& outer, const MapJet& inner);

/// Inverse map jet: compose(invert(φ), φ) is the identity to the common
/// order. Based at φ's value point. Linear part inverted exactly; the
/// higher terms come from fixed-point iteration on the truncated
/// polynomials (one pass per order).
MapJet invert(const MapJet& phi, double tol = 1e-10);

} // namespace dop4
