#include "dop4/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dop4 {

const char* errc_name(errc c) {
    switch (c) {
        case errc::base_mismatch: return "BaseMismatch";
        case errc::order_too_low: return "OrderTooLow";
        case errc::zero_divisor: return "ZeroDivisor";
        case errc::singular_linear_part: return "SingularLinearPart";
        case errc::domain_error: return "DomainError";
        case errc::zero_quartic: return "ZeroQuartic";
        case errc::pole_at_i2_zero: return "PoleAtI2Zero";
        case errc::singular_system: return "SingularSystem";
        case errc::non_unit_pivot: return "NonUnitPivot";
        case errc::singular_jacobian: return "SingularJacobian";
        case errc::not_constant_type: return "NotConstantType";
        case errc::singular_tresse_frame: return "SingularTresseFrame";
        case errc::zero_torsion: return "ZeroTorsion";
        case errc::degenerate_metric: return "DegenerateMetric";
        case errc::degenerate_coframe: return "DegenerateCoframe";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::regularity_failure: return "RegularityFailure";
        case errc::incomparable: return "Incomparable";
    }
    return "UnknownError";
}

namespace {

void check_same_base(const Jet& a, const Jet& b) {
    if (!(a.base() == b.base()))
        throw math_error(errc::base_mismatch, "jets have different base points");
}

double factorial(int n) {
    double r = 1.0;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace

Jet::Jet(int order, Point base)
    : order_(order), base_(base), c_(static_cast<std::size_t>(coeff_count(order)), 0.0) {
    if (order < 0) throw math_error(errc::order_too_low, "negative jet order");
}

Jet Jet::constant(double v, int order, Point base) {
    Jet j(order, base);
    j.c_[0] = v;
    return j;
}

Jet Jet::variable_x(int order, Point base) {
    Jet j(order, base);
    j.c_[0] = base.x;
    if (order >= 1) j.c_[idx(1, 0)] = 1.0;
    return j;
}

Jet Jet::variable_y(int order, Point base) {
    Jet j(order, base);
    j.c_[0] = base.y;
    if (order >= 1) j.c_[idx(0, 1)] = 1.0;
    return j;
}

double Jet::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) return 0.0;
    return c_[idx(i, j)];
}

void Jet::set_coeff(int i, int j, double v) {
    if (i < 0 || j < 0 || i + j > order_)
        throw math_error(errc::order_too_low, "coefficient index beyond jet order");
    c_[idx(i, j)] = v;
}

double Jet::deriv(int i, int j) const {
    return coeff(i, j) * factorial(i) * factorial(j);
}

Jet Jet::truncated(int new_order) const {
    if (new_order >= order_) return *this;
    Jet r(new_order, base_);
    std::copy(c_.begin(), c_.begin() + coeff_count(new_order), r.c_.begin());
    return r;
}

double Jet::norm() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& rhs) {
    *this = *this + rhs;
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    *this = *this - rhs;
    return *this;
}

Jet operator+(const Jet& a, const Jet& b) {
    check_same_base(a, b);
    int m = std::min(a.order(), b.order());
    Jet r(m, a.base());
    for (int k = 0; k < Jet::coeff_count(m); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    check_same_base(a, b);
    int m = std::min(a.order(), b.order());
    Jet r(m, a.base());
    for (int k = 0; k < Jet::coeff_count(m); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    check_same_base(a, b);
    int m = std::min(a.order(), b.order());
    Jet r(m, a.base());
    for (int da = 0; da <= m; ++da) {
        for (int ja = 0; ja <= da; ++ja) {
            double ca = a.coeff(da - ja, ja);
            if (ca == 0.0) continue;
            for (int db = 0; db + da <= m; ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    double cb = b.coeff(db - jb, jb);
                    if (cb == 0.0) continue;
                    int i = (da - ja) + (db - jb), j = ja + jb;
                    r.c_[Jet::idx(i, j)] += ca * cb;
                }
            }
        }
    }
    return r;
}

Jet operator+(const Jet& a, double s) {
    Jet r = a;
    r.set_coeff(0, 0, r.value() + s);
    return r;
}

Jet operator*(const Jet& a, double s) {
    Jet r = a;
    for (int k = 0; k < Jet::coeff_count(r.order()); ++k) r.c_[k] *= s;
    return r;
}

Jet operator/(const Jet& a, double s) {
    if (s == 0.0) throw math_error(errc::zero_divisor, "division by scalar zero");
    return a * (1.0 / s);
}

Jet div(const Jet& a, const Jet& b, double unit_tol) {
    check_same_base(a, b);
    if (std::abs(b.value()) <= unit_tol)
        throw math_error(errc::zero_divisor, "divisor jet has (near-)zero value at base point");
    int m = std::min(a.order(), b.order());
    double inv0 = 1.0 / b.value();
    Jet r(m, a.base());
    // long division by total degree: c = (a - sum_{0<|k|<=d} b_k c_{d-k}) / b_0
    for (int d = 0; d <= m; ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            double acc = a.coeff(i, j);
            for (int db = 1; db <= d; ++db) {
                for (int jb = 0; jb <= db; ++jb) {
                    int ib = db - jb;
                    if (ib > i || jb > j) continue;
                    double cb = b.coeff(ib, jb);
                    if (cb == 0.0) continue;
                    acc -= cb * r.c_[Jet::idx(i - ib, j - jb)];
                }
            }
            r.c_[Jet::idx(i, j)] = acc * inv0;
        }
    }
    return r;
}

Jet operator/(double s, const Jet& b) {
    return div(Jet::constant(s, b.order(), b.base()), b);
}

Jet partial(const Jet& f, int direction) {
    if (f.order() < 1)
        throw math_error(errc::order_too_low, "partial derivative of an order-0 jet");
    int m = f.order() - 1;
    Jet r(m, f.base());
    for (int d = 0; d <= m; ++d) {
        for (int j = 0; j <= d; ++j) {
            int i = d - j;
            r.c_[Jet::idx(i, j)] = (direction == 1) ? (i + 1) * f.coeff(i + 1, j)
                                                    : (j + 1) * f.coeff(i, j + 1);
        }
    }
    return r;
}

namespace {

// f(u) for a jet u via the univariate Taylor series of f at u.value(),
// evaluated on (u - u0) with Horner over the jet ring.
Jet univariate(const Jet& u, const std::vector<double>& series) {
    Jet t = u;
    t.set_coeff(0, 0, 0.0);
    Jet acc = Jet::constant(series.back(), u.order(), u.base());
    for (int d = static_cast<int>(series.size()) - 2; d >= 0; --d)
        acc = acc * t + series[static_cast<std::size_t>(d)];
    return acc;
}

} // namespace

Jet exp(const Jet& f) {
    int m = f.order();
    std::vector<double> s(static_cast<std::size_t>(m) + 1);
    double e0 = std::exp(f.value());
    double fac = 1.0;
    for (int d = 0; d <= m; ++d) {
        if (d > 0) fac *= d;
        s[static_cast<std::size_t>(d)] = e0 / fac;
    }
    return univariate(f, s);
}

Jet log(const Jet& f) {
    double u0 = f.value();
    if (u0 <= 0.0) throw math_error(errc::domain_error, "log of non-positive jet value");
    int m = f.order();
    std::vector<double> s(static_cast<std::size_t>(m) + 1);
    s[0] = std::log(u0);
    double p = 1.0;
    for (int d = 1; d <= m; ++d) {
        p /= u0;
        s[static_cast<std::size_t>(d)] = ((d % 2 == 1) ? 1.0 : -1.0) * p / d;
    }
    return univariate(f, s);
}

Jet sin(const Jet& f) {
    double u0 = f.value();
    int m = f.order();
    std::vector<double> s(static_cast<std::size_t>(m) + 1);
    double cyc[4] = {std::sin(u0), std::cos(u0), -std::sin(u0), -std::cos(u0)};
    double fac = 1.0;
    for (int d = 0; d <= m; ++d) {
        if (d > 0) fac *= d;
        s[static_cast<std::size_t>(d)] = cyc[d % 4] / fac;
    }
    return univariate(f, s);
}

Jet cos(const Jet& f) {
    double u0 = f.value();
    int m = f.order();
    std::vector<double> s(static_cast<std::size_t>(m) + 1);
    double cyc[4] = {std::cos(u0), -std::sin(u0), -std::cos(u0), std::sin(u0)};
    double fac = 1.0;
    for (int d = 0; d <= m; ++d) {
        if (d > 0) fac *= d;
        s[static_cast<std::size_t>(d)] = cyc[d % 4] / fac;
    }
    return univariate(f, s);
}

Jet sqrt(const Jet& f) {
    double u0 = f.value();
    if (u0 <= 0.0) throw math_error(errc::domain_error, "sqrt of non-positive jet value");
    int m = f.order();
    std::vector<double> s(static_cast<std::size_t>(m) + 1);
    // binom(1/2, d) * u0^(1/2 - d)
    double base = std::sqrt(u0);
    double binom = 1.0;
    double upow = 1.0;
    for (int d = 0; d <= m; ++d) {
        if (d > 0) {
            binom *= (0.5 - (d - 1)) / d;
            upow *= u0;
        }
        s[static_cast<std::size_t>(d)] = binom * base / upow;
    }
    return univariate(f, s);
}

Jet pow(const Jet& f, int n, double unit_tol) {
    if (n == 0) return Jet::constant(1.0, f.order(), f.base());
    if (n < 0) return div(Jet::constant(1.0, f.order(), f.base()), pow(f, -n), unit_tol);
    Jet acc = f;
    for (int k = 1; k < n; ++k) acc = acc * f;
    return acc;
}

Jet pow(const Jet& f, double p) {
    double ip;
    if (std::modf(p, &ip) == 0.0 && std::abs(ip) < 64)
        return pow(f, static_cast<int>(ip));
    if (f.value() <= 0.0)
        throw math_error(errc::domain_error, "non-integer power of non-positive jet value");
    return exp(log(f) * p);
}

MapJet::MapJet(Jet fx, Jet fy) : fx_(std::move(fx)), fy_(std::move(fy)) {
    if (!(fx_.base() == fy_.base()) || fx_.order() != fy_.order())
        throw math_error(errc::base_mismatch, "map jet components disagree in base or order");
}

MapJet MapJet::identity(int order, Point base) {
    return MapJet(Jet::variable_x(order, base), Jet::variable_y(order, base));
}

std::array<double, 4> MapJet::linear() const {
    return {fx_.coeff(1, 0), fx_.coeff(0, 1), fy_.coeff(1, 0), fy_.coeff(0, 1)};
}

double MapJet::jacobian_det() const {
    auto l = linear();
    return l[0] * l[3] - l[1] * l[2];
}

bool MapJet::invertible(double tol) const { return std::abs(jacobian_det()) > tol; }

Jet compose(const Jet& f, const MapJet& phi) {
    Point v = phi.value();
    double scale = 1.0 + std::abs(v.x) + std::abs(v.y);
    if (std::abs(f.base().x - v.x) + std::abs(f.base().y - v.y) > 1e-8 * scale)
        throw math_error(errc::base_mismatch, "outer jet not based at the map's value point");
    int m = std::min(f.order(), phi.order());
    // substitute u = φ¹ - v.x, w = φ² - v.y (both valuation >= 1) into the
    // polynomial sum f_ij u^i w^j
    Jet u = phi.x().truncated(m);
    u.set_coeff(0, 0, 0.0);
    Jet w = phi.y().truncated(m);
    w.set_coeff(0, 0, 0.0);
    std::vector<Jet> upow, wpow;
    upow.reserve(static_cast<std::size_t>(m) + 1);
    wpow.reserve(static_cast<std::size_t>(m) + 1);
    upow.push_back(Jet::constant(1.0, m, phi.base()));
    wpow.push_back(upow[0]);
    for (int k = 1; k <= m; ++k) {
        upow.push_back(upow[static_cast<std::size_t>(k - 1)] * u);
        wpow.push_back(wpow[static_cast<std::size_t>(k - 1)] * w);
    }
    Jet acc(m, phi.base());
    for (int d = 0; d <= m; ++d) {
        for (int j = 0; j <= d; ++j) {
            double c = f.coeff(d - j, j);
            if (c == 0.0) continue;
            acc += upow[static_cast<std::size_t>(d - j)] * wpow[static_cast<std::size_t>(j)] * c;
        }
    }
    return acc;
}

MapJet compose(const MapJet& outer, const MapJet& inner) {
    return MapJet(compose(outer.x(), inner), compose(outer.y(), inner));
}

MapJet invert(const MapJet& phi, double tol) {
    auto l = phi.linear();
    double det = l[0] * l[3] - l[1] * l[2];
    if (std::abs(det) <= tol)
        throw math_error(errc::singular_linear_part, "map jet has singular linear part");
    int m = phi.order();
    Point q = phi.value();
    Point p = phi.base();
    double inv[4] = {l[3] / det, -l[1] / det, -l[2] / det, l[0] / det};

    Jet tx = Jet::variable_x(m, q) - q.x;
    Jet ty = Jet::variable_y(m, q) - q.y;
    // seed with the exact linear inverse
    Jet sx = Jet::constant(p.x, m, q) + tx * inv[0] + ty * inv[1];
    Jet sy = Jet::constant(p.y, m, q) + tx * inv[2] + ty * inv[3];
    for (int it = 0; it < m; ++it) {
        MapJet psi(sx, sy);
        Jet rx = tx + q.x - compose(phi.x(), psi); // residual in target coords
        Jet ry = ty + q.y - compose(phi.y(), psi);
        sx += rx * inv[0] + ry * inv[1];
        sy += rx * inv[2] + ry * inv[3];
    }
    return MapJet(sx, sy);
}

} // namespace dop4
