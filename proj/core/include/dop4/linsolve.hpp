#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dop4/errors.hpp"
#include "dop4/jet.hpp"

namespace dop4 {

/// Dense LU with partial pivoting over a commutative ring with unit
/// division, generic in the scalar. Pivots are chosen by the magnitude of
/// the scalar's constant part, so jets factor over the local ring: the
/// constant terms see ordinary Gaussian elimination and the higher Taylor
/// coefficients ride through the same divisions.
template <class S>
class LinearSystem {
public:
    LinearSystem(int n, S zero) : n_(n), a_(static_cast<std::size_t>(n * n), zero) {}

    S& at(int r, int c) { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    const S& at(int r, int c) const { return a_[static_cast<std::size_t>(r * n_ + c)]; }
    int size() const { return n_; }

    /// Solve A x = b. Throws SingularSystem when no acceptable pivot
    /// exists (largest candidate constant part <= pivot_tol).
    std::vector<S> solve(std::vector<S> b, double pivot_tol = 1e-10) const {
        auto a = a_;
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) perm[static_cast<std::size_t>(i)] = i;

        auto entry = [&](int r, int c) -> S& {
            return a[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)] * n_ + c)];
        };
        auto rhs = [&](int r) -> S& { return b[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])]; };

        for (int col = 0; col < n_; ++col) {
            int best = -1;
            double best_mag = pivot_tol;
            for (int r = col; r < n_; ++r) {
                double m = std::abs(constant_part(entry(r, col)));
                if (m > best_mag) { best_mag = m; best = r; }
            }
            if (best < 0)
                throw math_error(errc::singular_system, "no acceptable pivot in column " + std::to_string(col));
            std::swap(perm[static_cast<std::size_t>(col)], perm[static_cast<std::size_t>(best)]);
            const S& piv = entry(col, col);
            for (int r = col + 1; r < n_; ++r) {
                S factor = ring_div(entry(r, col), piv, pivot_tol);
                for (int c = col + 1; c < n_; ++c) entry(r, c) -= factor * entry(col, c);
                rhs(r) -= factor * rhs(col);
            }
        }
        std::vector<S> x(static_cast<std::size_t>(n_), b[0] * 0.0);
        for (int r = n_ - 1; r >= 0; --r) {
            S acc = rhs(r);
            for (int c = r + 1; c < n_; ++c) acc -= entry(r, c) * x[static_cast<std::size_t>(c)];
            x[static_cast<std::size_t>(r)] = ring_div(acc, entry(r, r), pivot_tol);
        }
        return x;
    }

    /// Determinant value (constant part) via the same elimination; returns
    /// 0 when the factorization hits a sub-tolerance pivot.
    double det_value(double pivot_tol = 1e-14) const {
        std::vector<double> a(static_cast<std::size_t>(n_ * n_));
        for (int i = 0; i < n_ * n_; ++i) a[static_cast<std::size_t>(i)] = constant_part(a_[static_cast<std::size_t>(i)]);
        double det = 1.0;
        for (int col = 0; col < n_; ++col) {
            int best = col;
            for (int r = col + 1; r < n_; ++r)
                if (std::abs(a[static_cast<std::size_t>(r * n_ + col)]) >
                    std::abs(a[static_cast<std::size_t>(best * n_ + col)]))
                    best = r;
            if (std::abs(a[static_cast<std::size_t>(best * n_ + col)]) <= pivot_tol) return 0.0;
            if (best != col) {
                for (int c = 0; c < n_; ++c)
                    std::swap(a[static_cast<std::size_t>(col * n_ + c)], a[static_cast<std::size_t>(best * n_ + c)]);
                det = -det;
            }
            double piv = a[static_cast<std::size_t>(col * n_ + col)];
            det *= piv;
            for (int r = col + 1; r < n_; ++r) {
                double f = a[static_cast<std::size_t>(r * n_ + col)] / piv;
                for (int c = col + 1; c < n_; ++c)
                    a[static_cast<std::size_t>(r * n_ + c)] -= f * a[static_cast<std::size_t>(col * n_ + c)];
            }
        }
        return det;
    }

private:
    static double ring_div(double a, double b, double) { return a / b; }
    static Jet ring_div(const Jet& a, const Jet& b, double tol) {
        try {
            return div(a, b, tol);
        } catch (const math_error&) {
            throw math_error(errc::non_unit_pivot, "jet pivot is not a unit");
        }
    }

    int n_;
    std::vector<S> a_;
};

} // namespace dop4
