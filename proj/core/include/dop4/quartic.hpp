#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "dop4/jet.hpp"

namespace dop4 {

inline double constant_part(double v) { return v; }
inline double constant_part(const Jet& j) { return j.value(); }

/// Binary quartic in the binomial normalization: the fiber polynomial is
/// a0 px^4 + 4 a1 px^3 py + 6 a2 px^2 py^2 + 4 a3 px py^3 + a4 py^4.
/// Tensor components: a^1111 = a0, a^1112 = a1, a^1122 = a2, a^1222 = a3,
/// a^2222 = a4. S is double or Jet.
template <class S>
struct QuarticT {
    S a0, a1, a2, a3, a4;

    const S& operator[](int i) const { return i == 0 ? a0 : i == 1 ? a1 : i == 2 ? a2 : i == 3 ? a3 : a4; }
    S& operator[](int i) { return i == 0 ? a0 : i == 1 ? a1 : i == 2 ? a2 : i == 3 ? a3 : a4; }

    double norm() const {
        double m = 0.0;
        for (int i = 0; i < 5; ++i) m = std::max(m, std::abs(constant_part((*this)[i])));
        return m;
    }
};

using Quartic = QuarticT<double>;
using QuarticJet = QuarticT<Jet>;

/// Quadratic factor α0 ∂x² + 2 α1 ∂x·∂y + α2 ∂y².
template <class S>
struct QuadFormT {
    S a0, a1, a2;
};

using QuadForm = QuadFormT<double>;

template <class S>
struct Mat2T {
    S a, b, c, d; // row-major [[a, b], [c, d]]
    S det() const { return a * d - b * c; }
};

using LinearMap2 = Mat2T<double>;

// Hilbert's relative invariants of the binary quartic.
template <class S>
S hilbert_i2(const QuarticT<S>& q) {
    return q.a0 * q.a4 - 4.0 * (q.a1 * q.a3) + 3.0 * (q.a2 * q.a2);
}

template <class S>
S hilbert_i3(const QuarticT<S>& q) {
    return q.a0 * q.a2 * q.a4 - q.a0 * (q.a3 * q.a3) - (q.a1 * q.a1) * q.a4 +
           2.0 * (q.a1 * q.a2 * q.a3) - q.a2 * q.a2 * q.a2;
}

/// I2^3 - 27 I3^2. Positive: four distinct real or four distinct complex
/// roots; negative: two distinct real and a complex pair; zero: multiple
/// roots. Equals the classical discriminant of the fiber polynomial / 256.
template <class S>
S discriminant(const QuarticT<S>& q) {
    S i2 = hilbert_i2(q), i3 = hilbert_i3(q);
    return i2 * i2 * i2 - 27.0 * (i3 * i3);
}

/// The absolute invariant I0 = I3^2 / I2^3, unchanged under every
/// invertible linear substitution. Throws PoleAtI2Zero when |I2| <= tol
/// at the (base) point.
template <class S>
S absolute_invariant(const QuarticT<S>& q, double i2_tol = 1e-10) {
    S i2 = hilbert_i2(q), i3 = hilbert_i3(q);
    if (std::abs(constant_part(i2)) <= i2_tol)
        throw math_error(errc::pole_at_i2_zero, "absolute invariant undefined where I2 vanishes");
    S num = i3 * i3;
    S den = i2 * i2 * i2;
    if constexpr (std::is_same_v<S, double>)
        return num / den;
    else
        return div(num, den, 0.0);
}

/// ∂x·∂y·(α0 ∂x² + 2 α1 ∂x·∂y + α2 ∂y²) in binomial components.
template <class S>
QuarticT<S> from_factored_real(const QuadFormT<S>& f) {
    return {f.a0 * 0.0, f.a0 * 0.25, f.a1 * (1.0 / 3.0), f.a2 * 0.25, f.a0 * 0.0};
}

/// (∂x² + ∂y²)·(α0 ∂x² + 2 α1 ∂x·∂y + α2 ∂y²) in binomial components.
template <class S>
QuarticT<S> from_factored_complex(const QuadFormT<S>& f) {
    return {f.a0, f.a1 * 0.5, (f.a0 + f.a2) * (1.0 / 6.0), f.a1 * 0.5, f.a2};
}

enum class FactoredKind { real, complex };

/// Closed-form discriminant of a factored symbol. The real case uses the
/// corrected factor (α1² − α0 α2); the widely quoted variant with
/// (9α1² − 16α0α2) fails the double-root configuration α0=α1=α2 and is
/// not used.
double factored_discriminant(const QuadForm& f, FactoredKind kind);

/// Coefficients of the degree-k symmetric power action: the fiber
/// polynomial with raw coefficients s_β (β over (k,0), (k-1,1), ..., (0,k))
/// is rewritten after substituting basis vector e_1 -> m.a e_1' + m.c e_2',
/// e_2 -> m.b e_1' + m.d e_2' (columns of m are the images).
template <class S>
std::vector<S> sym_transform(int degree, const std::vector<S>& s, const Mat2T<S>& m) {
    // binomial table
    std::vector<std::vector<double>> binom(static_cast<std::size_t>(degree) + 1);
    for (int n = 0; n <= degree; ++n) {
        binom[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int r = 0; r <= n; ++r)
            binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] =
                (r == 0 || r == n)
                    ? 1.0
                    : binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r - 1)] +
                          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r)];
    }
    std::vector<S> out(static_cast<std::size_t>(degree) + 1, s[0] * 0.0);
    // powers of the two image vectors: (m.a u + m.c v)^p expanded
    for (int j = 0; j <= degree; ++j) { // s index: e1^(degree-j) e2^j
        int p = degree - j;
        // expand (a u + c v)^p (b u + d v)^j
        for (int r = 0; r <= p; ++r) {
            for (int t = 0; t <= j; ++t) {
                // u^(r+t) v^(p-r + j-t)
                S term = s[static_cast<std::size_t>(j)] *
                         (binom[static_cast<std::size_t>(p)][static_cast<std::size_t>(r)] *
                          binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]);
                for (int k = 0; k < r; ++k) term = term * m.a;
                for (int k = 0; k < p - r; ++k) term = term * m.c;
                for (int k = 0; k < t; ++k) term = term * m.b;
                for (int k = 0; k < j - t; ++k) term = term * m.d;
                int vdeg = (p - r) + (j - t);
                out[static_cast<std::size_t>(vdeg)] += term;
            }
        }
    }
    return out;
}

namespace detail {
inline const double kBinom4[5] = {1.0, 4.0, 6.0, 4.0, 1.0};
}

/// Pushforward of the quartic under an invertible linear map on the
/// tangent space (degree-4 symmetric power action on the components).
template <class S>
QuarticT<S> act(const Mat2T<S>& m, const QuarticT<S>& q) {
    double scale = 0.0;
    for (double v : {constant_part(m.a), constant_part(m.b), constant_part(m.c), constant_part(m.d)})
        scale = std::max(scale, std::abs(v));
    if (std::abs(constant_part(m.det())) <= 1e-14 * std::max(1.0, scale * scale))
        throw math_error(errc::singular_linear_part, "group action by a singular map");
    std::vector<S> raw(5, q.a0 * 0.0);
    for (int i = 0; i < 5; ++i) raw[static_cast<std::size_t>(i)] = q[i] * detail::kBinom4[i];
    auto out = sym_transform(4, raw, m);
    QuarticT<S> r = q;
    for (int i = 0; i < 5; ++i) r[i] = out[static_cast<std::size_t>(i)] * (1.0 / detail::kBinom4[i]);
    return r;
}

struct RootClass {
    enum class Kind { four_real_distinct, two_real_two_complex, four_complex_distinct, degenerate };
    Kind kind;
    std::vector<int> multiplicities; // descending; nonempty only when degenerate
};

/// Projective root structure of the fiber polynomial via eigenvalues of
/// the companion matrix of the dehomogenized quartic; a vanishing leading
/// block is treated as a (real) root at infinity. cluster_tol is the
/// relative clustering radius.
RootClass classify_roots(const Quartic& q, double cluster_tol = 1e-7);

} // namespace dop4
