#include "dop4/quartic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>

namespace dop4 {

double factored_discriminant(const QuadForm& f, FactoredKind kind) {
    double a0 = f.a0, a1 = f.a1, a2 = f.a2;
    if (kind == FactoredKind::real)
        return a0 * a0 * a2 * a2 * (a1 * a1 - a0 * a2) / 64.0;
    double s = 4.0 * a1 * a1 + (a0 - a2) * (a0 - a2);
    return s * s * (a0 * a2 - a1 * a1) / 16.0;
}

RootClass classify_roots(const Quartic& q, double cluster_tol) {
    double norm = q.norm();
    if (norm == 0.0) throw math_error(errc::zero_quartic, "root classification of the zero quartic");

    // fiber polynomial in t = px/py with raw coefficients
    double raw[5] = {q.a0, 4.0 * q.a1, 6.0 * q.a2, 4.0 * q.a3, q.a4};
    double lead_tol = 1e-12 * std::max({std::abs(raw[0]), std::abs(raw[1]), std::abs(raw[2]),
                                        std::abs(raw[3]), std::abs(raw[4])});

    int inf_mult = 0;
    while (inf_mult < 4 && std::abs(raw[inf_mult]) <= lead_tol) ++inf_mult;

    int deg = 4 - inf_mult;
    std::vector<std::complex<double>> roots;
    double root_scale = 1.0;
    if (deg > 0) {
        Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -raw[inf_mult + deg - i] / raw[inf_mult];
        Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
        for (int i = 0; i < deg; ++i) {
            std::complex<double> z = es.eigenvalues()(i);
            roots.push_back(z);
            root_scale = std::max(root_scale, std::abs(z));
        }
    }

    // cluster finite roots
    double radius = cluster_tol * root_scale;
    std::vector<int> cluster(roots.size(), -1);
    std::vector<std::complex<double>> centers;
    std::vector<int> mult;
    std::vector<bool> real_cluster;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        int found = -1;
        for (std::size_t c = 0; c < centers.size(); ++c)
            if (std::abs(roots[i] - centers[c]) <= radius) { found = static_cast<int>(c); break; }
        if (found < 0) {
            centers.push_back(roots[i]);
            mult.push_back(1);
            real_cluster.push_back(std::abs(roots[i].imag()) <= radius);
        } else {
            ++mult[static_cast<std::size_t>(found)];
        }
    }
    if (inf_mult > 0) {
        centers.emplace_back(0.0, 0.0); // placeholder; infinity is a real projective root
        mult.push_back(inf_mult);
        real_cluster.push_back(true);
    }

    bool degenerate = false;
    for (int m : mult)
        if (m > 1) degenerate = true;

    RootClass rc;
    if (degenerate) {
        rc.kind = RootClass::Kind::degenerate;
        rc.multiplicities = mult;
        std::sort(rc.multiplicities.begin(), rc.multiplicities.end(), std::greater<int>());
        return rc;
    }
    int n_real = 0;
    for (std::size_t c = 0; c < centers.size(); ++c)
        if (real_cluster[c]) n_real += mult[c];
    // complex roots of a real polynomial pair up, so n_real is 0, 2, or 4
    if (n_real >= 3) rc.kind = RootClass::Kind::four_real_distinct;
    else if (n_real >= 1) rc.kind = RootClass::Kind::two_real_two_complex;
    else rc.kind = RootClass::Kind::four_complex_distinct;
    return rc;
}

} // namespace dop4
