#include "qem/curvature.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace qem {

namespace {

// numerator of 2 g_kk Gamma^k_ij and its first/second derivatives
inline double gamma_num(const MetricJet& mj, int k, int i, int j) {
    double u = 0;
    if (k == j) u += mj.dg[k][i];
    if (k == i) u += mj.dg[k][j];
    if (i == j) u -= mj.dg[i][k];
    return u;
}

inline double gamma_num_d(const MetricJet& mj, int k, int i, int j, int a) {
    double u = 0;
    if (k == j) u += mj.ddg[k][i][a];
    if (k == i) u += mj.ddg[k][j][a];
    if (i == j) u -= mj.ddg[i][k][a];
    return u;
}

inline double gamma_num_dd(const MetricJet& mj, int k, int i, int j, int a, int b) {
    double u = 0;
    if (k == j) u += mj.dddg[k][i][a][b];
    if (k == i) u += mj.dddg[k][j][a][b];
    if (i == j) u -= mj.dddg[i][k][a][b];
    return u;
}

}  // namespace

Christoffel christoffel_from_jet(const MetricJet& mj) {
    Christoffel G{};
    for (int k = 0; k < mj.dim; ++k)
        for (int i = 0; i < mj.dim; ++i)
            for (int j = i; j < mj.dim; ++j) {
                double v = gamma_num(mj, k, i, j) / (2.0 * mj.g[k]);
                G[k][i][j] = v;
                G[k][j][i] = v;
            }
    return G;
}

void dchristoffel_from_jet(const MetricJet& mj,
                           double dG[kMaxDim][kMaxDim][kMaxDim][kMaxDim]) {
    const Christoffel G = christoffel_from_jet(mj);
    for (int a = 0; a < mj.dim; ++a)
        for (int k = 0; k < mj.dim; ++k)
            for (int i = 0; i < mj.dim; ++i)
                for (int j = i; j < mj.dim; ++j) {
                    const double v = 2.0 * mj.g[k];
                    const double va = 2.0 * mj.dg[k][a];
                    const double ua = gamma_num_d(mj, k, i, j, a);
                    double d = (ua - G[k][i][j] * va) / v;
                    dG[a][k][i][j] = d;
                    dG[a][k][j][i] = d;
                }
}

namespace {

// second partials d_a d_b Gamma^k_ij; needs the order-3 tower
void ddchristoffel_from_jet(const MetricJet& mj,
                            const Christoffel& G,
                            const double dG[kMaxDim][kMaxDim][kMaxDim][kMaxDim],
                            double ddG[kMaxDim][kMaxDim][kMaxDim][kMaxDim][kMaxDim]) {
    for (int a = 0; a < mj.dim; ++a)
        for (int b = 0; b < mj.dim; ++b)
            for (int k = 0; k < mj.dim; ++k)
                for (int i = 0; i < mj.dim; ++i)
                    for (int j = i; j < mj.dim; ++j) {
                        const double v = 2.0 * mj.g[k];
                        const double va = 2.0 * mj.dg[k][a];
                        const double vb = 2.0 * mj.dg[k][b];
                        const double vab = 2.0 * mj.ddg[k][a][b];
                        const double uab = gamma_num_dd(mj, k, i, j, a, b);
                        double d = (uab - dG[b][k][i][j] * va - G[k][i][j] * vab -
                                    dG[a][k][i][j] * vb) /
                                   v;
                        ddG[a][b][k][i][j] = d;
                        ddG[a][b][k][j][i] = d;
                    }
}

}  // namespace

CurvatureData curvature_from_jet(const MetricJet& mj) {
    if (mj.order < 2)
        throw Error(ErrorCode::Capability, "curvature needs a second-order metric jet");
    CurvatureData out;
    out.dim = mj.dim;
    out.christoffel = christoffel_from_jet(mj);
    double dG[kMaxDim][kMaxDim][kMaxDim][kMaxDim];
    dchristoffel_from_jet(mj, dG);
    const auto& G = out.christoffel;
    for (int i = 0; i < mj.dim; ++i)
        for (int j = 0; j < mj.dim; ++j)
            for (int k = 0; k < mj.dim; ++k)
                for (int l = 0; l < mj.dim; ++l) {
                    double s = dG[i][l][j][k] - dG[j][l][i][k];
                    for (int m = 0; m < mj.dim; ++m)
                        s += G[m][j][k] * G[l][i][m] - G[m][i][k] * G[l][j][m];
                    out.riemann[i][j][k][l] = mj.g[l] * s;
                }
    for (int j = 0; j < mj.dim; ++j)
        for (int k = 0; k < mj.dim; ++k) {
            double s = 0;
            for (int i = 0; i < mj.dim; ++i) s += out.riemann[i][j][k][i] / mj.g[i];
            out.ricci[j][k] = s;
        }
    for (int j = 0; j < mj.dim; ++j) out.scalar += out.ricci[j][j] / mj.g[j];
    return out;
}

CurvatureDeriv curvature_deriv_from_jet(const MetricJet& mj) {
    if (mj.order < 3)
        throw Error(ErrorCode::Capability,
                    "curvature derivatives need a third-order metric jet");
    CurvatureDeriv out;
    out.dim = mj.dim;
    const Christoffel G = christoffel_from_jet(mj);
    static thread_local double dG[kMaxDim][kMaxDim][kMaxDim][kMaxDim];
    static thread_local double ddG[kMaxDim][kMaxDim][kMaxDim][kMaxDim][kMaxDim];
    dchristoffel_from_jet(mj, dG);
    ddchristoffel_from_jet(mj, G, dG, ddG);

    // Ricci from the contraction R_jk = sum_i g^ii R_ijki with
    // R_ijkl = g_ll S^l_ijk; differentiate the whole expression
    double Rm[kMaxDim][kMaxDim][kMaxDim][kMaxDim];
    for (int i = 0; i < mj.dim; ++i)
        for (int j = 0; j < mj.dim; ++j)
            for (int k = 0; k < mj.dim; ++k)
                for (int l = 0; l < mj.dim; ++l) {
                    double s = dG[i][l][j][k] - dG[j][l][i][k];
                    for (int m = 0; m < mj.dim; ++m)
                        s += G[m][j][k] * G[l][i][m] - G[m][i][k] * G[l][j][m];
                    Rm[i][j][k][l] = mj.g[l] * s;
                }
    // in the contraction R_jk = sum_i g^ii R_ijki the g_ii factors cancel, so
    // R_jk = sum_i S^i_ijk and d_a R_jk = sum_i d_a S^i_ijk
    for (int a = 0; a < mj.dim; ++a) {
        for (int j = 0; j < mj.dim; ++j)
            for (int k = 0; k < mj.dim; ++k) {
                double acc = 0;
                for (int i = 0; i < mj.dim; ++i) {
                    double ds = ddG[a][i][i][j][k] - ddG[a][j][i][i][k];
                    for (int m = 0; m < mj.dim; ++m)
                        ds += dG[a][m][j][k] * G[i][i][m] + G[m][j][k] * dG[a][i][i][m] -
                              dG[a][m][i][k] * G[i][j][m] - G[m][i][k] * dG[a][i][j][m];
                    acc += ds;
                }
                out.dricci[a][j][k] = acc;
            }
        double dsc = 0;
        for (int j = 0; j < mj.dim; ++j) {
            // scalar = sum_j R_jj / g_jj
            double rjj = 0;
            for (int i = 0; i < mj.dim; ++i) rjj += Rm[i][j][j][i] / mj.g[i];
            dsc += out.dricci[a][j][j] / mj.g[j] - rjj * mj.dg[j][a] / (mj.g[j] * mj.g[j]);
        }
        out.dscalar[a] = dsc;
    }
    return out;
}

void riemann_via_second_derivs(const MetricJet& mj,
                               double R[kMaxDim][kMaxDim][kMaxDim][kMaxDim]) {
    const Christoffel G = christoffel_from_jet(mj);
    for (int i = 0; i < mj.dim; ++i)
        for (int j = 0; j < mj.dim; ++j)
            for (int k = 0; k < mj.dim; ++k)
                for (int l = 0; l < mj.dim; ++l) {
                    double dd = 0;
                    if (j == l) dd += mj.ddg[j][i][k];
                    if (i == k) dd += mj.ddg[i][j][l];
                    if (j == k) dd -= mj.ddg[j][i][l];
                    if (i == l) dd -= mj.ddg[i][j][k];
                    double gg = 0;
                    for (int m = 0; m < mj.dim; ++m)
                        gg += mj.g[m] * (G[m][i][k] * G[m][j][l] - G[m][i][l] * G[m][j][k]);
                    R[i][j][k][l] = 0.5 * dd + gg;
                }
}

Christoffel christoffel_symbols(const DiagonalMetric& metric, const Point& p) {
    metric.require_inside(p);
    return christoffel_from_jet(metric.jet(p, 1));
}

CurvatureData curvature(const DiagonalMetric& metric, const Point& p) {
    metric.require_inside(p);
    return curvature_from_jet(metric.jet(p, 2));
}

Sym2 hessian(const ScalarField& field, const DiagonalMetric& metric, const Point& p) {
    metric.require_inside(p);
    const Christoffel G = christoffel_from_jet(metric.jet(p, 1));
    std::array<double, kMaxDim> dw{};
    for (int a = 0; a < metric.dim(); ++a) {
        MultiIndex mi{};
        mi[a] = 1;
        dw[a] = field.partial(p, mi);
    }
    Sym2 H{};
    for (int i = 0; i < metric.dim(); ++i)
        for (int j = i; j < metric.dim(); ++j) {
            MultiIndex mi{};
            mi[i] += 1;
            mi[j] += 1;
            double v = field.partial(p, mi);
            for (int k = 0; k < metric.dim(); ++k) v -= G[k][i][j] * dw[k];
            H[i][j] = v;
            H[j][i] = v;
        }
    return H;
}

EigenReport ricci_eigenstructure(const DiagonalMetric& metric, const Point& p, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::Argument, "eigen tolerance must be positive");
    const CurvatureData cd = curvature(metric, p);
    const MetricJet mj = metric.jet(p, 0);
    const int n = metric.dim();
    Eigen::MatrixXd B(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B(i, j) = cd.ricci[i][j] / std::sqrt(mj.g[i] * mj.g[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
    EigenReport rep;
    rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);

    // group eigenvalues within tol, accumulate eigenvector weight per axis
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && rep.eigenvalues[end] - rep.eigenvalues[end - 1] < tol) ++end;
        rep.multiplicities.push_back(end - start);
        std::vector<int> axes;
        for (int a = 0; a < n; ++a) {
            double wgt = 0;
            for (int v = start; v < end; ++v) wgt += es.eigenvectors()(a, v) * es.eigenvectors()(a, v);
            if (wgt > 0.5) axes.push_back(a);
        }
        rep.axes.push_back(std::move(axes));
        start = end;
    }
    rep.distinct.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rep.distinct[i][j] = std::abs(rep.eigenvalues[i] - rep.eigenvalues[j]) >= tol;
    return rep;
}

namespace {

double eval_component(const DiagonalMetric& metric, int i, Point p) { return metric.component(i).eval(p); }

}  // namespace

MetricJet fd_metric_jet(const DiagonalMetric& metric, const Point& p, double h) {
    MetricJet mj;
    mj.dim = metric.dim();
    mj.order = 2;
    static const double c1[4] = {1.0, -8.0, 8.0, -1.0};
    static const double o1[4] = {-2.0, -1.0, 1.0, 2.0};
    for (int i = 0; i < mj.dim; ++i) {
        mj.g[i] = eval_component(metric, i, p);
        if (mj.g[i] <= 0.0)
            throw Error(ErrorCode::MetricDegenerate, "nonpositive metric component");
        for (int a = 0; a < mj.dim; ++a) {
            double s = 0;
            for (int t = 0; t < 4; ++t) {
                Point q = p;
                q[a] += o1[t] * h;
                s += c1[t] * eval_component(metric, i, q);
            }
            mj.dg[i][a] = s / (12 * h);
        }
        for (int a = 0; a < mj.dim; ++a) {
            // same-axis second derivative
            double s = -30.0 * mj.g[i];
            static const double c2[4] = {-1.0, 16.0, 16.0, -1.0};
            for (int t = 0; t < 4; ++t) {
                Point q = p;
                q[a] += o1[t] * h;
                s += c2[t] * eval_component(metric, i, q);
            }
            mj.ddg[i][a][a] = s / (12 * h * h);
            for (int b = a + 1; b < mj.dim; ++b) {
                double m = 0;
                for (int t = 0; t < 4; ++t)
                    for (int u = 0; u < 4; ++u) {
                        Point q = p;
                        q[a] += o1[t] * h;
                        q[b] += o1[u] * h;
                        m += c1[t] * c1[u] * eval_component(metric, i, q);
                    }
                m /= 144 * h * h;
                mj.ddg[i][a][b] = m;
                mj.ddg[i][b][a] = m;
            }
        }
    }
    return mj;
}

double fd_cross_check(const DiagonalMetric& metric, const Point& p, double h) {
    metric.require_inside(p);
    if (!(metric.chart().boundary_distance(p) > 2 * h))
        throw Error(ErrorCode::Domain, "finite-difference stencil leaves the chart");
    const CurvatureData cd = curvature(metric, p);
    const MetricJet fd = fd_metric_jet(metric, p, h);
    double Rfd[kMaxDim][kMaxDim][kMaxDim][kMaxDim];
    riemann_via_second_derivs(fd, Rfd);
    double worst = 0;
    for (int i = 0; i < metric.dim(); ++i)
        for (int j = 0; j < metric.dim(); ++j)
            for (int k = 0; k < metric.dim(); ++k)
                for (int l = 0; l < metric.dim(); ++l)
                    worst = std::max(worst, std::abs(cd.riemann[i][j][k][l] - Rfd[i][j][k][l]));
    return worst;
}

}  // namespace qem
