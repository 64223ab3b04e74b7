#include "qem/metric.hpp"

namespace qem {

MetricJet DiagonalMetric::jet(const Point& p, int order) const {
    if (order < 0 || order > 3)
        throw Error(ErrorCode::Capability, "metric jet order must be 0..3");
    MetricJet mj;
    mj.dim = dim();
    mj.order = order;
    for (int i = 0; i < dim(); ++i) {
        FieldJet fj = components_[i].jet(p, dim());
        MultiIndex mi{};
        mj.g[i] = fj.partial(mi);
        if (mj.g[i] <= 0.0)
            throw Error(ErrorCode::MetricDegenerate, "nonpositive metric component");
        if (order >= 1) {
            for (int a = 0; a < dim(); ++a) {
                mi = MultiIndex{};
                mi[a] = 1;
                mj.dg[i][a] = fj.partial(mi);
            }
        }
        if (order >= 2) {
            for (int a = 0; a < dim(); ++a)
                for (int b = a; b < dim(); ++b) {
                    mi = MultiIndex{};
                    mi[a] += 1;
                    mi[b] += 1;
                    double v = fj.partial(mi);
                    mj.ddg[i][a][b] = v;
                    mj.ddg[i][b][a] = v;
                }
        }
        if (order >= 3) {
            for (int a = 0; a < dim(); ++a)
                for (int b = a; b < dim(); ++b)
                    for (int c = b; c < dim(); ++c) {
                        mi = MultiIndex{};
                        mi[a] += 1;
                        mi[b] += 1;
                        mi[c] += 1;
                        double v = fj.partial(mi);
                        mj.dddg[i][a][b][c] = v;
                        mj.dddg[i][a][c][b] = v;
                        mj.dddg[i][b][a][c] = v;
                        mj.dddg[i][b][c][a] = v;
                        mj.dddg[i][c][a][b] = v;
                        mj.dddg[i][c][b][a] = v;
                    }
        }
    }
    return mj;
}

}  // namespace qem
