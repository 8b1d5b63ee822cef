#include "vcell/richardson.hpp"

#include "vcell/errors.hpp"

namespace vcell {

BigReal interpolate_at_zero(const std::vector<BigReal>& h, const std::vector<BigReal>& v) {
    // Neville tableau evaluated at 0
    std::vector<BigReal> p = v;
    size_t m = h.size();
    for (size_t k = 1; k < m; ++k)
        for (size_t i = 0; i + k < m; ++i) p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
    return p[0];
}

namespace {

BigReal window(const std::vector<BigReal>& n, const std::vector<BigReal>& v, size_t end, int order) {
    std::vector<BigReal> h, w;
    for (size_t i = end - static_cast<size_t>(order) - 1; i < end; ++i) {
        h.push_back(BigReal(1) / n[i]);
        w.push_back(v[i]);
    }
    return interpolate_at_zero(h, w);
}

}  // namespace

Extrapolation richardson(const std::vector<BigReal>& n, const std::vector<BigReal>& v, const RichardsonConfig& cfg) {
    if (n.size() != v.size()) throw DomainError("richardson: size mismatch");
    if (cfg.order < 1) throw DomainError("richardson: order must be positive");
    size_t need = std::max<size_t>(static_cast<size_t>(cfg.min_points), static_cast<size_t>(cfg.order) + 3);
    if (n.size() < need) throw ConvergenceError("insufficient data for extrapolation");
    size_t end = n.size();
    Extrapolation out;
    out.value = window(n, v, end, cfg.order);
    BigReal lower = window(n, v, end, cfg.order - 1);
    BigReal shifted = window(n, v, end - 1, cfg.order);
    out.error = max(abs(out.value - lower), abs(out.value - shifted));
    out.points_used = cfg.order + 1;
    return out;
}

}  // namespace vcell
