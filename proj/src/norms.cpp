#include "matineq/norms.hpp"

#include <algorithm>
#include <cmath>

#include "matineq/eig.hpp"

namespace matineq {

namespace {
constexpr double kSvNoiseFloor = 1e-13;  // relative to s_1

std::vector<double> clean_singular_values(const Matrix& a) {
    auto sv = singular_values(a).values;
    if (!sv.empty()) {
        const double floor = kSvNoiseFloor * sv.front();
        for (auto& s : sv)
            if (s < floor) s = 0.0;
    }
    return sv;
}
}  // namespace

std::string NormKind::to_string() const {
    switch (tag) {
        case Tag::HilbertSchmidt: return "hs";
        case Tag::Operator: return "op";
        case Tag::Schatten: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "schatten:%g", p);
            return buf;
        }
        case Tag::KyFan: return "kyfan:" + std::to_string(k);
    }
    return "hs";
}

std::optional<NormKind> NormKind::parse(const std::string& s) {
    if (s == "hs") return hilbert_schmidt();
    if (s == "op") return op();
    if (s.rfind("schatten:", 0) == 0) {
        try {
            const double p = std::stod(s.substr(9));
            if (p >= 1.0) return schatten(p);
        } catch (...) {}
        return std::nullopt;
    }
    if (s.rfind("kyfan:", 0) == 0) {
        try {
            const long k = std::stol(s.substr(6));
            if (k >= 1) return ky_fan(static_cast<std::size_t>(k));
        } catch (...) {}
        return std::nullopt;
    }
    return std::nullopt;
}

double norm(const Matrix& a, const NormKind& kind) {
    if (kind.tag == NormKind::Tag::HilbertSchmidt) return std::sqrt(hs_norm_sq(a));
    const auto sv = clean_singular_values(a);
    switch (kind.tag) {
        case NormKind::Tag::Operator:
            return sv.empty() ? 0.0 : sv.front();
        case NormKind::Tag::Schatten: {
            double s = 0.0;
            for (double v : sv) s += std::pow(v, kind.p);
            return std::pow(s, 1.0 / kind.p);
        }
        case NormKind::Tag::KyFan: {
            if (kind.k < 1 || kind.k > sv.size())
                throw KOutOfRange("ky fan k exceeds min dimension");
            double s = 0.0;
            for (std::size_t j = 0; j < kind.k; ++j) s += sv[j];
            return s;
        }
        default: return 0.0;
    }
}

double hs_norm_sq(const Matrix& a) {
    double s = 0.0;
    for (const auto& v : a.data()) s += std::norm(v);
    return s;
}

bool fan_dominance_leq(const Matrix& a, const Matrix& b, double tol) {
    const auto sa = clean_singular_values(a);
    const auto sb = clean_singular_values(b);
    if (sa.size() != sb.size()) throw DimensionMismatch("fan dominance min-dimension mismatch");
    double pa = 0.0, pb = 0.0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        const double scale = std::max({1.0, pa, pb});
        if (pa > pb + tol * scale) return false;
    }
    return true;
}

std::vector<NormKind> norm_test_family(std::size_t n) {
    std::vector<NormKind> fam;
    for (std::size_t k = 1; k <= n; ++k) fam.push_back(NormKind::ky_fan(k));
    for (double p : {1.0, 1.5, 2.0, 3.0}) fam.push_back(NormKind::schatten(p));
    fam.push_back(NormKind::op());
    fam.push_back(NormKind::hilbert_schmidt());
    return fam;
}

}  // namespace matineq
