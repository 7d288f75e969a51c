#include "spinchain/model_params.hpp"

#include <cmath>
#include <numbers>

namespace spinchain {

ModelParams::ModelParams(int two_n, double b, double eta, Regime regime)
    : two_n_(two_n), b_(b), eta_(eta), regime_(regime) {
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("two_n must be even and >= 4, got " + std::to_string(two_n));
    if (two_n > 14)
        throw std::invalid_argument("two_n > 14 exceeds dense desk scale");
    if (regime == Regime::RealEta) {
        if (eta <= 0.0) throw std::invalid_argument("RealEta regime requires eta > 0");
    } else {
        if (eta <= 0.0) throw std::invalid_argument("EtaPlusIPi regime requires eta_plus > 0");
        if (b <= 0.0 || b >= std::numbers::pi / 2)
            throw std::invalid_argument("EtaPlusIPi regime requires b in (0, pi/2)");
    }

    const cdouble e = this->eta();
    const cdouble a = this->a();
    const cdouble sh = std::sinh(e);
    j1x_ = std::cosh(2.0 * a);
    j1z_ = std::cosh(e);
    j2_ = -std::sinh(2.0 * a) * std::sinh(2.0 * a) * std::cosh(e) / (2.0 * sh * sh);
    j3x_ = cdouble(0, 1) * std::sinh(2.0 * a) * std::cosh(e) / (2.0 * sh);
    j3z_ = cdouble(0, 1) * std::sinh(4.0 * a) / (4.0 * sh);
    phi2a_ = phi(2.0 * a);
    e0_ = -double(n()) * std::cosh(e) * (std::cosh(2.0 * a) * std::cosh(2.0 * a) - std::cosh(2.0 * e)) / (sh * sh);
}

cdouble ModelParams::eta() const {
    if (regime_ == Regime::RealEta) return cdouble(eta_, 0.0);
    return cdouble(eta_, std::numbers::pi);
}

cdouble ModelParams::phi(cdouble u) const {
    const cdouble e = eta();
    const cdouble sh = std::sinh(e);
    return -std::sinh(u + e) * std::sinh(u - e) / (sh * sh);
}

} // namespace spinchain
