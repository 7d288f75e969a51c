#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace spinchain {

using cdouble = std::complex<double>;

/// Crossing-parameter regime. RealEta keeps eta on the real axis;
/// EtaPlusIPi works at eta_plus + i*pi with eta_plus > 0.
enum class Regime { RealEta, EtaPlusIPi };

/// Thrown when an operation fails for numerical reasons (as opposed to
/// invalid arguments, which raise std::invalid_argument).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Model constants for the antiperiodic chain on two_n sites with
/// a = i*b and crossing parameter eta (or eta_plus + i*pi).
///
/// Couplings and the normalisation constants phi(2a), E0 are derived
/// once at construction.
class ModelParams {
  public:
    ModelParams(int two_n, double b, double eta, Regime regime = Regime::RealEta);

    int two_n() const { return two_n_; }
    int n() const { return two_n_ / 2; }
    long dim() const { return 1L << two_n_; }
    double b() const { return b_; }
    /// Real part of the crossing parameter (eta_plus in the shifted regime).
    double eta_real() const { return eta_; }
    Regime regime() const { return regime_; }
    /// Full complex crossing parameter: eta or eta + i*pi.
    cdouble eta() const;
    /// eta_plus = eta - i*pi in the shifted regime; equals eta_real().
    double eta_plus() const { return eta_; }
    cdouble a() const { return cdouble(0.0, b_); }

    // two-site couplings
    cdouble j1x() const { return j1x_; }
    cdouble j1z() const { return j1z_; }
    cdouble j2() const { return j2_; }
    cdouble j3x() const { return j3x_; }
    cdouble j3z() const { return j3z_; }

    /// phi(2a) = -sinh(2a+eta) sinh(2a-eta) / sinh^2(eta)
    cdouble phi2a() const { return phi2a_; }
    /// E0 = -N cosh(eta) [cosh^2(2a) - cosh(2eta)] / sinh^2(eta)
    cdouble e0() const { return e0_; }
    /// phi(u) from the unitarity relation.
    cdouble phi(cdouble u) const;

  private:
    int two_n_;
    double b_;
    double eta_;
    Regime regime_;
    cdouble j1x_, j1z_, j2_, j3x_, j3z_, phi2a_, e0_;
};

} // namespace spinchain
