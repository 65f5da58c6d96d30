#pragma once

// Equation of state, entropy and transport coefficients of the
// magnetised gas. Pressure and internal energy are built from a single
// structural function P(Z), Z = rho / theta^{3/2}, plus a radiation
// part; the entropy is built from S(Z) with S'(Z) tied to P through
// Gibbs' relation.

#include <memory>
#include <utility>

namespace obmhd::thermo {

struct GasParams {
  double p_inf = 1.0;
  double a = 0.0;
  double s0 = 0.0;
  double mu_low = 0.05;
  double mu_high = 0.05;
  double eta_high = 0.0;
  double kappa_low = 0.05;
  double kappa_high = 0.05;
  double beta = 3.0;
  double zeta_low = 0.05;
  double zeta_high = 0.05;

  /// Throws ConfigError when a constant violates its admissibility range.
  void validate() const;
};

struct ReferenceState {
  double rho_bar = 1.0;
  double theta_bar = 1.0;
  double b_bar = 1.0;

  void validate() const;
};

struct ThermoPoint {
  double rho;
  double theta;
};

/// The structural pair (P, S) behind the molecular pressure and entropy.
class StructuralFunction {
public:
  virtual ~StructuralFunction() = default;
  virtual double P(double z) const = 0;
  virtual double dP(double z) const = 0;
  virtual double S(double z) const = 0;
  virtual double dS(double z) const = 0;
};

/// P(Z) = Z + p_inf Z^{5/3}, S(Z) = s0 - log Z.
class PowerLawStructural final : public StructuralFunction {
public:
  PowerLawStructural(double p_inf, double s0) : p_inf_(p_inf), s0_(s0) {}
  double P(double z) const override;
  double dP(double z) const override;
  double S(double z) const override;
  double dS(double z) const override;

private:
  double p_inf_;
  double s0_;
};

/// Wraps another structural function and multiplies S by a constant
/// factor. Any factor other than one breaks Gibbs' relation; used to
/// exercise the consistency checks.
class TamperedEntropy final : public StructuralFunction {
public:
  TamperedEntropy(std::shared_ptr<const StructuralFunction> base, double factor)
      : base_(std::move(base)), factor_(factor) {}
  double P(double z) const override { return base_->P(z); }
  double dP(double z) const override { return base_->dP(z); }
  double S(double z) const override { return factor_ * base_->S(z); }
  double dS(double z) const override { return factor_ * base_->dS(z); }

private:
  std::shared_ptr<const StructuralFunction> base_;
  double factor_;
};

/// Structural P evaluated directly from the gas constants.
double structural_P(double z, const GasParams& params);

class Eos {
public:
  explicit Eos(const GasParams& params);
  Eos(const GasParams& params, std::shared_ptr<const StructuralFunction> structural);

  const GasParams& params() const { return params_; }
  const StructuralFunction& structural() const { return *structural_; }

  double pressure(ThermoPoint pt) const;
  double molecular_pressure(ThermoPoint pt) const;
  double internal_energy(ThermoPoint pt) const;
  double molecular_energy(ThermoPoint pt) const;
  double entropy(ThermoPoint pt) const;

  /// rho*e and rho*s; defined at vacuum (rho = 0).
  double energy_density(ThermoPoint pt) const;
  double entropy_density(ThermoPoint pt) const;

  double dp_drho(ThermoPoint pt) const;
  double dp_dtheta(ThermoPoint pt) const;
  double de_drho(ThermoPoint pt) const;
  double de_dtheta(ThermoPoint pt) const;
  double ds_drho(ThermoPoint pt) const;
  double ds_dtheta(ThermoPoint pt) const;

  /// (|theta s_theta - e_theta|, |theta s_rho - (e_rho - p/rho^2)|).
  std::pair<double, double> gibbs_residual(ThermoPoint pt) const;

  /// Adiabatic sound speed squared, p_rho + theta p_theta^2 / (rho^2 e_theta).
  double sound_speed_sq(ThermoPoint pt) const;

private:
  GasParams params_;
  std::shared_ptr<const StructuralFunction> structural_;
};

struct ExpansionCoefficients {
  double alpha;
  double cp;
};

/// Thermal expansion coefficient and specific heat at constant pressure
/// at the reference state.
ExpansionCoefficients alpha_cp(const ReferenceState& ref, const Eos& eos);

/// Linearised thermodynamic coefficients at the reference state.
struct ReferenceCoefficients {
  double dp_drho;
  double dp_dtheta;
  double de_dtheta;
  double ds_drho;
  double ds_dtheta;
  double alpha;
  double cp;
};

ReferenceCoefficients reference_coefficients(const ReferenceState& ref, const Eos& eos);

/// The two coefficients multiplying the mean-temperature drift in the
/// relative-energy balance; they cancel for a consistent EOS.
std::pair<double, double> drift_coefficients(const ReferenceState& ref, const Eos& eos);

/// (kappa/c_p) (s_rho p_theta / p_rho - s_theta) and -kappa/theta_bar.
std::pair<double, double> conduction_coefficients(const ReferenceState& ref, const Eos& eos);

double mu(double theta, const GasParams& params);
double eta(double theta, const GasParams& params);
double kappa(double theta, const GasParams& params);
double zeta(double theta, const GasParams& params);

double mu_prime(double theta, const GasParams& params);
double eta_prime(double theta, const GasParams& params);
double kappa_prime(double theta, const GasParams& params);
double zeta_prime(double theta, const GasParams& params);

}  // namespace obmhd::thermo
