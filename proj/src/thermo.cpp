#include "obmhd/thermo.hpp"

#include <cmath>
#include <string>

#include "obmhd/error.hpp"

namespace obmhd::thermo {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

void check_density(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw DomainError("density must be positive, got " + std::to_string(rho));
  }
}

void check_temperature(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw DomainError("temperature must be positive, got " + std::to_string(theta));
  }
}

void check_admissible(ThermoPoint pt) {
  check_temperature(pt.theta);
  if (!(pt.rho >= 0.0) || !std::isfinite(pt.rho)) {
    throw DomainError("density must be nonnegative, got " + std::to_string(pt.rho));
  }
}

void check_transport_arg(double theta) {
  if (!(theta >= 0.0) || !std::isfinite(theta)) {
    throw DomainError("transport coefficients need theta >= 0, got " + std::to_string(theta));
  }
}

double z_of(ThermoPoint pt) { return pt.rho / std::pow(pt.theta, 1.5); }

}  // namespace

void GasParams::validate() const {
  const double all[] = {p_inf, a, s0, mu_low, mu_high, eta_high, kappa_low,
                        kappa_high, beta, zeta_low, zeta_high};
  for (double v : all) require(std::isfinite(v), "gas constants must be finite");
  require(p_inf > 0.0, "p_inf must be positive");
  require(a >= 0.0, "radiation constant a must be nonnegative");
  require(mu_low > 0.0 && mu_low <= mu_high, "need 0 < mu_low <= mu_high");
  require(eta_high >= 0.0, "eta_high must be nonnegative");
  require(kappa_low > 0.0 && kappa_low <= kappa_high, "need 0 < kappa_low <= kappa_high");
  require(beta > 0.0, "beta must be positive");
  require(zeta_low > 0.0 && zeta_low <= zeta_high, "need 0 < zeta_low <= zeta_high");
}

void ReferenceState::validate() const {
  require(std::isfinite(rho_bar) && rho_bar > 0.0, "rho_bar must be positive");
  require(std::isfinite(theta_bar) && theta_bar > 0.0, "theta_bar must be positive");
  require(std::isfinite(b_bar), "b_bar must be finite");
}

double PowerLawStructural::P(double z) const { return z + p_inf_ * std::pow(z, 5.0 / 3.0); }

double PowerLawStructural::dP(double z) const {
  return 1.0 + (5.0 / 3.0) * p_inf_ * std::cbrt(z * z);
}

double PowerLawStructural::S(double z) const { return s0_ - std::log(z); }

double PowerLawStructural::dS(double z) const { return -1.0 / z; }

double structural_P(double z, const GasParams& params) {
  if (!(z >= 0.0)) throw DomainError("structural function needs Z >= 0");
  return PowerLawStructural(params.p_inf, params.s0).P(z);
}

Eos::Eos(const GasParams& params)
    : Eos(params, std::make_shared<PowerLawStructural>(params.p_inf, params.s0)) {}

Eos::Eos(const GasParams& params, std::shared_ptr<const StructuralFunction> structural)
    : params_(params), structural_(std::move(structural)) {}

double Eos::molecular_pressure(ThermoPoint pt) const {
  check_admissible(pt);
  return std::pow(pt.theta, 2.5) * structural_->P(z_of(pt));
}

double Eos::pressure(ThermoPoint pt) const {
  const double t2 = pt.theta * pt.theta;
  return molecular_pressure(pt) + params_.a / 3.0 * t2 * t2;
}

double Eos::energy_density(ThermoPoint pt) const {
  const double t2 = pt.theta * pt.theta;
  return 1.5 * molecular_pressure(pt) + params_.a * t2 * t2;
}

double Eos::molecular_energy(ThermoPoint pt) const {
  check_density(pt.rho);
  return 1.5 * molecular_pressure(pt) / pt.rho;
}

double Eos::internal_energy(ThermoPoint pt) const {
  check_density(pt.rho);
  return energy_density(pt) / pt.rho;
}

double Eos::entropy(ThermoPoint pt) const {
  check_density(pt.rho);
  check_temperature(pt.theta);
  return structural_->S(z_of(pt)) + 4.0 * params_.a / 3.0 * pt.theta * pt.theta * pt.theta / pt.rho;
}

double Eos::entropy_density(ThermoPoint pt) const {
  check_admissible(pt);
  if (pt.rho == 0.0) return 4.0 * params_.a / 3.0 * pt.theta * pt.theta * pt.theta;
  return pt.rho * entropy(pt);
}

double Eos::dp_drho(ThermoPoint pt) const {
  check_admissible(pt);
  return pt.theta * structural_->dP(z_of(pt));
}

double Eos::dp_dtheta(ThermoPoint pt) const {
  check_admissible(pt);
  const double z = z_of(pt);
  return 2.5 * std::pow(pt.theta, 1.5) * structural_->P(z) - 1.5 * pt.rho * structural_->dP(z) +
         4.0 * params_.a / 3.0 * pt.theta * pt.theta * pt.theta;
}

double Eos::de_drho(ThermoPoint pt) const {
  check_density(pt.rho);
  check_temperature(pt.theta);
  const double z = z_of(pt);
  const double r2 = pt.rho * pt.rho;
  const double t4 = pt.theta * pt.theta * pt.theta * pt.theta;
  return 1.5 * pt.theta * structural_->dP(z) / pt.rho -
         1.5 * std::pow(pt.theta, 2.5) * structural_->P(z) / r2 - params_.a * t4 / r2;
}

double Eos::de_dtheta(ThermoPoint pt) const {
  check_density(pt.rho);
  check_temperature(pt.theta);
  const double z = z_of(pt);
  const double molecular = 2.5 * std::pow(pt.theta, 1.5) * structural_->P(z) - 1.5 * pt.rho * structural_->dP(z);
  return (1.5 * molecular + 4.0 * params_.a * pt.theta * pt.theta * pt.theta) / pt.rho;
}

double Eos::ds_drho(ThermoPoint pt) const {
  check_density(pt.rho);
  check_temperature(pt.theta);
  return structural_->dS(z_of(pt)) / std::pow(pt.theta, 1.5) -
         4.0 * params_.a / 3.0 * pt.theta * pt.theta * pt.theta / (pt.rho * pt.rho);
}

double Eos::ds_dtheta(ThermoPoint pt) const {
  check_density(pt.rho);
  check_temperature(pt.theta);
  return -1.5 * structural_->dS(z_of(pt)) * pt.rho / std::pow(pt.theta, 2.5) +
         4.0 * params_.a * pt.theta * pt.theta / pt.rho;
}

std::pair<double, double> Eos::gibbs_residual(ThermoPoint pt) const {
  const double thermal = std::abs(pt.theta * ds_dtheta(pt) - de_dtheta(pt));
  const double mechanical =
      std::abs(pt.theta * ds_drho(pt) - (de_drho(pt) - pressure(pt) / (pt.rho * pt.rho)));
  return {thermal, mechanical};
}

double Eos::sound_speed_sq(ThermoPoint pt) const {
  const double pt_ = dp_dtheta(pt);
  return dp_drho(pt) + pt.theta * pt_ * pt_ / (pt.rho * pt.rho * de_dtheta(pt));
}

ReferenceCoefficients reference_coefficients(const ReferenceState& ref, const Eos& eos) {
  const ThermoPoint pt{ref.rho_bar, ref.theta_bar};
  ReferenceCoefficients c{};
  c.dp_drho = eos.dp_drho(pt);
  c.dp_dtheta = eos.dp_dtheta(pt);
  c.de_dtheta = eos.de_dtheta(pt);
  c.ds_drho = eos.ds_drho(pt);
  c.ds_dtheta = eos.ds_dtheta(pt);
  c.alpha = c.dp_dtheta / (ref.rho_bar * c.dp_drho);
  c.cp = c.de_dtheta + ref.theta_bar * c.alpha / ref.rho_bar * c.dp_dtheta;
  return c;
}

ExpansionCoefficients alpha_cp(const ReferenceState& ref, const Eos& eos) {
  const auto c = reference_coefficients(ref, eos);
  return {c.alpha, c.cp};
}

std::pair<double, double> drift_coefficients(const ReferenceState& ref, const Eos& eos) {
  const auto c = reference_coefficients(ref, eos);
  const double first = -c.alpha * c.de_dtheta / c.cp;
  const double second = -(ref.rho_bar * c.ds_drho / c.dp_dtheta) *
                        (1.0 - ref.theta_bar * c.alpha * c.dp_dtheta / (ref.rho_bar * c.cp)) *
                        (c.dp_dtheta / c.dp_drho);
  return {first, second};
}

std::pair<double, double> conduction_coefficients(const ReferenceState& ref, const Eos& eos) {
  const auto c = reference_coefficients(ref, eos);
  const double k = kappa(ref.theta_bar, eos.params());
  const double lhs = k / c.cp * (c.ds_drho * c.dp_dtheta / c.dp_drho - c.ds_dtheta);
  return {lhs, -k / ref.theta_bar};
}

double mu(double theta, const GasParams& params) {
  check_transport_arg(theta);
  return params.mu_low * (1.0 + theta);
}

double eta(double theta, const GasParams&) {
  check_transport_arg(theta);
  return 0.0;
}

double kappa(double theta, const GasParams& params) {
  check_transport_arg(theta);
  return params.kappa_low * (1.0 + std::pow(theta, params.beta));
}

double zeta(double theta, const GasParams& params) {
  check_transport_arg(theta);
  return params.zeta_low * (1.0 + theta);
}

double mu_prime(double theta, const GasParams& params) {
  check_transport_arg(theta);
  return params.mu_low;
}

double eta_prime(double theta, const GasParams&) {
  check_transport_arg(theta);
  return 0.0;
}

double kappa_prime(double theta, const GasParams& params) {
  check_transport_arg(theta);
  return params.kappa_low * params.beta * std::pow(theta, params.beta - 1.0);
}

double zeta_prime(double theta, const GasParams& params) {
  check_transport_arg(theta);
  return params.zeta_low;
}

}  // namespace obmhd::thermo
