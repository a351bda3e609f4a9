#include "regimefactor/critical_values.hpp"

#include <cmath>

#include "critical_values_raw.hpp"
#include "regimefactor/errors.hpp"

namespace regimefactor {

namespace {
const std::vector<double> kTrimmings = {0.05, 0.10, 0.15, 0.25};
const std::vector<double> kAlphas = {0.10, 0.05, 0.01};
const int kMaxBreaks[4] = {8, 8, 5, 3}; // feasibility caps per trimming
} // namespace

const CriticalValueTable& CriticalValueTable::builtin() {
  static const CriticalValueTable t(&kBuiltinCriticalValues);
  return t;
}

const std::vector<double>& CriticalValueTable::trimmings() const { return kTrimmings; }
const std::vector<double>& CriticalValueTable::alphas() const { return kAlphas; }

int CriticalValueTable::alpha_index(double alpha) const {
  for (size_t i = 0; i < kAlphas.size(); ++i)
    if (std::abs(alpha - kAlphas[i]) < 1e-12) return static_cast<int>(i);
  throw ValidationError("critical values: alpha " + std::to_string(alpha) +
                        " not tabulated (0.10, 0.05, 0.01)");
}

int CriticalValueTable::trim_index(double trimming) const {
  for (size_t i = 0; i < kTrimmings.size(); ++i)
    if (std::abs(trimming - kTrimmings[i]) < 1e-12) return static_cast<int>(i);
  throw ValidationError("critical values: trimming " + std::to_string(trimming) +
                        " not tabulated; use snap_trimming");
}

double CriticalValueTable::snap_trimming(double eps) const {
  if (!(eps > 0.0)) throw ValidationError("critical values: trimming must be positive");
  for (double t : kTrimmings)
    if (eps <= t + 1e-12) return t;
  throw ValidationError("critical values: no tabulated trimming >= " + std::to_string(eps));
}

int CriticalValueTable::max_breaks(double trimming) const {
  return kMaxBreaks[trim_index(trimming)];
}

namespace {
double checked(double v, const std::string& what) {
  if (std::isnan(v)) throw ValidationError("critical values: " + what + " not tabulated");
  return v;
}
} // namespace

double CriticalValueTable::sup_f(int nu, double trimming, double alpha, int l) const {
  if (nu < 1 || nu > max_nu())
    throw ValidationError("critical values: nu " + std::to_string(nu) + " outside 1..6");
  const int ti = trim_index(trimming);
  if (l < 1 || l > kMaxBreaks[ti])
    throw ValidationError("critical values: supF with l = " + std::to_string(l) +
                          " not tabulated at trimming " + std::to_string(trimming));
  return checked(raw_->supf[ti][nu - 1][alpha_index(alpha)][l - 1], "supF cell");
}

double CriticalValueTable::udmax(int nu, double trimming, double alpha) const {
  if (nu < 1 || nu > max_nu()) throw ValidationError("critical values: nu outside 1..6");
  return checked(raw_->ud[trim_index(trimming)][nu - 1][alpha_index(alpha)], "UDmax cell");
}

double CriticalValueTable::wdmax(int nu, double trimming, double alpha) const {
  if (nu < 1 || nu > max_nu()) throw ValidationError("critical values: nu outside 1..6");
  return checked(raw_->wd[trim_index(trimming)][nu - 1][alpha_index(alpha)], "WDmax cell");
}

double CriticalValueTable::sequential(int nu, double trimming, double alpha,
                                      int null_breaks) const {
  if (nu < 1 || nu > max_nu()) throw ValidationError("critical values: nu outside 1..6");
  if (null_breaks < 0 || null_breaks >= Raw::kL)
    throw ValidationError("critical values: sequential null count " +
                          std::to_string(null_breaks) + " outside 0..7");
  return checked(raw_->seq[trim_index(trimming)][nu - 1][alpha_index(alpha)][null_breaks],
                 "sequential cell");
}

} // namespace regimefactor
