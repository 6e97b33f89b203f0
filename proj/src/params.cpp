#include "zmeasure/params.hpp"

#include <cmath>
#include <sstream>

#include "zmeasure/errors.hpp"

namespace zmeasure {

namespace {

constexpr double kConjTol = 1e-12;

bool is_integer(double v) { return v == std::round(v); }

// Checks that (sign z)_k (sign z')_k is real and positive for k <= K, tracking
// only the phase of the running product so large |z| cannot overflow.
void check_pochhammer_positivity(Complex z, Complex zp, double sign, const char* label) {
  Complex phase = 1.0;
  for (int j = 0; j < kAdmissibilityCheckTerms; ++j) {
    const Complex f = (sign * z + static_cast<double>(j)) * (sign * zp + static_cast<double>(j));
    phase *= f / std::abs(f);
    if (std::abs(phase.imag()) > 1e-9 || phase.real() <= 0.0) {
      std::ostringstream os;
      os << "admissibility: " << label << " is not positive at k = " << j + 1;
      throw AdmissibilityError(os.str());
    }
  }
}

}  // namespace

const char* admissibility_rules() {
  return "Admissible parameters (z, z'):\n"
         "  (a) z' = conj(z) and z is not an integer, or\n"
         "  (b) z, z' real and m < z, z' < m + 1 for one integer m.\n"
         "Then t = z z' > 0 and (z)_k (z')_k, (-z)_k (-z')_k > 0 for k >= 1.\n"
         "The mixing parameter xi must satisfy 0 < xi < 1.\n";
}

ZParams::ZParams(Complex z, Complex zp) : z_(z), zp_(zp) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(zp.real()) ||
      !std::isfinite(zp.imag())) {
    throw AdmissibilityError("admissibility: parameters must be finite");
  }
  const bool both_real = z.imag() == 0.0 && zp.imag() == 0.0;
  if (both_real) {
    if (is_integer(z.real()) || is_integer(zp.real())) {
      throw AdmissibilityError("admissibility (b): real z and z' must not be integers");
    }
    if (std::floor(z.real()) != std::floor(zp.real())) {
      throw AdmissibilityError("admissibility (b): real z and z' must lie in the same interval (m, m+1)");
    }
  } else {
    if (std::abs(zp - std::conj(z)) > kConjTol * std::max(1.0, std::abs(z))) {
      throw AdmissibilityError("admissibility (a): complex parameters require z' = conj(z)");
    }
    zp_ = std::conj(z);
  }
  check_pochhammer_positivity(z_, zp_, 1.0, "(z)_k (z')_k");
  check_pochhammer_positivity(z_, zp_, -1.0, "(-z)_k (-z')_k");
  t_ = realize(z_ * zp_);
  s_ = realize(z_ + zp_);
  if (!(t_ > 0.0)) throw AdmissibilityError("admissibility: t = z z' must be positive");
}

ZParams ZParams::meixner(int n_points, double alpha) {
  if (n_points < 1) throw DomainError("meixner mode needs N >= 1");
  if (!(alpha > -1.0)) throw DomainError("meixner mode needs alpha > -1");
  ZParams p;
  p.z_ = static_cast<double>(n_points) + alpha;
  p.zp_ = static_cast<double>(n_points);
  p.t_ = p.z_.real() * p.zp_.real();
  p.s_ = p.z_.real() + p.zp_.real();
  p.meixner_ = true;
  if (!(p.t_ > 0.0)) throw DomainError("meixner mode needs N + alpha > 0");
  return p;
}

std::string ZParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "z=" << z_.real();
  if (z_.imag() != 0.0) os << (z_.imag() >= 0 ? "+" : "") << z_.imag() << "i";
  os << " z'=" << zp_.real();
  if (zp_.imag() != 0.0) os << (zp_.imag() >= 0 ? "+" : "") << zp_.imag() << "i";
  return os.str();
}

GrandParams::GrandParams(ZParams zp, double xi) : zp_(std::move(zp)), xi_(xi) {
  if (!(xi > 0.0 && xi < 1.0)) throw AdmissibilityError("admissibility: xi must satisfy 0 < xi < 1");
}

}  // namespace zmeasure
