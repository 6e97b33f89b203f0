#pragma once

#include <string>

#include "zmeasure/specfun.hpp"

namespace zmeasure {

// Admissible pair (z, z'): either z' = conj(z) with z not an integer, or both
// real inside one open unit interval (m, m + 1). Then (z)_k (z')_k > 0 and
// (-z)_k (-z')_k > 0 for all k >= 1 and t = z z' > 0.
class ZParams {
 public:
  // Throws AdmissibilityError naming the violated condition.
  ZParams(Complex z, Complex zp);

  // Degenerate pair z = N + alpha, z' = N used by the Meixner reduction. It
  // skips the admissibility check; only quantities of the "+" side are
  // guaranteed meaningful.
  static ZParams meixner(int n_points, double alpha);

  Complex z() const { return z_; }
  Complex zp() const { return zp_; }
  double t() const { return t_; }    // z z'
  double sum() const { return s_; }  // z + z' (always real)
  bool complex_pair() const { return z_.imag() != 0.0; }
  bool meixner_mode() const { return meixner_; }

  std::string describe() const;

 private:
  ZParams() = default;
  Complex z_;
  Complex zp_;
  double t_ = 0.0;
  double s_ = 0.0;
  bool meixner_ = false;
};

class GrandParams {
 public:
  GrandParams(ZParams zp, double xi);

  const ZParams& zp() const { return zp_; }
  double xi() const { return xi_; }
  double t() const { return zp_.t(); }

 private:
  ZParams zp_;
  double xi_;
};

// Text printed by the CLI when parameters are rejected.
const char* admissibility_rules();

inline constexpr int kAdmissibilityCheckTerms = 50;

}  // namespace zmeasure
