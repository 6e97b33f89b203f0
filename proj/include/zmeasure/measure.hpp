#pragma once

// z-measures on partitions of n, the negative binomial mixing weight, the
// mixed (grand canonical) measure and the Plancherel limit.

#include <vector>

#include "zmeasure/params.hpp"
#include "zmeasure/partition.hpp"

namespace zmeasure {

// log M^(n)_{z,z'}(lambda), accumulated in log space. Throws
// AdmissibilityError for Meixner-mode parameters.
double log_z_measure_n(const YoungDiagram& lambda, const ZParams& zp);
double z_measure_n(const YoungDiagram& lambda, const ZParams& zp);

double log_neg_binomial_weight(int n, double t, double xi);
double neg_binomial_weight(int n, double t, double xi);
// Certified upper bound on sum_{n > n_max} pi_{t,xi}(n) from the ratio test.
double neg_binomial_tail_bound(int n_max, double t, double xi);

// Product of the two factors M(lambda) * pi(|lambda|).
double mixed_measure_factored(const YoungDiagram& lambda, const GrandParams& gp);
// Direct product formula (1 - xi)^t xi^|lambda| t^d prod(...) det^2.
double mixed_measure_direct(const YoungDiagram& lambda, const GrandParams& gp);
// Both routes; throws PrecisionError if they differ by more than 1e-10 relative.
double mixed_measure(const YoungDiagram& lambda, const GrandParams& gp);

double plancherel_measure(const YoungDiagram& lambda);

// Exhaustive kernels over Y_n. The OpenMP versions and the serial references
// return bitwise identical results.
std::vector<double> z_measures(const std::vector<YoungDiagram>& diagrams, const ZParams& zp);
std::vector<double> z_measures_serial(const std::vector<YoungDiagram>& diagrams, const ZParams& zp);
double total_mass(int n, const ZParams& zp);
double total_mass_serial(int n, const ZParams& zp);

}  // namespace zmeasure
