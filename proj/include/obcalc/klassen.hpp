#pragma once

#include <complex>
#include <vector>

namespace obcalc::klassen {

/// p(z, t) = (z^2 - 1/4)/|z^2 - 1/4| * e^{2 pi i t} on the unit disk minus
/// the binding punctures +-1/2.
std::complex<double> fibration_value(double x, double y, double t);

struct SlicePoint {
    double x, y, t;
    double residual;  // |fibration_value - 1|
};

struct SliceReport {
    double t = 0;
    std::vector<SlicePoint> points;
    int component_count = 0;
    double max_residual = 0;
};

/// Samples the page cross section {p(z, t) = 1} at one level. Every emitted
/// point has residual < 1e-9.
SliceReport cross_section(double t, int n_samples);

/// Connected components of the sampled slice. Traced curve pieces are glued
/// along the antipodal boundary identification; the saddle crossing at the
/// critical level does not merge pieces. A numeric proxy at the given
/// resolution (>= 64).
int component_count(double t, int resolution);

/// Max Hausdorff-type deviation between the page-F_s slice at level t and
/// the page-F_0 slice at level (t - s) mod 1.
double translation_check(double s, double t, int n_samples);

}  // namespace obcalc::klassen
