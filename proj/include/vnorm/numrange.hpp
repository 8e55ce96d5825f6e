#pragma once

#include "vnorm/quadratic.hpp"

namespace vnorm {

// The numerical range W(V) is bounded by the curve
//   t -> ((1 - cos t)/t^2, +-(t - sin t)/t^2),  t in [0, 2*pi],
// closed off by the vertical segment x = 0, |y| <= 1/(2*pi). The Segment
// branch maps t in [0, 2*pi] linearly onto y in [-1/(2*pi), 1/(2*pi)].
enum class Branch { Upper, Lower, Segment };

ComplexScalar boundary_point(double t, Branch branch);

// h(theta) = sup { Re(e^{i theta} z) : z in W(V) } = sin(theta)/(2 theta).
double support_function(double theta);

struct MaxOnW {
  double value = 0.0;
  ComplexScalar argmax;
};

// Maximum of |c2 z^2 + c1 z + c0| over W(V) for real coefficients: sampled on
// the upper boundary curve (4096 points) and the upper half of the segment
// (1024 points) -- conjugation symmetry covers the rest -- then sharpened by
// golden-section search to parameter tolerance 1e-12.
MaxOnW max_abs_on_w(double c0, double c1, double c2);

struct CrouzeixReport {
  RealQuadPoly poly;
  double norm = 0.0;
  double max_on_w = 0.0;
  double ratio = 0.0;
  ComplexScalar argmax_z;
};

// ||p(V)|| / max_{W(V)} |p| for p(z) = z^2 + sigma z + tau.
CrouzeixReport crouzeix_ratio(const RealQuadPoly& p);

enum class RootsKind { RealPair, ConjugatePair };

// Coefficients of the monic quadratic with the given zeros: real pair
// (x1, x2) or conjugate pair a +- i b.
RealQuadPoly roots_to_coeffs(RootsKind kind, double u, double v);

}  // namespace vnorm
