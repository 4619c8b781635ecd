#pragma once

#include <functional>
#include <vector>

#include "pathsig/path.hpp"
#include "pathsig/tensor.hpp"

namespace pathsig {

/// Truncated signature of a path. The constant term is always 1.
struct SignatureResult {
  TensorSeries series;

  int dim() const { return series.dim(); }
  int depth() const { return series.depth(); }
  double operator[](const Word& w) const { return series[w]; }
};

/// Exact truncated signature of a piecewise-linear path: the left fold of
/// segment exponentials under ⊗. Repeated rows are skipped.
SignatureResult signature(const PiecewisePath& path, int depth);

/// Iterated integral of `w` along `path` by a strictly ordered Riemann sum on
/// a uniform grid of `steps` cells over the path parameter. Converges at
/// O(1/steps). Independent of the tensor-algebra route; used as an oracle.
double signature_bruteforce(const PiecewisePath& path, const Word& w, int steps);

/// Samples `f` at `samples` uniform times on [a, b] and returns the signature
/// of the resulting polyline.
SignatureResult signature_of_sampled_function(const std::function<std::vector<double>(double)>& f,
                                              double a, double b, int samples, int depth);

/// X * Y: y translated to start where x ends, junction row not repeated.
PiecewisePath concat(const PiecewisePath& x, const PiecewisePath& y);

/// Rows in reverse order.
PiecewisePath time_reverse(const PiecewisePath& x);

/// ½(S(1,2) - S(2,1)) of a two-dimensional signature at depth >= 2.
double levy_area(const SignatureResult& s);

/// Resamples the trajectory at `samples` points spread uniformly in
/// arc-length, keeping every original vertex so the image is unchanged.
PiecewisePath reparametrize_uniform(const PiecewisePath& x, int samples);

}  // namespace pathsig
