#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "pathsig/embeddings.hpp"
#include "pathsig/features.hpp"
#include "pathsig/lyndon.hpp"
#include "pathsig/signature.hpp"

namespace py = pybind11;
using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

namespace {

pathsig::PiecewisePath to_path(const Array& a) {
  if (a.ndim() != 2) throw std::invalid_argument("path must be a 2-d array of shape (N, d)");
  if (a.shape(0) < 1 || a.shape(1) < 1) throw std::invalid_argument("path must have at least one row and one column");
  std::vector<double> flat(a.data(), a.data() + a.size());
  return pathsig::PiecewisePath(static_cast<int>(a.shape(1)), std::move(flat));
}

std::vector<double> to_values(const Array& a) {
  if (a.ndim() != 1) throw std::invalid_argument("stream must be a 1-d array");
  std::vector<double> v(a.data(), a.data() + a.size());
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument("stream contains non-finite values");
  }
  return v;
}

py::array_t<double> from_vector(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::array_t<double> from_path(const pathsig::PiecewisePath& p) {
  py::array_t<double> out({static_cast<py::ssize_t>(p.num_points()), static_cast<py::ssize_t>(p.dim())});
  std::copy(p.data().begin(), p.data().end(), out.mutable_data());
  return out;
}

py::array_t<double> sig(const Array& path, int depth) {
  const auto p = to_path(path);
  std::vector<double> coeffs;
  {
    py::gil_scoped_release release;
    const auto s = pathsig::signature(p, depth);
    coeffs.assign(s.series.coeffs().begin(), s.series.coeffs().end());
  }
  return from_vector(coeffs);
}

py::array_t<double> logsig(const Array& path, int depth) {
  const auto p = to_path(path);
  std::vector<double> coords;
  {
    py::gil_scoped_release release;
    coords = pathsig::log_signature_coords(pathsig::signature(p, depth)).coords;
  }
  return from_vector(coords);
}

py::array_t<double> leadlag(const Array& values) {
  const auto v = to_values(values);
  if (v.empty()) throw std::invalid_argument("stream is empty");
  std::optional<pathsig::PiecewisePath> p;
  {
    py::gil_scoped_release release;
    p = pathsig::lead_lag(v);
  }
  return from_path(*p);
}

py::array_t<double> cumsum_bp(const Array& values) {
  const auto v = to_values(values);
  std::vector<double> out;
  {
    py::gil_scoped_release release;
    out = pathsig::cumsum_basepoint(v);
  }
  return from_vector(out);
}

py::tuple features(const std::vector<Array>& streams, int depth, const std::string& embedding, bool log,
                   bool standardize, std::optional<std::vector<int>> labels) {
  const auto e = pathsig::parse_embedding(embedding);
  if (!e) throw std::invalid_argument("unknown embedding '" + embedding + "'");
  std::vector<pathsig::Stream> ss;
  ss.reserve(streams.size());
  for (const auto& a : streams) ss.push_back(pathsig::Stream{to_values(a), std::nullopt});
  pathsig::FeatureConfig cfg;
  cfg.embedding = *e;
  cfg.depth = depth;
  cfg.log_signature = log;
  cfg.standardize = standardize;
  std::optional<pathsig::FeatureMatrix> fm;
  {
    py::gil_scoped_release release;
    fm = pathsig::build_feature_matrix(ss, cfg, std::move(labels));
  }
  py::array_t<double> x({static_cast<py::ssize_t>(fm->rows.rows()), static_cast<py::ssize_t>(fm->rows.cols())});
  auto m = x.mutable_unchecked<2>();
  for (Eigen::Index i = 0; i < fm->rows.rows(); ++i)
    for (Eigen::Index j = 0; j < fm->rows.cols(); ++j) m(i, j) = fm->rows(i, j);
  py::object y = py::none();
  if (fm->labels) y = py::array_t<int>(static_cast<py::ssize_t>(fm->labels->size()), fm->labels->data());
  return py::make_tuple(x, fm->columns, y);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated path signatures and signature features";

  m.def("sig", &sig, py::arg("path"), py::arg("depth"),
        "Signature of an (N, d) piecewise-linear path, level-major, constant term first.");
  m.def("logsig", &logsig, py::arg("path"), py::arg("depth"),
        "Log signature in the Lyndon basis, graded order.");
  m.def("leadlag", &leadlag, py::arg("values"), "Lead-lag path of a 1-d stream, shape (2n-1, 2), rows (lag, lead).");
  m.def("cumsum_bp", &cumsum_bp, py::arg("values"), "Cumulative sum with a leading zero.");
  m.def("features", &features, py::arg("streams"), py::arg("depth") = 2, py::arg("embedding") = "cumsum-leadlag",
        py::arg("log") = false, py::arg("standardize") = false, py::arg("labels") = py::none(),
        "Feature matrix of a list of 1-d streams. Returns (matrix, column names, labels or None).");
}
