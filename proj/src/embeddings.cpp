#include "pathsig/embeddings.hpp"

#include <cmath>
#include <stdexcept>

namespace pathsig {
namespace {

void require_nonempty(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": empty stream");
}

void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

}  // namespace

std::vector<double> Stream::resolved_times() const {
  if (!times) {
    std::vector<double> t(values.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i);
    return t;
  }
  if (times->size() != values.size()) {
    throw std::invalid_argument("Stream: times and values differ in length");
  }
  for (std::size_t i = 1; i < times->size(); ++i) {
    if (!((*times)[i] > (*times)[i - 1])) {
      throw std::invalid_argument("Stream: times must be strictly increasing");
    }
  }
  return *times;
}

PiecewisePath embed_linear(const Stream& s) {
  require_nonempty(s.values.size(), "embed_linear");
  const auto t = s.resolved_times();
  std::vector<double> flat;
  flat.reserve(2 * t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    flat.push_back(t[i]);
    flat.push_back(s.values[i]);
  }
  return PiecewisePath(2, std::move(flat));
}

PiecewisePath embed_rectilinear(const Stream& s) {
  require_nonempty(s.values.size(), "embed_rectilinear");
  return axis_path(embed_linear(s));
}

PiecewisePath axis_path(const PiecewisePath& points) {
  const auto d = static_cast<std::size_t>(points.dim());
  std::vector<double> flat(points.point(0).begin(), points.point(0).end());
  std::vector<double> cur = flat;
  for (std::size_t i = 1; i < points.num_points(); ++i) {
    auto next = points.point(i);
    for (std::size_t k = 0; k < d; ++k) {
      cur[k] = next[k];
      flat.insert(flat.end(), cur.begin(), cur.end());
    }
  }
  return PiecewisePath(points.dim(), std::move(flat));
}

std::vector<double> cumsum_basepoint(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size() + 1);
  double acc = 0.0;
  out.push_back(acc);
  for (double v : values) {
    acc += v;
    out.push_back(acc);
  }
  return out;
}

PiecewisePath lead_lag(std::span<const double> values) {
  require_nonempty(values.size(), "lead_lag");
  std::vector<double> flat;
  flat.reserve(2 * (2 * values.size() - 1));
  flat.push_back(values[0]);
  flat.push_back(values[0]);
  for (std::size_t i = 1; i < values.size(); ++i) {
    flat.push_back(values[i - 1]);
    flat.push_back(values[i]);
    flat.push_back(values[i]);
    flat.push_back(values[i]);
  }
  return PiecewisePath(2, std::move(flat));
}

PiecewisePath lead_lag_time(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size()) {
    throw std::invalid_argument("lead_lag_time: times and values differ in length");
  }
  require_nonempty(values.size(), "lead_lag_time");
  std::vector<double> flat{times[0], values[0], values[0]};
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double t = times[i];
    const double prev = values[i - 1];
    const double x = values[i];
    flat.insert(flat.end(), {t, prev, prev});
    flat.insert(flat.end(), {t, prev, x});
    flat.insert(flat.end(), {t, x, x});
  }
  return PiecewisePath(3, std::move(flat));
}

PiecewisePath missing_data_embed(const MaskedStream& ms, std::span<const double> times) {
  const std::size_t n = ms.values.size();
  if (ms.mask.size() != n || times.size() != n) {
    throw std::invalid_argument("missing_data_embed: values, mask and times differ in length");
  }
  require_nonempty(n, "missing_data_embed");
  bool any_observed = false;
  for (bool m : ms.mask) any_observed = any_observed || !m;
  if (!any_observed) throw std::invalid_argument("missing_data_embed: every entry is missing");
  if (ms.mask[0]) {
    throw std::invalid_argument("missing_data_embed: leading entry is missing (nothing to carry forward)");
  }
  std::vector<double> flat;
  flat.reserve(3 * n);
  double last = 0.0;
  double missing = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (ms.mask[i]) {
      missing += 1.0;
    } else {
      if (!std::isfinite(ms.values[i])) {
        throw std::invalid_argument("missing_data_embed: observed value is not finite");
      }
      last = ms.values[i];
    }
    flat.insert(flat.end(), {times[i], last, missing});
  }
  return PiecewisePath(3, std::move(flat));
}

std::optional<Embedding> parse_embedding(const std::string& name) {
  if (name == "linear") return Embedding::Linear;
  if (name == "rectilinear") return Embedding::Rectilinear;
  if (name == "cumsum-leadlag") return Embedding::CumsumLeadLag;
  if (name == "leadlag") return Embedding::LeadLag;
  if (name == "leadlag-time") return Embedding::LeadLagTime;
  if (name == "missing") return Embedding::Missing;
  return std::nullopt;
}

std::string embedding_name(Embedding e) {
  switch (e) {
    case Embedding::Linear: return "linear";
    case Embedding::Rectilinear: return "rectilinear";
    case Embedding::CumsumLeadLag: return "cumsum-leadlag";
    case Embedding::LeadLag: return "leadlag";
    case Embedding::LeadLagTime: return "leadlag-time";
    case Embedding::Missing: return "missing";
  }
  return "unknown";
}

PiecewisePath embed(const Stream& s, Embedding e) {
  if (e == Embedding::Missing) {
    MaskedStream ms{s.values, std::vector<bool>(s.values.size())};
    for (std::size_t i = 0; i < s.values.size(); ++i) ms.mask[i] = std::isnan(s.values[i]);
    return missing_data_embed(ms, s.resolved_times());
  }
  require_finite(s.values, "embed");
  switch (e) {
    case Embedding::Linear: return embed_linear(s);
    case Embedding::Rectilinear: return embed_rectilinear(s);
    case Embedding::CumsumLeadLag: return lead_lag(cumsum_basepoint(s.values));
    case Embedding::LeadLag: return lead_lag(s.values);
    case Embedding::LeadLagTime: return lead_lag_time(s.resolved_times(), s.values);
    case Embedding::Missing: break;
  }
  throw std::logic_error("embed: unhandled embedding");
}

}  // namespace pathsig
