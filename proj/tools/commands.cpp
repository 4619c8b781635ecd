#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "pathsig/cde.hpp"
#include "pathsig/embeddings.hpp"
#include "pathsig/experiment.hpp"
#include "pathsig/features.hpp"
#include "pathsig/io.hpp"
#include "pathsig/lyndon.hpp"
#include "pathsig/signature.hpp"

namespace pathsig::cli {
namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Embedding require_embedding(const std::string& name) {
  auto e = parse_embedding(name);
  if (!e) throw ConfigError("unknown embedding '" + name + "'");
  return *e;
}

void require_depth(int depth) {
  if (depth < 1) throw ConfigError("--depth must be >= 1");
}

void require_layout(const std::string& layout) {
  if (layout != "columns" && layout != "rows") {
    throw ConfigError("--layout must be 'columns' or 'rows'");
  }
}

// Writes to --output when given, else to `out`.
template <typename Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& fn) {
  if (cfg.output.empty()) {
    fn(out);
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw InputError("cannot open output file '" + cfg.output + "'");
  fn(f);
}

bool has_label_column(const CsvTable& t) {
  if (!t.header || t.header->empty()) return false;
  std::string last = t.header->back();
  std::transform(last.begin(), last.end(), last.begin(), [](unsigned char c) { return std::tolower(c); });
  return last == "label";
}

void require_finite_row(const std::vector<double>& row, int line) {
  for (double v : row) {
    if (std::isnan(v)) throw InputError("empty cell (missing values need --embedding missing)", line);
  }
}

struct StreamSet {
  std::vector<PiecewisePath> paths;
  std::vector<Stream> streams;  // rows layout only
  std::optional<std::vector<int>> labels;
};

// columns layout: the whole file is one stream whose columns are coordinates.
PiecewisePath path_from_columns(const CsvTable& t, Embedding e) {
  const std::size_t ncols = t.rows.front().size();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.rows[i].size() != ncols) throw InputError("ragged row", t.line_numbers[i]);
    if (e != Embedding::Missing) require_finite_row(t.rows[i], t.line_numbers[i]);
  }
  auto column = [&](std::size_t c) {
    std::vector<double> v;
    for (const auto& r : t.rows) v.push_back(r[c]);
    return v;
  };
  auto need_cols = [&](std::size_t n) {
    if (ncols != n) {
      throw InputError("embedding '" + embedding_name(e) + "' needs " + std::to_string(n) +
                       " column(s) in columns layout, got " + std::to_string(ncols));
    }
  };
  switch (e) {
    case Embedding::Linear: return PiecewisePath::from_rows(t.rows);
    case Embedding::Rectilinear: return axis_path(PiecewisePath::from_rows(t.rows));
    case Embedding::LeadLag: need_cols(1); return lead_lag(column(0));
    case Embedding::CumsumLeadLag: need_cols(1); return lead_lag(cumsum_basepoint(column(0)));
    case Embedding::LeadLagTime: need_cols(2); return lead_lag_time(column(0), column(1));
    case Embedding::Missing: {
      need_cols(2);
      Stream s{column(1), column(0)};
      return embed(s, e);
    }
  }
  throw std::logic_error("unhandled embedding");
}

StreamSet load_streams(const RunConfig& cfg, Embedding e) {
  const CsvTable t = read_csv_file(cfg.input);
  if (t.rows.empty()) throw InputError("input contains no data rows");
  StreamSet set;
  if (cfg.layout == "columns") {
    set.paths.push_back(path_from_columns(t, e));
    return set;
  }
  const bool labelled = has_label_column(t);
  if (labelled) set.labels.emplace();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::vector<double> values = t.rows[i];
    const int line = t.line_numbers[i];
    if (labelled) {
      if (values.empty() || std::isnan(values.back())) throw InputError("missing label", line);
      const double lab = values.back();
      if (lab != std::floor(lab)) throw InputError("label must be an integer", line);
      set.labels->push_back(static_cast<int>(lab));
      values.pop_back();
    }
    if (values.empty()) throw InputError("empty stream", line);
    if (e != Embedding::Missing) require_finite_row(values, line);
    Stream s{std::move(values), std::nullopt};
    try {
      set.paths.push_back(embed(s, e));
    } catch (const std::invalid_argument& ex) {
      throw InputError(ex.what(), line);
    }
    set.streams.push_back(std::move(s));
  }
  return set;
}

}  // namespace

int cmd_sig(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require_depth(cfg.depth);
    require_layout(cfg.layout);
    const Embedding e = require_embedding(cfg.embedding);
    const StreamSet set = load_streams(cfg, e);
    const int dim = set.paths.front().dim();
    auto basis = cfg.log_signature ? std::make_shared<const LyndonBasis>(dim, cfg.depth) : nullptr;

    std::vector<std::string> header;
    if (cfg.log_signature) {
      header = feature_columns(dim, cfg.depth, true);
    } else {
      header.emplace_back(Word{}.label("S"));
      for (const auto& c : feature_columns(dim, cfg.depth, false)) header.push_back(c);
    }
    std::vector<std::vector<double>> rows;
    for (const auto& p : set.paths) {
      const SignatureResult s = signature(p, cfg.depth);
      if (cfg.log_signature) {
        rows.push_back(log_signature_coords(s, basis).coords);
      } else {
        rows.emplace_back(s.series.coeffs().begin(), s.series.coeffs().end());
      }
    }
    emit(cfg, out, [&](std::ostream& os) {
      write_csv_row(os, header);
      for (const auto& r : rows) write_csv_row(os, r);
    });
    return kOk;
  } catch (const ConfigError& ex) {
    err << "config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const std::exception& ex) {
    err << "input error: " << ex.what() << '\n';
    return kInputError;
  }
}

int cmd_features(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require_depth(cfg.depth);
    require_layout(cfg.layout);
    if (cfg.layout != "rows") throw ConfigError("features expects --layout rows (one stream per row)");
    const Embedding e = require_embedding(cfg.embedding);
    const StreamSet set = load_streams(cfg, e);

    FeatureConfig fc;
    fc.embedding = e;
    fc.depth = cfg.depth;
    fc.log_signature = cfg.log_signature;
    fc.standardize = cfg.standardize;
    const FeatureMatrix fm = build_feature_matrix(set.streams, fc, set.labels);

    const bool json = cfg.output.size() >= 5 && cfg.output.ends_with(".json");
    emit(cfg, out, [&](std::ostream& os) {
      if (json) {
        os << feature_matrix_json(fm).dump(2) << '\n';
      } else {
        write_feature_csv(os, fm);
      }
    });
    return kOk;
  } catch (const ConfigError& ex) {
    err << "config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const std::exception& ex) {
    err << "input error: " << ex.what() << '\n';
    return kInputError;
  }
}

namespace {

void print_confusion(std::ostream& os, const char* title, const ConfusionMatrix& cm) {
  os << title << " (n=" << cm.total() << ", accuracy " << std::fixed << std::setprecision(4)
     << cm.accuracy() << ")\n";
  os << "  true\\pred      0      1\n";
  os << "  0         " << std::setw(6) << cm.tn << ' ' << std::setw(6) << cm.fp << '\n';
  os << "  1         " << std::setw(6) << cm.fn << ' ' << std::setw(6) << cm.tp << '\n';
  os.unsetf(std::ios::fixed);
}

}  // namespace

int cmd_classify_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.lambda1 < 0 || cfg.lambda2 < 0) throw ConfigError("penalties must be >= 0");
    ExperimentConfig ec;
    ec.seed = cfg.seed;
    ec.lambda1 = cfg.lambda1;
    ec.lambda2 = cfg.lambda2;
    ec.shuffle_labels = cfg.null_labels;
    const ExperimentResult r = run_arma_experiment(ec);

    out << "ARMA(1,1) classification, seed " << cfg.seed << (cfg.null_labels ? " (shuffled labels)" : "")
        << "\n";
    print_confusion(out, "train", r.train);
    print_confusion(out, "test", r.test);
    out << "selected features:";
    for (const auto& f : r.selected_features) out << ' ' << f;
    out << '\n';
    if (!cfg.output.empty()) {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw InputError("cannot open output file '" + cfg.output + "'");
      f << experiment_json(r).dump(2) << '\n';
    }
    return kOk;
  } catch (const ConfigError& ex) {
    err << "config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
}

namespace {

struct DemoRow {
  std::string name;
  int depth;
  double value;
  double reference;
  double error;
};

// Random 2x2 linear CDE with spectral norm 0.5 per field and a short 2-d driver.
struct RandomInstance {
  LinearVectorField field;
  PiecewisePath driver;
  Eigen::VectorXd y0;
};

RandomInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Eigen::MatrixXd> ms;
  for (int i = 0; i < 2; ++i) {
    Eigen::MatrixXd m(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = g(rng);
    const double norm = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
    ms.push_back(m * (0.5 / norm));
  }
  std::vector<std::vector<double>> rows{{0.0, 0.0}};
  for (int i = 0; i < 4; ++i) {
    rows.push_back({rows.back()[0] + 0.5 * g(rng), rows.back()[1] + 0.5 * g(rng)});
  }
  Eigen::VectorXd y0(2);
  y0 << 1.0, -0.5;
  return {LinearVectorField(std::move(ms)), PiecewisePath::from_rows(rows), y0};
}

}  // namespace

int cmd_cde_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.depth < 0) throw ConfigError("--depth must be >= 0");
    std::vector<DemoRow> rows;

    const LinearVectorField expo({Eigen::MatrixXd::Constant(1, 1, 1.0)});
    const PiecewisePath line{{0.0}, {1.0}};
    const Eigen::VectorXd one = Eigen::VectorXd::Constant(1, 1.0);
    const double e = std::exp(1.0);
    for (int L = 0; L <= cfg.depth; ++L) {
      const double y = linear_cde_solve_signature(expo, line, one, L)(0);
      rows.push_back({"exponential", L, y, e, std::abs(y - e)});
    }

    // Richardson-extrapolated Euler reference, independent of the signature route.
    const RandomInstance inst = random_instance(cfg.seed);
    const Eigen::VectorXd coarse = euler_cde_oracle(inst.field, inst.driver, inst.y0, 100000);
    const Eigen::VectorXd fine = euler_cde_oracle(inst.field, inst.driver, inst.y0, 200000);
    const Eigen::VectorXd ref = 2.0 * fine - coarse;
    for (int L = 0; L <= cfg.depth; ++L) {
      const Eigen::VectorXd y = linear_cde_solve_signature(inst.field, inst.driver, inst.y0, L);
      rows.push_back({"random2x2", L, y(0), ref(0), (y - ref).cwiseAbs().maxCoeff()});
    }

    out << std::left << std::setw(13) << "case" << std::setw(7) << "depth" << "abs_error\n";
    for (const auto& r : rows) {
      out << std::setw(13) << r.name << std::setw(7) << r.depth << std::scientific
          << std::setprecision(3) << r.error << std::defaultfloat << '\n';
    }
    if (!cfg.output.empty()) {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw InputError("cannot open output file '" + cfg.output + "'");
      write_csv_row(f, std::vector<std::string>{"case", "depth", "value", "reference", "abs_error"});
      for (const auto& r : rows) {
        write_csv_row(f, std::vector<std::string>{r.name, std::to_string(r.depth), format_double(r.value),
                                                  format_double(r.reference), format_double(r.error)});
      }
    }
    return kOk;
  } catch (const ConfigError& ex) {
    err << "config error: " << ex.what() << '\n';
    return kConfigError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated path signatures, log signatures and signature features"};
  app.require_subcommand(1);

  RunConfig sig_cfg{.subcommand = "sig", .embedding = "linear", .layout = "columns"};
  auto* sig = app.add_subcommand("sig", "Signature or log signature of each input stream");
  sig->add_option("input", sig_cfg.input, "CSV input file")->required();
  sig->add_option("--depth", sig_cfg.depth, "Truncation depth");
  sig->add_option("--embedding", sig_cfg.embedding,
                  "linear|rectilinear|cumsum-leadlag|leadlag|leadlag-time|missing");
  sig->add_option("--layout", sig_cfg.layout, "columns (one d-dim stream) or rows (one stream per row)");
  sig->add_flag("--log", sig_cfg.log_signature, "Lyndon-basis log signature");
  sig->add_option("--output", sig_cfg.output, "Output CSV (default stdout)");

  RunConfig feat_cfg{.subcommand = "features", .embedding = "cumsum-leadlag", .layout = "rows"};
  auto* feat = app.add_subcommand("features", "Feature matrix, one stream per row");
  feat->add_option("input", feat_cfg.input, "CSV input file")->required();
  feat->add_option("--depth", feat_cfg.depth, "Truncation depth");
  feat->add_option("--embedding", feat_cfg.embedding, "Stream embedding");
  feat->add_option("--layout", feat_cfg.layout, "Must be rows");
  feat->add_flag("--log", feat_cfg.log_signature, "Lyndon-basis log signature");
  feat->add_flag("--standardize", feat_cfg.standardize, "Column-wise standardization");
  feat->add_option("--output", feat_cfg.output, "Output file; .json selects JSON");

  RunConfig cls_cfg{.subcommand = "classify-demo"};
  auto* cls = app.add_subcommand("classify-demo", "ARMA(1,1) signature classification experiment");
  cls->add_option("--seed", cls_cfg.seed, "Random seed");
  cls->add_flag("--null", cls_cfg.null_labels, "Shuffle labels (null experiment)");
  cls->add_option("--lambda1", cls_cfg.lambda1, "L1 penalty");
  cls->add_option("--lambda2", cls_cfg.lambda2, "L2 penalty");
  cls->add_option("--output", cls_cfg.output, "JSON report");

  RunConfig cde_cfg{.subcommand = "cde-demo", .depth = 12};
  auto* cde = app.add_subcommand("cde-demo", "Linear CDE solved from the driver's signature");
  cde->add_option("--depth", cde_cfg.depth, "Largest truncation depth");
  cde->add_option("--seed", cde_cfg.seed, "Seed of the random instance");
  cde->add_option("--output", cde_cfg.output, "Plot-ready CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  if (sig->parsed()) return cmd_sig(sig_cfg, out, err);
  if (feat->parsed()) return cmd_features(feat_cfg, out, err);
  if (cls->parsed()) return cmd_classify_demo(cls_cfg, out, err);
  return cmd_cde_demo(cde_cfg, out, err);
}

}  // namespace pathsig::cli
