#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cviso/channel.hpp"
#include "cviso/criteria.hpp"
#include "cviso/errors.hpp"
#include "cviso/fock.hpp"
#include "cviso/measures.hpp"
#include "cviso/states.hpp"
#include "cviso/sweep.hpp"

namespace cviso::cli {

namespace {

using nlohmann::json;

struct PointOptions {
  double r = 0.0;
  double p = 0.0;
  std::string format = "text";
  bool bits = false;
};

// Thrown for I/O failures that should map to exit code 4.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double entropy_unit(bool bits) { return bits ? 1.0 / std::log(2.0) : 1.0; }
const char* entropy_unit_name(bool bits) { return bits ? "bits" : "nats"; }

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

void print_matrix(std::ostream& out, const std::string& label, const Eigen::MatrixXd& m) {
  out << label << ":\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << std::setw(14) << std::setprecision(9) << m(i, j);
    }
    out << '\n';
  }
}

void add_point_options(CLI::App* cmd, PointOptions& opts, bool with_bits) {
  cmd->add_option("--r", opts.r, "squeezing parameter r >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--p", opts.p, "mixing probability p in [0,1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_bits) cmd->add_flag("--bits", opts.bits, "report entropies in bits instead of nats");
}

void cmd_state(const PointOptions& o, double alpha, std::ostream& out) {
  const GIParams params(o.r, o.p);
  const CovarianceMatrix gamma = gamma_gi(params);
  const StateProperties props = properties(params);
  const double unit = entropy_unit(o.bits);
  if (o.format == "json") {
    json j = {
        {"r", o.r},
        {"p", o.p},
        {"cm", matrix_json(gamma.entries())},
        {"nu", props.nu},
        {"nu_tilde", props.nu_tilde},
        {"purity", props.purity},
        {"S", props.von_neumann * unit},
        {"renyi", {{"alpha", alpha}, {"value", props.renyi(alpha) * unit}}},
        {"local_entropy", props.local_entropy * unit},
        {"entropy_unit", entropy_unit_name(o.bits)},
    };
    out << j.dump() << '\n';
    return;
  }
  out << std::setprecision(9);
  out << "r = " << o.r << ", p = " << o.p << '\n';
  print_matrix(out, "covariance matrix", gamma.entries());
  out << "nu            " << props.nu << '\n'
      << "nu_tilde      " << props.nu_tilde << '\n'
      << "purity        " << props.purity << '\n'
      << "S             " << props.von_neumann * unit << ' ' << entropy_unit_name(o.bits) << '\n'
      << "S_" << alpha << "           " << props.renyi(alpha) * unit << ' '
      << entropy_unit_name(o.bits) << '\n'
      << "S_A = S_B     " << props.local_entropy * unit << ' ' << entropy_unit_name(o.bits)
      << '\n';
}

void cmd_criteria(const PointOptions& o, std::ostream& out) {
  const GIParams params(o.r, o.p);
  const PptResult p = ppt(params);
  const SteeringResult s = steerable(params);
  const CcnrResult c = ccnr(params);
  if (o.format == "json") {
    json j = {
        {"r", o.r},
        {"p", o.p},
        {"ppt_entangled", p.entangled},
        {"ppt_margin", p.margin},
        {"nu_tilde", p.nu_tilde},
        {"steerable", s.steerable},
        {"steering_threshold", s.threshold},
        {"steering_matrix_min_eigenvalue", s.matrix_min_eigenvalue},
        {"ccnr_detects", c.detects},
        {"realigned_norm", c.norm},
        {"ccnr_threshold", std::isfinite(c.threshold) ? json(c.threshold) : json(nullptr)},
    };
    out << j.dump() << '\n';
    return;
  }
  out << std::setprecision(9) << std::boolalpha;
  out << "PPT        entangled=" << p.entangled << "  margin(tanh r - p)=" << p.margin
      << "  nu_tilde=" << p.nu_tilde << '\n';
  out << "steering   steerable=" << s.steerable << "  threshold p>" << s.threshold
      << "  min eig(gamma + i(0+Omega_B))=" << s.matrix_min_eigenvalue << '\n';
  out << "CCNR       detects=" << c.detects << "  ||rho^R||=" << c.norm << "  threshold p>"
      << c.threshold << '\n';
  out << "note: CCNR threshold is (cosh 2r - 1/2)/sinh 2r = (coth r + 3 tanh r)/4\n";
}

void cmd_measures(const PointOptions& o, std::ostream& out) {
  const GIParams params(o.r, o.p);
  const MeasureReport m = evaluate_measures(params);
  const bool exceeds = eof_exceeds_half_mi(params);
  const double unit = entropy_unit(o.bits);
  if (o.format == "json") {
    json j = {
        {"r", o.r},
        {"p", o.p},
        {"eof", m.eof * unit},
        {"discord", m.discord * unit},
        {"mutual_information", m.mutual_information * unit},
        {"x", m.x},
        {"eof_exceeds_half_mi", exceeds},
        {"entropy_unit", entropy_unit_name(o.bits)},
    };
    out << j.dump() << '\n';
    return;
  }
  out << std::setprecision(9) << std::boolalpha;
  out << "eof                  " << m.eof * unit << '\n'
      << "gaussian discord     " << m.discord * unit << '\n'
      << "mutual information   " << m.mutual_information * unit << '\n'
      << "x = min(1, nu_tilde) " << m.x << '\n'
      << "eof > I_M/2          " << exceeds << '\n'
      << "unit                 " << entropy_unit_name(o.bits) << '\n';
}

struct SweepOptions {
  GridAxis r_axis{0.0, 2.0, 101};
  GridAxis p_axis{0.0, 1.0, 101};
  std::size_t threads = 0;
};

void cmd_sweep(const SweepOptions& o, std::ostream& out) {
  write_csv(run_sweep(o.r_axis, o.p_axis, o.threads), out);
}

struct ChannelOptions {
  PointOptions point;
  std::string input = "coherent";
  double nbar = -1.0;
};

void cmd_channel(const ChannelOptions& o, std::ostream& out) {
  const GIParams params(o.point.r, o.point.p);
  const CovarianceMatrix input = o.input == "thermal" ? thermal_mode(o.nbar)
                                                      : CovarianceMatrix::identity(1);
  const CovarianceMatrix output = apply(gi_channel(params), input);
  const double in_noise = 0.5 * input.entries().trace();
  const double out_noise = 0.5 * output.entries().trace();
  std::string verdict = "unchanged";
  if (out_noise < in_noise - 1e-12) verdict = "less noisy";
  if (out_noise > in_noise + 1e-12) verdict = "noisier";

  if (o.point.format == "json") {
    json j = {
        {"r", o.point.r},
        {"p", o.point.p},
        {"input_kind", o.input},
        {"input_cm", matrix_json(input.entries())},
        {"output_cm", matrix_json(output.entries())},
        {"verdict", verdict},
    };
    if (o.input == "thermal") j["nbar"] = o.nbar;
    if (o.input == "coherent") j["coherent_closed_form"] = matrix_json(coherent_output(params).entries());
    out << j.dump() << '\n';
    return;
  }
  out << std::setprecision(9);
  out << "input: " << o.input;
  if (o.input == "thermal") out << " (nbar = " << o.nbar << ")";
  out << '\n';
  print_matrix(out, "input covariance", input.entries());
  print_matrix(out, "output covariance", output.entries());
  out << "verdict: " << verdict << " (mean variance " << in_noise << " -> " << out_noise << ")\n";
}

struct FockOptions {
  PointOptions point;
  std::size_t cutoff = kDefaultCutoff;
  bool check = false;
  std::string dump_path;
};

// Returns false when --check is set and a tolerance fails.
bool cmd_fock(const FockOptions& o, std::ostream& out) {
  const GIParams params(o.point.r, o.point.p);
  const FockOperator rho = fock_gi(params, o.cutoff);
  const double trace = rho.trace().real();
  const double purity = rho.purity();
  const double purity_closed = properties(params).purity;
  const double cm_residual =
      (cm_from_fock(rho).entries() - gamma_gi(params).entries()).cwiseAbs().maxCoeff();
  const double min_eig = rho.min_eigenvalue();
  const double min_pt_eig = rho.partial_transpose_b().min_eigenvalue();
  const double residual = extraction_residual(rho, params);
  const PptResult closed_ppt = ppt(params);
  const bool near_boundary = std::abs(closed_ppt.margin) <= 0.02;

  const bool trace_ok = std::abs(trace - 1.0) <= 1e-6;
  const bool purity_ok = std::abs(purity - purity_closed) <= 1e-4;
  const bool cm_ok = cm_residual <= 1e-6;
  const bool positive_ok = min_eig >= -1e-8;
  const bool sign_ok = near_boundary || ((min_pt_eig < -kNegativityTolerance) == closed_ppt.entangled);
  const bool all_ok = trace_ok && purity_ok && cm_ok && positive_ok && sign_ok;

  if (!o.dump_path.empty()) {
    try {
      save_fock_binary(rho, o.dump_path);
    } catch (const std::ios_base::failure& e) {
      throw IoFailure(std::string("--dump: ") + e.what());
    }
  }

  if (o.point.format == "json") {
    json j = {
        {"r", o.point.r},
        {"p", o.point.p},
        {"cutoff", o.cutoff},
        {"trace", trace},
        {"purity", purity},
        {"purity_closed_form", purity_closed},
        {"cm_residual", cm_residual},
        {"min_eigenvalue", min_eig},
        {"min_pt_eigenvalue", min_pt_eig},
        {"extraction_residual", residual},
        {"ppt_entangled", closed_ppt.entangled},
        {"checks_passed", all_ok},
    };
    out << j.dump() << '\n';
  } else {
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    out << std::setprecision(9) << std::boolalpha;
    out << "cutoff               " << o.cutoff << '\n'
        << "trace                " << trace << "  [" << mark(trace_ok) << "]\n"
        << "purity Tr[rho^2]     " << purity << "  vs 1/nu^2 = " << purity_closed << "  ["
        << mark(purity_ok) << "]\n"
        << "CM residual          " << cm_residual << "  [" << mark(cm_ok) << "]\n"
        << "min eigenvalue       " << min_eig << "  [" << mark(positive_ok) << "]\n"
        << "min PT eigenvalue    " << min_pt_eig << "  (closed-form PPT entangled: "
        << closed_ppt.entangled << ")  [" << (near_boundary ? "near boundary" : mark(sign_ok))
        << "]\n"
        << "extraction residual  " << residual << '\n';
  }
  return !o.check || all_ok;
}

std::string first_line(const std::string& s) {
  const auto pos = s.find('\n');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian isotropic two-mode state: criteria, measures, channel, Fock oracles"};
  app.require_subcommand(1);

  PointOptions state_opts;
  double alpha = 2.0;
  auto* state = app.add_subcommand("state", "covariance matrix, symplectic data, entropies");
  add_point_options(state, state_opts, true);
  state->add_option("--alpha", alpha, "Renyi order")->check(CLI::PositiveNumber);

  PointOptions criteria_opts;
  auto* criteria = app.add_subcommand("criteria", "PPT, steering and CCNR tests");
  add_point_options(criteria, criteria_opts, false);

  PointOptions measures_opts;
  auto* measures = app.add_subcommand("measures", "EOF, Gaussian discord, mutual information");
  add_point_options(measures, measures_opts, true);

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "grid sweep written as CSV");
  sweep->add_option("--r-min", sweep_opts.r_axis.min)->check(CLI::NonNegativeNumber);
  sweep->add_option("--r-max", sweep_opts.r_axis.max)->check(CLI::NonNegativeNumber);
  sweep->add_option("--r-steps", sweep_opts.r_axis.steps)
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  sweep->add_option("--p-min", sweep_opts.p_axis.min)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--p-max", sweep_opts.p_axis.max)->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--p-steps", sweep_opts.p_axis.steps)
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  sweep->add_option("--threads", sweep_opts.threads, "worker threads (0 = all cores)");

  ChannelOptions channel_opts;
  auto* channel = app.add_subcommand("channel", "apply the Choi-isomorphic channel");
  add_point_options(channel, channel_opts.point, false);
  channel->add_option("--input", channel_opts.input, "input state kind")
      ->check(CLI::IsMember({"coherent", "thermal"}));
  auto* nbar_opt = channel->add_option("--nbar", channel_opts.nbar, "thermal mean occupation")
                       ->check(CLI::NonNegativeNumber);

  FockOptions fock_opts;
  auto* fock = app.add_subcommand("fock", "truncated Fock-space diagnostics");
  add_point_options(fock, fock_opts.point, false);
  fock->add_option("--cutoff", fock_opts.cutoff, "levels per mode")
      ->check(CLI::Range(std::size_t{4}, std::size_t{200}));
  fock->add_flag("--check", fock_opts.check, "exit 3 if any tolerance fails");
  fock->add_option("--dump", fock_opts.dump_path, "write the operator as a binary fixture");

  std::string out_path;
  for (auto* cmd : {state, criteria, measures, sweep, channel, fock}) {
    cmd->add_option("--out", out_path, "write output to PATH instead of stdout");
  }

  try {
    app.parse(argc, argv);
    if (*sweep) {
      for (const auto& [axis, flag] : {std::pair{&sweep_opts.r_axis, "--r-min/--r-max"},
                                       std::pair{&sweep_opts.p_axis, "--p-min/--p-max"}}) {
        try {
          axis->values();
        } catch (const DomainError& e) {
          throw CLI::ValidationError(flag, e.what());
        }
      }
    }
    if (*channel) {
      if (channel_opts.input == "thermal" && nbar_opt->count() == 0) {
        throw CLI::ValidationError("--nbar", "required when --input thermal");
      }
      if (channel_opts.input == "coherent" && nbar_opt->count() > 0) {
        throw CLI::ValidationError("--nbar", "only valid with --input thermal");
      }
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: --out: cannot open '" << out_path << "' for writing\n";
      return kIo;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*state) cmd_state(state_opts, alpha, sink);
    if (*criteria) cmd_criteria(criteria_opts, sink);
    if (*measures) cmd_measures(measures_opts, sink);
    if (*sweep) cmd_sweep(sweep_opts, sink);
    if (*channel) cmd_channel(channel_opts, sink);
    if (*fock && !cmd_fock(fock_opts, sink)) {
      err << "error: fock --check: one or more tolerances failed\n";
      return kNumerical;
    }
    sink.flush();
    if (!sink) throw IoFailure("--out: failed writing '" + out_path + "'");
  } catch (const TailError& e) {
    err << "error: --cutoff: " << first_line(e.what()) << '\n';
    return kNumerical;
  } catch (const IoFailure& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "error: " << first_line(e.what()) << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << app.get_subcommands().front()->get_name() << ": "
        << first_line(e.what()) << '\n';
    return kNumerical;
  }
  return kSuccess;
}

}  // namespace cviso::cli
