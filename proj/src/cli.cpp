#include "lsv/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lsv/coulomb.hpp"
#include "lsv/errors.hpp"
#include "lsv/oscillator.hpp"

namespace lsv::cli {
namespace {

constexpr double kRelTolerance = 5e-3;  // 0.5 %
constexpr double kOrderLow = 1.5;
constexpr double kOrderHigh = 2.5;

std::string spin_label(int s) { return s > 0 ? "+1" : "-1"; }

int parse_int(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Sorted, de-duplicated copy.
std::vector<int> canonical(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\r\n") == std::string::npos) return f;
  std::string q = "\"";
  for (char c : f) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// Opens --output or falls back to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

GridSpec oracle_grid_coulomb(const RunConfig& cfg, int l, int s, int k_states) {
  if (cfg.rho_max) return GridSpec::cell_centered(*cfg.rho_max, cfg.points);
  return default_coulomb_grid(cfg.background, l, s, k_states, cfg.points);
}

GridSpec oracle_grid_oscillator(const RunConfig& cfg, double omega) {
  if (cfg.rho_max) return GridSpec::cell_centered(*cfg.rho_max, cfg.points);
  return default_oscillator_grid(cfg.background, omega, cfg.points);
}

void require_nonempty(const RunConfig& cfg) {
  if (cfg.n_values.empty()) throw UsageError("empty n selection");
  if (cfg.l_values.empty()) throw UsageError("empty l selection");
  if (cfg.s_values.empty()) throw UsageError("empty s selection");
}

// ---------------------------------------------------------------- spectrum

struct SpectrumRows {
  std::vector<std::vector<std::string>> rows;
  bool produced = false;       // at least one energy
  bool only_unbound = true;    // every skip was a no-bound-state condition
};

void skip_row(SpectrumRows& out, const QuantumNumbers& qn, int nu, double delta,
              const lsv::Error& e) {
  out.rows.push_back({std::to_string(qn.n), std::to_string(qn.l), spin_label(qn.s),
                      std::to_string(nu), format_real(delta), "",
                      std::string("SKIPPED:") + e.kind()});
  const std::string_view kind = e.kind();
  if (kind != "RepulsiveBranch" && kind != "NoPositiveRoot") out.only_unbound = false;
}

void spectrum_state(const RunConfig& cfg, const QuantumNumbers& qn, SpectrumRows& out,
                    std::ostream& err) {
  const Background& bg = cfg.background;
  const int nu = effective_nu(qn);
  const double delta = coulomb_delta(bg, qn);
  auto row = [&](const std::string& omega, double energy) {
    out.rows.push_back({std::to_string(qn.n), std::to_string(qn.l), spin_label(qn.s),
                        std::to_string(nu), format_real(delta), omega, format_real(energy)});
    out.produced = true;
  };
  try {
    if (cfg.sector == Sector::coulomb) {
      row("", coulomb_energy(bg, qn));
      return;
    }
    if (delta == 0.0) {
      if (!cfg.omega) throw DegenerateDelta("delta = 0 needs --omega");
      oscillator_series(bg, qn, *cfg.omega);  // validates even n
      row(format_real(*cfg.omega), oscillator_energy(bg, qn, *cfg.omega));
      return;
    }
    const FrequencyRoots roots = solve_frequencies(bg, qn);
    if (roots.roots.size() > 1) {
      err << "note: (n=" << qn.n << ", l=" << qn.l << ", s=" << spin_label(qn.s)
          << ") admits " << roots.roots.size()
          << " frequency roots; one row per root, none preferred\n";
    }
    for (double w : roots.roots) row(format_real(w), oscillator_energy(bg, qn, w));
  } catch (const lsv::Error& e) {
    skip_row(out, qn, nu, delta, e);
  }
}

// ------------------------------------------------------------------ verify

struct VerifyRows {
  std::vector<std::vector<std::string>> rows;
  bool failed = false;
};

std::string judge(double rel, double order, bool& failed) {
  const bool order_ok = order >= kOrderLow && order <= kOrderHigh;
  if (!order_ok) {
    failed = true;
    return "FAIL:GridTooCoarse";
  }
  if (!(rel < kRelTolerance)) {
    failed = true;
    return "FAIL:Mismatch";
  }
  return "PASS";
}

VerifyRows verify_coulomb_channel(const RunConfig& cfg, int l, int s) {
  VerifyRows out;
  const Background& bg = cfg.background;
  const int k_states = cfg.n_values.back() + 1;
  const GridSpec grid = oracle_grid_coulomb(cfg, l, s, k_states);
  const OracleResult res = eigensolve_coulomb(bg, l, s, grid, k_states, {.strict = false});
  for (int n : cfg.n_values) {
    const QuantumNumbers qn{n, l, s};
    std::vector<std::string> row{std::to_string(n), std::to_string(l), spin_label(s), ""};
    if (coulomb_delta(bg, qn) < 0.0) {
      const double closed = coulomb_equation(bg, qn).zeta_sq;
      const double oracle = res.richardson_estimate[n];
      const double rel = std::abs(oracle - closed) / std::abs(closed);
      const double order = res.convergence_order[n];
      row.insert(row.end(), {format_real(closed), format_real(oracle), format_real(rel),
                             format_real(order), judge(rel, order, out.failed)});
    } else {
      // Closed form: no bound state. The oracle must agree on every grid.
      const std::size_t bound =
          count_bound_states(bg, l, s, grid) + count_bound_states(bg, l, s, grid.refined(2));
      row.insert(row.end(), {"none", bound == 0 ? "none" : std::to_string(bound), "", "",
                             bound == 0 ? "PASS:NoBoundState" : "FAIL:SpuriousBoundState"});
      if (bound != 0) out.failed = true;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

VerifyRows verify_oscillator_state(const RunConfig& cfg, const QuantumNumbers& qn) {
  VerifyRows out;
  const Background& bg = cfg.background;
  std::vector<std::string> head{std::to_string(qn.n), std::to_string(qn.l), spin_label(qn.s)};
  auto skipped = [&](const std::string& why) {
    auto row = head;
    row.insert(row.end(), {"", "", "", "", "", "SKIPPED:" + why});
    out.rows.push_back(std::move(row));
  };
  const double delta = coulomb_delta(bg, qn);
  std::vector<double> omegas;
  int fixed_index = -1;  // delta = 0: the state index is known exactly
  if (delta == 0.0) {
    if (!cfg.omega) {
      skipped("DegenerateDelta");
      return out;
    }
    if (qn.n % 2 != 0) {
      skipped("OddDegreeAtZeroDelta");
      return out;
    }
    omegas.push_back(*cfg.omega);
    fixed_index = qn.n / 2;
  } else {
    try {
      omegas = solve_frequencies(bg, qn).roots;
    } catch (const lsv::Error& e) {
      skipped(e.kind());
      return out;
    }
  }
  for (double w : omegas) {
    const double closed = oscillator_zeta_sq(bg, qn, w);
    const int k_states = fixed_index >= 0 ? fixed_index + 1 : 2 * qn.n + 3;
    const OracleResult res = eigensolve_oscillator(bg, qn.l, qn.s, w,
                                                   oracle_grid_oscillator(cfg, w), k_states,
                                                   {.strict = false});
    std::size_t best = 0;
    if (fixed_index >= 0) {
      best = static_cast<std::size_t>(fixed_index);
    } else {
      for (std::size_t i = 1; i < res.richardson_estimate.size(); ++i) {
        if (std::abs(res.richardson_estimate[i] - closed) <
            std::abs(res.richardson_estimate[best] - closed)) {
          best = i;
        }
      }
    }
    const double oracle = res.richardson_estimate[best];
    const double rel = std::abs(oracle - closed) / std::abs(closed);
    const double order = res.convergence_order[best];
    auto row = head;
    row.insert(row.end(), {format_real(w), format_real(closed), format_real(oracle),
                           format_real(rel), format_real(order), judge(rel, order, out.failed)});
    out.rows.push_back(std::move(row));
  }
  return out;
}

// ------------------------------------------------------------ wavefunction

std::vector<double> sample_grid(double rho_max, int rows) {
  std::vector<double> rho(static_cast<std::size_t>(rows));
  const double h = rho_max / rows;
  for (int i = 0; i < rows; ++i) rho[i] = (i + 1) * h;
  return rho;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) throw UsageError("empty integer list");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (item.empty()) throw UsageError("empty entry in list '" + std::string(text) + "'");
    // A range separator is a ':' that is not the leading sign position.
    const std::size_t colon = item.find(':', 1);
    if (colon == std::string_view::npos) {
      out.push_back(parse_int(item));
    } else {
      const int lo = parse_int(trim(item.substr(0, colon)));
      const int hi = parse_int(trim(item.substr(colon + 1)));
      if (hi < lo) throw UsageError("empty range '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return canonical(std::move(out));
}

std::vector<int> parse_spin_list(std::string_view text) {
  std::vector<int> out = parse_int_list(text);
  for (int s : out) {
    if (s != 1 && s != -1) throw UsageError("spin must be +1 or -1, got " + std::to_string(s));
  }
  return out;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void Table::write(std::ostream& os, OutputFormat format) const {
  if (format == OutputFormat::csv) {
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << csv_field(fields[i]);
      }
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - fields[c].size(), ' ') << fields[c];
    }
    os << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (const auto& r : rows) line(r);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_nonempty(cfg);
  cfg.background.validate();
  SpectrumRows result;
  for (int n : cfg.n_values) {
    for (int l : cfg.l_values) {
      for (int s : cfg.s_values) spectrum_state(cfg, {n, l, s}, result, err);
    }
  }
  Table table{{"n", "l", "s", "nu", "delta", "omega", "energy"}, std::move(result.rows)};
  Sink sink(cfg.output, out);
  table.write(sink.stream(), cfg.format);
  if (!result.produced && result.only_unbound) {
    err << "error: no bound state exists for any requested (n, l, s)\n";
    return kNoBoundState;
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_nonempty(cfg);
  cfg.background.validate();
  if (cfg.n_values.front() < 0) throw UsageError("n must be non-negative");

  // Independent channels run concurrently; rows are emitted in request order.
  std::vector<std::future<VerifyRows>> jobs;
  if (cfg.sector == Sector::coulomb) {
    for (int l : cfg.l_values) {
      for (int s : cfg.s_values) {
        jobs.push_back(std::async(std::launch::async,
                                  [&cfg, l, s] { return verify_coulomb_channel(cfg, l, s); }));
      }
    }
  } else {
    for (int n : cfg.n_values) {
      for (int l : cfg.l_values) {
        for (int s : cfg.s_values) {
          jobs.push_back(std::async(std::launch::async, [&cfg, n, l, s] {
            return verify_oscillator_state(cfg, {n, l, s});
          }));
        }
      }
    }
  }

  Table table{{"n", "l", "s", "omega", "closed_form_zeta_sq", "oracle_zeta_sq", "rel_error",
               "convergence_order", "status"},
              {}};
  bool failed = false;
  for (auto& job : jobs) {
    VerifyRows part = job.get();
    failed = failed || part.failed;
    for (auto& r : part.rows) table.rows.push_back(std::move(r));
  }
  if (cfg.sector == Sector::coulomb) {
    // Present Coulomb rows in (n, l, s) order like the oscillator ones.
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
      return std::stoi(a[0]) < std::stoi(b[0]);
    });
  }
  Sink sink(cfg.output, out);
  table.write(sink.stream(), cfg.format);
  if (failed) {
    err << "verification failed: see rows marked FAIL\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_nonempty(cfg);
  if (cfg.n_values.size() != 1 || cfg.l_values.size() != 1 || cfg.s_values.size() != 1) {
    throw UsageError("wavefunction needs exactly one (n, l, s)");
  }
  if (cfg.rows < 5) throw UsageError("--rows must be at least 5");
  const Background& bg = cfg.background;
  bg.validate();
  const QuantumNumbers qn{cfg.n_values[0], cfg.l_values[0], cfg.s_values[0]};
  const Normalization norm = cfg.normalize ? Normalization::l2 : Normalization::none;

  std::vector<double> rho;
  std::vector<double> g;
  if (cfg.sector == Sector::coulomb) {
    const CoulombState st = coulomb_state(bg, qn);
    rho = sample_grid(cfg.rho_max.value_or(30.0 / st.tau), cfg.rows);
    g = coulomb_wavefunction(bg, qn, rho, norm);
  } else {
    double omega = 0.0;
    if (cfg.omega) {
      omega = *cfg.omega;
    } else if (coulomb_delta(bg, qn) == 0.0) {
      throw UsageError("delta = 0: the frequency is free, pass --omega");
    } else {
      const FrequencyRoots roots = solve_frequencies(bg, qn);
      if (roots.roots.size() != 1) {
        std::ostringstream msg;
        msg << "several frequency roots; pick one with --omega:";
        for (double w : roots.roots) msg << ' ' << format_real(w);
        throw UsageError(msg.str());
      }
      omega = roots.roots.front();
    }
    rho = sample_grid(cfg.rho_max.value_or(10.0 / std::sqrt(bg.mass * omega)), cfg.rows);
    g = oscillator_wavefunction(bg, qn, omega, rho, norm);
    err << "omega = " << format_real(omega) << '\n';
  }

  Table table{{"rho", "G"}, {}};
  table.rows.reserve(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    table.rows.push_back({format_real(rho[i]), format_real(g[i])});
  }
  Sink sink(cfg.output, out);
  table.write(sink.stream(), OutputFormat::csv);
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound-state spectra in a Lorentz-violating Coulomb-like background",
               "lsv-spectra"};
  app.set_config("--config", "", "flat `key = value` file with the same names as the flags");
  app.allow_config_extras(false);

  std::string command;
  std::string sector = "coulomb";
  std::string n_text = "0";
  std::string l_text = "0";
  std::string s_text = "+1";
  std::string format = "csv";
  double omega = 0.0;
  double rho_max = 0.0;
  RunConfig cfg;
  Background& bg = cfg.background;
  bg.g = -1.0;
  bg.b = 1.0;
  bg.B0 = 1.0;

  app.add_option("command", command, "spectrum | verify | wavefunction")
      ->required()
      ->check(CLI::IsMember({"spectrum", "verify", "wavefunction"}));
  app.add_option("--sector", sector, "coulomb | oscillator")
      ->check(CLI::IsMember({"coulomb", "oscillator"}))
      ->capture_default_str();
  app.add_option("--g", bg.g, "coupling constant g")->capture_default_str();
  app.add_option("--b", bg.b, "magnitude of the radial vector b (>= 0)")->capture_default_str();
  app.add_option("--B0", bg.B0, "magnetic field along z")->capture_default_str();
  app.add_option("--mass", bg.mass, "particle mass")->capture_default_str();
  app.add_option("--k", bg.k, "axial momentum")->capture_default_str();
  app.add_option("--n", n_text, "radial degrees, e.g. 0,1,2 or 0:2")->capture_default_str();
  app.add_option("--l", l_text, "angular integers, e.g. -1:1")->capture_default_str();
  app.add_option("--s", s_text, "spins, +1 and/or -1")->capture_default_str();
  auto* omega_opt = app.add_option("--omega", omega, "oscillator frequency (delta = 0 or root choice)");
  app.add_option("--points", cfg.points, "oracle grid cells")->capture_default_str();
  auto* rho_opt = app.add_option("--rho-max", rho_max, "radial extent override");
  app.add_option("--rows", cfg.rows, "wavefunction samples")->capture_default_str();
  app.add_flag("--normalize", cfg.normalize, "L2(rho drho) normalisation of the wavefunction");
  app.add_option("--output", cfg.output, "output file (default stdout)");
  app.add_option("--format", format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}))
      ->capture_default_str();

  std::vector<const char*> argv{"lsv-spectra"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    cfg.sector = sector == "oscillator" ? Sector::oscillator : Sector::coulomb;
    cfg.format = format == "table" ? OutputFormat::table : OutputFormat::csv;
    cfg.n_values = parse_int_list(n_text);
    cfg.l_values = parse_int_list(l_text);
    cfg.s_values = parse_spin_list(s_text);
    if (*omega_opt) cfg.omega = omega;
    if (*rho_opt) cfg.rho_max = rho_max;
    if (cfg.points < 64) throw UsageError("--points must be at least 64");

    if (command == "spectrum") return cmd_spectrum(cfg, out, err);
    if (command == "verify") return cmd_verify(cfg, out, err);
    return cmd_wavefunction(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const RepulsiveBranch& e) {
    err << "error: " << e.what() << '\n';
    return kNoBoundState;
  } catch (const NoPositiveRoot& e) {
    err << "error: " << e.what() << '\n';
    return kNoBoundState;
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const lsv::Error& e) {
    err << "error (" << e.kind() << "): " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace lsv::cli
