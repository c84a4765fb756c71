#include "cli.hpp"

#include "connspec/connection.hpp"
#include "connspec/deformation.hpp"
#include "connspec/errors.hpp"
#include "connspec/fixtures.hpp"
#include "connspec/hodge.hpp"
#include "connspec/io.hpp"
#include "connspec/isospectral.hpp"
#include "connspec/spectra.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef CONNSPEC_VERSION
#define CONNSPEC_VERSION "0.0.0"
#endif

namespace connspec::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMaxSize = 600;

std::size_t max_size() {
  const char* env = std::getenv("CONNECTION_SPECTRA_MAX_SIZE");
  if (env == nullptr || *env == '\0') return kDefaultMaxSize;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidInput("CONNECTION_SPECTRA_MAX_SIZE must be a positive integer");
  return static_cast<std::size_t>(v);
}

void check_size(std::size_t n, const std::string& what) {
  if (n > max_size())
    throw SizeLimitExceeded(what + " has " + std::to_string(n) + " cells, above the limit of " +
                            std::to_string(max_size()) + " (CONNECTION_SPECTRA_MAX_SIZE)");
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

template <typename Seq>
std::string join(const Seq& values, const std::string& sep = " ") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : sep) << v;
    first = false;
  }
  return os.str();
}

std::string join_doubles(const std::vector<double>& values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(fmt(v));
  return join(parts);
}

json versioned(json body) {
  body["version"] = CONNSPEC_VERSION;
  return body;
}

std::vector<Rational> parse_t_samples(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw InvalidInput("--t-samples needs at least one value");
  return out;
}

// ---------------------------------------------------------------- analyze

struct Analysis {
  json body;
  std::vector<std::string> inconsistencies;
};

Analysis analyze_complex(const Complex& c, unsigned wu_max_k) {
  check_size(c.size(), "complex");
  const ConnectionOperator L = connection_matrix(c);
  const GreenOperator g = green(L);
  const Inertia in = inertia(L);
  const Spectrum spectrum = eigenvalues_symmetric(L.matrix());
  const auto counts = parity_counts(c);
  const long long chi = euler_characteristic(c);
  const BigInt energy = total_energy(g);
  const auto betti = betti_numbers(c);
  long long alt = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) alt += k % 2 == 0 ? betti[k] : -betti[k];
  const auto log_e = log_energy(spectrum);

  json wu = json::object();
  for (unsigned k = 1; k <= wu_max_k; ++k) {
    try {
      wu[std::to_string(k)] = wu_characteristic(c, k);
    } catch (const SizeLimitExceeded&) {
      wu[std::to_string(k)] = nullptr;
    }
  }

  const CheckReport spectral = spectral_theorem_check(c);
  const CheckReport checks = combine("analysis",
                                     {spectral, energy_check(L, g), unimodularity_check(L, g),
                                      super_trace_check(L, g), green_diagonal_check(L, g),
                                      facet_lemma_check(L, g), euler_poincare_check(c)});

  Analysis a;
  const long long b_minus_f = static_cast<long long>(counts.even) - static_cast<long long>(counts.odd);
  const long long p_minus_n = static_cast<long long>(in.p) - static_cast<long long>(in.n);
  if (b_minus_f != chi) a.inconsistencies.push_back("b - f != chi");
  if (p_minus_n != chi) a.inconsistencies.push_back("p - n != chi");
  if (energy != chi) a.inconsistencies.push_back("energy != chi");
  if (alt != chi) a.inconsistencies.push_back("Euler-Poincare sum != chi");

  a.body = {{"name", c.name()},
            {"size", c.size()},
            {"f_vector", c.f_vector()},
            {"euler_characteristic", chi},
            {"b", counts.even},
            {"f", counts.odd},
            {"det", L.determinant().str()},
            {"inertia", to_json(in)},
            {"energy", energy.str()},
            {"log_energy", {{"re", log_e.real()}, {"im", log_e.imag()}}},
            {"betti", betti},
            {"wu", wu},
            {"eigenvalues", to_json(spectrum)},
            {"checks", checks.stats["checks"]},
            {"pass", checks.pass && a.inconsistencies.empty()}};
  return a;
}

void print_analysis_text(const json& r, std::ostream& out) {
  out << "complex            " << r["name"].get<std::string>() << "\n";
  out << "simplices          " << r["size"] << "\n";
  out << "f-vector           " << join(r["f_vector"].get<std::vector<std::size_t>>()) << "\n";
  out << "euler char         " << r["euler_characteristic"] << "\n";
  out << "(b, f)             (" << r["b"] << ", " << r["f"] << ")\n";
  out << "det L              " << r["det"].get<std::string>() << "\n";
  out << "inertia (p,n,z)    (" << r["inertia"]["p"] << ", " << r["inertia"]["n"] << ", " << r["inertia"]["z"]
      << ")\n";
  out << "energy sum g       " << r["energy"].get<std::string>() << "\n";
  out << "log energy         " << fmt(r["log_energy"]["re"].get<double>()) << " + "
      << fmt(r["log_energy"]["im"].get<double>()) << "i\n";
  out << "betti              " << join(r["betti"].get<std::vector<long long>>()) << "\n";
  for (const auto& [k, v] : r["wu"].items())
    out << "wu_" << k << std::string(k.size() < 16 ? 16 - k.size() : 1, ' ') << (v.is_null() ? "skipped" : v.dump())
        << "\n";
  out << "eigenvalues        " << join_doubles(r["eigenvalues"].get<std::vector<double>>()) << "\n";
  for (const auto& [name, ok] : r["checks"].items())
    out << "check " << name << std::string(name.size() < 13 ? 13 - name.size() : 1, ' ')
        << (ok.get<bool>() ? "pass" : "FAIL") << "\n";
}

int cmd_analyze(const std::string& path, const std::string& format, unsigned wu_max_k, std::ostream& out,
                std::ostream& err) {
  const Complex c = read_complex(path);
  Analysis a = analyze_complex(c, wu_max_k);
  if (!a.inconsistencies.empty()) {
    err << "inconsistent analysis: " << join(a.inconsistencies, "; ") << "\n";
    return kCheckFailed;
  }
  if (format == "json")
    out << versioned(a.body).dump(2) << "\n";
  else
    print_analysis_text(a.body, out);
  return a.body["pass"].get<bool>() ? kPass : kCheckFailed;
}

// ----------------------------------------------------------------- verify

std::vector<CheckReport> identity_suite(const Complex& c, const std::vector<Rational>& t_samples) {
  const ConnectionOperator L = connection_matrix(c);
  const GreenOperator g = green(L);
  return {energy_check(L, g),         unimodularity_check(L, g),         super_trace_check(L, g),
          facet_lemma_check(L, g),    green_diagonal_check(L, g),        stanley_check(c),
          det_identity_check(c, t_samples), crossing_report(c),          spectral_theorem_check(c),
          euler_poincare_check(c),    mckean_singer_check(c),            chain_complex_check(boundary_matrices(c))};
}

int cmd_verify(const std::string& path, const std::string& format, const std::string& t_text, std::ostream& out) {
  const Complex c = read_complex(path);
  check_size(c.size(), "complex");
  const auto reports = identity_suite(c, parse_t_samples(t_text));
  bool pass = true;
  json checks = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    checks.push_back(r.to_json());
  }
  if (format == "json") {
    out << versioned({{"complex", c.name()}, {"pass", pass}, {"checks", checks}}).dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
      for (const auto& v : r.violations) out << "     " << v.dump() << "\n";
    }
    out << (pass ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return pass ? kPass : kCheckFailed;
}

// -------------------------------------------------------------------- gen

int cmd_gen(const std::string& family, const GeneratorParams& params, std::uint64_t seed, const std::string& out_path,
            std::ostream& out) {
  const Complex c = generate(parse_family(family), params, seed);
  if (out_path.empty())
    out << complex_to_json(c).dump(2) << "\n";
  else
    write_complex(out_path, c);
  return kPass;
}

// ----------------------------------------------------------------- deform

int cmd_deform(const std::string& path, std::size_t grid, const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
  const Complex c = read_complex(path);
  check_size(c.size(), "complex");
  DeformationTrace trace;
  try {
    trace = track_branches(c, grid);
  } catch (const BranchAmbiguity& e) {
    err << "branch ambiguity: " << e.what() << "\n";
    return kCheckFailed;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
  const std::size_t width = std::to_string(c.size()).size();
  for (const auto& step : trace.steps) {
    std::ostringstream csv;
    csv << "t";
    for (std::size_t i = 1; i <= step.position + 1; ++i) csv << ",eigenvalue_" << i;
    csv << "\n" << std::setprecision(17);
    for (const auto& s : step.samples) {
      csv << s.t;
      for (double v : s.eigenvalues) csv << "," << v;
      csv << "\n";
    }
    std::ostringstream name;
    name << "step_" << std::setw(static_cast<int>(width)) << std::setfill('0') << step.position << ".csv";
    write_file(std::filesystem::path(out_dir) / name.str(), csv.str());
  }
  const json assignment = versioned(assignment_json(c, trace));
  write_file(std::filesystem::path(out_dir) / "assignment.json", assignment.dump(2) + "\n");
  const bool ok = trace.is_bijection() && trace.sign_consistent(c);
  out << "steps " << trace.steps.size() << ", transfers " << trace.transfers.size() << ", "
      << (ok ? "assignment is a sign-consistent bijection" : "assignment FAILED") << "\n";
  return ok ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------- product

int cmd_product(const std::string& path_a, const std::string& path_b, const std::string& format, std::ostream& out) {
  const Complex a = read_complex(path_a);
  const Complex b = read_complex(path_b);
  const ProductComplex p = product(a, b);
  check_size(p.size(), "product");
  const Inertia ia = exact_inertia(connection_matrix(a).matrix());
  const Inertia ib = exact_inertia(connection_matrix(b).matrix());
  const Inertia in = exact_inertia(connection_matrix(p));
  const Inertia expected{ia.p * ib.p + ia.n * ib.n, ia.p * ib.n + ia.n * ib.p, 0};
  const long long chi = euler_characteristic(p);
  const long long chi_ab = euler_characteristic(a) * euler_characteristic(b);
  std::size_t even = 0;
  for (std::size_t i = 0; i < p.size(); ++i) even += p.omega(i) > 0;
  const bool pass = in == expected && chi == chi_ab &&
                    static_cast<long long>(in.p) - static_cast<long long>(in.n) == chi &&
                    in.p == even && in.n == p.size() - even;
  const json body = {{"first", a.name()},
                     {"second", b.name()},
                     {"size", p.size()},
                     {"euler_characteristic", chi},
                     {"euler_characteristic_product", chi_ab},
                     {"inertia", to_json(in)},
                     {"expected_inertia", to_json(expected)},
                     {"factor_inertia", {to_json(ia), to_json(ib)}},
                     {"pass", pass}};
  if (format == "json") {
    out << versioned(body).dump(2) << "\n";
  } else {
    out << "product            " << a.name() << " x " << b.name() << "\n";
    out << "cells              " << p.size() << "\n";
    out << "euler char         " << chi << " (factors give " << chi_ab << ")\n";
    out << "inertia (p,n,z)    (" << in.p << ", " << in.n << ", " << in.z << ")\n";
    out << "expected           (" << expected.p << ", " << expected.n << ", 0)\n";
    out << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kPass : kCheckFailed;
}

// ----------------------------------------------------------------- search

int cmd_search(const SearchConfig& config, const std::string& out_path, std::ostream& out) {
  const auto pairs = search_pairs(config);
  std::ostringstream lines;
  for (const auto& r : pairs) lines << to_json(r).dump() << "\n";
  if (out_path.empty())
    out << lines.str();
  else
    write_file(out_path, lines.str());
  return kPass;
}

// ----------------------------------------------------------- verify-paper

struct ReferenceSpectrum {
  std::string name;
  Complex complex;
  std::vector<double> eigenvalues;
  Inertia inertia;
};

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<ReferenceSpectrum> reference_spectra() {
  const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0), s13 = std::sqrt(13.0);
  std::vector<double> cube = {3 + s10, 3 - s10, 1};
  for (int i = 0; i < 3; ++i) cube.insert(cube.end(), {2 + s5, 2 - s5, 1 + s2, 1 - s2});
  for (int i = 0; i < 5; ++i) cube.push_back(-1);
  return {
      {"path3", fixtures::path3(), sorted({(1 - s5) / 2, (1 + s5) / 2, (3 - s13) / 2, (3 + s13) / 2, 1}), {3, 2, 0}},
      {"cube", fixtures::cube(), sorted(cube), {8, 12, 0}},
      {"c4", fixtures::c4(), sorted({2 + s5, 2 - s5, 1 + s2, 1 + s2, 1 - s2, 1 - s2, 1, -1}), {4, 4, 0}},
  };
}

int cmd_verify_reference(const std::string& format, std::ostream& out) {
  bool pass = true;
  json examples = json::array();
  std::ostringstream text;
  for (const auto& ref : reference_spectra()) {
    const ConnectionOperator L = connection_matrix(ref.complex);
    const Spectrum s = eigenvalues_symmetric(L.matrix());
    const Inertia in = inertia(L);
    double max_error = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      max_error = std::max(max_error, std::fabs(s.eigenvalues[i] - ref.eigenvalues[i]));
    const long long chi = euler_characteristic(ref.complex);
    const BigInt energy = total_energy(green(L));
    const bool ok = max_error <= 1e-9 && in == ref.inertia && energy == chi;
    pass = pass && ok;
    examples.push_back({{"name", ref.name},
                        {"eigenvalues", s.eigenvalues},
                        {"max_error", max_error},
                        {"inertia", to_json(in)},
                        {"euler_characteristic", chi},
                        {"energy", energy.str()},
                        {"pass", ok}});
    text << (ok ? "PASS " : "FAIL ") << ref.name << "  chi=" << chi << "  (p,n,z)=(" << in.p << "," << in.n << ","
         << in.z << ")\n     eigenvalues " << join_doubles(s.eigenvalues) << "\n";
  }
  const CheckReport pairs = verify_reference_pairs();
  pass = pass && pairs.pass;
  if (format == "json") {
    out << versioned({{"pass", pass}, {"examples", examples}, {"pairs", pairs.to_json()}}).dump(2) << "\n";
  } else {
    out << text.str();
    for (const auto& [name, st] : pairs.stats.items())
      out << (pairs.pass ? "PASS " : "FAIL ") << name << "  isospectral=" << st["isospectral"]
          << " isomorphic=" << st["isomorphic"] << " wu=" << st["wu_g"].dump() << "/" << st["wu_h"].dump()
          << " betti=" << st["betti_g"].dump() << "/" << st["betti_h"].dump() << "\n";
    out << (pass ? "all reference fixtures reproduced" : "reference fixtures FAILED") << "\n";
  }
  return pass ? kPass : kCheckFailed;
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const IoError*>(&e) ||
         dynamic_cast<const NotClosed*>(&e) || dynamic_cast<const DuplicateSimplex*>(&e) ||
         dynamic_cast<const UnknownSimplex*>(&e) || dynamic_cast<const EmptyComplex*>(&e) ||
         dynamic_cast<const SizeLimitExceeded*>(&e) || dynamic_cast<const LimitExceeded*>(&e);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connection Laplacians of simplicial complexes", "connspec"};
  app.set_version_flag("--version", CONNSPEC_VERSION);
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string path, path_b, out_path, out_dir = "deform_out", t_samples = "0,1/4,1/2,3/4,1";
  unsigned wu_max_k = 4;
  std::size_t grid = 64;

  auto* analyze = app.add_subcommand("analyze", "Report invariants of a complex");
  analyze->add_option("path", path, "Complex file (JSON or text)")->required();
  analyze->add_option("--wu-max-k", wu_max_k, "Largest Wu characteristic to compute")->check(CLI::Range(1u, 8u));
  add_format(analyze);

  auto* verify = app.add_subcommand("verify", "Run the exact identity suite on a complex");
  verify->add_option("path", path, "Complex file")->required();
  verify->add_option("--t-samples", t_samples, "Comma-separated rationals for the determinant identity");
  add_format(verify);

  std::string family;
  GeneratorParams params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a complex");
  gen->add_option("family", family, "cycle | cube | simplex | whitney_random")->required();
  gen->add_option("--n", params.n, "Cycle length or vertex count");
  gen->add_option("--d", params.d, "Simplex dimension");
  gen->add_option("--p", params.edge_prob, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  auto* deform = app.add_subcommand("deform", "Track eigenvalue branches through the cell-by-cell build");
  deform->add_option("path", path, "Complex file")->required();
  deform->add_option("--grid", grid, "Uniform grid steps per attachment (>= 8)");
  deform->add_option("--out-dir", out_dir, "Directory for CSV files and assignment.json");

  auto* prod = app.add_subcommand("product", "Analyze the product of two complexes");
  prod->add_option("first", path, "First factor")->required();
  prod->add_option("second", path_b, "Second factor")->required();
  add_format(prod);

  SearchConfig search;
  std::string search_family = "whitney";
  auto* srch = app.add_subcommand("search", "Search for isospectral, non-isomorphic pairs");
  srch->add_option("--vertices", search.vertices, "Vertex count")->check(CLI::Range(1, 12));
  srch->add_option("--edge-prob-min", search.edge_prob_min)->check(CLI::Range(0.0, 1.0));
  srch->add_option("--edge-prob-max", search.edge_prob_max)->check(CLI::Range(0.0, 1.0));
  srch->add_option("--samples", search.samples)->check(CLI::PositiveNumber);
  srch->add_option("--seed", search.seed);
  srch->add_option("--workers", search.workers)->check(CLI::PositiveNumber);
  srch->add_option("--family", search_family)->check(CLI::IsMember({"whitney", "graph"}));
  srch->add_option("--out", out_path, "JSON-lines output (default: stdout)");

  auto* reference = app.add_subcommand("verify-paper", "Reproduce the worked examples and isospectral pairs");
  add_format(reference);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(path, format, wu_max_k, out, err);
    if (*verify) return cmd_verify(path, format, t_samples, out);
    if (*gen) return cmd_gen(family, params, seed, out_path, out);
    if (*deform) return cmd_deform(path, grid, out_dir, out, err);
    if (*prod) return cmd_product(path, path_b, format, out);
    if (*srch) {
      search.family = search_family == "graph" ? SearchFamily::graph : SearchFamily::whitney;
      return cmd_search(search, out_path, out);
    }
    if (*reference) return cmd_verify_reference(format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e) ? kUsageError : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace connspec::cli
