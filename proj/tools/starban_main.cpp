#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starban/convolution.hpp"
#include "starban/errors.hpp"
#include "starban/json_io.hpp"
#include "starban/spaces.hpp"
#include "starban/starcomp.hpp"
#include "starban/suites.hpp"
#include "starban/tensornorms.hpp"

namespace {

using starban::json_io::ordered_json;
namespace json_io = starban::json_io;
namespace spaces = starban::spaces;
namespace starcomp = starban::starcomp;
namespace convolution = starban::convolution;
namespace suites = starban::suites;
namespace tensornorms = starban::tensornorms;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;  // empty means stdout
  bool text = false;
};

void write_output(const GlobalOpts& g, const std::string& body) {
  if (g.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file: " + g.output);
  out << body;
}

void emit_json(const GlobalOpts& g, const ordered_json& doc) {
  write_output(g, doc.dump(2) + "\n");
}

std::string format_value(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

int cmd_laws(const GlobalOpts& g, const std::string& suite,
             std::size_t max_dim, std::size_t samples) {
  suites::SuiteConfig config;
  config.max_dim = max_dim;
  config.seed = g.seed;
  config.samples = samples;
  config.threads = g.threads;
  const std::vector<suites::SuiteReport> reports =
      suites::run_suites(suite, config);

  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed();

  if (g.text) {
    std::ostringstream out;
    out << "laws suite=" << suite << " seed=" << g.seed
        << " max_dim=" << max_dim << " samples=" << samples << "\n";
    for (const auto& r : reports) {
      out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
          << r.total_checks() << " checks, " << r.total_failures()
          << " failures)\n";
      for (const auto& c : r.checks) {
        out << "  " << c.name << ": " << (c.checks - c.failures) << "/"
            << c.checks;
        if (!c.counterexamples.empty())
          out << "  first counterexample: " << c.counterexamples.front();
        out << "\n";
      }
    }
    out << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
    write_output(g, out.str());
  } else {
    ordered_json doc;
    doc["command"] = "laws";
    doc["seed"] = g.seed;
    doc["suite"] = suite;
    doc["max_dim"] = max_dim;
    doc["samples"] = samples;
    doc["passed"] = all_passed;
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(json_io::suite_report_to_json(r));
    doc["reports"] = std::move(arr);
    emit_json(g, doc);
  }
  return all_passed ? kExitPass : kExitCheckFailed;
}

int cmd_tensor_gap(const GlobalOpts& g, std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) {
    std::cerr << "tensor-gap: --rows and --cols must both be at least 2\n";
    return kExitUsage;
  }
  const tensornorms::CorrectionWitness w =
      tensornorms::correction_witness(rows, cols);
  const bool gap_shown = w.ratio > 1.0 + 1e-9;

  if (g.text) {
    std::ostringstream out;
    out << "tensor-gap rows=" << rows << " cols=" << cols << " seed=" << g.seed
        << "\n"
        << "projective = " << format_value(w.projective.value) << "\n"
        << "hilbert    = " << format_value(w.hilbert) << "\n"
        << "injective  = " << format_value(w.injective) << "\n"
        << "ratio      = " << format_value(w.ratio) << "\n"
        << "norm gap shown: " << (gap_shown ? "yes" : "no") << "\n";
    if (!w.note.empty()) out << w.note << "\n";
    write_output(g, out.str());
  } else {
    ordered_json doc;
    doc["command"] = "tensor-gap";
    doc["seed"] = g.seed;
    doc["rows"] = rows;
    doc["cols"] = cols;
    const ordered_json witness = json_io::witness_to_json(w);
    for (auto it = witness.begin(); it != witness.end(); ++it)
      doc[it.key()] = it.value();
    emit_json(g, doc);
  }
  return gap_shown ? kExitPass : kExitCheckFailed;
}

int cmd_norm(const GlobalOpts& g, const std::string& space_text,
             const std::string& vector_text) {
  const spaces::SpaceExpr space = spaces::parse_space(space_text);
  const std::vector<starban::num::Complex> coords =
      json_io::complex_list_from_text(vector_text);
  if (coords.size() != spaces::dim(space))
    throw std::invalid_argument(
        "vector has " + std::to_string(coords.size()) +
        " coordinates but the space has dimension " +
        std::to_string(spaces::dim(space)));
  const double value = spaces::norm(space, coords);

  if (g.text) {
    write_output(g, format_value(value) + "\n");
  } else {
    ordered_json doc;
    doc["command"] = "norm";
    doc["seed"] = g.seed;
    doc["space"] = spaces::to_string(space);
    doc["dim"] = spaces::dim(space);
    doc["vector"] = json_io::vector_to_json(coords);
    doc["value"] = value;
    emit_json(g, doc);
  }
  return kExitPass;
}

int cmd_opnorm(const GlobalOpts& g, const std::string& dom_text,
               const std::string& cod_text, const std::string& map_path,
               std::size_t restarts) {
  const spaces::SpaceExpr dom = spaces::parse_space(dom_text);
  const spaces::SpaceExpr cod = spaces::parse_space(cod_text);
  const ordered_json parsed =
      ordered_json::parse(json_io::read_text_file(map_path));
  const starban::num::Matrix map = json_io::matrix_from_json(parsed);
  if (map.rows() != spaces::dim(cod) || map.cols() != spaces::dim(dom))
    throw std::invalid_argument(
        "map is " + std::to_string(map.rows()) + "x" +
        std::to_string(map.cols()) + " but dom/cod dimensions are " +
        std::to_string(spaces::dim(dom)) + " and " +
        std::to_string(spaces::dim(cod)));
  const spaces::OperatorNormEstimate est =
      spaces::operator_norm_estimate(map, dom, cod, restarts, g.seed);

  if (g.text) {
    write_output(g, format_value(est.value) + "\n");
  } else {
    ordered_json doc;
    doc["command"] = "opnorm";
    doc["seed"] = g.seed;
    doc["dom"] = spaces::to_string(dom);
    doc["cod"] = spaces::to_string(cod);
    doc["restarts"] = restarts;
    doc["value"] = est.value;
    doc["witness"] = json_io::vector_to_json(est.witness.coords);
    emit_json(g, doc);
  }
  return kExitPass;
}

int cmd_complete_table(const GlobalOpts& g, std::size_t max_fin) {
  std::vector<starcomp::CompletedObj> objects;
  for (std::size_t k = 0; k <= max_fin; ++k)
    objects.push_back(starcomp::CompletedObj::fin(k));
  objects.push_back(starcomp::CompletedObj::inf());

  const auto tensor_cell = [](const starcomp::CompletedObj& a,
                              const starcomp::CompletedObj& b) {
    return starcomp::to_string(starcomp::tensor_obj(a, b));
  };
  const auto par_cell = [](const starcomp::CompletedObj& a,
                           const starcomp::CompletedObj& b) {
    return starcomp::to_string(starcomp::par_obj(a, b));
  };
  const auto hom_cell = [](const starcomp::CompletedObj& a,
                           const starcomp::CompletedObj& b) {
    return starcomp::to_string(starcomp::hom_card(a, b));
  };

  if (g.text) {
    std::size_t width = 4;
    for (const auto& a : objects) {
      width = std::max(width, starcomp::to_string(a).size());
      for (const auto& b : objects) {
        width = std::max(width, tensor_cell(a, b).size());
        width = std::max(width, par_cell(a, b).size());
        width = std::max(width, hom_cell(a, b).size());
      }
    }
    const auto pad = [width](const std::string& s) {
      return s + std::string(width + 2 - s.size(), ' ');
    };
    std::ostringstream out;
    out << "complete table max=" << max_fin << "\n\ndual:\n";
    for (const auto& a : objects)
      out << "  " << starcomp::to_string(a)
          << "* = " << starcomp::to_string(starcomp::dual_obj(a)) << "\n";
    const auto print_table = [&](const std::string& title, auto&& cell) {
      out << "\n" << title << ":\n  " << pad("");
      for (const auto& b : objects) out << pad(starcomp::to_string(b));
      out << "\n";
      for (const auto& a : objects) {
        out << "  " << pad(starcomp::to_string(a));
        for (const auto& b : objects) out << pad(cell(a, b));
        out << "\n";
      }
    };
    print_table("tensor", tensor_cell);
    print_table("par", par_cell);
    print_table("hom", hom_cell);
    write_output(g, out.str());
  } else {
    ordered_json doc;
    doc["command"] = "complete";
    doc["seed"] = g.seed;
    doc["max"] = max_fin;
    ordered_json names = ordered_json::array();
    for (const auto& a : objects) names.push_back(starcomp::to_string(a));
    doc["objects"] = std::move(names);
    ordered_json dual = ordered_json::object();
    for (const auto& a : objects)
      dual[starcomp::to_string(a)] =
          starcomp::to_string(starcomp::dual_obj(a));
    doc["dual"] = std::move(dual);
    const auto table = [&objects](auto&& cell) {
      ordered_json t = ordered_json::object();
      for (const auto& a : objects) {
        ordered_json row = ordered_json::object();
        for (const auto& b : objects)
          row[starcomp::to_string(b)] = cell(a, b);
        t[starcomp::to_string(a)] = std::move(row);
      }
      return t;
    };
    doc["tensor"] = table(tensor_cell);
    doc["par"] = table(par_cell);
    doc["hom"] = table(hom_cell);
    emit_json(g, doc);
  }
  return kExitPass;
}

int cmd_convolve(const GlobalOpts& g, const std::string& profile_name,
                 const std::string& f_path, const std::string& g_path,
                 std::size_t max_degree) {
  const convolution::GroupoidProfile profile =
      convolution::profile_by_name(profile_name);
  const convolution::DimFunctor f = json_io::dim_functor_from_json(
      ordered_json::parse(json_io::read_text_file(f_path)));
  const convolution::DimFunctor h = json_io::dim_functor_from_json(
      ordered_json::parse(json_io::read_text_file(g_path)));
  const convolution::DimFunctor result =
      convolution::convolve(f, h, profile, max_degree);

  if (g.text) {
    std::ostringstream out;
    out << "convolve profile=" << profile_name << " max_degree=" << max_degree
        << "\n";
    if (result.support.empty()) out << "  (zero functor)\n";
    for (const auto& [degree, obj] : result.support)
      out << "  " << degree << ": " << starcomp::to_string(obj) << "\n";
    write_output(g, out.str());
  } else {
    ordered_json doc;
    doc["command"] = "convolve";
    doc["seed"] = g.seed;
    doc["profile"] = profile_name;
    doc["max_degree"] = max_degree;
    doc["f"] = json_io::dim_functor_to_json(f);
    doc["g"] = json_io::dim_functor_to_json(h);
    doc["result"] = json_io::dim_functor_to_json(result);
    emit_json(g, doc);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional Banach space laboratory"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "Seed for all randomized checks")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for law suites")
      ->capture_default_str();
  app.add_option("--output", g.output, "Write the report to a file");
  app.add_flag("--text", g.text, "Human-readable text instead of JSON");

  int rc = kExitPass;

  std::string laws_suite;
  std::size_t laws_max_dim = 5;
  std::size_t laws_samples = 120;
  CLI::App* laws = app.add_subcommand("laws", "Run a module law suite");
  laws->fallthrough();
  laws->add_option("--suite", laws_suite,
                   "spaces, bancat, completion, posreal, convolution, or all")
      ->required();
  laws->add_option("--max-dim", laws_max_dim, "Dimension budget for sampling")
      ->capture_default_str();
  laws->add_option("--samples", laws_samples, "Seeded samples per check")
      ->capture_default_str();
  laws->callback(
      [&] { rc = cmd_laws(g, laws_suite, laws_max_dim, laws_samples); });

  std::size_t gap_rows = 0;
  std::size_t gap_cols = 0;
  CLI::App* gap = app.add_subcommand(
      "tensor-gap", "Certify the projective/Hilbert norm gap on an identity");
  gap->fallthrough();
  gap->add_option("--rows", gap_rows, "Rows of the identity element")
      ->required();
  gap->add_option("--cols", gap_cols, "Cols of the identity element")
      ->required();
  gap->callback([&] { rc = cmd_tensor_gap(g, gap_rows, gap_cols); });

  std::string norm_space;
  std::string norm_vector;
  CLI::App* norm = app.add_subcommand("norm", "Evaluate a direct-sum norm");
  norm->fallthrough();
  norm->add_option("--space", norm_space,
                   "Space grammar: C | l2(n) | sum1(...) | sum2(...) | "
                   "sup(...) | dual(...)")
      ->required();
  norm->add_option("--vector", norm_vector,
                   "Coordinates like [(3,0),(4,0)], bare reals, or @file")
      ->required();
  norm->callback([&] { rc = cmd_norm(g, norm_space, norm_vector); });

  std::string op_dom;
  std::string op_cod;
  std::string op_map;
  std::size_t op_restarts = 64;
  CLI::App* opnorm =
      app.add_subcommand("opnorm", "Estimate an operator norm from below");
  opnorm->fallthrough();
  opnorm->add_option("--dom", op_dom, "Domain space grammar")->required();
  opnorm->add_option("--cod", op_cod, "Codomain space grammar")->required();
  opnorm->add_option("--map", op_map, "Path to a JSON matrix file")->required();
  opnorm->add_option("--restarts", op_restarts, "Random ascent restarts")
      ->capture_default_str();
  opnorm->callback(
      [&] { rc = cmd_opnorm(g, op_dom, op_cod, op_map, op_restarts); });

  std::size_t complete_max = 3;
  CLI::App* complete =
      app.add_subcommand("complete", "Star-completion object calculus");
  complete->fallthrough();
  complete->require_subcommand(1);
  CLI::App* table = complete->add_subcommand(
      "table", "Print tensor, par, dual, and hom tables");
  table->fallthrough();
  table->add_option("--max", complete_max, "Largest finite dimension shown")
      ->capture_default_str();
  table->callback([&] { rc = cmd_complete_table(g, complete_max); });

  std::string conv_profile;
  std::string conv_f;
  std::string conv_g;
  std::size_t conv_max_degree = 16;
  CLI::App* convolve =
      app.add_subcommand("convolve", "Groupoid convolution of dim functors");
  convolve->fallthrough();
  convolve->add_option("--profile", conv_profile, "braid or symmetric")
      ->required();
  convolve->add_option("--f", conv_f, "Path to the left functor JSON file")
      ->required();
  convolve->add_option("--g", conv_g, "Path to the right functor JSON file")
      ->required();
  convolve
      ->add_option("--max-degree", conv_max_degree, "Largest degree computed")
      ->capture_default_str();
  convolve->callback(
      [&] { rc = cmd_convolve(g, conv_profile, conv_f, conv_g, conv_max_degree); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const spaces::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const starban::numerical_error& e) {
    std::cerr << "numerical error: " << e.what()
              << " (residual " << e.residual() << ")\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return rc;
}
