// Command-line front end: .hg file I/O, odd-bipartiteness certificates,
// tensor dumps, spectral radii and the theorem verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperspec/generator.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/hypergraph_tensors.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/verify.hpp"

namespace {

using nlohmann::json;

hyperspec::Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hyperspec::ParseError("cannot open '" + path + "'");
  return hyperspec::parse_hypergraph(in);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw hyperspec::Error("cannot write '" + out_path + "'");
  out << text;
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

json eigenpair_report(const hyperspec::PowerResult& r) {
  return json{{"lambda", r.pair.lambda},
              {"bracket", {r.bracket_lo, r.bracket_hi}},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"residual", r.pair.residual},
              {"vector", to_std(r.pair.x)}};
}

json bipartition_report(const hyperspec::Bipartition& b) {
  if (b.is_certificate()) return json{{"kind", "certificate"}, {"v1", b.v1}};
  return json{{"kind", "infeasible-witness"}, {"witness", b.witness}, {"reason", b.reason}};
}

hyperspec::HypergraphTensorKind parse_kind(const std::string& which) {
  using K = hyperspec::HypergraphTensorKind;
  if (which == "A") return K::Adjacency;
  if (which == "D") return K::Degree;
  if (which == "L") return K::Laplacian;
  if (which == "Q") return K::SignlessLaplacian;
  throw hyperspec::Error("unknown tensor selector '" + which + "' (expected A, D, L or Q)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for k-uniform hypergraphs"};
  app.require_subcommand(1);

  if (const char* cap_env = std::getenv("HYPERSPEC_ENTRY_CAP")) {
    try {
      hyperspec::set_entry_cap(std::stoll(cap_env));
    } catch (const std::exception&) {
      std::cerr << "invalid HYPERSPEC_ENTRY_CAP value '" << cap_env << "'\n";
      return 2;
    }
  }

  std::string in_path, in_path_b, out_path, which = "Q", format = "json", config_path;
  hyperspec::PowerIterationConfig power;
  std::int64_t entry_cap_flag = 0;
  std::uint64_t seed = 1;
  int gen_n = 8, gen_k = 4, gen_m = 4;
  std::string gen_kind = "random";

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    cmd->add_option("--entry-cap", entry_cap_flag, "dense tensor entry cap override");
  };
  const auto add_power = [&](CLI::App* cmd) {
    cmd->add_option("--tol", power.tol, "bracket convergence tolerance");
    cmd->add_option("--max-iter", power.max_iter, "power iteration budget");
    cmd->add_option("--shift", power.shift, "diagonal shift");
  };

  auto* info = app.add_subcommand("info", "vertex/edge counts, degrees and connectivity");
  info->add_option("file", in_path)->required();
  info->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  add_common(info);

  auto* oddbip = app.add_subcommand("oddbip", "odd-bipartiteness certificate or witness");
  oddbip->add_option("file", in_path)->required();
  add_common(oddbip);

  auto* tensor = app.add_subcommand("tensor", "dump a hypergraph tensor (A, D, L or Q)");
  tensor->add_option("file", in_path)->required();
  tensor->add_option("--which", which)->check(CLI::IsMember({"A", "D", "L", "Q"}));
  add_common(tensor);

  auto* rho = app.add_subcommand("rho", "spectral radius eigenpair of A or Q");
  rho->add_option("file", in_path)->required();
  rho->add_option("--which", which)->check(CLI::IsMember({"A", "Q"}));
  add_common(rho);
  add_power(rho);

  auto* lrho = app.add_subcommand("lrho", "Laplacian spectral radius (odd-bipartite inputs)");
  lrho->add_option("file", in_path)->required();
  add_common(lrho);
  add_power(lrho);

  auto* zeroeig = app.add_subcommand("zeroeig", "explicit zero H-eigenvector of Q");
  zeroeig->add_option("file", in_path)->required();
  add_common(zeroeig);

  auto* product = app.add_subcommand("product", "Cartesian product of two hypergraphs");
  product->add_option("fileG", in_path)->required();
  product->add_option("fileH", in_path_b)->required();
  add_common(product);

  auto* gen = app.add_subcommand("gen", "generate a hypergraph deterministically");
  gen->add_option("--kind", gen_kind)->check(CLI::IsMember({"random", "oddbip"}));
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--k", gen_k, "uniformity")->required();
  gen->add_option("--m", gen_m, "edge count")->required();
  gen->add_option("--seed", seed, "PRNG seed");
  add_common(gen);

  auto* verify = app.add_subcommand("verify", "run the theorem verification suite");
  verify->add_option("--config", config_path, "suite configuration (JSON)");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  add_common(verify);
  add_power(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (entry_cap_flag > 0) hyperspec::set_entry_cap(entry_cap_flag);

    if (info->parsed()) {
      const auto g = load_hypergraph(in_path);
      const auto conn = hyperspec::connected_components(g);
      const Eigen::VectorXi d = hyperspec::degrees(g);
      if (format == "text") {
        std::ostringstream os;
        os << "n " << g.vertex_count() << "\nk " << g.uniformity() << "\nedges "
           << g.edge_count() << "\nconnected " << (conn.connected ? "yes" : "no")
           << "\ncomponents " << conn.component_count << "\ndegrees";
        for (int i = 0; i < d.size(); ++i) os << ' ' << d[i];
        os << '\n';
        write_output(os.str(), out_path);
      } else {
        write_output(json{{"n", g.vertex_count()},
                          {"k", g.uniformity()},
                          {"edge_count", g.edge_count()},
                          {"degrees", to_std(d.cast<double>())},
                          {"connected", conn.connected},
                          {"component_count", conn.component_count}}
                         .dump(2),
                     out_path);
      }
    } else if (oddbip->parsed()) {
      const auto g = load_hypergraph(in_path);
      write_output(bipartition_report(hyperspec::odd_bipartition(g)).dump(2), out_path);
    } else if (tensor->parsed()) {
      const auto g = load_hypergraph(in_path);
      write_output(hyperspec::dump_tensor(hyperspec::hypergraph_tensor(g, parse_kind(which))),
                   out_path);
    } else if (rho->parsed()) {
      const auto g = load_hypergraph(in_path);
      const hyperspec::EdgeListOperator<double> op(g, parse_kind(which));
      write_output(eigenpair_report(hyperspec::power_rho(op, power)).dump(2), out_path);
    } else if (lrho->parsed()) {
      const auto g = load_hypergraph(in_path);
      const auto cert = hyperspec::odd_bipartition(g);
      if (!cert.is_certificate()) {
        std::cerr << "lrho: unsupported input: not odd-bipartite ("
                  << (cert.reason.empty() ? "no certificate" : cert.reason)
                  << "); only the odd-bipartite Laplacian path is available\n";
        return 2;
      }
      write_output(eigenpair_report(hyperspec::laplacian_rho_eigenpair(g, cert, power)).dump(2),
                   out_path);
    } else if (zeroeig->parsed()) {
      const auto g = load_hypergraph(in_path);
      const auto cert = hyperspec::odd_bipartition(g);
      if (!cert.is_certificate()) {
        std::cerr << "zeroeig: unsupported input: not odd-bipartite\n";
        return 2;
      }
      const auto pair = hyperspec::zero_q_eigenvector(g, cert);
      write_output(json{{"lambda", pair.lambda},
                        {"bracket", {pair.lambda, pair.lambda}},
                        {"iterations", 0},
                        {"converged", true},
                        {"residual", pair.residual},
                        {"vector", to_std(pair.x)}}
                       .dump(2),
                   out_path);
    } else if (product->parsed()) {
      const auto g = load_hypergraph(in_path);
      const auto h = load_hypergraph(in_path_b);
      write_output(hyperspec::to_hg(hyperspec::cartesian_product(g, h)), out_path);
    } else if (gen->parsed()) {
      const auto kind = gen_kind == "random" ? hyperspec::GenKind::UniformRandom
                                             : hyperspec::GenKind::OddBipartite;
      const auto res = hyperspec::generate(kind, gen_n, gen_k, gen_m, seed);
      std::ostringstream os;
      os << "c gen kind=" << gen_kind << " n=" << gen_n << " k=" << gen_k << " m=" << gen_m
         << " seed=" << seed << " connected=" << (res.connected ? 1 : 0) << '\n'
         << hyperspec::to_hg(res.graph);
      write_output(os.str(), out_path);
    } else if (verify->parsed()) {
      hyperspec::SuiteConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path, std::ios::binary);
        if (!in) throw hyperspec::Error("cannot open config '" + config_path + "'");
        cfg = hyperspec::SuiteConfig::from_json(json::parse(in));
      }
      if (verify->count("--tol")) cfg.options.power.tol = power.tol;
      if (verify->count("--max-iter")) cfg.options.power.max_iter = power.max_iter;
      if (verify->count("--shift")) cfg.options.power.shift = power.shift;
      const auto report = hyperspec::run_suite(cfg);
      if (format == "csv") {
        write_output(report.to_csv(), out_path);
      } else if (format == "text") {
        std::ostringstream os;
        for (const auto& c : report.checks) {
          os << (c.pass ? "[PASS] " : "[FAIL] ") << c.instance << ' ' << c.name;
          if (!c.note.empty()) os << " (" << c.note << ')';
          os << '\n';
        }
        os << "overall " << (report.overall ? "pass" : "fail") << '\n';
        write_output(os.str(), out_path);
      } else {
        write_output(report.to_json().dump(2), out_path);
      }
      return report.overall ? 0 : 1;
    }
  } catch (const hyperspec::Error& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << app.get_name() << ": " << e.what() << '\n';
    return 2;
  }
  return 0;
}
