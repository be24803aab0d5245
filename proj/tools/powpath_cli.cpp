// Command-line front end: threshold tables, extremal graph emission, clique
// component inspection, the exact power-path/cycle oracle, tightness
// verification, random probe campaigns, and exhaustive small-graph streams.
// Graphs flow as graph6 on stdin/stdout; tabular results as CSV or JSON.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powpath/components.hpp"
#include "powpath/errors.hpp"
#include "powpath/extremal.hpp"
#include "powpath/graphs.hpp"
#include "powpath/harness.hpp"
#include "powpath/powersearch.hpp"
#include "powpath/thresholds.hpp"

namespace {

powpath::Graph read_graph6_input(const std::string& path) {
  std::string line;
  if (path == "-") {
    if (!std::getline(std::cin, line)) throw powpath::domain_error("no graph6 input on stdin");
  } else {
    std::ifstream f(path);
    if (!f) throw powpath::domain_error("cannot open " + path);
    if (!std::getline(f, line)) throw powpath::domain_error("no graph6 line in " + path);
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return powpath::from_graph6(line);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(xs[i]);
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw powpath::domain_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-th powers of paths and cycles under minimum-degree bounds"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::uint64_t budget = powpath::kDefaultOracleBudget;
  std::string format = "csv";
  app.add_option("--seed", seed, "seed for sampling campaigns")->capture_default_str();
  app.add_option("--budget", budget, "search node budget")->capture_default_str();
  app.add_option("--out", format, "tabular output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* thresholds =
      app.add_subcommand("thresholds", "guaranteed length profiles for (k, n)");
  int tk = 2;
  long long tn = 0;
  long long tdelta = -1;
  bool figure = false;
  thresholds->add_option("--k", tk, "power")->required();
  thresholds->add_option("--n", tn, "host order")->required();
  thresholds->add_option("--delta", tdelta, "single minimum degree (default: whole table)");
  thresholds->add_flag("--figure", figure, "emit delta,pp,pc,guess rows instead");
  thresholds->fallthrough();

  auto* extremal = app.add_subcommand("extremal", "emit an extremal graph as graph6");
  int ek = 2;
  long long en = 0;
  long long edelta = 0;
  std::string variant = "path";
  extremal->add_option("--k", ek, "power")->required();
  extremal->add_option("--n", en, "host order")->required();
  extremal->add_option("--delta", edelta, "minimum degree")->required();
  extremal->add_option("--variant", variant, "path or cycle extremal construction")
      ->check(CLI::IsMember({"path", "cycle"}))
      ->capture_default_str();
  extremal->fallthrough();

  auto* components =
      app.add_subcommand("components", "clique component table of a graph6 input");
  int ck = 2;
  std::string cpath = "-";
  std::string cfactor;
  components->add_option("--k", ck, "clique order for the component relation")->required();
  components->add_option("--in", cpath, "graph6 file, or - for stdin")->capture_default_str();
  components->add_option("--factor", cfactor, "also pack each component")
      ->check(CLI::IsMember({"exact", "greedy"}));
  components->fallthrough();

  auto* search = app.add_subcommand("search", "power path/cycle oracle on a graph6 input");
  int sk = 2;
  std::string spath = "-";
  std::string mode = "longest-path";
  int slen = 0;
  search->add_option("--k", sk, "power")->required();
  search->add_option("--in", spath, "graph6 file, or - for stdin")->capture_default_str();
  search->add_option("--mode", mode, "longest-path or cycle")
      ->check(CLI::IsMember({"longest-path", "cycle"}))
      ->capture_default_str();
  search->add_option("--len", slen, "cycle length (mode=cycle)");
  search->fallthrough();

  auto* verify = app.add_subcommand("verify", "tightness record for one (k, n, delta)");
  int vk = 2;
  long long vn = 0;
  long long vdelta = 0;
  verify->add_option("--k", vk, "power")->required();
  verify->add_option("--n", vn, "host order")->required();
  verify->add_option("--delta", vdelta, "minimum degree")->required();
  verify->fallthrough();

  auto* probe = app.add_subcommand("probe", "random-graph campaign records");
  powpath::CampaignConfig cfg;
  probe->add_option("--k-min", cfg.k_min, "lowest power")->required();
  probe->add_option("--k-max", cfg.k_max, "highest power")->required();
  probe->add_option("--n-min", cfg.n_min, "smallest host order")->required();
  probe->add_option("--n-max", cfg.n_max, "largest host order")->required();
  probe->add_option("--samples", cfg.samples_per_cell, "graphs per (k, n) cell")->required();
  probe->add_option("--out-path", cfg.output_path, "write records here instead of stdout");
  probe->fallthrough();

  auto* enumerate =
      app.add_subcommand("enumerate", "all small graphs above a degree floor, graph6 lines");
  int xn = 0;
  int xmin = 0;
  enumerate->add_option("--n", xn, "order (at most 8)")->required();
  enumerate->add_option("--min-degree", xmin, "degree floor")->capture_default_str();
  enumerate->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*thresholds) {
      if (figure) {
        if (format == "csv") {
          std::cout << powpath::figure1_csv(tk, tn);
        } else {
          nlohmann::json rows = nlohmann::json::array();
          for (const powpath::Figure1Row& r : powpath::figure1_data(tk, tn))
            rows.push_back({{"delta", r.delta}, {"pp", r.pp}, {"pc", r.pc}, {"guess", r.guess}});
          std::cout << rows.dump(2) << '\n';
        }
      } else if (tdelta >= 0) {
        powpath::PowerParams p{tk, tn, tdelta};
        powpath::ThresholdProfile t = powpath::compute_profile(p);
        if (format == "csv") {
          std::cout << "k,n,delta,r_p,r_c,s_p,s_c,pp,pc\n"
                    << tk << ',' << tn << ',' << tdelta << ',' << t.r_p << ',' << t.r_c << ','
                    << t.s_p << ',' << t.s_c << ',' << t.pp << ',' << t.pc << '\n';
        } else {
          nlohmann::json row = {{"k", tk},     {"n", tn},     {"delta", tdelta},
                                {"r_p", t.r_p}, {"r_c", t.r_c}, {"s_p", t.s_p},
                                {"s_c", t.s_c}, {"pp", t.pp},   {"pc", t.pc}};
          std::cout << row.dump(2) << '\n';
        }
      } else {
        if (format == "csv") {
          std::cout << powpath::threshold_table_csv(tk, tn);
        } else {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& [delta, t] : powpath::threshold_table(tk, tn))
            rows.push_back({{"k", tk},     {"n", tn},     {"delta", delta},
                            {"r_p", t.r_p}, {"r_c", t.r_c}, {"s_p", t.s_p},
                            {"s_c", t.s_c}, {"pp", t.pp},   {"pc", t.pc}});
          std::cout << rows.dump(2) << '\n';
        }
      }
    } else if (*extremal) {
      powpath::PowerParams p{ek, en, edelta};
      auto built = variant == "path" ? powpath::build_G_p(p) : powpath::build_G_c(p);
      std::cout << powpath::to_graph6(built.first) << '\n';
    } else if (*components) {
      powpath::Graph g = read_graph6_input(cpath);
      powpath::CliqueComponentDecomposition d = powpath::decompose(g, ck);
      std::vector<powpath::ConnectedCliqueFactor> factors;
      if (!cfactor.empty())
        for (int c = 0; c < d.count(); ++c)
          factors.push_back(cfactor == "exact" ? powpath::ck_factor_exact(g, d, c, budget)
                                               : powpath::ck_factor_greedy(g, d, c));
      if (format == "csv") {
        std::cout << "component,size,exterior,interior";
        if (!factors.empty()) std::cout << ",factor_cliques,factor_cover";
        std::cout << '\n';
        for (int c = 0; c < d.count(); ++c) {
          const auto& comp = d.components[c];
          std::cout << c << ',' << comp.vertices.count() << ',' << comp.exterior.count() << ','
                    << comp.interior.count();
          if (!factors.empty())
            std::cout << ',' << factors[c].count() << ',' << factors[c].size();
          std::cout << '\n';
        }
      } else {
        nlohmann::json out;
        out["k"] = ck;
        out["count"] = d.count();
        out["interior_size"] = d.interior().count();
        out["components"] = nlohmann::json::array();
        for (int c = 0; c < d.count(); ++c) {
          const auto& comp = d.components[c];
          nlohmann::json jc = {{"id", c},
                               {"size", comp.vertices.count()},
                               {"exterior", comp.exterior.count()},
                               {"interior", comp.interior.count()},
                               {"vertices", comp.vertices.to_vector()}};
          if (!factors.empty()) {
            jc["factor_cliques"] = factors[c].cliques;
            jc["factor_cover"] = factors[c].size();
          }
          out["components"].push_back(jc);
        }
        std::cout << out.dump(2) << '\n';
      }
    } else if (*search) {
      powpath::Graph g = read_graph6_input(spath);
      if (mode == "longest-path") {
        powpath::PowerPathWitness w = powpath::longest_power_path_exact(g, sk, budget);
        std::cout << join(w.sequence) << '\n';
      } else {
        if (slen <= 0) throw powpath::domain_error("--len is required for mode=cycle");
        std::optional<powpath::PowerCycleWitness> w =
            powpath::find_power_cycle(g, sk, slen, budget);
        if (!w) {
          std::cerr << "no witness: certified absent\n";
          return 1;
        }
        std::cout << join(w->cycle) << '\n';
      }
    } else if (*verify) {
      std::vector<powpath::VerificationRecord> recs{
          powpath::verify_tightness(vk, vn, vdelta, budget)};
      std::cout << (format == "csv" ? powpath::records_csv(recs) : powpath::records_json(recs));
      if (recs[0].outcome != powpath::Outcome::pass) return 1;
    } else if (*probe) {
      cfg.seed = seed;
      cfg.budget = budget;
      std::vector<powpath::VerificationRecord> recs = powpath::run_probe_campaign(cfg);
      emit(format == "csv" ? powpath::records_csv(recs) : powpath::records_json(recs),
           cfg.output_path);
    } else if (*enumerate) {
      for (const powpath::Graph& g : powpath::enumerate_small_graphs(xn, xmin))
        std::cout << powpath::to_graph6(g) << '\n';
    }
  } catch (const powpath::search_budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
