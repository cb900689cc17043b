// Command-line harness: exact ensembles, lattice walks, group-algebra gauge
// evolution, coined quantum walks, and the built-in icosahedron model.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcomb/ensembles.hpp"
#include "qcomb/gauge.hpp"
#include "qcomb/invariant_forms.hpp"
#include "qcomb/quantum_walk.hpp"
#include "qcomb/report.hpp"
#include "qcomb/selftest.hpp"
#include "qcomb/walks.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qcomb;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& tok : split(s, ',')) out.push_back(Rational::parse(tok));
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& tok : split(s, ',')) out.push_back(std::stol(tok));
  return out;
}

struct Options {
  std::string outdir = ".";
  long seed = 0;

  // ensemble
  int ens_alphabet = 2;
  long ens_length = 4;
  std::string ens_alpha;
  std::string ens_energies;
  std::string ens_sizes;
  double ens_temperature = 0.0;
  bool ens_binary_entropy = false;
  std::string ens_alpha1 = "1/2";

  // walk
  int walk_dim = 1;
  long walk_steps = 10;
  std::string walk_alpha;
  std::string walk_velocity = "0";
  std::string walk_tau;
  long walk_endpoint = 0;
  bool walk_count_macrostates = false;

  // gauge
  int gauge_cyclic = 0;
  std::string gauge_group_file;
  int gauge_degree = 0;
  std::string gauge_weights;
  long gauge_steps = 8;
  bool gauge_float = false;

  // qwalk
  int qw_sites = 64;
  long qw_steps = 10;
  std::string qw_coin = "hadamard";
  int qw_start = 0;
  std::string qw_coin_state = "dir0";

  // icosa
  std::string icosa_dump = "all";
};

fs::path out_path(const Options& opt, const std::string& name) {
  fs::path dir(opt.outdir);
  if (!dir.empty()) fs::create_directories(dir);
  return dir / name;
}

// ---------------------------------------------------------------- ensemble

int run_ensemble(const Options& opt) {
  if (opt.ens_binary_entropy) {
    Rational a1 = Rational::parse(opt.ens_alpha1);
    Rational a2 = Rational(1) - a1;
    if (a1.sign() <= 0 || a2.sign() <= 0)
      throw DomainError("binary entropy needs 0 < alpha1 < 1");
    const long t = opt.ens_length;
    NumericTable exact, approx;
    std::ostringstream csv;
    csv << "k1,exact,star,abs-error\n";
    for (long k = 0; k <= t; ++k) {
      double se = binomial_entropy_exact(k, t, a1, a2);
      double ss = binomial_entropy_star(static_cast<double>(k), t, a1.to_double());
      exact.emplace_back(std::to_string(k), se);
      approx.emplace_back(std::to_string(k), ss);
      csv << k << ',' << format_double(se) << ',' << format_double(ss) << ','
          << format_double(std::abs(se - ss)) << '\n';
    }
    write_file_atomic(out_path(opt, "ensemble_entropy.csv"), csv.str());
    json summary;
    summary["kind"] = "binary-entropy";
    summary["length"] = t;
    summary["alpha1"] = a1.str();
    summary["seed"] = opt.seed;
    summary["errors"] = json::parse(error_stats_json(compare_report(exact, approx)));
    write_file_atomic(out_path(opt, "ensemble_summary.json"), summary.dump(2) + "\n");
    std::cout << "wrote ensemble_entropy.csv, ensemble_summary.json\n";
    return 0;
  }

  if (!opt.ens_energies.empty()) {
    auto energies = parse_doubles(opt.ens_energies);
    EnergyPartition part;
    if (!opt.ens_sizes.empty()) {
      auto sizes = parse_longs(opt.ens_sizes);
      if (sizes.size() != energies.size())
        throw DomainError("energies and sizes must have equal length");
      part.levels = energies;
      part.sizes = sizes;
      for (long s : sizes) part.entropies.push_back(std::log(static_cast<double>(s)));
    } else {
      part = microcanonical(energies);
    }
    std::ostringstream csv;
    csv << "macrostate,size,probability,entropy\n";
    if (opt.ens_temperature > 0.0) {
      auto canon = canonical_weights(part, opt.ens_temperature);
      for (std::size_t k = 0; k < part.levels.size(); ++k)
        csv << format_double(part.levels[k]) << ',' << part.sizes[k] << ','
            << format_double(canon.level_probabilities[k]) << ','
            << format_double(part.entropies[k]) << '\n';
    } else {
      long total = 0;
      for (long s : part.sizes) total += s;
      for (std::size_t k = 0; k < part.levels.size(); ++k)
        csv << format_double(part.levels[k]) << ',' << part.sizes[k] << ','
            << Rational(part.sizes[k], total).str() << ','
            << format_double(part.entropies[k]) << '\n';
    }
    write_file_atomic(out_path(opt, "ensemble_table.csv"), csv.str());
    std::cout << "wrote ensemble_table.csv\n";
    return 0;
  }

  const int m = opt.ens_alphabet;
  const long t = opt.ens_length;
  WeightVector alpha = opt.ens_alpha.empty() ? WeightVector::uniform(m)
                                             : WeightVector(parse_rationals(opt.ens_alpha));
  if (alpha.size() != m) throw DomainError("need one weight per symbol");
  std::ostringstream csv;
  csv << "macrostate,size,probability,entropy\n";
  for (const auto& k : enumerate_macrostates(m, t)) {
    std::ostringstream key;
    for (std::size_t i = 0; i < k.counts.size(); ++i)
      key << (i ? " " : "") << k.counts[i];
    Integer size = macrostate_size(k);
    csv << key.str() << ',' << size.get_str() << ','
        << multinomial_probability(k, alpha).str() << ','
        << format_double(log_integer(size == 0 ? Integer(1) : size)) << '\n';
  }
  write_file_atomic(out_path(opt, "ensemble_table.csv"), csv.str());
  std::cout << "wrote ensemble_table.csv\n";
  return 0;
}

// -------------------------------------------------------------------- walk

int run_walk(const Options& opt) {
  const int d = opt.walk_dim;
  const long t = opt.walk_steps;

  if (opt.walk_count_macrostates) {
    std::cout << walk_macrostate_count(d, t) << "\n";
    return 0;
  }

  WeightVector alpha = [&] {
    if (!opt.walk_alpha.empty()) return WeightVector(parse_rationals(opt.walk_alpha));
    if (d == 1) {
      Rational v = Rational::parse(opt.walk_velocity);
      Rational a1 = (Rational(1) + v) / Rational(2);
      return WeightVector({a1, Rational(1) - a1});
    }
    return WeightVector::uniform(2 * d);
  }();
  if (alpha.size() != 2 * d) throw DomainError("need 2d step weights");

  if (!opt.walk_tau.empty()) {
    auto tau = parse_longs(opt.walk_tau);
    Rational v(0);
    for (int i = 0; i < d; ++i) v += alpha[i];
    for (int i = d; i < 2 * d; ++i) v -= alpha[i];
    auto maxima = max_probability_trajectories(tau, opt.walk_endpoint, v);
    json out;
    out["tau"] = tau;
    out["endpoint"] = opt.walk_endpoint;
    out["velocity"] = v.str();
    out["seed"] = opt.seed;
    out["count"] = maxima.size();
    out["probability"] = trajectory_probability_exact(maxima.front(), v).str();
    json list = json::array();
    for (const auto& traj : maxima) list.push_back(traj.points);
    out["trajectories"] = list;
    write_file_atomic(out_path(opt, "walk_trajectories.json"), out.dump(2) + "\n");
    std::cout << "wrote walk_trajectories.json (" << maxima.size() << " maximizer(s))\n";
    return 0;
  }

  auto dist = walk_distribution(d, t, alpha);
  bool uniform = true;
  for (int i = 1; i < 2 * d; ++i)
    if (!(alpha[i] == alpha[0])) uniform = false;
  const bool have_continuum = d == 1 || uniform;
  double v1 = d == 1 ? (alpha[0] - alpha[1]).to_double() : 0.0;

  NumericTable exact_tab, approx_tab;
  NumericTable exact_peak, approx_peak;  // within two standard deviations
  const double sigma_window = 2.0 * std::sqrt(static_cast<double>(t));
  std::ostringstream csv;
  csv << "point,exact,continuum,abs-error\n";
  for (const auto& [pt, p] : dist) {
    std::ostringstream key;
    for (std::size_t i = 0; i < pt.coords.size(); ++i)
      key << (i ? " " : "") << pt.coords[i];
    double pe = p.to_double();
    csv << key.str() << ',' << p.str();
    if (have_continuum) {
      double pc;
      double center_dist;
      if (d == 1) {
        pc = p_star(pt.coords[0], static_cast<double>(t), v1);
        center_dist = std::abs(pt.coords[0] - v1 * static_cast<double>(t));
      } else {
        std::vector<double> x(pt.coords.begin(), pt.coords.end());
        pc = 2.0 * heat_kernel(static_cast<double>(t) / (2.0 * d), x);
        center_dist = 0.0;
        for (int xi : pt.coords) center_dist += std::abs(xi);
      }
      exact_tab.emplace_back(key.str(), pe);
      approx_tab.emplace_back(key.str(), pc);
      if (center_dist <= sigma_window) {
        exact_peak.emplace_back(key.str(), pe);
        approx_peak.emplace_back(key.str(), pc);
      }
      csv << ',' << format_double(pc) << ',' << format_double(std::abs(pe - pc));
    } else {
      csv << ",,";
    }
    csv << '\n';
  }
  write_file_atomic(out_path(opt, "walk_distribution.csv"), csv.str());
  json summary;
  summary["dim"] = d;
  summary["steps"] = t;
  summary["seed"] = opt.seed;
  if (have_continuum) {
    summary["errors"] = json::parse(error_stats_json(compare_report(exact_tab, approx_tab)));
    if (!exact_peak.empty())
      summary["errors_near_peak"] =
          json::parse(error_stats_json(compare_report(exact_peak, approx_peak)));
  }
  write_file_atomic(out_path(opt, "walk_summary.json"), summary.dump(2) + "\n");
  std::cout << "wrote walk_distribution.csv, walk_summary.json\n";
  return 0;
}

// ------------------------------------------------------------------- gauge

int run_gauge(const Options& opt) {
  std::shared_ptr<const GroupTable> group;
  if (opt.gauge_cyclic > 0) {
    group = std::make_shared<const GroupTable>(cyclic_group(opt.gauge_cyclic));
  } else if (!opt.gauge_group_file.empty()) {
    std::ifstream in(opt.gauge_group_file);
    if (!in) throw DomainError("cannot read group file " + opt.gauge_group_file);
    std::stringstream buf;
    buf << in.rdbuf();
    int degree = opt.gauge_degree;
    if (degree == 0) {
      // infer the degree from the largest point mentioned
      std::string text = buf.str();
      for (char& ch : text)
        if (ch == '(' || ch == ')' || ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
      for (const auto& tok : split(text, ' ')) {
        if (tok.empty()) continue;
        try {
          degree = std::max(degree, static_cast<int>(std::stol(tok)));
        } catch (const std::exception&) {
          throw ParseError("bad token in group file: " + tok);
        }
      }
      if (degree == 0) throw ParseError("no points found in group file");
    }
    auto gens = parse_generator_lines(buf.str(), degree);
    group = std::make_shared<const GroupTable>(GroupTable::generate(degree, gens));
  } else {
    throw DomainError("gauge needs --cyclic N or --group-file FILE");
  }

  std::vector<Rational> weights;
  if (opt.gauge_weights.empty()) {
    weights.assign(group->order(), Rational(1, static_cast<long>(group->order())));
  } else {
    weights = parse_rationals(opt.gauge_weights);
    if (static_cast<int>(weights.size()) != group->order())
      throw DomainError("need one weight per group element (table order)");
  }

  json summary;
  summary["order"] = group->order();
  summary["steps"] = opt.gauge_steps;
  summary["seed"] = opt.seed;
  std::ostringstream csv;
  csv << "element,weight\n";
  long mults = 0;
  if (opt.gauge_float) {
    std::vector<double> wf;
    for (const auto& w : weights) wf.push_back(w.to_double());
    GroupAlgebraElementF a(group, wf);
    auto res = a.power(static_cast<unsigned long long>(opt.gauge_steps), &mults);
    for (int i = 0; i < group->order(); ++i)
      csv << group->element(i).cycle_string() << ',' << format_double(res.weights()[i])
          << '\n';
    summary["backend"] = "float";
  } else {
    GroupAlgebraElement a(group, weights);
    auto res = a.power(static_cast<unsigned long long>(opt.gauge_steps), &mults);
    for (int i = 0; i < group->order(); ++i)
      csv << group->element(i).cycle_string() << ',' << res.weights()[i].str() << '\n';
    summary["backend"] = "exact";
  }
  summary["multiplications"] = mults;
  write_file_atomic(out_path(opt, "gauge_distribution.csv"), csv.str());
  write_file_atomic(out_path(opt, "gauge_summary.json"), summary.dump(2) + "\n");
  std::cout << "wrote gauge_distribution.csv, gauge_summary.json (" << mults
            << " multiplications)\n";
  return 0;
}

// ------------------------------------------------------------------- qwalk

int run_qwalk(const Options& opt) {
  CoinOperator coin = [&] {
    if (opt.qw_coin == "hadamard") return hadamard_coin();
    if (opt.qw_coin.rfind("grover:", 0) == 0)
      return grover_coin(std::stoi(opt.qw_coin.substr(7)));
    throw DomainError("coin must be 'hadamard' or 'grover:k'");
  }();

  WalkState state = [&] {
    if (opt.qw_coin_state == "dir0")
      return WalkState::basis(opt.qw_sites, coin.dim, opt.qw_start, 0);
    if (opt.qw_coin_state == "symmetric") {
      if (coin.dim != 2) throw DomainError("symmetric preset needs a 2-dim coin");
      const double s = 1.0 / std::sqrt(2.0);
      std::vector<Amplitude> cs{Amplitude(s, 0.0), Amplitude(0.0, s)};
      return WalkState::localized(opt.qw_sites, coin.dim, opt.qw_start, cs);
    }
    // explicit list re,im;re,im;...
    std::vector<Amplitude> cs;
    for (const auto& pair : split(opt.qw_coin_state, ';')) {
      auto parts = split(pair, ',');
      if (parts.size() != 2) throw ParseError("coin state needs re,im pairs");
      cs.emplace_back(std::stod(parts[0]), std::stod(parts[1]));
    }
    return WalkState::localized(opt.qw_sites, coin.dim, opt.qw_start, cs);
  }();

  WalkState evolved = qw_evolve(std::move(state), coin, opt.qw_steps);
  auto dist = qw_distribution(evolved);
  std::ostringstream csv;
  csv << "site,probability\n";
  for (std::size_t s = 0; s < dist.size(); ++s)
    csv << s << ',' << format_double(dist[s]) << '\n';
  write_file_atomic(out_path(opt, "qwalk_distribution.csv"), csv.str());

  auto [mean, sigma] = qw_position_moments(evolved);
  json summary;
  summary["sites"] = opt.qw_sites;
  summary["steps"] = opt.qw_steps;
  summary["coin"] = opt.qw_coin;
  summary["seed"] = opt.seed;
  summary["norm"] = evolved.norm();
  summary["mean"] = mean;
  summary["stddev"] = sigma;
  write_file_atomic(out_path(opt, "qwalk_summary.json"), summary.dump(2) + "\n");
  std::cout << "wrote qwalk_distribution.csv, qwalk_summary.json\n";
  return 0;
}

// ------------------------------------------------------------------- icosa

std::string orbital_text(const std::vector<OrbitalMatrix>& orbitals) {
  std::ostringstream out;
  for (std::size_t k = 0; k < orbitals.size(); ++k) {
    out << "Delta " << (k + 1) << "\n";
    for (const auto& row : orbitals[k]) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

int run_icosa(const Options& opt) {
  const auto& model = icosahedron_model();
  const bool all = opt.icosa_dump == "all";
  if (all || opt.icosa_dump == "orbitals")
    write_file_atomic(out_path(opt, "icosa_orbitals.txt"), orbital_text(*model.orbitals));

  if (all || opt.icosa_dump == "forms") {
    std::ostringstream out;
    out << "group order " << model.group.order() << ", generators a = "
        << model.gen_a.cycle_string() << ", b = " << model.gen_b.cycle_string() << "\n\n";
    for (const auto& form : model.forms) {
      out << "B[" << form.label() << "] dimension " << form.dimension() << "\n";
      out << "coefficients:";
      for (const auto& cf : form.coefficients()) out << " | " << cf.str();
      out << "\n";
      CycMatrix m = form.matrix();
      for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) out << " | ";
          auto r = row[j].rational_part();
          out << (r ? r->str() : row[j].str());
        }
        out << "\n";
      }
      out << "\n";
    }
    write_file_atomic(out_path(opt, "icosa_forms.txt"), out.str());
  }

  if (all || opt.icosa_dump == "born") {
    std::ostringstream out;
    out << "born probabilities between basis states e_i, e_j\n\n";
    for (const auto& form : model.forms) {
      out << "B[" << form.label() << "]\n";
      for (int i = 0; i < 12; ++i) {
        NatVector ei(12, Integer(0));
        ei[i] = 1;
        for (int j = 0; j < 12; ++j) {
          NatVector ej(12, Integer(0));
          ej[j] = 1;
          Cyclotomic p = form.born(ei, ej);
          auto r = p.rational_part();
          if (j) out << " | ";
          out << (r ? r->str() : p.str());
        }
        out << "\n";
      }
      out << "\n";
    }
    write_file_atomic(out_path(opt, "icosa_born.txt"), out.str());
  }
  std::cout << "wrote icosa dumps (" << opt.icosa_dump << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorial models: ensembles, walks, gauge evolution, quantum walks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI/TOML file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Options opt;
  if (const char* env = std::getenv("QCOMB_OUTDIR")) opt.outdir = env;
  app.add_option("--outdir", opt.outdir, "output directory");
  app.add_option("--seed", opt.seed, "seed recorded in summaries");

  auto* ens = app.add_subcommand("ensemble", "multinomial / canonical ensembles");
  ens->add_option("-M,--alphabet", opt.ens_alphabet, "alphabet size");
  ens->add_option("-T,--length", opt.ens_length, "sequence length");
  ens->add_option("--alpha", opt.ens_alpha, "symbol weights, e.g. 1/2,1/3,1/6");
  ens->add_option("--energies", opt.ens_energies, "energy per state or level");
  ens->add_option("--sizes", opt.ens_sizes, "level sizes (with --energies)");
  ens->add_option("--temperature", opt.ens_temperature, "Gibbs temperature");
  ens->add_flag("--binary-entropy", opt.ens_binary_entropy, "exact-vs-Gaussian entropy table");
  ens->add_option("--alpha1", opt.ens_alpha1, "first weight for --binary-entropy");

  auto* walk = app.add_subcommand("walk", "classical lattice walks");
  walk->add_option("-d,--dim", opt.walk_dim, "lattice dimension");
  walk->add_option("-T,--steps", opt.walk_steps, "number of steps");
  walk->add_option("--alpha", opt.walk_alpha, "2d step weights");
  walk->add_option("-v,--velocity", opt.walk_velocity, "drift velocity (d=1)");
  walk->add_option("--tau", opt.walk_tau, "observation times 0,t1,...,T");
  walk->add_option("--endpoint", opt.walk_endpoint, "endpoint X for --tau");
  walk->add_flag("--count-macrostates", opt.walk_count_macrostates,
                 "print the reachable displacement count");

  auto* gauge = app.add_subcommand("gauge", "group-algebra connection statistics");
  gauge->add_option("--cyclic", opt.gauge_cyclic, "cyclic group order");
  gauge->add_option("--group-file", opt.gauge_group_file, "generator file (cycles per line)");
  gauge->add_option("--degree", opt.gauge_degree, "degree override for --group-file");
  gauge->add_option("--weights", opt.gauge_weights, "weight per element, table order");
  gauge->add_option("-T,--steps", opt.gauge_steps, "number of time steps");
  gauge->add_flag("--float", opt.gauge_float, "float backend");

  auto* qwalk = app.add_subcommand("qwalk", "coined quantum walk on a cycle");
  qwalk->add_option("-N,--sites", opt.qw_sites, "cycle length");
  qwalk->add_option("-T,--steps", opt.qw_steps, "number of steps");
  qwalk->add_option("--coin", opt.qw_coin, "hadamard or grover:k");
  qwalk->add_option("--start", opt.qw_start, "initial site");
  qwalk->add_option("--coin-state", opt.qw_coin_state,
                    "dir0, symmetric, or re,im;re,im;...");

  auto* icosa = app.add_subcommand("icosa", "built-in icosahedron model dumps");
  icosa->add_option("--dump", opt.icosa_dump, "orbitals, forms, born, or all");

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (ens->parsed()) return run_ensemble(opt);
    if (walk->parsed()) return run_walk(opt);
    if (gauge->parsed()) return run_gauge(opt);
    if (qwalk->parsed()) return run_qwalk(opt);
    if (icosa->parsed()) return run_icosa(opt);
    if (selftest->parsed()) return qcomb::selftest::run_and_report(std::cout) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
