#include "iqmis/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "iqmis/classical.hpp"
#include "iqmis/ising.hpp"
#include "iqmis/qaoa.hpp"
#include "iqmis/rng.hpp"

namespace iqmis {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size())
    throw std::invalid_argument("config: bad integer for '" + key + "': " + v);
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size())
    throw std::invalid_argument("config: bad unsigned integer for '" + key + "': " + v);
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double out = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for '" + key + "': " + v);
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("config: bad flag for '" + key + "' (use true/false): " + v);
}

std::vector<std::string> split_list(const std::string& key, const std::string& v) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(v);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("config: empty item in '" + key + "'");
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("config: empty list for '" + key + "'");
  return out;
}

std::uint64_t fnv_string(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t kWeightTag = 0x77656967687421ULL;

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key == "algorithms") cfg.algorithms = split_list(key, val);
    else if (key == "n_min") cfg.n_min = to_int(key, val);
    else if (key == "n_max") cfg.n_max = to_int(key, val);
    else if (key == "instances") cfg.instances = to_int(key, val);
    else if (key == "q") cfg.q = val == "auto" ? std::nullopt : std::optional<double>(to_double(key, val));
    else if (key == "lambda") cfg.lambda = to_double(key, val);
    else if (key == "weighted") cfg.weighted = to_bool(key, val);
    else if (key == "weight_lo") cfg.weight_lo = to_double(key, val);
    else if (key == "weight_hi") cfg.weight_hi = to_double(key, val);
    else if (key == "p") cfg.p = to_int(key, val);
    else if (key == "tau") cfg.tau = to_double(key, val);
    else if (key == "anneal_steps") cfg.anneal_steps = to_int(key, val);
    else if (key == "seed") cfg.seed = to_u64(key, val);
    else if (key == "brute_force_threshold") cfg.brute_force_threshold = to_int(key, val);
    else if (key == "restarts") cfg.restarts = to_int(key, val);
    else if (key == "max_evals") cfg.max_evals = to_int(key, val);
    else if (key == "tolerance") cfg.tolerance = to_double(key, val);
    else if (key == "workers") cfg.workers = to_int(key, val);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.algorithms.empty()) throw std::invalid_argument("config: no algorithms");
  for (const std::string& token : cfg.algorithms) parse_algorithm(token);
  if (cfg.n_min < 1 || cfg.n_max > 24 || cfg.n_min > cfg.n_max)
    throw std::invalid_argument("config: need 1 <= n_min <= n_max <= 24");
  if (cfg.instances < 1) throw std::invalid_argument("config: instances must be positive");
  if (cfg.q && (*cfg.q < 0.0 || *cfg.q > 1.0))
    throw std::invalid_argument("config: q must lie in [0,1]");
  if (!(cfg.lambda > 0.0)) throw std::invalid_argument("config: lambda must be positive");
  if (!(cfg.weight_lo > 0.0) || cfg.weight_hi < cfg.weight_lo)
    throw std::invalid_argument("config: need 0 < weight_lo <= weight_hi");
  if (cfg.p < 1) throw std::invalid_argument("config: p must be at least 1");
  if (!(cfg.tau > 0.0)) throw std::invalid_argument("config: tau must be positive");
  if (cfg.anneal_steps < 0) throw std::invalid_argument("config: anneal_steps must be nonnegative");
  if (cfg.brute_force_threshold < 0)
    throw std::invalid_argument("config: brute_force_threshold must be nonnegative");
  if (cfg.restarts < 1 || cfg.max_evals < 1)
    throw std::invalid_argument("config: restarts and max_evals must be positive");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("config: tolerance must be positive");
  if (cfg.workers < 1) throw std::invalid_argument("config: workers must be positive");
}

AlgorithmSpec parse_algorithm(const std::string& token) {
  AlgorithmSpec spec;
  if (token == "min") return spec;
  if (token == "max") return {AlgorithmSpec::Kind::max, Rule::minq, AlgorithmSpec::Backend::qaoa};
  if (token == "wmin") return {AlgorithmSpec::Kind::wmin, Rule::minq, AlgorithmSpec::Backend::qaoa};
  if (token == "wmax") return {AlgorithmSpec::Kind::wmax, Rule::minq, AlgorithmSpec::Backend::qaoa};
  if (token == "qaoa-direct")
    return {AlgorithmSpec::Kind::qaoa_direct, Rule::minq, AlgorithmSpec::Backend::qaoa};
  std::string base = token;
  AlgorithmSpec::Backend backend = AlgorithmSpec::Backend::qaoa;
  if (token.ends_with("-anneal")) {
    base = token.substr(0, token.size() - 7);
    backend = AlgorithmSpec::Backend::anneal;
  } else if (token.ends_with("-mimic")) {
    base = token.substr(0, token.size() - 6);
    backend = AlgorithmSpec::Backend::mimic;
  }
  Rule rule;
  try {
    rule = parse_rule(base);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown algorithm '" + token + "'");
  }
  if (backend == AlgorithmSpec::Backend::mimic &&
      (rule == Rule::edge_anti || rule == Rule::edge_corr))
    throw std::invalid_argument("algorithm '" + token + "': mimic has no usable pair correlators");
  return {AlgorithmSpec::Kind::iqa, rule, backend};
}

double standard_error(const std::vector<double>& values) {
  const std::size_t k = values.size();
  if (k < 2) return 0.0;
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(k);
  double ss = 0.0;
  for (double x : values) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(k - 1)) / std::sqrt(static_cast<double>(k));
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows) {
  std::vector<SummaryRow> out;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    std::vector<double> ratios;
    while (j < rows.size() && rows[j].algorithm == rows[i].algorithm && rows[j].n == rows[i].n) {
      if (rows[j].ok) ratios.push_back(rows[j].ratio);
      ++j;
    }
    SummaryRow s;
    s.algorithm = rows[i].algorithm;
    s.n = rows[i].n;
    s.count = static_cast<int>(ratios.size());
    if (!ratios.empty())
      s.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) /
                     static_cast<double>(ratios.size());
    s.sem_ratio = standard_error(ratios);
    out.push_back(std::move(s));
    i = j;
  }
  return out;
}

namespace {

struct Instance {
  std::uint64_t seed = 0;
  double q = 0.0;
  std::optional<Graph> graph;
  std::uint64_t digest = 0;
  double opt = 0.0;
};

OptimizerConfig optimizer_from(const ExperimentConfig& cfg, std::uint64_t seed) {
  OptimizerConfig oc;
  oc.restarts = cfg.restarts;
  oc.max_evals = cfg.max_evals;
  oc.tolerance = cfg.tolerance;
  oc.seed = seed;
  return oc;
}

void compute_row(ExperimentRow& row, const Instance& inst, const ExperimentConfig& cfg) {
  if (!inst.graph) return;  // generation failed; row stays an error row
  row.have_graph = true;
  row.digest = inst.digest;
  row.opt_value = inst.opt;
  const std::uint64_t row_seed = mix64(inst.seed, fnv_string(row.algorithm));
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const AlgorithmSpec spec = parse_algorithm(row.algorithm);
    switch (spec.kind) {
      case AlgorithmSpec::Kind::min:
        row.set_value = greedy_min(*inst.graph).set_value;
        row.feasible = true;
        break;
      case AlgorithmSpec::Kind::max:
        row.set_value = greedy_max(*inst.graph).set_value;
        row.feasible = true;
        break;
      case AlgorithmSpec::Kind::wmin:
        row.set_value = greedy_wmin(*inst.graph).set_value;
        row.feasible = true;
        break;
      case AlgorithmSpec::Kind::wmax:
        row.set_value = greedy_wmax(*inst.graph).set_value;
        row.feasible = true;
        break;
      case AlgorithmSpec::Kind::qaoa_direct: {
        const IsingCost cost = encode_mis(*inst.graph, PenaltyWeight(cfg.lambda));
        const OptimizeResult opt = optimize_angles(cost, cfg.p, optimizer_from(cfg, row_seed));
        row.set_value = -opt.value / 2.0;
        row.feasible = true;
        break;
      }
      case AlgorithmSpec::Kind::iqa: {
        IqaConfig ic;
        ic.rule = spec.rule;
        ic.lambda = cfg.lambda;
        ic.brute_force_threshold = cfg.brute_force_threshold;
        ic.seed = row_seed;
        switch (spec.backend) {
          case AlgorithmSpec::Backend::qaoa:
            ic.backend = QaoaBackend{cfg.p, optimizer_from(cfg, 0)};
            break;
          case AlgorithmSpec::Backend::anneal:
            ic.backend = AnnealBackend{AnnealSchedule{cfg.tau, cfg.anneal_steps, false}};
            break;
          case AlgorithmSpec::Backend::mimic:
            ic.backend = MimicBackend{std::nullopt, optimizer_from(cfg, 0)};
            break;
        }
        const IqaResult r = run_iqa(*inst.graph, ic);
        row.set_value = r.set_value;
        row.feasible = r.feasible;
        row.deviation = r.deviation_seen;
        break;
      }
    }
    row.ratio = row.set_value / inst.opt;
    row.ok = true;
  } catch (const std::exception&) {
    row.ok = false;
  }
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentResult out;
  out.config = cfg;

  const int spans = cfg.n_max - cfg.n_min + 1;
  std::vector<std::vector<Instance>> table(static_cast<std::size_t>(spans));
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    auto& bucket = table[static_cast<std::size_t>(n - cfg.n_min)];
    bucket.resize(static_cast<std::size_t>(cfg.instances));
    for (int idx = 0; idx < cfg.instances; ++idx) {
      Instance& inst = bucket[static_cast<std::size_t>(idx)];
      inst.seed = mix64(cfg.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(idx));
      inst.q = cfg.q ? *cfg.q : default_edge_probability(n);
      try {
        Graph g = er_connected(n, inst.q, inst.seed);
        if (cfg.weighted)
          g = with_uniform_weights(g, cfg.weight_lo, cfg.weight_hi, mix64(inst.seed, kWeightTag));
        inst.digest = graph_digest(g);
        inst.opt = brute_force(g).set_value;
        inst.graph = std::move(g);
      } catch (const std::exception&) {
        inst.graph.reset();
      }
    }
  }

  for (const std::string& token : cfg.algorithms)
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
      for (int idx = 0; idx < cfg.instances; ++idx) {
        const Instance& inst = table[static_cast<std::size_t>(n - cfg.n_min)][static_cast<std::size_t>(idx)];
        ExperimentRow row;
        row.algorithm = token;
        row.n = n;
        row.q = inst.q;
        row.instance = idx;
        row.instance_seed = inst.seed;
        out.rows.push_back(std::move(row));
      }

  auto run_slot = [&](std::size_t i) {
    ExperimentRow& row = out.rows[i];
    const Instance& inst =
        table[static_cast<std::size_t>(row.n - cfg.n_min)][static_cast<std::size_t>(row.instance)];
    compute_row(row, inst, cfg);
  };
  if (cfg.workers <= 1) {
    for (std::size_t i = 0; i < out.rows.size(); ++i) run_slot(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= out.rows.size()) break;
        run_slot(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  out.summary = summarize(out.rows);
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string hex64(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void open_out(std::ofstream& f, const std::filesystem::path& p) {
  f.open(p, std::ios::binary);  // binary keeps line endings stable across platforms
  if (!f) throw std::runtime_error("cannot write " + p.string());
}

}  // namespace

void write_experiment(const ExperimentResult& result, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  std::ofstream rows;
  open_out(rows, dir / "rows.csv");
  rows << "algorithm,n,q,instance,instance_seed,graph_digest,set_value,opt_value,ratio,"
          "feasible,deviation,status\n";
  for (const ExperimentRow& r : result.rows) {
    rows << r.algorithm << ',' << r.n << ',' << fmt(r.q) << ',' << r.instance << ','
         << r.instance_seed << ',';
    if (r.have_graph) rows << hex64(r.digest);
    rows << ',';
    if (r.ok)
      rows << fmt(r.set_value) << ',' << fmt(r.opt_value) << ',' << fmt(r.ratio) << ','
           << (r.feasible ? "true" : "false") << ',' << (r.deviation ? "true" : "false");
    else
      rows << ",,,,";
    rows << ',' << (r.ok ? "ok" : "error") << '\n';
  }

  std::ofstream summary;
  open_out(summary, dir / "summary.csv");
  summary << "algorithm,n,count,mean_ratio,sem_ratio\n";
  for (const SummaryRow& s : result.summary) {
    summary << s.algorithm << ',' << s.n << ',' << s.count << ',';
    if (s.count > 0) summary << fmt(s.mean_ratio) << ',' << fmt(s.sem_ratio);
    else summary << ',';
    summary << '\n';
  }

  std::ofstream timing;
  open_out(timing, dir / "timing.csv");
  timing << "algorithm,n,instance,wall_seconds\n";
  for (const ExperimentRow& r : result.rows)
    timing << r.algorithm << ',' << r.n << ',' << r.instance << ',' << fmt(r.wall_seconds)
           << '\n';

  const ExperimentConfig& c = result.config;
  const OptimizerConfig ranges;
  std::ofstream meta;
  open_out(meta, dir / "metadata.txt");
  meta << "algorithms=";
  for (std::size_t i = 0; i < c.algorithms.size(); ++i)
    meta << (i ? "," : "") << c.algorithms[i];
  meta << '\n';
  meta << "n_min=" << c.n_min << '\n';
  meta << "n_max=" << c.n_max << '\n';
  meta << "instances=" << c.instances << '\n';
  meta << "q=" << (c.q ? fmt(*c.q) : "auto") << '\n';
  meta << "lambda=" << fmt(c.lambda) << '\n';
  meta << "weighted=" << (c.weighted ? "true" : "false") << '\n';
  meta << "weight_lo=" << fmt(c.weight_lo) << '\n';
  meta << "weight_hi=" << fmt(c.weight_hi) << '\n';
  meta << "p=" << c.p << '\n';
  meta << "tau=" << fmt(c.tau) << '\n';
  meta << "anneal_steps=" << c.anneal_steps << '\n';
  meta << "seed=" << c.seed << '\n';
  meta << "brute_force_threshold=" << c.brute_force_threshold << '\n';
  meta << "restarts=" << c.restarts << '\n';
  meta << "max_evals=" << c.max_evals << '\n';
  meta << "tolerance=" << fmt(c.tolerance) << '\n';
  meta << "workers=" << c.workers << '\n';
  meta << "gamma_range=[" << fmt(ranges.gamma_lo) << ',' << fmt(ranges.gamma_hi) << "]\n";
  meta << "beta_range=[" << fmt(ranges.beta_lo) << ',' << fmt(ranges.beta_hi) << "]\n";
  meta << "qaoa_direct_metric=expected-penalized-size/optimum\n";
}

double qaoa_direct_ratio(const Graph& g, int p, PenaltyWeight lambda, const OptimizerConfig& oc) {
  const IsingCost cost = encode_mis(g, lambda);
  const OptimizeResult opt = optimize_angles(cost, p, oc);
  return (-opt.value / 2.0) / brute_force(g).set_value;
}

}  // namespace iqmis
