#include "pmsched/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "pmsched/errors.hpp"
#include "pmsched/regions.hpp"

namespace pmsched {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Decimal text for a rate-like value, trimmed so Rational::from_decimal
// accepts it ("0.100000000000" -> "0.1").
std::string decimal_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("config: missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("config: field '") + key + "' has the wrong type");
  }
}

template <class T>
T field_or(const json& j, const char* key, T def) {
  if (!j.is_object() || !j.contains(key)) return def;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("config: field '") + key + "' has the wrong type");
  }
}

Rational rate_from_json(const json& v) {
  try {
    if (v.is_string()) return Rational::from_decimal(v.get<std::string>());
    if (v.is_number()) return Rational::from_decimal(decimal_text(v.get<double>()));
  } catch (const ParseError&) {
    throw;
  }
  throw ParseError("config: rates must be decimal strings or numbers");
}

int bottleneck_link(const InterferenceGraph& g) {
  int best = 0;
  for (int i = 1; i < g.n_links(); ++i)
    if (g.degree(i) > g.degree(best)) best = i;
  return best;
}

PriorityVector keyword_priority(const InterferenceGraph& g, const std::string& keyword) {
  const int n = g.n_links();
  if (keyword == "identity") return identity_priorities(n);
  if (keyword != "bottleneck-lowest" && keyword != "bottleneck-highest")
    throw ParseError("config: unknown priority keyword '" + keyword +
                     "' (want identity, bottleneck-lowest or bottleneck-highest)");
  const int b = bottleneck_link(g);
  PriorityVector p{std::vector<int>(static_cast<std::size_t>(n), 0)};
  if (keyword == "bottleneck-lowest") {
    p.values[static_cast<std::size_t>(b)] = n;
    int v = 1;
    for (int i = 0; i < n; ++i)
      if (i != b) p.values[static_cast<std::size_t>(i)] = v++;
  } else {
    p.values[static_cast<std::size_t>(b)] = 1;
    int v = 2;
    for (int i = 0; i < n; ++i)
      if (i != b) p.values[static_cast<std::size_t>(i)] = v++;
  }
  return p;
}

PriorityVector priority_from_json(const json& v, const InterferenceGraph& g) {
  if (v.is_string()) return keyword_priority(g, v.get<std::string>());
  if (v.is_array()) {
    try {
      return PriorityVector{v.get<std::vector<int>>()};
    } catch (const json::exception&) {
      throw ParseError("config: priority array must hold integers");
    }
  }
  throw ParseError("config: priority must be a keyword string or an integer array");
}

SchedulerChoice parse_scheduler(const json& j, const InterferenceGraph& g) {
  SchedulerChoice c;
  c.name = field<std::string>(j, "name");
  if (c.name.empty()) throw ValidationError("config: scheduler name must not be empty");
  const auto kind = field<std::string>(j, "kind");
  c.online = field_or<bool>(j, "online", false);
  if (kind == "priority") {
    PriorityVector p = j.contains("priority") ? priority_from_json(j.at("priority"), g)
                                              : identity_priorities(g.n_links());
    c.spec = PriorityMaximalScheduler{std::move(p)};
  } else if (kind == "lqf") {
    c.spec = LqfScheduler{};
  } else if (kind == "max-weight") {
    c.spec = MaxWeightScheduler{};
  } else if (kind == "fixed-order") {
    c.spec = FixedOrderScheduler{field<std::vector<int>>(j, "order")};
  } else {
    throw ParseError("config: unknown scheduler kind '" + kind + "'");
  }
  if (c.online && !std::holds_alternative<PriorityMaximalScheduler>(c.spec))
    throw ValidationError("config: online updates require a priority scheduler");
  return c;
}

void check_permutation(const std::vector<int>& order, int n) {
  if (static_cast<int>(order.size()) != n)
    throw ValidationError("config: fixed order must list every link exactly once");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw ValidationError("config: fixed order must be a permutation of the link ids");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

const PriorityVector* first_priority(const ScenarioConfig& cfg) {
  for (const SchedulerChoice& c : cfg.schedulers)
    if (const auto* pm = std::get_if<PriorityMaximalScheduler>(&c.spec)) return &pm->priority;
  return nullptr;
}

void validate_scenario(ScenarioConfig& cfg) {
  const int n = cfg.graph.n_links();
  if (cfg.runs < 2) throw ValidationError("config: runs must be at least 2");
  if (cfg.horizon < 1) throw ValidationError("config: horizon must be at least 1");
  if (cfg.frame_length < 1) throw ValidationError("config: frame_length must be at least 1");
  if (cfg.schedulers.empty()) throw ValidationError("config: at least one scheduler required");
  std::set<std::string> names;
  for (const SchedulerChoice& c : cfg.schedulers) {
    if (!names.insert(c.name).second)
      throw ValidationError("config: duplicate scheduler name '" + c.name + "'");
    if (const auto* pm = std::get_if<PriorityMaximalScheduler>(&c.spec))
      validate_priorities(cfg.graph, pm->priority);
    if (const auto* fo = std::get_if<FixedOrderScheduler>(&c.spec))
      check_permutation(fo->order, n);
  }

  if (cfg.traffic == TrafficKind::batch && cfg.batch_limit < 1)
    throw ValidationError("config: batch_limit must be at least 1");
  if (cfg.traffic == TrafficKind::periodic) {
    if (!cfg.sweep.empty())
      throw ValidationError("config: periodic traffic defines its own rates; drop the sweep");
    if (cfg.periodic_pattern.empty())
      throw ValidationError("config: periodic traffic needs a nonempty pattern");
    long long period = static_cast<long long>(cfg.periodic_pattern.size());
    std::vector<Rational> mean;
    for (int i = 0; i < n; ++i) {
      long long sum = 0;
      for (const auto& row : cfg.periodic_pattern) {
        if (static_cast<int>(row.size()) != n)
          throw ValidationError("config: pattern rows must list every link");
        if (row[static_cast<std::size_t>(i)] < 0)
          throw ValidationError("config: pattern entries must be nonnegative");
        sum += row[static_cast<std::size_t>(i)];
      }
      mean.push_back(Rational(sum, period));
    }
    cfg.sweep.push_back(SweepPoint{"pattern", std::move(mean)});
  }
  if (cfg.traffic == TrafficKind::starvation) {
    if (!cfg.sweep.empty())
      throw ValidationError("config: starvation traffic defines its own rates; drop the sweep");
    if (cfg.starvation_epsilon < Rational(0) || Rational(1) < cfg.starvation_epsilon)
      throw ValidationError("config: starvation epsilon must lie in [0, 1]");
    const PriorityVector* p = first_priority(cfg);
    if (!p)
      throw ValidationError("config: starvation traffic targets a priority scheduler; none given");
    const StarvationArrivals s =
        make_starvation_arrivals(cfg.graph, *p, to_double(cfg.starvation_epsilon));
    std::vector<Rational> mean(static_cast<std::size_t>(n), Rational(0));
    mean[static_cast<std::size_t>(s.odd_feeder)] = Rational(1, 2);
    mean[static_cast<std::size_t>(s.even_feeder)] = Rational(1, 2);
    mean[static_cast<std::size_t>(s.target)] = cfg.starvation_epsilon;
    cfg.sweep.push_back(SweepPoint{"adversarial", std::move(mean)});
  }

  if (cfg.sweep.empty()) throw ValidationError("config: sweep must contain at least one point");
  for (const SweepPoint& pt : cfg.sweep) {
    if (static_cast<int>(pt.rates.size()) != n)
      throw ValidationError("config: sweep point '" + pt.label + "' must give one rate per link");
    for (const Rational& r : pt.rates)
      if (r < Rational(0) || Rational(1) < r)
        throw ValidationError("config: sweep point '" + pt.label + "' has a rate outside [0, 1]");
  }
  for (const auto& rates : cfg.analyze_rates) {
    if (static_cast<int>(rates.size()) != n)
      throw ValidationError("config: analyze rates must give one rate per link");
    for (const Rational& r : rates)
      if (r < Rational(0)) throw ValidationError("config: analyze rates must be nonnegative");
  }
}

ArrivalProcessSpec make_arrivals(const ScenarioConfig& cfg, const SweepPoint& pt) {
  switch (cfg.traffic) {
    case TrafficKind::bernoulli: {
      std::vector<double> rates;
      for (const Rational& r : pt.rates) rates.push_back(to_double(r));
      return BernoulliArrivals{std::move(rates)};
    }
    case TrafficKind::batch: {
      std::vector<double> rates;
      for (const Rational& r : pt.rates) rates.push_back(to_double(r));
      return BatchArrivals{std::move(rates), cfg.batch_limit};
    }
    case TrafficKind::periodic:
      return PeriodicArrivals{cfg.periodic_pattern};
    case TrafficKind::starvation:
      return make_starvation_arrivals(cfg.graph, *first_priority(cfg),
                                      to_double(cfg.starvation_epsilon));
  }
  throw ValidationError("config: unknown traffic kind");
}

void write_metric_row(std::ofstream& out, const ScenarioConfig& cfg, const std::string& sweep,
                      const std::string& scheduler, const std::string& metric,
                      const MetricStats& st) {
  out << cfg.name << ',' << sweep << ',' << scheduler << ',' << metric << ',' << fmt(st.mean)
      << ',' << fmt(st.ci95) << ',' << cfg.runs << '\n';
}

}  // namespace

std::vector<std::string> builtin_scenario_names() { return {"two-clique", "star", "random8"}; }

ScenarioConfig builtin_scenario(const std::string& name) {
  ScenarioConfig cfg;
  cfg.name = name;
  if (name == "two-clique") {
    cfg.topology = CliqueIntersectionTopology{2, 6};
    cfg.graph = generate_topology(cfg.topology);
    // Bottleneck rate k/10; every other link (99-10k)/500, so each clique
    // carries a total load of exactly 0.99.
    for (int k = 1; k <= 9; ++k) {
      SweepPoint pt;
      pt.label = "0." + std::to_string(k);
      pt.rates.assign(11, Rational(99 - 10 * k, 500));
      pt.rates[0] = Rational(k, 10);
      cfg.sweep.push_back(std::move(pt));
    }
    cfg.schedulers.push_back(
        {"bad-priority", PriorityMaximalScheduler{keyword_priority(cfg.graph, "bottleneck-lowest")},
         false});
    cfg.schedulers.push_back(
        {"online", PriorityMaximalScheduler{keyword_priority(cfg.graph, "bottleneck-lowest")},
         true});
    cfg.schedulers.push_back({"lqf", LqfScheduler{}, false});
    cfg.seed = 101;
  } else if (name == "star") {
    cfg.topology = StarTopology{8};
    cfg.graph = generate_topology(cfg.topology);
    for (int k = 1; k <= 9; ++k) {
      SweepPoint pt;
      pt.label = decimal_text(0.05 * k);
      pt.rates.assign(9, Rational(k, 20));
      cfg.sweep.push_back(std::move(pt));
    }
    cfg.schedulers.push_back(
        {"center-highest", PriorityMaximalScheduler{keyword_priority(cfg.graph, "bottleneck-highest")},
         false});
    cfg.schedulers.push_back(
        {"center-lowest", PriorityMaximalScheduler{keyword_priority(cfg.graph, "bottleneck-lowest")},
         false});
    cfg.seed = 202;
  } else if (name == "random8") {
    cfg.topology = GuardZoneTopology{8, 1.0, 1.0, 0.35, 7};
    cfg.graph = generate_topology(cfg.topology);
    for (int k = 1; k <= 8; ++k) {
      SweepPoint pt;
      pt.label = decimal_text(0.05 * k);
      pt.rates.assign(8, Rational(k, 20));
      cfg.sweep.push_back(std::move(pt));
    }
    cfg.schedulers.push_back(
        {"bad-priority", PriorityMaximalScheduler{keyword_priority(cfg.graph, "bottleneck-lowest")},
         false});
    cfg.schedulers.push_back(
        {"online", PriorityMaximalScheduler{keyword_priority(cfg.graph, "bottleneck-lowest")},
         true});
    cfg.schedulers.push_back({"lqf", LqfScheduler{}, false});
    cfg.schedulers.push_back({"max-weight", MaxWeightScheduler{}, false});
    cfg.seed = 303;
  } else {
    throw ValidationError("unknown builtin scenario '" + name + "' (want " +
                          "two-clique, star or random8)");
  }
  validate_scenario(cfg);
  return cfg;
}

ScenarioConfig parse_scenario_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: top level must be an object");

  ScenarioConfig cfg;
  cfg.name = field_or<std::string>(j, "name", "scenario");
  if (cfg.name.empty() || cfg.name.find_first_of(",/\\") != std::string::npos)
    throw ValidationError("config: scenario name must be nonempty without , / \\");

  if (!j.contains("topology")) throw ParseError("config: missing field 'topology'");
  {
    const json& t = j.at("topology");
    const auto kind = field<std::string>(t, "kind");
    if (kind == "star") {
      cfg.topology = StarTopology{field<int>(t, "peripherals")};
    } else if (kind == "clique_intersection") {
      cfg.topology = CliqueIntersectionTopology{field<int>(t, "cliques"), field<int>(t, "clique_size")};
    } else if (kind == "random_tree") {
      cfg.topology = RandomTreeTopology{field<int>(t, "links"), field_or<std::uint64_t>(t, "seed", 0)};
    } else if (kind == "guard_zone") {
      cfg.topology = GuardZoneTopology{field<int>(t, "links"), field_or<double>(t, "width", 1.0),
                                       field_or<double>(t, "height", 1.0),
                                       field_or<double>(t, "radius", 0.35),
                                       field_or<std::uint64_t>(t, "seed", 0)};
    } else if (kind == "edges") {
      ExplicitTopology e;
      e.n_links = field<int>(t, "links");
      const auto labels = field_or<std::string>(t, "labels", "zero-based");
      int offset = 0;
      if (labels == "one-based")
        offset = 1;
      else if (labels != "zero-based")
        throw ParseError("config: labels must be zero-based or one-based");
      for (const auto& pair : field<std::vector<std::vector<int>>>(t, "edges")) {
        if (pair.size() != 2) throw ParseError("config: each edge must be a two-element array");
        e.edges.emplace_back(pair[0] - offset, pair[1] - offset);
      }
      cfg.topology = std::move(e);
    } else {
      throw ParseError("config: unknown topology kind '" + kind + "'");
    }
    cfg.graph = generate_topology(cfg.topology);
  }

  if (j.contains("schedulers")) {
    const json& arr = j.at("schedulers");
    if (!arr.is_array()) throw ParseError("config: schedulers must be an array");
    for (const json& s : arr) cfg.schedulers.push_back(parse_scheduler(s, cfg.graph));
  }

  if (j.contains("traffic")) {
    const json& t = j.at("traffic");
    const auto kind = field<std::string>(t, "kind");
    if (kind == "bernoulli") {
      cfg.traffic = TrafficKind::bernoulli;
    } else if (kind == "batch") {
      cfg.traffic = TrafficKind::batch;
      cfg.batch_limit = field_or<int>(t, "batch_limit", 1);
    } else if (kind == "periodic") {
      cfg.traffic = TrafficKind::periodic;
      cfg.periodic_pattern = field<std::vector<std::vector<int>>>(t, "pattern");
    } else if (kind == "starvation") {
      cfg.traffic = TrafficKind::starvation;
      if (t.contains("epsilon")) cfg.starvation_epsilon = rate_from_json(t.at("epsilon"));
    } else {
      throw ParseError("config: unknown traffic kind '" + kind + "'");
    }
  }

  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    const auto type = field<std::string>(s, "type");
    if (type == "uniform") {
      if (!s.contains("rates") || !s.at("rates").is_array())
        throw ParseError("config: uniform sweep needs a rates array");
      for (const json& v : s.at("rates")) {
        SweepPoint pt;
        pt.label = v.is_string() ? v.get<std::string>() : decimal_text(v.get<double>());
        pt.rates.assign(static_cast<std::size_t>(cfg.graph.n_links()), rate_from_json(v));
        cfg.sweep.push_back(std::move(pt));
      }
    } else if (type == "points") {
      if (!s.contains("points") || !s.at("points").is_array())
        throw ParseError("config: points sweep needs a points array");
      int index = 0;
      for (const json& p : s.at("points")) {
        SweepPoint pt;
        pt.label = field_or<std::string>(p, "label", std::to_string(index));
        if (!p.contains("rates") || !p.at("rates").is_array())
          throw ParseError("config: each sweep point needs a rates array");
        for (const json& v : p.at("rates")) pt.rates.push_back(rate_from_json(v));
        cfg.sweep.push_back(std::move(pt));
        ++index;
      }
    } else {
      throw ParseError("config: unknown sweep type '" + type + "'");
    }
  }

  cfg.horizon = field_or<long long>(j, "horizon", cfg.horizon);
  cfg.frame_length = field_or<long long>(j, "frame_length", cfg.frame_length);
  cfg.runs = field_or<int>(j, "runs", cfg.runs);
  cfg.seed = field_or<std::uint64_t>(j, "seed", cfg.seed);
  cfg.out_dir = field_or<std::string>(j, "out", cfg.out_dir);

  if (j.contains("analyze")) {
    const json& a = j.at("analyze");
    if (a.contains("rates")) {
      if (!a.at("rates").is_array()) throw ParseError("config: analyze.rates must be an array");
      for (const json& vec : a.at("rates")) {
        if (!vec.is_array()) throw ParseError("config: each analyze rate entry must be an array");
        std::vector<Rational> rates;
        for (const json& v : vec) rates.push_back(rate_from_json(v));
        cfg.analyze_rates.push_back(std::move(rates));
      }
    }
  }

  validate_scenario(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot read config file '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
  }
  const auto names = builtin_scenario_names();
  if (std::find(names.begin(), names.end(), source) != names.end())
    return builtin_scenario(source);
  throw ParseError("'" + source + "' is neither a config file nor a builtin scenario (" +
                   "two-clique, star, random8)");
}

void apply_overrides(ScenarioConfig& cfg, const ScenarioOverrides& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.runs) {
    if (*o.runs < 2) throw ValidationError("runs override must be at least 2");
    cfg.runs = *o.runs;
  }
  if (o.horizon) {
    if (*o.horizon < 1) throw ValidationError("horizon override must be at least 1");
    cfg.horizon = *o.horizon;
  }
  if (o.out_dir) cfg.out_dir = *o.out_dir;
  if (o.scheduler) {
    std::vector<SchedulerChoice> kept;
    for (SchedulerChoice& c : cfg.schedulers)
      if (c.name == *o.scheduler) kept.push_back(std::move(c));
    if (kept.empty())
      throw ValidationError("no scheduler named '" + *o.scheduler + "' in this scenario");
    cfg.schedulers = std::move(kept);
    if (cfg.traffic == TrafficKind::starvation && !first_priority(cfg))
      throw ValidationError("starvation traffic needs the priority scheduler; cannot filter it out");
  }
}

ScenarioOutput run_scenario(const ScenarioConfig& cfg, std::ostream& log) {
  std::filesystem::create_directories(cfg.out_dir);
  ScenarioOutput out;
  out.metrics_csv = cfg.out_dir + "/" + cfg.name + "_metrics.csv";
  std::ofstream mcsv(out.metrics_csv, std::ios::trunc);
  if (!mcsv) throw ValidationError("cannot write " + out.metrics_csv);
  mcsv << "scenario,sweep,scheduler,metric,mean,ci95,runs\n";

  const bool any_online = std::any_of(cfg.schedulers.begin(), cfg.schedulers.end(),
                                      [](const SchedulerChoice& c) { return c.online; });
  std::ofstream pcsv;
  if (any_online) {
    out.priority_csv = cfg.out_dir + "/" + cfg.name + "_priority_history.csv";
    pcsv.open(out.priority_csv, std::ios::trunc);
    if (!pcsv) throw ValidationError("cannot write " + out.priority_csv);
    pcsv << "scenario,sweep,scheduler,run,frame,link,value\n";
  }

  const int n = cfg.graph.n_links();
  for (const SweepPoint& pt : cfg.sweep) {
    const ArrivalProcessSpec arrivals = make_arrivals(cfg, pt);
    for (const SchedulerChoice& sched : cfg.schedulers) {
      SimConfig sim;
      sim.graph = cfg.graph;
      sim.scheduler = sched.spec;
      sim.arrivals = arrivals;
      sim.horizon = cfg.horizon;
      sim.frame_length = cfg.frame_length;
      sim.online = sched.online;
      sim.seed = cfg.seed;
      const ReplicationReport rep = replicate(sim, cfg.runs);

      write_metric_row(mcsv, cfg, pt.label, sched.name, "max_queue", rep.max_queue);
      write_metric_row(mcsv, cfg, pt.label, sched.name, "final_queue", rep.final_queue);
      write_metric_row(mcsv, cfg, pt.label, sched.name, "gap_max", rep.stability_gap);
      for (int i = 0; i < n; ++i)
        write_metric_row(mcsv, cfg, pt.label, sched.name, "max_queue_link_" + std::to_string(i),
                         rep.max_queue_per_link[static_cast<std::size_t>(i)]);
      for (int i = 0; i < n; ++i)
        write_metric_row(mcsv, cfg, pt.label, sched.name, "gap_link_" + std::to_string(i),
                         rep.gap_per_link[static_cast<std::size_t>(i)]);

      if (sched.online) {
        for (std::size_t r = 0; r < rep.priority_histories.size(); ++r) {
          for (const PriorityChange& ch : rep.priority_histories[r]) {
            for (int i = 0; i < n; ++i) {
              pcsv << cfg.name << ',' << pt.label << ',' << sched.name << ',' << r << ','
                   << ch.frame << ',' << i << ',' << ch.priority.values[static_cast<std::size_t>(i)]
                   << '\n';
            }
          }
        }
      }

      log << cfg.name << " sweep=" << pt.label << " scheduler=" << sched.name
          << " max_queue=" << fmt(rep.max_queue.mean) << " (ci95 " << fmt(rep.max_queue.ci95)
          << ") gap=" << fmt(rep.stability_gap.mean) << "\n";
    }
  }
  return out;
}

AnalysisOutput analyze_scenario(const ScenarioConfig& cfg, std::ostream& log) {
  std::filesystem::create_directories(cfg.out_dir);
  AnalysisOutput out;
  out.csv_path = cfg.out_dir + "/" + cfg.name + "_analysis.csv";
  std::ofstream csv(out.csv_path, std::ios::trunc);
  if (!csv) throw ValidationError("cannot write " + out.csv_path);
  csv << "metric,link,value\n";

  const InterferenceGraph& g = cfg.graph;
  const int n = g.n_links();
  csv << "links,," << n << "\n";
  csv << "conflicts,," << g.edge_count() << "\n";
  const bool acyclic = is_acyclic(g);
  csv << "acyclic,," << (acyclic ? 1 : 0) << "\n";
  log << cfg.name << ": " << n << " links, " << g.edge_count() << " conflicts, "
      << (acyclic ? "acyclic" : "has cycles") << "\n";

  try {
    const DegreeReport wc = interference_degree(g);
    csv << "worst_case_degree,," << wc.overall << "\n";
    for (int i = 0; i < n; ++i)
      csv << "worst_case_degree_link," << i << ',' << wc.per_link[static_cast<std::size_t>(i)]
          << "\n";
    log << "worst-case interference degree: " << wc.overall << "\n";
  } catch (const SizeLimitError& e) {
    log << "worst-case interference degree skipped: " << e.what() << "\n";
  }

  try {
    const DegreeSearchResult sp = min_prioritized_interference_degree(g);
    csv << "best_priority_degree,," << sp.value << "\n";
    for (int i = 0; i < n; ++i)
      csv << "best_priority_degree_witness," << i << ','
          << sp.witness.values[static_cast<std::size_t>(i)] << "\n";
    log << "best prioritized interference degree: " << sp.value << " (witness priority emitted)\n";
  } catch (const SizeLimitError& e) {
    log << "best prioritized interference degree skipped: " << e.what() << "\n";
  }

  for (std::size_t k = 0; k < cfg.analyze_rates.size(); ++k) {
    const std::vector<Rational>& rates = cfg.analyze_rates[k];
    const std::string tag = "rates" + std::to_string(k);
    {
      const RegionCheck wc = in_worst_case_region(g, rates);
      csv << tag << "_in_worst_case,," << (wc.member ? 1 : 0) << "\n";
      for (int i : wc.violated) csv << tag << "_worst_case_violation," << i << ",1\n";
      log << tag << ": worst-case region " << (wc.member ? "member" : "not a member") << "\n";
    }
    for (const SchedulerChoice& c : cfg.schedulers) {
      const auto* pm = std::get_if<PriorityMaximalScheduler>(&c.spec);
      if (!pm) continue;
      const RegionCheck pr = in_priority_region(g, pm->priority, rates);
      csv << tag << "_in_priority_" << c.name << ",," << (pr.member ? 1 : 0) << "\n";
      for (int i : pr.violated) csv << tag << "_priority_" << c.name << "_violation," << i << ",1\n";
      log << tag << ": priority region (" << c.name << ") " << (pr.member ? "member" : "not a member")
          << "\n";
    }
    try {
      const AnyPriorityMembership any = in_any_priority_region(g, rates);
      csv << tag << "_in_some_priority,," << (any.member ? 1 : 0) << "\n";
      if (any.witness) {
        for (int i = 0; i < n; ++i)
          csv << tag << "_priority_witness," << i << ','
              << any.witness->values[static_cast<std::size_t>(i)] << "\n";
      }
      log << tag << ": achievable by some priority: " << (any.member ? "yes" : "no") << "\n";
    } catch (const SizeLimitError& e) {
      log << tag << ": priority-achievability check skipped: " << e.what() << "\n";
    }
  }
  return out;
}

}  // namespace pmsched
