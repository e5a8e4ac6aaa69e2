// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and time budgets are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "roadperc/components.hpp"
#include "roadperc/betweenness.hpp"
#include "roadperc/io.hpp"
#include "roadperc/percolation.hpp"
#include "roadperc/road_graph.hpp"
#include "roadperc/services.hpp"
#include "roadperc/stats.hpp"
#include "support/fixture_files.hpp"
#include "support/graphs.hpp"

namespace {

using namespace roadperc;
namespace fs = std::filesystem;

constexpr double kBetweennessTolerance = 1e-9;
constexpr double kPearsonTolerance = 1e-12;
constexpr double kGridPcLow = 0.40;
constexpr double kGridPcHigh = 0.60;
constexpr double kGridPcStdMax = 0.05;
constexpr std::size_t kGridSide = 50;
constexpr std::size_t kGridRuns = 50;
constexpr double kCheckpointFraction = 0.01;
constexpr std::uint64_t kSeed = 42;
// Betweenness refreshed after every removal on the grid.
constexpr std::size_t kGridAttackRecompute = 1;

// Thrown by check() to abort a criterion with a message.
struct Failure {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<std::string()> body;  // returns a short detail line
};

// ---- 1
std::string formulas() {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 20; ++i) {
    const auto tree = testing::random_tree(3 + rng() % 60, rng);
    const auto m = compute_metrics(tree);
    check(m.meshness == 0.0, "tree meshness " + fmt(m.meshness));
  }
  const auto tri = compute_metrics(testing::ring_graph(3));
  check(tri.meshness == 1.0, "triangle meshness " + fmt(tri.meshness));
  const auto star = compute_metrics(testing::star_graph(4));
  check(star.organic == 0.8, "star organic " + fmt(star.organic));
  return "20 trees M=0, triangle M=1, star Org=0.8";
}

// ---- 2
std::string builder_fixture() {
  const auto paths = testing::three_roads();
  const auto relevant = identify_relevant_nodes(paths);
  const std::set<std::string> got(relevant.begin(), relevant.end());
  check(got == std::set<std::string>{"1", "3", "4", "6", "7", "9"}, "relevant set differs");
  const auto raw = build_edges(paths, relevant);
  check(raw.find("4").has_value(), "node 4 missing before pruning");
  const auto pruned = prune_degree_two(raw);
  check(!pruned.find("4").has_value(), "node 4 survived pruning");
  std::set<std::string> keys;
  for (const auto& n : pruned.nodes()) keys.insert(n.key);
  check(keys == std::set<std::string>{"1", "3", "6", "7", "9"}, "pruned node set differs");
  return "relevant {1,3,4,6,7,9}, node 4 contracted";
}

// ---- 3
std::size_t second_or_zero(const std::vector<std::size_t>& sizes) {
  return sizes.size() > 1 ? sizes[1] : 0;
}

std::string component_oracle() {
  std::mt19937_64 rng(3003);
  std::size_t checkpoints = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 120;
    const std::size_t max_extra = 200 - (n - 1);
    const auto net = testing::random_connected(n, rng() % (max_extra + 1), rng);
    const std::size_t e = net.edge_count();
    check(e <= 200, "too many edges");

    // Error tracking against BFS at each checkpoint, for a random order.
    const auto order = random_edge_order(e, rng());
    const double fraction = std::uniform_real_distribution<double>(0.01, 0.5)(rng);
    const auto run = run_removal_order(net, order, fraction);
    for (const auto& cp : run.curve) {
      const auto removed = static_cast<std::size_t>(std::llround(cp.p * static_cast<double>(e)));
      EdgeMask alive(e, 1);
      for (std::size_t k = 0; k < removed; ++k) alive[to_index(order[k])] = 0;
      const auto sizes = testing::bfs_component_sizes(net, alive);
      check(cp.gcc_size == sizes[0] && cp.slcc_size == second_or_zero(sizes),
            "error curve mismatch in trial " + std::to_string(trial));
      ++checkpoints;
    }

    // Attack tracking (split-on-removal) against BFS after every removal.
    const auto attack = run_attack(net, 1 + rng() % 3);
    EdgeMask alive(e, 1);
    check(attack.curve.size() == attack.removed_order.size() + 1, "attack curve length");
    for (std::size_t k = 0; k < attack.curve.size(); ++k) {
      if (k > 0) alive[to_index(attack.removed_order[k - 1])] = 0;
      const auto sizes = testing::bfs_component_sizes(net, alive);
      check(attack.curve[k].gcc_size == sizes[0] && attack.curve[k].slcc_size == second_or_zero(sizes),
            "attack curve mismatch in trial " + std::to_string(trial));
      ++checkpoints;
    }
  }
  return std::to_string(checkpoints) + " checkpoints equal";
}

// ---- 4
std::string betweenness_oracle() {
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  const int instances = 600;
  for (int trial = 0; trial < instances; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto net = testing::random_connected(n, rng() % (2 * n), rng);
    const auto alive = all_edges(net);
    const auto fast = edge_betweenness(net, alive);
    const auto slow = testing::brute_force_edge_betweenness(net, alive);
    check(fast.size() == slow.size(), "size mismatch");
    for (std::size_t i = 0; i < fast.size(); ++i) worst = std::max(worst, std::abs(fast[i] - slow[i]));
  }
  check(worst <= kBetweennessTolerance, "max deviation " + fmt(worst));
  return std::to_string(instances) + " graphs, max deviation " + fmt(worst);
}

// ---- 5
std::string grid_threshold() {
  const auto grid = testing::grid_graph(kGridSide, kGridSide);
  const auto ens = run_error_ensemble(grid, kSeed, {kGridRuns, kCheckpointFraction, 1});
  const std::string detail = "p_c_mean " + fmt(ens.p_c_mean) + ", p_c_std " + fmt(ens.p_c_std);
  check(ens.p_c_mean >= kGridPcLow && ens.p_c_mean <= kGridPcHigh, detail);
  check(ens.p_c_std < kGridPcStdMax, detail);
  return detail;
}

// ---- 6
RoadNetwork connected_er(std::size_t n, double p, std::mt19937_64& rng) {
  for (;;) {
    auto g = testing::random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

std::string attack_dominance() {
  std::ostringstream detail;
  const auto grid = testing::grid_graph(kGridSide, kGridSide);
  const auto grid_attack = run_attack(grid, kGridAttackRecompute);
  const auto grid_error = run_error_ensemble(grid, kSeed, {kGridRuns, kCheckpointFraction, 1});
  check(grid_attack.p_c < grid_error.p_c_mean,
        "grid attack " + fmt(grid_attack.p_c) + " vs error " + fmt(grid_error.p_c_mean));
  detail << "grid " << fmt(grid_attack.p_c) << " < " << fmt(grid_error.p_c_mean);

  std::mt19937_64 rng(6006);
  double worst_gap = 1.0;
  for (int i = 0; i < 10; ++i) {
    const auto er = connected_er(200, 4.0 / 199.0, rng);
    const auto attack = run_attack(er, 1);
    const auto error = run_error_ensemble(er, kSeed + 1000 * static_cast<std::uint64_t>(i),
                                          {kGridRuns, kCheckpointFraction, 1});
    check(attack.p_c < error.p_c_mean,
          "ER " + std::to_string(i) + ": attack " + fmt(attack.p_c) + " vs error " + fmt(error.p_c_mean));
    worst_gap = std::min(worst_gap, error.p_c_mean - attack.p_c);
  }
  detail << "; 10 ER graphs, smallest gap " << fmt(worst_gap)
         << "; recompute_every=" << kGridAttackRecompute;
  return detail.str();
}

// ---- 7
std::string attack_fixtures() {
  const auto barbell = run_attack(testing::barbell_graph(), 1);
  check(barbell.p_c == 1.0 / 7.0, "barbell p_c " + fmt(barbell.p_c));
  const auto path = run_attack(testing::path_graph(5), 1);
  check(path.p_c == 1.0 / 4.0, "path p_c " + fmt(path.p_c));
  return "barbell 1/7, path 1/4";
}

// ---- 8
std::string availability_invariants() {
  std::mt19937_64 rng(8008);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = testing::random_connected(5 + rng() % 150, rng() % 150, rng);
    const std::size_t v = net.node_count();

    // Venues scattered over and slightly beyond the node layout.
    std::uniform_real_distribution<double> lon(-0.002, 0.102), lat(-0.002, 0.004);
    std::vector<VenueRecord> venues;
    const std::size_t count = 1 + rng() % 300;
    const std::size_t categories = 1 + rng() % kCategoryCount;
    for (std::size_t i = 0; i < count; ++i) {
      venues.push_back({"v" + std::to_string(i), kAllCategories[rng() % categories], {lon(rng), lat(rng)}});
    }
    const auto assignment = assign_venues(net, venues);
    check(assignment.assigned.size() + assignment.omitted.size() == count, "assignment count");
    if (assignment.assigned.empty()) continue;

    const auto baseline = availability_at_threshold(net, assignment.assigned, std::vector<bool>(v, true));
    for (const auto& [c, a] : baseline.per_category) check(a.fraction == 1.0, "baseline below 1");
    check(baseline.mean == 1.0, "baseline mean below 1");

    const auto run = run_error(net, rng(), kCheckpointFraction);
    const auto small = gcc_at_threshold(net, run);
    auto large = small;
    for (std::size_t i = 0; i < v; ++i) large[i] = large[i] || (rng() % 3 == 0);

    const auto r_small = availability_at_threshold(net, assignment.assigned, small);
    const auto r_large = availability_at_threshold(net, assignment.assigned, large);
    std::map<Category, std::size_t> assigned, lost;
    for (const auto& s : assignment.assigned) {
      ++assigned[s.category];
      if (!small[to_index(s.node)]) ++lost[s.category];
    }
    check(r_small.per_category.size() + r_small.missing.size() == kCategoryCount, "category coverage");
    for (const auto& [c, a] : r_small.per_category) {
      check(a.assigned == assigned[c], "assigned count");
      check(a.retained + static_cast<double>(lost[c]) == static_cast<double>(a.assigned), "partition");
      check(r_large.per_category.at(c).fraction >= a.fraction, "monotonicity");
    }
  }
  return "100 fixtures: partition, monotonicity, baseline 1.0";
}

// ---- 9
int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"roadperc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::map<std::string, std::string> tree_contents(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) files[fs::relative(entry.path(), root).generic_string()] = read_file(entry.path());
  }
  return files;
}

std::string determinism() {
  testing::TempDir dir("acceptance");
  testing::write_paths_file(dir.path() / "grid.jsonl", testing::grid_paths(kGridSide, kGridSide));
  testing::write_venues_file(dir.path() / "venues.csv", testing::grid_venues(kGridSide, kGridSide, 500));
  for (const char* out : {"a", "b"}) {
    const int code = run_cli({"pipeline", "--city", "grid", "--paths", (dir.path() / "grid.jsonl").string(),
                              "--venues", (dir.path() / "venues.csv").string(), "--out",
                              (dir.path() / out).string(), "--seed", "42"});
    check(code == 0, std::string("pipeline exit ") + std::to_string(code));
  }
  const auto a = tree_contents(dir.path() / "a");
  const auto b = tree_contents(dir.path() / "b");
  check(!a.empty(), "no artifacts");
  check(a == b, "artifact trees differ");
  return std::to_string(a.size()) + " artifacts byte-identical";
}

// ---- 10
double direct_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

std::string pearson_cases() {
  const std::vector<double> x{0.21, 0.35, 0.17, 0.28, 0.30};
  const std::vector<double> y{0.05, 0.02, 0.08, 0.03, 0.07};
  const double got = pearson(x, y);
  const double want = direct_pearson(x, y);
  check(std::abs(got - want) <= kPearsonTolerance, "5-vector " + fmt(got) + " vs " + fmt(want));
  check(std::abs(pearson(x, x) - 1.0) <= kPearsonTolerance, "identical");
  std::vector<double> neg(x.size());
  std::transform(x.begin(), x.end(), neg.begin(), [](double v) { return -v; });
  check(std::abs(pearson(x, neg) + 1.0) <= kPearsonTolerance, "negated");
  return "r=" + fmt(got) + ", identical 1, negated -1";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "formula exactness", 1, formulas},
      {2, "builder fixture", 1, builder_fixture},
      {3, "component oracle", 30, component_oracle},
      {4, "betweenness oracle", 60, betweenness_oracle},
      {5, "grid error threshold", 120, grid_threshold},
      {6, "attack dominance", 600, attack_dominance},
      {7, "attack fixtures", 1, attack_fixtures},
      {8, "availability invariants", 30, availability_invariants},
      {9, "pipeline determinism", 300, determinism},
      {10, "pearson", 1, pearson_cases},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_s) {
      ok = false;
      detail += "; over time budget " + fmt(c.budget_s) + " s";
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %d: %s (%s) %.2fs\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
