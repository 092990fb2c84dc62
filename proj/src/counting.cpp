#include "parklot/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <deque>
#include <thread>

#include "parklot/error.hpp"

namespace parklot {

unsigned default_threads() {
  if (const char* env = std::getenv("PARKLOT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void check_cars(const DiGraph& d, int m, std::size_t fixed) {
  if (m < 0 || m > d.size())
    throw InvalidArgument("car count " + std::to_string(m) + " outside 0.." + std::to_string(d.size()));
  if (fixed > static_cast<std::size_t>(m))
    throw InvalidArgument("prefix has " + std::to_string(fixed) + " cars but only " + std::to_string(m) + " in total");
}

void check_budget(int n, int free_cars, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int k = 0; k < free_cars; ++k) {
    if (total > budget / static_cast<std::uint64_t>(n))
      throw BudgetExceeded("enumerating " + std::to_string(n) + "^" + std::to_string(free_cars) +
                           " sequences exceeds the budget of " + std::to_string(budget));
    total *= static_cast<std::uint64_t>(n);
  }
}

std::vector<Occupancy> states_after(const ParkingLot& lot, std::span<const Vertex> prefix) {
  std::vector<Occupancy> states{0}, next;
  for (Vertex v : prefix) {
    lot.advance(states, v, next);
    states.swap(next);
    if (states.empty()) break;
  }
  return states;
}

// Visits every parking sequence extending `prefix` to m cars and buckets it
// by `classify(s, final_states)`. Each worker owns its buffers and tallies.
template <class Key, class Classify>
std::map<Key, Count> tally(const DiGraph& d, int m, std::span<const Vertex> prefix, const CountOptions& opts,
                           Classify classify) {
  check_cars(d, m, prefix.size());
  validate_prefs(d, prefix);
  const int n = d.size();
  const int fixed = static_cast<int>(prefix.size());
  check_budget(n, m - fixed, opts.budget);

  const ParkingLot lot(d);
  const std::vector<Occupancy> start = states_after(lot, prefix);
  if (start.empty()) throw InvalidArgument("prefix " + format_prefs(prefix) + " is not a parking function");

  std::map<Key, Count> result;
  if (fixed == m) {
    PrefSeq s(prefix.begin(), prefix.end());
    if (auto key = classify(s, std::span<const Occupancy>(start))) result[*key] += 1;
    return result;
  }

  const unsigned workers = std::min<unsigned>(opts.threads ? opts.threads : default_threads(), n);
  std::atomic<int> next_chunk{1};
  std::vector<std::map<Key, std::uint64_t>> partial(workers);

  auto work = [&](unsigned id) {
    auto& local = partial[id];
    PrefSeq s(m);
    std::copy(prefix.begin(), prefix.end(), s.begin());
    std::vector<std::vector<Occupancy>> states(m + 1);
    states[fixed] = start;
    auto descend = [&](auto&& self, int depth) -> void {
      if (depth == m) {
        if (auto key = classify(s, std::span<const Occupancy>(states[m]))) ++local[*key];
        return;
      }
      for (Vertex v = 1; v <= n; ++v) {
        lot.advance(states[depth], v, states[depth + 1]);
        if (states[depth + 1].empty()) continue;
        s[depth] = v;
        self(self, depth + 1);
      }
    };
    for (int chunk; (chunk = next_chunk.fetch_add(1)) <= n;) {
      lot.advance(states[fixed], chunk, states[fixed + 1]);
      if (states[fixed + 1].empty()) continue;
      s[fixed] = chunk;
      descend(descend, fixed + 1);
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& local : partial)
    for (const auto& [key, c] : local) result[key] += Count(static_cast<unsigned long>(c));
  return result;
}

Count total(const std::map<int, Count>& t) {
  auto it = t.find(0);
  return it == t.end() ? Count(0) : it->second;
}

int root_prefs(std::span<const Vertex> s, Vertex z) {
  return static_cast<int>(std::count(s.begin(), s.end(), z));
}

// Car (1-based) that ends at the root in the forced run on an out-degree <= 1
// graph, or 0. `s` is known to park.
int root_parker(const DiGraph& d, std::span<const Vertex> s, Vertex z) {
  std::vector<char> taken(d.size() + 1, 0);
  for (std::size_t car = 0; car < s.size(); ++car) {
    Vertex at = s[car];
    while (taken[at]) at = d.out(at).front();
    taken[at] = 1;
    if (at == z) return static_cast<int>(car + 1);
  }
  return 0;
}

}  // namespace

Count count_pf(const DiGraph& d, int m, const CountOptions& opts) {
  return total(tally<int>(d, m, {}, opts, [](const PrefSeq&, std::span<const Occupancy>) { return std::optional<int>(0); }));
}

Count count_pf_by_sequence(const DiGraph& d, int m, const CountOptions& opts) {
  check_cars(d, m, 0);
  const int n = d.size();
  check_budget(n, m, opts.budget);
  PrefSeq s(m, 1);
  Count count = 0;
  for (;;) {
    if (is_parking_function(d, s)) ++count;
    int k = m - 1;
    while (k >= 0 && s[k] == n) s[k--] = 1;
    if (k < 0) break;
    ++s[k];
  }
  return count;
}

std::map<int, Count> count_by_root_preference(const DiGraph& d, int m, const CountOptions& opts) {
  const Vertex z = d.require_root();
  return tally<int>(d, m, {}, opts, [z](const PrefSeq& s, std::span<const Occupancy>) {
    return std::optional<int>(root_prefs(s, z));
  });
}

Count count_case3a(const DiGraph& sink_tree, int m, const CountOptions& opts) {
  if (sink_tree.orientation() != Orientation::Sink) throw InvalidArgument("case-3a counts need a sink tree");
  const Vertex z = sink_tree.require_root();
  return total(tally<int>(sink_tree, m, {}, opts, [z](const PrefSeq& s, std::span<const Occupancy> states) {
    std::optional<int> key;
    if (root_prefs(s, z) == 0 && (states.front() & vertex_bit(z))) key = 0;
    return key;
  }));
}

std::map<CarPair, Count> first_pair_table(const DiGraph& d, int m, PairMode mode, const CountOptions& opts) {
  const Vertex z = d.require_root();
  if (mode == PairMode::RootPair) {
    return tally<CarPair>(d, m, {}, opts, [z](const PrefSeq& s, std::span<const Occupancy>) {
      std::optional<CarPair> key;
      int first = 0;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] != z) continue;
        if (first == 0) {
          first = static_cast<int>(k + 1);
        } else {
          key = CarPair{first, static_cast<int>(k + 1)};
          break;
        }
      }
      return key;
    });
  }
  if (!d.max_out_degree_at_most_one())
    throw InvalidArgument("leaf-collision pairs need a sink tree (out-degree at most one)");
  return tally<CarPair>(d, m, {}, opts, [&d, z](const PrefSeq& s, std::span<const Occupancy> states) {
    std::optional<CarPair> key;
    if (!(states.front() & vertex_bit(z)) || root_prefs(s, z) != 0) return key;
    const int j = root_parker(d, s, z);
    if (j == 0) return key;
    const Vertex target = s[j - 1];
    int i = 0, same = 0;
    for (int k = 1; k <= j; ++k)
      if (s[k - 1] == target) {
        ++same;
        if (k < j) i = k;
      }
    if (same == 2) key = CarPair{i, j};
    return key;
  });
}

Count count_first_pair(const DiGraph& d, int m, int i, int j, PairMode mode, const CountOptions& opts) {
  if (i < 1 || i >= j || j > m)
    throw InvalidArgument("car pair (" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j <= m");
  const auto table = first_pair_table(d, m, mode, opts);
  auto it = table.find({i, j});
  return it == table.end() ? Count(0) : it->second;
}

Count count_completions(const DiGraph& d, int m, const PrefixAssignment& g, const CountOptions& opts) {
  return total(tally<int>(d, m, g, opts, [](const PrefSeq&, std::span<const Occupancy>) { return std::optional<int>(0); }));
}

MustParkCheck check_must_park(const DiGraph& d, const PrefixAssignment& g, Vertex v, int m) {
  validate_prefs(d, g);
  d.out(v);
  const ParkingLot lot(d);
  const std::vector<Occupancy> states = states_after(lot, g);
  if (states.empty()) return {false, "prefix " + format_prefs(g) + " does not park"};
  if (states.size() != 1) return {false, "occupancy after the prefix depends on the run"};
  const Occupancy occ = states.front();
  if (occ & vertex_bit(v)) return {false, "vertex " + std::to_string(v) + " is occupied by the prefix"};
  for (Vertex w : d.reachable_from(v))
    if (w != v && !(occ & vertex_bit(w)))
      return {false, "vertex " + std::to_string(w) + " downstream of " + std::to_string(v) + " is empty"};

  const int need = m - static_cast<int>(g.size());
  std::vector<int> dist(d.size() + 1, 0);
  std::deque<Vertex> queue{v};
  dist[v] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (d.degree(u) >= 3 && dist[u] < need)
      return {false, "vertex " + std::to_string(u) + " of degree >= 3 is only " + std::to_string(dist[u]) +
                         " vertices from " + std::to_string(v)};
    for (Vertex w : d.neighbors(u))
      if (dist[w] == 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return {true, {}};
}

SplitCount count_completions_split(const DiGraph& d, int cars, const PrefixAssignment& g, Vertex v,
                                   std::optional<int> m, const CountOptions& opts) {
  if (!d.is_acyclic()) throw GraphError("completion split needs an acyclic digraph");
  d.out(v);
  const Occupancy bit = vertex_bit(v);
  const auto t = tally<int>(d, cars, g, opts, [bit](const PrefSeq&, std::span<const Occupancy> states) {
    const bool reaches = std::any_of(states.begin(), states.end(), [bit](Occupancy o) { return (o & bit) != 0; });
    return std::optional<int>(reaches ? 1 : 0);
  });
  SplitCount out;
  if (auto it = t.find(0); it != t.end()) out.avoiding = it->second;
  if (auto it = t.find(1); it != t.end()) out.reaching = it->second;
  out.hypothesis = check_must_park(d, g, v, m.value_or(cars));
  return out;
}

}  // namespace parklot
