#include "parklot/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "parklot/error.hpp"
#include "parklot/flip.hpp"
#include "parklot/formulas.hpp"
#include "parklot/parking.hpp"

namespace parklot {

namespace {

using json = nlohmann::ordered_json;

template <class Fn>
SuiteReport timed(std::string name, Fn fill) {
  SuiteReport r;
  r.suite = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  fill(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Verdict verdict(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

std::string str(const Count& c) { return c.get_str(); }

// Calls fn(s) for every s in [n]^m, lexicographically.
void for_each_sequence(int n, int m, const std::function<void(const PrefSeq&)>& fn) {
  PrefSeq s(m, 1);
  for (;;) {
    fn(s);
    int k = m - 1;
    while (k >= 0 && s[k] == n) s[k--] = 1;
    if (k < 0) return;
    ++s[k];
  }
}

std::vector<Occupancy> final_states(const ParkingLot& lot, std::span<const Vertex> s) {
  std::vector<Occupancy> states{0}, next;
  for (Vertex v : s) {
    lot.advance(states, v, next);
    states.swap(next);
    if (states.empty()) break;
  }
  return states;
}

DiGraph relabel(const DiGraph& d, const std::vector<Vertex>& sigma) {
  std::vector<Edge> edges;
  for (auto [u, v] : d.edges()) edges.emplace_back(sigma[u], sigma[v]);
  std::optional<Vertex> root;
  if (d.root()) root = sigma[*d.root()];
  return DiGraph(d.size(), edges, root, d.orientation());
}

bool is_starlike(const DiGraph& tree) {
  const Vertex z = tree.require_root();
  for (Vertex v = 1; v <= tree.size(); ++v)
    if (v != z && tree.degree(v) > 2) return false;
  return true;
}

}  // namespace

std::string levels_text(const RootedTree& t) {
  std::string s;
  for (int l : t.levels) s += (s.empty() ? "" : ",") + std::to_string(l);
  return s;
}

std::string edges_text(const DiGraph& d) {
  std::string s;
  for (auto [u, v] : d.edges()) s += (s.empty() ? "" : ",") + std::to_string(u) + ">" + std::to_string(v);
  return s;
}

SuiteReport suite_star_exact(int max_n, const CountOptions& opts) {
  return timed("star-exact", [&](SuiteReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (int m = 1; m <= n; ++m)
        for (Orientation o : {Orientation::Sink, Orientation::Source}) {
          const Count expected = o == Orientation::Sink ? sink_star_count(n, m) : source_star_count(n, m);
          const Count observed = count_pf(build_star(n, o), m, opts);
          r.add({{{"shape", "star"}, {"orient", to_string(o)}, {"n", n}, {"m", m}},
                 str(expected), str(observed), verdict(expected == observed), {}});
        }
  });
}

SuiteReport suite_classical(int max_n, const CountOptions& opts) {
  return timed("classical", [&](SuiteReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (int m = 1; m <= n; ++m) {
        const Count expected = classical_count(n, m);
        const Count observed = count_pf(build_path(n, Orientation::Sink), m, opts);
        r.add({{{"shape", "path"}, {"orient", "sink"}, {"n", n}, {"m", m}}, str(expected), str(observed),
               verdict(expected == observed), {}});
      }
  });
}

SuiteReport suite_full_capacity(int max_n, const CountOptions& opts) {
  return timed("full-capacity", [&](SuiteReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const RootedTree& t : all_rooted_trees(n)) {
        const DiGraph sink = to_digraph(t, Orientation::Sink);
        const Count p = count_pf(sink, n, opts);
        const Count q = count_pf(to_digraph(t, Orientation::Source), n, opts);
        const bool path = is_end_rooted_path(sink);
        const bool ok = path ? p == q : p < q;
        r.add({{{"n", n}, {"levels", levels_text(t)}, {"m", n}},
               path ? "sink = source" : "sink < source",
               str(p) + (p < q ? " < " : p == q ? " = " : " > ") + str(q), verdict(ok),
               path ? "end-rooted path" : ""});
      }
  });
}

SuiteReport suite_sparse_tree(int max_n, int max_m, bool starlike, const CountOptions& opts) {
  return timed(starlike ? "starlike" : "sparse-tree", [&](SuiteReport& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const RootedTree& t : all_rooted_trees(n)) {
        const DiGraph sink = to_digraph(t, Orientation::Sink);
        const DiGraph source = to_digraph(t, Orientation::Source);
        const int branches = static_cast<int>(root_neighbors(sink).size());
        const int mld = minleafdist(sink);
        const int limit = std::min({branches, mld, max_m});
        json base = {{"n", n}, {"levels", levels_text(t)}};

        auto compare = [&](int m, Verdict when_ok, std::string note) {
          const Count p = count_pf(sink, m, opts);
          const Count q = count_pf(source, m, opts);
          json params = base;
          params["m"] = m;
          const bool ok = p > q;
          r.add({params, "sink > source", str(p) + (ok ? " > " : " <= ") + str(q),
                 ok ? when_ok : (when_ok == Verdict::Pass ? Verdict::Fail : Verdict::Info), std::move(note)});
        };

        if (limit < 2) {
          if (!starlike) r.add({base, "no admissible m", "no admissible m", Verdict::Pass, "vacuous"});
        } else if (!starlike) {
          for (int m = 2; m <= limit; ++m) compare(m, Verdict::Pass, {});
        }
        if (starlike && is_starlike(sink)) {
          const int loose = std::min({branches, static_cast<int>(std::sqrt(static_cast<double>(n))), max_m});
          for (int m = 2; m <= loose; ++m)
            compare(m, Verdict::Info, m <= limit ? "inside the proven range" : "outside the proven range");
        }
      }
  });
}

SuiteReport suite_partition_identities(int max_n, const CountOptions& opts) {
  return timed("partition", [&](SuiteReport& r) {
    bool strict_seen = false;
    for (int n = 2; n <= max_n; ++n)
      for (const RootedTree& t : all_rooted_trees(n)) {
        const DiGraph sink = to_digraph(t, Orientation::Sink);
        const DiGraph source = to_digraph(t, Orientation::Source);
        const bool star = static_cast<int>(root_neighbors(sink).size()) == n - 1;
        for (int m = 2; m <= n; ++m) {
          json base = {{"n", n}, {"levels", levels_text(t)}, {"m", m}};

          Count pairs = 0;
          for (const auto& [ij, c] : first_pair_table(source, m, PairMode::RootPair, opts)) pairs += c;
          Count at_least_two = 0;
          for (const auto& [k, c] : count_by_root_preference(source, m, opts))
            if (k >= 2) at_least_two += c;
          json p1 = base;
          p1["check"] = "root-pair";
          r.add({p1, str(at_least_two), str(pairs), verdict(pairs == at_least_two), {}});

          Count collisions = 0;
          for (const auto& [ij, c] : first_pair_table(sink, m, PairMode::LeafCollision, opts)) collisions += c;
          const Count total = count_case3a(sink, m, opts);
          const Count slack = total - collisions;
          if (slack > 0) strict_seen = true;
          json p2 = base;
          p2["check"] = "leaf-collision";
          r.add({p2, star ? "= " + str(total) : "<= " + str(total), str(collisions),
                 verdict(star ? slack == 0 : slack >= 0), "slack " + str(slack)});
        }
      }

    // Per-(i, j, f) classes on stars: f places the cars of [j] \ {i, j} on
    // distinct leaves.
    for (int n = 2; n <= max_n; ++n) {
      const DiGraph sink = build_star(n, Orientation::Sink);
      const DiGraph source = build_star(n, Orientation::Source);
      for (int m = 2; m <= n; ++m)
        for (int j = 2; j <= m; ++j)
          for (int i = 1; i < j; ++i) {
            std::vector<int> others;
            for (int c = 1; c < j; ++c)
              if (c != i) others.push_back(c);
            const Count want_source = star_pair_partition(n, m, j, StarSide::Source);
            const Count want_sink = star_pair_partition(n, m, j, StarSide::Sink);
            std::size_t classes = 0, bad_source = 0, bad_sink = 0;
            std::vector<Vertex> f(others.size());
            std::vector<char> used(n + 1, 0);
            auto place = [&](auto&& self, std::size_t k) -> void {
              if (k == others.size()) {
                ++classes;
                PrefixAssignment g(j, 1);
                for (std::size_t t = 0; t < others.size(); ++t) g[others[t] - 1] = f[t];
                if (count_completions(source, m, g, opts) != want_source) ++bad_source;
                Count sink_total = 0;
                for (Vertex x = 2; x <= n; ++x) {
                  if (used[x]) continue;
                  g[i - 1] = g[j - 1] = x;
                  sink_total += count_completions(sink, m, g, opts);
                }
                if (sink_total != want_sink) ++bad_sink;
                return;
              }
              for (Vertex x = 2; x <= n; ++x) {
                if (used[x]) continue;
                used[x] = 1;
                f[k] = x;
                self(self, k + 1);
                used[x] = 0;
              }
            };
            place(place, 0);
            const std::string count_note = std::to_string(classes) + " injections";
            r.add({{{"n", n}, {"shape", "star"}, {"m", m}, {"i", i}, {"j", j}, {"side", "source"}},
                   str(want_source), bad_source ? std::to_string(bad_source) + " mismatches" : "all " + str(want_source),
                   verdict(bad_source == 0), count_note});
            r.add({{{"n", n}, {"shape", "star"}, {"m", m}, {"i", i}, {"j", j}, {"side", "sink"}},
                   str(want_sink), bad_sink ? std::to_string(bad_sink) + " mismatches" : "all " + str(want_sink),
                   verdict(bad_sink == 0), count_note});
          }
    }

    if (max_n >= 3)
      r.add({{{"max_n", max_n}, {"check", "strict-containment"}}, "some tree with slack > 0",
             strict_seen ? "found" : "none", verdict(strict_seen), {}});
  });
}

std::vector<CrudeInstance> generate_crude_instances(int max_n, std::size_t count, std::uint64_t seed, int max_free) {
  if (max_n < 3 || max_n > 9) throw InvalidArgument("crude instances need 3 <= max_n <= 9");
  if (max_free < 1) throw InvalidArgument("max_free must be positive");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  std::vector<std::vector<RootedTree>> trees(max_n + 1);
  for (int n = 3; n <= max_n; ++n) trees[n] = all_rooted_trees(n);

  std::vector<CrudeInstance> out;
  while (out.size() < count) {
    std::optional<CrudeInstance> fallback;
    for (int attempt = 0; attempt < 50; ++attempt) {
      const int n = pick(3, max_n);
      const auto& pool = trees[n];
      const RootedTree& t = pool[pick(0, static_cast<int>(pool.size()) - 1)];
      CrudeInstance inst;
      inst.graph = to_digraph(t, pick(0, 1) ? Orientation::Sink : Orientation::Source);
      const int j = pick(0, n - 2);
      const ParkingLot lot(inst.graph);
      bool parks = false;
      for (int tries = 0; tries < 20 && !parks; ++tries) {
        inst.g.assign(j, 1);
        for (auto& x : inst.g) x = pick(1, n);
        parks = !final_states(lot, inst.g).empty();
      }
      if (!parks) continue;
      inst.l2 = pick(1, std::min(n - j, max_free));
      inst.l1 = pick(0, inst.l2);
      inst.m = j + inst.l2;

      std::vector<Vertex> good, empty;
      const auto states = final_states(lot, inst.g);
      for (Vertex v = 1; v <= n; ++v) {
        if (!(states.front() & vertex_bit(v))) empty.push_back(v);
        if (check_must_park(inst.graph, inst.g, v, inst.m).ok) good.push_back(v);
      }
      if (!good.empty()) {
        inst.v = good[pick(0, static_cast<int>(good.size()) - 1)];
        fallback = std::move(inst);
        break;
      }
      if (!fallback) {
        inst.v = empty.empty() ? 1 : empty.front();
        fallback = std::move(inst);
      }
    }
    if (!fallback) throw Error("could not draw a parking prefix");
    out.push_back(std::move(*fallback));
  }
  return out;
}

SuiteReport suite_crudebounds(const std::vector<CrudeInstance>& instances, const CountOptions& opts) {
  return timed("crudebounds", [&](SuiteReport& r) {
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
      const CrudeInstance& in = instances[idx];
      const DiGraph& d = in.graph;
      const int n = d.size();
      const int j = static_cast<int>(in.g.size());
      json base = {{"instance", idx},
                   {"n", n},
                   {"root", d.root().value_or(0)},
                   {"orient", to_string(d.orientation())},
                   {"edges", edges_text(d)},
                   {"g", format_prefs(in.g)},
                   {"l1", in.l1},
                   {"l2", in.l2},
                   {"v", in.v},
                   {"m", in.m}};

      auto skip = [&](const char* item, std::string why) {
        json p = base;
        p["item"] = item;
        r.add({p, "", "", Verdict::Skip, std::move(why)});
      };

      if (!d.is_acyclic()) {
        skip("1", "digraph has a cycle");
        skip("2", "digraph has a cycle");
        continue;
      }
      if (in.l1 < 0 || in.l1 > in.l2 || j + in.l2 > n) {
        skip("1", "need 0 <= l1 <= l2 and j + l2 <= n");
        skip("2", "need 0 <= l1 <= l2 and j + l2 <= n");
        continue;
      }

      const Count c1 = count_completions(d, j + in.l1, in.g, opts);
      const Count c2 = count_completions(d, j + in.l2, in.g, opts);
      {
        // c1 <= c2 / rising(n-j-l1, l2-l1), cross-multiplied.
        const Count lhs = c1 * rising(n - j - in.l1, in.l2 - in.l1);
        json p = base;
        p["item"] = "1";
        r.add({p, "<= " + str(c2), str(lhs) + " (" + str(c1) + " at j+l1)", verdict(lhs <= c2), {}});
      }
      {
        const Count lhs = c1 * falling(n - j - in.l1, in.l2 - in.l1);
        json p = base;
        p["item"] = "1-falling";
        r.add({p, "<= " + str(c2), str(lhs), Verdict::Info, lhs <= c2 ? "holds" : "violated"});
      }

      const int l = in.l2;
      const MustParkCheck hyp = check_must_park(d, in.g, in.v, in.m);
      if (!hyp.ok) {
        skip("2", hyp.reason);
        continue;
      }
      if (l < 1 || n - j - l + 1 <= 0 || in.m < j + l) {
        skip("2", "need 1 <= l, j + l <= m and n - j - l + 1 > 0");
        continue;
      }
      const SplitCount split = count_completions_split(d, j + l, in.g, in.v, in.m, opts);
      // reaching <= l m / (n-j-l+1) * avoiding, cross-multiplied.
      const Count lhs = split.reaching * (n - j - l + 1);
      const Count rhs = Count(l) * in.m * split.avoiding;
      json p = base;
      p["item"] = "2";
      r.add({p, "<= " + str(rhs), str(lhs), verdict(lhs <= rhs),
             "reaching " + str(split.reaching) + ", avoiding " + str(split.avoiding)});
    }
  });
}

CrossoverResult find_crossover(int n, int oracle_max_n, const CountOptions& opts) {
  if (n < 1) throw InvalidArgument("crossover needs n >= 1");
  CrossoverResult out;
  out.n = n;
  for (int m = 1; m <= n; ++m) {
    CrossoverRow row{m, sink_star_count(n, m), source_star_count(n, m)};
    if (!out.m && row.source > row.sink) out.m = m;
    out.rows.push_back(std::move(row));
  }
  if (n <= oracle_max_n) {
    out.oracle_checked = true;
    const DiGraph sink = build_star(n, Orientation::Sink);
    const DiGraph source = build_star(n, Orientation::Source);
    for (int m = 1; m <= n && !out.oracle_m; ++m)
      if (count_pf(source, m, opts) > count_pf(sink, m, opts)) out.oracle_m = m;
  }
  return out;
}

SuiteReport suite_crossover(int min_n, int max_n, int oracle_max_n, const CountOptions& opts) {
  return timed("crossover", [&](SuiteReport& r) {
    auto text = [](const std::optional<int>& m) { return m ? std::to_string(*m) : std::string("none"); };
    for (int n = std::max(1, min_n); n <= max_n; ++n) {
      const CrossoverResult c = find_crossover(n, oracle_max_n, opts);
      const bool bounded = n < 3 || (c.m && *c.m <= n);
      std::string note;
      if (c.m) {
        const CrossoverRow& at = c.rows[*c.m - 1];
        note = "m=" + std::to_string(at.m) + ": sink " + str(at.sink) + ", source " + str(at.source);
      }
      if (c.oracle_checked) {
        r.add({{{"n", n}}, text(c.m), text(c.oracle_m), verdict(c.m == c.oracle_m && bounded), note});
      } else {
        r.add({{{"n", n}}, "<= n", text(c.m), verdict(bounded), note});
      }
    }
  });
}

SuiteReport suite_star_comparison(int max_n, const std::vector<long>& rs) {
  return timed("star-comparison", [&](SuiteReport& r) {
    auto sweep = [&](std::optional<long> rv) {
      for (long n = 1; n <= max_n; ++n) {
        long tested = 0, failed = 0, first_bad = 0;
        const long top = rv ? (n + 1) / *rv : 2 * n / 3;
        for (long m = 4; m <= top; ++m) {
          const InequalityCheck c = star_comparison(n, m, rv);
          if (!c.in_hypothesis) continue;
          ++tested;
          if (!c.holds && failed++ == 0) first_bad = m;
        }
        if (tested == 0) continue;
        json p = {{"n", n}};
        p["r"] = rv ? json(*rv) : json("none");
        r.add({p, "strict for " + std::to_string(tested) + " m",
               failed ? std::to_string(failed) + " violations" : "strict for " + std::to_string(tested) + " m",
               verdict(failed == 0), failed ? "first at m=" + std::to_string(first_bad) : ""});
      }
    };
    sweep(std::nullopt);
    for (long rv : rs) sweep(rv);
  });
}

SuiteReport suite_star_lemmas(int max_b) {
  return timed("star-lemmas", [&](SuiteReport& r) {
    for (long b = 1; b <= max_b; ++b) {
      long tested = 0, failed = 0, equal_nonzero = 0;
      bool equality_at_zero = false;
      for (long a = 0; a <= b - 1; ++a)
        for (long rv = 2; rv * (a + 1) <= b + 1; ++rv) {
          const InequalityCheck c = lemma_precise(a, b, rv);
          if (!c.in_hypothesis) continue;
          ++tested;
          if (!c.holds) ++failed;
          if (c.lhs == c.rhs) {
            if (a == 0)
              equality_at_zero = true;
            else
              ++equal_nonzero;
          }
        }
      // At a = 0 and r = b + 1 both sides are b + 1.
      const bool ok = failed == 0 && equal_nonzero == 0 && equality_at_zero;
      r.add({{{"lemma", "precise"}, {"b", b}},
             "holds on " + std::to_string(tested) + ", equality only at a=0",
             std::to_string(tested - failed) + "/" + std::to_string(tested) + " hold" +
                 (equal_nonzero ? ", equality at a>0" : "") + (equality_at_zero ? ", equality at a=0" : ""),
             verdict(ok), {}});
    }
    for (long b = 1; b <= max_b; ++b) {
      long tested = 0, failed = 0;
      for (long a = 0; a <= b - 1; ++a) {
        const InequalityCheck c = lemma_premaxbound(a, b);
        if (!c.in_hypothesis) continue;
        ++tested;
        if (!c.holds) ++failed;
      }
      r.add({{{"lemma", "premaxbound"}, {"b", b}}, "strict on " + std::to_string(tested),
             std::to_string(tested - failed) + "/" + std::to_string(tested) + " strict", verdict(failed == 0), {}});
    }
  });
}

SuiteReport suite_properties(int max_n, int max_m, const CountOptions& opts) {
  return timed("properties", [&](SuiteReport& r) {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= max_n; ++n)
      for (const RootedTree& t : all_rooted_trees(n)) {
        const DiGraph sink = to_digraph(t, Orientation::Sink);
        const DiGraph source = to_digraph(t, Orientation::Source);
        const std::string lv = levels_text(t);
        const int top = std::min(n, max_m);

        // flip* is an involution on vertices, hence on sequences.
        {
          const FlipPlan plan(sink);
          std::size_t bad = 0, seen = 0;
          for (int m = 1; m <= std::min(top, 3); ++m)
            for_each_sequence(n, m, [&](const PrefSeq& s) {
              ++seen;
              if (plan.apply(plan.apply(s)) != s) ++bad;
            });
          r.add({{{"property", "flip-involution"}, {"n", n}, {"levels", lv}}, "0 counterexamples",
                 std::to_string(bad) + " of " + std::to_string(seen), verdict(bad == 0), {}});
        }

        for (const DiGraph* d : {&sink, &source}) {
          const std::string orient = to_string(d->orientation());
          json base = {{"n", n}, {"levels", lv}, {"orient", orient}};
          std::size_t closure_bad = 0, memo_bad = 0, seen = 0;
          for (int m = 1; m <= top; ++m)
            for_each_sequence(n, m, [&](const PrefSeq& s) {
              ++seen;
              const bool parks = is_parking_function(*d, s);
              if (parks != is_parking_function_naive(*d, s)) ++memo_bad;
              if (parks)
                for (int k = 1; k < m; ++k)
                  if (!is_parking_function(*d, std::span<const Vertex>(s.data(), k))) {
                    ++closure_bad;
                    break;
                  }
            });
          json p = base;
          p["property"] = "prefix-closure";
          p["max_m"] = top;
          r.add({p, "0 counterexamples", std::to_string(closure_bad) + " of " + std::to_string(seen),
                 verdict(closure_bad == 0), {}});
          p["property"] = "memo-vs-naive";
          r.add({p, "0 counterexamples", std::to_string(memo_bad) + " of " + std::to_string(seen),
                 verdict(memo_bad == 0), {}});

          json q = base;
          q["property"] = "single-car";
          const Count one = count_pf(*d, 1, opts);
          r.add({q, std::to_string(n), str(one), verdict(one == n), {}});

          // Relabeling the vertices permutes the parking functions.
          std::vector<Vertex> sigma(n + 1);
          std::iota(sigma.begin(), sigma.end(), 0);
          std::shuffle(sigma.begin() + 1, sigma.end(), rng);
          const DiGraph moved = relabel(*d, sigma);
          std::size_t relabel_bad = 0, checked = 0;
          for (int m = 1; m <= std::min(top, 3); ++m) {
            if (count_pf(moved, m, opts) != count_pf(*d, m, opts)) ++relabel_bad;
            for_each_sequence(n, m, [&](const PrefSeq& s) {
              ++checked;
              PrefSeq image(s.size());
              std::transform(s.begin(), s.end(), image.begin(), [&](Vertex v) { return sigma[v]; });
              if (is_parking_function(moved, image) != is_parking_function(*d, s)) ++relabel_bad;
            });
          }
          json w = base;
          w["property"] = "relabeling";
          std::string perm;
          for (int v = 1; v <= n; ++v) perm += (v > 1 ? "," : "") + std::to_string(sigma[v]);
          w["sigma"] = perm;
          r.add({w, "0 counterexamples", std::to_string(relabel_bad) + " of " + std::to_string(checked),
                 verdict(relabel_bad == 0), {}});
        }
      }
  });
}

SuiteReport suite_flip_transfer(int max_n, int max_m, const CountOptions&) {
  return timed("flip-transfer", [&](SuiteReport& r) {
    for (int n = 2; n <= max_n; ++n)
      for (const RootedTree& t : all_rooted_trees(n)) {
        const DiGraph sink = to_digraph(t, Orientation::Sink);
        const DiGraph source = to_digraph(t, Orientation::Source);
        const Vertex z = sink.require_root();
        const FlipPlan plan(sink);
        const ParkingLot lot(sink);
        for (int m = 1; m <= std::min(n - 1, max_m); ++m) {
          std::size_t eligible = 0, lost = 0;
          std::string example;
          for_each_sequence(n, m, [&](const PrefSeq& s) {
            const auto states = final_states(lot, s);
            if (states.empty()) return;
            if (std::any_of(states.begin(), states.end(), [z](Occupancy o) { return o & vertex_bit(z); })) return;
            ++eligible;
            const PrefSeq f = plan.apply(s);
            if (!is_parking_function(source, f)) {
              if (lost++ == 0) example = format_prefs(s) + " -> " + format_prefs(f);
            }
          });
          r.add({{{"n", n}, {"levels", levels_text(t)}, {"m", m}}, "flip parks on the reversed tree",
                 std::to_string(eligible - lost) + " of " + std::to_string(eligible), Verdict::Info,
                 lost ? "first loss " + example : ""});
        }
      }
  });
}

namespace {

struct SuiteEntry {
  int default_n;
  int default_m;
  std::function<SuiteReport(const SuiteParams&, const CountOptions&)> run;
};

const std::map<std::string, SuiteEntry>& suites() {
  static const std::map<std::string, SuiteEntry> table = {
      {"classical", {6, 0, [](const SuiteParams& p, const CountOptions& o) { return suite_classical(p.max_n, o); }}},
      {"star-exact", {6, 0, [](const SuiteParams& p, const CountOptions& o) { return suite_star_exact(p.max_n, o); }}},
      {"full-capacity",
       {6, 0, [](const SuiteParams& p, const CountOptions& o) { return suite_full_capacity(p.max_n, o); }}},
      {"sparse-tree",
       {8, 3, [](const SuiteParams& p, const CountOptions& o) { return suite_sparse_tree(p.max_n, p.max_m, false, o); }}},
      {"starlike",
       {9, 3, [](const SuiteParams& p, const CountOptions& o) { return suite_sparse_tree(p.max_n, p.max_m, true, o); }}},
      {"partition",
       {6, 0, [](const SuiteParams& p, const CountOptions& o) { return suite_partition_identities(p.max_n, o); }}},
      {"crudebounds",
       {8, 4,
        [](const SuiteParams& p, const CountOptions& o) {
          return suite_crudebounds(generate_crude_instances(p.max_n, 60, p.seed, p.max_m), o);
        }}},
      {"crossover", {12, 0, [](const SuiteParams& p, const CountOptions& o) { return suite_crossover(1, p.max_n, 7, o); }}},
      {"star-comparison",
       {300, 0, [](const SuiteParams& p, const CountOptions&) { return suite_star_comparison(p.max_n); }}},
      {"star-lemmas", {200, 0, [](const SuiteParams& p, const CountOptions&) { return suite_star_lemmas(p.max_n); }}},
      {"properties",
       {5, 4, [](const SuiteParams& p, const CountOptions& o) { return suite_properties(p.max_n, p.max_m, o); }}},
      {"flip-transfer",
       {6, 3, [](const SuiteParams& p, const CountOptions& o) { return suite_flip_transfer(p.max_n, p.max_m, o); }}},
  };
  return table;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteParams& params, const CountOptions& opts) {
  const auto& table = suites();
  auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown suite '" + name + "'");
  SuiteParams p = params;
  if (p.max_n <= 0) p.max_n = it->second.default_n;
  if (p.max_m <= 0) p.max_m = it->second.default_m;
  return it->second.run(p, opts);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, e] : suites()) names.push_back(name);
  return names;
}

}  // namespace parklot
