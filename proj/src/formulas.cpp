#include "parklot/formulas.hpp"

#include <functional>
#include <map>

#include "parklot/error.hpp"

namespace parklot {

namespace {

void require_nonnegative(long x, const char* what) {
  if (x < 0) throw InvalidArgument(std::string(what) + " must be nonnegative, got " + std::to_string(x));
}

void require_cars(long n, long m) {
  if (m < 1 || m > n)
    throw InvalidArgument("need 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

// sum_{k=0}^{top} C(a,k) x^(k falling), with both factors updated in place.
Count binomial_falling_sum(long a, long x, long top) {
  Count sum = 0, c = 1, f = 1;
  for (long k = 0; k <= top && k <= a; ++k) {
    sum += c * f;
    c *= a - k;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    f *= x - k;
  }
  return sum;
}

// sum_{l=0}^{a} C(a,l) x^(l falling)
Count falling_binomial_sum(long a, long x) { return binomial_falling_sum(a, x, a); }

// sum_{i=lo}^{m} C(m,i) (n-1)^(m-i falling), summed over k = m-i.
Count root_pref_sum(long n, long m, long lo) { return binomial_falling_sum(m, n - 1, m - lo); }

}  // namespace

Count falling(long x, long k) {
  require_nonnegative(x, "falling factorial base");
  require_nonnegative(k, "falling factorial length");
  if (k > x) return 0;
  Count p = 1;
  for (long t = 0; t < k; ++t) p *= x - t;
  return p;
}

Count rising(long x, long k) {
  require_nonnegative(x, "rising factorial base");
  require_nonnegative(k, "rising factorial length");
  Count p = 1;
  for (long t = 0; t < k; ++t) p *= x + t;
  return p;
}

Count binomial(long n, long k) {
  require_nonnegative(n, "binomial top");
  if (k < 0 || k > n) return 0;
  Count c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

Count classical_count(long n, long m) {
  require_cars(n, m);
  Count p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(m - 1));
  return Count(n - m + 1) * p;
}

Count sink_star_count(long n, long m) {
  require_cars(n, m);
  return falling(n, m) + binomial(m, 2) * falling(n - 1, m - 1);
}

Count source_star_count(long n, long m) {
  require_cars(n, m);
  return root_pref_sum(n, m, 0);
}

Bounds bounds(long n, long m) { return {sink_star_count(n, m), source_star_count(n, m), classical_count(n, m)}; }

Count star_pair_partition(long n, long m, long j, StarSide side) {
  if (j < 2 || j > m || m > n)
    throw InvalidArgument("need 2 <= j <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " j=" + std::to_string(j));
  if (side == StarSide::Source) return falling_binomial_sum(m - j, n - j + 1);
  return Count(n - j + 1) * falling(n - j, m - j);
}

InequalityCheck lemma_precise(long a, long b, long r) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  InequalityCheck c;
  c.lhs = Count(r) * falling_binomial_sum(a, b + 1);
  c.rhs = Count(b + 1) * falling(b, a);
  c.holds = c.lhs <= c.rhs;
  c.in_hypothesis = a <= b - 1 && r >= 2 && r * (a + 1) <= b + 1;
  return c;
}

InequalityCheck lemma_premaxbound(long a, long b) {
  require_nonnegative(a, "a");
  require_nonnegative(b, "b");
  InequalityCheck c;
  c.lhs = falling_binomial_sum(a, b + 1);
  c.rhs = Count(b + 1) * falling(b, a);
  c.holds = c.lhs < c.rhs;
  c.in_hypothesis = a <= b - 1 && 3 * a <= 2 * b;
  return c;
}

InequalityCheck star_comparison(long n, long m, std::optional<long> r) {
  require_cars(n, m);
  InequalityCheck c;
  c.lhs = Count(r.value_or(1)) * root_pref_sum(n, m, 2);
  c.rhs = binomial(m, 2) * falling(n - 1, m - 1);
  c.holds = c.lhs < c.rhs;
  c.in_hypothesis = m > 3 && (r ? (*r >= 2 && *r * m <= n + 1) : 3 * m <= 2 * n);
  return c;
}

namespace {

struct Entry {
  std::size_t arity;
  std::string usage;
  std::function<FormulaValue(const std::vector<long>&)> eval;
};

FormulaValue single(std::string provenance, Count v) { return {std::move(provenance), {{"value", std::move(v)}}, {}}; }

FormulaValue inequality(std::string provenance, InequalityCheck c) {
  FormulaValue f{std::move(provenance), {{"lhs", c.lhs}, {"rhs", c.rhs}}, c};
  return f;
}

std::string args2(const char* a, long x, const char* b, long y) {
  return std::string(a) + "=" + std::to_string(x) + ", " + b + "=" + std::to_string(y);
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> table = {
      {"falling", {2, "x,k", [](const auto& a) { return single("falling(" + args2("x", a[0], "k", a[1]) + ")", falling(a[0], a[1])); }}},
      {"rising", {2, "x,k", [](const auto& a) { return single("rising(" + args2("x", a[0], "k", a[1]) + ")", rising(a[0], a[1])); }}},
      {"binomial", {2, "n,k", [](const auto& a) { return single("binomial(" + args2("n", a[0], "k", a[1]) + ")", binomial(a[0], a[1])); }}},
      {"classical", {2, "n,m", [](const auto& a) { return single("classical_count(" + args2("n", a[0], "m", a[1]) + ")", classical_count(a[0], a[1])); }}},
      {"sink-star", {2, "n,m", [](const auto& a) { return single("sink_star_count(" + args2("n", a[0], "m", a[1]) + ")", sink_star_count(a[0], a[1])); }}},
      {"source-star", {2, "n,m", [](const auto& a) { return single("source_star_count(" + args2("n", a[0], "m", a[1]) + ")", source_star_count(a[0], a[1])); }}},
      {"bounds",
       {2, "n,m",
        [](const auto& a) {
          Bounds b = bounds(a[0], a[1]);
          return FormulaValue{"bounds(" + args2("n", a[0], "m", a[1]) + ")",
                              {{"sink_lower", b.sink_lower}, {"source_lower", b.source_lower}, {"upper", b.upper}},
                              {}};
        }}},
      {"star-pair-sink",
       {3, "n,m,j",
        [](const auto& a) {
          return single("star_pair_partition(" + args2("n", a[0], "m", a[1]) + ", j=" + std::to_string(a[2]) + ", sink)",
                        star_pair_partition(a[0], a[1], a[2], StarSide::Sink));
        }}},
      {"star-pair-source",
       {3, "n,m,j",
        [](const auto& a) {
          return single("star_pair_partition(" + args2("n", a[0], "m", a[1]) + ", j=" + std::to_string(a[2]) + ", source)",
                        star_pair_partition(a[0], a[1], a[2], StarSide::Source));
        }}},
      {"precise",
       {3, "a,b,r",
        [](const auto& a) {
          return inequality("lemma_precise(" + args2("a", a[0], "b", a[1]) + ", r=" + std::to_string(a[2]) + ")",
                            lemma_precise(a[0], a[1], a[2]));
        }}},
      {"premaxbound",
       {2, "a,b", [](const auto& a) { return inequality("lemma_premaxbound(" + args2("a", a[0], "b", a[1]) + ")", lemma_premaxbound(a[0], a[1])); }}},
      {"star-comparison",
       {2, "n,m[,r]",
        [](const auto& a) {
          std::optional<long> r;
          if (a.size() > 2) r = a[2];
          std::string p = "star_comparison(" + args2("n", a[0], "m", a[1]) + (r ? ", r=" + std::to_string(*r) : "") + ")";
          return inequality(std::move(p), star_comparison(a[0], a[1], r));
        }}},
  };
  return table;
}

}  // namespace

FormulaValue evaluate_formula(const std::string& name, const std::vector<long>& args) {
  const auto& table = registry();
  auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown formula '" + name + "'");
  const Entry& e = it->second;
  const bool optional_extra = name == "star-comparison";
  if (args.size() != e.arity && !(optional_extra && args.size() == e.arity + 1))
    throw InvalidArgument("formula '" + name + "' takes arguments " + e.usage);
  return e.eval(args);
}

std::vector<std::string> formula_names() {
  std::vector<std::string> names;
  for (const auto& [name, e] : registry()) names.push_back(name);
  return names;
}

}  // namespace parklot
