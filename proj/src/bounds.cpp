#include "ramsey/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "ramsey/chi.hpp"

namespace ramsey {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kLower: return "lower";
    case BoundKind::kUpper: return "upper";
    case BoundKind::kExact: return "exact";
  }
  return "?";
}

nlohmann::json BoundResult::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep& s : trace) {
    nlohmann::json j{{"method", s.method},
                     {"citation", s.citation},
                     {"key", s.key},
                     {"value", s.value.get_str()}};
    if (!s.params.empty()) j["params"] = s.params;
    if (!s.deps.empty()) j["deps"] = s.deps;
    steps.push_back(std::move(j));
  }
  nlohmann::json out{{"value", value.get_str()}, {"kind", to_string(kind)}, {"trace", steps}};
  if (lower) out["lower"] = lower->get_str();
  return out;
}

SeedTable SeedTable::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("seed table: expected a JSON array");
  SeedTable t;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("patterns"))
      throw std::invalid_argument("seed table: each entry needs a patterns field");
    PatternList p = PatternList::from_json(e.at("patterns"));
    SeedEntry entry;
    if (e.contains("lower")) entry.lower = e.at("lower").get<long long>();
    if (e.contains("upper")) entry.upper = e.at("upper").get<long long>();
    if (e.contains("source")) entry.source = e.at("source").get<std::string>();
    if (!entry.lower && !entry.upper)
      throw std::invalid_argument("seed table: entry for " + p.key() + " has neither bound");
    if (entry.lower && entry.upper && *entry.lower > *entry.upper)
      throw std::invalid_argument("seed table: entry for " + p.key() + " has lower > upper");
    if ((entry.lower && *entry.lower < 1) || (entry.upper && *entry.upper < 1))
      throw std::invalid_argument("seed table: bounds must be positive");
    std::string key = p.key();
    auto it = t.entries_.find(key);
    if (it != t.entries_.end()) {
      if (it->second.lower != entry.lower || it->second.upper != entry.upper)
        throw std::invalid_argument("seed table: conflicting entries for " + key);
    } else {
      t.entries_.emplace(std::move(key), std::move(entry));
    }
  }
  return t;
}

SeedTable SeedTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("seed table: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

std::optional<SeedEntry> SeedTable::find(const PatternList& p) const {
  auto it = entries_.find(p.key());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

nlohmann::json SeedTable::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, e] : entries_) {
    nlohmann::json entry{{"patterns", PatternList::parse(key).to_json()}};
    if (e.lower) entry["lower"] = *e.lower;
    if (e.upper) entry["upper"] = *e.upper;
    if (!e.source.empty()) entry["source"] = e.source;
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::vector<unsigned long> deficits(const PatternList& p) {
  std::vector<unsigned long> d;
  d.reserve(static_cast<std::size_t>(p.r()));
  for (const Pattern& q : p.patterns()) d.push_back(static_cast<unsigned long>(q.k - q.t));
  return d;
}

int max_t(const PatternList& p) {
  int m = 0;
  for (const Pattern& q : p.patterns()) m = std::max(m, q.t);
  return m;
}

}  // namespace

std::optional<BoundResult> base_case(const PatternList& p) {
  int best = -1;
  for (const Pattern& q : p.patterns())
    if (q.k == q.t && (best < 0 || q.t < best)) best = q.t;
  if (best < 0) return std::nullopt;
  BoundResult r;
  r.value = best;
  r.kind = BoundKind::kExact;
  r.lower = r.value;
  r.trace.push_back({"base-case",
                     "some k_i = t_i: the empty target is realized by coloring nothing, value is "
                     "the smallest such t_i",
                     p.key(),
                     "",
                     {},
                     r.value});
  return r;
}

BoundResult explicit_bound(const PatternList& p) {
  if (auto base = base_case(p)) return *base;
  if (p.r() < 2) throw std::invalid_argument("explicit_bound: the multinomial bound needs r >= 2");
  BoundResult r;
  r.value = max_t(p) * multinomial(deficits(p));
  r.kind = BoundKind::kUpper;
  r.trace.push_back({"multinomial-bound",
                     "max_i t_i times the multinomial coefficient of the deficits k_i - t_i",
                     p.key(),
                     "",
                     {},
                     r.value});
  return r;
}

BoundResult symmetric_bound(int k, int t, int r) {
  if (t < 1 || k < t || r < 2) throw std::invalid_argument("symmetric_bound: need k >= t >= 1, r >= 2");
  std::vector<Pattern> pats(static_cast<std::size_t>(r), Pattern{k, t});
  return explicit_bound(PatternList(std::move(pats)));
}

const RecursiveEngine::Node& RecursiveEngine::eval(const PatternList& canonical) const {
  std::string key = canonical.key();
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  Node node;
  std::optional<long long> seed_upper;
  if (auto entry = seeds_->find(canonical); entry && entry->upper) seed_upper = *entry->upper;

  int base = -1;
  for (const Pattern& q : canonical.patterns())
    if (q.k == q.t && (base < 0 || q.t < base)) base = q.t;

  if (base >= 0) {
    node.value = base;
    node.method = "base-case";
  } else {
    // All k_i >= t_i + 1: the deficit recursion applies and grounds out
    // because the k-sum strictly decreases toward a base case.
    BigInt sum = 0;
    for (int i = 0; i < canonical.r(); ++i) {
      PatternList child = canonical.with_decremented(i).canonical();
      sum += eval(child).value;
      node.deps.push_back(child.key());
    }
    sum -= canonical.r() - 2;
    node.value = sum;
    node.method = "recursion";
  }
  if (seed_upper && BigInt(static_cast<long>(*seed_upper)) < node.value) {
    node.value = static_cast<long>(*seed_upper);
    node.method = "seed";
    node.deps.clear();
  }

  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.emplace(std::move(key), std::move(node));
  return it->second;
}

BigInt RecursiveEngine::value(const PatternList& p) const { return eval(p.canonical()).value; }

BoundResult RecursiveEngine::bound(const PatternList& p) const {
  PatternList canonical = p.canonical();
  eval(canonical);

  // Emit one step per reachable memo node, dependencies first.
  BoundResult out;
  std::set<std::string> emitted;
  std::vector<TraceStep> steps;
  // Post-order walk without recursion: expand, then emit when all deps done.
  struct Frame {
    std::string key;
    bool expanded;
  };
  std::vector<Frame> frames{{canonical.key(), false}};
  std::shared_lock lock(mutex_);
  while (!frames.empty()) {
    Frame f = frames.back();
    frames.pop_back();
    if (emitted.count(f.key)) continue;
    const Node& node = memo_.at(f.key);
    if (!f.expanded) {
      frames.push_back({f.key, true});
      for (const std::string& d : node.deps)
        if (!emitted.count(d)) frames.push_back({d, false});
      continue;
    }
    std::string citation;
    if (node.method == "base-case")
      citation = "some k_i = t_i: exact degenerate value";
    else if (node.method == "seed")
      citation = "seed table upper bound";
    else
      citation = "deficit recursion: sum of one-step reductions minus (r-2)";
    steps.push_back({node.method, citation, f.key, "", node.deps, node.value});
    emitted.insert(f.key);
  }
  lock.unlock();

  out.trace = std::move(steps);
  out.value = out.trace.back().value;
  const std::string& root_method = out.trace.back().method;
  out.kind = root_method == "base-case" ? BoundKind::kExact : BoundKind::kUpper;
  if (out.kind == BoundKind::kExact) out.lower = out.value;
  return out;
}

BoundResult recursive_bound(const PatternList& p, const SeedTable& seeds) {
  RecursiveEngine engine(seeds);
  return engine.bound(p);
}

namespace {

struct Rational {
  long long num;
  long long den;
};

struct PolySpec {
  int s;
  long long k_min;
  bool tight;                       // closed form is a proven equality
  std::vector<Rational> coeffs;     // ascending degree
  std::vector<std::pair<long long, long long>> anchors;  // isolated (k, value) points
};

const std::vector<PolySpec>& dropped_families() {
  static const std::vector<PolySpec> fams{
      {3, 2, true, {{-3, 1}, {2, 1}}, {}},
      {4, 10, false, {{-39, 1}, {-2, 1}, {1, 1}}, {}},
      {5, 9, false, {{294, 1}, {-239, 6}, {-1, 2}, {1, 3}}, {{8, 104}}},
      {6, 8, false, {{-1009, 1}, {274, 1}, {-241, 12}, {0, 1}, {1, 12}}, {}},
      {7, 7, false, {{2064, 1}, {-17507, 20}, {3047, 24}, {-20, 3}, {1, 24}, {1, 60}}, {}},
  };
  return fams;
}

const std::vector<PolySpec>& clique_families() {
  static const std::vector<PolySpec> fams{
      {3, 2, true, {{-1, 1}, {2, 1}}, {}},
      {4, 8, false, {{-22, 1}, {0, 1}, {1, 1}}, {}},
      {5, 8, false, {{95, 1}, {-131, 6}, {1, 2}, {1, 3}}, {}},
      {6, 8, false, {{-208, 1}, {505, 6}, {-127, 12}, {1, 3}, {1, 12}}, {}},
      {7, 8, false, {{287, 1}, {-10061, 60}, {295, 8}, {-10, 3}, {1, 8}, {1, 60}}, {}},
      {8, 8, false, {{-239, 1}, {2093, 10}, {-11923, 180}, {32, 3}, {-55, 72}, {1, 30}, {1, 360}}, {}},
      {9,
       8,
       false,
       {{24, 1}, {-20351, 140}, {2671, 36}, {-12241, 720}, {331, 144}, {-97, 720}, {1, 144}, {1, 2520}},
       {}},
      {10,
       8,
       false,
       {{408, 1},
        {-1019, 28},
        {-200713, 5040},
        {4079, 240},
        {-3031, 960},
        {19, 48},
        {-3, 160},
        {1, 840},
        {1, 20160}},
       {}},
      {11,
       8,
       false,
       {{-1183, 1},
        {965843, 2520},
        {-9761, 288},
        {-528539, 90720},
        {5443, 1920},
        {-3827, 8640},
        {11, 192},
        {-31, 15120},
        {1, 5760},
        {1, 181440}},
       {}},
  };
  return fams;
}

const PolySpec* find_family(PolyFamily family, int s) {
  const auto& fams = family == PolyFamily::kDropped ? dropped_families() : clique_families();
  for (const PolySpec& f : fams)
    if (f.s == s) return &f;
  return nullptr;
}

BigInt eval_poly(const PolySpec& spec, long long k) {
  mpq_class acc = 0;
  mpq_class kq(static_cast<long>(k));
  mpq_class power = 1;
  for (const Rational& c : spec.coeffs) {
    acc += mpq_class(static_cast<long>(c.num), static_cast<long>(c.den)) * power;
    power *= kq;
  }
  acc.canonicalize();
  if (acc.get_den() != 1)
    throw std::logic_error("polynomial family s=" + std::to_string(spec.s) +
                           " evaluated to a non-integer; coefficient transcription fault");
  return acc.get_num();
}

std::string family_name(PolyFamily f) { return f == PolyFamily::kDropped ? "dropped" : "clique"; }

std::string poly_key(PolyFamily family, int s, long long k) {
  Pattern a{s, 2};
  Pattern b{static_cast<int>(k), family == PolyFamily::kDropped ? 2 : 1};
  return PatternList({a, b}).key();
}

}  // namespace

std::optional<BoundResult> polynomial_bound(PolyFamily family, int s, long long k) {
  const PolySpec* spec = find_family(family, s);
  if (spec == nullptr) return std::nullopt;
  std::string params =
      "family=" + family_name(family) + ";s=" + std::to_string(s) + ";k=" + std::to_string(k);
  BoundResult r;
  if (k < spec->k_min) {
    for (auto [ak, av] : spec->anchors)
      if (ak == k) {
        r.value = static_cast<long>(av);
        r.kind = BoundKind::kUpper;
        r.trace.push_back({"polynomial", "anchored value preceding the closed form",
                           poly_key(family, s, k), params, {}, r.value});
        return r;
      }
    return std::nullopt;
  }
  if (k > 1000000) throw std::invalid_argument("polynomial_bound: k out of supported range");
  r.value = eval_poly(*spec, k);
  if (spec->tight) {
    r.kind = BoundKind::kExact;
    r.lower = r.value;
    r.trace.push_back({"polynomial",
                       "tight two-color closed form; the matching construction meets it from below",
                       poly_key(family, s, k), params, {}, r.value});
  } else {
    r.kind = BoundKind::kUpper;
    r.trace.push_back({"polynomial", "two-color closed-form upper bound", poly_key(family, s, k),
                       params, {}, r.value});
  }
  return r;
}

BoundResult chi_based_bound(const PatternList& p) {
  if (p.r() < 2) throw std::invalid_argument("chi_based_bound: need r >= 2");
  long long k_star = 1 + max_t(p);
  for (const Pattern& q : p.patterns()) k_star += q.k - q.t - 1;
  BoundResult r;
  std::string params = "k_star=" + std::to_string(k_star);
  if (k_star < 3) {
    r.value = 2;
    r.trace.push_back({"chi-bound", "target order below 3: two vertices always suffice",
                       p.key(), params, {}, r.value});
  } else {
    r.value = g_bound(k_star, p.r());
    r.trace.push_back({"chi-bound",
                       "ordered-coloring bound: g(k*, r) with k* = sum(k_i - t_i - 1) + 1 + max t_i",
                       p.key(), params, {}, r.value});
  }
  r.kind = BoundKind::kUpper;
  return r;
}

BoundResult best_bound(const PatternList& p, const SeedTable& seeds) {
  PatternList canonical = p.canonical();
  struct Candidate {
    std::string name;
    BoundResult result;
  };
  std::vector<Candidate> candidates;

  if (auto base = base_case(canonical)) candidates.push_back({"base-case", *base});

  std::optional<SeedEntry> seed = seeds.find(canonical);
  if (seed && seed->upper) {
    BoundResult r;
    r.value = static_cast<long>(*seed->upper);
    r.kind = BoundKind::kUpper;
    r.trace.push_back({"seed", "seed table upper bound" + (seed->source.empty() ? "" : " [" + seed->source + "]"),
                       canonical.key(), "", {}, r.value});
    candidates.push_back({"seed", std::move(r)});
  }

  candidates.push_back({"recursive", recursive_bound(canonical, seeds)});

  if (canonical.r() == 2) {
    const Pattern a = canonical[0], b = canonical[1];
    auto try_family = [&](const Pattern& first, const Pattern& second) {
      if (first.t != 2) return;
      if (second.t != 1 && second.t != 2) return;
      PolyFamily fam = second.t == 1 ? PolyFamily::kClique : PolyFamily::kDropped;
      if (auto r = polynomial_bound(fam, first.k, second.k))
        candidates.push_back({"polynomial", std::move(*r)});
    };
    try_family(a, b);
    if (!(a == b)) try_family(b, a);
  }

  if (canonical.r() >= 2 || base_case(canonical).has_value())
    candidates.push_back({"explicit", explicit_bound(canonical)});
  if (canonical.r() >= 2) candidates.push_back({"chi", chi_based_bound(canonical)});

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[i].result.value < candidates[best].result.value) best = i;

  BoundResult out = candidates[best].result;
  std::ostringstream summary;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i) summary << ' ';
    summary << candidates[i].name << '=' << candidates[i].result.value.get_str();
  }
  out.trace.push_back({"best", "minimum over applicable methods: " + summary.str(),
                       canonical.key(), "winner=" + candidates[best].name, {}, out.value});

  if (seed && seed->lower) {
    BigInt lo(static_cast<long>(*seed->lower));
    if (!out.lower || lo > *out.lower) out.lower = lo;
  }
  if (out.kind != BoundKind::kExact && out.lower && *out.lower == out.value)
    out.kind = BoundKind::kExact;
  if (out.kind == BoundKind::kExact && !out.lower) out.lower = out.value;
  return out;
}

bool replay_trace(const BoundResult& result, const SeedTable& seeds) {
  if (result.trace.empty()) return false;
  std::map<std::string, BigInt> env;
  for (const TraceStep& step : result.trace) {
    BigInt expect;
    PatternList pats = PatternList::parse(step.key);
    if (step.method == "base-case") {
      auto b = base_case(pats);
      if (!b) return false;
      expect = b->value;
    } else if (step.method == "seed") {
      auto e = seeds.find(pats);
      if (!e || !e->upper) return false;
      expect = static_cast<long>(*e->upper);
    } else if (step.method == "recursion") {
      expect = 0;
      for (const std::string& d : step.deps) {
        auto it = env.find(d);
        if (it == env.end()) return false;
        expect += it->second;
      }
      expect -= pats.r() - 2;
    } else if (step.method == "multinomial-bound") {
      expect = max_t(pats) * multinomial(deficits(pats));
    } else if (step.method == "chi-bound") {
      long long k_star = 1 + max_t(pats);
      for (const Pattern& q : pats.patterns()) k_star += q.k - q.t - 1;
      expect = k_star < 3 ? BigInt(2) : g_bound(k_star, pats.r());
    } else if (step.method == "polynomial") {
      // params: family=<f>;s=<s>;k=<k>
      std::string fam_name;
      int s = 0;
      long long k = 0;
      std::istringstream in(step.params);
      std::string tok;
      while (std::getline(in, tok, ';')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string name = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (name == "family") fam_name = val;
        if (name == "s") s = std::stoi(val);
        if (name == "k") k = std::stoll(val);
      }
      auto r = polynomial_bound(fam_name == "dropped" ? PolyFamily::kDropped : PolyFamily::kClique, s, k);
      if (!r) return false;
      expect = r->value;
    } else if (step.method == "best") {
      auto it = env.find(step.key);
      if (it == env.end()) return false;
      expect = it->second;
    } else {
      return false;
    }
    if (expect != step.value) return false;
    env[step.key] = step.value;
  }
  return result.trace.back().value == result.value;
}

}  // namespace ramsey
