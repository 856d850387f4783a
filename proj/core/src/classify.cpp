// Copyright 2026 The cyclomat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cyclomat/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "json.hpp"

#include "cyclomat/spectra.hpp"
#include "cyclomat/symmetrize.hpp"

namespace cyclomat {
namespace {

using Wide = __int128;

// (a(i,new), a(new,i)): same sign, product at most 4.
constexpr std::array<std::pair<Entry, Entry>, 17> kPairs = {{
    {0, 0},
    {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {1, 4}, {4, 1}, {2, 2},
    {-1, -1}, {-1, -2}, {-2, -1}, {-1, -3}, {-3, -1}, {-1, -4}, {-4, -1}, {-2, -2},
}};

Entry norm_limit(const SearchConstraints& c) { return c.open_interval ? 3 : 4; }

// Diagonal entry of S^2 for row i.
Entry row_norm(const Digraph& g, std::size_t i) {
  Entry s = g.charge(i) * g.charge(i);
  for (std::size_t j = 0; j < g.order(); ++j)
    if (j != i) s += g(i, j) * g(j, i);
  return s;
}

std::vector<Entry> charge_options(const SearchConstraints& c) {
  if (!c.allow_charges) return {0};
  if (c.require_nonnegative) return {0, 1};
  return {-1, 0, 1};
}

bool constraints_hold(const Digraph& g, const SearchConstraints& c) {
  if (c.require_nonnegative && !has_nonnegative_entries(g)) return false;
  if (!c.allow_charges && has_charge(g)) return false;
  return true;
}

class Extender {
 public:
  Extender(const Digraph& g, const SearchConstraints& c, bool first_only)
      : g_(g), c_(c), first_only_(first_only), n_(g.order()),
        limit_(norm_limit(c)), out_(n_), in_(n_) {
    const Symmetrizer d = compute_symmetrizer(g);
    for (const mpz_class& v : d.dsq) {
      if (!v.fits_slong_p()) throw std::overflow_error("extensions: symmetrizer too large");
      dsq_.push_back(v.get_si());
    }
    for (std::size_t i = 0; i < n_; ++i) norms_.push_back(row_norm(g, i));
    first_edge_ = n_;
  }

  std::vector<Digraph> run() {
    for (Entry x : charge_options(c_)) {
      charge_ = x;
      if (x * x + 1 > limit_) continue;
      choose(0, x * x);
      if (done_) break;
    }
    return std::move(found_);
  }

 private:
  void choose(std::size_t i, Entry used) {
    if (done_) return;
    if (i == n_) {
      if (first_edge_ != n_) emit();
      return;
    }
    for (const auto& [b, c] : kPairs) {
      if (c_.require_nonnegative && b < 0) continue;
      const Entry prod = b * c;
      if (used + prod > limit_ || norms_[i] + prod > limit_) continue;
      bool set_first = false;
      if (prod != 0) {
        // Balancing a(i,v) d_v^2 = a(v,i) d_i^2 fixes d_v^2 = d_i^2 c / b.
        const Wide num = Wide(dsq_[i]) * c;
        if (first_edge_ == n_) {
          first_edge_ = i;
          num_ = num;
          den_ = b;
          set_first = true;
        } else if (num_ * b != num * den_) {
          continue;
        }
      }
      out_[i] = b;
      in_[i] = c;
      choose(i + 1, used + prod);
      if (set_first) first_edge_ = n_;
      if (done_) return;
    }
    out_[i] = in_[i] = 0;
  }

  void emit() {
    Digraph h(n_ + 1);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) h.set(i, j, g_(i, j));
    for (std::size_t i = 0; i < n_; ++i) h.set_pair(i, n_, out_[i], in_[i]);
    h.set(n_, n_, charge_);
    if (!spectrum_within_two(h, c_.open_interval)) return;
    found_.push_back(std::move(h));
    if (first_only_) done_ = true;
  }

  const Digraph& g_;
  const SearchConstraints& c_;
  bool first_only_;
  std::size_t n_;
  Entry limit_;
  std::vector<Entry> dsq_, norms_, out_, in_;
  Entry charge_ = 0;
  std::size_t first_edge_ = 0;
  Wide num_ = 0, den_ = 1;
  bool done_ = false;
  std::vector<Digraph> found_;
};

std::vector<Digraph> run_extender(const Digraph& g, const SearchConstraints& c, bool first_only) {
  return Extender(g, c, first_only).run();
}

bool certified(const Digraph& g, const SearchConstraints& c) {
  return c.open_interval ? all_eigs_in_open(g) : is_cyclotomic(g);
}

// Canonical keys of named families, for labelling representatives.
class FamilyIndex {
 public:
  explicit FamilyIndex(std::size_t max_order) {
    for (auto& [id, g] : catalog(max_order)) map_.try_emplace(canonical_form(g), id);
  }
  std::optional<FamilyId> find(const CanonicalKey& k) const {
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::unordered_map<CanonicalKey, FamilyId, CanonicalKeyHash> map_;
};

std::string compact(const Digraph& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.order(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < g.order(); ++j) {
      if (j) s += ',';
      s += std::to_string(g(i, j));
    }
    s += ']';
  }
  return s + "]";
}

std::string describe(const Representative& r) {
  return r.label.empty() ? compact(r.matrix) : r.label;
}

void label(Representative& r, const FamilyIndex& index) {
  r.family = index.find(r.key);
  if (r.family) {
    r.label = display_name(*r.family);
  } else if (r.matrix.order() == 1 && (r.matrix(0, 0) == 2 || r.matrix(0, 0) == -2)) {
    r.label = "(2)";
  }
}

struct Node {
  Digraph matrix;
  CanonicalKey key;
  bool extends = false;
};

// Smallest by entries, for a deterministic choice among equivalent matrices.
bool entries_less(const Digraph& a, const Digraph& b) { return a.entries() < b.entries(); }

using Candidates = std::unordered_map<CanonicalKey, Digraph, CanonicalKeyHash>;

void offer(Candidates& into, CanonicalKey key, Digraph m) {
  auto [it, inserted] = into.try_emplace(std::move(key), m);
  if (!inserted && entries_less(m, it->second)) it->second = std::move(m);
}

void grow_range(std::vector<Node>& level, std::size_t begin, std::size_t end,
                const SearchConstraints& c, Candidates& out) {
  for (std::size_t k = begin; k < end; ++k) {
    std::vector<Digraph> ext = run_extender(level[k].matrix, c, false);
    level[k].extends = !ext.empty();
    for (Digraph& h : ext) {
      CanonicalForm f = canonicalize(h);
      if (constraints_hold(f.matrix, c))
        offer(out, std::move(f.key), std::move(f.matrix));
      else
        offer(out, std::move(f.key), std::move(h));
    }
  }
}

std::vector<Node> grow(std::vector<Node>& level, const SearchConstraints& c, std::size_t threads) {
  threads = std::max<std::size_t>(1, std::min(threads, level.size()));
  std::vector<Candidates> parts(threads);
  if (threads == 1) {
    grow_range(level, 0, level.size(), c, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (level.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = std::min(level.size(), t * chunk);
      const std::size_t e = std::min(level.size(), b + chunk);
      pool.emplace_back([&, b, e, t] { grow_range(level, b, e, c, parts[t]); });
    }
    for (std::thread& th : pool) th.join();
  }
  Candidates merged = std::move(parts[0]);
  for (std::size_t t = 1; t < parts.size(); ++t)
    for (auto& [k, m] : parts[t]) offer(merged, k, std::move(m));
  std::vector<Node> next;
  next.reserve(merged.size());
  for (auto& [k, m] : merged) next.push_back({std::move(m), k, false});
  std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.key < b.key; });
  for (const Node& n : next)
    if (!certified(n.matrix, c))
      throw std::logic_error("enumerate: elimination filter disagrees with root count");
  return next;
}

std::vector<Node> seeds(const SearchConstraints& c) {
  const Entry bound = c.open_interval ? 1 : 2;
  Candidates found;
  for (Entry x = -bound; x <= bound; ++x) {
    if (c.require_nonnegative && x < 0) continue;
    if (!c.allow_charges && x != 0) continue;
    Digraph g{{x}};
    CanonicalForm f = canonicalize(g);
    offer(found, f.key, constraints_hold(f.matrix, c) ? f.matrix : g);
  }
  std::vector<Node> out;
  for (auto& [k, m] : found) out.push_back({m, k, false});
  std::sort(out.begin(), out.end(), [](const Node& a, const Node& b) { return a.key < b.key; });
  return out;
}

struct Expected {
  std::string name;
  CanonicalKey key;
  Digraph matrix;
};

std::vector<Expected> expected_families(std::size_t max_order,
                                        std::initializer_list<Family> families) {
  std::vector<Expected> out;
  for (auto& [id, g] : catalog(max_order)) {
    if (std::find(families.begin(), families.end(), id.family) == families.end()) continue;
    out.push_back({display_name(id), canonical_form(g), g});
  }
  return out;
}

bool contains_key(const std::vector<Expected>& list, const CanonicalKey& k) {
  return std::any_of(list.begin(), list.end(), [&](const Expected& e) { return e.key == k; });
}

// Set comparison of `found` against `expected`; returns true on equality.
bool compare_sets(ClassificationReport& r, const std::vector<const Representative*>& found,
                  const std::vector<Expected>& expected) {
  bool ok = true;
  for (const Expected& e : expected) {
    const bool hit = std::any_of(found.begin(), found.end(),
                                 [&](const Representative* p) { return p->key == e.key; });
    if (!hit) {
      r.missing.push_back(e.name);
      ok = false;
    }
  }
  for (const Representative* p : found) {
    if (!contains_key(expected, p->key)) {
      r.unlisted.push_back(describe(*p));
      ok = false;
    }
  }
  return ok;
}

bool embeds_in_any(const Digraph& g, const std::vector<Expected>& targets) {
  for (const Expected& t : targets)
    if (t.matrix.order() >= g.order() && find_embedding(g, t.matrix)) return true;
  return false;
}

void finish(ClassificationReport& r) {
  r.passed = r.missing.empty() && r.unlisted.empty() && r.passed;
}

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (const std::string& n : names) {
    if (!s.empty()) s += ", ";
    s += n;
  }
  return s;
}

// Each cycle carries an even number of negative arcs, so some sign
// switching makes every entry nonnegative.
bool switchable_to_nonnegative(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<int> s(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (s[root]) continue;
    s[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || g(u, v) == 0) continue;
        const int want = s[u] * sign(g(u, v));
        if (!s[v]) {
          s[v] = want;
          stack.push_back(v);
        } else if (s[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_charged(const Digraph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.charge(i) == 1 || g.charge(i) == -1) return true;
  return false;
}

std::vector<Digraph> extensions(const Digraph& g, const SearchConstraints& c) {
  return run_extender(g, c, false);
}

bool is_maximal(const Digraph& g, const SearchConstraints& c) {
  return run_extender(g, c, true).empty();
}

ClassificationReport enumerate(const SearchConstraints& c, const EnumerateOptions& options) {
  if (c.max_order < 1) throw std::invalid_argument("enumerate: max_order must be at least 1");
  if (c.max_order > options.cap)
    throw SearchCapError("enumerate: max_order " + std::to_string(c.max_order) +
                         " exceeds the search cap " + std::to_string(options.cap));
  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const FamilyIndex index(c.max_order);
  ClassificationReport report;
  report.title = "classify";
  report.constraints = c;
  report.counts.assign(c.max_order + 1, 0);

  std::vector<Node> level = seeds(c);
  for (std::size_t order = 1; order <= c.max_order; ++order) {
    std::vector<Node> next;
    if (order < c.max_order) next = grow(level, c, threads);
    for (Node& n : level) {
      if (c.require_nonsymmetric && is_symmetric(n.matrix)) continue;
      Representative r;
      r.maximal = order < c.max_order ? !n.extends : is_maximal(n.matrix, c);
      r.matrix = std::move(n.matrix);
      r.key = std::move(n.key);
      label(r, index);
      report.representatives.push_back(std::move(r));
      ++report.counts[order];
    }
    level = std::move(next);
  }
  return report;
}

ClassificationReport verify_theorem_1(std::size_t max_order, const EnumerateOptions& options) {
  SearchConstraints c;
  c.max_order = max_order;
  c.require_nonsymmetric = true;
  ClassificationReport r = enumerate(c, options);
  r.title = "theorem1";
  const std::initializer_list<Family> kList = {Family::A1tilde_prime, Family::O4prime,
                                               Family::S8minus,       Family::L,
                                               Family::Lprime,        Family::Lplus,
                                               Family::A2pm,          Family::O4pm};
  const std::vector<Expected> expected = expected_families(max_order, kList);
  std::vector<const Representative*> maximal;
  for (const Representative& p : r.representatives) {
    if (!p.maximal) continue;
    maximal.push_back(&p);
    if (!is_plus_minus_two_only(p.matrix)) {
      r.notes.push_back("A^2 != 4I for " + describe(p));
      r.passed = false;
    }
  }
  compare_sets(r, maximal, expected);

  // Bounded containment: a nonsymmetric connected subgraph of order k of a
  // listed family already sits in a member of order at most 2k + 2.
  const std::vector<Expected> hosts = expected_families(2 * max_order + 2, kList);
  std::size_t contained = 0;
  for (const Representative& p : r.representatives) {
    if (p.maximal) continue;
    if (embeds_in_any(p.matrix, hosts)) {
      ++contained;
    } else {
      r.unlisted.push_back("not contained in a listed family: " + describe(p));
    }
  }
  r.notes.push_back(std::to_string(maximal.size()) + " maximal classes: " + [&] {
    std::vector<std::string> names;
    for (const Representative* p : maximal) names.push_back(describe(*p));
    return join(names);
  }());
  r.notes.push_back(std::to_string(contained) + " non-maximal classes embed in a listed family");
  finish(r);
  return r;
}

ClassificationReport verify_theorem_2(std::size_t max_order, const EnumerateOptions& options) {
  SearchConstraints c;
  c.max_order = max_order;
  c.require_nonsymmetric = true;
  c.open_interval = true;
  ClassificationReport r = enumerate(c, options);
  r.title = "theorem2";
  const std::initializer_list<Family> kList = {Family::B,  Family::C,
                                               Family::F4, Family::G2,
                                               Family::O4doubleprime, Family::B2pm};
  const std::vector<Expected> expected = expected_families(max_order, kList);
  const std::vector<Expected> hosts = expected_families(std::max<std::size_t>(max_order, 4), kList);

  // B_n sits inside B_n+1 and B_3 inside F4, so the listed classes are the
  // maximal ones only up to these chains: every class must embed in a listed
  // one, every listed one must occur, and every class with no extension at
  // all must itself be listed.
  std::vector<const Representative*> listed;
  std::vector<std::string> strict;
  for (const Representative& p : r.representatives) {
    if (contains_key(expected, p.key)) listed.push_back(&p);
    if (p.maximal) {
      strict.push_back(describe(p));
      if (!contains_key(expected, p.key)) r.unlisted.push_back("maximal but not listed: " + describe(p));
    }
    if (!embeds_in_any(p.matrix, hosts))
      r.unlisted.push_back("not contained in a listed family: " + describe(p));
  }
  compare_sets(r, listed, expected);
  std::vector<std::string> names;
  for (const Representative* p : listed) names.push_back(describe(*p));
  r.notes.push_back(std::to_string(listed.size()) + " maximal classes: " + join(names));
  r.notes.push_back("without any extension: " + join(strict));
  finish(r);
  return r;
}

ClassificationReport verify_corollary_1(std::size_t max_order, const EnumerateOptions& options) {
  SearchConstraints c;
  c.max_order = max_order;
  c.require_nonnegative = true;
  ClassificationReport r = enumerate(c, options);
  r.title = "corollary1";
  std::vector<Expected> expected = expected_families(
      max_order, {Family::A1tilde, Family::Atilde, Family::Dtilde, Family::E6tilde,
                  Family::E7tilde, Family::E8tilde, Family::A1tilde_prime, Family::Btilde,
                  Family::Ctilde, Family::Ctilde_prime, Family::F4tilde, Family::G2tilde,
                  Family::I, Family::J, Family::M});
  const Digraph two{{2}};
  expected.push_back({"(2)", canonical_form(two), two});

  std::vector<const Representative*> maximal;
  std::map<std::string, std::vector<std::string>> buckets;
  for (const Representative& p : r.representatives) {
    if (!p.maximal) continue;
    maximal.push_back(&p);
    const std::string bucket = std::string(is_symmetric(p.matrix) ? "symmetric" : "nonsymmetric") +
                               (is_charged(p.matrix) ? " charged" : " uncharged");
    buckets[bucket].push_back(describe(p));
    if (!is_symmetric(p.matrix) &&
        std::none_of(r.representatives.begin(), r.representatives.end(),
                     [&](const Representative& q) {
                       return q.maximal && q.key == canonical_form(transpose(p.matrix));
                     })) {
      r.notes.push_back("transpose missing for " + describe(p));
      r.passed = false;
    }
  }
  compare_sets(r, maximal, expected);
  for (const auto& [bucket, names] : buckets) r.notes.push_back(bucket + ": " + join(names));
  finish(r);
  return r;
}

ClassificationReport verify_corollary_5(std::size_t max_order, const EnumerateOptions& options) {
  SearchConstraints c;
  c.max_order = max_order;
  c.require_nonnegative = true;
  c.open_interval = true;
  ClassificationReport r = enumerate(c, options);
  r.title = "corollary5";
  const std::vector<Expected> simply_laced =
      expected_families(max_order, {Family::A, Family::D, Family::E6, Family::E7, Family::E8});
  const std::vector<Expected> charged = expected_families(max_order, {Family::Pplus});
  const std::initializer_list<Family> kList = {Family::B, Family::C, Family::F4, Family::G2};
  const std::vector<Expected> nonsym = expected_families(max_order, kList);
  const std::vector<Expected> hosts = expected_families(std::max<std::size_t>(max_order, 4), kList);

  std::vector<const Representative*> sym_u, sym_c, non_u;
  std::size_t non_c = 0;
  for (const Representative& p : r.representatives) {
    const bool sym = is_symmetric(p.matrix);
    const bool ch = is_charged(p.matrix);
    if (sym && !ch) sym_u.push_back(&p);
    if (sym && ch) sym_c.push_back(&p);
    if (!sym && !ch) {
      if (contains_key(nonsym, p.key)) non_u.push_back(&p);
      if (!embeds_in_any(p.matrix, hosts))
        r.unlisted.push_back("not contained in a listed family: " + describe(p));
    }
    if (!sym && ch) {
      ++non_c;
      r.unlisted.push_back("charged nonsymmetric: " + describe(p));
    }
  }
  compare_sets(r, sym_u, simply_laced);
  compare_sets(r, sym_c, charged);
  compare_sets(r, non_u, nonsym);
  r.notes.push_back(std::to_string(sym_u.size()) + " symmetric uncharged classes");
  r.notes.push_back(std::to_string(sym_c.size()) + " symmetric charged classes");
  std::vector<std::string> names;
  for (const Representative* p : non_u) names.push_back(describe(*p));
  r.notes.push_back("nonsymmetric maximal classes: " + join(names));
  r.notes.push_back(std::to_string(non_c) + " charged nonsymmetric classes");
  finish(r);
  return r;
}

ClassificationReport verify_corollary_3(std::size_t max_order, const EnumerateOptions& options) {
  if (max_order < 1) throw std::invalid_argument("verify_corollary_3: max_order must be at least 1");
  if (max_order > std::min<std::size_t>(options.cap, 9))
    throw SearchCapError("verify_corollary_3: max_order " + std::to_string(max_order) +
                         " exceeds the search cap");
  ClassificationReport r;
  r.title = "corollary3";
  r.constraints.max_order = max_order;
  r.counts.assign(max_order + 1, 0);
  const FamilyIndex index(max_order);

  std::map<CanonicalKey, Representative> found;
  for (auto& [id, g] : catalog(max_order)) {
    switch (id.family) {
      case Family::A1tilde_prime: case Family::O4prime: case Family::S8minus:
      case Family::L: case Family::Lprime: case Family::Lplus:
      case Family::A2pm: case Family::O4pm:
        break;
      default:
        continue;
    }
    const std::size_t n = g.order();
    std::vector<unsigned> good;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1u) keep.push_back(v);
      const Digraph h = induced_subgraph(g, VertexSet(keep));
      if (is_connected(h) && !has_charge(h) && switchable_to_nonnegative(h)) good.push_back(mask);
    }
    std::vector<std::string> names;
    for (unsigned m : good) {
      const bool dominated = std::any_of(good.begin(), good.end(), [&](unsigned o) {
        return o != m && (o & m) == m;
      });
      if (dominated) continue;
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < n; ++v)
        if (m >> v & 1u) keep.push_back(v);
      const Digraph h = induced_subgraph(g, VertexSet(keep));
      // Symmetric ones (for instance the cycles inside long ladders) belong
      // to the simply laced list, not this one.
      if (is_symmetric(h)) continue;
      Representative p;
      CanonicalForm f = canonicalize(h);
      p.key = f.key;
      p.matrix = has_nonnegative_entries(f.matrix) ? f.matrix : h;
      p.maximal = true;
      label(p, index);
      names.push_back(describe(p));
      found.try_emplace(p.key, std::move(p));
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    r.notes.push_back("from " + display_name(id) + ": " + join(names));
  }

  // A ladder with 2r + 2 vertices yields affine diagrams on at most r + 2
  // vertices, so the list is complete up to order max_order / 2 + 1.
  const std::vector<Expected> expected = expected_families(
      max_order / 2 + 1,
      {Family::A1tilde_prime, Family::Btilde, Family::Ctilde, Family::Ctilde_prime,
       Family::F4tilde, Family::G2tilde});
  std::vector<const Representative*> list;
  for (auto& [k, p] : found) {
    r.representatives.push_back(p);
    ++r.counts[p.matrix.order()];
  }
  std::sort(r.representatives.begin(), r.representatives.end(),
            [](const Representative& a, const Representative& b) {
              return a.matrix.order() != b.matrix.order() ? a.matrix.order() < b.matrix.order()
                                                          : a.key < b.key;
            });
  for (const Representative& p : r.representatives) list.push_back(&p);
  compare_sets(r, list, expected);
  finish(r);
  return r;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  const SearchConstraints& c = r.constraints;
  out << "report " << r.title << '\n';
  out << "constraints max_order=" << c.max_order << " nonsymmetric=" << c.require_nonsymmetric
      << " nonnegative=" << c.require_nonnegative << " charges=" << c.allow_charges
      << " open=" << c.open_interval << '\n';
  for (std::size_t k = 1; k < r.counts.size(); ++k)
    out << "count " << k << ' ' << r.counts[k] << '\n';
  for (const Representative& p : r.representatives) {
    out << "rep " << p.matrix.order() << ' ' << (p.label.empty() ? "unlisted" : p.label)
        << " maximal=" << (p.maximal ? 1 : 0) << ' ' << compact(p.matrix) << '\n';
  }
  for (const std::string& m : r.missing) out << "missing " << m << '\n';
  for (const std::string& u : r.unlisted) out << "unlisted " << u << '\n';
  for (const std::string& n : r.notes) out << "note " << n << '\n';
  out << "result " << (r.passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string to_json(const ClassificationReport& r) {
  using nlohmann::json;
  json doc;
  doc["title"] = r.title;
  doc["constraints"] = {{"max_order", r.constraints.max_order},
                        {"nonsymmetric", r.constraints.require_nonsymmetric},
                        {"nonnegative", r.constraints.require_nonnegative},
                        {"charges", r.constraints.allow_charges},
                        {"open", r.constraints.open_interval}};
  json counts = json::object();
  json orders = json::object();
  for (std::size_t k = 1; k < r.counts.size(); ++k) {
    counts[std::to_string(k)] = r.counts[k];
    orders[std::to_string(k)] = json::array();
  }
  for (const Representative& p : r.representatives) {
    json rows = json::array();
    for (std::size_t i = 0; i < p.matrix.order(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < p.matrix.order(); ++j) row.push_back(p.matrix(i, j));
      rows.push_back(std::move(row));
    }
    orders[std::to_string(p.matrix.order())].push_back(
        {{"matrix", std::move(rows)},
         {"family", p.label.empty() ? "unlisted" : p.label},
         {"maximal", p.maximal}});
  }
  doc["counts"] = std::move(counts);
  doc["orders"] = std::move(orders);
  doc["passed"] = r.passed;
  doc["missing"] = r.missing;
  doc["unlisted"] = r.unlisted;
  doc["notes"] = r.notes;
  return doc.dump(2) + "\n";
}

}  // namespace cyclomat
