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

#include "cyclomat/equivalence.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cyclomat {

SignedPermutation SignedPermutation::Identity(std::size_t n) {
  SignedPermutation p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), std::size_t{0});
  p.signs.assign(n, 1);
  return p;
}

bool SignedPermutation::valid() const {
  if (signs.size() != perm.size()) return false;
  if (negate != 1 && negate != -1) return false;
  std::vector<char> hit(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size() || hit[perm[i]]) return false;
    hit[perm[i]] = 1;
    if (signs[i] != 1 && signs[i] != -1) return false;
  }
  return true;
}

Digraph apply(const Digraph& g, const SignedPermutation& p) {
  if (p.size() != g.order())
    throw std::invalid_argument("apply: permutation size does not match digraph");
  if (!p.valid()) throw std::invalid_argument("apply: not a signed permutation");
  const std::size_t n = g.order();
  Digraph out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set(p.perm[i], p.perm[j], p.negate * p.signs[i] * p.signs[j] * g(i, j));
  return out;
}

Digraph sign_switch(const Digraph& g, const std::vector<int>& signs) {
  if (signs.size() != g.order())
    throw std::invalid_argument("sign_switch: sign vector length mismatch");
  SignedPermutation p = SignedPermutation::Identity(g.order());
  p.signs = signs;
  return apply(g, p);
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  SignedPermutation r;
  r.perm.resize(q.size());
  r.signs.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    r.perm[i] = p.perm[q.perm[i]];
    r.signs[i] = p.signs[q.perm[i]] * q.signs[i];
  }
  r.negate = p.negate * q.negate;
  return r;
}

SignedPermutation inverse(const SignedPermutation& p) {
  SignedPermutation r;
  r.perm.resize(p.size());
  r.signs.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    r.perm[p.perm[i]] = i;
    r.signs[p.perm[i]] = p.signs[i];
  }
  r.negate = p.negate;
  return r;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  std::size_t h = k.n * 0x9e3779b97f4a7c15ULL;
  for (Entry x : k.code)
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

constexpr Entry kMax = std::numeric_limits<Entry>::max();
constexpr Entry kMin = std::numeric_limits<Entry>::min();

Entry magnitude(Entry x) { return x == kMin ? kMax : (x < 0 ? -x : x); }
Entry flip(Entry x) { return x == kMin ? kMax : -x; }

Entry pair_product(Entry a, Entry b) {
  Entry out;
  if (__builtin_mul_overflow(a, b, &out)) return sign(a) * sign(b) > 0 ? kMax : kMin;
  return out;
}

bool touches(const Digraph& g, std::size_t i, std::size_t j) {
  return g(i, j) != 0 || g(j, i) != 0;
}

std::vector<Entry> rank(const std::vector<std::vector<Entry>>& sig) {
  std::vector<std::size_t> idx(sig.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
  std::vector<Entry> out(sig.size());
  Entry r = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && sig[idx[k]] != sig[idx[k - 1]]) ++r;
    out[idx[k]] = r;
  }
  return out;
}

Entry distinct(const std::vector<Entry>& colour) {
  return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
}

// Colour refinement on invariants that signed permutations preserve: the
// charge, and per neighbour the pair product and both arc moduli.
std::vector<Entry> refine_colours(const Digraph& m) {
  const std::size_t n = m.order();
  std::vector<std::vector<Entry>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::tuple<Entry, Entry, Entry>> nb;
    for (std::size_t j = 0; j < n; ++j)
      if (j != v && touches(m, v, j))
        nb.emplace_back(pair_product(m(v, j), m(j, v)), magnitude(m(v, j)),
                        magnitude(m(j, v)));
    std::sort(nb.begin(), nb.end());
    sig[v] = {m(v, v)};
    for (auto [p, x, y] : nb) sig[v].insert(sig[v].end(), {p, x, y});
  }
  std::vector<Entry> colour = rank(sig);
  Entry classes = distinct(colour);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::array<Entry, 4>> nb;
      for (std::size_t j = 0; j < n; ++j)
        if (j != v && touches(m, v, j))
          nb.push_back({colour[j], pair_product(m(v, j), m(j, v)), magnitude(m(v, j)),
                        magnitude(m(j, v))});
      std::sort(nb.begin(), nb.end());
      sig[v] = {colour[v]};
      for (const auto& t : nb) sig[v].insert(sig[v].end(), t.begin(), t.end());
    }
    std::vector<Entry> next = rank(sig);
    const Entry next_classes = distinct(next);
    if (next_classes == classes) break;
    colour = std::move(next);
    classes = next_classes;
  }
  return colour;
}

std::vector<std::vector<std::size_t>> weak_components(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && touches(g, comp[head], v)) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Best connected ordering of one component. A vertex may be placed only
// next to an already placed one, which pins its sign: the sign is chosen so
// that its first nonzero arc to the placed part is positive. Candidates are
// compared block by block, where block k is
//   colour, -charge, then (-a(v, o_j), -a(o_j, v)) for j < k
// after signs, so the least code favours positive entries.
class ComponentSearch {
 public:
  ComponentSearch(const Digraph& m, const std::vector<Entry>& colour,
                  const std::vector<std::size_t>& verts)
      : m_(m), colour_(colour), verts_(verts), sign_(m.order(), 0) {}

  void run() { dfs(0, false); }

  std::vector<Entry> best;
  std::vector<std::size_t> best_order;
  std::vector<int> best_signs;

 private:
  int block(std::size_t v, std::size_t k, std::vector<Entry>& out) const {
    out.clear();
    out.push_back(colour_[v]);
    out.push_back(flip(m_(v, v)));
    int s = 0;
    for (std::size_t j = 0; j < k && s == 0; ++j) {
      const std::size_t u = order_[j];
      const Entry x = m_(v, u) != 0 ? m_(v, u) : m_(u, v);
      if (x != 0) s = sign(x) * sign_[u];
    }
    if (s == 0) s = 1;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t u = order_[j];
      const int t = s * sign_[u];
      out.push_back(t > 0 ? flip(m_(v, u)) : m_(v, u));
      out.push_back(t > 0 ? flip(m_(u, v)) : m_(u, v));
    }
    return s;
  }

  bool dfs(std::size_t k, bool less) {
    if (k == verts_.size()) {
      if (!has_best_ || less) {
        best = code_;
        best_order = order_;
        best_signs.clear();
        for (std::size_t v : order_) best_signs.push_back(sign_[v]);
        has_best_ = true;
        return true;
      }
      return false;
    }
    std::vector<std::size_t> cand;
    std::vector<int> signs;
    std::vector<Entry> tmp;
    std::vector<Entry> least;
    for (std::size_t v : verts_) {
      if (sign_[v] != 0) continue;
      if (k > 0) {
        bool near = false;
        for (std::size_t j = 0; j < k && !near; ++j) near = touches(m_, v, order_[j]);
        if (!near) continue;
      }
      const int s = block(v, k, tmp);
      if (cand.empty() || tmp < least) {
        least = tmp;
        cand.clear();
        signs.clear();
      } else if (tmp != least) {
        continue;
      }
      cand.push_back(v);
      signs.push_back(s);
    }
    if (cand.empty()) return false;
    if (has_best_ && !less) {
      const std::size_t off = k * (k + 1);
      const auto first = best.begin() + static_cast<std::ptrdiff_t>(off);
      const int cmp = std::lexicographical_compare(least.begin(), least.end(), first,
                                                   first + static_cast<std::ptrdiff_t>(least.size()))
                          ? -1
                          : (std::equal(least.begin(), least.end(), first) ? 0 : 1);
      if (cmp > 0) return false;
      if (cmp < 0) less = true;
    }
    bool updated = false;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      const std::size_t v = cand[c];
      sign_[v] = signs[c];
      order_.push_back(v);
      code_.insert(code_.end(), least.begin(), least.end());
      if (dfs(k + 1, less)) {
        updated = true;
        less = false;
      }
      code_.resize(code_.size() - least.size());
      order_.pop_back();
      sign_[v] = 0;
    }
    return updated;
  }

  const Digraph& m_;
  const std::vector<Entry>& colour_;
  const std::vector<std::size_t>& verts_;
  std::vector<int> sign_;
  std::vector<std::size_t> order_;
  std::vector<Entry> code_;
  bool has_best_ = false;
};

struct SideResult {
  std::vector<Entry> code;
  SignedPermutation witness;
};

SideResult canonicalize_side(const Digraph& m, int negate) {
  const std::size_t n = m.order();
  const std::vector<Entry> colour = refine_colours(m);
  struct Part {
    std::vector<Entry> code;
    std::vector<std::size_t> order;
    std::vector<int> signs;
  };
  std::vector<Part> parts;
  for (const auto& comp : weak_components(m)) {
    ComponentSearch search(m, colour, comp);
    search.run();
    parts.push_back({std::move(search.best), std::move(search.best_order),
                     std::move(search.best_signs)});
  }
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
    return a.code < b.code;
  });
  SideResult out;
  out.witness.perm.resize(n);
  out.witness.signs.resize(n);
  out.witness.negate = negate;
  out.code.push_back(static_cast<Entry>(parts.size()));
  for (const auto& p : parts) out.code.push_back(static_cast<Entry>(p.order.size()));
  std::size_t pos = 0;
  for (const auto& p : parts) {
    out.code.insert(out.code.end(), p.code.begin(), p.code.end());
    for (std::size_t k = 0; k < p.order.size(); ++k) {
      out.witness.perm[p.order[k]] = pos + k;
      out.witness.signs[p.order[k]] = p.signs[k];
    }
    pos += p.order.size();
  }
  return out;
}

}  // namespace

CanonicalForm canonicalize(const Digraph& g) {
  SideResult plus = canonicalize_side(g, 1);
  SideResult minus = canonicalize_side(negated(g), -1);
  SideResult& best = minus.code < plus.code ? minus : plus;
  CanonicalForm out{CanonicalKey{g.order(), std::move(best.code)}, apply(g, best.witness),
                    std::move(best.witness)};
  return out;
}

CanonicalKey canonical_form(const Digraph& g) { return canonicalize(g).key; }

CanonicalKey canonical_form(const SurdMatrix& s) { return canonical_form(s.squares()); }

std::optional<SignedPermutation> find_equivalence(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  const CanonicalForm ca = canonicalize(a);
  const CanonicalForm cb = canonicalize(b);
  if (ca.key != cb.key) return std::nullopt;
  return compose(inverse(cb.witness), ca.witness);
}

bool are_equivalent(const Digraph& a, const Digraph& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

bool are_equivalent(const SurdMatrix& a, const SurdMatrix& b) {
  return are_equivalent(a.squares(), b.squares());
}

bool equivalent_to_transpose(const Digraph& g) { return are_equivalent(g, transpose(g)); }

namespace {

void extend_paths(const Digraph& g, std::size_t max_len, bool with_charges,
                  std::vector<std::size_t>& path, std::vector<char>& on_path,
                  std::set<std::vector<Entry>>& out) {
  if (path.size() >= 2 || (with_charges && path.size() == 1)) {
    std::vector<Entry> seq;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (with_charges) seq.push_back(magnitude(g.charge(path[k])));
      if (k + 1 < path.size()) seq.push_back(magnitude(g(path[k], path[k + 1])));
    }
    out.insert(std::move(seq));
  }
  if (path.size() == max_len) return;
  const std::size_t last = path.back();
  for (std::size_t w = 0; w < g.order(); ++w) {
    if (on_path[w] || g(last, w) == 0) continue;
    bool induced = true;
    for (std::size_t k = 0; k + 1 < path.size() && induced; ++k)
      induced = !touches(g, path[k], w);
    if (!induced) continue;
    path.push_back(w);
    on_path[w] = 1;
    extend_paths(g, max_len, with_charges, path, on_path, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

}  // namespace

std::set<std::vector<Entry>> weight_modulus_sequences(const Digraph& g,
                                                      std::size_t max_len,
                                                      bool with_charges) {
  if (max_len < 1) throw std::invalid_argument("weight_modulus_sequences: max_len < 1");
  std::set<std::vector<Entry>> out;
  std::vector<std::size_t> path;
  std::vector<char> on_path(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    path.assign(1, v);
    on_path[v] = 1;
    extend_paths(g, max_len, with_charges, path, on_path, out);
    on_path[v] = 0;
  }
  return out;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Digraph& small, const Digraph& big) : s_(small), b_(big) {
    const std::size_t n = small.order();
    anchor_.assign(n, kNone);
    for (const auto& comp : weak_components(small)) {
      // Breadth-first order inside each component.
      std::vector<char> seen(n, 0);
      std::deque<std::size_t> queue{comp.front()};
      seen[comp.front()] = 1;
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        order_.push_back(u);
        for (std::size_t v : comp)
          if (!seen[v] && touches(small, u, v)) {
            seen[v] = 1;
            anchor_[v] = u;
            queue.push_back(v);
          }
      }
    }
  }

  std::optional<Embedding> run() {
    if (s_.order() > b_.order()) return std::nullopt;
    for (int eps : {1, -1}) {
      result_.image.assign(s_.order(), kNone);
      result_.signs.assign(s_.order(), 0);
      result_.negate = eps;
      used_.assign(b_.order(), 0);
      if (assign(0)) return result_;
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t t) {
    if (t == order_.size()) return true;
    const std::size_t u = order_[t];
    const int eps = result_.negate;
    for (std::size_t x = 0; x < b_.order(); ++x) {
      if (used_[x] || s_(u, u) != eps * b_(x, x)) continue;
      int s = 1;
      if (anchor_[u] != kNone) {
        const std::size_t w = anchor_[u];
        const bool forward = s_(u, w) != 0;
        const Entry sv = forward ? s_(u, w) : s_(w, u);
        const Entry bv = forward ? b_(x, result_.image[w]) : b_(result_.image[w], x);
        if (bv == 0) continue;
        s = eps * result_.signs[w] * sign(sv) * sign(bv);
      }
      bool ok = true;
      for (std::size_t k = 0; k < t && ok; ++k) {
        const std::size_t w = order_[k];
        const Entry f = eps * s * result_.signs[w];
        ok = s_(u, w) == f * b_(x, result_.image[w]) &&
             s_(w, u) == f * b_(result_.image[w], x);
      }
      if (!ok) continue;
      used_[x] = 1;
      result_.image[u] = x;
      result_.signs[u] = s;
      if (assign(t + 1)) return true;
      used_[x] = 0;
      result_.image[u] = kNone;
      result_.signs[u] = 0;
    }
    return false;
  }

  const Digraph& s_;
  const Digraph& b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> anchor_;
  std::vector<char> used_;
  Embedding result_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Digraph& small, const Digraph& big) {
  return EmbeddingSearch(small, big).run();
}

}  // namespace cyclomat
