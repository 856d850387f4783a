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

#include "cyclomat/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cyclomat {
namespace {

enum Parity { kAny, kOdd, kEven };

struct Info {
  Family family;
  std::string_view ident;
  std::string_view prefix;  // display name for fixed families
  std::string_view suffix;
  std::size_t fixed;        // 0 for parametric families
  std::size_t min_n;
  Parity parity;
  bool tilde;
};

// clang-format off
constexpr Info kInfo[] = {
  {Family::A,             "A",             "A",     "",    0, 1, kAny,  false},
  {Family::Atilde,        "Atilde",        "A~",    "",    0, 2, kAny,  true},
  {Family::D,             "D",             "D",     "",    0, 4, kAny,  false},
  {Family::Dtilde,        "Dtilde",        "D~",    "",    0, 4, kAny,  true},
  {Family::E6,            "E6",            "E6",    "",    6, 6, kAny,  false},
  {Family::E7,            "E7",            "E7",    "",    7, 7, kAny,  false},
  {Family::E8,            "E8",            "E8",    "",    8, 8, kAny,  false},
  {Family::E6tilde,       "E6tilde",       "E~6",   "",    6, 6, kAny,  true},
  {Family::E7tilde,       "E7tilde",       "E~7",   "",    7, 7, kAny,  true},
  {Family::E8tilde,       "E8tilde",       "E~8",   "",    8, 8, kAny,  true},
  {Family::A1tilde,       "A1tilde",       "A~1",   "",    1, 1, kAny,  true},
  {Family::A1tilde_prime, "A1tilde_prime", "A~1'",  "",    1, 1, kAny,  true},
  {Family::O4prime,       "O4prime",       "O4'",   "",    4, 4, kAny,  false},
  {Family::S8minus,       "S8minus",       "S8-",   "",    8, 8, kAny,  false},
  {Family::L,             "L",             "L",     "",    0, 4, kEven, false},
  {Family::Lprime,        "Lprime",        "L",     "'",   0, 4, kEven, false},
  {Family::Lplus,         "Lplus",         "L",     "+",   0, 3, kOdd,  false},
  {Family::A2pm,          "A2pm",          "A2pm",  "",    2, 2, kAny,  false},
  {Family::O4pm,          "O4pm",          "O4pm",  "",    4, 4, kAny,  false},
  {Family::Btilde,        "Btilde",        "B~",    "",    0, 3, kAny,  true},
  {Family::Ctilde,        "Ctilde",        "C~",    "",    0, 2, kAny,  true},
  {Family::Ctilde_prime,  "Ctilde_prime",  "C~",    "'",   0, 2, kAny,  true},
  {Family::F4tilde,       "F4tilde",       "F~4",   "",    4, 4, kAny,  true},
  {Family::G2tilde,       "G2tilde",       "G~2",   "",    2, 2, kAny,  true},
  {Family::B,             "B",             "B",     "",    0, 2, kAny,  false},
  {Family::C,             "C",             "C",     "",    0, 3, kAny,  false},
  {Family::F4,            "F4",            "F4",    "",    4, 4, kAny,  false},
  {Family::G2,            "G2",            "G2",    "",    2, 2, kAny,  false},
  {Family::I,             "I",             "I",     "",    0, 3, kAny,  false},
  {Family::J,             "J",             "J",     "",    0, 2, kAny,  false},
  {Family::M,             "M",             "M",     "",    0, 2, kAny,  false},
  {Family::Pplus,         "Pplus",         "P",     "+",   0, 1, kAny,  false},
  {Family::O4doubleprime, "O4doubleprime", "O4''",  "",    4, 4, kAny,  false},
  {Family::B2pm,          "B2pm",          "B2pm",  "",    2, 2, kAny,  false},
  {Family::A2G_pm,        "A2G_pm",        "A2Gpm", "",    2, 2, kAny,  false},
  {Family::O4G_prime,     "O4G_prime",     "O4G'",  "",    4, 4, kAny,  false},
  {Family::O4G_pm,        "O4G_pm",        "O4Gpm", "",    4, 4, kAny,  false},
  {Family::S8G_minus,     "S8G_minus",     "S8G-",  "",    8, 8, kAny,  false},
  {Family::LG,            "LG",            "LG",    "",    0, 4, kEven, false},
  {Family::LGplus,        "LGplus",        "LG",    "+",   0, 3, kOdd,  false},
};
// clang-format on

const Info& info(Family f) {
  for (const Info& i : kInfo)
    if (i.family == f) return i;
  throw std::logic_error("unknown family");
}

// Families whose members (past the listed size) are not equivalent to their
// transposes; catalog() lists both orientations for these.
bool transpose_distinct(Family f, std::size_t n) {
  switch (f) {
    case Family::M:
    case Family::Btilde:
    case Family::Ctilde:
    case Family::F4tilde:
    case Family::G2tilde:
    case Family::Lplus:
      return true;
    case Family::L:
      return n >= 6;
    default:
      return false;
  }
}

Digraph path(std::size_t n) {
  Digraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_pair(i, i + 1, 1, 1);
  return g;
}

Digraph cycle(std::size_t n) {
  Digraph g = path(n);
  g.set_pair(n - 1, 0, 1, 1);
  return g;
}

// Arms of lengths (a, b, c) around a centre: chain made of arm b (reversed),
// the centre and arm c, then arm a hanging from the centre.
Digraph star3(std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t chain = b + 1 + c;
  Digraph g(chain + a);
  for (std::size_t i = 0; i + 1 < chain; ++i) g.set_pair(i, i + 1, 1, 1);
  std::size_t prev = b;
  for (std::size_t v = chain; v < chain + a; ++v) {
    g.set_pair(prev, v, 1, 1);
    prev = v;
  }
  return g;
}

// Ladder on T_k = k and B_k = r + k, inside a matrix of order `n`.
Digraph ladder(std::size_t r, std::size_t n) {
  Digraph g(n);
  for (std::size_t k = 0; k + 1 < r; ++k) {
    g.set_pair(k, k + 1, 1, 1);
    g.set_pair(r + k, r + k + 1, -1, -1);
    g.set_pair(r + k, k + 1, -1, -1);
    g.set_pair(k, r + k + 1, 1, 1);
  }
  return g;
}

Digraph make_l(std::size_t n, bool prime) {
  const std::size_t r = (n - 2) / 2;
  const std::size_t left = 2 * r, right = 2 * r + 1;
  const std::size_t top = r - 1, bottom = 2 * r - 1;
  Digraph g = ladder(r, n);
  g.set_pair(left, r, 2, 1);
  g.set_pair(left, 0, 2, 1);
  if (prime) {
    g.set_pair(bottom, right, -2, -1);
    g.set_pair(top, right, 2, 1);
  } else {
    g.set_pair(bottom, right, -1, -2);
    g.set_pair(top, right, 1, 2);
  }
  return g;
}

Digraph make_lplus(std::size_t n) {
  const std::size_t r = (n - 1) / 2;
  const std::size_t left = 2 * r, top = r - 1, bottom = 2 * r - 1;
  Digraph g = ladder(r, n);
  g.set_pair(left, r, 1, 2);
  g.set_pair(left, 0, 1, 2);
  g.set(top, top, 1);
  g.set(bottom, bottom, 1);
  g.set_pair(bottom, top, -1, -1);
  return g;
}

Digraph make_s8() {
  // i j k l m n o p
  Digraph g(8);
  g.set_pair(0, 1, 2, 1);
  g.set_pair(2, 3, 2, 1);
  g.set_pair(4, 5, -2, -1);
  g.set_pair(6, 7, 2, 1);
  g.set_pair(1, 3, -1, -1);
  g.set_pair(2, 6, -1, -1);
  for (auto [a, b] : {std::pair{0, 2}, {0, 4}, {1, 5}, {3, 7}, {4, 6}, {5, 7}})
    g.set_pair(a, b, 1, 1);
  return g;
}

Digraph generate_plain(const FamilyId& id) {
  const std::size_t n = id.n;
  switch (id.family) {
    case Family::A:
      return path(n);
    case Family::Atilde:
      return cycle(n + 1);
    case Family::D: {
      Digraph g(n);
      g.set_pair(0, 2, 1, 1);
      g.set_pair(1, 2, 1, 1);
      for (std::size_t i = 2; i + 1 < n; ++i) g.set_pair(i, i + 1, 1, 1);
      return g;
    }
    case Family::Dtilde: {
      Digraph g(n + 1);
      g.set_pair(0, 2, 1, 1);
      g.set_pair(1, 2, 1, 1);
      for (std::size_t i = 2; i + 2 < n; ++i) g.set_pair(i, i + 1, 1, 1);
      g.set_pair(n - 1, n - 2, 1, 1);
      g.set_pair(n, n - 2, 1, 1);
      return g;
    }
    case Family::E6:
      return star3(1, 2, 2);
    case Family::E7:
      return star3(1, 2, 3);
    case Family::E8:
      return star3(1, 2, 4);
    case Family::E6tilde:
      return star3(2, 2, 2);
    case Family::E7tilde:
      return star3(1, 3, 3);
    case Family::E8tilde:
      return star3(1, 2, 5);
    case Family::A1tilde:
      return Digraph{{0, 2}, {2, 0}};
    case Family::A1tilde_prime:
      return Digraph{{0, 1}, {4, 0}};
    case Family::O4prime:
      return Digraph{{0, 1, -1, 0}, {3, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 3, 0}};
    case Family::S8minus:
      return make_s8();
    case Family::L:
      return make_l(n, false);
    case Family::Lprime:
      return make_l(n, true);
    case Family::Lplus:
      return make_lplus(n);
    case Family::A2pm:
      return Digraph{{-1, 1}, {3, 1}};
    case Family::O4pm:
      return Digraph{{1, 2, 1, 0}, {1, -1, 0, -1}, {1, 0, -1, 2}, {0, -1, 1, 1}};
    case Family::Btilde: {
      Digraph g(n + 1);
      for (std::size_t i = 0; i + 2 < n; ++i) g.set_pair(i, i + 1, 1, 1);
      g.set_pair(n - 3, n - 2, 2, 1);
      g.set_pair(n - 1, 0, 1, 1);
      g.set_pair(n, 0, 1, 1);
      return g;
    }
    case Family::Ctilde:
    case Family::Ctilde_prime: {
      Digraph g = path(n + 1);
      g.set_pair(0, 1, 1, 2);
      if (id.family == Family::Ctilde)
        g.set_pair(n - 1, n, 2, 1);
      else
        g.set_pair(n - 1, n, 1, 2);
      return g;
    }
    case Family::F4tilde: {
      Digraph g = path(5);
      g.set_pair(2, 3, 1, 2);
      return g;
    }
    case Family::G2tilde:
      return Digraph{{0, 1, 0}, {1, 0, 1}, {0, 3, 0}};
    case Family::B:
    case Family::C: {
      Digraph g = path(n);
      g.set_pair(0, 1, 1, 2);
      return id.family == Family::B ? g : transpose(g);
    }
    case Family::F4: {
      Digraph g = path(4);
      g.set_pair(1, 2, 1, 2);
      return g;
    }
    case Family::G2:
      return Digraph{{0, 1}, {3, 0}};
    case Family::I: {
      Digraph g(n);
      for (std::size_t i = 0; i + 3 < n; ++i) g.set_pair(i, i + 1, 1, 1);
      g.set_pair(n - 2, n - 3, 1, 1);
      g.set_pair(n - 1, n - 3, 1, 1);
      g.set(0, 0, 1);
      return g;
    }
    case Family::J: {
      Digraph g = path(n);
      g.set(0, 0, 1);
      g.set(n - 1, n - 1, 1);
      return g;
    }
    case Family::M: {
      Digraph g = path(n);
      g.set_pair(0, 1, 1, 2);
      g.set(n - 1, n - 1, 1);
      return g;
    }
    case Family::Pplus: {
      Digraph g = path(n);
      g.set(0, 0, 1);
      return g;
    }
    case Family::O4doubleprime:
      return Digraph{{0, 1, -1, 0}, {2, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 2, 0}};
    case Family::B2pm:
      return Digraph{{1, 1}, {2, -1}};
    default:
      throw std::invalid_argument("generate: surd families have no integer matrix");
  }
}

Digraph surd_ladder_ends(std::size_t n, bool plus) {
  const std::size_t r = plus ? (n - 1) / 2 : (n - 2) / 2;
  const std::size_t left = 2 * r, top = r - 1, bottom = 2 * r - 1;
  Digraph t = ladder(r, n);
  t.set_pair(left, r, 2, 2);
  t.set_pair(left, 0, 2, 2);
  if (plus) {
    t.set(top, top, 1);
    t.set(bottom, bottom, 1);
    t.set_pair(bottom, top, -1, -1);
  } else {
    t.set_pair(bottom, left + 1, -2, -2);
    t.set_pair(top, left + 1, 2, 2);
  }
  return t;
}

}  // namespace

FamilyId FamilyId::Of(Family f, std::size_t n, bool transposed) {
  const Info& i = info(f);
  return FamilyId{f, n == 0 && i.fixed ? i.fixed : n, transposed};
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const Info& i : kInfo) out.push_back(i.family);
    return out;
  }();
  return v;
}

std::string_view identifier(Family f) { return info(f).ident; }

bool is_surd_family(Family f) {
  switch (f) {
    case Family::A2G_pm:
    case Family::O4G_prime:
    case Family::O4G_pm:
    case Family::S8G_minus:
    case Family::LG:
    case Family::LGplus:
      return true;
    default:
      return false;
  }
}

bool is_valid(const FamilyId& id) {
  const Info& i = info(id.family);
  if (i.fixed) return id.n == i.fixed;
  if (id.n < i.min_n) return false;
  if (i.parity == kOdd && id.n % 2 == 0) return false;
  if (i.parity == kEven && id.n % 2 == 1) return false;
  return true;
}

std::size_t order(const FamilyId& id) { return info(id.family).tilde ? id.n + 1 : id.n; }

Digraph generate(const FamilyId& id) {
  if (!is_valid(id)) throw std::invalid_argument("generate: invalid family parameter");
  if (is_surd_family(id.family))
    throw std::invalid_argument("generate: surd families have no integer matrix");
  Digraph g = generate_plain(id);
  return id.transposed ? transpose(g) : g;
}

SurdMatrix generate_surd(const FamilyId& id) {
  if (!is_surd_family(id.family))
    throw std::invalid_argument("generate_surd: not a surd family");
  if (!is_valid(id)) throw std::invalid_argument("generate_surd: invalid family parameter");
  switch (id.family) {
    case Family::A2G_pm:
      return SurdMatrix::FromSquares(Digraph{{-1, 3}, {3, 1}});
    case Family::O4G_prime:
      return SurdMatrix::FromSquares(
          Digraph{{0, 3, -1, 0}, {3, 0, 0, 1}, {-1, 0, 0, 3}, {0, 1, 3, 0}});
    case Family::O4G_pm:
      return SurdMatrix::FromSquares(
          Digraph{{1, 2, 1, 0}, {2, -1, 0, -1}, {1, 0, -1, 2}, {0, -1, 2, 1}});
    case Family::S8G_minus: {
      Digraph t(8);
      t.set_pair(0, 1, 2, 2);
      t.set_pair(2, 3, 2, 2);
      t.set_pair(4, 5, -2, -2);
      t.set_pair(6, 7, 2, 2);
      t.set_pair(1, 3, -1, -1);
      t.set_pair(2, 6, -1, -1);
      for (auto [a, b] : {std::pair{0, 2}, {0, 4}, {1, 5}, {3, 7}, {4, 6}, {5, 7}})
        t.set_pair(a, b, 1, 1);
      return SurdMatrix::FromSquares(t);
    }
    case Family::LG:
      return SurdMatrix::FromSquares(surd_ladder_ends(id.n, false));
    case Family::LGplus:
      return SurdMatrix::FromSquares(surd_ladder_ends(id.n, true));
    default:
      throw std::logic_error("unreachable");
  }
}

std::vector<std::pair<FamilyId, Digraph>> catalog(std::size_t max_n) {
  std::vector<std::pair<FamilyId, Digraph>> out;
  for (const Info& i : kInfo) {
    if (is_surd_family(i.family)) continue;
    const std::size_t lo = i.fixed ? i.fixed : i.min_n;
    const std::size_t hi = i.fixed ? i.fixed : max_n;
    for (std::size_t n = lo; n <= hi; ++n) {
      FamilyId id{i.family, n, false};
      if (!is_valid(id) || order(id) > max_n) continue;
      out.emplace_back(id, generate(id));
      if (transpose_distinct(i.family, n)) {
        id.transposed = true;
        out.emplace_back(id, generate(id));
      }
    }
  }
  return out;
}

std::string display_name(const FamilyId& id) {
  const Info& i = info(id.family);
  std::string s(i.prefix);
  if (!i.fixed) s += std::to_string(id.n);
  s += i.suffix;
  if (id.transposed) s += "^T";
  return s;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool ends_with(const std::string& s, std::string_view tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

FamilyId parse_family(std::string_view text, std::optional<std::size_t> n) {
  std::string s = lower(text);
  bool transposed = false;
  if (ends_with(s, "^t")) {
    transposed = true;
    s.resize(s.size() - 2);
  }
  auto finish = [&](FamilyId id) {
    if (!is_valid(id))
      throw std::invalid_argument("family " + std::string(text) + ": parameter out of range");
    return id;
  };
  for (const Info& i : kInfo) {
    if (s != lower(i.ident)) continue;
    if (i.fixed) {
      if (n && *n != i.fixed)
        throw std::invalid_argument("family " + std::string(text) + " has fixed size");
      return finish(FamilyId{i.family, i.fixed, transposed});
    }
    if (!n) throw std::invalid_argument("family " + std::string(text) + " needs a size");
    return finish(FamilyId{i.family, *n, transposed});
  }
  for (const Info& i : kInfo)
    if (i.fixed && s == lower(i.prefix)) return finish(FamilyId{i.family, i.fixed, transposed});
  for (const Info& i : kInfo) {
    if (i.fixed) continue;
    const std::string pre = lower(i.prefix), suf = lower(i.suffix);
    if (s.size() <= pre.size() + suf.size()) continue;
    if (s.compare(0, pre.size(), pre) != 0 || !ends_with(s, suf)) continue;
    const std::string mid = s.substr(pre.size(), s.size() - pre.size() - suf.size());
    if (!std::all_of(mid.begin(), mid.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    if (mid.size() > 6) continue;
    const std::size_t k = std::stoul(mid);
    if (n && *n != k)
      throw std::invalid_argument("family " + std::string(text) + ": conflicting size");
    return finish(FamilyId{i.family, k, transposed});
  }
  throw std::invalid_argument("unknown family name: " + std::string(text));
}

}  // namespace cyclomat
