#include "toric/motzkin.hpp"

#include <map>
#include <stdexcept>

namespace toric {

namespace {

int level_delta(Step s) {
  switch (s) {
    case Step::up: return 1;
    case Step::down: return -1;
    default: return 0;
  }
}

}  // namespace

void validate_path(const MotzkinPath& p) {
  int level = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (p[q] == Step::blue && level == 0)
      throw std::invalid_argument("blue horizontal step at level 0 (position " +
                                  std::to_string(q + 1) + ")");
    level += level_delta(p[q]);
    if (level < 0)
      throw std::invalid_argument("path drops below level 0 at position " +
                                  std::to_string(q + 1));
  }
  if (level != 0)
    throw std::invalid_argument("path ends at level " + std::to_string(level));
}

std::string path_str(const MotzkinPath& p) {
  std::string s;
  for (Step st : p) {
    switch (st) {
      case Step::up: s += 'U'; break;
      case Step::down: s += 'D'; break;
      case Step::red: s += 'r'; break;
      case Step::blue: s += 'b'; break;
    }
  }
  return s;
}

MotzkinPath parse_path(const std::string& s) {
  MotzkinPath p;
  for (char ch : s) {
    switch (ch) {
      case 'U': p.push_back(Step::up); break;
      case 'D': p.push_back(Step::down); break;
      case 'r': p.push_back(Step::red); break;
      case 'b': p.push_back(Step::blue); break;
      default:
        throw std::invalid_argument(std::string("unexpected step character '") +
                                    ch + "'");
    }
  }
  validate_path(p);
  return p;
}

std::vector<MotzkinPath> enumerate_motzkin(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_motzkin: n must be >= 0");
  std::vector<MotzkinPath> out;
  MotzkinPath cur;
  auto walk = [&](auto&& self, int level) -> void {
    int rest = n - static_cast<int>(cur.size());
    if (rest < level) return;  // cannot return to level 0
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (Step s : {Step::up, Step::down, Step::red, Step::blue}) {
      if (s == Step::down && level == 0) continue;
      if (s == Step::blue && level == 0) continue;
      cur.push_back(s);
      self(self, level + level_delta(s));
      cur.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

int s_statistic(const MotzkinPath& p) {
  int s = 0;
  for (std::size_t q = 1; q < p.size(); ++q) {
    bool first = p[q - 1] == Step::up || p[q - 1] == Step::blue;
    bool second = p[q] == Step::red || p[q] == Step::down;
    if (first && second) ++s;
  }
  return s;
}

Polynomial motzkin_g(int n) {
  if (n < 0) throw std::invalid_argument("motzkin_g: n must be >= 0");
  std::vector<Int> dist;
  auto bump = [&](int s) {
    if (static_cast<int>(dist.size()) <= s) dist.resize(s + 1, 0);
    ++dist[s];
  };
  // DFS over (position, level, previous step); no paths stored.
  auto walk = [&](auto&& self, int pos, int level, Step prev, int s) -> void {
    if (n - pos < level) return;
    if (pos == n) {
      bump(s);
      return;
    }
    bool prev_opens = pos > 0 && (prev == Step::up || prev == Step::blue);
    for (Step st : {Step::up, Step::down, Step::red, Step::blue}) {
      if ((st == Step::down || st == Step::blue) && level == 0) continue;
      bool pair = prev_opens && (st == Step::red || st == Step::down);
      self(self, pos + 1, level + level_delta(st), st, s + (pair ? 1 : 0));
    }
  };
  walk(walk, 0, 0, Step::red, 0);
  return Polynomial(dist);
}

Polynomial g_recursion(int k) {
  if (k < 0) throw std::invalid_argument("g_recursion: k must be >= 0");
  std::vector<Polynomial> g{Polynomial(1)};
  Polynomial omt({1, -1});  // 1 - t
  for (int m = 1; m <= k; ++m) {
    Polynomial v = pow(omt, m);
    for (int i = 1; i <= m; ++i)
      v += g[i - 1] * (g[m - i] - pow(omt, m + 1 - i));
    g.push_back(std::move(v));
  }
  return g[k];
}

Polynomial P_recursion(int k) {
  if (k < 1) throw std::invalid_argument("P_recursion: k must be >= 1");
  std::vector<Polynomial> P{Polynomial(), Polynomial(1)};  // P[0] unused
  Polynomial omt({1, -1});
  Polynomial t = Polynomial::x();
  for (int m = 2; m <= k; ++m) {
    Polynomial v = pow(omt, m - 1);
    for (int i = 1; i <= m - 1; ++i)
      v += pow(omt, i) * P[m - i] + t * P[i] * P[m - i];
    P.push_back(std::move(v));
  }
  return P[k];
}

Polynomial morgan_voyce(int n, MorganVoyce variant) {
  if (n < 0) throw std::invalid_argument("morgan_voyce: n must be >= 0");
  int c = variant == MorganVoyce::b ? 2 : -2;
  Polynomial prev(1), cur({c / 2, 1});  // b1 = x+1, p1 = x-1
  if (n == 0) return prev;
  Polynomial step({c, 1});  // x+2 or x-2
  for (int m = 1; m < n; ++m) {
    Polynomial next = step * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial weighted_moment(int n, const MomentSpec& spec) {
  if (n < 0) throw std::invalid_argument("weighted_moment: n must be >= 0");
  int top = n / 2;
  if (static_cast<int>(spec.b.size()) <= top ||
      static_cast<int>(spec.lambda.size()) <= top)
    throw std::invalid_argument("weight sequences must cover levels 0.." +
                                std::to_string(top));
  // state[l]: total weight of length-q prefixes ending at level l. Levels
  // above n/2 cannot return to 0 in time and are pruned.
  std::vector<Polynomial> state(top + 1);
  state[0] = Polynomial(1);
  for (int q = 0; q < n; ++q) {
    std::vector<Polynomial> next(top + 1);
    for (int l = 0; l <= top; ++l) {
      if (l + 1 <= top) next[l + 1] += state[l];
      next[l] += state[l] * spec.b[l];
      if (l >= 1) next[l - 1] += state[l] * spec.lambda[l];
    }
    state = std::move(next);
  }
  return state[0];
}

MomentSpec catalan_moment_spec(int max_level) {
  MomentSpec spec;
  for (int l = 0; l <= max_level; ++l) {
    spec.b.emplace_back(l == 0 ? 1 : 2);
    spec.lambda.emplace_back(1);
  }
  return spec;
}

Int orthogonality_check(int k, int l) {
  Polynomial prod = morgan_voyce(k, MorganVoyce::p) *
                    morgan_voyce(l, MorganVoyce::p);
  MomentSpec spec = catalan_moment_spec((k + l) / 2 + 1);
  Int value = 0;
  for (int n = 0; n <= k + l; ++n)
    value += prod.coeff(n) * weighted_moment(n, spec).coeff(0);
  return value;
}

}  // namespace toric
