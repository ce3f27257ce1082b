#include "tropic/action.hpp"

#include <map>
#include <mutex>

namespace tropic {

AffineMap AffineMap::identity(int n) {
  AffineMap m;
  m.A = RatMat::identity(n);
  m.A_inv = RatMat::identity(n);
  m.t.assign(n, Rat(0));
  m.t_inv.assign(n, Rat(0));
  return m;
}

AffineMap AffineMap::linear(const IntMat& M) {
  return make(to_rat(M), RatVec(M.rows, Rat(0)));
}

AffineMap AffineMap::make(const RatMat& A, const RatVec& t) {
  AffineMap m;
  m.A = A;
  m.t = t;
  int n = A.rows;
  // invert by solving A X = I column-wise
  m.A_inv = RatMat(n, n);
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    auto sol = solve_affine(A, e);
    if (!sol || !sol->kernel_basis.empty())
      throw std::invalid_argument("AffineMap: matrix not invertible");
    for (int i = 0; i < n; ++i) m.A_inv(i, j) = sol->particular[i];
  }
  m.t_inv = mul(m.A_inv, t);
  for (auto& x : m.t_inv) x = -x;
  return m;
}

RatVec AffineMap::apply(const RatVec& x) const {
  RatVec y = mul(A, x);
  for (int i = 0; i < int(y.size()); ++i) y[i] += t[i];
  return y;
}

Poly AffineMap::apply(const Poly& p) const { return transform(p, A_inv, t); }

AffineMap AffineMap::compose(const AffineMap& g) const {
  AffineMap m;
  m.A = mul(A, g.A);
  m.t = mul(A, g.t);
  for (int i = 0; i < int(t.size()); ++i) m.t[i] += t[i];
  m.A_inv = mul(g.A_inv, A_inv);
  m.t_inv = mul(g.A_inv, t_inv);
  for (int i = 0; i < int(t.size()); ++i) m.t_inv[i] += g.t_inv[i];
  return m;
}

AffineMap AffineMap::inverse() const {
  AffineMap m;
  m.A = A_inv;
  m.t = t_inv;
  m.A_inv = A;
  m.t_inv = t;
  return m;
}

bool AffineMap::is_identity() const {
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A(i, j) != Rat(i == j ? 1 : 0)) return false;
  return is_zero(t);
}

namespace {

std::string action_key(const GroupAction& a, int bound) {
  std::string key = std::to_string(a.ambient) + "b" + std::to_string(bound);
  for (auto& g : a.generators) {
    for (auto& x : g.A.a) key += rat_str(x) + ",";
    for (auto& x : g.t) key += rat_str(x) + ",";
    key += ";";
  }
  return key;
}

}  // namespace

static WordEnum enumerate_words_impl(const GroupAction& a, int bound);

WordEnum enumerate_words(const GroupAction& a, int bound) {
  static std::map<std::string, WordEnum> cache;
  static std::mutex mu;
  std::string key = action_key(a, bound);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  WordEnum we = enumerate_words_impl(a, bound);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() > 64) cache.clear();
    cache.emplace(std::move(key), we);
  }
  return we;
}

static WordEnum enumerate_words_impl(const GroupAction& a, int bound) {
  WordEnum we;
  int n = a.ambient;
  we.elements.push_back(AffineMap::identity(n));
  we.length.push_back(0);
  std::vector<AffineMap> steps;
  for (auto& g : a.generators) {
    steps.push_back(g);
    AffineMap gi = g.inverse();
    bool self_inverse = (gi == g);
    if (!self_inverse) steps.push_back(gi);
  }
  size_t level_start = 0;
  bool new_at_last = false;
  for (int len = 1; len <= bound; ++len) {
    size_t level_end = we.elements.size();
    bool found = false;
    for (size_t i = level_start; i < level_end; ++i) {
      for (auto& s : steps) {
        AffineMap h = s.compose(we.elements[i]);
        bool dup = false;
        for (auto& e : we.elements)
          if (e == h) {
            dup = true;
            break;
          }
        if (!dup) {
          we.elements.push_back(h);
          we.length.push_back(len);
          found = true;
        }
      }
    }
    level_start = level_end;
    if (!found) {
      we.closed = true;
      return we;
    }
    new_at_last = (len == bound);
  }
  we.closed = !new_at_last;
  return we;
}

bool fixes_pointwise(const AffineMap& g, const PolyInfo& cell_info) {
  RatVec img = g.apply(cell_info.relint);
  if (img != cell_info.relint) return false;
  for (auto& v : cell_info.span) {
    RatVec av = mul(g.A, v);
    if (av != v) return false;
  }
  return true;
}

std::vector<AffineMap> stabilizer(const Poly& cell, const GroupAction& a) {
  PolyInfo info = analyze(cell);
  if (info.empty) throw std::invalid_argument("stabilizer: empty cell");
  int bound = a.effective_bound();
  WordEnum we = enumerate_words(a, bound);
  std::vector<AffineMap> stab;
  for (size_t i = 0; i < we.elements.size(); ++i) {
    if (!fixes_pointwise(we.elements[i], info)) continue;
    if (!we.closed && we.length[i] == bound)
      throw bound_too_small("stabilizer candidate found exactly at the word bound; raise word_bound");
    stab.push_back(we.elements[i]);
  }
  return stab;
}

int stabilizer_order(const Poly& cell, const GroupAction& a) {
  return int(stabilizer(cell, a).size());
}

}  // namespace tropic
