#include "tropic/cone.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tropic {

Poly Poly::whole_space(int n) {
  Poly p;
  p.ambient = n;
  p.eq = IntMat(0, n);
  p.ge = IntMat(0, n);
  p.gt = IntMat(0, n);
  return p;
}

Poly Poly::cone(int n, const std::vector<IntVec>& eqs, const std::vector<IntVec>& ges,
                const std::vector<IntVec>& gts) {
  Poly p = whole_space(n);
  for (auto& f : eqs) p.add_eq(f, 0);
  for (auto& f : ges) p.add_ge(f, 0);
  for (auto& f : gts) p.add_gt(f, 0);
  return p;
}

Poly Poly::cone_hull(int n, const std::vector<IntVec>& rays) {
  Poly p = whole_space(n);
  if (rays.empty()) {
    for (int i = 0; i < n; ++i) {
      IntVec e(n, Int(0));
      e[i] = 1;
      p.add_eq(e, 0);
    }
    return p;
  }
  std::vector<RatVec> span;
  for (auto& r : rays) span.push_back(to_rat(r));
  for (auto& f : cokernel_forms(span, n)) p.add_eq(f, 0);
  int k = int(rays.size());
  RatMat R(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) R(i, j) = Rat(rays[j][i]);
  if (rank(R) != k)
    throw std::invalid_argument("cone_hull: rays not independent (non-simplicial cone)");
  // coordinate functionals lambda_j with lambda_j(r_i) = delta_ij on the span
  RatMat G(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Rat s = 0;
      for (int i = 0; i < n; ++i) s += Rat(rays[a][i]) * Rat(rays[b][i]);
      G(a, b) = s;
    }
  for (int j = 0; j < k; ++j) {
    RatVec e(k, Rat(0));
    e[j] = 1;
    auto sol = solve_affine(G, e);
    assert(sol);
    RatVec form(n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < k; ++a) form[i] += sol->particular[a] * Rat(rays[a][i]);
    p.add_ge(primitive_vector(form), 0);
  }
  return p;
}

bool Poly::is_cone() const {
  auto zero = [](const RatVec& v) {
    for (auto& x : v)
      if (x != 0) return false;
    return true;
  };
  return zero(eq_rhs) && zero(ge_rhs) && zero(gt_rhs);
}

void Poly::add_eq(const IntVec& f, const Rat& r) {
  assert(int(f.size()) == ambient);
  eq = vstack(eq, from_rows<Int>({f}, ambient));
  eq_rhs.push_back(r);
}
void Poly::add_ge(const IntVec& f, const Rat& r) {
  assert(int(f.size()) == ambient);
  ge = vstack(ge, from_rows<Int>({f}, ambient));
  ge_rhs.push_back(r);
}
void Poly::add_gt(const IntVec& f, const Rat& r) {
  assert(int(f.size()) == ambient);
  gt = vstack(gt, from_rows<Int>({f}, ambient));
  gt_rhs.push_back(r);
}

std::string Poly::description_key() const {
  auto rows_of = [&](const IntMat& M, const RatVec& rhs) {
    std::vector<std::string> rows;
    for (int i = 0; i < M.rows; ++i) {
      IntVec f = M.row(i);
      Int g = 0;
      for (auto& x : f) g = gcd_int(g, x);
      std::ostringstream os;
      if (g == 0) {
        if (rhs[i] == 0) continue;  // trivial row
        os << "!" << rat_str(rhs[i]);
      } else {
        Rat r = rhs[i] / Rat(g);
        for (auto& x : f) os << rat_str(Rat(x) / Rat(g)) << ",";
        os << "|" << rat_str(r);
      }
      rows.push_back(os.str());
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::string s;
    for (auto& r : rows) s += r + ";";
    return s;
  };
  return "E" + rows_of(eq, eq_rhs) + "G" + rows_of(ge, ge_rhs) + "S" + rows_of(gt, gt_rhs);
}

namespace {

StrictSystem system_of(const Poly& p) {
  StrictSystem s;
  s.nvars = p.ambient;
  s.A_eq = to_rat(p.eq);
  s.b_eq = p.eq_rhs;
  s.A_ge = to_rat(p.ge);
  s.b_ge = p.ge_rhs;
  s.A_gt = to_rat(p.gt);
  s.b_gt = p.gt_rhs;
  return s;
}

bool feasible_with_extra_gt(const Poly& p, const RatVec& f, const Rat& r) {
  StrictSystem s = system_of(p);
  if (s.A_gt.cols == 0) s.A_gt = RatMat(0, p.ambient);
  s.A_gt = vstack(s.A_gt, from_rows<Rat>({f}, p.ambient));
  s.b_gt.push_back(r);
  return strict_feasible_point(s).has_value();
}
bool feasible_with_extra_ge(const Poly& p, const RatVec& f, const Rat& r) {
  StrictSystem s = system_of(p);
  if (s.A_ge.cols == 0) s.A_ge = RatMat(0, p.ambient);
  s.A_ge = vstack(s.A_ge, from_rows<Rat>({f}, p.ambient));
  s.b_ge.push_back(r);
  return strict_feasible_point(s).has_value();
}

}  // namespace

namespace {

// analysis is deterministic per description; memoized globally
std::map<std::string, PolyInfo>& analyze_cache() {
  static std::map<std::string, PolyInfo> cache;
  return cache;
}
std::mutex analyze_mutex;

}  // namespace

static PolyInfo analyze_impl(const Poly& p);

namespace {

// order-preserving exact serialization (implicit_ge indices are positional)
std::string exact_key(const Poly& p) {
  std::ostringstream os;
  os << p.ambient << "#";
  auto dump = [&](const IntMat& M, const RatVec& rhs, char tag) {
    os << tag;
    for (int i = 0; i < M.rows; ++i) {
      for (int j = 0; j < M.cols; ++j) os << M(i, j).str() << ",";
      os << "|" << rat_str(rhs[i]) << ";";
    }
  };
  dump(p.eq, p.eq_rhs, 'E');
  dump(p.ge, p.ge_rhs, 'G');
  dump(p.gt, p.gt_rhs, 'S');
  return os.str();
}

}  // namespace

PolyInfo analyze(const Poly& p) {
  std::string key = exact_key(p);
  {
    std::lock_guard<std::mutex> lock(analyze_mutex);
    auto& cache = analyze_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  PolyInfo info = analyze_impl(p);
  {
    std::lock_guard<std::mutex> lock(analyze_mutex);
    auto& cache = analyze_cache();
    if (cache.size() > 200000) cache.clear();
    cache.emplace(std::move(key), info);
  }
  return info;
}

static PolyInfo analyze_impl(const Poly& p) {
  PolyInfo info;
  auto pt = strict_feasible_point(system_of(p));
  if (!pt) return info;
  info.empty = false;
  for (int i = 0; i < p.ge.rows; ++i)
    if (!feasible_with_extra_gt(p, to_rat(p.ge.row(i)), p.ge_rhs[i]))
      info.implicit_ge.push_back(i);
  for (int i = 0; i < p.eq.rows; ++i) {
    info.hull_forms.push_back(p.eq.row(i));
    info.hull_rhs.push_back(p.eq_rhs[i]);
  }
  for (int i : info.implicit_ge) {
    info.hull_forms.push_back(p.ge.row(i));
    info.hull_rhs.push_back(p.ge_rhs[i]);
  }
  RatMat H(int(info.hull_forms.size()), p.ambient);
  for (int i = 0; i < H.rows; ++i) H.set_row(i, to_rat(info.hull_forms[i]));
  info.span = kernel_basis(H);
  info.dim = int(info.span.size());
  // relative interior point: non-implicit ge rows made strict
  StrictSystem ri = system_of(p);
  std::vector<bool> implicit(p.ge.rows, false);
  for (int i : info.implicit_ge) implicit[i] = true;
  ri.A_ge = RatMat(0, p.ambient);
  ri.b_ge.clear();
  for (int i = 0; i < p.ge.rows; ++i) {
    RatVec f = to_rat(p.ge.row(i));
    if (implicit[i]) {
      ri.A_eq = vstack(ri.A_eq, from_rows<Rat>({f}, p.ambient));
      ri.b_eq.push_back(p.ge_rhs[i]);
    } else {
      ri.A_gt = vstack(ri.A_gt, from_rows<Rat>({f}, p.ambient));
      ri.b_gt.push_back(p.ge_rhs[i]);
    }
  }
  auto rp = strict_feasible_point(ri);
  assert(rp);
  info.relint = *rp;
  return info;
}

bool contains_point(const Poly& p, const RatVec& x) {
  assert(int(x.size()) == p.ambient);
  auto dot = [&](const IntVec& f) {
    Rat s = 0;
    for (int i = 0; i < p.ambient; ++i)
      if (f[i] != 0) s += Rat(f[i]) * x[i];
    return s;
  };
  for (int i = 0; i < p.eq.rows; ++i)
    if (dot(p.eq.row(i)) != p.eq_rhs[i]) return false;
  for (int i = 0; i < p.ge.rows; ++i)
    if (dot(p.ge.row(i)) < p.ge_rhs[i]) return false;
  for (int i = 0; i < p.gt.rows; ++i)
    if (dot(p.gt.row(i)) <= p.gt_rhs[i]) return false;
  return true;
}

bool is_empty(const Poly& p) { return !strict_feasible_point(system_of(p)).has_value(); }

bool subset_of(const Poly& inner, const Poly& outer) {
  assert(inner.ambient == outer.ambient);
  if (is_empty(inner)) return true;
  int n = inner.ambient;
  auto neg = [&](const IntVec& f) {
    RatVec r(n);
    for (int i = 0; i < n; ++i) r[i] = -Rat(f[i]);
    return r;
  };
  for (int i = 0; i < outer.eq.rows; ++i) {
    RatVec f = to_rat(outer.eq.row(i));
    if (feasible_with_extra_gt(inner, f, outer.eq_rhs[i])) return false;
    if (feasible_with_extra_gt(inner, neg(outer.eq.row(i)), -outer.eq_rhs[i])) return false;
  }
  for (int i = 0; i < outer.ge.rows; ++i)
    if (feasible_with_extra_gt(inner, neg(outer.ge.row(i)), -outer.ge_rhs[i])) return false;
  for (int i = 0; i < outer.gt.rows; ++i)
    if (feasible_with_extra_ge(inner, neg(outer.gt.row(i)), -outer.gt_rhs[i])) return false;
  return true;
}

bool set_equal(const Poly& a, const Poly& b) { return subset_of(a, b) && subset_of(b, a); }

Poly intersect(const Poly& a, const Poly& b) {
  assert(a.ambient == b.ambient);
  Poly p = a;
  for (int i = 0; i < b.eq.rows; ++i) p.add_eq(b.eq.row(i), b.eq_rhs[i]);
  for (int i = 0; i < b.ge.rows; ++i) p.add_ge(b.ge.row(i), b.ge_rhs[i]);
  for (int i = 0; i < b.gt.rows; ++i) p.add_gt(b.gt.row(i), b.gt_rhs[i]);
  return p;
}

Poly face_by(const Poly& p, const std::vector<int>& ge_rows) {
  Poly f = p;
  std::vector<bool> tighten(p.ge.rows, false);
  for (int i : ge_rows) tighten[i] = true;
  f.ge = IntMat(0, p.ambient);
  f.ge_rhs.clear();
  for (int i = 0; i < p.ge.rows; ++i) {
    if (tighten[i])
      f.add_eq(p.ge.row(i), p.ge_rhs[i]);
    else
      f.add_ge(p.ge.row(i), p.ge_rhs[i]);
  }
  return f;
}

namespace {

// closure of a tight-row mask: all ge rows forced to equality on that face
std::optional<uint64_t> closed_mask(const Poly& p, uint64_t mask) {
  std::vector<int> rows;
  for (int i = 0; i < p.ge.rows; ++i)
    if (mask & (uint64_t(1) << i)) rows.push_back(i);
  Poly f = face_by(p, rows);
  if (is_empty(f)) return std::nullopt;
  uint64_t closed = mask;
  for (int i = 0; i < p.ge.rows; ++i) {
    if (closed & (uint64_t(1) << i)) continue;
    if (!feasible_with_extra_gt(f, to_rat(p.ge.row(i)), p.ge_rhs[i]))
      closed |= uint64_t(1) << i;
  }
  return closed;
}

}  // namespace

std::vector<Poly> faces(const Poly& p) {
  if (p.ge.rows > 20) throw std::invalid_argument("faces: too many inequality rows");
  std::vector<Poly> out;
  std::vector<uint64_t> seen;
  std::vector<uint64_t> work;
  auto push = [&](uint64_t mask) {
    auto cm = closed_mask(p, mask);
    if (!cm) return;
    if (std::find(seen.begin(), seen.end(), *cm) != seen.end()) return;
    seen.push_back(*cm);
    work.push_back(*cm);
    std::vector<int> rows;
    for (int i = 0; i < p.ge.rows; ++i)
      if (*cm & (uint64_t(1) << i)) rows.push_back(i);
    out.push_back(face_by(p, rows));
  };
  push(0);
  size_t next = 0;
  while (next < work.size()) {
    uint64_t m = work[next++];
    for (int i = 0; i < p.ge.rows; ++i)
      if (!(m & (uint64_t(1) << i))) push(m | (uint64_t(1) << i));
  }
  return out;
}

bool is_face_of(const Poly& f, const Poly& p) {
  if (f.ambient != p.ambient) return false;
  if (is_empty(f)) return false;
  if (!subset_of(f, p)) return false;
  std::vector<int> tight;
  for (int i = 0; i < p.ge.rows; ++i)
    if (!feasible_with_extra_gt(f, to_rat(p.ge.row(i)), p.ge_rhs[i])) tight.push_back(i);
  return set_equal(f, face_by(p, tight));
}

Poly transform(const Poly& p, const RatMat& A_inv, const RatVec& t) {
  // x in g(P) iff A_inv (x - t) in P; row f (op) r becomes (f A_inv) (op) r + f A_inv t
  Poly out = Poly::whole_space(p.ambient);
  auto conv = [&](const IntMat& M, const RatVec& rhs, auto add) {
    for (int i = 0; i < M.rows; ++i) {
      RatVec fa(p.ambient, Rat(0));
      for (int j = 0; j < p.ambient; ++j)
        for (int k = 0; k < p.ambient; ++k)
          if (M(i, k) != 0) fa[j] += Rat(M(i, k)) * A_inv(k, j);
      Rat shift = 0;
      for (int k = 0; k < p.ambient; ++k) shift += fa[k] * t[k];
      Int lcm = 1;
      for (auto& x : fa) lcm = lcm / gcd_int(lcm, den(x)) * den(x);
      IntVec fi(p.ambient);
      for (int j = 0; j < p.ambient; ++j) fi[j] = num(fa[j]) * (lcm / den(fa[j]));
      add(fi, (rhs[i] + shift) * Rat(lcm));
    }
  };
  conv(p.eq, p.eq_rhs, [&](const IntVec& f, const Rat& r) { out.add_eq(f, r); });
  conv(p.ge, p.ge_rhs, [&](const IntVec& f, const Rat& r) { out.add_ge(f, r); });
  conv(p.gt, p.gt_rhs, [&](const IntVec& f, const Rat& r) { out.add_gt(f, r); });
  return out;
}

Sublattice span_lattice_of(const Poly& p, const PolyInfo& info, const Sublattice& lambda) {
  (void)p;
  return span_lattice(info.span, lambda);
}

namespace {

struct Row {
  IntVec f;
  Rat rhs;
  int kind;  // 0 = eq, 1 = ge, 2 = gt
};

std::vector<Row> rows_of(const Poly& p) {
  std::vector<Row> rows;
  for (int i = 0; i < p.eq.rows; ++i) rows.push_back({p.eq.row(i), p.eq_rhs[i], 0});
  for (int i = 0; i < p.ge.rows; ++i) rows.push_back({p.ge.row(i), p.ge_rhs[i], 1});
  for (int i = 0; i < p.gt.rows; ++i) rows.push_back({p.gt.row(i), p.gt_rhs[i], 2});
  return rows;
}

void dedup_rows(std::vector<Row>& rows) {
  std::vector<Row> out;
  for (auto& r : rows) {
    if (is_zero(r.f) && r.rhs == 0) continue;  // trivial (0 = 0, 0 >= 0, skip 0 > 0 later)
    bool dup = false;
    for (auto& o : out)
      if (o.kind == r.kind && o.f == r.f && o.rhs == r.rhs) dup = true;
    if (!dup) out.push_back(r);
  }
  rows = std::move(out);
}

// eliminate coordinate `v` from the row system
std::vector<Row> eliminate_var(std::vector<Row> rows, int v) {
  // prefer an equality pivot
  int piv = -1;
  for (int i = 0; i < int(rows.size()); ++i)
    if (rows[i].kind == 0 && rows[i].f[v] != 0) {
      piv = i;
      break;
    }
  std::vector<Row> out;
  if (piv >= 0) {
    Row P = rows[piv];
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == piv) continue;
      Row r = rows[i];
      if (r.f[v] != 0) {
        // r_f * P_fv - P_f * r_fv, scaled to keep inequality direction:
        // multiply r by |P.f[v]| and subtract sign-matched multiple of P
        Int a = P.f[v], b = r.f[v];
        Int s = (a > 0) ? a : -a;
        Int m = (a > 0) ? b : -b;
        Row nr;
        nr.kind = r.kind;
        nr.f.resize(r.f.size());
        for (size_t t = 0; t < r.f.size(); ++t) nr.f[t] = r.f[t] * s - P.f[t] * m;
        nr.rhs = r.rhs * Rat(s) - P.rhs * Rat(m);
        out.push_back(std::move(nr));
      } else {
        out.push_back(r);
      }
    }
    return out;
  }
  std::vector<int> pos, negs;
  for (int i = 0; i < int(rows.size()); ++i) {
    if (rows[i].f[v] == 0) {
      out.push_back(rows[i]);
      continue;
    }
    if (rows[i].f[v] > 0)
      pos.push_back(i);
    else
      negs.push_back(i);
  }
  for (int i : pos)
    for (int j : negs) {
      const Row& a = rows[i];
      const Row& b = rows[j];
      Row nr;
      nr.kind = (a.kind == 2 || b.kind == 2) ? 2 : 1;
      Int ca = a.f[v], cb = -b.f[v];  // both positive
      nr.f.resize(a.f.size());
      for (size_t t = 0; t < a.f.size(); ++t) nr.f[t] = a.f[t] * cb + b.f[t] * ca;
      nr.rhs = a.rhs * Rat(cb) + b.rhs * Rat(ca);
      out.push_back(std::move(nr));
    }
  return out;
}

}  // namespace

Poly project_to(const Poly& p, const std::vector<int>& keep) {
  std::vector<bool> keep_mask(p.ambient, false);
  for (int k : keep) keep_mask[k] = true;
  std::vector<Row> rows = rows_of(p);
  for (int v = 0; v < p.ambient; ++v) {
    if (keep_mask[v]) continue;
    rows = eliminate_var(std::move(rows), v);
    dedup_rows(rows);
  }
  Poly out = Poly::whole_space(int(keep.size()));
  for (auto& r : rows) {
    IntVec f(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) f[i] = r.f[keep[i]];
    if (is_zero(f)) {
      bool violated = (r.kind == 0 && r.rhs != 0) || (r.kind == 1 && r.rhs > 0) ||
                      (r.kind == 2 && r.rhs >= 0);
      if (violated) out.add_eq(IntVec(keep.size(), Int(0)), Rat(1));  // empty marker
      continue;
    }
    // renormalize
    Int g = 0;
    for (auto& x : f) g = gcd_int(g, x);
    Rat rhs = r.rhs;
    if (g > 1) {
      for (auto& x : f) x /= g;
      rhs /= Rat(g);
    }
    if (r.kind == 0)
      out.add_eq(f, rhs);
    else if (r.kind == 1)
      out.add_ge(f, rhs);
    else
      out.add_gt(f, rhs);
  }
  return out;
}

Poly linear_image(const Poly& p, const RatMat& L) {
  assert(L.cols == p.ambient);
  int n = p.ambient, m = L.rows;
  Poly graph = Poly::whole_space(n + m);
  auto lift = [&](const IntVec& f) {
    IntVec g(n + m, Int(0));
    for (int i = 0; i < n; ++i) g[i] = f[i];
    return g;
  };
  for (int i = 0; i < p.eq.rows; ++i) graph.add_eq(lift(p.eq.row(i)), p.eq_rhs[i]);
  for (int i = 0; i < p.ge.rows; ++i) graph.add_ge(lift(p.ge.row(i)), p.ge_rhs[i]);
  for (int i = 0; i < p.gt.rows; ++i) graph.add_gt(lift(p.gt.row(i)), p.gt_rhs[i]);
  for (int r = 0; r < m; ++r) {
    RatVec row(n + m, Rat(0));
    for (int j = 0; j < n; ++j) row[j] = L(r, j);
    row[n + r] = -1;
    // clear denominators
    Int lcm = 1;
    for (auto& x : row) lcm = lcm / gcd_int(lcm, den(x)) * den(x);
    IntVec f(n + m);
    for (int j = 0; j < n + m; ++j) f[j] = num(row[j]) * (lcm / den(row[j]));
    graph.add_eq(f, 0);
  }
  std::vector<int> keep;
  for (int r = 0; r < m; ++r) keep.push_back(n + r);
  return project_to(graph, keep);
}

}  // namespace tropic
