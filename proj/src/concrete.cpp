#include "finhom/concrete.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace finhom {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Thin shape category with identities first (identity of object i has
// morphism id i) followed by the listed non-identity morphisms, which must
// have no composable pairs among themselves.
FiniteCategory make_shape(int nobj, const std::vector<Mor>& nonid) {
  FiniteCategory c;
  for (int i = 0; i < nobj; ++i) {
    c.objects.push_back("o" + std::to_string(i));
    c.morphisms.push_back({i, i});
    c.identity.push_back(i);
  }
  for (const Mor& m : nonid) c.morphisms.push_back(m);
  int nm = (int)c.morphisms.size();
  c.table.assign(nm, std::vector<int>(nm, -1));
  for (int f = 0; f < nm; ++f) {
    c.table[c.identity[c.morphisms[f].dst]][f] = f;
    c.table[f][c.identity[c.morphisms[f].src]] = f;
  }
  for (int g = nobj; g < nm; ++g)
    for (int f = nobj; f < nm; ++f)
      if (c.morphisms[f].dst == c.morphisms[g].src)
        throw std::logic_error("make_shape: composable non-identity pair");
  return c;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void check_diagram_or_throw(const FinSetDiagram& D) {
  auto v = check_diagram(D);
  if (v) throw std::invalid_argument("invalid diagram: " + *v);
}

int pos_in(const std::vector<int>& xs, int x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  if (it == xs.end()) throw std::logic_error("element not in hom list");
  return (int)(it - xs.begin());
}

}  // namespace

bool fs_valid(const FinSetMor& m) {
  if (m.src < 0 || m.dst < 0 || (int)m.map.size() != m.src) return false;
  for (int v : m.map)
    if (v < 0 || v >= m.dst) return false;
  return true;
}

FinSetMor fs_identity(int n) {
  FinSetMor m{n, n, std::vector<int>(n)};
  std::iota(m.map.begin(), m.map.end(), 0);
  return m;
}

FinSetMor fs_compose(const FinSetMor& g, const FinSetMor& f) {
  require(fs_valid(f) && fs_valid(g) && f.dst == g.src,
          "fs_compose: endpoint mismatch");
  FinSetMor c{f.src, g.dst, {}};
  c.map.reserve(f.src);
  for (int v : f.map) c.map.push_back(g.map[v]);
  return c;
}

bool is_mono(const FinSetMor& m) {
  // Allocation-free for targets that fit a word: these two predicates sit
  // inside every bounded class scan.
  if (m.dst <= 64) {
    std::uint64_t seen = 0;
    for (int v : m.map) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (seen & bit) return false;
      seen |= bit;
    }
    return true;
  }
  std::vector<bool> seen(m.dst, false);
  for (int v : m.map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_epi(const FinSetMor& m) {
  if (m.dst <= 64) {
    std::uint64_t seen = 0;
    for (int v : m.map) seen |= std::uint64_t{1} << v;
    const std::uint64_t all =
        m.dst == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.dst) - 1;
    return seen == all;
  }
  std::vector<bool> seen(m.dst, false);
  int hit = 0;
  for (int v : m.map)
    if (!seen[v]) {
      seen[v] = true;
      ++hit;
    }
  return hit == m.dst;
}

bool is_iso(const FinSetMor& m) { return is_mono(m) && is_epi(m); }

std::vector<FinSetMor> all_maps(int a, int b) {
  std::vector<FinSetMor> out;
  if (a == 0) {
    out.push_back({0, b, {}});
    return out;
  }
  if (b == 0) return out;
  std::vector<int> t(a, 0);
  while (true) {
    out.push_back({a, b, t});
    int i = a - 1;
    while (i >= 0 && t[i] == b - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

std::optional<std::string> check_diagram(const FinSetDiagram& D) {
  const FiniteCategory& J = *D.shape;
  if ((int)D.at.size() != J.num_objects()) return "object count mismatch";
  if ((int)D.act.size() != J.num_morphisms()) return "morphism count mismatch";
  for (int x = 0; x < J.num_objects(); ++x)
    if (D.at[x] < 0) return "negative size at " + J.objects[x];
  for (int m = 0; m < J.num_morphisms(); ++m) {
    const FinSetMor& f = D.act[m];
    if (!fs_valid(f) || f.src != D.at[J.morphisms[m].src] ||
        f.dst != D.at[J.morphisms[m].dst])
      return "bad value on morphism " + J.mor_label(m);
  }
  for (int x = 0; x < J.num_objects(); ++x)
    if (!(D.act[J.identity[x]] == fs_identity(D.at[x])))
      return "identity not preserved at " + J.objects[x];
  for (int g = 0; g < J.num_morphisms(); ++g)
    for (int f = 0; f < J.num_morphisms(); ++f) {
      int c = J.table[g][f];
      if (c == -1) continue;
      if (!(fs_compose(D.act[g], D.act[f]) == D.act[c]))
        return "composition not preserved on " + J.mor_label(g) + " after " +
               J.mor_label(f);
    }
  return std::nullopt;
}

CoconeResult fs_colimit(const FinSetDiagram& D) {
  check_diagram_or_throw(D);
  const FiniteCategory& J = *D.shape;
  std::vector<int> off(J.num_objects() + 1, 0);
  for (int x = 0; x < J.num_objects(); ++x) off[x + 1] = off[x] + D.at[x];
  int total = off.back();
  UnionFind uf(total);
  for (int m = 0; m < J.num_morphisms(); ++m) {
    int s = J.morphisms[m].src, d = J.morphisms[m].dst;
    for (int x = 0; x < D.at[s]; ++x)
      uf.unite(off[s] + x, off[d] + D.act[m].map[x]);
  }
  std::vector<int> cls(total, -1);
  int next = 0;
  for (int i = 0; i < total; ++i) {
    int r = uf.find(i);
    if (cls[r] == -1) cls[r] = next++;
  }
  CoconeResult res{"colimit", {next}, {}};
  for (int x = 0; x < J.num_objects(); ++x) {
    FinSetMor leg{D.at[x], next, {}};
    for (int e = 0; e < D.at[x]; ++e)
      leg.map.push_back(cls[uf.find(off[x] + e)]);
    res.legs.push_back(std::move(leg));
  }
  return res;
}

ConeResult fs_limit(const FinSetDiagram& D) {
  check_diagram_or_throw(D);
  const FiniteCategory& J = *D.shape;
  int n = J.num_objects();
  std::vector<std::vector<int>> elems;
  std::vector<int> tuple(n, 0);
  bool empty_fiber = false;
  for (int x = 0; x < n; ++x)
    if (D.at[x] == 0) empty_fiber = true;
  if (!empty_fiber || n == 0) {
    while (true) {
      bool ok = true;
      for (int m = 0; m < J.num_morphisms() && ok; ++m)
        ok = D.act[m].map[tuple[J.morphisms[m].src]] ==
             tuple[J.morphisms[m].dst];
      if (ok) elems.push_back(tuple);
      int i = n - 1;
      while (i >= 0 && tuple[i] == D.at[i] - 1) tuple[i--] = 0;
      if (i < 0) break;
      ++tuple[i];
    }
  }
  ConeResult res{"limit", {(int)elems.size()}, {}};
  for (int x = 0; x < n; ++x) {
    FinSetMor leg{(int)elems.size(), D.at[x], {}};
    for (auto& t : elems) leg.map.push_back(t[x]);
    res.legs.push_back(std::move(leg));
  }
  return res;
}

CoconeResult fs_initial() {
  FiniteCategory shape = make_shape(0, {});
  CoconeResult r = fs_colimit({&shape, {}, {}});
  r.kind = "initial";
  return r;
}

CoconeResult fs_coproduct(int a, int b) {
  FiniteCategory shape = make_shape(2, {});
  CoconeResult r =
      fs_colimit({&shape, {a, b}, {fs_identity(a), fs_identity(b)}});
  r.kind = "coproduct";
  return r;
}

CoconeResult fs_coequalizer(const FinSetMor& f, const FinSetMor& g) {
  require(fs_valid(f) && fs_valid(g) && f.src == g.src && f.dst == g.dst,
          "fs_coequalizer: f, g must be parallel");
  // Object 0 is the target so that quotient classes are numbered by their
  // first occurrence in the target.
  FiniteCategory shape = make_shape(2, {{1, 0}, {1, 0}});
  CoconeResult r = fs_colimit(
      {&shape, {f.dst, f.src}, {fs_identity(f.dst), fs_identity(f.src), f, g}});
  r.legs = {r.legs[0]};
  r.kind = "coequalizer";
  return r;
}

CoconeResult fs_pushout(const FinSetMor& f, const FinSetMor& g) {
  require(fs_valid(f) && fs_valid(g) && f.src == g.src,
          "fs_pushout: f, g must share their source");
  // Objects: 0 = f's target, 1 = g's target, 2 = common source; classes are
  // numbered by first occurrence in f's target, then g's target.
  FiniteCategory shape = make_shape(3, {{2, 0}, {2, 1}});
  CoconeResult r = fs_colimit({&shape,
                               {f.dst, g.dst, f.src},
                               {fs_identity(f.dst), fs_identity(g.dst),
                                fs_identity(f.src), f, g}});
  r.legs = {r.legs[0], r.legs[1]};
  r.kind = "pushout";
  return r;
}

ConeResult fs_terminal() {
  FiniteCategory shape = make_shape(0, {});
  ConeResult r = fs_limit({&shape, {}, {}});
  r.kind = "terminal";
  return r;
}

ConeResult fs_product(int a, int b) {
  FiniteCategory shape = make_shape(2, {});
  ConeResult r = fs_limit({&shape, {a, b}, {fs_identity(a), fs_identity(b)}});
  r.kind = "product";
  return r;
}

ConeResult fs_equalizer(const FinSetMor& f, const FinSetMor& g) {
  require(fs_valid(f) && fs_valid(g) && f.src == g.src && f.dst == g.dst,
          "fs_equalizer: f, g must be parallel");
  FiniteCategory shape = make_shape(2, {{0, 1}, {0, 1}});
  ConeResult r = fs_limit(
      {&shape, {f.src, f.dst}, {fs_identity(f.src), fs_identity(f.dst), f, g}});
  r.legs = {r.legs[0]};
  r.kind = "equalizer";
  return r;
}

ConeResult fs_pullback(const FinSetMor& f, const FinSetMor& g) {
  require(fs_valid(f) && fs_valid(g) && f.dst == g.dst,
          "fs_pullback: f, g must share their target");
  FiniteCategory shape = make_shape(3, {{0, 2}, {1, 2}});
  ConeResult r = fs_limit({&shape,
                           {f.src, g.src, f.dst},
                           {fs_identity(f.src), fs_identity(g.src),
                            fs_identity(f.dst), f, g}});
  r.legs = {r.legs[0], r.legs[1]};
  r.kind = "pullback";
  return r;
}

FinSetMor pushout_product(const FinSetMor& f1, const FinSetMor& f2) {
  require(fs_valid(f1) && fs_valid(f2), "pushout_product: invalid morphism");
  int a1 = f1.src, b1 = f1.dst, a2 = f2.src, b2 = f2.dst;
  // Corner maps out of A1×A2.
  FinSetMor into_ba{a1 * a2, b1 * a2, {}};  // f1 × id
  FinSetMor into_ab{a1 * a2, a1 * b2, {}};  // id × f2
  for (int u = 0; u < a1; ++u)
    for (int v = 0; v < a2; ++v) {
      into_ba.map.push_back(f1.map[u] * a2 + v);
      into_ab.map.push_back(u * b2 + f2.map[v]);
    }
  CoconeResult po = fs_pushout(into_ba, into_ab);
  FinSetMor res{po.apex.n, b1 * b2, std::vector<int>(po.apex.n, -1)};
  auto set = [&](int cls, int val) {
    if (res.map[cls] != -1 && res.map[cls] != val)
      throw std::logic_error("pushout_product: cocone mismatch");
    res.map[cls] = val;
  };
  for (int u = 0; u < b1; ++u)
    for (int v = 0; v < a2; ++v)
      set(po.legs[0].map[u * a2 + v], u * b2 + f2.map[v]);
  for (int u = 0; u < a1; ++u)
    for (int v = 0; v < b2; ++v)
      set(po.legs[1].map[u * b2 + v], f1.map[u] * b2 + v);
  for (int v : res.map)
    if (v == -1) throw std::logic_error("pushout_product: uncovered class");
  return res;
}

std::optional<std::string> check_presheaf(const Presheaf& P) {
  const FiniteCategory& C = *P.index;
  if ((int)P.at.size() != C.num_objects()) return "object count mismatch";
  if ((int)P.act.size() != C.num_morphisms()) return "morphism count mismatch";
  for (int m = 0; m < C.num_morphisms(); ++m) {
    const FinSetMor& f = P.act[m];
    if (!fs_valid(f) || f.src != P.at[C.morphisms[m].dst] ||
        f.dst != P.at[C.morphisms[m].src])
      return "bad value on morphism " + C.mor_label(m);
  }
  for (int x = 0; x < C.num_objects(); ++x)
    if (!(P.act[C.identity[x]] == fs_identity(P.at[x])))
      return "identity not preserved at " + C.objects[x];
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f) {
      int c = C.table[g][f];
      if (c == -1) continue;
      // Contravariance: P(g ∘ f) = P(f) ∘ P(g).
      if (!(fs_compose(P.act[f], P.act[g]) == P.act[c]))
        return "composition not preserved on " + C.mor_label(g) + " after " +
               C.mor_label(f);
    }
  return std::nullopt;
}

std::optional<std::string> check_presheaf_mor(const PresheafMor& f) {
  const FiniteCategory& C = *f.src.index;
  if (!(*f.dst.index == C)) return "index category mismatch";
  if ((int)f.component.size() != C.num_objects()) return "component count mismatch";
  for (int x = 0; x < C.num_objects(); ++x) {
    const FinSetMor& c = f.component[x];
    if (!fs_valid(c) || c.src != f.src.at[x] || c.dst != f.dst.at[x])
      return "bad component at " + C.objects[x];
  }
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int x = C.morphisms[m].src, y = C.morphisms[m].dst;
    if (!(fs_compose(f.component[x], f.src.act[m]) ==
          fs_compose(f.dst.act[m], f.component[y])))
      return "naturality fails on " + C.mor_label(m) + " (" + C.objects[x] +
             ")";
  }
  return std::nullopt;
}

PresheafMor ps_identity(const Presheaf& X) {
  PresheafMor f{X, X, {}};
  for (int n : X.at) f.component.push_back(fs_identity(n));
  return f;
}

PresheafMor ps_compose(const PresheafMor& g, const PresheafMor& f) {
  require(f.dst == g.src, "ps_compose: endpoint mismatch");
  PresheafMor c{f.src, g.dst, {}};
  for (std::size_t x = 0; x < f.component.size(); ++x)
    c.component.push_back(fs_compose(g.component[x], f.component[x]));
  return c;
}

bool is_mono(const PresheafMor& f) {
  for (const FinSetMor& c : f.component)
    if (!is_mono(c)) return false;
  return true;
}

bool is_epi(const PresheafMor& f) {
  for (const FinSetMor& c : f.component)
    if (!is_epi(c)) return false;
  return true;
}

bool is_iso(const PresheafMor& f) { return is_mono(f) && is_epi(f); }

Presheaf ps_initial(const FiniteCategory& C) {
  Presheaf P{&C, std::vector<int>(C.num_objects(), 0), {}};
  for (int m = 0; m < C.num_morphisms(); ++m) {
    (void)m;
    P.act.push_back({0, 0, {}});
  }
  return P;
}

Presheaf ps_terminal(const FiniteCategory& C) {
  Presheaf P{&C, std::vector<int>(C.num_objects(), 1), {}};
  for (int m = 0; m < C.num_morphisms(); ++m) {
    (void)m;
    P.act.push_back({1, 1, {0}});
  }
  return P;
}

PsPushoutResult ps_pushout(const PresheafMor& f, const PresheafMor& g) {
  require(f.src == g.src, "ps_pushout: f, g must share their source");
  const FiniteCategory& C = *f.src.index;
  const Presheaf& A = f.dst;
  const Presheaf& B = g.dst;
  std::vector<CoconeResult> pos;
  for (int x = 0; x < C.num_objects(); ++x)
    pos.push_back(fs_pushout(f.component[x], g.component[x]));
  Presheaf apex{&C, {}, std::vector<FinSetMor>(C.num_morphisms())};
  for (auto& p : pos) apex.at.push_back(p.apex.n);
  // Induced action via first representatives (A's elements first).
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int x = C.morphisms[m].src, y = C.morphisms[m].dst;
    FinSetMor act{apex.at[y], apex.at[x], std::vector<int>(apex.at[y], -1)};
    for (int u = A.at[y] - 1; u >= 0; --u)
      act.map[pos[y].legs[0].map[u]] = pos[x].legs[0].map[A.act[m].map[u]];
    for (int v = B.at[y] - 1; v >= 0; --v)
      if (act.map[pos[y].legs[1].map[v]] == -1)
        act.map[pos[y].legs[1].map[v]] = pos[x].legs[1].map[B.act[m].map[v]];
    apex.act[m] = std::move(act);
  }
  if (auto why = check_presheaf(apex))
    throw std::logic_error("ps_pushout: apex is not functorial: " + *why);
  PresheafMor leg_a{A, apex, {}}, leg_b{B, apex, {}};
  for (int x = 0; x < C.num_objects(); ++x) {
    leg_a.component.push_back(pos[x].legs[0]);
    leg_b.component.push_back(pos[x].legs[1]);
  }
  if (auto why = check_presheaf_mor(leg_a))
    throw std::logic_error("ps_pushout: leg not natural: " + *why);
  if (auto why = check_presheaf_mor(leg_b))
    throw std::logic_error("ps_pushout: leg not natural: " + *why);
  return {std::move(apex), std::move(leg_a), std::move(leg_b)};
}

Presheaf external_tensor(const Presheaf& S, int a) {
  require(a >= 0, "external_tensor: negative size");
  const FiniteCategory& C = *S.index;
  Presheaf P{&C, {}, {}};
  for (int n : S.at) P.at.push_back(n * a);
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int x = C.morphisms[m].src, y = C.morphisms[m].dst;
    FinSetMor act{P.at[y], P.at[x], {}};
    for (int s = 0; s < S.at[y]; ++s)
      for (int t = 0; t < a; ++t) act.map.push_back(S.act[m].map[s] * a + t);
    P.act.push_back(std::move(act));
  }
  return P;
}

PresheafMor pushout_product(const PresheafMor& s, const FinSetMor& f) {
  require(fs_valid(f), "pushout_product: invalid set map");
  const FiniteCategory& C = *s.src.index;
  const Presheaf& S = s.src;
  const Presheaf& T = s.dst;
  int a = f.src, b = f.dst;
  Presheaf SA = external_tensor(S, a), TA = external_tensor(T, a);
  Presheaf SB = external_tensor(S, b), TB = external_tensor(T, b);
  PresheafMor into_ta{SA, TA, {}};  // s ⊗ id_A
  PresheafMor into_sb{SA, SB, {}};  // id_S ⊗ f
  for (int x = 0; x < C.num_objects(); ++x) {
    FinSetMor ca{SA.at[x], TA.at[x], {}}, cb{SA.at[x], SB.at[x], {}};
    for (int u = 0; u < S.at[x]; ++u)
      for (int v = 0; v < a; ++v) {
        ca.map.push_back(s.component[x].map[u] * a + v);
        cb.map.push_back(u * b + f.map[v]);
      }
    into_ta.component.push_back(std::move(ca));
    into_sb.component.push_back(std::move(cb));
  }
  PsPushoutResult po = ps_pushout(into_ta, into_sb);
  PresheafMor res{po.apex, TB, {}};
  for (int x = 0; x < C.num_objects(); ++x) {
    FinSetMor comp{po.apex.at[x], TB.at[x],
                   std::vector<int>(po.apex.at[x], -1)};
    auto set = [&](int cls, int val) {
      if (comp.map[cls] != -1 && comp.map[cls] != val)
        throw std::logic_error("pushout_product: cocone mismatch");
      comp.map[cls] = val;
    };
    for (int u = 0; u < T.at[x]; ++u)
      for (int v = 0; v < a; ++v)
        set(po.leg_a.component[x].map[u * a + v], u * b + f.map[v]);
    for (int u = 0; u < S.at[x]; ++u)
      for (int v = 0; v < b; ++v)
        set(po.leg_b.component[x].map[u * b + v],
            s.component[x].map[u] * b + v);
    for (int w : comp.map)
      if (w == -1) throw std::logic_error("pushout_product: uncovered class");
    res.component.push_back(std::move(comp));
  }
  if (auto why = check_presheaf_mor(res))
    throw std::logic_error("pushout_product: result not natural: " + *why);
  return res;
}

Presheaf yoneda(const FiniteCategory& C, int k) {
  require(k >= 0 && k < C.num_objects(), "yoneda: no such object");
  Presheaf P{&C, {}, {}};
  std::vector<std::vector<int>> homs;
  for (int x = 0; x < C.num_objects(); ++x) {
    homs.push_back(C.hom(x, k));
    P.at.push_back((int)homs.back().size());
  }
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int x = C.morphisms[m].src, y = C.morphisms[m].dst;
    FinSetMor act{P.at[y], P.at[x], {}};
    for (int g : homs[y]) act.map.push_back(pos_in(homs[x], C.table[g][m]));
    P.act.push_back(std::move(act));
  }
  return P;
}

BoundaryResult boundary(const FiniteCategory& C, const std::vector<bool>& plus,
                        int k) {
  MorphismSlice slice = nonid_slice(C, plus, k);
  const FiniteCategory& J = slice.cat;
  int nslice = J.num_objects();
  std::vector<std::vector<int>> homk;  // Hom(x, k) per object
  for (int x = 0; x < C.num_objects(); ++x) homk.push_back(C.hom(x, k));

  // Pointwise colimit over the slice; keep the legs and one representative
  // (slice object, hom position) per class.
  std::vector<CoconeResult> colims;
  std::vector<std::vector<std::vector<int>>> homj(C.num_objects());
  for (int x = 0; x < C.num_objects(); ++x) {
    FinSetDiagram D{&J, {}, {}};
    for (int a = 0; a < nslice; ++a) {
      homj[x].push_back(C.hom(x, C.morphisms[slice.object_mor[a]].src));
      D.at.push_back((int)homj[x][a].size());
    }
    for (int m = 0; m < J.num_morphisms(); ++m) {
      int a = J.morphisms[m].src, b = J.morphisms[m].dst;
      int u = slice.morphism_u[m];
      FinSetMor act{D.at[a], D.at[b], {}};
      for (int h : homj[x][a]) act.map.push_back(pos_in(homj[x][b], C.table[u][h]));
      D.act.push_back(std::move(act));
    }
    colims.push_back(fs_colimit(D));
  }
  auto representative = [&](int x, int cls) -> std::pair<int, int> {
    for (int a = 0; a < nslice; ++a)
      for (int e = 0; e < (int)homj[x][a].size(); ++e)
        if (colims[x].legs[a].map[e] == cls) return {a, e};
    throw std::logic_error("boundary: class without representative");
  };

  Presheaf B{&C, {}, std::vector<FinSetMor>(C.num_morphisms())};
  for (auto& c : colims) B.at.push_back(c.apex.n);
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int x = C.morphisms[m].src, y = C.morphisms[m].dst;
    FinSetMor act{B.at[y], B.at[x], {}};
    for (int cls = 0; cls < B.at[y]; ++cls) {
      auto [a, e] = representative(y, cls);
      int h = homj[y][a][e];  // h : y -> dom(g_a)
      act.map.push_back(
          colims[x].legs[a].map[pos_in(homj[x][a], C.table[h][m])]);
    }
    B.act[m] = std::move(act);
  }
  if (auto why = check_presheaf(B))
    throw std::logic_error("boundary: not functorial: " + *why);

  PresheafMor d{B, yoneda(C, k), {}};
  for (int x = 0; x < C.num_objects(); ++x) {
    FinSetMor comp{B.at[x], (int)homk[x].size(), {}};
    for (int cls = 0; cls < B.at[x]; ++cls) {
      auto [a, e] = representative(x, cls);
      int g = slice.object_mor[a], h = homj[x][a][e];
      comp.map.push_back(pos_in(homk[x], C.table[g][h]));
    }
    d.component.push_back(std::move(comp));
  }
  if (auto why = check_presheaf_mor(d))
    throw std::logic_error("boundary: comparison not natural: " + *why);
  return {std::move(B), std::move(d)};
}

void enumerate_factorizations(
    const FinSetMor& f, int bound,
    const std::function<bool(const FinSetMor&, const FinSetMor&)>& yield) {
  require(fs_valid(f), "enumerate_factorizations: invalid morphism");
  require(bound >= std::max(f.src, f.dst),
          "enumerate_factorizations: bound below endpoint sizes");
  for (int m = 0; m <= bound; ++m)
    for (const FinSetMor& h : all_maps(f.src, m))
      for (const FinSetMor& g : all_maps(m, f.dst))
        if (fs_compose(g, h) == f)
          if (!yield(h, g)) return;
}

std::vector<std::pair<FinSetMor, FinSetMor>> factorizations(const FinSetMor& f,
                                                            int bound) {
  std::vector<std::pair<FinSetMor, FinSetMor>> out;
  enumerate_factorizations(f, bound, [&](const FinSetMor& h, const FinSetMor& g) {
    out.emplace_back(h, g);
    return true;
  });
  return out;
}

}  // namespace finhom
