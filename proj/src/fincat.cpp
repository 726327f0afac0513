#include "finhom/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace finhom {

std::vector<int> FiniteCategory::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < num_morphisms(); ++m)
    if (morphisms[m].src == x && morphisms[m].dst == y) out.push_back(m);
  return out;
}

std::string FiniteCategory::mor_label(int m) const {
  return "#" + std::to_string(m) + ": " + objects[morphisms[m].src] + "->" +
         objects[morphisms[m].dst];
}

namespace {

CategoryCheck fail(CategoryViolation::Kind kind, std::string detail,
                   std::array<int, 3> witness = {-1, -1, -1}) {
  CategoryCheck r;
  r.violation = CategoryViolation{kind, std::move(detail), witness};
  return r;
}

}  // namespace

CategoryCheck validate_category(const RawCategory& data) {
  using Kind = CategoryViolation::Kind;
  const int nobj = static_cast<int>(data.objects.size());
  const int nmor = static_cast<int>(data.morphisms.size());

  std::map<std::string, int> oidx;
  for (int i = 0; i < nobj; ++i) {
    if (!oidx.emplace(data.objects[i], i).second)
      return fail(Kind::MalformedData, "duplicate object name " + data.objects[i]);
  }

  // Morphism ids must form 0..n-1 (in any order in the list).
  std::vector<Mor> mors(nmor);
  std::vector<bool> seen(nmor, false);
  for (const auto& rm : data.morphisms) {
    if (rm.id < 0 || rm.id >= nmor || seen[rm.id])
      return fail(Kind::MalformedData,
                  "morphism ids are not dense 0.." + std::to_string(nmor - 1));
    seen[rm.id] = true;
    auto s = oidx.find(rm.src), d = oidx.find(rm.dst);
    if (s == oidx.end() || d == oidx.end())
      return fail(Kind::MalformedData,
                  "morphism " + std::to_string(rm.id) + " has unknown endpoint");
    mors[rm.id] = Mor{s->second, d->second};
  }

  std::vector<int> identity(nobj, -1);
  for (const auto& [name, mid] : data.identities) {
    auto it = oidx.find(name);
    if (it == oidx.end())
      return fail(Kind::MalformedData, "identity for unknown object " + name);
    if (identity[it->second] != -1)
      return fail(Kind::MalformedData, "duplicate identity for object " + name);
    if (mid < 0 || mid >= nmor)
      return fail(Kind::MalformedData, "identity id out of range for " + name);
    identity[it->second] = mid;
  }
  for (int x = 0; x < nobj; ++x) {
    if (identity[x] == -1)
      return fail(Kind::MalformedData, "object " + data.objects[x] + " has no identity");
    const Mor& m = mors[identity[x]];
    if (m.src != x || m.dst != x)
      return fail(Kind::IdentityLaw,
                  "identity of " + data.objects[x] + " has endpoints " +
                      data.objects[m.src] + "->" + data.objects[m.dst],
                  {x, identity[x], -1});
  }

  std::vector<std::vector<int>> table(nmor, std::vector<int>(nmor, -1));
  for (const auto& e : data.compose) {
    int g = e[0], f = e[1], gf = e[2];
    if (g < 0 || g >= nmor || f < 0 || f >= nmor || gf < 0 || gf >= nmor)
      return fail(Kind::MalformedData, "compose entry id out of range", {g, f, -1});
    if (mors[f].dst != mors[g].src)
      return fail(Kind::NonComposableEntry,
                  "compose entry on non-composable pair (g=" + std::to_string(g) +
                      ", f=" + std::to_string(f) + ")",
                  {g, f, -1});
    if (table[g][f] != -1 && table[g][f] != gf)
      return fail(Kind::MalformedData,
                  "conflicting compose entries for (g=" + std::to_string(g) +
                      ", f=" + std::to_string(f) + ")",
                  {g, f, -1});
    if (mors[gf].src != mors[f].src || mors[gf].dst != mors[g].dst)
      return fail(Kind::MalformedData,
                  "composite endpoints wrong for (g=" + std::to_string(g) +
                      ", f=" + std::to_string(f) + ")",
                  {g, f, -1});
    table[g][f] = gf;
  }
  for (int g = 0; g < nmor; ++g)
    for (int f = 0; f < nmor; ++f)
      if (mors[f].dst == mors[g].src && table[g][f] == -1)
        return fail(Kind::PartialComposition,
                    "no composite for composable pair (g=" + std::to_string(g) +
                        ", f=" + std::to_string(f) + ")",
                    {g, f, -1});

  // Identity laws.
  for (int f = 0; f < nmor; ++f) {
    int idd = identity[mors[f].dst], ids = identity[mors[f].src];
    if (table[idd][f] != f)
      return fail(Kind::IdentityLaw, "id∘f ≠ f for f=" + std::to_string(f),
                  {mors[f].dst, f, -1});
    if (table[f][ids] != f)
      return fail(Kind::IdentityLaw, "f∘id ≠ f for f=" + std::to_string(f),
                  {mors[f].src, f, -1});
  }

  // Associativity, exhaustive over composable triples in id order.
  for (int h = 0; h < nmor; ++h)
    for (int g = 0; g < nmor; ++g) {
      if (mors[g].dst != mors[h].src) continue;
      for (int f = 0; f < nmor; ++f) {
        if (mors[f].dst != mors[g].src) continue;
        if (table[h][table[g][f]] != table[table[h][g]][f])
          return fail(Kind::Associativity,
                      "h∘(g∘f) ≠ (h∘g)∘f for (h,g,f)=(" + std::to_string(h) +
                          "," + std::to_string(g) + "," + std::to_string(f) + ")",
                      {h, g, f});
      }
    }

  CategoryCheck r;
  r.category = FiniteCategory{data.objects, std::move(mors), std::move(identity),
                              std::move(table)};
  return r;
}

FiniteCategory poset_category(const std::vector<std::vector<bool>>& leq,
                              const std::vector<std::string>& names) {
  const int n = static_cast<int>(leq.size());
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("poset_category: matrix not square");
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) throw std::invalid_argument("poset_category: not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k])
          throw std::invalid_argument("poset_category: not transitive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i])
        throw std::invalid_argument("poset_category: not antisymmetric");

  FiniteCategory c;
  for (int i = 0; i < n; ++i)
    c.objects.push_back(names.empty() ? std::to_string(i) : names.at(i));
  std::vector<std::vector<int>> mor_of(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) {
        mor_of[x][y] = c.num_morphisms();
        c.morphisms.push_back(Mor{x, y});
      }
  c.identity.resize(n);
  for (int x = 0; x < n; ++x) c.identity[x] = mor_of[x][x];
  const int m = c.num_morphisms();
  c.table.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.morphisms[f].dst == c.morphisms[g].src)
        c.table[g][f] = mor_of[c.morphisms[f].src][c.morphisms[g].dst];
  return c;
}

FiniteCategory product_category(const FiniteCategory& c1, const FiniteCategory& c2) {
  FiniteCategory c;
  const int o2 = c2.num_objects(), m2 = c2.num_morphisms();
  for (const auto& a : c1.objects)
    for (const auto& b : c2.objects) c.objects.push_back(a + b);
  for (const auto& a : c1.morphisms)
    for (const auto& b : c2.morphisms)
      c.morphisms.push_back(Mor{a.src * o2 + b.src, a.dst * o2 + b.dst});
  c.identity.resize(c.num_objects());
  for (int x = 0; x < c1.num_objects(); ++x)
    for (int y = 0; y < o2; ++y)
      c.identity[x * o2 + y] = c1.identity[x] * m2 + c2.identity[y];
  const int m = c.num_morphisms();
  c.table.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int g1 = g / m2, g2 = g % m2, f1 = f / m2, f2 = f % m2;
      if (c1.composable(g1, f1) && c2.composable(g2, f2))
        c.table[g][f] = c1.table[g1][f1] * m2 + c2.table[g2][f2];
    }
  return c;
}

FiniteCategory opposite(const FiniteCategory& c) {
  FiniteCategory o = c;
  for (auto& m : o.morphisms) std::swap(m.src, m.dst);
  const int n = c.num_morphisms();
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) o.table[g][f] = c.table[f][g];
  return o;
}

bool is_iso(const FiniteCategory& c, int m) {
  const Mor& mm = c.morphisms[m];
  for (int n = 0; n < c.num_morphisms(); ++n)
    if (c.morphisms[n].src == mm.dst && c.morphisms[n].dst == mm.src &&
        c.table[n][m] == c.identity[mm.src] && c.table[m][n] == c.identity[mm.dst])
      return true;
  return false;
}

std::vector<int> iso_morphisms(const FiniteCategory& c) {
  std::vector<int> out;
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (is_iso(c, m)) out.push_back(m);
  return out;
}

std::optional<int> initial_object(const FiniteCategory& c) {
  for (int x = 0; x < c.num_objects(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.num_objects() && ok; ++y)
      ok = c.hom(x, y).size() == 1;
    if (ok) return x;
  }
  return std::nullopt;
}

std::optional<int> terminal_object(const FiniteCategory& c) {
  for (int x = 0; x < c.num_objects(); ++x) {
    bool ok = true;
    for (int y = 0; y < c.num_objects() && ok; ++y)
      ok = c.hom(y, x).size() == 1;
    if (ok) return x;
  }
  return std::nullopt;
}

std::optional<FunctorViolation> check_functor(const Functor& F) {
  const FiniteCategory& S = *F.source;
  const FiniteCategory& T = *F.target;
  if (static_cast<int>(F.obj_map.size()) != S.num_objects() ||
      static_cast<int>(F.mor_map.size()) != S.num_morphisms())
    return FunctorViolation{"shape", -1, -1};
  for (int x : F.obj_map)
    if (x < 0 || x >= T.num_objects()) return FunctorViolation{"shape", x, -1};
  for (int m : F.mor_map)
    if (m < 0 || m >= T.num_morphisms()) return FunctorViolation{"shape", m, -1};
  for (int m = 0; m < S.num_morphisms(); ++m) {
    const Mor& mm = S.morphisms[m];
    const Mor& im = T.morphisms[F.mor_map[m]];
    if (im.src != F.obj_map[mm.src] || im.dst != F.obj_map[mm.dst])
      return FunctorViolation{"endpoints", m, -1};
  }
  for (int x = 0; x < S.num_objects(); ++x)
    if (F.mor_map[S.identity[x]] != T.identity[F.obj_map[x]])
      return FunctorViolation{"identity", x, -1};
  for (int g = 0; g < S.num_morphisms(); ++g)
    for (int f = 0; f < S.num_morphisms(); ++f)
      if (S.composable(g, f) &&
          F.mor_map[S.table[g][f]] != T.table[F.mor_map[g]][F.mor_map[f]])
        return FunctorViolation{"composition", g, f};
  return std::nullopt;
}

Functor identity_functor(const FiniteCategory& c) {
  Functor F{&c, &c, {}, {}};
  F.obj_map.resize(c.num_objects());
  F.mor_map.resize(c.num_morphisms());
  for (int x = 0; x < c.num_objects(); ++x) F.obj_map[x] = x;
  for (int m = 0; m < c.num_morphisms(); ++m) F.mor_map[m] = m;
  return F;
}

Functor compose_functors(const Functor& G, const Functor& F) {
  if (F.target != G.source)
    throw std::invalid_argument("compose_functors: middle categories differ");
  Functor H{F.source, G.target, {}, {}};
  for (int x : F.obj_map) H.obj_map.push_back(G.obj_map[x]);
  for (int m : F.mor_map) H.mor_map.push_back(G.mor_map[m]);
  return H;
}

std::optional<int> check_natural(const NaturalTransformation& t) {
  const Functor& F = *t.source;
  const Functor& G = *t.target;
  const FiniteCategory& S = *F.source;
  const FiniteCategory& T = *F.target;
  for (int x = 0; x < S.num_objects(); ++x) {
    const Mor& c = T.morphisms[t.component[x]];
    if (c.src != F.obj_map[x] || c.dst != G.obj_map[x]) return S.identity[x];
  }
  for (int m = 0; m < S.num_morphisms(); ++m) {
    const Mor& mm = S.morphisms[m];
    if (T.table[t.component[mm.dst]][F.mor_map[m]] !=
        T.table[G.mor_map[m]][t.component[mm.src]])
      return m;
  }
  return std::nullopt;
}

std::optional<std::string> check_adjunction(const Adjunction& adj) {
  const Functor& F = adj.left;
  const Functor& G = adj.right;
  if (F.source != G.target || F.target != G.source)
    return "adjunction endpoints mismatched";
  if (check_functor(F)) return "left functor invalid";
  if (check_functor(G)) return "right functor invalid";
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;

  Functor GF = compose_functors(G, F);
  Functor FG = compose_functors(F, G);
  Functor idC = identity_functor(C);
  Functor idD = identity_functor(D);
  NaturalTransformation unit{&idC, &GF, adj.unit};
  if (auto w = check_natural(unit))
    return "unit not natural at morphism " + std::to_string(*w);
  NaturalTransformation counit{&FG, &idD, adj.counit};
  if (auto w = check_natural(counit))
    return "counit not natural at morphism " + std::to_string(*w);

  // Triangle identities: counit_{Fx} ∘ F(unit_x) = id_{Fx} and
  // G(counit_y) ∘ unit_{Gy} = id_{Gy}.
  for (int x = 0; x < C.num_objects(); ++x)
    if (D.table[adj.counit[F.obj_map[x]]][F.mor_map[adj.unit[x]]] !=
        D.identity[F.obj_map[x]])
      return "triangle identity (F side) fails at object " + std::to_string(x);
  for (int y = 0; y < D.num_objects(); ++y)
    if (C.table[G.mor_map[adj.counit[y]]][adj.unit[G.obj_map[y]]] !=
        C.identity[G.obj_map[y]])
      return "triangle identity (G side) fails at object " + std::to_string(y);

  // Hom(Fx, y) ≅ Hom(x, Gy): φ(h) = G(h)∘unit_x, ψ(k) = counit_y∘F(k);
  // verified mutually inverse for every pair (x, y).
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = 0; y < D.num_objects(); ++y) {
      for (int h : D.hom(F.obj_map[x], y)) {
        int k = C.table[G.mor_map[h]][adj.unit[x]];
        if (D.table[adj.counit[y]][F.mor_map[k]] != h)
          return "hom bijection not inverse (ψφ) at (" + std::to_string(x) +
                 "," + std::to_string(y) + ")";
      }
      for (int k : C.hom(x, G.obj_map[y])) {
        int h = D.table[adj.counit[y]][F.mor_map[k]];
        if (C.table[G.mor_map[h]][adj.unit[x]] != k)
          return "hom bijection not inverse (φψ) at (" + std::to_string(x) +
                 "," + std::to_string(y) + ")";
      }
    }
  return std::nullopt;
}

CommaCategory comma_category(const Functor& F, int y) {
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;
  CommaCategory comma;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int h : D.hom(F.obj_map[x], y)) comma.object_data.emplace_back(x, h);

  FiniteCategory& cat = comma.cat;
  const int n = static_cast<int>(comma.object_data.size());
  for (int i = 0; i < n; ++i) {
    auto [x, h] = comma.object_data[i];
    cat.objects.push_back("(" + C.objects[x] + "," + std::to_string(h) + ")");
  }
  // Morphisms (x,h) -> (x',h'): u : x -> x' in C with h' ∘ F(u) = h.
  struct CM { int src_i, dst_i, u; };
  std::vector<CM> cms;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [x, h] = comma.object_data[i];
      auto [x2, h2] = comma.object_data[j];
      for (int u : C.hom(x, x2))
        if (D.table[h2][F.mor_map[u]] == h) {
          cat.morphisms.push_back(Mor{i, j});
          cms.push_back(CM{i, j, u});
        }
    }
  const int m = static_cast<int>(cms.size());
  cat.identity.assign(n, -1);
  for (int k = 0; k < m; ++k)
    if (cms[k].src_i == cms[k].dst_i &&
        cms[k].u == C.identity[comma.object_data[cms[k].src_i].first])
      cat.identity[cms[k].src_i] = k;
  cat.table.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      if (cms[f].dst_i != cms[g].src_i) continue;
      int u = C.table[cms[g].u][cms[f].u];
      for (int k = 0; k < m; ++k)
        if (cms[k].src_i == cms[f].src_i && cms[k].dst_i == cms[g].dst_i &&
            cms[k].u == u) {
          cat.table[g][f] = k;
          break;
        }
    }
  return comma;
}

RightAdjointResult right_adjoint(const Functor& F) {
  const FiniteCategory& C = *F.source;
  const FiniteCategory& D = *F.target;
  RightAdjointResult result;

  // For each y, the terminal object (x_y, ε_y) of (F ↓ y).
  std::vector<int> gx(D.num_objects()), counit(D.num_objects());
  for (int y = 0; y < D.num_objects(); ++y) {
    CommaCategory comma = comma_category(F, y);
    std::optional<int> t = terminal_object(comma.cat);
    if (!t) {
      result.missing_terminal_at = y;
      return result;
    }
    gx[y] = comma.object_data[*t].first;
    counit[y] = comma.object_data[*t].second;
  }

  Functor G{&D, &C, gx, std::vector<int>(D.num_morphisms(), -1)};
  // G(v : y -> y') = the unique u : x_y -> x_{y'} with ε_{y'} ∘ F(u) = v ∘ ε_y.
  for (int v = 0; v < D.num_morphisms(); ++v) {
    int y = D.morphisms[v].src, y2 = D.morphisms[v].dst;
    int target_h = D.table[v][counit[y]];
    for (int u : C.hom(gx[y], gx[y2]))
      if (D.table[counit[y2]][F.mor_map[u]] == target_h) {
        G.mor_map[v] = u;
        break;
      }
    if (G.mor_map[v] == -1)
      throw std::logic_error("right_adjoint: no mediating morphism (internal)");
  }

  // unit_x : x -> G(F(x)) is the unique u with ε_{Fx} ∘ F(u) = id_{Fx}.
  std::vector<int> unit(C.num_objects(), -1);
  for (int x = 0; x < C.num_objects(); ++x) {
    int fx = F.obj_map[x];
    for (int u : C.hom(x, gx[fx]))
      if (D.table[counit[fx]][F.mor_map[u]] == D.identity[fx]) {
        unit[x] = u;
        break;
      }
    if (unit[x] == -1)
      throw std::logic_error("right_adjoint: no unit component (internal)");
  }

  Adjunction adj{F, std::move(G), std::move(unit), std::move(counit)};
  if (auto err = check_adjunction(adj))
    throw std::logic_error("right_adjoint: verification failed: " + *err);
  result.adjunction = std::move(adj);
  return result;
}

bool is_essentially_surjective(const Functor& F) {
  const FiniteCategory& T = *F.target;
  for (int y = 0; y < T.num_objects(); ++y) {
    bool hit = false;
    for (int x = 0; x < F.source->num_objects() && !hit; ++x)
      for (int m : T.hom(F.obj_map[x], y))
        if (is_iso(T, m)) {
          hit = true;
          break;
        }
    if (!hit) return false;
  }
  return true;
}

bool is_fully_faithful(const Functor& F) {
  const FiniteCategory& S = *F.source;
  const FiniteCategory& T = *F.target;
  for (int x = 0; x < S.num_objects(); ++x)
    for (int y = 0; y < S.num_objects(); ++y) {
      std::vector<int> image;
      for (int m : S.hom(x, y)) image.push_back(F.mor_map[m]);
      std::set<int> image_set(image.begin(), image.end());
      if (image_set.size() != image.size()) return false;  // not faithful
      auto target_hom = T.hom(F.obj_map[x], F.obj_map[y]);
      if (image_set.size() != target_hom.size()) return false;  // not full
    }
  return true;
}

namespace {

MorphismSlice build_slice(const FiniteCategory& C, const std::vector<bool>& sub,
                          int k, bool over) {
  if ((int)sub.size() != C.num_morphisms())
    throw std::invalid_argument("subcategory mask has wrong size");
  MorphismSlice s;
  for (int m = 0; m < C.num_morphisms(); ++m) {
    if (C.is_identity(m) || !sub[m]) continue;
    if ((over ? C.morphisms[m].dst : C.morphisms[m].src) != k) continue;
    s.object_mor.push_back(m);
  }
  int n = (int)s.object_mor.size();
  auto connects = [&](int a, int b, int u) {
    int ma = s.object_mor[a], mb = s.object_mor[b];
    if (!sub[u]) return false;
    if (over)  // u : dom(ma) -> dom(mb), mb ∘ u = ma
      return C.morphisms[u].src == C.morphisms[ma].src &&
             C.morphisms[u].dst == C.morphisms[mb].src &&
             C.table[mb][u] == ma;
    // under: u : cod(ma) -> cod(mb), u ∘ ma = mb
    return C.morphisms[u].src == C.morphisms[ma].dst &&
           C.morphisms[u].dst == C.morphisms[mb].dst &&
           C.table[u][ma] == mb;
  };
  FiniteCategory& cat = s.cat;
  for (int a = 0; a < n; ++a) cat.objects.push_back("m" + std::to_string(s.object_mor[a]));
  std::vector<std::vector<std::vector<int>>> idx(n, std::vector<std::vector<int>>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int u = 0; u < C.num_morphisms(); ++u)
        if (connects(a, b, u)) {
          idx[a][b].push_back((int)cat.morphisms.size());
          cat.morphisms.push_back({a, b});
          s.morphism_u.push_back(u);
        }
  int nm = (int)cat.morphisms.size();
  cat.identity.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    int dom = over ? C.morphisms[s.object_mor[a]].src
                   : C.morphisms[s.object_mor[a]].dst;
    for (int m : idx[a][a])
      if (s.morphism_u[m] == C.identity[dom]) cat.identity[a] = m;
    if (cat.identity[a] == -1)
      throw std::logic_error("slice subcategory is missing an identity");
  }
  cat.table.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (cat.morphisms[f].dst != cat.morphisms[g].src) continue;
      int u = C.table[s.morphism_u[g]][s.morphism_u[f]];
      int a = cat.morphisms[f].src, b = cat.morphisms[g].dst;
      for (int m : idx[a][b])
        if (s.morphism_u[m] == u) cat.table[g][f] = m;
      if (cat.table[g][f] == -1)
        throw std::logic_error("slice subcategory is not closed under composition");
    }
  return s;
}

}  // namespace

MorphismSlice nonid_slice(const FiniteCategory& C, const std::vector<bool>& sub,
                          int k) {
  return build_slice(C, sub, k, /*over=*/true);
}

MorphismSlice nonid_coslice(const FiniteCategory& C,
                            const std::vector<bool>& sub, int k) {
  return build_slice(C, sub, k, /*over=*/false);
}

}  // namespace finhom
