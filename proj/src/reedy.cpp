#include "finhom/reedy.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace finhom {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_shape(const ReedyCategory& K) {
  require(K.base != nullptr, "reedy: null base category");
  require((int)K.degree.size() == K.base->num_objects(),
          "reedy: degree list size mismatch");
  for (int d : K.degree) require(d >= 0, "reedy: negative degree");
  require((int)K.plus.member.size() == K.base->num_morphisms() &&
              (int)K.minus.member.size() == K.base->num_morphisms(),
          "reedy: family size mismatch");
}

void require_reedy(const ReedyCategory& K) {
  if (verify_reedy(K))
    throw std::invalid_argument("reedy: category fails the Reedy axioms");
}

void require_object(const ReedyCategory& K, int k, const char* who) {
  require(k >= 0 && k < K.base->num_objects(),
          std::string(who) + ": object out of range");
}

// Index category of a latching or matching object.  Objects are the
// non-identity `fam` morphisms with the anchored endpoint at k (target for
// `into`, source otherwise); a morphism a -> b is a `fam` morphism g between
// the free endpoints with  arrows[b] o g = arrows[a]  (into)  resp.
// g o arrows[a] = arrows[b]  (out).
struct SliceCategory {
  FiniteCategory cat;
  std::vector<int> arrows;                  // base morphism id per object
  std::vector<std::array<int, 3>> triples;  // (src, dst, base g) per morphism
};

SliceCategory build_slice(const FiniteCategory& C, const MorphismFamily& fam,
                          int k, bool into) {
  SliceCategory s;
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (fam.contains(m) && !C.is_identity(m) &&
        (into ? C.morphisms[m].dst : C.morphisms[m].src) == k)
      s.arrows.push_back(m);
  auto endpoint = [&](int a) {
    const Mor& m = C.morphisms[s.arrows[a]];
    return into ? m.src : m.dst;
  };
  int n = (int)s.arrows.size();
  RawCategory raw;
  for (int a = 0; a < n; ++a)
    raw.objects.push_back(std::to_string(s.arrows[a]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g : C.hom(endpoint(a), endpoint(b)))
        if (fam.contains(g) &&
            (into ? C.compose(s.arrows[b], g) == s.arrows[a]
                  : C.compose(g, s.arrows[a]) == s.arrows[b]))
          s.triples.push_back({a, b, g});
  auto find_triple = [&](int a, int b, int g) {
    for (int i = 0; i < (int)s.triples.size(); ++i)
      if (s.triples[i] == std::array<int, 3>{a, b, g}) return i;
    throw std::logic_error("reedy: slice category is not closed");
  };
  for (int i = 0; i < (int)s.triples.size(); ++i)
    raw.morphisms.push_back(
        {i, raw.objects[s.triples[i][0]], raw.objects[s.triples[i][1]]});
  for (int a = 0; a < n; ++a)
    raw.identities.push_back(
        {raw.objects[a], find_triple(a, a, C.identity[endpoint(a)])});
  for (int i = 0; i < (int)s.triples.size(); ++i)
    for (int j = 0; j < (int)s.triples.size(); ++j)
      if (s.triples[i][1] == s.triples[j][0])
        raw.compose.push_back(
            {j, i,
             find_triple(s.triples[i][0], s.triples[j][1],
                         C.compose(s.triples[j][2], s.triples[i][2]))});
  CategoryCheck chk = validate_category(raw);
  if (!chk.category)
    throw std::logic_error("reedy: slice category failed validation");
  s.cat = std::move(*chk.category);
  return s;
}

// Extends a partial map and reports disagreements.
void define_at(FinSetMor& m, int at, int value, const char* who) {
  if (m.map[at] == -1)
    m.map[at] = value;
  else if (m.map[at] != value)
    throw std::logic_error(std::string(who) + ": induced map ill-defined");
}

void require_total(const FinSetMor& m, const char* who) {
  for (int v : m.map)
    if (v == -1)
      throw std::logic_error(std::string(who) +
                             ": colimit class without representative");
}

void require_diagram(const ReedyCategory& K, const FinSetDiagram& X,
                     const char* who) {
  require(X.shape == K.base,
          std::string(who) + ": diagram shape is not the base category");
  if (auto err = check_diagram(X))
    throw std::invalid_argument(std::string(who) + ": " + *err);
}

// Canonical map X_k -> apex for a limit whose legs must compose with the
// structure maps `coords` (one per indexing arrow) out of level k.
FinSetMor tuple_lookup(const ConeResult& lim,
                       const std::vector<const FinSetMor*>& coords, int level,
                       const char* who) {
  FinSetMor from{level, lim.apex.n, {}};
  for (int x = 0; x < level; ++x) {
    int found = -1;
    for (int t = 0; t < lim.apex.n && found < 0; ++t) {
      bool ok = true;
      for (int a = 0; a < (int)coords.size() && ok; ++a)
        ok = lim.legs[a].map[t] == coords[a]->map[x];
      if (ok) found = t;
    }
    if (found < 0)
      throw std::logic_error(std::string(who) +
                             ": compatible tuple missing from limit");
    from.map.push_back(found);
  }
  return from;
}

// Map between two limits over the same indexing whose coordinates are
// transported by `comp[a]` at indexing arrow a.
FinSetMor induced_limit_map(const MatchingResult& mx, const MatchingResult& my,
                            const std::vector<const FinSetMor*>& comp,
                            const char* who) {
  FinSetMor mf{mx.limit.apex.n, my.limit.apex.n, {}};
  for (int t = 0; t < mx.limit.apex.n; ++t) {
    int found = -1;
    for (int u = 0; u < my.limit.apex.n && found < 0; ++u) {
      bool ok = true;
      for (int a = 0; a < (int)comp.size() && ok; ++a)
        ok = my.limit.legs[a].map[u] == comp[a]->map[mx.limit.legs[a].map[t]];
      if (ok) found = u;
    }
    if (found < 0)
      throw std::logic_error(std::string(who) +
                             ": induced tuple missing from limit");
    mf.map.push_back(found);
  }
  return mf;
}

// X_k -> Y_k x_{M_k Y} M_k X from the matching data of both endpoints, the
// per-arrow components, and the component at the level itself.
FinSetMor relative_matching_core(const MatchingResult& mx,
                                 const MatchingResult& my,
                                 const std::vector<const FinSetMor*>& comp,
                                 const FinSetMor& fk, const char* who) {
  FinSetMor mf = induced_limit_map(mx, my, comp, who);
  ConeResult pb = fs_pullback(my.from_level, mf);
  FinSetMor rel{fk.src, pb.apex.n, {}};
  for (int x = 0; x < fk.src; ++x) {
    int ty = fk.map[x], tm = mx.from_level.map[x], found = -1;
    for (int q = 0; q < pb.apex.n && found < 0; ++q)
      if (pb.legs[0].map[q] == ty && pb.legs[1].map[q] == tm) found = q;
    if (found < 0)
      throw std::logic_error(std::string(who) +
                             ": compatible pair missing from pullback");
    rel.map.push_back(found);
  }
  return rel;
}

void require_diagram_mor(const ReedyCategory& K, const DiagramMor& f,
                         const char* who) {
  if (auto err = check_diagram_mor(f))
    throw std::invalid_argument(std::string(who) + ": " + *err);
  require(f.src.shape == K.base,
          std::string(who) + ": shape is not the base category");
}

ReedyClassCheck scan_reedy_class(const FsPremodelStructure& pm,
                                 const ReedyCategory& K, const DiagramMor& f,
                                 bool latching_side, bool anodyne) {
  require_reedy(K);
  require_diagram_mor(K, f, "reedy class check");
  const FinSetFamily& cls = latching_side ? (anodyne ? pm.acof : pm.cof)
                                          : (anodyne ? pm.afib : pm.fib);
  for (int k = 0; k < K.base->num_objects(); ++k) {
    FinSetMor rel = latching_side ? relative_latching_map(K, f, k)
                                  : relative_matching_map(K, f, k);
    if (!fs_member(cls, rel))
      return {false, k, latching_side ? rel.src : rel.dst};
  }
  return {true, -1, -1};
}

}  // namespace

std::optional<ReedyViolation> verify_reedy(const ReedyCategory& K) {
  check_shape(K);
  const FiniteCategory& C = *K.base;
  const MorphismFamily* fams[2] = {&K.plus, &K.minus};
  const char* names[2] = {"plus", "minus"};
  for (int fi = 0; fi < 2; ++fi)
    for (int x = 0; x < C.num_objects(); ++x)
      if (!fams[fi]->contains(C.identity[x]))
        return ReedyViolation{ReedyViolation::Kind::MissingIdentity, names[fi],
                              C.identity[x], {-1, -1}, -1};
  for (int fi = 0; fi < 2; ++fi)
    for (int g = 0; g < C.num_morphisms(); ++g)
      for (int f = 0; f < C.num_morphisms(); ++f)
        if (fams[fi]->contains(g) && fams[fi]->contains(f) &&
            C.composable(g, f) && !fams[fi]->contains(C.compose(g, f)))
          return ReedyViolation{ReedyViolation::Kind::NotClosed, names[fi],
                                C.compose(g, f), {g, f}, -1};
  for (int m = 0; m < C.num_morphisms(); ++m) {
    if (C.is_identity(m)) continue;
    int lo = K.degree[C.morphisms[m].src], hi = K.degree[C.morphisms[m].dst];
    if (K.plus.contains(m) && !(hi > lo))
      return ReedyViolation{ReedyViolation::Kind::DegreeDirection, "plus", m,
                            {-1, -1}, -1};
    if (K.minus.contains(m) && !(hi < lo))
      return ReedyViolation{ReedyViolation::Kind::DegreeDirection, "minus", m,
                            {-1, -1}, -1};
  }
  for (int f = 0; f < C.num_morphisms(); ++f) {
    int count = 0;
    for (int q = 0; q < C.num_morphisms(); ++q) {
      if (!K.minus.contains(q) ||
          C.morphisms[q].src != C.morphisms[f].src)
        continue;
      for (int p : C.hom(C.morphisms[q].dst, C.morphisms[f].dst))
        if (K.plus.contains(p) && C.compose(p, q) == f) ++count;
    }
    if (count != 1)
      return ReedyViolation{ReedyViolation::Kind::Factorization, "", f,
                            {-1, -1}, count};
  }
  return std::nullopt;
}

MakeReedyResult make_direct(const FiniteCategory& C,
                            const std::vector<int>& degree) {
  require((int)degree.size() == C.num_objects(),
          "make_direct: degree list size mismatch");
  for (int d : degree) require(d >= 0, "make_direct: negative degree");
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m) &&
        !(degree[C.morphisms[m].dst] > degree[C.morphisms[m].src]))
      return {std::nullopt, m};
  ReedyCategory K{&C, degree, family_all(C), family_identities(C)};
  if (verify_reedy(K))
    throw std::logic_error("make_direct: construction failed verification");
  return {std::move(K), -1};
}

MakeReedyResult make_inverse(const FiniteCategory& C,
                             const std::vector<int>& degree) {
  require((int)degree.size() == C.num_objects(),
          "make_inverse: degree list size mismatch");
  for (int d : degree) require(d >= 0, "make_inverse: negative degree");
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m) &&
        !(degree[C.morphisms[m].dst] < degree[C.morphisms[m].src]))
      return {std::nullopt, m};
  ReedyCategory K{&C, degree, family_identities(C), family_all(C)};
  if (verify_reedy(K))
    throw std::logic_error("make_inverse: construction failed verification");
  return {std::move(K), -1};
}

bool is_direct(const ReedyCategory& K) {
  check_shape(K);
  for (int m = 0; m < K.base->num_morphisms(); ++m)
    if (!K.base->is_identity(m) && K.minus.contains(m)) return false;
  return true;
}

SimplexTruncation simplex_truncation(int n) {
  require(n >= 0 && n <= 3, "simplex_truncation: n must be between 0 and 3");
  RawCategory raw;
  for (int a = 0; a <= n; ++a)
    raw.objects.push_back("[" + std::to_string(a) + "]");
  std::vector<std::vector<int>> maps;
  std::vector<int> msrc, mdst;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      std::vector<int> t(a + 1, 0);
      while (true) {
        maps.push_back(t);
        msrc.push_back(a);
        mdst.push_back(b);
        int i = a;
        while (i >= 0 && t[i] == b) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j <= a; ++j) t[j] = t[i];
      }
    }
  int nm = (int)maps.size();
  for (int m = 0; m < nm; ++m)
    raw.morphisms.push_back({m, raw.objects[msrc[m]], raw.objects[mdst[m]]});
  auto find_map = [&](int a, int b, const std::vector<int>& t) {
    for (int m = 0; m < nm; ++m)
      if (msrc[m] == a && mdst[m] == b && maps[m] == t) return m;
    throw std::logic_error("simplex_truncation: composite map missing");
  };
  for (int a = 0; a <= n; ++a) {
    std::vector<int> idm(a + 1);
    std::iota(idm.begin(), idm.end(), 0);
    raw.identities.push_back({raw.objects[a], find_map(a, a, idm)});
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (mdst[f] == msrc[g]) {
        std::vector<int> comp(msrc[f] + 1);
        for (int x = 0; x <= msrc[f]; ++x) comp[x] = maps[g][maps[f][x]];
        raw.compose.push_back({g, f, find_map(msrc[f], mdst[g], comp)});
      }
  CategoryCheck chk = validate_category(raw);
  if (!chk.category)
    throw std::logic_error("simplex_truncation: table construction failed");
  auto cat = std::make_shared<const FiniteCategory>(std::move(*chk.category));
  std::vector<int> degree(n + 1);
  std::iota(degree.begin(), degree.end(), 0);
  MorphismFamily plus{cat.get(), std::vector<bool>(nm, false)};
  MorphismFamily minus{cat.get(), std::vector<bool>(nm, false)};
  for (int m = 0; m < nm; ++m) {
    bool inj = true;
    for (int x = 0; x + 1 < (int)maps[m].size(); ++x)
      inj = inj && maps[m][x] < maps[m][x + 1];
    plus.member[m] = inj;
    std::vector<bool> hit(mdst[m] + 1, false);
    for (int v : maps[m]) hit[v] = true;
    bool surj = true;
    for (bool h : hit) surj = surj && h;
    minus.member[m] = surj;
  }
  ReedyCategory K{cat.get(), std::move(degree), std::move(plus),
                  std::move(minus)};
  if (verify_reedy(K))
    throw std::logic_error("simplex_truncation: Reedy axioms failed");
  return {std::move(cat), std::move(K), std::move(maps)};
}

std::optional<std::string> check_diagram_mor(const DiagramMor& f) {
  if (f.src.shape == nullptr || f.src.shape != f.dst.shape)
    return "source and target must share a shape";
  if (auto e = check_diagram(f.src)) return "source: " + *e;
  if (auto e = check_diagram(f.dst)) return "target: " + *e;
  const FiniteCategory& J = *f.src.shape;
  if ((int)f.component.size() != J.num_objects())
    return "component count mismatch";
  for (int x = 0; x < J.num_objects(); ++x) {
    const FinSetMor& c = f.component[x];
    if (!fs_valid(c) || c.src != f.src.at[x] || c.dst != f.dst.at[x])
      return "component at object " + std::to_string(x) +
             " has wrong endpoints";
  }
  for (int m = 0; m < J.num_morphisms(); ++m) {
    int x = J.morphisms[m].src, y = J.morphisms[m].dst;
    if (!(fs_compose(f.dst.act[m], f.component[x]) ==
          fs_compose(f.component[y], f.src.act[m])))
      return "naturality fails at morphism " + std::to_string(m);
  }
  return std::nullopt;
}

LatchingResult latching(const ReedyCategory& K, const FinSetDiagram& X,
                        int k) {
  require_reedy(K);
  require_diagram(K, X, "latching");
  require_object(K, k, "latching");
  SliceCategory s = build_slice(*K.base, K.plus, k, true);
  FinSetDiagram D{&s.cat, {}, {}};
  for (int a : s.arrows) D.at.push_back(X.at[K.base->morphisms[a].src]);
  for (const auto& t : s.triples) D.act.push_back(X.act[t[2]]);
  CoconeResult col = fs_colimit(D);
  FinSetMor to{col.apex.n, X.at[k], std::vector<int>(col.apex.n, -1)};
  for (int a = 0; a < (int)s.arrows.size(); ++a)
    for (int e = 0; e < D.at[a]; ++e)
      define_at(to, col.legs[a].map[e], X.act[s.arrows[a]].map[e], "latching");
  require_total(to, "latching");
  return {std::move(s.arrows), std::move(col), std::move(to)};
}

MatchingResult matching(const ReedyCategory& K, const FinSetDiagram& X,
                        int k) {
  require_reedy(K);
  require_diagram(K, X, "matching");
  require_object(K, k, "matching");
  SliceCategory s = build_slice(*K.base, K.minus, k, false);
  FinSetDiagram D{&s.cat, {}, {}};
  for (int a : s.arrows) D.at.push_back(X.at[K.base->morphisms[a].dst]);
  for (const auto& t : s.triples) D.act.push_back(X.act[t[2]]);
  ConeResult lim = fs_limit(D);
  std::vector<const FinSetMor*> coords;
  for (int a : s.arrows) coords.push_back(&X.act[a]);
  FinSetMor from = tuple_lookup(lim, coords, X.at[k], "matching");
  return {std::move(s.arrows), std::move(lim), std::move(from)};
}

MatchingResult ps_matching(const ReedyCategory& K, const Presheaf& X, int k) {
  require_reedy(K);
  require(X.index == K.base,
          "ps_matching: presheaf index is not the base category");
  if (auto err = check_presheaf(X))
    throw std::invalid_argument("ps_matching: " + *err);
  require_object(K, k, "ps_matching");
  SliceCategory s = build_slice(*K.base, K.plus, k, true);
  FiniteCategory op = opposite(s.cat);
  FinSetDiagram D{&op, {}, {}};
  for (int a : s.arrows) D.at.push_back(X.at[K.base->morphisms[a].src]);
  for (const auto& t : s.triples) D.act.push_back(X.act[t[2]]);
  ConeResult lim = fs_limit(D);
  std::vector<const FinSetMor*> coords;
  for (int a : s.arrows) coords.push_back(&X.act[a]);
  FinSetMor from = tuple_lookup(lim, coords, X.at[k], "ps_matching");
  return {std::move(s.arrows), std::move(lim), std::move(from)};
}

FinSetMor relative_latching_map(const ReedyCategory& K, const DiagramMor& f,
                                int k) {
  require_reedy(K);
  require_diagram_mor(K, f, "relative_latching_map");
  require_object(K, k, "relative_latching_map");
  LatchingResult lx = latching(K, f.src, k);
  LatchingResult ly = latching(K, f.dst, k);
  FinSetMor lf{lx.colimit.apex.n, ly.colimit.apex.n,
               std::vector<int>(lx.colimit.apex.n, -1)};
  for (int a = 0; a < (int)lx.arrows.size(); ++a) {
    int src = K.base->morphisms[lx.arrows[a]].src;
    for (int e = 0; e < f.src.at[src]; ++e)
      define_at(lf, lx.colimit.legs[a].map[e],
                ly.colimit.legs[a].map[f.component[src].map[e]],
                "relative_latching_map");
  }
  require_total(lf, "relative_latching_map");
  CoconeResult po = fs_pushout(lx.to_level, lf);
  FinSetMor rel{po.apex.n, f.dst.at[k], std::vector<int>(po.apex.n, -1)};
  for (int x = 0; x < f.src.at[k]; ++x)
    define_at(rel, po.legs[0].map[x], f.component[k].map[x],
              "relative_latching_map");
  for (int e = 0; e < ly.colimit.apex.n; ++e)
    define_at(rel, po.legs[1].map[e], ly.to_level.map[e],
              "relative_latching_map");
  require_total(rel, "relative_latching_map");
  return rel;
}

FinSetMor relative_matching_map(const ReedyCategory& K, const DiagramMor& f,
                                int k) {
  require_reedy(K);
  require_diagram_mor(K, f, "relative_matching_map");
  require_object(K, k, "relative_matching_map");
  MatchingResult mx = matching(K, f.src, k);
  MatchingResult my = matching(K, f.dst, k);
  std::vector<const FinSetMor*> comp;
  for (int a : mx.arrows)
    comp.push_back(&f.component[K.base->morphisms[a].dst]);
  return relative_matching_core(mx, my, comp, f.component[k],
                                "relative_matching_map");
}

FinSetMor ps_relative_matching_map(const ReedyCategory& K,
                                   const PresheafMor& f, int k) {
  require_reedy(K);
  if (auto err = check_presheaf_mor(f))
    throw std::invalid_argument("ps_relative_matching_map: " + *err);
  require(f.src.index == K.base,
          "ps_relative_matching_map: index is not the base category");
  require_object(K, k, "ps_relative_matching_map");
  MatchingResult mx = ps_matching(K, f.src, k);
  MatchingResult my = ps_matching(K, f.dst, k);
  std::vector<const FinSetMor*> comp;
  for (int a : mx.arrows)
    comp.push_back(&f.component[K.base->morphisms[a].src]);
  return relative_matching_core(mx, my, comp, f.component[k],
                                "ps_relative_matching_map");
}

ReedyClassCheck is_reedy_cofibration(const FsPremodelStructure& pm,
                                     const ReedyCategory& K,
                                     const DiagramMor& f) {
  return scan_reedy_class(pm, K, f, true, false);
}

ReedyClassCheck is_reedy_anodyne_cofibration(const FsPremodelStructure& pm,
                                             const ReedyCategory& K,
                                             const DiagramMor& f) {
  return scan_reedy_class(pm, K, f, true, true);
}

ReedyClassCheck is_reedy_fibration(const FsPremodelStructure& pm,
                                   const ReedyCategory& K,
                                   const DiagramMor& f) {
  return scan_reedy_class(pm, K, f, false, false);
}

ReedyClassCheck is_reedy_anodyne_fibration(const FsPremodelStructure& pm,
                                           const ReedyCategory& K,
                                           const DiagramMor& f) {
  return scan_reedy_class(pm, K, f, false, true);
}

ReedyProjReport check_reedy_eq_proj(const FsPremodelStructure& pm,
                                    const ReedyCategory& K,
                                    const std::vector<DiagramMor>& samples) {
  require_reedy(K);
  require(is_direct(K), "check_reedy_eq_proj: base is not direct");
  ReedyProjReport report;
  for (int i = 0; i < (int)samples.size(); ++i) {
    const DiagramMor& f = samples[i];
    bool reedy_fib = is_reedy_fibration(pm, K, f).ok;
    bool reedy_afib = is_reedy_anodyne_fibration(pm, K, f).ok;
    bool comp_fib = true, comp_afib = true;
    for (int x = 0; x < K.base->num_objects(); ++x) {
      comp_fib = comp_fib && fs_member(pm.fib, f.component[x]);
      comp_afib = comp_afib && fs_member(pm.afib, f.component[x]);
    }
    ++report.checked;
    if (reedy_fib != comp_fib || reedy_afib != comp_afib) {
      report.ok = false;
      if (report.first_mismatch < 0) report.first_mismatch = i;
    }
  }
  return report;
}

std::vector<PresheafMor> reedy_generators(const ReedyCategory& K,
                                          const std::vector<FinSetMor>& base) {
  require_reedy(K);
  for (const FinSetMor& i : base)
    require(fs_valid(i), "reedy_generators: invalid base generator");
  std::vector<PresheafMor> out;
  for (int k = 0; k < K.base->num_objects(); ++k) {
    BoundaryResult bd = boundary(*K.base, K.plus.member, k);
    for (const FinSetMor& i : base) out.push_back(pushout_product(bd.d, i));
  }
  return out;
}

}  // namespace finhom
