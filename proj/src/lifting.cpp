#include "finhom/lifting.hpp"

#include <algorithm>
#include <stdexcept>

namespace finhom {

int MorphismFamily::size() const {
  return (int)std::count(member.begin(), member.end(), true);
}

std::vector<int> MorphismFamily::ids() const {
  std::vector<int> out;
  for (int m = 0; m < (int)member.size(); ++m)
    if (member[m]) out.push_back(m);
  return out;
}

MorphismFamily family_from_ids(const FiniteCategory& C,
                               const std::vector<int>& ids) {
  MorphismFamily F{&C, std::vector<bool>(C.num_morphisms(), false)};
  for (int m : ids) {
    if (m < 0 || m >= C.num_morphisms())
      throw std::invalid_argument("family_from_ids: no such morphism");
    F.member[m] = true;
  }
  return F;
}

MorphismFamily family_all(const FiniteCategory& C) {
  return {&C, std::vector<bool>(C.num_morphisms(), true)};
}

MorphismFamily family_isos(const FiniteCategory& C) {
  MorphismFamily F{&C, std::vector<bool>(C.num_morphisms(), false)};
  for (int m : iso_morphisms(C)) F.member[m] = true;
  return F;
}

MorphismFamily family_identities(const FiniteCategory& C) {
  MorphismFamily F{&C, std::vector<bool>(C.num_morphisms(), false)};
  for (int id : C.identity) F.member[id] = true;
  return F;
}

LiftWitness has_lift(const FiniteCategory& C, int i, int p, int top,
                     int bottom) {
  int a = C.morphisms[i].src, b = C.morphisms[i].dst;
  int x = C.morphisms[p].src, y = C.morphisms[p].dst;
  if (C.morphisms[top].src != a || C.morphisms[top].dst != x ||
      C.morphisms[bottom].src != b || C.morphisms[bottom].dst != y)
    throw std::invalid_argument("has_lift: sides do not form a square");
  if (C.table[p][top] != C.table[bottom][i])
    throw std::invalid_argument("has_lift: square does not commute");
  LiftWitness w{i, p, top, bottom, false, std::nullopt};
  for (int l : C.hom(b, x))
    if (C.table[l][i] == top && C.table[p][l] == bottom) {
      w.liftable = true;
      w.filler = l;
      break;
    }
  return w;
}

bool lifts_against(const FiniteCategory& C, int i, int p) {
  int a = C.morphisms[i].src, b = C.morphisms[i].dst;
  int x = C.morphisms[p].src, y = C.morphisms[p].dst;
  for (int top : C.hom(a, x))
    for (int bottom : C.hom(b, y)) {
      if (C.table[p][top] != C.table[bottom][i]) continue;
      if (!has_lift(C, i, p, top, bottom).liftable) return false;
    }
  return true;
}

MorphismFamily llp(const MorphismFamily& R) {
  const FiniteCategory& C = *R.cat;
  MorphismFamily L{&C, std::vector<bool>(C.num_morphisms(), true)};
  for (int i = 0; i < C.num_morphisms(); ++i)
    for (int p = 0; p < C.num_morphisms() && L.member[i]; ++p)
      if (R.member[p] && !lifts_against(C, i, p)) L.member[i] = false;
  return L;
}

MorphismFamily rlp(const MorphismFamily& L) {
  const FiniteCategory& C = *L.cat;
  MorphismFamily R{&C, std::vector<bool>(C.num_morphisms(), true)};
  for (int p = 0; p < C.num_morphisms(); ++p)
    for (int i = 0; i < C.num_morphisms() && R.member[p]; ++i)
      if (L.member[i] && !lifts_against(C, i, p)) R.member[p] = false;
  return R;
}

bool is_retract_of(const FiniteCategory& C, int f, int g) {
  int af = C.morphisms[f].src, bf = C.morphisms[f].dst;
  int ag = C.morphisms[g].src, bg = C.morphisms[g].dst;
  for (int s1 : C.hom(af, ag))
    for (int r1 : C.hom(ag, af)) {
      if (C.table[r1][s1] != C.identity[af]) continue;
      for (int s2 : C.hom(bf, bg)) {
        if (C.table[g][s1] != C.table[s2][f]) continue;
        for (int r2 : C.hom(bg, bf)) {
          if (C.table[r2][s2] != C.identity[bf]) continue;
          if (C.table[f][r1] == C.table[r2][g]) return true;
        }
      }
    }
  return false;
}

std::optional<std::pair<int, int>> retract_closed(const MorphismFamily& F) {
  const FiniteCategory& C = *F.cat;
  for (int f = 0; f < C.num_morphisms(); ++f) {
    if (F.member[f]) continue;
    for (int g = 0; g < C.num_morphisms(); ++g)
      if (F.member[g] && is_retract_of(C, f, g))
        return std::make_pair(f, g);
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> two_out_of_three(const MorphismFamily& W) {
  const FiniteCategory& C = *W.cat;
  for (int f = 0; f < C.num_morphisms(); ++f)
    for (int g = 0; g < C.num_morphisms(); ++g) {
      int gf = C.composable(g, f) ? C.table[g][f] : -1;
      if (gf == -1) continue;
      int count = W.member[f] + W.member[g] + W.member[gf];
      if (count == 2) return std::array<int, 3>{f, g, gf};
    }
  return std::nullopt;
}

std::optional<std::array<int, 4>> two_out_of_six(const MorphismFamily& W) {
  const FiniteCategory& C = *W.cat;
  for (int f = 0; f < C.num_morphisms(); ++f)
    for (int g = 0; g < C.num_morphisms(); ++g) {
      if (!C.composable(g, f)) continue;
      int gf = C.table[g][f];
      for (int h = 0; h < C.num_morphisms(); ++h) {
        if (!C.composable(h, g)) continue;
        int hg = C.table[h][g];
        if (!W.member[gf] || !W.member[hg]) continue;
        int hgf = C.table[h][gf];
        for (int culprit : {f, g, h, hgf})
          if (!W.member[culprit])
            return std::array<int, 4>{f, g, h, culprit};
      }
    }
  return std::nullopt;
}

bool composition_closed(const MorphismFamily& F) {
  const FiniteCategory& C = *F.cat;
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f)
      if (C.composable(g, f) && F.member[g] && F.member[f] &&
          !F.member[C.table[g][f]])
        return false;
  return true;
}

bool contains_isos(const MorphismFamily& F) {
  for (int m : iso_morphisms(*F.cat))
    if (!F.member[m]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Bounded FinSet fragment.
// ---------------------------------------------------------------------------

bool fs_member(const FinSetFamily& F, const FinSetMor& m) {
  switch (F.tag) {
    case FinSetFamily::Tag::Mono:
      return is_mono(m);
    case FinSetFamily::Tag::Epi:
      return is_epi(m);
    case FinSetFamily::Tag::Iso:
      return is_iso(m);
    case FinSetFamily::Tag::All:
      return true;
    case FinSetFamily::Tag::Explicit:
      return std::find(F.list.begin(), F.list.end(), m) != F.list.end();
  }
  return false;
}

FsLiftWitness fs_has_lift(const FinSetMor& i, const FinSetMor& p,
                          const FinSetMor& top, const FinSetMor& bottom) {
  if (!fs_valid(i) || !fs_valid(p) || !fs_valid(top) || !fs_valid(bottom) ||
      top.src != i.src || top.dst != p.src || bottom.src != i.dst ||
      bottom.dst != p.dst)
    throw std::invalid_argument("fs_has_lift: sides do not form a square");
  if (!(fs_compose(p, top) == fs_compose(bottom, i)))
    throw std::invalid_argument("fs_has_lift: square does not commute");
  FsLiftWitness w{i, p, top, bottom, false, std::nullopt};
  // Build the table-lexicographically first filler directly: forced on the
  // image of i, minimal preimage elsewhere.
  FinSetMor l{i.dst, p.src, std::vector<int>(i.dst, -1)};
  for (int a = 0; a < i.src; ++a) {
    int b = i.map[a];
    if (l.map[b] != -1 && l.map[b] != top.map[a]) return w;  // inconsistent
    l.map[b] = top.map[a];
  }
  for (int b = 0; b < i.dst; ++b) {
    if (l.map[b] != -1) {
      if (p.map[l.map[b]] != bottom.map[b]) return w;  // p misses bottom
      continue;
    }
    int pick = -1;
    for (int v = 0; v < p.src; ++v)
      if (p.map[v] == bottom.map[b]) {
        pick = v;
        break;
      }
    if (pick == -1) return w;
    l.map[b] = pick;
  }
  w.liftable = true;
  w.filler = std::move(l);
  return w;
}

bool fs_lifts_against(const FinSetMor& i, const FinSetMor& p) {
  return (is_mono(i) || is_mono(p)) &&
         (is_epi(i) || is_epi(p) || (i.src > 0 && p.src == 0));
}

std::vector<FinSetMor> fs_all_morphisms(int bound) {
  std::vector<FinSetMor> out;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (FinSetMor& m : all_maps(a, b)) out.push_back(std::move(m));
  return out;
}

BoundedBool fs_in_llp(const FinSetMor& i, const FinSetFamily& R, int bound) {
  if (R.tag == FinSetFamily::Tag::Explicit) {
    for (const FinSetMor& p : R.list)
      if (!fs_lifts_against(i, p)) return {false, false};
    return {true, false};
  }
  for (const FinSetMor& p : fs_all_morphisms(bound))
    if (fs_member(R, p) && !fs_lifts_against(i, p)) return {false, true};
  return {true, true};
}

BoundedBool fs_in_rlp(const FinSetMor& p, const FinSetFamily& L, int bound) {
  if (L.tag == FinSetFamily::Tag::Explicit) {
    for (const FinSetMor& i : L.list)
      if (!fs_lifts_against(i, p)) return {false, false};
    return {true, false};
  }
  for (const FinSetMor& i : fs_all_morphisms(bound))
    if (fs_member(L, i) && !fs_lifts_against(i, p)) return {false, true};
  return {true, true};
}

bool fs_is_retract_of(const FinSetMor& f, const FinSetMor& g) {
  // Same search space as the naive quadruple scan, with the candidate
  // tables built once and every condition checked as table lookups; a
  // section s1 must be injective, so the rest of the nest is skipped for
  // the other candidates.
  const std::vector<FinSetMor> s1s = all_maps(f.src, g.src);
  const std::vector<FinSetMor> r1s = all_maps(g.src, f.src);
  const std::vector<FinSetMor> s2s = all_maps(f.dst, g.dst);
  const std::vector<FinSetMor> r2s = all_maps(g.dst, f.dst);
  auto section = [](const FinSetMor& r, const FinSetMor& s) {
    for (int x = 0; x < s.src; ++x)
      if (r.map[s.map[x]] != x) return false;
    return true;
  };
  for (const FinSetMor& s1 : s1s) {
    if (!is_mono(s1)) continue;
    for (const FinSetMor& r1 : r1s) {
      if (!section(r1, s1)) continue;
      for (const FinSetMor& s2 : s2s) {
        bool commutes = true;
        for (int x = 0; x < f.src && commutes; ++x)
          commutes = (g.map[s1.map[x]] == s2.map[f.map[x]]);
        if (!commutes) continue;
        for (const FinSetMor& r2 : r2s) {
          if (!section(r2, s2)) continue;
          bool lower = true;
          for (int z = 0; z < g.src && lower; ++z)
            lower = (f.map[r1.map[z]] == r2.map[g.map[z]]);
          if (lower) return true;
        }
      }
    }
  }
  return false;
}

std::optional<std::pair<FinSetMor, FinSetMor>> fs_retract_closed(
    const FinSetFamily& F, int bound) {
  std::vector<FinSetMor> all = fs_all_morphisms(bound);
  for (const FinSetMor& f : all) {
    if (fs_member(F, f)) continue;
    for (const FinSetMor& g : all)
      if (fs_member(F, g) && fs_is_retract_of(f, g))
        return std::make_pair(f, g);
  }
  return std::nullopt;
}

std::optional<std::array<FinSetMor, 3>> fs_two_out_of_three(
    const FinSetFamily& W, int bound) {
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (const FinSetMor& f : all_maps(a, b))
          for (const FinSetMor& g : all_maps(b, c)) {
            FinSetMor gf = fs_compose(g, f);
            int count = fs_member(W, f) + fs_member(W, g) + fs_member(W, gf);
            if (count == 2) return std::array<FinSetMor, 3>{f, g, gf};
          }
  return std::nullopt;
}

std::optional<std::array<FinSetMor, 4>> fs_two_out_of_six(
    const FinSetFamily& W, int bound) {
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (int d = 0; d <= bound; ++d)
          for (const FinSetMor& f : all_maps(a, b))
            for (const FinSetMor& g : all_maps(b, c)) {
              FinSetMor gf = fs_compose(g, f);
              if (!fs_member(W, gf)) continue;
              for (const FinSetMor& h : all_maps(c, d)) {
                if (!fs_member(W, fs_compose(h, g))) continue;
                const FinSetMor hgf = fs_compose(h, gf);
                for (const FinSetMor* culprit :
                     std::initializer_list<const FinSetMor*>{&f, &g, &h, &hgf})
                  if (!fs_member(W, *culprit))
                    return std::array<FinSetMor, 4>{f, g, h, *culprit};
              }
            }
  return std::nullopt;
}

bool fs_composition_closed(const FinSetFamily& F, int bound) {
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b)
      for (int c = 0; c <= bound; ++c)
        for (const FinSetMor& f : all_maps(a, b)) {
          if (!fs_member(F, f)) continue;
          for (const FinSetMor& g : all_maps(b, c))
            if (fs_member(F, g) && !fs_member(F, fs_compose(g, f)))
              return false;
        }
  return true;
}

bool fs_contains_isos(const FinSetFamily& F, int bound) {
  for (const FinSetMor& m : fs_all_morphisms(bound))
    if (is_iso(m) && !fs_member(F, m)) return false;
  return true;
}

}  // namespace finhom
