#include "finhom/premodel.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "finhom/quillen.hpp"

namespace finhom {

namespace {

// First morphism in the first family but not the second, or -1.
int first_excess(const MorphismFamily& sub, const MorphismFamily& super) {
  for (int m = 0; m < static_cast<int>(sub.member.size()); ++m) {
    if (sub.member[m] && !super.member[m]) return m;
  }
  return -1;
}

PremodelCheck premodel_failure(PremodelViolation v) {
  PremodelCheck check;
  check.violation = std::move(v);
  return check;
}

}  // namespace

PremodelCheck verify_premodel(const FiniteCategory& C, const MorphismFamily& cof,
                              const MorphismFamily& acof,
                              const MorphismFamily& fib,
                              const MorphismFamily& afib) {
  WfsCheck main_pair = verify_wfs(C, cof, afib);
  if (!main_pair.ok) {
    return premodel_failure({PremodelViolation::Part::CofAfibPair,
                             main_pair.violation, -1});
  }
  WfsCheck anodyne_pair = verify_wfs(C, acof, fib);
  if (!anodyne_pair.ok) {
    return premodel_failure({PremodelViolation::Part::AcofFibPair,
                             anodyne_pair.violation, -1});
  }

  const int acof_excess = first_excess(acof, cof);
  const int afib_excess = first_excess(afib, fib);
  // For verified WFS pairs, AC ⊆ C and AF ⊆ F are equivalent (right classes
  // reverse left-class inclusions); a mismatch cannot be a property of the
  // input.
  if ((acof_excess < 0) != (afib_excess < 0)) {
    throw std::logic_error(
        "nesting characterizations disagree on verified factorization systems");
  }
  if (acof_excess >= 0) {
    return premodel_failure(
        {PremodelViolation::Part::Nesting, std::nullopt, acof_excess});
  }

  PremodelCheck check;
  check.structure = PremodelStructure{&C, cof, acof, fib, afib};
  return check;
}

MorphismFamily weq_class(const PremodelStructure& pm) {
  const FiniteCategory& C = *pm.cat;
  const int n = C.num_morphisms();
  MorphismFamily weq{&C, std::vector<bool>(n, false)};
  for (int f = 0; f < n; ++f) {
    for (int b = 0; b < n && !weq.member[f]; ++b) {
      if (!pm.acof.contains(b) || C.morphisms[b].src != C.morphisms[f].src)
        continue;
      for (int a = 0; a < n; ++a) {
        if (!pm.afib.contains(a) || !C.composable(a, b)) continue;
        if (C.compose(a, b) == f) {
          weq.member[f] = true;
          break;
        }
      }
    }
  }
  return weq;
}

ModelCheck is_model(const PremodelStructure& pm) {
  MorphismFamily weq = weq_class(pm);

  ModelCheck check;
  if (auto triple = two_out_of_three(weq)) {
    check.violation =
        ModelViolation{ModelViolation::Kind::TwoOutOfThree, *triple, "", -1};
    return check;
  }
  const int n = static_cast<int>(weq.member.size());
  for (int m = 0; m < n; ++m) {
    if ((pm.cof.member[m] && weq.member[m]) != pm.acof.member[m]) {
      check.violation = ModelViolation{ModelViolation::Kind::ClassIdentity,
                                       {-1, -1, -1},
                                       "acof",
                                       m};
      return check;
    }
  }
  for (int m = 0; m < n; ++m) {
    if ((pm.fib.member[m] && weq.member[m]) != pm.afib.member[m]) {
      check.violation = ModelViolation{ModelViolation::Kind::ClassIdentity,
                                       {-1, -1, -1},
                                       "afib",
                                       m};
      return check;
    }
  }
  check.model = ModelStructure{pm, std::move(weq)};
  return check;
}

std::vector<PremodelStructure> enumerate_premodel(const FiniteCategory& C,
                                                  int jobs) {
  const std::vector<WeakFactorizationSystem> systems = enumerate_wfs(C, jobs);
  std::vector<PremodelStructure> out;
  for (const WeakFactorizationSystem& anodyne : systems) {
    for (const WeakFactorizationSystem& main : systems) {
      if (!wfs_leq(anodyne, main)) continue;
      out.push_back(PremodelStructure{&C, main.left, anodyne.left,
                                      anodyne.right, main.right});
    }
  }
  return out;
}

std::vector<ModelStructure> enumerate_model(const FiniteCategory& C, int jobs) {
  std::vector<ModelStructure> out;
  for (const PremodelStructure& pm : enumerate_premodel(C, jobs)) {
    ModelCheck check = is_model(pm);
    if (check.ok()) out.push_back(*check.model);
  }
  return out;
}

namespace {

bool family_subset(const MorphismFamily& a, const MorphismFamily& b) {
  for (size_t m = 0; m < a.member.size(); ++m) {
    if (a.member[m] && !b.member[m]) return false;
  }
  return true;
}

}  // namespace

StructurePoset model_poset(std::vector<ModelStructure> structures) {
  const size_t n = structures.size();
  for (const ModelStructure& s : structures) {
    if (s.premodel.cat != structures.front().premodel.cat) {
      throw std::invalid_argument(
          "all structures in a poset must share the ambient category");
    }
  }

  StructurePoset poset;
  poset.leq.assign(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      poset.leq[a][b] =
          family_subset(structures[a].premodel.cof, structures[b].premodel.cof) &&
          family_subset(structures[a].premodel.acof, structures[b].premodel.acof);
    }
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (a != b && poset.leq[a][b] && poset.leq[b][a]) {
        throw std::invalid_argument(
            "duplicate structures: the order is not antisymmetric");
      }
    }
  }
  poset.structures = std::move(structures);
  return poset;
}

MeetResult poset_meet(const StructurePoset& poset, int a, int b) {
  const int n = static_cast<int>(poset.structures.size());
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("structure index out of range");
  }

  std::vector<int> lower;
  for (int i = 0; i < n; ++i) {
    if (poset.leq[i][a] && poset.leq[i][b]) lower.push_back(i);
  }

  MeetResult result;
  for (int candidate : lower) {
    bool maximal = true;
    for (int other : lower) {
      if (other != candidate && poset.leq[candidate][other]) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.maximal_lower_bounds.push_back(candidate);
  }
  for (int candidate : lower) {
    bool dominates = true;
    for (int other : lower) {
      if (!poset.leq[other][candidate]) {
        dominates = false;
        break;
      }
    }
    if (dominates) {
      result.meet = candidate;
      break;
    }
  }
  return result;
}

namespace {

// Role decomposition of the 2×2 Boolean lattice: bottom, the two middle
// objects in index order, top.  Empty optional when C is not that lattice
// (up to object relabeling).
struct SquareRoles {
  int bottom, mid1, mid2, top;
};

std::optional<SquareRoles> detect_square(const FiniteCategory& C) {
  if (C.num_objects() != 4 || C.num_morphisms() != 9) return std::nullopt;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (C.hom(x, y).size() > 1) return std::nullopt;  // must be thin
    }
  }
  auto bottom = initial_object(C);
  auto top = terminal_object(C);
  if (!bottom || !top || *bottom == *top) return std::nullopt;
  std::vector<int> mids;
  for (int x = 0; x < 4; ++x) {
    if (x != *bottom && x != *top) mids.push_back(x);
  }
  // The middles must be incomparable; everything else follows from the
  // morphism count (4 identities + 5 relations).
  if (!C.hom(mids[0], mids[1]).empty() || !C.hom(mids[1], mids[0]).empty()) {
    return std::nullopt;
  }
  return SquareRoles{*bottom, mids[0], mids[1], *top};
}

// The four reference structures, transcribed as explicit class data in role
// coordinates.  Arrows: t = bottom→mid1, l = bottom→mid2, dg = bottom→top,
// r = mid1→top, bo = mid2→top.  Identities are implicit members of every
// class.
struct CornerData {
  const char* name;
  std::vector<std::pair<int, int>> cof, acof, fib, afib;  // role pairs
};

std::vector<CornerData> corner_table() {
  const std::pair<int, int> t{0, 1}, l{0, 2}, dg{0, 3}, r{1, 3}, bo{2, 3};
  std::vector<CornerData> corners;
  corners.push_back({"meet-candidate-left",
                     {bo},
                     {bo},
                     {t, l, dg, r},
                     {t, l, dg, r}});
  corners.push_back({"meet-candidate-right",
                     {t, bo},
                     {},
                     {t, l, dg, r, bo},
                     {l, r}});
  corners.push_back({"designated-left",
                     {t, l, dg, r, bo},
                     {bo},
                     {t, l, dg, r},
                     {}});
  corners.push_back({"designated-right",
                     {t, bo},
                     {t, bo},
                     {l, r},
                     {l, r}});
  return corners;
}

MorphismFamily family_from_role_pairs(
    const FiniteCategory& C, const SquareRoles& roles,
    const std::vector<std::pair<int, int>>& pairs) {
  const int role_obj[4] = {roles.bottom, roles.mid1, roles.mid2, roles.top};
  MorphismFamily F = family_identities(C);
  for (const auto& [src, dst] : pairs) {
    const std::vector<int> arrows = C.hom(role_obj[src], role_obj[dst]);
    if (arrows.size() != 1) {
      throw std::logic_error("role pair does not name a unique morphism");
    }
    F.member[arrows[0]] = true;
  }
  return F;
}

NoMeetsReport::Stage stage_fail(const std::string& name,
                                const std::string& detail) {
  return {name, false, detail};
}

NoMeetsReport::Stage stage_pass(const std::string& name,
                                const std::string& detail) {
  return {name, true, detail};
}

}  // namespace

NoMeetsReport verify_no_meets(const FiniteCategory& C) {
  NoMeetsReport report;
  auto abort_at = [&report](int stage) {
    report.ok = false;
    report.failed_stage = stage;
  };

  // Stage 1: transcribe the reference structures.
  std::optional<SquareRoles> roles = detect_square(C);
  report.is_square = roles.has_value();
  std::vector<PremodelStructure> corners;
  if (roles) {
    bool ok = true;
    std::string detail;
    for (const CornerData& data : corner_table()) {
      PremodelCheck check = verify_premodel(
          C, family_from_role_pairs(C, *roles, data.cof),
          family_from_role_pairs(C, *roles, data.acof),
          family_from_role_pairs(C, *roles, data.fib),
          family_from_role_pairs(C, *roles, data.afib));
      if (!check.ok()) {
        ok = false;
        detail = std::string(data.name) + " failed premodel verification";
        break;
      }
      corners.push_back(*check.structure);
    }
    report.stages.push_back(
        ok ? stage_pass("transcribe reference structures",
                        "4 structures transcribed and verified")
           : stage_fail("transcribe reference structures", detail));
    if (!ok) {
      abort_at(1);
      return report;
    }
  } else {
    report.stages.push_back(
        stage_pass("transcribe reference structures",
                   "not the 2x2 Boolean lattice; transcription skipped"));
  }

  // Stage 2: each transcription is a model structure.
  {
    bool ok = true;
    std::string detail = roles ? "4 model structures" : "nothing to check";
    for (const PremodelStructure& pm : corners) {
      ModelCheck check = is_model(pm);
      if (!check.ok()) {
        ok = false;
        detail = "a transcribed structure fails the model axioms";
        break;
      }
      report.corner_structures.push_back(*check.model);
    }
    report.stages.push_back(ok ? stage_pass("verify corner model structures", detail)
                               : stage_fail("verify corner model structures", detail));
    if (!ok) {
      abort_at(2);
      return report;
    }
  }

  // Stage 3: identity functors from each meet candidate to each designated
  // structure are left Quillen.
  {
    bool ok = true;
    std::string detail = roles ? "4 identity functors are left Quillen"
                               : "nothing to check";
    if (roles) {
      const Functor id = identity_functor(C);
      for (int lower : {0, 1}) {
        for (int upper : {2, 3}) {
          QuillenCheck check =
              is_left_quillen(id, report.corner_structures[lower].premodel,
                              report.corner_structures[upper].premodel);
          if (!check.ok) {
            ok = false;
            detail = "identity functor fails to be left Quillen";
            break;
          }
        }
        if (!ok) break;
      }
    }
    report.stages.push_back(ok ? stage_pass("check left Quillen identities", detail)
                               : stage_fail("check left Quillen identities", detail));
    if (!ok) {
      abort_at(3);
      return report;
    }
  }

  // Stage 4: enumerate all model structures.
  {
    std::vector<ModelStructure> models = enumerate_model(C);
    report.model_count = static_cast<int>(models.size());
    bool ok = !models.empty();
    report.stages.push_back(
        ok ? stage_pass("enumerate model structures",
                        std::to_string(models.size()) + " model structures")
           : stage_fail("enumerate model structures", "no model structures found"));
    if (!ok) {
      abort_at(4);
      return report;
    }
    report.poset = model_poset(std::move(models));
  }

  // Stage 5: meet analysis.
  {
    const int n = static_cast<int>(report.poset.structures.size());
    report.all_pairs_have_meets = true;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!poset_meet(report.poset, a, b).found()) {
          report.all_pairs_have_meets = false;
        }
      }
    }

    bool ok = true;
    std::string detail;
    if (roles) {
      for (int corner : {2, 3}) {
        for (int i = 0; i < n; ++i) {
          if (report.poset.structures[i] == report.corner_structures[corner]) {
            report.designated_pair[corner - 2] = i;
          }
        }
      }
      if (report.designated_pair[0] < 0 || report.designated_pair[1] < 0) {
        ok = false;
        detail = "designated structures not found in the enumeration";
      } else {
        MeetResult meet = poset_meet(report.poset, report.designated_pair[0],
                                     report.designated_pair[1]);
        report.designated_pair_has_meet = meet.found();
        report.designated_maximal_lower_bounds = meet.maximal_lower_bounds;
        ok = !meet.found();
        detail = ok ? "designated pair has no meet; " +
                          std::to_string(meet.maximal_lower_bounds.size()) +
                          " maximal lower bounds"
                    : "designated pair unexpectedly has a meet";
      }
    } else {
      detail = report.all_pairs_have_meets
                   ? "every pair of model structures has a meet"
                   : "some pair of model structures has no meet";
    }
    report.stages.push_back(ok ? stage_pass("meet analysis", detail)
                               : stage_fail("meet analysis", detail));
    if (!ok) {
      abort_at(5);
      return report;
    }
  }

  report.ok = true;
  return report;
}

namespace {

void require_adjunction(const Adjunction& adj) {
  if (auto err = check_adjunction(adj)) {
    throw std::invalid_argument("adjunction does not verify: " + *err);
  }
}

MorphismFamily preimage_family(const FiniteCategory& domain, const Functor& F,
                               const MorphismFamily& target_family) {
  MorphismFamily out{&domain, std::vector<bool>(domain.num_morphisms(), false)};
  for (int m = 0; m < domain.num_morphisms(); ++m) {
    out.member[m] = target_family.member[F.mor_map[m]];
  }
  return out;
}

TransferResult transfer_from_check(PremodelCheck check) {
  TransferResult result;
  result.structure = std::move(check.structure);
  result.violation = std::move(check.violation);
  return result;
}

}  // namespace

TransferResult transfer_right_induced(const Adjunction& adj,
                                      const PremodelStructure& pm) {
  require_adjunction(adj);
  if (pm.cat != adj.left.source) {
    throw std::invalid_argument(
        "structure must live on the source of the left adjoint");
  }
  const FiniteCategory& target = *adj.left.target;
  MorphismFamily fib = preimage_family(target, adj.right, pm.fib);
  MorphismFamily afib = preimage_family(target, adj.right, pm.afib);
  MorphismFamily cof = llp(afib);
  MorphismFamily acof = llp(fib);
  return transfer_from_check(verify_premodel(target, cof, acof, fib, afib));
}

TransferResult transfer_left_induced(const Adjunction& adj,
                                     const PremodelStructure& pm) {
  require_adjunction(adj);
  if (pm.cat != adj.left.target) {
    throw std::invalid_argument(
        "structure must live on the target of the left adjoint");
  }
  const FiniteCategory& source = *adj.left.source;
  MorphismFamily cof = preimage_family(source, adj.left, pm.cof);
  MorphismFamily acof = preimage_family(source, adj.left, pm.acof);
  MorphismFamily fib = rlp(acof);
  MorphismFamily afib = rlp(cof);
  return transfer_from_check(verify_premodel(source, cof, acof, fib, afib));
}

ProductStructureResult product_structure(
    const std::vector<PremodelStructure>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("product of no structures");
  }
  ProductStructureResult result;
  result.structure = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) {
    const PremodelStructure& lhs = result.structure;
    const PremodelStructure& rhs = factors[k];
    auto product = std::make_shared<FiniteCategory>(
        product_category(*lhs.cat, *rhs.cat));
    const int n2 = rhs.cat->num_morphisms();

    auto combine = [&](const MorphismFamily& a, const MorphismFamily& b) {
      MorphismFamily out{product.get(),
                         std::vector<bool>(product->num_morphisms(), false)};
      for (int m = 0; m < product->num_morphisms(); ++m) {
        out.member[m] = a.member[m / n2] && b.member[m % n2];
      }
      return out;
    };

    PremodelCheck check = verify_premodel(
        *product, combine(lhs.cof, rhs.cof), combine(lhs.acof, rhs.acof),
        combine(lhs.fib, rhs.fib), combine(lhs.afib, rhs.afib));
    if (!check.ok()) {
      throw std::logic_error(
          "componentwise product of premodel structures failed verification");
    }
    result.owned.push_back(std::move(product));
    result.structure = *check.structure;
  }
  return result;
}

namespace {

// The unique morphism from the initial object to x; requires an initial
// object and rejects non-cofibrant x.
int cofibrancy_witness(const PremodelStructure& pm, int x) {
  const FiniteCategory& C = *pm.cat;
  auto initial = initial_object(C);
  if (!initial) {
    throw std::invalid_argument(
        "cofibrancy requires an initial object in the ambient category");
  }
  const std::vector<int> arrows = C.hom(*initial, x);
  if (arrows.size() != 1) {
    throw std::logic_error("initial object without a unique arrow");
  }
  return arrows[0];
}

}  // namespace

CylinderResult find_anodyne_cylinder(const PremodelStructure& pm, int a) {
  const FiniteCategory& C = *pm.cat;
  if (a < 0 || a >= C.num_objects()) {
    throw std::invalid_argument("object index out of range");
  }
  if (!pm.cof.contains(cofibrancy_witness(pm, a))) {
    throw std::invalid_argument("cylinder search requires a cofibrant object");
  }

  // Coproduct a⊔a: first (object, injections) with the universal property.
  int cop = -1, iota0 = -1, iota1 = -1, fold = -1;
  for (int p = 0; p < C.num_objects() && cop < 0; ++p) {
    for (int i0 : C.hom(a, p)) {
      for (int i1 : C.hom(a, p)) {
        bool universal = true;
        int fold_here = -1;
        for (int z = 0; z < C.num_objects() && universal; ++z) {
          for (int f : C.hom(a, z)) {
            for (int g : C.hom(a, z)) {
              int mediating = -1;
              int count = 0;
              for (int u : C.hom(p, z)) {
                if (C.compose(u, i0) == f && C.compose(u, i1) == g) {
                  mediating = u;
                  ++count;
                }
              }
              if (count != 1) {
                universal = false;
                break;
              }
              if (z == a && f == C.identity[a] && g == C.identity[a]) {
                fold_here = mediating;
              }
            }
            if (!universal) break;
          }
        }
        if (universal) {
          cop = p;
          iota0 = i0;
          iota1 = i1;
          fold = fold_here;
          break;
        }
      }
      if (cop >= 0) break;
    }
  }
  if (cop < 0) {
    throw std::invalid_argument("the ambient category lacks the coproduct a+a");
  }

  CylinderResult result;
  for (int c = 0; c < C.num_objects(); ++c) {
    for (int i : C.hom(cop, c)) {
      if (!pm.cof.contains(i)) continue;
      if (!pm.acof.contains(C.compose(i, iota0))) continue;
      if (!pm.acof.contains(C.compose(i, iota1))) continue;
      for (int q : C.hom(c, a)) {
        if (C.compose(q, i) == fold) {
          result.found = true;
          result.object = c;
          result.include = i;
          result.project = q;
          return result;
        }
      }
    }
  }
  return result;
}

bool trivial_cof_by_criterion(const PremodelStructure& pm, int f) {
  const FiniteCategory& C = *pm.cat;
  if (f < 0 || f >= C.num_morphisms() || !pm.cof.contains(f)) {
    throw std::invalid_argument("expected a cofibration");
  }
  if (!pm.cof.contains(cofibrancy_witness(pm, C.morphisms[f].src))) {
    throw std::invalid_argument("expected a cofibrant source");
  }
  for (int g = 0; g < C.num_morphisms(); ++g) {
    if (C.morphisms[g].src != C.morphisms[f].dst) continue;
    if (!pm.acof.contains(g)) continue;
    if (pm.acof.contains(C.compose(g, f))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bounded counterparts on the category of finite sets.
// ---------------------------------------------------------------------------

FsPremodelStructure finset_premodel() {
  return {FinSetFamily{FinSetFamily::Tag::Mono, {}},
          FinSetFamily{FinSetFamily::Tag::Iso, {}},
          FinSetFamily{FinSetFamily::Tag::All, {}},
          FinSetFamily{FinSetFamily::Tag::Epi, {}}};
}

FsPremodelCheck verify_premodel_finset(const FsPremodelStructure& pm,
                                       int bound) {
  FsPremodelCheck check;
  check.record = {false, bound};

  FsWfsCheck main_pair = verify_wfs_finset(pm.cof, pm.afib, bound);
  if (!main_pair.ok) {
    check.violation = FsPremodelViolation{PremodelViolation::Part::CofAfibPair,
                                          main_pair.violation, std::nullopt};
    return check;
  }
  FsWfsCheck anodyne_pair = verify_wfs_finset(pm.acof, pm.fib, bound);
  if (!anodyne_pair.ok) {
    check.violation = FsPremodelViolation{PremodelViolation::Part::AcofFibPair,
                                          anodyne_pair.violation, std::nullopt};
    return check;
  }
  for (const FinSetMor& m : fs_all_morphisms(bound)) {
    if (fs_member(pm.acof, m) && !fs_member(pm.cof, m)) {
      check.violation = FsPremodelViolation{PremodelViolation::Part::Nesting,
                                            std::nullopt, m};
      return check;
    }
  }
  for (const FinSetMor& m : fs_all_morphisms(bound)) {
    if (fs_member(pm.afib, m) && !fs_member(pm.fib, m)) {
      check.violation = FsPremodelViolation{PremodelViolation::Part::Nesting,
                                            std::nullopt, m};
      return check;
    }
  }
  check.ok = true;
  return check;
}

bool fs_weq_member(const FsPremodelStructure& pm, const FinSetMor& f,
                   int bound) {
  return fs_factors_through(pm.acof, pm.afib, f, bound);
}

FsModelCheck is_model_finset(const FsPremodelStructure& pm, int bound) {
  FinSetFamily weq{FinSetFamily::Tag::Explicit, {}};
  for (const FinSetMor& m : fs_all_morphisms(bound)) {
    if (fs_weq_member(pm, m, bound)) weq.list.push_back(m);
  }

  FsModelCheck check;
  check.record = {false, bound};
  if (auto triple = fs_two_out_of_three(weq, bound)) {
    check.violation = FsModelViolation{ModelViolation::Kind::TwoOutOfThree,
                                       *triple, "", std::nullopt};
    return check;
  }
  for (const FinSetMor& m : fs_all_morphisms(bound)) {
    if ((fs_member(pm.cof, m) && fs_member(weq, m)) != fs_member(pm.acof, m)) {
      check.violation = FsModelViolation{
          ModelViolation::Kind::ClassIdentity, {}, "acof", m};
      return check;
    }
    if ((fs_member(pm.fib, m) && fs_member(weq, m)) != fs_member(pm.afib, m)) {
      check.violation = FsModelViolation{
          ModelViolation::Kind::ClassIdentity, {}, "afib", m};
      return check;
    }
  }
  check.ok = true;
  return check;
}

FsCylinderResult find_anodyne_cylinder_finset(const FsPremodelStructure& pm,
                                              int a_size, int bound) {
  if (a_size < 0) throw std::invalid_argument("negative object size");
  if (!fs_member(pm.cof, FinSetMor{0, a_size, {}})) {
    throw std::invalid_argument("cylinder search requires a cofibrant object");
  }

  const int doubled = 2 * a_size;
  FinSetMor iota0{a_size, doubled, {}}, iota1{a_size, doubled, {}};
  FinSetMor fold{doubled, a_size, {}};
  for (int x = 0; x < a_size; ++x) {
    iota0.map.push_back(x);
    iota1.map.push_back(a_size + x);
    fold.map.push_back(x);
  }
  for (int x = 0; x < a_size; ++x) fold.map.push_back(x);

  // Candidate tables for h are advanced in place (last position fastest,
  // matching the all_maps order) instead of materialised: at the default
  // bound the largest middle already has middle^doubled candidates.
  FsCylinderResult result;
  FinSetMor h{doubled, 0, {}};
  for (int middle = 0; middle <= bound; ++middle) {
    if (middle == 0 && doubled > 0) continue;  // no maps into the empty set
    h.dst = middle;
    h.map.assign(doubled, 0);
    while (true) {
      if (fs_member(pm.cof, h) && fs_member(pm.acof, fs_compose(h, iota0)) &&
          fs_member(pm.acof, fs_compose(h, iota1))) {
        for (const FinSetMor& q : all_maps(middle, a_size)) {
          if (fs_compose(q, h) == fold) {
            result.found = true;
            result.include = h;
            result.project = q;
            return result;
          }
        }
      }
      int i = doubled - 1;
      while (i >= 0 && h.map[i] == middle - 1) h.map[i--] = 0;
      if (i < 0) break;
      ++h.map[i];
    }
  }
  return result;
}

bool fs_trivial_cof_by_criterion(const FsPremodelStructure& pm,
                                 const FinSetMor& f, int bound) {
  if (!fs_member(pm.cof, f)) {
    throw std::invalid_argument("expected a cofibration");
  }
  if (!fs_member(pm.cof, FinSetMor{0, f.src, {}})) {
    throw std::invalid_argument("expected a cofibrant source");
  }
  for (int middle = 0; middle <= bound; ++middle) {
    for (const FinSetMor& g : all_maps(f.dst, middle)) {
      if (fs_member(pm.acof, g) && fs_member(pm.acof, fs_compose(g, f))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace finhom
