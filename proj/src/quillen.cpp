#include "finhom/quillen.hpp"

#include <stdexcept>

namespace finhom {

namespace {

void require_functor_between(const Functor& F, const FiniteCategory* source,
                             const FiniteCategory* target) {
  if (F.source != source || F.target != target) {
    throw std::invalid_argument(
        "functor endpoints do not match the structure categories");
  }
  if (check_functor(F)) {
    throw std::invalid_argument("not a functor");
  }
}

QuillenCheck preservation_check(const Functor& F, const MorphismFamily& from,
                                const MorphismFamily& to,
                                const std::string& cls) {
  QuillenCheck check;
  for (int m = 0; m < static_cast<int>(from.member.size()); ++m) {
    if (from.member[m] && !to.member[F.mor_map[m]]) {
      check.witness = m;
      check.cls = cls;
      return check;
    }
  }
  check.ok = true;
  return check;
}

}  // namespace

QuillenCheck is_left_quillen(const Functor& F, const PremodelStructure& pmM,
                             const PremodelStructure& pmN) {
  require_functor_between(F, pmM.cat, pmN.cat);
  QuillenCheck cof = preservation_check(F, pmM.cof, pmN.cof, "cof");
  if (!cof.ok) return cof;
  return preservation_check(F, pmM.acof, pmN.acof, "acof");
}

QuillenCheck is_right_quillen(const Functor& G, const PremodelStructure& pmN,
                              const PremodelStructure& pmM) {
  require_functor_between(G, pmN.cat, pmM.cat);
  QuillenCheck fib = preservation_check(G, pmN.fib, pmM.fib, "fib");
  if (!fib.ok) return fib;
  return preservation_check(G, pmN.afib, pmM.afib, "afib");
}

QuillenAdjunctionReport quillen_adjunction_equivalence(
    const Adjunction& adj, const PremodelStructure& pmM,
    const PremodelStructure& pmN) {
  if (auto err = check_adjunction(adj)) {
    throw std::invalid_argument("adjunction does not verify: " + *err);
  }
  if (pmM.cat != adj.left.source || pmN.cat != adj.left.target) {
    throw std::invalid_argument(
        "structures do not live on the adjunction endpoints");
  }

  QuillenAdjunctionReport report;
  report.left_detail = is_left_quillen(adj.left, pmM, pmN);
  report.right_detail = is_right_quillen(adj.right, pmN, pmM);
  report.left_ok = report.left_detail.ok;
  report.right_ok = report.right_detail.ok;
  if (report.left_ok != report.right_ok) {
    throw std::logic_error(
        "left and right Quillen verdicts disagree for an adjoint pair");
  }
  return report;
}

BifunctorCheck is_quillen_bifunctor_on_generators(
    const std::vector<FinSetMor>& I1, const std::vector<FinSetMor>& J1,
    const std::vector<FinSetMor>& I2, const std::vector<FinSetMor>& J2,
    const FsPremodelStructure& pmN) {
  BifunctorCheck check;
  auto scan = [&check, &pmN](const std::vector<FinSetMor>& lhs,
                             const std::vector<FinSetMor>& rhs,
                             const FinSetFamily& required,
                             const char* which) {
    for (const FinSetMor& a : lhs) {
      for (const FinSetMor& b : rhs) {
        if (!fs_member(required, pushout_product(a, b))) {
          check.witness = {a, b};
          check.which = which;
          return false;
        }
      }
    }
    return true;
  };
  if (!scan(I1, I2, pmN.cof, "cof")) return check;
  if (!scan(J1, I2, pmN.acof, "acof")) return check;
  if (!scan(I1, J2, pmN.acof, "acof")) return check;
  check.ok = true;
  return check;
}

namespace {

// Product of maps in the index encoding (x, y) -> x*|B| + y.
FinSetMor map_product(const FinSetMor& f, const FinSetMor& g) {
  FinSetMor out{f.src * g.src, f.dst * g.dst, {}};
  out.map.reserve(out.src);
  for (int x = 0; x < f.src; ++x) {
    for (int y = 0; y < g.src; ++y) {
      out.map.push_back(f.map[x] * g.dst + g.map[y]);
    }
  }
  return out;
}

}  // namespace

MonoidalReport check_monoidal_finset() {
  const FsPremodelStructure pm = finset_premodel();

  MonoidalReport report;
  report.unit_cofibrant = fs_member(pm.cof, FinSetMor{0, 1, {}});

  // In the index encoding the associator is an identity, so associativity of
  // the product bifunctor is literal equality of composites.
  report.associator_ok = true;
  const std::vector<FinSetMor> sample = fs_all_morphisms(3);
  for (const FinSetMor& f : sample) {
    for (const FinSetMor& g : sample) {
      for (const FinSetMor& h : sample) {
        if (map_product(map_product(f, g), h) !=
            map_product(f, map_product(g, h))) {
          report.associator_ok = false;
        }
      }
    }
  }

  const std::vector<FinSetMor> generators{FinSetMor{0, 1, {}}};
  report.bifunctor =
      is_quillen_bifunctor_on_generators(generators, {}, generators, {}, pm);

  report.ok =
      report.unit_cofibrant && report.associator_ok && report.bifunctor.ok;
  return report;
}

bool cat_rlp_essurj(const Functor& P) {
  if (check_functor(P)) {
    throw std::invalid_argument("not a functor");
  }
  return is_essentially_surjective(P);
}

namespace {

// Shared scan: for every x in `objects` and every g out of image(x) with g
// in `targets`, find f out of x in `sources` and an isomorphism closing the
// triangle.
ExtensionCheck extension_scan(const Functor& P, const std::vector<int>& objects,
                              const MorphismFamily* sources,
                              const MorphismFamily* targets) {
  const FiniteCategory& M = *P.source;
  const FiniteCategory& N = *P.target;
  ExtensionCheck check;
  for (int x : objects) {
    for (int g = 0; g < N.num_morphisms(); ++g) {
      if (N.morphisms[g].src != P.obj_map[x]) continue;
      if (targets && !targets->contains(g)) continue;
      const int y = N.morphisms[g].dst;
      bool solved = false;
      for (int f = 0; f < M.num_morphisms() && !solved; ++f) {
        if (M.morphisms[f].src != x) continue;
        if (sources && !sources->contains(f)) continue;
        for (int psi : N.hom(P.obj_map[M.morphisms[f].dst], y)) {
          if (is_iso(N, psi) && N.compose(psi, P.mor_map[f]) == g) {
            solved = true;
            break;
          }
        }
      }
      if (!solved) {
        check.object = x;
        check.morphism = g;
        return check;
      }
    }
  }
  check.ok = true;
  return check;
}

}  // namespace

ExtensionCheck cat_rlp_extension(const Functor& P) {
  if (check_functor(P)) {
    throw std::invalid_argument("not a functor");
  }
  std::vector<int> objects(P.source->num_objects());
  for (int x = 0; x < P.source->num_objects(); ++x) objects[x] = x;
  return extension_scan(P, objects, nullptr, nullptr);
}

ExtensibleCheck is_extensible(const Functor& F, const PremodelStructure& pmM,
                              const PremodelStructure& pmN) {
  QuillenCheck quillen = is_left_quillen(F, pmM, pmN);
  if (!quillen.ok) {
    throw std::invalid_argument("functor is not left Quillen");
  }
  const FiniteCategory& M = *pmM.cat;
  auto initial = initial_object(M);
  if (!initial) {
    throw std::invalid_argument(
        "extensibility requires an initial object in the source category");
  }

  std::vector<int> cofibrant;
  for (int x = 0; x < M.num_objects(); ++x) {
    const std::vector<int> arrows = M.hom(*initial, x);
    if (arrows.size() == 1 && pmM.cof.contains(arrows[0])) {
      cofibrant.push_back(x);
    }
  }

  ExtensionCheck scan = extension_scan(F, cofibrant, &pmM.cof, &pmN.cof);
  return ExtensibleCheck{scan.ok, scan.object, scan.morphism};
}

}  // namespace finhom
