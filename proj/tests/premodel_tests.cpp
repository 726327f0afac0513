#include "finhom/premodel.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finhom/quillen.hpp"

using namespace finhom;

namespace {

std::vector<std::vector<bool>> chain_leq(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return leq;
}

FiniteCategory point_cat() { return poset_category(chain_leq(1), {"*"}); }

FiniteCategory interval_cat() {
  return poset_category(chain_leq(2), {"0", "1"});
}

FiniteCategory chain2_cat() {
  return poset_category(chain_leq(3), {"0", "1", "2"});
}

FiniteCategory chain_cat(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return poset_category(chain_leq(n), names);
}

FiniteCategory square_cat(std::vector<std::string> names = {"00", "01", "10",
                                                            "11"}) {
  auto bit = [](const std::string& s, int i) { return s[i] - '0'; };
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      leq[x][y] = bit(names[x], 0) <= bit(names[y], 0) &&
                  bit(names[x], 1) <= bit(names[y], 1);
  return poset_category(leq, names);
}

FiniteCategory discrete_cat(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    leq[i][i] = true;
    names.push_back(std::to_string(i));
  }
  return poset_category(leq, names);
}

// Two objects with two parallel non-identity arrows a -> b; has no
// coproduct a + a.
FiniteCategory parallel_pair_cat() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{0, "a", "a"}, {1, "b", "b"}, {2, "a", "b"}, {3, "a", "b"}};
  raw.identities = {{"a", 0}, {"b", 1}};
  raw.compose = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}, {3, 0, 3},
                 {1, 3, 3}};
  auto r = validate_category(raw);
  REQUIRE(r.ok());
  return *r.category;
}

int obj_index(const FiniteCategory& C, const std::string& name) {
  for (int x = 0; x < C.num_objects(); ++x) {
    if (C.objects[x] == name) return x;
  }
  FAIL("no object named " + name);
  return -1;
}

int mor_id(const FiniteCategory& C, const std::string& src,
           const std::string& dst) {
  const std::vector<int> arrows = C.hom(obj_index(C, src), obj_index(C, dst));
  REQUIRE(arrows.size() == 1);
  return arrows[0];
}

using NamePair = std::pair<std::string, std::string>;
using NamedClass = std::set<NamePair>;

// Identities plus the named non-identity morphisms.
MorphismFamily family_from_pairs(const FiniteCategory& C,
                                 const std::vector<NamePair>& pairs) {
  MorphismFamily F = family_identities(C);
  for (const auto& [src, dst] : pairs) F.member[mor_id(C, src, dst)] = true;
  return F;
}

NamedClass named_class(const FiniteCategory& C, const MorphismFamily& F) {
  NamedClass out;
  for (int m : F.ids()) {
    out.insert({C.objects[C.morphisms[m].src], C.objects[C.morphisms[m].dst]});
  }
  return out;
}

using NamedModel = std::map<std::string, NamedClass>;

NamedModel named_model(const ModelStructure& s) {
  const FiniteCategory& C = *s.premodel.cat;
  return {{"C", named_class(C, s.premodel.cof)},
          {"AC", named_class(C, s.premodel.acof)},
          {"F", named_class(C, s.premodel.fib)},
          {"AF", named_class(C, s.premodel.afib)},
          {"W", named_class(C, s.weq)}};
}

NamedClass parse_class(const nlohmann::json& j) {
  NamedClass out;
  for (const auto& pair : j) {
    out.insert({pair.at(0).get<std::string>(), pair.at(1).get<std::string>()});
  }
  return out;
}

NamedModel parse_model(const nlohmann::json& j) {
  NamedModel out;
  for (const char* key : {"C", "AC", "F", "AF", "W"}) {
    out[key] = parse_class(j.at(key));
  }
  return out;
}

nlohmann::json load_golden(const std::string& file) {
  std::ifstream in(std::string(FINHOM_DATA_DIR) + "/golden/" + file);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  return j;
}

// The four reference structures on the square used throughout: the two meet
// candidates and the designated pair.
struct SquareCorners {
  PremodelStructure tl, tr, bl, br;
};

SquareCorners square_corners(const FiniteCategory& C) {
  const NamePair t{"00", "01"}, l{"00", "10"}, dg{"00", "11"}, r{"01", "11"},
      bo{"10", "11"};
  const std::vector<NamePair> all{t, l, dg, r, bo};
  const std::vector<NamePair> no_bo{t, l, dg, r};

  auto build = [&C](const std::vector<NamePair>& cof,
                    const std::vector<NamePair>& acof,
                    const std::vector<NamePair>& fib,
                    const std::vector<NamePair>& afib) {
    PremodelCheck check = verify_premodel(
        C, family_from_pairs(C, cof), family_from_pairs(C, acof),
        family_from_pairs(C, fib), family_from_pairs(C, afib));
    REQUIRE(check.ok());
    return *check.structure;
  };

  SquareCorners corners;
  corners.tl = build({bo}, {bo}, no_bo, no_bo);
  corners.tr = build({t, bo}, {}, all, {l, r});
  corners.bl = build(all, {bo}, no_bo, {});
  corners.br = build({t, bo}, {t, bo}, {l, r}, {l, r});
  return corners;
}

}  // namespace

TEST_CASE("premodel verification accepts the reference square structures") {
  FiniteCategory C = square_cat();
  SquareCorners corners = square_corners(C);

  CHECK(named_class(C, corners.tl.cof) ==
        NamedClass{{"00", "00"}, {"01", "01"}, {"10", "10"}, {"10", "11"},
                   {"11", "11"}});
  CHECK(corners.tl.cof == corners.tl.acof);
  CHECK(corners.br.fib == corners.br.afib);
  CHECK(named_class(C, corners.tr.fib).size() == 9);
  CHECK(named_class(C, corners.bl.afib).size() == 4);
}

TEST_CASE("premodel verification reports the failing part") {
  FiniteCategory C = interval_cat();
  MorphismFamily ids = family_identities(C);
  MorphismFamily all = family_all(C);
  const int arrow = mor_id(C, "0", "1");

  SECTION("main pair broken") {
    PremodelCheck check = verify_premodel(C, ids, ids, all, ids);
    REQUIRE_FALSE(check.ok());
    CHECK(check.violation->part == PremodelViolation::Part::CofAfibPair);
    REQUIRE(check.violation->wfs.has_value());
    CHECK(check.violation->wfs->kind == WfsViolation::Kind::LeftClosure);
    CHECK(check.violation->wfs->morphism == arrow);
  }

  SECTION("anodyne pair broken") {
    PremodelCheck check = verify_premodel(C, all, ids, ids, ids);
    REQUIRE_FALSE(check.ok());
    CHECK(check.violation->part == PremodelViolation::Part::AcofFibPair);
    REQUIRE(check.violation->wfs.has_value());
    CHECK(check.violation->wfs->kind == WfsViolation::Kind::LeftClosure);
    CHECK(check.violation->wfs->morphism == arrow);
  }

  SECTION("nesting broken") {
    // (C, AF) = (isos, all) and (AC, F) = (all, isos) are both weak
    // factorization systems, but AC is not contained in C.
    PremodelCheck check = verify_premodel(C, ids, all, ids, all);
    REQUIRE_FALSE(check.ok());
    CHECK(check.violation->part == PremodelViolation::Part::Nesting);
    CHECK_FALSE(check.violation->wfs.has_value());
    CHECK(check.violation->morphism == arrow);
  }

  SECTION("wrong-size family") {
    MorphismFamily bad{&C, std::vector<bool>(2, true)};
    CHECK_THROWS_AS(verify_premodel(C, bad, ids, all, ids),
                    std::invalid_argument);
  }
}

TEST_CASE("weak equivalences are the anodyne composites") {
  FiniteCategory C = square_cat();
  SquareCorners corners = square_corners(C);

  CHECK(named_class(C, weq_class(corners.bl)) ==
        NamedClass{{"00", "00"}, {"01", "01"}, {"10", "10"}, {"10", "11"},
                   {"11", "11"}});
  CHECK(weq_class(corners.br) == family_all(C));
  CHECK(weq_class(corners.tl) == family_all(C));
  CHECK(named_class(C, weq_class(corners.tr)) ==
        NamedClass{{"00", "00"}, {"00", "10"}, {"01", "01"}, {"01", "11"},
                   {"10", "10"}, {"11", "11"}});

  for (const PremodelStructure& pm :
       {corners.tl, corners.tr, corners.bl, corners.br}) {
    CHECK(is_model(pm).ok());
  }
}

TEST_CASE("a premodel failing two-out-of-three is rejected") {
  FiniteCategory C = chain2_cat();
  // AC = {ids, 1->2}, F = {ids, 0->1, 0->2}, C = {ids, 0->2, 1->2},
  // AF = {ids, 0->1}: a premodel whose anodyne composites are
  // {ids, 0->1, 1->2}, which is not closed under composition.
  PremodelCheck check = verify_premodel(
      C, family_from_pairs(C, {{"0", "2"}, {"1", "2"}}),
      family_from_pairs(C, {{"1", "2"}}),
      family_from_pairs(C, {{"0", "1"}, {"0", "2"}}),
      family_from_pairs(C, {{"0", "1"}}));
  REQUIRE(check.ok());

  ModelCheck model = is_model(*check.structure);
  REQUIRE_FALSE(model.ok());
  REQUIRE(model.violation.has_value());
  CHECK(model.violation->kind == ModelViolation::Kind::TwoOutOfThree);
  CHECK(model.violation->triple ==
        std::array<int, 3>{mor_id(C, "0", "1"), mor_id(C, "1", "2"),
                           mor_id(C, "0", "2")});
}

TEST_CASE("model rejection witnesses are internally consistent") {
  FiniteCategory C = square_cat();
  int rejected = 0;
  for (const PremodelStructure& pm : enumerate_premodel(C)) {
    ModelCheck check = is_model(pm);
    if (check.ok()) continue;
    ++rejected;
    REQUIRE(check.violation.has_value());
    MorphismFamily weq = weq_class(pm);
    if (check.violation->kind == ModelViolation::Kind::TwoOutOfThree) {
      const auto& [f, g, gf] = check.violation->triple;
      REQUIRE(C.composable(g, f));
      CHECK(C.compose(g, f) == gf);
      const int members = static_cast<int>(weq.contains(f)) +
                          static_cast<int>(weq.contains(g)) +
                          static_cast<int>(weq.contains(gf));
      CHECK(members == 2);
    } else {
      const int m = check.violation->morphism;
      if (check.violation->cls == "acof") {
        CHECK((pm.cof.contains(m) && weq.contains(m)) != pm.acof.contains(m));
      } else {
        REQUIRE(check.violation->cls == "afib");
        CHECK((pm.fib.contains(m) && weq.contains(m)) != pm.afib.contains(m));
      }
    }
  }
  CHECK(rejected == 44 - 23);
}

TEST_CASE("premodel and model counts match the recorded values") {
  nlohmann::json golden = load_golden("structure_counts.json");
  const std::vector<std::pair<std::string, FiniteCategory>> cases = {
      {"point", point_cat()},
      {"interval", interval_cat()},
      {"chain2", chain2_cat()},
      {"square", square_cat()}};

  for (const auto& [name, C] : cases) {
    INFO("category " << name);
    const nlohmann::json& entry = golden.at("categories").at(name);
    std::vector<PremodelStructure> premodels = enumerate_premodel(C);
    std::vector<ModelStructure> models = enumerate_model(C);
    CHECK(static_cast<int>(premodels.size()) == entry.at("premodel").get<int>());
    CHECK(static_cast<int>(models.size()) == entry.at("model").get<int>());

    // Independent pair count straight from the enumerated systems.
    std::vector<WeakFactorizationSystem> systems = enumerate_wfs(C);
    int pairs = 0;
    for (const auto& w1 : systems) {
      for (const auto& w2 : systems) {
        if (wfs_leq(w1, w2)) ++pairs;
      }
    }
    CHECK(pairs == static_cast<int>(premodels.size()));

    std::set<NamedModel> enumerated;
    for (const ModelStructure& s : models) enumerated.insert(named_model(s));
    CHECK(enumerated.size() == models.size());

    std::set<NamedModel> recorded;
    for (const auto& j : entry.at("models")) recorded.insert(parse_model(j));
    CHECK(enumerated == recorded);
  }
}

TEST_CASE("premodel enumeration is deterministic across job counts") {
  FiniteCategory C = square_cat();
  std::vector<PremodelStructure> serial = enumerate_premodel(C);
  std::vector<PremodelStructure> parallel = enumerate_premodel(C, 3);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);

  CHECK_THROWS_AS(enumerate_premodel(chain_cat(6)), SearchSpaceTooLarge);
}

TEST_CASE("the model poset is a partial order with extremes") {
  FiniteCategory C = square_cat();
  StructurePoset poset = model_poset(enumerate_model(C));
  const int n = static_cast<int>(poset.structures.size());
  REQUIRE(n == 23);

  int min_idx = -1, max_idx = -1;
  for (int i = 0; i < n; ++i) {
    const PremodelStructure& pm = poset.structures[i].premodel;
    if (pm.cof == family_identities(C) && pm.afib == family_all(C))
      min_idx = i;
    if (pm.cof == family_all(C) && pm.acof == family_all(C)) max_idx = i;
  }
  REQUIRE(min_idx >= 0);
  REQUIRE(max_idx >= 0);

  for (int i = 0; i < n; ++i) {
    CHECK(poset.leq[i][i]);
    CHECK(poset.leq[min_idx][i]);
    CHECK(poset.leq[i][max_idx]);
    for (int j = 0; j < n; ++j) {
      if (i != j && poset.leq[i][j]) CHECK_FALSE(poset.leq[j][i]);
      for (int k = 0; k < n; ++k) {
        if (poset.leq[i][j] && poset.leq[j][k]) CHECK(poset.leq[i][k]);
      }
    }
  }

  SECTION("meets with an extreme or itself are trivial") {
    MeetResult self = poset_meet(poset, 5, 5);
    REQUIRE(self.found());
    CHECK(*self.meet == 5);
    CHECK(self.maximal_lower_bounds == std::vector<int>{5});

    MeetResult with_min = poset_meet(poset, min_idx, 7);
    REQUIRE(with_min.found());
    CHECK(*with_min.meet == min_idx);

    CHECK_THROWS_AS(poset_meet(poset, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(poset_meet(poset, 0, n), std::invalid_argument);
  }

  SECTION("mixed categories and duplicates are rejected") {
    std::vector<ModelStructure> square_models = poset.structures;
    std::vector<ModelStructure> chain_models = enumerate_model(chain2_cat());
    std::vector<ModelStructure> mixed{square_models[0], chain_models[0]};
    CHECK_THROWS_AS(model_poset(mixed), std::invalid_argument);

    std::vector<ModelStructure> dup{square_models[0], square_models[0]};
    CHECK_THROWS_AS(model_poset(dup), std::invalid_argument);
  }
}

TEST_CASE("the designated square pair has no meet") {
  FiniteCategory C = square_cat();
  NoMeetsReport report = verify_no_meets(C);

  REQUIRE(report.ok);
  CHECK(report.failed_stage == -1);
  CHECK(report.is_square);
  REQUIRE(report.stages.size() == 5);
  for (const auto& stage : report.stages) {
    CHECK(stage.ok);
    CHECK_FALSE(stage.detail.empty());
  }
  CHECK(report.model_count == 23);
  CHECK_FALSE(report.all_pairs_have_meets);
  CHECK_FALSE(report.designated_pair_has_meet);
  REQUIRE(report.corner_structures.size() == 4);

  nlohmann::json demo =
      load_golden("structure_counts.json").at("categories").at("square").at(
          "meet_demo");
  CHECK(demo.at("has_meet").get<bool>() == report.designated_pair_has_meet);

  REQUIRE(report.designated_pair[0] >= 0);
  REQUIRE(report.designated_pair[1] >= 0);
  CHECK(named_model(report.poset.structures[report.designated_pair[0]]) ==
        parse_model(demo.at("upper_left")));
  CHECK(named_model(report.poset.structures[report.designated_pair[1]]) ==
        parse_model(demo.at("upper_right")));

  std::set<NamedModel> bounds;
  for (int i : report.designated_maximal_lower_bounds) {
    bounds.insert(named_model(report.poset.structures[i]));
  }
  std::set<NamedModel> recorded;
  for (const auto& j : demo.at("maximal_lower_bounds")) {
    recorded.insert(parse_model(j));
  }
  CHECK(bounds == recorded);

  SECTION("the verdict does not depend on the object numbering") {
    for (std::vector<std::string> names :
         {std::vector<std::string>{"11", "01", "10", "00"},
          std::vector<std::string>{"00", "10", "01", "11"},
          std::vector<std::string>{"10", "11", "00", "01"}}) {
      FiniteCategory permuted = square_cat(names);
      NoMeetsReport relabeled = verify_no_meets(permuted);
      CHECK(relabeled.ok);
      CHECK(relabeled.is_square);
      CHECK(relabeled.model_count == 23);
      CHECK_FALSE(relabeled.designated_pair_has_meet);
      CHECK(relabeled.designated_maximal_lower_bounds.size() ==
            report.designated_maximal_lower_bounds.size());
    }
  }
}

TEST_CASE("meet analysis on other categories") {
  nlohmann::json golden = load_golden("structure_counts.json");
  const std::vector<std::pair<std::string, FiniteCategory>> cases = {
      {"point", point_cat()},
      {"interval", interval_cat()},
      {"chain2", chain2_cat()}};

  for (const auto& [name, C] : cases) {
    INFO("category " << name);
    NoMeetsReport report = verify_no_meets(C);
    CHECK(report.ok);
    CHECK_FALSE(report.is_square);
    REQUIRE(report.stages.size() == 5);
    CHECK(report.corner_structures.empty());
    CHECK(report.model_count ==
          golden.at("categories").at(name).at("model").get<int>());
    CHECK(report.all_pairs_have_meets ==
          golden.at("categories").at(name).at("all_model_pairs_have_meets")
              .get<bool>());
  }
}

TEST_CASE("right-induced transfer reproduces the recorded failure") {
  nlohmann::json golden = load_golden("transfer_failure.json");

  auto build_poset = [](const nlohmann::json& j) {
    std::vector<std::string> names;
    for (const auto& e : j.at("elems")) names.push_back(e.get<std::string>());
    const int n = static_cast<int>(names.size());
    auto index = [&names](const std::string& s) {
      return static_cast<int>(std::find(names.begin(), names.end(), s) -
                              names.begin());
    };
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& pair : j.at("leq")) {
      leq[index(pair.at(0).get<std::string>())]
         [index(pair.at(1).get<std::string>())] = true;
    }
    return poset_category(leq, names);
  };

  FiniteCategory source = build_poset(golden.at("source"));
  FiniteCategory target = build_poset(golden.at("target"));

  auto monotone_functor = [](const FiniteCategory& from,
                             const FiniteCategory& to,
                             const nlohmann::json& mapping) {
    Functor F;
    F.source = &from;
    F.target = &to;
    F.obj_map.resize(from.num_objects());
    for (int x = 0; x < from.num_objects(); ++x) {
      F.obj_map[x] =
          obj_index(to, mapping.at(from.objects[x]).get<std::string>());
    }
    for (int m = 0; m < from.num_morphisms(); ++m) {
      const std::vector<int> image = to.hom(F.obj_map[from.morphisms[m].src],
                                            F.obj_map[from.morphisms[m].dst]);
      REQUIRE(image.size() == 1);
      F.mor_map.push_back(image[0]);
    }
    REQUIRE_FALSE(check_functor(F).has_value());
    return F;
  };

  Adjunction adj;
  adj.left = monotone_functor(source, target, golden.at("F"));
  adj.right = monotone_functor(target, source, golden.at("G"));
  for (int x = 0; x < source.num_objects(); ++x) {
    const std::vector<int> arrows =
        source.hom(x, adj.right.obj_map[adj.left.obj_map[x]]);
    REQUIRE(arrows.size() == 1);
    adj.unit.push_back(arrows[0]);
  }
  for (int y = 0; y < target.num_objects(); ++y) {
    const std::vector<int> arrows =
        target.hom(adj.left.obj_map[adj.right.obj_map[y]], y);
    REQUIRE(arrows.size() == 1);
    adj.counit.push_back(arrows[0]);
  }
  REQUIRE_FALSE(check_adjunction(adj).has_value());

  auto class_pairs = [](const nlohmann::json& j) {
    std::vector<NamePair> out;
    for (const auto& pair : j) {
      out.push_back({pair.at(0).get<std::string>(),
                     pair.at(1).get<std::string>()});
    }
    return out;
  };
  const nlohmann::json& pm_json = golden.at("premodel");
  PremodelCheck pm = verify_premodel(
      source, family_from_pairs(source, class_pairs(pm_json.at("C"))),
      family_from_pairs(source, class_pairs(pm_json.at("AC"))),
      family_from_pairs(source, class_pairs(pm_json.at("F"))),
      family_from_pairs(source, class_pairs(pm_json.at("AF"))));
  REQUIRE(pm.ok());

  TransferResult result = transfer_right_induced(adj, *pm.structure);
  REQUIRE_FALSE(result.ok());
  REQUIRE(result.violation.has_value());
  const nlohmann::json& expected = golden.at("expected");
  REQUIRE(expected.at("kind").get<std::string>() == "FactorizationFailure");
  REQUIRE(expected.at("pair").get<std::string>() == "c_af");
  CHECK(result.violation->part == PremodelViolation::Part::CofAfibPair);
  REQUIRE(result.violation->wfs.has_value());
  CHECK(result.violation->wfs->kind == WfsViolation::Kind::Factorization);
  const int witness = result.violation->wfs->morphism;
  REQUIRE(witness >= 0);
  CHECK(target.objects[target.morphisms[witness].src] ==
        expected.at("witness").at(0).get<std::string>());
  CHECK(target.objects[target.morphisms[witness].dst] ==
        expected.at("witness").at(1).get<std::string>());

  SECTION("transferring the minimal structure succeeds both ways") {
    PremodelCheck minimal = verify_premodel(
        source, family_identities(source), family_identities(source),
        family_all(source), family_all(source));
    REQUIRE(minimal.ok());
    TransferResult right = transfer_right_induced(adj, *minimal.structure);
    REQUIRE(right.ok());
    CHECK(right.structure->cat == &target);
    CHECK(right.structure->fib == family_all(target));
    CHECK(right.structure->cof == family_identities(target));

    PremodelCheck on_target = verify_premodel(
        target, family_identities(target), family_identities(target),
        family_all(target), family_all(target));
    REQUIRE(on_target.ok());
    TransferResult left = transfer_left_induced(adj, *on_target.structure);
    REQUIRE(left.ok());
    CHECK(left.structure->cat == &source);
    CHECK(left.structure->cof == family_identities(source));
  }

  SECTION("preconditions") {
    PremodelCheck on_target = verify_premodel(
        target, family_identities(target), family_identities(target),
        family_all(target), family_all(target));
    REQUIRE(on_target.ok());
    CHECK_THROWS_AS(transfer_right_induced(adj, *on_target.structure),
                    std::invalid_argument);
    CHECK_THROWS_AS(transfer_left_induced(adj, *pm.structure),
                    std::invalid_argument);

    Adjunction broken = adj;
    broken.unit[0] = mor_id(source, "0", "1");
    CHECK_THROWS_AS(transfer_right_induced(broken, *pm.structure),
                    std::invalid_argument);
  }
}

TEST_CASE("componentwise products of premodel structures verify") {
  FiniteCategory I = interval_cat();
  PremodelCheck pm_a = verify_premodel(I, family_all(I), family_identities(I),
                                       family_all(I), family_identities(I));
  PremodelCheck pm_b = verify_premodel(I, family_identities(I),
                                       family_identities(I), family_all(I),
                                       family_all(I));
  REQUIRE(pm_a.ok());
  REQUIRE(pm_b.ok());

  SECTION("single factor passes through") {
    ProductStructureResult single = product_structure({*pm_a.structure});
    CHECK(single.owned.empty());
    CHECK(single.structure == *pm_a.structure);
    CHECK(single.structure.cat == &I);
  }

  SECTION("two factors") {
    ProductStructureResult prod =
        product_structure({*pm_a.structure, *pm_b.structure});
    REQUIRE(prod.owned.size() == 1);
    const FiniteCategory& P = *prod.owned.back();
    CHECK(prod.structure.cat == &P);
    CHECK(P.num_objects() == 4);
    REQUIRE(P.num_morphisms() == 9);
    const int n2 = I.num_morphisms();
    for (int m = 0; m < P.num_morphisms(); ++m) {
      CHECK(prod.structure.cof.contains(m) ==
            (pm_a.structure->cof.contains(m / n2) &&
             pm_b.structure->cof.contains(m % n2)));
      CHECK(prod.structure.afib.contains(m) ==
            (pm_a.structure->afib.contains(m / n2) &&
             pm_b.structure->afib.contains(m % n2)));
    }
    CHECK(verify_premodel(P, prod.structure.cof, prod.structure.acof,
                          prod.structure.fib, prod.structure.afib)
              .ok());
  }

  SECTION("three factors build a cube") {
    ProductStructureResult cube = product_structure(
        {*pm_a.structure, *pm_b.structure, *pm_a.structure});
    REQUIRE(cube.owned.size() == 2);
    const FiniteCategory& P = *cube.owned.back();
    CHECK(P.num_objects() == 8);
    CHECK(P.num_morphisms() == 27);
    const int n2 = I.num_morphisms();
    for (int m = 0; m < P.num_morphisms(); ++m) {
      const int m3 = m % n2;
      const int m1 = (m / n2) / n2;
      const int m2 = (m / n2) % n2;
      CHECK(cube.structure.acof.contains(m) ==
            (pm_a.structure->acof.contains(m1) &&
             pm_b.structure->acof.contains(m2) &&
             pm_a.structure->acof.contains(m3)));
    }
  }

  SECTION("empty input is rejected") {
    CHECK_THROWS_AS(product_structure({}), std::invalid_argument);
  }
}

TEST_CASE("anodyne cylinder search on finite categories") {
  FiniteCategory C = square_cat();
  SquareCorners corners = square_corners(C);

  SECTION("posets give the degenerate cylinder on cofibrant objects") {
    CylinderResult res = find_anodyne_cylinder(corners.br,
                                               obj_index(C, "01"));
    REQUIRE(res.found);
    CHECK(res.object == obj_index(C, "01"));
    CHECK(res.include == C.identity[obj_index(C, "01")]);
    CHECK(res.project == C.identity[obj_index(C, "01")]);
  }

  SECTION("non-cofibrant objects are rejected") {
    CHECK_THROWS_AS(find_anodyne_cylinder(corners.tl, obj_index(C, "01")),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_anodyne_cylinder(corners.tl, 99),
                    std::invalid_argument);
  }

  SECTION("missing initial object is rejected") {
    FiniteCategory D = discrete_cat(2);
    PremodelCheck pm = verify_premodel(D, family_all(D), family_all(D),
                                       family_all(D), family_all(D));
    REQUIRE(pm.ok());
    CHECK_THROWS_AS(find_anodyne_cylinder(*pm.structure, 0),
                    std::invalid_argument);
  }

  SECTION("missing coproduct is rejected") {
    FiniteCategory P = parallel_pair_cat();
    PremodelCheck pm = verify_premodel(P, family_all(P), family_isos(P),
                                       family_all(P), family_isos(P));
    REQUIRE(pm.ok());
    CHECK_THROWS_AS(find_anodyne_cylinder(*pm.structure, obj_index(P, "a")),
                    std::invalid_argument);
  }
}

TEST_CASE("the anodyne composite criterion for trivial cofibrations") {
  FiniteCategory C = square_cat();
  SquareCorners corners = square_corners(C);
  const int t = mor_id(C, "00", "01");

  CHECK(trivial_cof_by_criterion(corners.br, t));
  CHECK_FALSE(trivial_cof_by_criterion(corners.tr, t));
  CHECK_THROWS_AS(trivial_cof_by_criterion(corners.tr, mor_id(C, "00", "10")),
                  std::invalid_argument);

  SECTION("on model structures the criterion detects exactly the anodynes") {
    auto initial = initial_object(C);
    REQUIRE(initial.has_value());
    for (const ModelStructure& model : enumerate_model(C)) {
      const PremodelStructure& pm = model.premodel;
      for (int f = 0; f < C.num_morphisms(); ++f) {
        if (!pm.cof.contains(f)) continue;
        const std::vector<int> arrows =
            C.hom(*initial, C.morphisms[f].src);
        if (arrows.size() != 1 || !pm.cof.contains(arrows[0])) continue;
        CHECK(trivial_cof_by_criterion(pm, f) == pm.acof.contains(f));
      }
    }
  }

  SECTION("outside model structures the criterion can overshoot") {
    FiniteCategory chain = chain2_cat();
    PremodelCheck pm = verify_premodel(
        chain, family_all(chain),
        family_from_pairs(chain, {{"0", "2"}, {"1", "2"}}),
        family_from_pairs(chain, {{"0", "1"}}), family_identities(chain));
    REQUIRE(pm.ok());
    REQUIRE_FALSE(is_model(*pm.structure).ok());
    const int f = mor_id(chain, "0", "1");
    CHECK(trivial_cof_by_criterion(*pm.structure, f));
    CHECK_FALSE(pm.structure->acof.contains(f));
  }
}

TEST_CASE("bounded premodel verification on finite sets") {
  FsPremodelStructure standard = finset_premodel();

  SECTION("the standard structure verifies") {
    FsPremodelCheck check = verify_premodel_finset(standard, 3);
    CHECK(check.ok);
    CHECK_FALSE(check.record.exact);
    CHECK(check.record.bound == 3);
  }

  SECTION("a broken main pair is reported") {
    FsPremodelStructure bad = standard;
    bad.afib = FinSetFamily{FinSetFamily::Tag::All, {}};
    FsPremodelCheck check = verify_premodel_finset(bad, 2);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.violation.has_value());
    CHECK(check.violation->part == PremodelViolation::Part::CofAfibPair);
    REQUIRE(check.violation->wfs.has_value());
    CHECK(check.violation->wfs->kind == WfsViolation::Kind::LeftClosure);
    REQUIRE(check.violation->wfs->morphism.has_value());
    CHECK(*check.violation->wfs->morphism == FinSetMor{0, 1, {}});
  }

  SECTION("broken nesting is reported with the first witness") {
    // (mono, epi) and (epi, mono) are both weak factorization systems, but
    // the epis are not contained in the monos.
    FsPremodelStructure crossed{FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                FinSetFamily{FinSetFamily::Tag::Epi, {}},
                                FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                FinSetFamily{FinSetFamily::Tag::Epi, {}}};
    FsPremodelCheck check = verify_premodel_finset(crossed, 2);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.violation.has_value());
    CHECK(check.violation->part == PremodelViolation::Part::Nesting);
    REQUIRE(check.violation->morphism.has_value());
    CHECK(*check.violation->morphism == FinSetMor{2, 1, {0, 0}});
  }
}

TEST_CASE("bounded weak equivalences and the model check on finite sets") {
  FsPremodelStructure standard = finset_premodel();

  SECTION("anodyne composites in the standard structure are the epis") {
    for (const FinSetMor& f : fs_all_morphisms(3)) {
      CHECK(fs_weq_member(standard, f, 3) == is_epi(f));
    }
  }

  SECTION("the standard structure is not a model structure") {
    FsModelCheck check = is_model_finset(standard, 3);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.violation.has_value());
    CHECK(check.violation->kind == ModelViolation::Kind::TwoOutOfThree);
    CHECK(check.violation->triple ==
          std::array<FinSetMor, 3>{FinSetMor{1, 2, {0}}, FinSetMor{2, 1, {0, 0}},
                                   FinSetMor{1, 1, {0}}});
  }

  SECTION("structures with two-out-of-three anodyne composites are models") {
    FsPremodelStructure mono_mono{FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                  FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                  FinSetFamily{FinSetFamily::Tag::Epi, {}},
                                  FinSetFamily{FinSetFamily::Tag::Epi, {}}};
    REQUIRE(verify_premodel_finset(mono_mono, 2).ok);
    CHECK(is_model_finset(mono_mono, 2).ok);

    FsPremodelStructure maximal{FinSetFamily{FinSetFamily::Tag::All, {}},
                                FinSetFamily{FinSetFamily::Tag::All, {}},
                                FinSetFamily{FinSetFamily::Tag::Iso, {}},
                                FinSetFamily{FinSetFamily::Tag::Iso, {}}};
    REQUIRE(verify_premodel_finset(maximal, 2).ok);
    CHECK(is_model_finset(maximal, 2).ok);
  }
}

TEST_CASE("anodyne cylinder search on finite sets") {
  FsPremodelStructure standard = finset_premodel();

  SECTION("the empty set has the trivial cylinder") {
    FsCylinderResult res = find_anodyne_cylinder_finset(standard, 0, 2);
    REQUIRE(res.found);
    CHECK(res.include == FinSetMor{0, 0, {}});
    CHECK(res.project == FinSetMor{0, 0, {}});
  }

  SECTION("a point has no anodyne cylinder in the standard structure") {
    // The two inclusions into any candidate would have to be isomorphisms
    // out of a singleton, forcing a singleton cylinder, but the fold map
    // from two points cannot be a monomorphism into it.
    FsCylinderResult res = find_anodyne_cylinder_finset(standard, 1, 4);
    CHECK_FALSE(res.found);
  }

  SECTION("with anodyne monomorphisms the cylinder is the doubled set") {
    FsPremodelStructure mono_mono{FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                  FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                  FinSetFamily{FinSetFamily::Tag::Epi, {}},
                                  FinSetFamily{FinSetFamily::Tag::Epi, {}}};
    FsCylinderResult res = find_anodyne_cylinder_finset(mono_mono, 1, 3);
    REQUIRE(res.found);
    CHECK(res.include == FinSetMor{2, 2, {0, 1}});
    CHECK(res.project == FinSetMor{2, 1, {0, 0}});
  }

  SECTION("non-cofibrant sizes are rejected") {
    FsPremodelStructure frozen{FinSetFamily{FinSetFamily::Tag::Iso, {}},
                               FinSetFamily{FinSetFamily::Tag::Iso, {}},
                               FinSetFamily{FinSetFamily::Tag::All, {}},
                               FinSetFamily{FinSetFamily::Tag::All, {}}};
    CHECK_THROWS_AS(find_anodyne_cylinder_finset(frozen, 1, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_anodyne_cylinder_finset(standard, -1, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("the anodyne composite criterion on finite sets") {
  FsPremodelStructure standard = finset_premodel();
  FsPremodelStructure mono_mono{FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                FinSetFamily{FinSetFamily::Tag::Mono, {}},
                                FinSetFamily{FinSetFamily::Tag::Epi, {}},
                                FinSetFamily{FinSetFamily::Tag::Epi, {}}};

  const FinSetMor point_inclusion{0, 1, {}};
  CHECK_FALSE(fs_trivial_cof_by_criterion(standard, point_inclusion, 3));
  CHECK(fs_trivial_cof_by_criterion(mono_mono, point_inclusion, 3));
  CHECK(fs_trivial_cof_by_criterion(standard, FinSetMor{1, 1, {0}}, 3));

  CHECK_THROWS_AS(
      fs_trivial_cof_by_criterion(standard, FinSetMor{2, 1, {0, 0}}, 3),
      std::invalid_argument);
}
