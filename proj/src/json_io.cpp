#include "finhom/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace finhom {
namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument(msg);
}

const Json& need(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object()) bad(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(what + ": missing key \"" + std::string(key) + "\"");
  return *it;
}

int as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + ": expected an integer");
  return v.get<int>();
}

bool as_bool(const Json& v, const std::string& what) {
  if (!v.is_boolean()) bad(what + ": expected a boolean");
  return v.get<bool>();
}

std::string as_str(const Json& v, const std::string& what) {
  if (!v.is_string()) bad(what + ": expected a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& what) {
  if (!v.is_array()) bad(what + ": expected an array");
  return v;
}

const Json& as_object(const Json& v, const std::string& what) {
  if (!v.is_object()) bad(what + ": expected an object");
  return v;
}

std::vector<int> as_int_list(const Json& v, const std::string& what) {
  std::vector<int> out;
  for (const Json& e : as_array(v, what)) out.push_back(as_int(e, what));
  return out;
}

int object_index(const FiniteCategory& C, const std::string& name,
                 const std::string& what) {
  for (int x = 0; x < C.num_objects(); ++x)
    if (C.objects[x] == name) return x;
  bad(what + ": unknown object \"" + name + "\"");
}

// Object-keyed JSON maps must mention every object exactly once.
void require_all_objects(const FiniteCategory& C, const std::vector<bool>& seen,
                         const std::string& what) {
  for (int x = 0; x < C.num_objects(); ++x)
    if (!seen[x]) bad(what + ": no entry for object \"" + C.objects[x] + "\"");
}

int parse_mor_key(const std::string& key, const FiniteCategory& C,
                  const std::string& what) {
  if (key.empty() || key.size() > 9 ||
      key.find_first_not_of("0123456789") != std::string::npos)
    bad(what + ": key \"" + key + "\" is not a morphism id");
  int id = std::stoi(key);
  if (id >= C.num_morphisms())
    bad(what + ": morphism id " + key + " out of range");
  return id;
}

void require_unique_names(const FiniteCategory& C, const std::string& what) {
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = x + 1; y < C.num_objects(); ++y)
      if (C.objects[x] == C.objects[y])
        bad(what + ": duplicate object name \"" + C.objects[x] +
            "\" cannot be serialized");
}

Json int_pair(int a, int b) { return Json::array({a, b}); }

// Shared "at"/"act" encoder for diagrams and presheaves: sizes keyed by
// object name, non-identity actions keyed by morphism id.
Json values_to_json(const FiniteCategory& C, const std::vector<int>& at,
                    const std::vector<FinSetMor>& act) {
  require_unique_names(C, "diagram");
  Json j;
  Json sizes = Json::object();
  for (int x = 0; x < C.num_objects(); ++x) sizes[C.objects[x]] = at[x];
  j["at"] = std::move(sizes);
  Json maps = Json::object();
  for (int m = 0; m < C.num_morphisms(); ++m)
    if (!C.is_identity(m)) maps[std::to_string(m)] = act[m].map;
  j["act"] = std::move(maps);
  return j;
}

// Shared "at"/"act" decoder; `contravariant` flips which endpoint supplies
// the domain of each action.
void values_from_json(const FiniteCategory& C, const Json& j,
                      bool contravariant, const std::string& what,
                      std::vector<int>& at, std::vector<FinSetMor>& act) {
  at.assign(C.num_objects(), -1);
  std::vector<bool> seen(C.num_objects(), false);
  for (const auto& [name, value] : as_object(need(j, "at", what), what).items()) {
    int x = object_index(C, name, what);
    if (seen[x]) bad(what + ": duplicate entry for object \"" + name + "\"");
    seen[x] = true;
    at[x] = as_int(value, what + ": size at \"" + name + "\"");
    if (at[x] < 0) bad(what + ": negative size at \"" + name + "\"");
  }
  require_all_objects(C, seen, what);

  act.assign(C.num_morphisms(), FinSetMor{});
  std::vector<bool> given(C.num_morphisms(), false);
  for (const auto& [key, value] : as_object(need(j, "act", what), what).items()) {
    int m = parse_mor_key(key, C, what);
    given[m] = true;
    int from = contravariant ? C.morphisms[m].dst : C.morphisms[m].src;
    int to = contravariant ? C.morphisms[m].src : C.morphisms[m].dst;
    FinSetMor f{at[from], at[to], as_int_list(value, what + ": map for #" + key)};
    if (!fs_valid(f))
      bad(what + ": map for morphism #" + key + " is not a function " +
          std::to_string(f.src) + " -> " + std::to_string(f.dst));
    act[m] = std::move(f);
  }
  for (int m = 0; m < C.num_morphisms(); ++m) {
    if (given[m]) continue;
    if (!C.is_identity(m))
      bad(what + ": missing action for morphism #" + std::to_string(m));
    act[m] = fs_identity(at[C.morphisms[m].src]);
  }
}

std::string wfs_kind_name(WfsViolation::Kind k) {
  switch (k) {
    case WfsViolation::Kind::LeftClosure: return "left_closure";
    case WfsViolation::Kind::RightClosure: return "right_closure";
    case WfsViolation::Kind::Factorization: return "factorization";
    case WfsViolation::Kind::LeftRetract: return "left_retract";
    case WfsViolation::Kind::RightRetract: return "right_retract";
  }
  return "";
}

}  // namespace

std::string schema_version() { return "1"; }

// ---------------------------------------------------------------------------
// Categories.
// ---------------------------------------------------------------------------

Json category_to_json(const FiniteCategory& C) {
  require_unique_names(C, "category");
  Json j;
  j["objects"] = C.objects;
  Json mors = Json::array();
  for (int m = 0; m < C.num_morphisms(); ++m) {
    Json e;
    e["id"] = m;
    e["src"] = C.objects[C.morphisms[m].src];
    e["dst"] = C.objects[C.morphisms[m].dst];
    mors.push_back(std::move(e));
  }
  j["morphisms"] = std::move(mors);
  Json ids = Json::object();
  for (int x = 0; x < C.num_objects(); ++x) ids[C.objects[x]] = C.identity[x];
  j["identities"] = std::move(ids);
  Json comp = Json::array();
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f)
      if (C.composable(g, f))
        comp.push_back(Json::array({g, f, C.compose(g, f)}));
  j["compose"] = std::move(comp);
  return j;
}

RawCategory raw_category_from_json(const Json& j) {
  const std::string what = "category";
  RawCategory raw;
  for (const Json& e : as_array(need(j, "objects", what), what + ".objects"))
    raw.objects.push_back(as_str(e, what + ".objects"));
  for (const Json& e : as_array(need(j, "morphisms", what), what + ".morphisms")) {
    RawCategory::RawMor m;
    m.id = as_int(need(e, "id", what + ".morphisms"), what + ".morphisms.id");
    m.src = as_str(need(e, "src", what + ".morphisms"), what + ".morphisms.src");
    m.dst = as_str(need(e, "dst", what + ".morphisms"), what + ".morphisms.dst");
    raw.morphisms.push_back(std::move(m));
  }
  const Json& ids = as_object(need(j, "identities", what), what + ".identities");
  for (const auto& [name, value] : ids.items())
    raw.identities.emplace_back(name, as_int(value, what + ".identities"));
  for (const Json& e : as_array(need(j, "compose", what), what + ".compose")) {
    std::vector<int> entry = as_int_list(e, what + ".compose");
    if (entry.size() != 3)
      bad(what + ".compose: expected entries of the form [g, f, g∘f]");
    raw.compose.push_back({entry[0], entry[1], entry[2]});
  }
  return raw;
}

FiniteCategory category_from_json(const Json& j) {
  CategoryCheck check = validate_category(raw_category_from_json(j));
  if (!check.ok())
    bad("invalid category: " + check.violation->detail);
  return std::move(*check.category);
}

// ---------------------------------------------------------------------------
// Families.
// ---------------------------------------------------------------------------

Json family_to_json(const MorphismFamily& F) { return Json(F.ids()); }

MorphismFamily family_from_json(const FiniteCategory& C, const Json& j) {
  const std::string what = "family";
  std::vector<bool> member(C.num_morphisms(), false);
  for (int id : as_int_list(j, what)) {
    if (id < 0 || id >= C.num_morphisms())
      bad(what + ": morphism id " + std::to_string(id) + " out of range");
    if (member[id])
      bad(what + ": duplicate morphism id " + std::to_string(id));
    member[id] = true;
  }
  return MorphismFamily{&C, std::move(member)};
}

// ---------------------------------------------------------------------------
// Finite-set morphisms and families.
// ---------------------------------------------------------------------------

Json fs_mor_to_json(const FinSetMor& f) {
  Json j;
  j["src"] = f.src;
  j["dst"] = f.dst;
  j["map"] = f.map;
  return j;
}

FinSetMor fs_mor_from_json(const Json& j) {
  const std::string what = "finite-set morphism";
  FinSetMor f;
  f.src = as_int(need(j, "src", what), what + ".src");
  f.dst = as_int(need(j, "dst", what), what + ".dst");
  f.map = as_int_list(need(j, "map", what), what + ".map");
  if (!fs_valid(f))
    bad(what + ": map is not a function " + std::to_string(f.src) + " -> " +
        std::to_string(f.dst));
  return f;
}

Json fs_family_to_json(const FinSetFamily& F) {
  Json j;
  switch (F.tag) {
    case FinSetFamily::Tag::Mono: j["tag"] = "mono"; break;
    case FinSetFamily::Tag::Epi: j["tag"] = "epi"; break;
    case FinSetFamily::Tag::Iso: j["tag"] = "iso"; break;
    case FinSetFamily::Tag::All: j["tag"] = "all"; break;
    case FinSetFamily::Tag::Explicit: {
      j["tag"] = "explicit";
      Json list = Json::array();
      for (const FinSetMor& f : F.list) list.push_back(fs_mor_to_json(f));
      j["list"] = std::move(list);
      break;
    }
  }
  return j;
}

FinSetFamily fs_family_from_json(const Json& j) {
  const std::string what = "finite-set family";
  std::string tag = as_str(need(j, "tag", what), what + ".tag");
  FinSetFamily F;
  if (tag == "mono") F.tag = FinSetFamily::Tag::Mono;
  else if (tag == "epi") F.tag = FinSetFamily::Tag::Epi;
  else if (tag == "iso") F.tag = FinSetFamily::Tag::Iso;
  else if (tag == "all") F.tag = FinSetFamily::Tag::All;
  else if (tag == "explicit") {
    F.tag = FinSetFamily::Tag::Explicit;
    for (const Json& e : as_array(need(j, "list", what), what + ".list"))
      F.list.push_back(fs_mor_from_json(e));
  } else {
    bad(what + ": unknown tag \"" + tag + "\"");
  }
  return F;
}

// ---------------------------------------------------------------------------
// Weak factorization systems.
// ---------------------------------------------------------------------------

Json wfs_to_json(const WeakFactorizationSystem& w) {
  Json j;
  j["L"] = family_to_json(w.left);
  j["R"] = family_to_json(w.right);
  Json rec;
  rec["exact"] = w.record.exact;
  rec["bound"] = w.record.bound;
  j["record"] = std::move(rec);
  return j;
}

WeakFactorizationSystem wfs_from_json(const FiniteCategory& C, const Json& j) {
  const std::string what = "wfs";
  WeakFactorizationSystem w;
  w.left = family_from_json(C, need(j, "L", what));
  w.right = family_from_json(C, need(j, "R", what));
  w.record = VerificationRecord{true, -1};
  if (j.is_object() && j.contains("record")) {
    const Json& rec = j.at("record");
    w.record.exact = as_bool(need(rec, "exact", what + ".record"), what + ".record.exact");
    w.record.bound = as_int(need(rec, "bound", what + ".record"), what + ".record.bound");
  }
  return w;
}

// ---------------------------------------------------------------------------
// Structure files.
// ---------------------------------------------------------------------------

Json premodel_to_json(const PremodelStructure& pm, bool with_cat) {
  Json j;
  if (with_cat) j["cat"] = category_to_json(*pm.cat);
  j["C"] = family_to_json(pm.cof);
  j["AC"] = family_to_json(pm.acof);
  j["F"] = family_to_json(pm.fib);
  j["AF"] = family_to_json(pm.afib);
  return j;
}

Json model_to_json(const ModelStructure& m, bool with_cat) {
  Json j = premodel_to_json(m.premodel, with_cat);
  j["W"] = family_to_json(m.weq);
  return j;
}

OwnedPremodel premodel_from_json(const Json& j) {
  const std::string what = "structure file";
  OwnedPremodel owned;
  owned.cat = std::make_shared<const FiniteCategory>(
      category_from_json(need(j, "cat", what)));
  owned.structure.cat = owned.cat.get();
  owned.structure.cof = family_from_json(*owned.cat, need(j, "C", what));
  owned.structure.acof = family_from_json(*owned.cat, need(j, "AC", what));
  owned.structure.fib = family_from_json(*owned.cat, need(j, "F", what));
  owned.structure.afib = family_from_json(*owned.cat, need(j, "AF", what));
  if (j.contains("W"))
    owned.weq = family_from_json(*owned.cat, j.at("W"));
  return owned;
}

// ---------------------------------------------------------------------------
// Functors.
// ---------------------------------------------------------------------------

Json functor_to_json(const Functor& F) {
  require_unique_names(*F.source, "functor source");
  Json j;
  Json objects = Json::object();
  for (int x = 0; x < F.source->num_objects(); ++x)
    objects[F.source->objects[x]] = F.target->objects[F.obj_map[x]];
  j["objects"] = std::move(objects);
  Json morphisms = Json::object();
  for (int m = 0; m < F.source->num_morphisms(); ++m)
    morphisms[std::to_string(m)] = F.mor_map[m];
  j["morphisms"] = std::move(morphisms);
  return j;
}

Functor functor_from_json(const FiniteCategory& src, const FiniteCategory& dst,
                          const Json& j) {
  const std::string what = "functor";
  Functor F;
  F.source = &src;
  F.target = &dst;
  F.obj_map.assign(src.num_objects(), -1);
  std::vector<bool> seen(src.num_objects(), false);
  const Json& objects = as_object(need(j, "objects", what), what + ".objects");
  for (const auto& [name, value] : objects.items()) {
    int x = object_index(src, name, what + ".objects");
    if (seen[x]) bad(what + ".objects: duplicate entry for \"" + name + "\"");
    seen[x] = true;
    F.obj_map[x] =
        object_index(dst, as_str(value, what + ".objects"), what + ".objects");
  }
  require_all_objects(src, seen, what + ".objects");

  F.mor_map.assign(src.num_morphisms(), -1);
  const Json& morphisms =
      as_object(need(j, "morphisms", what), what + ".morphisms");
  for (const auto& [key, value] : morphisms.items()) {
    int m = parse_mor_key(key, src, what + ".morphisms");
    if (F.mor_map[m] != -1)
      bad(what + ".morphisms: duplicate entry for #" + key);
    int image = as_int(value, what + ".morphisms");
    if (image < 0 || image >= dst.num_morphisms())
      bad(what + ".morphisms: target id " + std::to_string(image) +
          " out of range");
    F.mor_map[m] = image;
  }
  for (int m = 0; m < src.num_morphisms(); ++m)
    if (F.mor_map[m] == -1)
      bad(what + ".morphisms: no entry for morphism #" + std::to_string(m));

  if (auto violation = check_functor(F)) {
    bad(what + ": not a functor (" + violation->kind + " at " +
        std::to_string(violation->witness1) +
        (violation->witness2 >= 0 ? ", " + std::to_string(violation->witness2)
                                  : std::string()) +
        ")");
  }
  return F;
}

// ---------------------------------------------------------------------------
// Diagrams and presheaves.
// ---------------------------------------------------------------------------

Json diagram_to_json(const FinSetDiagram& X) {
  return values_to_json(*X.shape, X.at, X.act);
}

FinSetDiagram diagram_from_json(const FiniteCategory& shape, const Json& j) {
  FinSetDiagram X;
  X.shape = &shape;
  values_from_json(shape, j, /*contravariant=*/false, "diagram", X.at, X.act);
  if (auto violation = check_diagram(X))
    bad("diagram: " + *violation);
  return X;
}

Json presheaf_to_json(const Presheaf& X) {
  return values_to_json(*X.index, X.at, X.act);
}

Presheaf presheaf_from_json(const FiniteCategory& index, const Json& j) {
  Presheaf X;
  X.index = &index;
  values_from_json(index, j, /*contravariant=*/true, "presheaf", X.at, X.act);
  if (auto violation = check_presheaf(X))
    bad("presheaf: " + *violation);
  return X;
}

Json presheaf_mor_to_json(const PresheafMor& f) {
  const FiniteCategory& C = *f.src.index;
  require_unique_names(C, "presheaf morphism");
  Json j;
  j["src"] = presheaf_to_json(f.src);
  j["dst"] = presheaf_to_json(f.dst);
  Json components = Json::object();
  for (int x = 0; x < C.num_objects(); ++x)
    components[C.objects[x]] = f.component[x].map;
  j["components"] = std::move(components);
  return j;
}

// ---------------------------------------------------------------------------
// Reedy categories.
// ---------------------------------------------------------------------------

Json reedy_to_json(const ReedyCategory& K) {
  Json j = category_to_json(*K.base);
  Json degree = Json::object();
  for (int x = 0; x < K.base->num_objects(); ++x)
    degree[K.base->objects[x]] = K.degree[x];
  j["degree"] = std::move(degree);
  j["plus"] = family_to_json(K.plus);
  j["minus"] = family_to_json(K.minus);
  return j;
}

OwnedReedy reedy_from_json(const Json& j) {
  const std::string what = "reedy category";
  OwnedReedy owned;
  owned.cat = std::make_shared<const FiniteCategory>(category_from_json(j));
  const FiniteCategory& C = *owned.cat;
  owned.reedy.base = &C;
  owned.reedy.degree.assign(C.num_objects(), -1);
  std::vector<bool> seen(C.num_objects(), false);
  const Json& degree = as_object(need(j, "degree", what), what + ".degree");
  for (const auto& [name, value] : degree.items()) {
    int x = object_index(C, name, what + ".degree");
    if (seen[x]) bad(what + ".degree: duplicate entry for \"" + name + "\"");
    seen[x] = true;
    owned.reedy.degree[x] = as_int(value, what + ".degree");
    if (owned.reedy.degree[x] < 0)
      bad(what + ".degree: negative degree at \"" + name + "\"");
  }
  require_all_objects(C, seen, what + ".degree");
  owned.reedy.plus = family_from_json(C, need(j, "plus", what));
  owned.reedy.minus = family_from_json(C, need(j, "minus", what));
  return owned;
}

// ---------------------------------------------------------------------------
// Violations and reports.
// ---------------------------------------------------------------------------

Json violation_to_json(const CategoryViolation& v) {
  Json j;
  switch (v.kind) {
    case CategoryViolation::Kind::MalformedData: j["kind"] = "malformed_data"; break;
    case CategoryViolation::Kind::NonComposableEntry: j["kind"] = "non_composable_entry"; break;
    case CategoryViolation::Kind::PartialComposition: j["kind"] = "partial_composition"; break;
    case CategoryViolation::Kind::IdentityLaw: j["kind"] = "identity_law"; break;
    case CategoryViolation::Kind::Associativity: j["kind"] = "associativity"; break;
  }
  j["detail"] = v.detail;
  j["witness"] = Json::array({v.witness[0], v.witness[1], v.witness[2]});
  return j;
}

Json violation_to_json(const FunctorViolation& v) {
  Json j;
  j["kind"] = v.kind;
  j["witness"] = int_pair(v.witness1, v.witness2);
  return j;
}

Json violation_to_json(const WfsViolation& v) {
  Json j;
  j["kind"] = wfs_kind_name(v.kind);
  switch (v.kind) {
    case WfsViolation::Kind::LeftClosure:
    case WfsViolation::Kind::RightClosure:
    case WfsViolation::Kind::Factorization:
      j["morphism"] = v.morphism;
      break;
    case WfsViolation::Kind::LeftRetract:
    case WfsViolation::Kind::RightRetract:
      j["retract"] = int_pair(v.retract.first, v.retract.second);
      break;
  }
  return j;
}

Json violation_to_json(const PremodelViolation& v) {
  Json j;
  switch (v.part) {
    case PremodelViolation::Part::CofAfibPair: j["part"] = "cof_afib_pair"; break;
    case PremodelViolation::Part::AcofFibPair: j["part"] = "acof_fib_pair"; break;
    case PremodelViolation::Part::Nesting: j["part"] = "nesting"; break;
  }
  if (v.wfs) j["wfs"] = violation_to_json(*v.wfs);
  if (v.part == PremodelViolation::Part::Nesting) j["morphism"] = v.morphism;
  return j;
}

Json violation_to_json(const ModelViolation& v) {
  Json j;
  if (v.kind == ModelViolation::Kind::TwoOutOfThree) {
    j["kind"] = "two_out_of_three";
    j["triple"] = Json::array({v.triple[0], v.triple[1], v.triple[2]});
  } else {
    j["kind"] = "class_identity";
    j["class"] = v.cls;
    j["morphism"] = v.morphism;
  }
  return j;
}

Json violation_to_json(const ReedyViolation& v) {
  Json j;
  switch (v.kind) {
    case ReedyViolation::Kind::MissingIdentity: j["kind"] = "missing_identity"; break;
    case ReedyViolation::Kind::NotClosed: j["kind"] = "not_closed"; break;
    case ReedyViolation::Kind::DegreeDirection: j["kind"] = "degree_direction"; break;
    case ReedyViolation::Kind::Factorization: j["kind"] = "factorization"; break;
  }
  if (!v.family.empty()) j["family"] = v.family;
  j["morphism"] = v.morphism;
  if (v.kind == ReedyViolation::Kind::NotClosed)
    j["pair"] = int_pair(v.pair.first, v.pair.second);
  if (v.kind == ReedyViolation::Kind::Factorization) j["count"] = v.count;
  return j;
}

Json no_meets_to_json(const NoMeetsReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["failed_stage"] = r.failed_stage;
  j["is_square"] = r.is_square;
  Json stages = Json::array();
  for (const NoMeetsReport::Stage& s : r.stages) {
    Json e;
    e["name"] = s.name;
    e["ok"] = s.ok;
    e["detail"] = s.detail;
    stages.push_back(std::move(e));
  }
  j["stages"] = std::move(stages);
  j["model_count"] = r.model_count;
  if (r.is_square) {
    Json corners = Json::array();
    for (const ModelStructure& m : r.corner_structures)
      corners.push_back(model_to_json(m, /*with_cat=*/false));
    j["corner_structures"] = std::move(corners);
  }
  Json models = Json::array();
  for (const ModelStructure& m : r.poset.structures)
    models.push_back(model_to_json(m, /*with_cat=*/false));
  j["models"] = std::move(models);
  Json leq = Json::array();
  for (const std::vector<bool>& row : r.poset.leq) {
    Json cells = Json::array();
    for (bool cell : row) cells.push_back(cell);
    leq.push_back(std::move(cells));
  }
  j["leq"] = std::move(leq);
  j["all_pairs_have_meets"] = r.all_pairs_have_meets;
  j["designated_pair"] = int_pair(r.designated_pair[0], r.designated_pair[1]);
  j["designated_pair_has_meet"] = r.designated_pair_has_meet;
  j["maximal_lower_bounds"] = Json(r.designated_maximal_lower_bounds);
  return j;
}

}  // namespace finhom
