#include "finhom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "finhom/json_io.hpp"
#include "finhom/quillen.hpp"

namespace finhom {
namespace {

struct Options {
  bool json = false;
  int bound = 6;
  int jobs = 1;
  unsigned int seed = 0;
  int samples = 200;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Options& o, const Json& report,
          const std::string& text) {
  if (o.json)
    out << report.dump(2) << "\n";
  else
    out << text;
}

std::string ids_text(const std::vector<int>& ids) {
  std::ostringstream s;
  s << "{";
  for (size_t i = 0; i < ids.size(); ++i) s << (i ? " " : "") << ids[i];
  s << "}";
  return s.str();
}

int find_object(const FiniteCategory& C, const std::string& name) {
  for (int x = 0; x < C.num_objects(); ++x)
    if (C.objects[x] == name) return x;
  throw std::invalid_argument("unknown object \"" + name + "\"");
}

// The reference no-meets input: the 2x2 Boolean lattice as a poset category.
FiniteCategory square_lattice() {
  auto leq = [](int a, int b) {
    return (a / 2 <= b / 2) && (a % 2 <= b % 2);
  };
  std::vector<std::vector<bool>> matrix(4, std::vector<bool>(4, false));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) matrix[a][b] = leq(a, b);
  return poset_category(matrix, {"00", "01", "10", "11"});
}

// ---------------------------------------------------------------------------
// Sampling of diagram morphisms for `reedy check`.  Diagrams are finite
// coproducts of corepresentables Hom(a, -), which are functorial by
// construction; a morphism between two such coproducts picks, for each
// summand Hom(a, -) of the source, a summand Hom(b, -) of the target and a
// morphism b -> a, and acts by precomposition.  This draws valid diagram
// morphisms with no rejection loop over functoriality.
// ---------------------------------------------------------------------------

struct CorepSum {
  FinSetDiagram diagram;
  std::vector<std::vector<std::vector<int>>> homs;  // [summand][object] = ids
  std::vector<std::vector<int>> offset;             // [summand][object]
};

int position_of(const std::vector<int>& ids, int id) {
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return static_cast<int>(i);
  throw std::logic_error("corepresentable sum: composite not in hom list");
}

CorepSum corep_sum(const FiniteCategory& C, const std::vector<int>& summands) {
  CorepSum S;
  S.diagram.shape = &C;
  S.diagram.at.assign(C.num_objects(), 0);
  S.homs.resize(summands.size());
  S.offset.assign(summands.size(), std::vector<int>(C.num_objects(), 0));
  for (size_t i = 0; i < summands.size(); ++i) {
    S.homs[i].resize(C.num_objects());
    for (int y = 0; y < C.num_objects(); ++y) {
      S.offset[i][y] = S.diagram.at[y];
      S.homs[i][y] = C.hom(summands[i], y);
      S.diagram.at[y] += static_cast<int>(S.homs[i][y].size());
    }
  }
  S.diagram.act.resize(C.num_morphisms());
  for (int m = 0; m < C.num_morphisms(); ++m) {
    int y = C.morphisms[m].src, z = C.morphisms[m].dst;
    FinSetMor f{S.diagram.at[y], S.diagram.at[z], {}};
    f.map.resize(f.src);
    for (size_t i = 0; i < summands.size(); ++i)
      for (size_t g = 0; g < S.homs[i][y].size(); ++g) {
        int composed = C.compose(m, S.homs[i][y][g]);
        f.map[S.offset[i][y] + g] =
            S.offset[i][z] + position_of(S.homs[i][z], composed);
      }
    S.diagram.act[m] = std::move(f);
  }
  return S;
}

std::vector<DiagramMor> sample_diagram_morphisms(const FiniteCategory& C,
                                                 int count, int bound,
                                                 unsigned int seed) {
  std::mt19937 rng(seed);
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int max_summands = std::min(3, std::max(1, bound));
  std::vector<DiagramMor> samples;
  long attempts = 0, budget = 50L * count + 100;
  while (static_cast<int>(samples.size()) < count) {
    if (++attempts > budget)
      throw std::invalid_argument(
          "sampling diagram morphisms failed; the category's hom sets are "
          "too sparse");
    std::vector<int> sx(rand_int(0, max_summands));
    std::vector<int> sy(rand_int(0, max_summands));
    for (int& a : sx) a = rand_int(0, C.num_objects() - 1);
    for (int& b : sy) b = rand_int(0, C.num_objects() - 1);

    // For each source summand Hom(a, -), pick a target summand Hom(b, -)
    // and a morphism u : b -> a.
    std::vector<std::pair<int, int>> choice(sx.size());  // (summand, u)
    bool ok = true;
    for (size_t i = 0; i < sx.size() && ok; ++i) {
      std::vector<std::pair<int, int>> candidates;
      for (size_t j = 0; j < sy.size(); ++j)
        for (int u : C.hom(sy[j], sx[i]))
          candidates.emplace_back(static_cast<int>(j), u);
      if (candidates.empty())
        ok = false;
      else
        choice[i] = candidates[rand_int(0, static_cast<int>(candidates.size()) - 1)];
    }
    if (!ok) continue;

    CorepSum X = corep_sum(C, sx), Y = corep_sum(C, sy);
    DiagramMor eta;
    eta.src = X.diagram;
    eta.dst = Y.diagram;
    eta.component.resize(C.num_objects());
    for (int y = 0; y < C.num_objects(); ++y) {
      FinSetMor comp{X.diagram.at[y], Y.diagram.at[y], {}};
      comp.map.resize(comp.src);
      for (size_t i = 0; i < sx.size(); ++i) {
        auto [j, u] = choice[i];
        for (size_t g = 0; g < X.homs[i][y].size(); ++g) {
          int composed = C.compose(X.homs[i][y][g], u);
          comp.map[X.offset[i][y] + g] =
              Y.offset[j][y] + position_of(Y.homs[j][y], composed);
        }
      }
      eta.component[y] = std::move(comp);
    }
    samples.push_back(std::move(eta));
  }
  return samples;
}

// ---------------------------------------------------------------------------
// Command bodies.  Each returns the process exit code.
// ---------------------------------------------------------------------------

int cmd_cat_validate(const Options& o, const std::string& file,
                     std::ostream& out) {
  CategoryCheck check = validate_category(raw_category_from_json(load_json(file)));
  Json report;
  report["ok"] = check.ok();
  if (check.ok()) {
    report["objects"] = check.category->num_objects();
    report["morphisms"] = check.category->num_morphisms();
    emit(out, o, report,
         "ok: " + std::to_string(check.category->num_objects()) +
             " objects, " + std::to_string(check.category->num_morphisms()) +
             " morphisms\n");
    return 0;
  }
  report["violation"] = violation_to_json(*check.violation);
  emit(out, o, report,
       "invalid category: " + check.violation->detail + "\n");
  return 2;
}

int cmd_wfs_enumerate(const Options& o, const std::string& file,
                      std::ostream& out) {
  FiniteCategory C = category_from_json(load_json(file));
  std::vector<WeakFactorizationSystem> all = enumerate_wfs(C, o.jobs);
  Json report;
  report["count"] = all.size();
  Json list = Json::array();
  for (const WeakFactorizationSystem& w : all) list.push_back(wfs_to_json(w));
  report["wfs"] = std::move(list);
  std::ostringstream text;
  text << all.size() << " weak factorization systems\n";
  for (size_t i = 0; i < all.size(); ++i)
    text << "[" << i << "] L=" << ids_text(all[i].left.ids())
         << " R=" << ids_text(all[i].right.ids()) << "\n";
  emit(out, o, report, text.str());
  return 0;
}

int cmd_wfs_verify(const Options& o, const std::string& cat_file,
                   const std::string& wfs_file, std::ostream& out) {
  FiniteCategory C = category_from_json(load_json(cat_file));
  WeakFactorizationSystem w = wfs_from_json(C, load_json(wfs_file));
  WfsCheck check = verify_wfs(C, w.left, w.right);
  Json report;
  report["ok"] = check.ok;
  if (check.ok) {
    emit(out, o, report, "wfs verified\n");
    return 0;
  }
  report["violation"] = violation_to_json(*check.violation);
  emit(out, o, report,
       "violation: " + violation_to_json(*check.violation).dump() + "\n");
  return 1;
}

int cmd_wfs_generate(const Options& o, const std::string& cat_file,
                     const std::vector<int>& generators, std::ostream& out) {
  FiniteCategory C = category_from_json(load_json(cat_file));
  GenerateWfsResult result = generate_wfs(C, generators);
  Json report;
  report["ok"] = result.ok();
  if (result.ok()) {
    report["wfs"] = wfs_to_json(*result.wfs);
    emit(out, o, report,
         "L=" + ids_text(result.wfs->left.ids()) +
             " R=" + ids_text(result.wfs->right.ids()) + "\n");
    return 0;
  }
  report["violation"] = violation_to_json(*result.violation);
  emit(out, o, report,
       "violation: " + violation_to_json(*result.violation).dump() + "\n");
  return 1;
}

int cmd_model_enumerate(const Options& o, const std::string& file,
                        std::ostream& out) {
  FiniteCategory C = category_from_json(load_json(file));
  std::vector<ModelStructure> models = enumerate_model(C, o.jobs);
  Json report;
  report["count"] = models.size();
  Json list = Json::array();
  for (const ModelStructure& m : models)
    list.push_back(model_to_json(m, /*with_cat=*/false));
  report["models"] = std::move(list);
  std::ostringstream text;
  text << models.size() << " model structures\n";
  for (size_t i = 0; i < models.size(); ++i)
    text << "[" << i << "] C=" << ids_text(models[i].premodel.cof.ids())
         << " AC=" << ids_text(models[i].premodel.acof.ids())
         << " W=" << ids_text(models[i].weq.ids()) << "\n";
  emit(out, o, report, text.str());
  return 0;
}

int cmd_model_verify(const Options& o, const std::string& file,
                     std::ostream& out) {
  OwnedPremodel f = premodel_from_json(load_json(file));
  PremodelCheck pc = verify_premodel(*f.cat, f.structure.cof, f.structure.acof,
                                     f.structure.fib, f.structure.afib);
  Json report;
  if (!pc.ok()) {
    report["ok"] = false;
    report["violation"] = violation_to_json(*pc.violation);
    emit(out, o, report,
         "violation: " + violation_to_json(*pc.violation).dump() + "\n");
    return 1;
  }
  if (!f.weq) {
    report["ok"] = true;
    report["verified"] = "premodel";
    emit(out, o, report, "premodel structure verified\n");
    return 0;
  }
  ModelCheck mc = is_model(f.structure);
  if (!mc.ok()) {
    report["ok"] = false;
    report["violation"] = violation_to_json(*mc.violation);
    emit(out, o, report,
         "violation: " + violation_to_json(*mc.violation).dump() + "\n");
    return 1;
  }
  for (int m = 0; m < f.cat->num_morphisms(); ++m)
    if (mc.model->weq.member[m] != f.weq->member[m]) {
      report["ok"] = false;
      Json v;
      v["kind"] = "weq_mismatch";
      v["morphism"] = m;
      report["violation"] = std::move(v);
      emit(out, o, report,
           "violation: declared W differs from the induced weak "
           "equivalences at morphism #" + std::to_string(m) + "\n");
      return 1;
    }
  report["ok"] = true;
  report["verified"] = "model";
  emit(out, o, report, "model structure verified\n");
  return 0;
}

int cmd_model_meet(const Options& o, const std::string& file, int a, int b,
                   std::ostream& out) {
  FiniteCategory C = category_from_json(load_json(file));
  std::vector<ModelStructure> models = enumerate_model(C, o.jobs);
  StructurePoset poset = model_poset(std::move(models));
  int n = static_cast<int>(poset.structures.size());
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("structure index out of range; " +
                                std::to_string(n) + " model structures");
  MeetResult meet = poset_meet(poset, a, b);
  Json report;
  report["count"] = n;
  report["pair"] = Json::array({a, b});
  report["found"] = meet.found();
  if (meet.found()) {
    report["meet"] = *meet.meet;
    report["structure"] =
        model_to_json(poset.structures[*meet.meet], /*with_cat=*/false);
    emit(out, o, report,
         "meet: structure " + std::to_string(*meet.meet) + "\n");
    return 0;
  }
  report["maximal_lower_bounds"] = Json(meet.maximal_lower_bounds);
  emit(out, o, report,
       "no meet; maximal lower bounds " +
           ids_text(meet.maximal_lower_bounds) + "\n");
  return 1;
}

int cmd_no_meets_demo(const Options& o, const std::string& file,
                      std::ostream& out) {
  FiniteCategory C =
      file.empty() ? square_lattice() : category_from_json(load_json(file));
  NoMeetsReport r = verify_no_meets(C);
  Json report = no_meets_to_json(r);
  std::ostringstream text;
  for (size_t i = 0; i < r.stages.size(); ++i)
    text << "stage " << (i + 1) << " " << r.stages[i].name << ": "
         << (r.stages[i].ok ? "ok" : "failed")
         << (r.stages[i].detail.empty() ? "" : " (" + r.stages[i].detail + ")")
         << "\n";
  text << "result: "
       << (r.ok ? "ok"
                : "failed at stage " + std::to_string(r.failed_stage))
       << "\n";
  emit(out, o, report, text.str());
  return r.ok ? 0 : 1;
}

int cmd_quillen_check(const Options& o, const std::string& functor_file,
                      const std::string& src_file, const std::string& dst_file,
                      std::ostream& out) {
  OwnedPremodel M = premodel_from_json(load_json(src_file));
  OwnedPremodel N = premodel_from_json(load_json(dst_file));
  for (const auto* p : {&M, &N}) {
    PremodelCheck pc =
        verify_premodel(*p->cat, p->structure.cof, p->structure.acof,
                        p->structure.fib, p->structure.afib);
    if (!pc.ok())
      throw std::invalid_argument(
          (p == &M ? src_file : dst_file) +
          ": not a premodel structure (violation " +
          violation_to_json(*pc.violation).dump() + ")");
  }
  Functor F = functor_from_json(*M.cat, *N.cat, load_json(functor_file));
  QuillenCheck qc = is_left_quillen(F, M.structure, N.structure);
  Json report;
  report["ok"] = qc.ok;
  if (qc.ok) {
    emit(out, o, report, "left Quillen\n");
    return 0;
  }
  Json witness;
  witness["morphism"] = qc.witness;
  witness["class"] = qc.cls;
  report["witness"] = std::move(witness);
  emit(out, o, report,
       "not left Quillen: morphism #" + std::to_string(qc.witness) +
           " leaves " + qc.cls + "\n");
  return 1;
}

int cmd_quillen_bifunctor(const Options& o, std::ostream& out) {
  MonoidalReport r = check_monoidal_finset();
  Json report;
  report["ok"] = r.ok;
  report["unit_cofibrant"] = r.unit_cofibrant;
  report["associator_ok"] = r.associator_ok;
  Json bf;
  bf["ok"] = r.bifunctor.ok;
  if (!r.bifunctor.ok) {
    bf["which"] = r.bifunctor.which;
    if (r.bifunctor.witness)
      bf["witness"] = Json::array({fs_mor_to_json(r.bifunctor.witness->first),
                                   fs_mor_to_json(r.bifunctor.witness->second)});
  }
  report["bifunctor"] = std::move(bf);
  emit(out, o, report,
       std::string("cartesian product on finite sets: ") +
           (r.ok ? "Quillen bifunctor conditions hold\n"
                 : "Quillen bifunctor conditions fail\n"));
  return r.ok ? 0 : 1;
}

int cmd_reedy_check(const Options& o, const std::string& file,
                    std::ostream& out) {
  OwnedReedy K = reedy_from_json(load_json(file));
  Json report;
  if (auto violation = verify_reedy(K.reedy)) {
    report["ok"] = false;
    report["violation"] = violation_to_json(*violation);
    emit(out, o, report,
         "violation: " + violation_to_json(*violation).dump() + "\n");
    return 1;
  }
  report["ok"] = true;
  bool direct = is_direct(K.reedy);
  report["direct"] = direct;
  std::ostringstream text;
  text << "Reedy axioms verified\n";
  if (direct) {
    std::vector<DiagramMor> samples =
        sample_diagram_morphisms(*K.cat, o.samples, o.bound, o.seed);
    ReedyProjReport pr = check_reedy_eq_proj(finset_premodel(), K.reedy, samples);
    Json cmp;
    cmp["checked"] = pr.checked;
    cmp["ok"] = pr.ok;
    cmp["first_mismatch"] = pr.first_mismatch;
    report["projective_comparison"] = std::move(cmp);
    text << "direct base: Reedy and componentwise fibration verdicts agree "
            "on " << pr.checked << " sampled diagram morphisms\n";
    if (!pr.ok) {
      report["ok"] = false;
      emit(out, o, report,
           "mismatch at sample " + std::to_string(pr.first_mismatch) + "\n");
      return 1;
    }
  }
  emit(out, o, report, text.str());
  return 0;
}

int cmd_reedy_latching(const Options& o, const std::string& reedy_file,
                       const std::string& diagram_file,
                       const std::string& object, std::ostream& out) {
  OwnedReedy K = reedy_from_json(load_json(reedy_file));
  FinSetDiagram X = diagram_from_json(*K.cat, load_json(diagram_file));
  int k = find_object(*K.cat, object);
  LatchingResult L = latching(K.reedy, X, k);
  Json report;
  report["object"] = object;
  report["arrows"] = Json(L.arrows);
  report["size"] = L.colimit.apex.n;
  report["to_level"] = fs_mor_to_json(L.to_level);
  emit(out, o, report,
       "latching object at \"" + object + "\": size " +
           std::to_string(L.colimit.apex.n) + ", arrows " +
           ids_text(L.arrows) + "\n");
  return 0;
}

int cmd_reedy_generators(const Options& o, const std::string& reedy_file,
                         const std::string& base_file, std::ostream& out) {
  OwnedReedy K = reedy_from_json(load_json(reedy_file));
  std::vector<FinSetMor> base;
  if (base_file.empty()) {
    base.push_back(FinSetMor{0, 1, {}});
  } else {
    for (const Json& e : load_json(base_file))
      base.push_back(fs_mor_from_json(e));
  }
  std::vector<PresheafMor> gens = reedy_generators(K.reedy, base);
  Json report;
  report["count"] = gens.size();
  Json list = Json::array();
  for (const PresheafMor& g : gens) list.push_back(presheaf_mor_to_json(g));
  report["generators"] = std::move(list);
  std::ostringstream text;
  text << gens.size() << " generators\n";
  for (size_t i = 0; i < gens.size(); ++i) {
    text << "[" << i << "]";
    for (int x = 0; x < K.cat->num_objects(); ++x)
      text << " " << K.cat->objects[x] << ":" << gens[i].src.at[x] << "->"
           << gens[i].dst.at[x];
    text << "\n";
  }
  emit(out, o, report, text.str());
  return 0;
}

int cmd_cylinder_find(const Options& o, const std::string& structure_file,
                      const std::string& object, bool finset, int size,
                      std::ostream& out) {
  Json report;
  if (finset) {
    if (!structure_file.empty() || !object.empty())
      throw std::invalid_argument(
          "--finset takes --size, not a structure file or --object");
    FsCylinderResult r =
        find_anodyne_cylinder_finset(finset_premodel(), size, o.bound);
    report["found"] = r.found;
    if (r.found) {
      report["include"] = fs_mor_to_json(r.include);
      report["project"] = fs_mor_to_json(r.project);
      emit(out, o, report,
           "cylinder found through a set of size " +
               std::to_string(r.include.dst) + "\n");
      return 0;
    }
    emit(out, o, report, "no anodyne cylinder\n");
    return 1;
  }
  if (structure_file.empty() || object.empty())
    throw std::invalid_argument(
        "expected a structure file and --object, or --finset --size N");
  OwnedPremodel f = premodel_from_json(load_json(structure_file));
  PremodelCheck pc = verify_premodel(*f.cat, f.structure.cof, f.structure.acof,
                                     f.structure.fib, f.structure.afib);
  if (!pc.ok())
    throw std::invalid_argument(structure_file +
                                ": not a premodel structure");
  int a = find_object(*f.cat, object);
  CylinderResult r = find_anodyne_cylinder(f.structure, a);
  report["found"] = r.found;
  if (r.found) {
    report["object"] = f.cat->objects[r.object];
    report["include"] = r.include;
    report["project"] = r.project;
    emit(out, o, report,
         "cylinder object \"" + f.cat->objects[r.object] + "\": include #" +
             std::to_string(r.include) + ", project #" +
             std::to_string(r.project) + "\n");
    return 0;
  }
  emit(out, o, report, "no anodyne cylinder\n");
  return 1;
}

int cmd_lift_solve(const Options& o, const std::string& file, int i, int p,
                   int top, int bottom, std::ostream& out) {
  FiniteCategory C = category_from_json(load_json(file));
  for (int m : {i, p, top, bottom})
    if (m < 0 || m >= C.num_morphisms())
      throw std::invalid_argument("morphism id " + std::to_string(m) +
                                  " out of range");
  LiftWitness w = has_lift(C, i, p, top, bottom);
  Json report;
  report["liftable"] = w.liftable;
  if (w.liftable) {
    report["filler"] = *w.filler;
    emit(out, o, report, "filler: " + std::to_string(*w.filler) + "\n");
    return 0;
  }
  emit(out, o, report, "none\n");
  return 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"verification and enumeration for finite homotopical algebra"};
  app.name("finhom");
  Options o;
  app.add_flag("--json", o.json, "emit a machine-readable JSON report");
  app.add_option("--bound", o.bound,
                 "size cap for finite-set searches and sampling")
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker threads for enumeration")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled checks")
      ->capture_default_str();
  app.set_version_flag("--version", "schema version " + schema_version());
  app.require_subcommand(1);

  struct Paths {
    std::string a, b, c;
    std::string object, base;
    std::vector<int> generators;
    int meet_a = 0, meet_b = 0;
    bool finset = false;
    int size = 0;
    int i = 0, p = 0, top = 0, bottom = 0;
  } paths;

  auto* cat = app.add_subcommand("cat", "finite category utilities");
  cat->fallthrough();
  cat->require_subcommand(1);
  auto* cat_validate =
      cat->add_subcommand("validate", "check the category axioms of a file");
  cat_validate->fallthrough();
  cat_validate->add_option("file", paths.a, "category JSON file")->required();

  auto* wfs = app.add_subcommand("wfs", "weak factorization systems");
  wfs->fallthrough();
  wfs->require_subcommand(1);
  auto* wfs_enumerate =
      wfs->add_subcommand("enumerate", "list every WFS on a finite category");
  wfs_enumerate->fallthrough();
  wfs_enumerate->add_option("file", paths.a, "category JSON file")->required();
  auto* wfs_verify = wfs->add_subcommand("verify", "check a WFS file");
  wfs_verify->fallthrough();
  wfs_verify->add_option("cat", paths.a, "category JSON file")->required();
  wfs_verify->add_option("wfs", paths.b, "WFS JSON file")->required();
  auto* wfs_generate =
      wfs->add_subcommand("generate", "generate a WFS from morphism ids");
  wfs_generate->fallthrough();
  wfs_generate->add_option("cat", paths.a, "category JSON file")->required();
  wfs_generate->add_option("--gen", paths.generators,
                           "generating morphism ids");

  auto* model = app.add_subcommand("model", "premodel and model structures");
  model->fallthrough();
  model->require_subcommand(1);
  auto* model_enumerate = model->add_subcommand(
      "enumerate", "list every model structure on a finite category");
  model_enumerate->fallthrough();
  model_enumerate->add_option("file", paths.a, "category JSON file")
      ->required();
  auto* model_verify =
      model->add_subcommand("verify", "check a structure file");
  model_verify->fallthrough();
  model_verify->add_option("file", paths.a, "structure JSON file")->required();
  auto* model_meet = model->add_subcommand(
      "meet", "meet of two enumerated model structures, by index");
  model_meet->fallthrough();
  model_meet->add_option("file", paths.a, "category JSON file")->required();
  model_meet->add_option("--a", paths.meet_a, "first structure index")
      ->required();
  model_meet->add_option("--b", paths.meet_b, "second structure index")
      ->required();
  auto* no_meets = model->add_subcommand(
      "no-meets-demo",
      "run the no-meets pipeline (defaults to the 2x2 lattice)");
  no_meets->fallthrough();
  no_meets->add_option("file", paths.a, "category JSON file (optional)");

  auto* quillen = app.add_subcommand("quillen", "Quillen conditions");
  quillen->fallthrough();
  quillen->require_subcommand(1);
  auto* quillen_check = quillen->add_subcommand(
      "check", "is a functor between structure files left Quillen");
  quillen_check->fallthrough();
  quillen_check->add_option("functor", paths.a, "functor JSON file")
      ->required();
  quillen_check->add_option("source", paths.b, "source structure file")
      ->required();
  quillen_check->add_option("target", paths.c, "target structure file")
      ->required();
  auto* quillen_bifunctor = quillen->add_subcommand(
      "bifunctor",
      "Quillen bifunctor conditions for the product on finite sets");
  quillen_bifunctor->fallthrough();

  auto* reedy = app.add_subcommand("reedy", "Reedy categories and diagrams");
  reedy->fallthrough();
  reedy->require_subcommand(1);
  auto* reedy_check = reedy->add_subcommand(
      "check",
      "verify the Reedy axioms; on a direct base, also compare Reedy and "
      "componentwise fibrations on sampled diagram morphisms");
  reedy_check->fallthrough();
  reedy_check->add_option("file", paths.a, "Reedy category JSON file")
      ->required();
  reedy_check->add_option("--samples", o.samples,
                          "number of sampled diagram morphisms")
      ->capture_default_str();
  auto* reedy_latching = reedy->add_subcommand(
      "latching", "latching object of a diagram at an object");
  reedy_latching->fallthrough();
  reedy_latching->add_option("reedy", paths.a, "Reedy category JSON file")
      ->required();
  reedy_latching->add_option("diagram", paths.b, "diagram JSON file")
      ->required();
  reedy_latching->add_option("--object", paths.object, "object name")
      ->required();
  auto* reedy_generators_cmd = reedy->add_subcommand(
      "generators", "boundary generators in presheaves on the base");
  reedy_generators_cmd->fallthrough();
  reedy_generators_cmd->add_option("file", paths.a, "Reedy category JSON file")
      ->required();
  reedy_generators_cmd->add_option(
      "--base", paths.base,
      "JSON array of finite-set morphisms (default: the point inclusion)");

  auto* cylinder = app.add_subcommand("cylinder", "anodyne cylinder objects");
  cylinder->fallthrough();
  cylinder->require_subcommand(1);
  auto* cylinder_find = cylinder->add_subcommand(
      "find", "search for an anodyne cylinder on an object");
  cylinder_find->fallthrough();
  cylinder_find->add_option("file", paths.a, "structure JSON file");
  cylinder_find->add_option("--object", paths.object, "object name");
  cylinder_find->add_flag("--finset", paths.finset,
                          "use the standard structure on finite sets");
  cylinder_find->add_option("--size", paths.size,
                            "set size for --finset mode");

  auto* lift = app.add_subcommand("lift", "lifting problems");
  lift->fallthrough();
  lift->require_subcommand(1);
  auto* lift_solve =
      lift->add_subcommand("solve", "find a filler for a commuting square");
  lift_solve->fallthrough();
  lift_solve->add_option("file", paths.a, "category JSON file")->required();
  lift_solve->add_option("--i", paths.i, "left morphism id")->required();
  lift_solve->add_option("--p", paths.p, "right morphism id")->required();
  lift_solve->add_option("--top", paths.top, "top morphism id")->required();
  lift_solve->add_option("--bottom", paths.bottom, "bottom morphism id")
      ->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cat_validate->parsed()) return cmd_cat_validate(o, paths.a, out);
    if (wfs_enumerate->parsed()) return cmd_wfs_enumerate(o, paths.a, out);
    if (wfs_verify->parsed())
      return cmd_wfs_verify(o, paths.a, paths.b, out);
    if (wfs_generate->parsed())
      return cmd_wfs_generate(o, paths.a, paths.generators, out);
    if (model_enumerate->parsed()) return cmd_model_enumerate(o, paths.a, out);
    if (model_verify->parsed()) return cmd_model_verify(o, paths.a, out);
    if (model_meet->parsed())
      return cmd_model_meet(o, paths.a, paths.meet_a, paths.meet_b, out);
    if (no_meets->parsed()) return cmd_no_meets_demo(o, paths.a, out);
    if (quillen_check->parsed())
      return cmd_quillen_check(o, paths.a, paths.b, paths.c, out);
    if (quillen_bifunctor->parsed()) return cmd_quillen_bifunctor(o, out);
    if (reedy_check->parsed()) return cmd_reedy_check(o, paths.a, out);
    if (reedy_latching->parsed())
      return cmd_reedy_latching(o, paths.a, paths.b, paths.object, out);
    if (reedy_generators_cmd->parsed())
      return cmd_reedy_generators(o, paths.a, paths.base, out);
    if (cylinder_find->parsed())
      return cmd_cylinder_find(o, paths.a, paths.object, paths.finset,
                               paths.size, out);
    if (lift_solve->parsed())
      return cmd_lift_solve(o, paths.a, paths.i, paths.p, paths.top,
                            paths.bottom, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace finhom
