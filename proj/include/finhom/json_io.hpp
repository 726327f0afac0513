#pragma once

// JSON encoding and decoding for the library's value types: categories,
// morphism families, weak factorization systems, premodel/model structure
// files, functors, set-valued diagrams and presheaves, Reedy data, and the
// violation records produced by the verifiers.
//
// Serialization is canonical — keys in a fixed order, id lists ascending —
// so equal values produce byte-identical documents.  Every parser validates
// its input and throws std::invalid_argument with a readable message on
// malformed data; syntactically broken JSON raises the parser's own
// exception before these functions are reached.

#include <finhom/fincat.hpp>
#include <finhom/lifting.hpp>
#include <finhom/premodel.hpp>
#include <finhom/reedy.hpp>
#include <finhom/wfs.hpp>

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>

namespace finhom {

// Ordered so that serialization order is under our control, not the key
// hash's.
using Json = nlohmann::ordered_json;

// Version of the on-disk document formats accepted and produced here.
std::string schema_version();

// ---------------------------------------------------------------------------
// Finite categories.
// ---------------------------------------------------------------------------
// {"objects": [names],
//  "morphisms": [{"id": n, "src": name, "dst": name}],
//  "identities": {name: morphism id},
//  "compose": [[g, f, g∘f]]}
// The compose table lists every composable pair, (g, f) ascending.

Json category_to_json(const FiniteCategory& C);
// Structural parse only; no axiom checking.
RawCategory raw_category_from_json(const Json& j);
// Parse plus full validation.  Axiom failures surface as
// std::invalid_argument carrying the violation text.
FiniteCategory category_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Morphism families: an ascending id list.
// ---------------------------------------------------------------------------

Json family_to_json(const MorphismFamily& F);
// Accepts any order, rejects duplicates and out-of-range ids.
MorphismFamily family_from_json(const FiniteCategory& C, const Json& j);

// ---------------------------------------------------------------------------
// Finite-set morphisms and families.
// ---------------------------------------------------------------------------
// Morphism: {"src": n, "dst": m, "map": [images]}.
// Family:   {"tag": "mono" | "epi" | "iso" | "all"}
//        or {"tag": "explicit", "list": [morphisms]}.

Json fs_mor_to_json(const FinSetMor& f);
FinSetMor fs_mor_from_json(const Json& j);
Json fs_family_to_json(const FinSetFamily& F);
FinSetFamily fs_family_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Weak factorization systems.
// ---------------------------------------------------------------------------
// {"L": [ids], "R": [ids], "record": {"exact": bool, "bound": n}}.  The
// record is optional on input and defaults to exact.

Json wfs_to_json(const WeakFactorizationSystem& w);
WeakFactorizationSystem wfs_from_json(const FiniteCategory& C, const Json& j);

// ---------------------------------------------------------------------------
// Structure files.
// ---------------------------------------------------------------------------
// {"cat": category, "C": [ids], "AC": [ids], "F": [ids], "AF": [ids]} plus
// "W" for model structures.  The ambient category is embedded so the file
// is self-contained; with_cat = false drops it inside reports whose
// ambient category is clear from context.

Json premodel_to_json(const PremodelStructure& pm, bool with_cat = true);
Json model_to_json(const ModelStructure& m, bool with_cat = true);

// A parsed structure file.  The category is owned here and the structure's
// families point into it.  Parsing validates the category and the family
// ids only; whether the classes satisfy the premodel or model axioms is the
// caller's question (see `model verify`), so invalid structures load fine
// and fail their verification instead.
struct OwnedPremodel {
  std::shared_ptr<const FiniteCategory> cat;
  PremodelStructure structure;
  std::optional<MorphismFamily> weq;  // present when the file carries "W"
};
OwnedPremodel premodel_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Functors.
// ---------------------------------------------------------------------------
// {"objects": {source object: target object},
//  "morphisms": {source morphism id: target morphism id}}.
// Parsing requires totality and functoriality.

Json functor_to_json(const Functor& F);
Functor functor_from_json(const FiniteCategory& src, const FiniteCategory& dst,
                          const Json& j);

// ---------------------------------------------------------------------------
// Set-valued diagrams and presheaves.
// ---------------------------------------------------------------------------
// {"at": {object: size}, "act": {morphism id: [images]}} keyed by the shape
// (resp. index) category; identity actions are implied and omitted.  For a
// presheaf the map under morphism m : x → y goes X(y) → X(x).

Json diagram_to_json(const FinSetDiagram& X);
FinSetDiagram diagram_from_json(const FiniteCategory& shape, const Json& j);
Json presheaf_to_json(const Presheaf& X);
Presheaf presheaf_from_json(const FiniteCategory& index, const Json& j);
// {"src": presheaf, "dst": presheaf, "components": {object: [images]}}.
Json presheaf_mor_to_json(const PresheafMor& f);

// ---------------------------------------------------------------------------
// Reedy categories.
// ---------------------------------------------------------------------------
// The category document plus {"degree": {object: n}, "plus": [ids],
// "minus": [ids]} at top level.  Parsing validates the category and the id
// ranges but not the Reedy axioms, so `reedy check` can report an axiom
// failure as a verdict rather than refuse the input.

Json reedy_to_json(const ReedyCategory& K);
struct OwnedReedy {
  std::shared_ptr<const FiniteCategory> cat;
  ReedyCategory reedy;
};
OwnedReedy reedy_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Violation records.  Kinds are rendered in snake_case; only the fields
// relevant to the kind appear.
// ---------------------------------------------------------------------------

Json violation_to_json(const CategoryViolation& v);
Json violation_to_json(const FunctorViolation& v);
Json violation_to_json(const WfsViolation& v);
Json violation_to_json(const PremodelViolation& v);
Json violation_to_json(const ModelViolation& v);
Json violation_to_json(const ReedyViolation& v);

// Per-stage verdicts plus the enumeration summary and the meet witnesses.
Json no_meets_to_json(const NoMeetsReport& r);

}  // namespace finhom
