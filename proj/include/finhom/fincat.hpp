#pragma once

// Finite categories, functors, natural transformations, and computed
// adjoints.  All values are immutable after construction and every operation
// is pure.  Morphisms are identified by dense integer ids; object-valued and
// morphism-valued maps are plain index vectors.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace finhom {

struct Mor {
  int src = -1;
  int dst = -1;
  friend bool operator==(const Mor&, const Mor&) = default;
};

// A finite category with a total composition table.  table[g][f] is the id
// of g∘f when dst(f) = src(g) and -1 otherwise.  Construct via
// validate_category / poset_category / product_category rather than by hand
// unless the axioms are guaranteed by construction.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::vector<int> identity;              // per object
  std::vector<std::vector<int>> table;    // table[g][f] = g∘f or -1

  int num_objects() const { return static_cast<int>(objects.size()); }
  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  bool composable(int g, int f) const {
    return morphisms[f].dst == morphisms[g].src;
  }
  int compose(int g, int f) const { return table[g][f]; }
  bool is_identity(int m) const {
    return identity[morphisms[m].src] == m && morphisms[m].src == morphisms[m].dst;
  }
  std::vector<int> hom(int x, int y) const;   // morphism ids, ascending
  std::string mor_label(int m) const;         // "#id: src->dst" for reports

  friend bool operator==(const FiniteCategory&, const FiniteCategory&) = default;
};

// Raw, unverified category description mirroring the JSON schema.
struct RawCategory {
  struct RawMor {
    int id = -1;
    std::string src, dst;
  };
  std::vector<std::string> objects;
  std::vector<RawMor> morphisms;
  std::vector<std::pair<std::string, int>> identities;  // object -> morphism id
  std::vector<std::array<int, 3>> compose;              // [g, f, g∘f]
};

struct CategoryViolation {
  enum class Kind {
    MalformedData,        // ids not dense / names unknown / duplicate entries
    NonComposableEntry,   // compose entry on a non-composable pair
    PartialComposition,   // composable pair missing from the table
    IdentityLaw,          // id∘f ≠ f or g∘id ≠ g, or identity src/dst wrong
    Associativity,        // h∘(g∘f) ≠ (h∘g)∘f
  };
  Kind kind;
  std::string detail;                      // human-readable witness
  std::array<int, 3> witness{-1, -1, -1};  // (h,g,f) for associativity;
                                           // (g,f,-1) for table errors;
                                           // (x,f,-1) for identity laws
};

struct CategoryCheck {
  std::optional<FiniteCategory> category;
  std::optional<CategoryViolation> violation;
  bool ok() const { return category.has_value(); }
};

// Verifies the category axioms exhaustively and returns the first failing
// instance in scan order (table errors, then identity laws, then
// associativity triples in id order).
CategoryCheck validate_category(const RawCategory& data);

// Category of a finite poset given as a reflexive transitive boolean matrix;
// morphisms are the pairs x <= y in lexicographic (x, y) order.  Throws
// std::invalid_argument if the matrix is not reflexive/transitive/antisymmetric.
FiniteCategory poset_category(const std::vector<std::vector<bool>>& leq,
                              const std::vector<std::string>& names = {});

// Product category.  Object (x1, x2) has index x1*|Ob2| + x2 and name
// name1 + name2; morphism (m1, m2) has index m1*|Mor2| + m2.
FiniteCategory product_category(const FiniteCategory& c1, const FiniteCategory& c2);

// Opposite category: sources and targets swapped, composition transposed,
// object and morphism ids unchanged.  An involution.
FiniteCategory opposite(const FiniteCategory& c);

bool is_iso(const FiniteCategory& c, int m);
// Ids of all isomorphisms, ascending.
std::vector<int> iso_morphisms(const FiniteCategory& c);
// Initial/terminal object id, or nullopt.  First in object order if several.
std::optional<int> initial_object(const FiniteCategory& c);
std::optional<int> terminal_object(const FiniteCategory& c);

struct Functor {
  const FiniteCategory* source = nullptr;
  const FiniteCategory* target = nullptr;
  std::vector<int> obj_map;  // per source object
  std::vector<int> mor_map;  // per source morphism
};

struct FunctorViolation {
  std::string kind;   // "identity" | "endpoints" | "composition" | "shape"
  int witness1 = -1;  // object or morphism id
  int witness2 = -1;  // second morphism for composition
};

// nullopt when F is a functor; otherwise the first violation in scan order.
std::optional<FunctorViolation> check_functor(const Functor& F);
Functor identity_functor(const FiniteCategory& c);
Functor compose_functors(const Functor& G, const Functor& F);  // G∘F

struct NaturalTransformation {
  const Functor* source = nullptr;  // F
  const Functor* target = nullptr;  // F', same source/target categories
  std::vector<int> component;       // per source object: F(x) -> F'(x)
};

// nullopt when natural; otherwise the id of the first morphism whose
// naturality square fails (or whose component has wrong endpoints).
std::optional<int> check_natural(const NaturalTransformation& t);

// An adjunction F ⊣ G packaged with unit and counit component vectors
// (avoiding nested functor pointers).  unit[x] : x -> G(F(x)) in the source
// of F; counit[y] : F(G(y)) -> y in the target of F.
struct Adjunction {
  Functor left;   // F
  Functor right;  // G
  std::vector<int> unit;
  std::vector<int> counit;
};

// nullopt when the data is a verified adjunction: functors valid, unit and
// counit natural, triangle identities hold, and the induced maps
// Hom(Fx, y) <-> Hom(x, Gy) are mutually inverse bijections for all (x, y).
std::optional<std::string> check_adjunction(const Adjunction& adj);

// Comma category (F ↓ y), materialized explicitly.  Object i is the pair
// (object_data[i].first = x, object_data[i].second = h : Fx -> y).
struct CommaCategory {
  FiniteCategory cat;
  std::vector<std::pair<int, int>> object_data;
};
CommaCategory comma_category(const Functor& F, int y);

struct RightAdjointResult {
  std::optional<Adjunction> adjunction;
  // On failure: first target object y (in object order) such that (F ↓ y)
  // has no terminal object.
  std::optional<int> missing_terminal_at;
  bool found() const { return adjunction.has_value(); }
};

// Computes the right adjoint of F via terminal objects of comma categories,
// then verifies the adjunction (check_adjunction must pass; a failure there
// is an internal error and throws std::logic_error).
RightAdjointResult right_adjoint(const Functor& F);

bool is_essentially_surjective(const Functor& F);
bool is_fully_faithful(const Functor& F);

// Category of non-identity morphisms of a wide subcategory (given as a
// morphism mask containing all identities and closed under composition)
// sliced over / under a fixed object. Used for latching- and
// matching-style colimit shapes.
struct MorphismSlice {
  FiniteCategory cat;
  std::vector<int> object_mor;   // ambient morphism id per slice object
  std::vector<int> morphism_u;   // ambient connecting morphism per slice morphism
};

// Objects: non-identity m in `sub` with dst(m) == k; a morphism
// (a -> b) is u in `sub` with mor(b) ∘ u == mor(a).
MorphismSlice nonid_slice(const FiniteCategory& C, const std::vector<bool>& sub,
                          int k);
// Objects: non-identity m in `sub` with src(m) == k; a morphism
// (a -> b) is u in `sub` with u ∘ mor(a) == mor(b).
MorphismSlice nonid_coslice(const FiniteCategory& C,
                            const std::vector<bool>& sub, int k);

}  // namespace finhom
