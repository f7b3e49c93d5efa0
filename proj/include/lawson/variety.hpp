#pragma once

#include "lawson/abelian.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lawson {

/// Raised when a construction violates a structural invariant
/// (bad codimension, dimension mismatch, malformed atom table).
class ConstructionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Declared kernel of the cycle class map for one bigrade of an atom.
struct HomAnnotation {
  enum class Value { zero, infinite_q, explicit_expr, unknown };
  int p = 0;
  int k = 0;
  Value value = Value::unknown;
  GroupExpr expr; // only meaningful for explicit_expr

  GroupExpr as_expr() const;
};

/// An atom: a smooth projective variety whose invariants are imported as
/// declarations rather than computed.
struct AtomDecl {
  std::string id;
  int dim = 0;
  /// H_0 .. H_m with m <= 2*dim; entries past the end are unknown.
  std::optional<std::vector<GroupExpr>> singular;
  std::optional<int> ns_rank;
  std::vector<HomAnnotation> hom_annotations;
  std::map<std::pair<int, int>, GroupExpr> lawson_overrides;

  /// Throws ConstructionError on any violated invariant.
  void validate() const;

  const HomAnnotation* hom_annotation(int p, int k) const;
};

enum class NodeKind { point, proj_space, atom, proj_bundle, blowup };

struct VarietyNode;

/// Immutable construction tree of a smooth projective variety. Copies share
/// structure.
class Variety {
public:
  static Variety point();
  static Variety proj_space(int n);
  static Variety atom(std::shared_ptr<const AtomDecl> decl);
  /// P(E) for a bundle E of the given rank over `base`.
  static Variety proj_bundle(const Variety& base, int rank);
  /// Blowup of `ambient` along `center`, which must have codimension `codim` >= 2.
  static Variety blowup(const Variety& ambient, const Variety& center, int codim);

  NodeKind kind() const;
  int dim() const;

  /// ProjSpace dimension, ProjBundle rank, or Blowup codimension.
  int parameter() const;
  const AtomDecl& atom_decl() const;
  /// ProjBundle base or Blowup ambient.
  const Variety& base() const;
  /// Blowup center.
  const Variety& center() const;

  bool is_blowup() const { return kind() == NodeKind::blowup; }

  /// DSL expression text, e.g. "blowup(P(5), Quintic, codim=2)".
  std::string to_string() const;

  /// Structural equality; atoms compare by id.
  bool operator==(const Variety& other) const;

private:
  explicit Variety(std::shared_ptr<const VarietyNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const VarietyNode> node_;
};

struct VarietyNode {
  NodeKind kind = NodeKind::point;
  int dim = 0;
  int parameter = 0;
  std::shared_ptr<const AtomDecl> atom;
  std::optional<Variety> base;
  std::optional<Variety> center;
};

inline int dim(const Variety& v) { return v.dim(); }

} // namespace lawson
