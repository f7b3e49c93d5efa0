#include "lawson/variety.hpp"

#include <algorithm>

namespace lawson {

GroupExpr HomAnnotation::as_expr() const {
  switch (value) {
    case Value::zero: return GroupExpr::zero();
    case Value::infinite_q: return GroupExpr::infinite_q();
    case Value::explicit_expr: return normalize(expr);
    case Value::unknown: return GroupExpr::unknown();
  }
  return GroupExpr::unknown();
}

void AtomDecl::validate() const {
  const std::string where = "atom " + id + ": ";
  if (dim < 0) throw ConstructionError(where + "dimension must be non-negative");
  if (singular) {
    const auto& table = *singular;
    if (table.empty()) throw ConstructionError(where + "empty singular table");
    if (static_cast<int>(table.size()) > 2 * dim + 1) {
      throw ConstructionError(where + "singular table has entries beyond degree " + std::to_string(2 * dim));
    }
    if (!expr_equal(table.front(), GroupExpr::z())) {
      throw ConstructionError(where + "H_0 must be Z, got " + table.front().to_string());
    }
    if (static_cast<int>(table.size()) == 2 * dim + 1 && !expr_equal(table.back(), GroupExpr::z())) {
      throw ConstructionError(where + "H_" + std::to_string(2 * dim) + " must be Z, got " +
                              table.back().to_string());
    }
  }
  if (ns_rank && *ns_rank < 1) throw ConstructionError(where + "NS rank must be positive");

  for (std::size_t i = 0; i < hom_annotations.size(); ++i) {
    const auto& h = hom_annotations[i];
    if (h.p < 1 || h.p > dim - 2) {
      throw ConstructionError(where + "hom(" + std::to_string(h.p) + "," + std::to_string(h.k) +
                              ") is forced; annotations need 1 <= p <= dim-2");
    }
    if (h.k < 2 * h.p || h.k > 2 * dim) {
      throw ConstructionError(where + "hom(" + std::to_string(h.p) + "," + std::to_string(h.k) +
                              ") outside 2p <= k <= 2*dim");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (hom_annotations[j].p == h.p && hom_annotations[j].k == h.k) {
        throw ConstructionError(where + "duplicate hom(" + std::to_string(h.p) + "," + std::to_string(h.k) + ")");
      }
    }
  }
  for (const auto& [pk, expr] : lawson_overrides) {
    auto [p, k] = pk;
    if (p <= 0 || p >= dim - 1) {
      throw ConstructionError(where + "L(" + std::to_string(p) + "," + std::to_string(k) +
                              ") conflicts with a forced row");
    }
    if (k < 2 * p || k > 2 * dim) {
      throw ConstructionError(where + "L(" + std::to_string(p) + "," + std::to_string(k) +
                              ") outside 2p <= k <= 2*dim");
    }
  }
}

const HomAnnotation* AtomDecl::hom_annotation(int p, int k) const {
  auto it = std::find_if(hom_annotations.begin(), hom_annotations.end(),
                         [&](const HomAnnotation& h) { return h.p == p && h.k == k; });
  return it == hom_annotations.end() ? nullptr : &*it;
}

Variety Variety::point() {
  static const auto node = std::make_shared<const VarietyNode>();
  return Variety(node);
}

Variety Variety::proj_space(int n) {
  if (n < 1) throw ConstructionError("P(n) needs n >= 1, got " + std::to_string(n));
  auto node = std::make_shared<VarietyNode>();
  node->kind = NodeKind::proj_space;
  node->dim = n;
  node->parameter = n;
  return Variety(std::move(node));
}

Variety Variety::atom(std::shared_ptr<const AtomDecl> decl) {
  if (!decl) throw ConstructionError("null atom declaration");
  auto node = std::make_shared<VarietyNode>();
  node->kind = NodeKind::atom;
  node->dim = decl->dim;
  node->atom = std::move(decl);
  return Variety(std::move(node));
}

Variety Variety::proj_bundle(const Variety& base, int rank) {
  if (rank < 1) throw ConstructionError("bundle rank must be >= 1, got " + std::to_string(rank));
  auto node = std::make_shared<VarietyNode>();
  node->kind = NodeKind::proj_bundle;
  node->dim = base.dim() + rank - 1;
  node->parameter = rank;
  node->base = base;
  return Variety(std::move(node));
}

Variety Variety::blowup(const Variety& ambient, const Variety& center, int codim) {
  if (codim < 2) {
    throw ConstructionError("blowup center must have codimension >= 2, got " + std::to_string(codim));
  }
  if (center.dim() + codim != ambient.dim()) {
    throw ConstructionError("blowup dimension mismatch: dim(center)=" + std::to_string(center.dim()) +
                            " + codim=" + std::to_string(codim) + " != dim(ambient)=" +
                            std::to_string(ambient.dim()));
  }
  auto node = std::make_shared<VarietyNode>();
  node->kind = NodeKind::blowup;
  node->dim = ambient.dim();
  node->parameter = codim;
  node->base = ambient;
  node->center = center;
  return Variety(std::move(node));
}

NodeKind Variety::kind() const { return node_->kind; }
int Variety::dim() const { return node_->dim; }
int Variety::parameter() const { return node_->parameter; }

const AtomDecl& Variety::atom_decl() const {
  if (node_->kind != NodeKind::atom) throw std::logic_error("not an atom node");
  return *node_->atom;
}

const Variety& Variety::base() const {
  if (!node_->base) throw std::logic_error("node has no base");
  return *node_->base;
}

const Variety& Variety::center() const {
  if (!node_->center) throw std::logic_error("node has no center");
  return *node_->center;
}

std::string Variety::to_string() const {
  switch (kind()) {
    case NodeKind::point: return "pt";
    case NodeKind::proj_space: return "P(" + std::to_string(parameter()) + ")";
    case NodeKind::atom: return atom_decl().id;
    case NodeKind::proj_bundle:
      return "bundle(" + base().to_string() + ", rank=" + std::to_string(parameter()) + ")";
    case NodeKind::blowup:
      return "blowup(" + base().to_string() + ", " + center().to_string() +
             ", codim=" + std::to_string(parameter()) + ")";
  }
  return {};
}

bool Variety::operator==(const Variety& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || dim() != other.dim() || parameter() != other.parameter()) return false;
  switch (kind()) {
    case NodeKind::point:
    case NodeKind::proj_space: return true;
    case NodeKind::atom: return atom_decl().id == other.atom_decl().id;
    case NodeKind::proj_bundle: return base() == other.base();
    case NodeKind::blowup: return base() == other.base() && center() == other.center();
  }
  return false;
}

} // namespace lawson
