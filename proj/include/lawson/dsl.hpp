#pragma once

#include "lawson/variety.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lawson {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  int line_;
  int column_;
  std::string message_;
};

struct NamedVariety {
  std::string name;
  Variety variety;
};

/// Parsed construction file: atoms and let-bindings in source order.
class Document {
public:
  const std::vector<std::shared_ptr<const AtomDecl>>& atoms() const { return atoms_; }
  const std::vector<NamedVariety>& lets() const { return lets_; }

  /// Let-bound variety or atom by name.
  std::optional<Variety> find(std::string_view name) const;
  std::shared_ptr<const AtomDecl> find_atom(std::string_view id) const;

  void add_atom(std::shared_ptr<const AtomDecl> atom);
  void add_let(std::string name, Variety v);

private:
  std::vector<std::shared_ptr<const AtomDecl>> atoms_;
  std::vector<NamedVariety> lets_;
};

/// Parses the construction language:
///
///   atom Quintic dim = 3 { H = [Z, 0, Z, Z^204, Z, 0, Z] NS = 1 hom(1,2) = INF_Q }
///   let X = blowup(P(5), Quintic, codim=2)
///
/// Throws ParseError with the position of the offending token for both
/// syntax and validation failures.
Document parse_document(std::string_view text);

/// Canonical source text. parse_document(print_document(d)) reproduces d.
std::string print_document(const Document& doc);

} // namespace lawson
