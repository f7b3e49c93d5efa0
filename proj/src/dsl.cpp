#include "lawson/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace lawson {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

std::optional<Variety> Document::find(std::string_view name) const {
  for (const auto& l : lets_) {
    if (l.name == name) return l.variety;
  }
  if (auto a = find_atom(name)) return Variety::atom(a);
  return std::nullopt;
}

std::shared_ptr<const AtomDecl> Document::find_atom(std::string_view id) const {
  for (const auto& a : atoms_) {
    if (a->id == id) return a;
  }
  return nullptr;
}

void Document::add_atom(std::shared_ptr<const AtomDecl> atom) { atoms_.push_back(std::move(atom)); }

void Document::add_let(std::string name, Variety v) { lets_.push_back({std::move(name), std::move(v)}); }

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int column = 1;
};

constexpr std::array<std::string_view, 9> kReserved = {"atom", "let",  "pt",    "P",      "bundle",
                                                       "blowup", "Z", "INF_Q", "UNKNOWN"};

bool is_reserved(std::string_view s) {
  return std::find(kReserved.begin(), kReserved.end(), s) != kReserved.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      advance(j - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::integer;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      advance(j - start);
    } else if (std::string_view("={}[](),+^/").find(c) != std::string_view::npos) {
      t.kind = Tok::punct;
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(text.substr(start, i - start));
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Document parse_file() {
    while (peek().kind != Tok::end) {
      if (peek_is("atom")) {
        parse_atom();
      } else if (peek_is("let")) {
        parse_let();
      } else {
        fail(peek(), "expected 'atom' or 'let', got '" + peek().text + "'");
      }
    }
    return std::move(doc_);
  }

private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool peek_is(std::string_view text, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind != Tok::end && t.text == text;
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }

  const Token& expect(std::string_view text) {
    if (!peek_is(text)) {
      fail(peek(), "expected '" + std::string(text) + "', got " + describe(peek()));
    }
    return next();
  }

  static std::string describe(const Token& t) {
    return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
  }

  std::string expect_ident() {
    const Token& t = peek();
    if (t.kind != Tok::ident) fail(t, "expected identifier, got " + describe(t));
    if (is_reserved(t.text)) fail(t, "'" + t.text + "' is a reserved word");
    return next().text;
  }

  int expect_int() {
    const Token& t = peek();
    if (t.kind != Tok::integer) fail(t, "expected integer, got " + describe(t));
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) fail(t, "integer out of range");
    next();
    return value;
  }

  // groupexpr := "0" | term ("+" term)*
  GroupExpr parse_group_expr() {
    if (peek().kind == Tok::integer && peek().text == "0") {
      next();
      return GroupExpr::zero();
    }
    std::vector<Summand> terms;
    terms.push_back(parse_term());
    while (peek_is("+")) {
      next();
      terms.push_back(parse_term());
    }
    return normalize(GroupExpr(std::move(terms)));
  }

  Summand parse_term() {
    const Token& t = peek();
    if (peek_is("INF_Q")) {
      next();
      return Summand(InfiniteQ{});
    }
    if (peek_is("UNKNOWN")) {
      next();
      return Summand(UnknownGroup{});
    }
    if (peek_is("Z")) {
      next();
      if (peek_is("^")) {
        next();
        const Token& at = peek();
        int rank = expect_int();
        if (rank < 1) fail(at, "exponent must be >= 1");
        return Summand(FGAbelianGroup::free(rank));
      }
      if (peek_is("/")) {
        next();
        const Token& at = peek();
        int order = expect_int();
        if (order < 2) fail(at, "cyclic order must be >= 2");
        return Summand(FGAbelianGroup::cyclic(order));
      }
      return Summand(FGAbelianGroup::free(1));
    }
    fail(t, "expected a group term (Z, Z^n, Z/n, INF_Q, UNKNOWN), got " + describe(t));
  }

  void parse_atom() {
    const Token& start = next(); // atom
    const Token& id_tok = peek();
    auto decl = std::make_shared<AtomDecl>();
    decl->id = expect_ident();
    if (doc_.find_atom(decl->id)) fail(id_tok, "duplicate atom '" + decl->id + "'");
    if (doc_.find(decl->id)) fail(id_tok, "name '" + decl->id + "' already bound");
    expect("dim");
    expect("=");
    decl->dim = expect_int();
    expect("{");
    bool seen_h = false, seen_ns = false;
    while (!peek_is("}")) {
      const Token& item = peek();
      if (peek_is("H")) {
        if (seen_h) fail(item, "duplicate H table");
        seen_h = true;
        next();
        expect("=");
        expect("[");
        std::vector<GroupExpr> table;
        table.push_back(parse_group_expr());
        while (peek_is(",")) {
          next();
          table.push_back(parse_group_expr());
        }
        expect("]");
        decl->singular = std::move(table);
      } else if (peek_is("NS")) {
        if (seen_ns) fail(item, "duplicate NS");
        seen_ns = true;
        next();
        expect("=");
        decl->ns_rank = expect_int();
      } else if (peek_is("hom")) {
        next();
        HomAnnotation h;
        expect("(");
        h.p = expect_int();
        expect(",");
        h.k = expect_int();
        expect(")");
        expect("=");
        GroupExpr value = parse_group_expr();
        auto n = normalize(value);
        if (n.summands().empty()) {
          h.value = HomAnnotation::Value::zero;
        } else if (n.summands().size() == 1 && std::holds_alternative<InfiniteQ>(n.summands()[0].value)) {
          h.value = HomAnnotation::Value::infinite_q;
        } else if (n.summands().size() == 1 && std::holds_alternative<UnknownGroup>(n.summands()[0].value)) {
          h.value = HomAnnotation::Value::unknown;
        } else {
          h.value = HomAnnotation::Value::explicit_expr;
          h.expr = n;
        }
        decl->hom_annotations.push_back(std::move(h));
      } else if (peek_is("L")) {
        next();
        expect("(");
        int p = expect_int();
        expect(",");
        int k = expect_int();
        expect(")");
        expect("=");
        if (decl->lawson_overrides.count({p, k})) {
          fail(item, "duplicate L(" + std::to_string(p) + "," + std::to_string(k) + ")");
        }
        decl->lawson_overrides[{p, k}] = parse_group_expr();
      } else {
        fail(item, "expected H, NS, hom or L in atom body, got " + describe(item));
      }
    }
    expect("}");
    try {
      decl->validate();
    } catch (const ConstructionError& e) {
      fail(start, e.what());
    }
    doc_.add_atom(std::move(decl));
  }

  void parse_let() {
    next(); // let
    const Token& name_tok = peek();
    std::string name = expect_ident();
    if (doc_.find(name)) fail(name_tok, "name '" + name + "' already bound");
    expect("=");
    Variety v = parse_vexpr();
    doc_.add_let(std::move(name), std::move(v));
  }

  Variety parse_vexpr() {
    const Token& t = peek();
    try {
      if (peek_is("pt")) {
        next();
        return Variety::point();
      }
      if (peek_is("P") && peek_is("(", 1)) {
        next();
        expect("(");
        int n = expect_int();
        expect(")");
        return Variety::proj_space(n);
      }
      if (peek_is("bundle") && peek_is("(", 1)) {
        next();
        expect("(");
        Variety base = parse_vexpr();
        expect(",");
        expect("rank");
        expect("=");
        int rank = expect_int();
        expect(")");
        return Variety::proj_bundle(base, rank);
      }
      if (peek_is("blowup") && peek_is("(", 1)) {
        next();
        expect("(");
        Variety ambient = parse_vexpr();
        expect(",");
        Variety center = parse_vexpr();
        expect(",");
        expect("codim");
        expect("=");
        int codim = expect_int();
        expect(")");
        return Variety::blowup(ambient, center, codim);
      }
    } catch (const ConstructionError& e) {
      fail(t, e.what());
    }
    if (t.kind == Tok::ident && !is_reserved(t.text)) {
      next();
      if (auto v = doc_.find(t.text)) return *v;
      fail(t, "unbound name '" + t.text + "'");
    }
    fail(t, "expected a variety expression, got " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Document doc_;
};

std::string hom_value_string(const HomAnnotation& h) {
  switch (h.value) {
    case HomAnnotation::Value::zero: return "0";
    case HomAnnotation::Value::infinite_q: return "INF_Q";
    case HomAnnotation::Value::unknown: return "UNKNOWN";
    case HomAnnotation::Value::explicit_expr: return h.expr.to_string();
  }
  return "UNKNOWN";
}

} // namespace

Document parse_document(std::string_view text) { return Parser(tokenize(text)).parse_file(); }

std::string print_document(const Document& doc) {
  std::ostringstream out;
  for (const auto& a : doc.atoms()) {
    out << "atom " << a->id << " dim = " << a->dim << " {\n";
    if (a->singular) {
      out << "  H = [";
      for (std::size_t i = 0; i < a->singular->size(); ++i) {
        out << (i ? ", " : "") << (*a->singular)[i].to_string();
      }
      out << "]\n";
    }
    if (a->ns_rank) out << "  NS = " << *a->ns_rank << "\n";
    for (const auto& h : a->hom_annotations) {
      out << "  hom(" << h.p << "," << h.k << ") = " << hom_value_string(h) << "\n";
    }
    for (const auto& [pk, expr] : a->lawson_overrides) {
      out << "  L(" << pk.first << "," << pk.second << ") = " << expr.to_string() << "\n";
    }
    out << "}\n";
  }
  for (const auto& l : doc.lets()) {
    out << "let " << l.name << " = " << l.variety.to_string() << "\n";
  }
  return out.str();
}

} // namespace lawson
