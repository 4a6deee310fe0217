#include "bousfield/cli/parser.hpp"

#include <cctype>
#include <map>

#include "bousfield/catalog.hpp"

namespace bousfield::cli {

const char* to_string(Fn f) {
  switch (f) {
    case Fn::Neg: return "neg";
    case Fn::Heyting: return "heyting";
    case Fn::Comp: return "comp";
    case Fn::Idem: return "idem";
    case Fn::Bool: return "bool";
    case Fn::Sigma: return "sigma";
    case Fn::Reconstruct: return "reconstruct";
    case Fn::Proj: return "proj";
    case Fn::Theta: return "theta";
    case Fn::Sup: return "sup";
    case Fn::Tail: return "tail";
    case Fn::Head: return "head";
    case Fn::Classify: return "classify";
    case Fn::Catalog: return "catalog";
  }
  return "?";
}

namespace {

// Argument kinds: E = element expression, S = set literal, Q = q-or-none, M = m-shape.
struct Signature {
  Fn fn;
  const char* args;
  bool variadic = false;
};

const std::map<std::string, Signature, std::less<>>& functions() {
  static const std::map<std::string, Signature, std::less<>> table = {
      {"neg", {Fn::Neg, "E"}},
      {"heyting", {Fn::Heyting, "EE"}},
      {"comp", {Fn::Comp, "E"}},
      {"idem", {Fn::Idem, "E"}},
      {"bool", {Fn::Bool, "E"}},
      {"sigma", {Fn::Sigma, "E"}},
      {"reconstruct", {Fn::Reconstruct, "SSS"}},
      {"proj", {Fn::Proj, "EE"}},
      {"theta", {Fn::Theta, "SQM"}},
      {"sup", {Fn::Sup, "E", true}},
      {"tail", {Fn::Tail, "E"}},
      {"head", {Fn::Head, "E"}},
      {"classify", {Fn::Classify, "S"}},
      {"catalog", {Fn::Catalog, ""}},
  };
  return table;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^' ||
         c == '/' || c == '<' || c == '>' || c == '-';
}

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse_all() {
    NodePtr n = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return n;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw SyntaxError(at, msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool peek(std::string_view s) {
    skip_ws();
    return src_.substr(pos_, s.size()) == s;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view s) {
    if (!peek(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  bool at_keyword(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    return after >= src_.size() ||
           !(std::isalnum(static_cast<unsigned char>(src_[after])) || src_[after] == '_');
  }

  std::uint64_t natural() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a natural number");
    std::uint64_t n = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      n = n * 10 + static_cast<std::uint64_t>(src_[pos_] - '0');
      if (n > ExtNat::kMaxFinite) fail_at(start, "number too large");
      ++pos_;
    }
    return n;
  }

  ExtNat nat_inf() {
    if (at_keyword("inf")) {
      pos_ += 3;
      return ExtNat::infinity();
    }
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a natural number or 'inf'");
    return ExtNat(natural());
  }

  OmegaNat nat_omega() {
    if (at_keyword("w")) {
      pos_ += 1;
      return OmegaNat::omega();
    }
    if (at_keyword("inf")) {
      pos_ += 3;
      return OmegaNat::infinity();
    }
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      fail("expected a natural number, 'w' or 'inf'");
    return OmegaNat(natural());
  }

  template <class F>
  IndexSet guarded(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const std::exception& e) {
      fail_at(at, e.what());
    }
  }

  // ------------------------------------------------------------------ sets
  IndexSet set() {
    IndexSet s = set_term();
    while (accept('|')) s = s | set_term();
    return s;
  }

  IndexSet set_term() {
    IndexSet s = set_unary();
    while (accept('&')) s = s & set_unary();
    return s;
  }

  IndexSet set_unary() {
    if (accept('~')) return ~set_unary();
    return set_base();
  }

  IndexSet set_base() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('{')) {
      std::vector<std::uint64_t> members;
      bool inf = false;
      if (!peek('}')) {
        do {
          if (peek('}')) break;  // trailing comma
          const ExtNat n = nat_inf();
          if (n.is_infinite())
            inf = true;
          else
            members.push_back(n.value());
        } while (accept(','));
      }
      expect('}');
      return guarded(start, [&] { return IndexSet::finite(members, inf); });
    }
    if (accept('[')) {
      const ExtNat lo = nat_inf();
      expect(',');
      const ExtNat hi = nat_inf();
      expect(']');
      if (lo.is_infinite())
        return hi.is_infinite() ? IndexSet::singleton(lo) : IndexSet::empty();
      return guarded(start, [&] { return IndexSet::interval(lo.value(), hi); });
    }
    if (at_keyword("N")) {
      pos_ += 1;
      return IndexSet::all();
    }
    if (at_keyword("per")) {
      pos_ += 3;
      expect('(');
      const std::uint64_t from = natural();
      expect(',');
      const std::size_t period_at = pos_;
      const std::uint64_t period = natural();
      if (period == 0) fail_at(period_at, "period must be positive");
      expect(',');
      expect('{');
      std::vector<std::uint64_t> residues;
      if (!peek('}')) {
        do {
          if (peek('}')) break;
          skip_ws();
          const std::size_t at = pos_;
          const std::uint64_t r = natural();
          if (r >= period) fail_at(at, "residue must be below the period");
          residues.push_back(r);
        } while (accept(','));
      }
      expect('}');
      bool inf = false;
      if (accept(',')) {
        if (!at_keyword("inf")) fail("expected 'inf'");
        pos_ += 3;
        inf = true;
      }
      expect(')');
      return guarded(start, [&] { return IndexSet::periodic(from, period, residues, inf); });
    }
    if (accept('(')) {
      IndexSet s = set();
      expect(')');
      return s;
    }
    if (pos_ >= src_.size()) fail("expected a set but input ended");
    fail("expected a set");
  }

  NodePtr set_node() {
    skip_ws();
    const std::size_t at = pos_;
    return std::make_unique<Node>(Node{at, SetLit{set()}});
  }

  // ----------------------------------------------------------- expressions
  NodePtr expr() {
    NodePtr lhs = sum();
    skip_ws();
    const std::size_t at = pos_;
    if (accept("<=")) return std::make_unique<Node>(Node{at, Rel{RelKind::Leq, std::move(lhs), sum()}});
    if (accept("==")) return std::make_unique<Node>(Node{at, Rel{RelKind::Eq, std::move(lhs), sum()}});
    return lhs;
  }

  NodePtr sum() {
    NodePtr lhs = prod();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('+')) return lhs;
      lhs = std::make_unique<Node>(Node{at, BinOp{BinOpKind::Join, std::move(lhs), prod()}});
    }
  }

  NodePtr prod() {
    NodePtr lhs = atom();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = std::make_unique<Node>(Node{at, BinOp{BinOpKind::Smash, std::move(lhs), atom()}});
    }
  }

  NodePtr atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) fail("expected an expression but input ended");
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (accept('@')) return catalog_ref(start);
    if (!std::isalpha(static_cast<unsigned char>(src_[pos_])))
      fail("expected an expression");
    const std::string id = identifier();
    if (id == "t" || id == "j" || id == "k") return element(start, id[0]);
    const auto& fns = functions();
    const auto it = fns.find(id);
    if (it == fns.end()) fail_at(start, "unknown function '" + id + "'");
    return call(start, it->second);
  }

  NodePtr element(std::size_t start, char kind) {
    expect('(');
    ElemLit lit{kind, ExtNat(0), OmegaNat(0), IndexSet{}, 0};
    if (kind == 't') {
      lit.q = nat_inf();
      expect(',');
    } else if (kind == 'j') {
      lit.m = nat_omega();
      expect(',');
    }
    skip_ws();
    lit.tail_offset = pos_;
    lit.tail = set();
    expect(')');
    return std::make_unique<Node>(Node{start, std::move(lit)});
  }

  NodePtr catalog_ref(std::size_t start) {
    const std::size_t name_at = pos_;
    std::size_t end = pos_;
    while (end < src_.size() && is_name_char(src_[end])) ++end;
    if (end == name_at) fail("expected a catalog name after '@'");
    // Longest prefix that names an entry, so "@BP<=x" still reads "@BP".
    const CatalogEntry* entry = nullptr;
    std::size_t len = end - name_at;
    for (; len > 0; --len) {
      entry = find_entry(src_.substr(name_at, len));
      if (entry) break;
    }
    if (!entry)
      fail_at(name_at, "unknown catalog name '" + std::string(src_.substr(name_at, end - name_at)) + "'");
    pos_ = name_at + len;
    CatalogRef ref{entry->name, std::nullopt};
    const bool has_paren = pos_ < src_.size() && src_[pos_] == '(';
    if (entry->parametric()) {
      if (!has_paren) fail("catalog entry '" + entry->name + "' needs a parameter: @" + entry->pattern());
      ++pos_;
      skip_ws();
      const std::size_t param_at = pos_;
      ref.param = nat_inf();
      if (entry->domain == ParamDomain::Finite && ref.param->is_infinite())
        fail_at(param_at, "catalog entry '" + entry->name + "' needs a finite parameter");
      expect(')');
    } else if (has_paren) {
      fail("catalog entry '" + entry->name + "' takes no parameter");
    }
    return std::make_unique<Node>(Node{start, std::move(ref)});
  }

  NodePtr q_arg() {
    skip_ws();
    const std::size_t at = pos_;
    if (at_keyword("none")) {
      pos_ += 4;
      return std::make_unique<Node>(Node{at, QLit{std::nullopt}});
    }
    return std::make_unique<Node>(Node{at, QLit{nat_inf()}});
  }

  NodePtr m_arg() {
    skip_ws();
    const std::size_t at = pos_;
    for (auto [word, shape] : {std::pair{"empty", MShape::empty()},
                               std::pair{"unbounded", MShape::unbounded()}}) {
      if (at_keyword(word)) {
        pos_ += std::string_view(word).size();
        return std::make_unique<Node>(Node{at, MShapeLit{shape}});
      }
    }
    return std::make_unique<Node>(Node{at, MShapeLit{MShape::bounded(nat_omega())}});
  }

  NodePtr call(std::size_t start, const Signature& sig) {
    expect('(');
    Call c{sig.fn, {}};
    const std::string_view kinds = sig.args;
    auto one_arg = [&](char kind) -> NodePtr {
      switch (kind) {
        case 'S': return set_node();
        case 'Q': return q_arg();
        case 'M': return m_arg();
        default: return expr();
      }
    };
    if (sig.variadic) {
      if (!peek(')')) {
        do c.args.push_back(one_arg(kinds[0]));
        while (accept(','));
      }
    } else {
      for (std::size_t i = 0; i < kinds.size(); ++i) {
        if (i > 0 && !accept(',') && !accept(';'))
          fail(std::string("expected ',' before argument ") + std::to_string(i + 1) + " of " +
               to_string(sig.fn));
        c.args.push_back(one_arg(kinds[i]));
      }
    }
    if (!accept(')')) {
      if (peek(',') || peek(';'))
        fail(std::string("too many arguments to ") + to_string(sig.fn));
      expect(')');
    }
    return std::make_unique<Node>(Node{start, std::move(c)});
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

NodePtr parse(std::string_view input) { return Parser(input).parse_all(); }

}  // namespace bousfield::cli
