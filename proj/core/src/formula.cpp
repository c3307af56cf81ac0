#include "interlab/formula.hpp"

#include <algorithm>
#include <cctype>

namespace interlab {

Formula Formula::make(Op op, std::string name, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(children)}));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw InvalidArgument("empty atom name");
  return make(Op::kAtom, std::move(name), {});
}
Formula Formula::top() { return make(Op::kTop, {}, {}); }
Formula Formula::bottom() { return make(Op::kBottom, {}, {}); }
Formula Formula::negation(Formula f) { return make(Op::kNot, {}, {std::move(f)}); }
Formula Formula::next(Formula f) { return make(Op::kJ, {}, {std::move(f)}); }
Formula Formula::conjunction(Formula a, Formula b) { return make(Op::kAnd, {}, {std::move(a), std::move(b)}); }
Formula Formula::disjunction(Formula a, Formula b) { return make(Op::kOr, {}, {std::move(a), std::move(b)}); }
Formula Formula::implication(Formula a, Formula b) { return make(Op::kImplies, {}, {std::move(a), std::move(b)}); }
Formula Formula::equivalence(Formula a, Formula b) { return make(Op::kIff, {}, {std::move(a), std::move(b)}); }

Formula Formula::conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conjunction(acc, fs[i]);
  return acc;
}

Formula Formula::disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return bottom();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disjunction(acc, fs[i]);
  return acc;
}

namespace {

void collect_atoms(const Formula& f, CoordSet& out) {
  if (f.op() == Op::kAtom) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

int level(Op op) {
  switch (op) {
    case Op::kIff: return 1;
    case Op::kImplies: return 2;
    case Op::kOr: return 3;
    case Op::kAnd: return 4;
    case Op::kNot:
    case Op::kJ: return 5;
    default: return 6;
  }
}

void render(const Formula& f, std::string& out);

void render_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  render(f, out);
  if (parens) out += ')';
}

void render(const Formula& f, std::string& out) {
  const int lv = level(f.op());
  switch (f.op()) {
    case Op::kAtom: out += f.name(); return;
    case Op::kTop: out += "true"; return;
    case Op::kBottom: out += "false"; return;
    case Op::kNot:
    case Op::kJ:
      out += f.op() == Op::kNot ? "!" : "J";
      render_child(f.child(0), level(f.child(0).op()) < lv, out);
      return;
    default: break;
  }
  const char* sym = f.op() == Op::kAnd ? " & " : f.op() == Op::kOr ? " | " : f.op() == Op::kImplies ? " -> " : " <-> ";
  const bool right_assoc = f.op() == Op::kImplies;
  const int l = level(f.child(0).op()), r = level(f.child(1).op());
  render_child(f.child(0), right_assoc ? l <= lv : l < lv, out);
  out += sym;
  render_child(f.child(1), right_assoc ? r < lv : r <= lv, out);
}

}  // namespace

CoordSet Formula::atoms() const {
  CoordSet out;
  collect_atoms(*this, out);
  return out;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return node_->children.empty() ? 0 : d + 1;
}

std::string Formula::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.name() != b.name() || a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

namespace {

enum class Tok { kIdent, kTrue, kFalse, kNot, kJ, kAnd, kOr, kImplies, kIff, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= '0' && s[i] <= '9') || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      const Tok kind = word == "true" ? Tok::kTrue : word == "false" ? Tok::kFalse : Tok::kIdent;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    switch (c) {
      case '!': out.push_back({Tok::kNot, "!", start}); ++i; continue;
      case 'J': out.push_back({Tok::kJ, "J", start}); ++i; continue;
      case '&': out.push_back({Tok::kAnd, "&", start}); ++i; continue;
      case '|': out.push_back({Tok::kOr, "|", start}); ++i; continue;
      case '(': out.push_back({Tok::kLParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::kRParen, ")", start}); ++i; continue;
      case '-':
        if (s.substr(i, 2) == "->") {
          out.push_back({Tok::kImplies, "->", start});
          i += 2;
          continue;
        }
        break;
      case '<':
        if (s.substr(i, 3) == "<->") {
          out.push_back({Tok::kIff, "<->", start});
          i += 3;
          continue;
        }
        break;
      default: break;
    }
    throw SyntaxError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", start);
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    Formula f = equivalence();
    if (peek().kind != Tok::kEnd) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    if (peek().kind == Tok::kEnd) throw SyntaxError("unexpected end of input", peek().pos);
    throw SyntaxError(msg, peek().pos);
  }

  Formula equivalence() {
    Formula left = implication();
    while (accept(Tok::kIff)) left = Formula::equivalence(left, implication());
    return left;
  }

  Formula implication() {
    Formula left = disjunction();
    if (accept(Tok::kImplies)) return Formula::implication(left, implication());
    return left;
  }

  Formula disjunction() {
    Formula left = conjunction();
    while (accept(Tok::kOr)) left = Formula::disjunction(left, conjunction());
    return left;
  }

  Formula conjunction() {
    Formula left = unary();
    while (accept(Tok::kAnd)) left = Formula::conjunction(left, unary());
    return left;
  }

  Formula unary() {
    if (accept(Tok::kNot)) return Formula::negation(unary());
    if (accept(Tok::kJ)) return Formula::next(unary());
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIdent: ++pos_; return Formula::atom(t.text);
      case Tok::kTrue: ++pos_; return Formula::top();
      case Tok::kFalse: ++pos_; return Formula::bottom();
      case Tok::kLParen: {
        ++pos_;
        Formula inner = equivalence();
        if (!accept(Tok::kRParen)) fail("expected ')'");
        return inner;
      }
      default: fail("expected a formula, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

}  // namespace interlab
