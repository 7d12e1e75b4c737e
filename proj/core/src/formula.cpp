#include "beliefchange/formula.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_map>
#include <utility>

namespace bc {

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Signature::Signature(std::vector<std::string> names) {
  if (names.empty()) throw Error(ErrorKind::Input, "signature must contain at least one atom");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!valid_atom_name(names[i]))
      throw Error(ErrorKind::Input, "invalid atom name '" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j])
        throw Error(ErrorKind::Input, "duplicate atom '" + names[i] + "' in signature");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<int> Signature::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Signature::operator==(const Signature& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

// ---------------------------------------------------------------------------
// Formula nodes and the view-based renderer
// ---------------------------------------------------------------------------

namespace {

// How a core node displays: the derived shapes are recognized structurally.
enum class View { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

int view_precedence(View v) {
  switch (v) {
    case View::Iff: return 1;
    case View::Implies: return 2;
    case View::Or: return 3;
    case View::And: return 4;
    case View::Not: return 5;
    default: return 6;  // leaves
  }
}

}  // namespace

struct Formula::Node {
  Kind kind;
  int atom = -1;
  std::string name;                    // Kind::Atom
  std::shared_ptr<const Node> a, b;    // Not uses a; And uses a, b

  View view = View::Top;
  const Node* view_a = nullptr;        // view operands (within this subtree)
  const Node* view_b = nullptr;
  std::string text;                    // canonical rendering, top-level
  int max_atom = -1;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

bool node_equal(const Formula::Node* x, const Formula::Node* y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Formula::Kind::Atom: return x->atom == y->atom && x->name == y->name;
    case Formula::Kind::Top: return true;
    case Formula::Kind::Not: return node_equal(x->a.get(), y->a.get());
    case Formula::Kind::And:
      return node_equal(x->a.get(), y->a.get()) && node_equal(x->b.get(), y->b.get());
  }
  return false;
}

void compute_view(Formula::Node& n) {
  switch (n.kind) {
    case Formula::Kind::Atom:
      n.view = View::Atom;
      return;
    case Formula::Kind::Top:
      n.view = View::Top;
      return;
    case Formula::Kind::Not: {
      const Formula::Node* x = n.a.get();
      if (x->kind == Formula::Kind::Top) {
        n.view = View::Bottom;
        return;
      }
      if (x->kind == Formula::Kind::And) {
        const Formula::Node* l = x->a.get();
        const Formula::Node* r = x->b.get();
        if (l->kind == Formula::Kind::Not && r->kind == Formula::Kind::Not) {
          n.view = View::Or;  // ~(~a & ~b)
          n.view_a = l->a.get();
          n.view_b = r->a.get();
          return;
        }
        if (r->kind == Formula::Kind::Not) {
          n.view = View::Implies;  // ~(a & ~b)
          n.view_a = l;
          n.view_b = r->a.get();
          return;
        }
      }
      n.view = View::Not;
      n.view_a = x;
      return;
    }
    case Formula::Kind::And: {
      const Formula::Node* l = n.a.get();
      const Formula::Node* r = n.b.get();
      if (l->view == View::Implies && r->view == View::Implies &&
          node_equal(l->view_a, r->view_b) && node_equal(l->view_b, r->view_a)) {
        n.view = View::Iff;  // (a -> b) & (b -> a)
        n.view_a = l->view_a;
        n.view_b = l->view_b;
        return;
      }
      n.view = View::And;
      n.view_a = l;
      n.view_b = r;
      return;
    }
  }
}

std::string wrap(const Formula::Node* operand, bool parens) {
  return parens ? "(" + operand->text + ")" : operand->text;
}

void compute_text(Formula::Node& n) {
  switch (n.view) {
    case View::Atom: n.text = n.name; return;
    case View::Top: n.text = "T"; return;
    case View::Bottom: n.text = "F"; return;
    case View::Not:
      n.text = "~" + wrap(n.view_a, view_precedence(n.view_a->view) < 5);
      return;
    case View::And:
    case View::Or:
    case View::Implies:
    case View::Iff: {
      const char* op = n.view == View::And    ? " & "
                       : n.view == View::Or   ? " | "
                       : n.view == View::Implies ? " -> "
                                                 : " <-> ";
      const int prec = view_precedence(n.view);
      // Right-associative: equal precedence needs parentheses on the left only.
      n.text = wrap(n.view_a, view_precedence(n.view_a->view) <= prec) + op +
               wrap(n.view_b, view_precedence(n.view_b->view) < prec);
      return;
    }
  }
}

NodePtr make_node(Formula::Kind kind, int atom, std::string name, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->atom = atom;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  n->max_atom = std::max({atom, n->a ? n->a->max_atom : -1, n->b ? n->b->max_atom : -1});
  compute_view(*n);
  compute_text(*n);
  return n;
}

const NodePtr& top_node() {
  static const NodePtr node = make_node(Formula::Kind::Top, -1, {}, nullptr, nullptr);
  return node;
}

}  // namespace

Formula Formula::atom(const Signature& sig, int index) {
  if (index < 0 || index >= sig.size())
    throw Error(ErrorKind::Input, "atom index out of range for signature");
  return Formula(make_node(Kind::Atom, index, sig.name(index), nullptr, nullptr));
}

Formula Formula::atom(const Signature& sig, std::string_view name) {
  auto idx = sig.index_of(name);
  if (!idx) throw UnknownAtomError(std::string(name), 0);
  return atom(sig, *idx);
}

Formula Formula::top() { return Formula(top_node()); }

Formula Formula::negation(const Formula& f) {
  return Formula(make_node(Kind::Not, -1, {}, f.node_, nullptr));
}

Formula Formula::conjunction(const Formula& lhs, const Formula& rhs) {
  return Formula(make_node(Kind::And, -1, {}, lhs.node_, rhs.node_));
}

Formula Formula::bottom() { return negation(top()); }

Formula Formula::disjunction(const Formula& lhs, const Formula& rhs) {
  return negation(conjunction(negation(lhs), negation(rhs)));
}

Formula Formula::implication(const Formula& lhs, const Formula& rhs) {
  return negation(conjunction(lhs, negation(rhs)));
}

Formula Formula::biimplication(const Formula& lhs, const Formula& rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Formula Formula::conjoin(std::span<const Formula> members) {
  if (members.empty()) return top();
  Formula out = members.back();
  for (std::size_t i = members.size() - 1; i-- > 0;)
    out = conjunction(members[i], out);
  return out;
}

Formula::Kind Formula::kind() const { return node_->kind; }
int Formula::atom_index() const { return node_->atom; }
const std::string& Formula::atom_name() const { return node_->name; }
Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }
const std::string& Formula::text() const { return node_->text; }
int Formula::max_atom_index() const { return node_->max_atom; }

bool structurally_equal(const Formula& a, const Formula& b) {
  return node_equal(a.node_.get(), b.node_.get());
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Atom, Top, Bottom, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok tok;
  std::string name;      // Tok::Atom
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    cur_.pos = pos_;
    if (pos_ >= text_.size()) {
      cur_.tok = Tok::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case 'T': ++pos_; cur_.tok = Tok::Top; return;
      case 'F': ++pos_; cur_.tok = Tok::Bottom; return;
      case '~': ++pos_; cur_.tok = Tok::Not; return;
      case '&': ++pos_; cur_.tok = Tok::And; return;
      case '|': ++pos_; cur_.tok = Tok::Or; return;
      case '(': ++pos_; cur_.tok = Tok::LParen; return;
      case ')': ++pos_; cur_.tok = Tok::RParen; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          cur_.tok = Tok::Implies;
          return;
        }
        throw ParseError("expected '->' at column " + std::to_string(pos_ + 1), pos_);
      case '<':
        if (text_.size() - pos_ >= 3 && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') {
          pos_ += 3;
          cur_.tok = Tok::Iff;
          return;
        }
        throw ParseError("expected '<->' at column " + std::to_string(pos_ + 1), pos_);
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             ((text_[end] >= 'a' && text_[end] <= 'z') ||
              (text_[end] >= '0' && text_[end] <= '9') || text_[end] == '_'))
        ++end;
      cur_.tok = Tok::Atom;
      cur_.name = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' at column " +
                         std::to_string(pos_ + 1),
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_;
};

class Parser {
public:
  Parser(std::string_view text, const Signature& sig) : lex_(text), sig_(sig) {}

  Formula run() {
    Formula f = parse_iff();
    const Token& t = lex_.peek();
    if (t.tok != Tok::End)
      throw ParseError("unexpected trailing input at column " + std::to_string(t.pos + 1), t.pos);
    return f;
  }

private:
  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (lex_.peek().tok == Tok::Iff) {
      lex_.take();
      return Formula::biimplication(lhs, parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lex_.peek().tok == Tok::Implies) {
      lex_.take();
      return Formula::implication(lhs, parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    if (lex_.peek().tok == Tok::Or) {
      lex_.take();
      return Formula::disjunction(lhs, parse_or());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    if (lex_.peek().tok == Tok::And) {
      lex_.take();
      return Formula::conjunction(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (lex_.peek().tok == Tok::Not) {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    Token t = lex_.take();
    switch (t.tok) {
      case Tok::Top: return Formula::top();
      case Tok::Bottom: return Formula::bottom();
      case Tok::Atom: {
        auto idx = sig_.index_of(t.name);
        if (!idx) throw UnknownAtomError(t.name, t.pos);
        return Formula::atom(sig_, *idx);
      }
      case Tok::LParen: {
        Formula f = parse_iff();
        Token close = lex_.take();
        if (close.tok != Tok::RParen)
          throw ParseError("expected ')' at column " + std::to_string(close.pos + 1), close.pos);
        return f;
      }
      default:
        throw ParseError("expected a formula at column " + std::to_string(t.pos + 1), t.pos);
    }
  }

  Lexer lex_;
  const Signature& sig_;
};

}  // namespace

Formula parse(std::string_view text, const Signature& sig) {
  return Parser(text, sig).run();
}

// ---------------------------------------------------------------------------
// Horn clauses
// ---------------------------------------------------------------------------

std::optional<HornClause> HornClause::make(std::uint32_t body_mask, int head) {
  if (head != kFalsumHead && (body_mask >> head) & 1u) return std::nullopt;
  if (head != kFalsumHead && head < 0) return std::nullopt;
  return HornClause(body_mask, head);
}

int HornClause::body_size() const { return std::popcount(body_); }

std::vector<int> HornClause::body_atoms() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((body_ >> i) & 1u) out.push_back(i);
  return out;
}

Formula HornClause::to_formula(const Signature& sig) const {
  const Formula head_f =
      has_falsum_head() ? Formula::bottom() : Formula::atom(sig, head_);
  if (body_ == 0) return head_f;
  std::vector<Formula> body;
  for (int a : body_atoms()) body.push_back(Formula::atom(sig, a));
  return Formula::implication(Formula::conjoin(body), head_f);
}

bool HornClause::operator<(const HornClause& other) const {
  const int s1 = body_size(), s2 = other.body_size();
  if (s1 != s2) return s1 < s2;
  if (body_ != other.body_) return body_ < other.body_;
  // Atom heads in signature order, falsum last.
  const unsigned h1 = head_ == kFalsumHead ? ~0u : static_cast<unsigned>(head_);
  const unsigned h2 = other.head_ == kFalsumHead ? ~0u : static_cast<unsigned>(other.head_);
  return h1 < h2;
}

HornDecomposition HornDecomposition::horn(std::vector<HornClause> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  HornDecomposition d;
  d.is_horn_ = true;
  d.clauses_ = std::move(clauses);
  return d;
}

HornDecomposition HornDecomposition::not_horn(Formula offending) {
  HornDecomposition d;
  d.is_horn_ = false;
  d.offending_ = std::move(offending);
  return d;
}

const std::vector<HornClause>& HornDecomposition::clauses() const {
  if (!is_horn_) throw Error(ErrorKind::Input, "clauses() on a non-Horn decomposition");
  return clauses_;
}

const Formula& HornDecomposition::offending() const {
  if (is_horn_) throw Error(ErrorKind::Input, "offending() on a Horn decomposition");
  return *offending_;
}

namespace {

// Body literal classification while decomposing: an atom, or one of the
// constants that normalize away (T dropped, F makes the clause tautological).
struct BodyAccum {
  std::uint32_t atoms = 0;
  bool has_falsum = false;
};

// Flattens a conjunction view of atoms/T/F. Returns the offending subformula
// when a conjunct is anything else.
std::optional<Formula> flatten_body(const Formula& f, BodyAccum& acc) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      acc.atoms |= 1u << f.atom_index();
      return std::nullopt;
    case Formula::Kind::Top:
      return std::nullopt;
    case Formula::Kind::Not:
      if (f.child().kind() == Formula::Kind::Top) {  // F
        acc.has_falsum = true;
        return std::nullopt;
      }
      return f;
    case Formula::Kind::And: {
      if (auto off = flatten_body(f.left(), acc)) return off;
      return flatten_body(f.right(), acc);
    }
  }
  return f;
}

enum class HeadKind { Atom, Verum, Falsum };

struct HeadInfo {
  HeadKind kind;
  int atom = -1;
};

std::optional<HeadInfo> classify_head(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return HeadInfo{HeadKind::Atom, f.atom_index()};
    case Formula::Kind::Top: return HeadInfo{HeadKind::Verum};
    case Formula::Kind::Not:
      if (f.child().kind() == Formula::Kind::Top) return HeadInfo{HeadKind::Falsum};
      return std::nullopt;
    default: return std::nullopt;
  }
}

bool is_bottom(const Formula& f) {
  return f.kind() == Formula::Kind::Not && f.child().kind() == Formula::Kind::Top;
}

// Decomposes one conjunct; appends its clauses or returns the offender.
std::optional<Formula> decompose_conjunct(const Formula& f, std::vector<HornClause>& out);

std::optional<Formula> decompose_implication(const Formula& body, const Formula& head,
                                             std::vector<HornClause>& out) {
  BodyAccum acc;
  if (auto off = flatten_body(body, acc)) return off;
  auto head_info = classify_head(head);
  if (!head_info) return head;
  if (acc.has_falsum || head_info->kind == HeadKind::Verum) return std::nullopt;  // tautology
  const int head_atom =
      head_info->kind == HeadKind::Falsum ? HornClause::kFalsumHead : head_info->atom;
  if (auto clause = HornClause::make(acc.atoms, head_atom)) out.push_back(*clause);
  return std::nullopt;  // head-in-body is a tautology: dropped
}

std::optional<Formula> decompose_conjunct(const Formula& f, std::vector<HornClause>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out.push_back(*HornClause::make(0, f.atom_index()));
      return std::nullopt;
    case Formula::Kind::Top:
      return std::nullopt;
    case Formula::Kind::Not: {
      if (is_bottom(f)) {
        out.push_back(*HornClause::make(0, HornClause::kFalsumHead));
        return std::nullopt;
      }
      const Formula inner = f.child();
      if (inner.kind() == Formula::Kind::And) {
        const Formula l = inner.left();
        const Formula r = inner.right();
        if (l.kind() == Formula::Kind::Not && r.kind() == Formula::Kind::Not) {
          // a | b; constant disjuncts normalize away (F -> q parses here too)
          const Formula a = l.child();
          const Formula b = r.child();
          if (a.kind() == Formula::Kind::Top || b.kind() == Formula::Kind::Top)
            return std::nullopt;
          if (is_bottom(a)) return decompose_conjunct(b, out);
          if (is_bottom(b)) return decompose_conjunct(a, out);
          return f;  // positive disjunction is not Horn
        }
        if (r.kind() == Formula::Kind::Not)
          return decompose_implication(l, r.child(), out);  // a -> b
      }
      // ~x: sugar for x -> F over a conjunction of atoms
      return decompose_implication(inner, Formula::bottom(), out);
    }
    case Formula::Kind::And: {
      // Splits conjunctions and, with them, biimplications (structurally a
      // conjunction of two implications).
      if (auto off = decompose_conjunct(f.left(), out)) return off;
      return decompose_conjunct(f.right(), out);
    }
  }
  return f;
}

}  // namespace

HornDecomposition as_horn_clauses(const Formula& f) {
  std::vector<HornClause> clauses;
  if (auto off = decompose_conjunct(f, clauses)) return HornDecomposition::not_horn(*off);
  return HornDecomposition::horn(std::move(clauses));
}

// ---------------------------------------------------------------------------
// Clause universe
// ---------------------------------------------------------------------------

std::vector<HornClause> enumerate_clauses(const Signature& sig, int atom_limit) {
  const int n = sig.size();
  if (n > atom_limit)
    throw LimitError("clause universe limited to " + std::to_string(atom_limit) +
                     " atoms, signature has " + std::to_string(n));
  std::vector<std::uint32_t> bodies;
  for (std::uint32_t m = 0; m < (1u << n); ++m) bodies.push_back(m);
  std::sort(bodies.begin(), bodies.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  std::vector<HornClause> out;
  for (std::uint32_t body : bodies) {
    for (int h = 0; h < n; ++h)
      if (auto c = HornClause::make(body, h)) out.push_back(*c);
    out.push_back(*HornClause::make(body, HornClause::kFalsumHead));
  }
  return out;
}

ClauseUniverse::ClauseUniverse(Signature sig, int atom_limit)
    : sig_(std::move(sig)), clauses_(enumerate_clauses(sig_, atom_limit)) {}

std::optional<std::size_t> ClauseUniverse::index_of(const HornClause& clause) const {
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), clause);
  if (it != clauses_.end() && *it == clause)
    return static_cast<std::size_t>(it - clauses_.begin());
  return std::nullopt;
}

}  // namespace bc
