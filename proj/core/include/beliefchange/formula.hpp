#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefchange/error.hpp"

namespace bc {

// Ordered atom signature. Every formula, valuation and clause universe is
// relative to exactly one signature; atom identity is the index within it.
// Copies share storage and are cheap.
class Signature {
public:
  // Names must be unique, non-empty, and match [a-z][a-z0-9_]*.
  explicit Signature(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int index) const { return names_->at(static_cast<std::size_t>(index)); }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Signature& other) const;
  bool operator!=(const Signature& other) const { return !(*this == other); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Immutable formula over the core connectives ~ and & plus atoms and T.
// Disjunction, implication, biimplication and F are derived constructors that
// expand into the core; the renderer recognizes the derived shapes again, so
// implication(p, q).text() == "p -> q".
//
// text() is canonical: parse(text()) rebuilds the identical tree, and
// (length, then lexicographic) on it is the global formula order used for
// tie-breaking everywhere downstream.
class Formula {
public:
  enum class Kind { Atom, Top, Not, And };

  static Formula atom(const Signature& sig, int index);
  static Formula atom(const Signature& sig, std::string_view name);
  static Formula top();
  static Formula negation(const Formula& f);
  static Formula conjunction(const Formula& lhs, const Formula& rhs);

  // Derived constructors.
  static Formula bottom();
  static Formula disjunction(const Formula& lhs, const Formula& rhs);
  static Formula implication(const Formula& lhs, const Formula& rhs);
  static Formula biimplication(const Formula& lhs, const Formula& rhs);
  // Right-nested conjunction of all members; empty span yields T.
  static Formula conjoin(std::span<const Formula> members);

  struct Node;  // opaque; defined in formula.cpp

  Kind kind() const;
  int atom_index() const;               // Kind::Atom only
  const std::string& atom_name() const; // Kind::Atom only
  Formula child() const;                // Kind::Not only
  Formula left() const;                 // Kind::And only
  Formula right() const;                // Kind::And only

  const std::string& text() const;
  int max_atom_index() const;

  // Canonical-text equality; coincides with structural equality because the
  // renderer is injective (parse . render == id).
  bool operator==(const Formula& other) const { return text() == other.text(); }
  bool operator!=(const Formula& other) const { return !(*this == other); }

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend bool structurally_equal(const Formula& a, const Formula& b);
};

// Node-by-node comparison, independent of the renderer. Used by tests to
// validate the parse/render round trip without trusting text equality.
bool structurally_equal(const Formula& a, const Formula& b);

// Global formula order: render length, then lexicographic render.
struct FormulaOrder {
  bool operator()(const Formula& a, const Formula& b) const {
    const std::string& x = a.text();
    const std::string& y = b.text();
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

// Concrete syntax: atoms [a-z][a-z0-9_]*, T, F, ~, &, |, ->, <->, parentheses;
// precedence ~ > & > | > -> > <->, all binaries right-associative.
Formula parse(std::string_view text, const Signature& sig);

inline const std::string& render(const Formula& f) { return f.text(); }

// Canonical non-tautological Horn clause: a body atom set (bitmask in
// signature order) and a head atom or falsum. head-in-body clauses are
// tautological and unrepresentable.
class HornClause {
public:
  static constexpr int kFalsumHead = -1;

  // nullopt when the clause would be tautological.
  static std::optional<HornClause> make(std::uint32_t body_mask, int head);

  std::uint32_t body_mask() const { return body_; }
  int head() const { return head_; }
  bool has_falsum_head() const { return head_ == kFalsumHead; }
  int body_size() const;
  std::vector<int> body_atoms() const;

  Formula to_formula(const Signature& sig) const;
  std::string to_string(const Signature& sig) const { return to_formula(sig).text(); }

  bool operator==(const HornClause& other) const = default;
  // (body size, body mask, head); falsum heads sort after atom heads.
  bool operator<(const HornClause& other) const;

private:
  HornClause(std::uint32_t body, int head) : body_(body), head_(head) {}

  std::uint32_t body_;
  int head_;
};

// Outcome of decomposing a formula into Horn clauses. A tautology decomposes
// into the empty clause set; a non-Horn input carries the offending
// subformula instead.
class HornDecomposition {
public:
  static HornDecomposition horn(std::vector<HornClause> clauses);
  static HornDecomposition not_horn(Formula offending);

  bool is_horn() const { return is_horn_; }
  const std::vector<HornClause>& clauses() const;  // sorted, deduplicated
  const Formula& offending() const;

private:
  HornDecomposition() = default;

  bool is_horn_ = false;
  std::vector<HornClause> clauses_;
  std::optional<Formula> offending_;
};

HornDecomposition as_horn_clauses(const Formula& f);

inline constexpr int kDefaultClauseUniverseAtomLimit = 4;

// All canonical non-tautological Horn clauses over a signature, in
// (body size, body mask, head) order. Count is sum over body sizes k of
// C(n,k) * (n-k+1), the falsum head counted once per body.
std::vector<HornClause> enumerate_clauses(const Signature& sig,
                                          int atom_limit = kDefaultClauseUniverseAtomLimit);

// The enumerated clause list plus constant-time clause -> index lookup.
class ClauseUniverse {
public:
  explicit ClauseUniverse(Signature sig, int atom_limit = kDefaultClauseUniverseAtomLimit);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return clauses_.size(); }
  const HornClause& at(std::size_t i) const { return clauses_[i]; }
  const std::vector<HornClause>& clauses() const { return clauses_; }
  std::optional<std::size_t> index_of(const HornClause& clause) const;

private:
  Signature sig_;
  std::vector<HornClause> clauses_;
};

}  // namespace bc
