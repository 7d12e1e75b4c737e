#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "beliefchange/formula.hpp"
#include "beliefchange/semantics.hpp"

namespace bc {

// Subsets of a base are bitmasks over its element order.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t kDefaultExhaustiveLimit = 20;
inline constexpr std::size_t kMaxBaseElements = 64;
inline constexpr std::size_t kDefaultInfraEnumerationLimit = 4096;

// Finite set of formulas, ordered by the global formula order. Structural
// duplicates are dropped; logically equivalent but distinct formulas are
// kept apart.
class BeliefBase {
public:
  BeliefBase(Signature sig, std::vector<Formula> elements);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return elements_.size(); }
  const Formula& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Formula>& elements() const { return elements_; }

  SubsetMask full_mask() const;
  std::optional<std::size_t> find(const Formula& f) const;
  std::vector<Formula> materialize(SubsetMask mask) const;
  // nullopt when some formula is not an element of the base.
  std::optional<SubsetMask> try_mask_of(std::span<const Formula> formulas) const;

  bool operator==(const BeliefBase& other) const;

private:
  Signature sig_;
  std::vector<Formula> elements_;
};

enum class FamilyKind { Remainder, Kernel, Infra };

// Deterministically ordered family of subsets of one base. Remainder and
// infra families are ordered by ascending bitmask; kernel families by
// (cardinality, then bitmask).
struct SubsetFamily {
  FamilyKind kind;
  std::vector<SubsetMask> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

struct SelectionSpec {
  enum class Mode { All, First, Indices };

  Mode mode = Mode::All;
  std::vector<std::size_t> indices;

  static SelectionSpec all() { return {Mode::All, {}}; }
  static SelectionSpec first() { return {Mode::First, {}}; }
  static SelectionSpec at(std::vector<std::size_t> idx) { return {Mode::Indices, std::move(idx)}; }
};

struct IncisionSpec {
  enum class Mode { Maximum, MinimalFirst, Explicit };

  Mode mode = Mode::Maximum;
  std::vector<Formula> explicit_set;

  static IncisionSpec maximum() { return {Mode::Maximum, {}}; }
  static IncisionSpec minimal_first() { return {Mode::MinimalFirst, {}}; }
  static IncisionSpec explicit_set_of(std::vector<Formula> fs) {
    return {Mode::Explicit, std::move(fs)};
  }
};

struct InfraSpec {
  enum class Mode { MeetOfAll, RemainderIndex, Explicit };

  Mode mode = Mode::MeetOfAll;
  std::size_t remainder_index = 0;
  std::vector<Formula> explicit_set;

  static InfraSpec meet_of_all() { return {Mode::MeetOfAll, 0, {}}; }
  static InfraSpec remainder(std::size_t i) { return {Mode::RemainderIndex, i, {}}; }
  static InfraSpec explicit_set_of(std::vector<Formula> fs) {
    return {Mode::Explicit, 0, std::move(fs)};
  }
};

// Exhaustive scans the whole subset lattice (the oracle); Duality alternates
// grow/shrink extraction with minimal-hitting-set seeds and scales past the
// exhaustive limit. Auto picks by base size.
enum class EnumerationEngine { Auto, Exhaustive, Duality };

// Maximal subsets of B that do not entail f. Empty family iff f is a
// tautology; {B} when B does not entail f.
SubsetFamily base_remainders(const BeliefBase& base, const Formula& f,
                             EnumerationEngine engine = EnumerationEngine::Auto,
                             std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

// Minimal subsets of B that entail f. Contains the empty set iff f is a
// tautology; empty iff neither B nor the empty set entails f.
SubsetFamily base_kernels(const BeliefBase& base, const Formula& f,
                          EnumerationEngine engine = EnumerationEngine::Auto,
                          std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

// Selection over a remainder family; an empty family selects {B} itself.
std::vector<SubsetMask> apply_selection(const SubsetFamily& family, const SelectionSpec& spec,
                                        const BeliefBase& base);

// Intersection of the selected remainders. First gives a maxichoice outcome,
// All the full meet outcome.
BeliefBase base_partial_meet(const BeliefBase& base, const Formula& f, const SelectionSpec& spec);

// All minimal hitting sets of the kernel family, ordered by (cardinality,
// then bitmask). Their complements in B are exactly the remainders.
std::vector<SubsetMask> minimal_incisions(const SubsetFamily& kernels);

// Resolves an incision spec against a kernel family. Explicit sets are
// validated: they must draw from the union of the kernels and hit every
// non-empty kernel.
SubsetMask apply_incision(const SubsetFamily& kernels, const IncisionSpec& spec,
                          const BeliefBase& base);

// B minus the incision.
BeliefBase base_kernel_contraction(const BeliefBase& base, const Formula& f,
                                   const IncisionSpec& spec);

// Elements of B entailed by the kernel-contracted base.
BeliefBase saturated_base_kernel_contraction(const BeliefBase& base, const Formula& f,
                                             const IncisionSpec& spec,
                                             int atom_limit = kDefaultPropAtomLimit);

// Remainder family plus the meet of all remainders; answers infra-remainder
// membership without enumerating the family.
class BaseInfraView {
public:
  BaseInfraView(const BeliefBase& base, SubsetFamily remainders);

  // Empty exactly when f is a tautology; then nothing is a member.
  bool family_empty() const { return remainders_.empty(); }
  const SubsetFamily& remainders() const { return remainders_; }
  SubsetMask meet() const { return meet_; }

  bool contains(SubsetMask candidate) const;
  bool contains(std::span<const Formula> candidate, const BeliefBase& base) const;

  // All subsets between the meet and some remainder, ordered by
  // (cardinality, then bitmask).
  SubsetFamily enumerate(std::size_t limit = kDefaultInfraEnumerationLimit) const;

private:
  SubsetFamily remainders_;
  SubsetMask meet_ = 0;
};

BaseInfraView base_infra_remainders(const BeliefBase& base, const Formula& f);

// The chosen infra remainder; B itself when the family is empty.
BeliefBase base_infra_contraction(const BeliefBase& base, const Formula& f, const InfraSpec& spec);

}  // namespace bc
