#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace galdef {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group stored as a dense n x n multiplication table over element
// indices 0..n-1. Index 0 is always the identity; every constructor arranges
// the indexing so that this holds. Instances are immutable after construction
// and may be shared freely across threads.
class FiniteGroup {
 public:
  static constexpr int default_max_order = 2000;

  // Explicit table. Verifies the full group axioms (identity at 0, closure,
  // associativity, inverses) and label uniqueness; throws on violation.
  static GroupPtr from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> labels,
                             std::string name);

  // Closure of permutation generators on {0..degree-1}, breadth-first from
  // the identity with the generator order fixed, so element indexing is
  // deterministic. Elements are labelled by disjoint-cycle notation.
  static GroupPtr from_generators(int degree,
                                  const std::vector<std::vector<int>>& gens,
                                  std::string name = {},
                                  int max_order = default_max_order);

  // labels e, g, g^2, ...
  static GroupPtr cyclic(int n, int max_order = default_max_order);
  // order 2n; labels e, r, ..., f, rf, r^2f, ...
  static GroupPtr dihedral(int n, int max_order = default_max_order);
  static GroupPtr symmetric(int n, int max_order = default_max_order);
  static GroupPtr alternating(int n, int max_order = default_max_order);

  // Direct product; element (a, b) gets index a*|G2| + b, label "(la,lb)".
  static GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2,
                                 int max_order = default_max_order);

  // Semidirect product N x| H. `action` is an |H| x |N| table with
  // action[h][x] in N; each row must be an automorphism of N and
  // h -> action[h] a homomorphism (both verified). Element (x, h) gets
  // index x*|H| + h; multiplication (x1,h1)(x2,h2) = (x1*action[h1][x2], h1 h2).
  static GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h,
                                     const std::vector<std::vector<int>>& action,
                                     int max_order = default_max_order);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  const std::string& name() const { return name_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Looks an element up by label ("#k" is always accepted as index k).
  // Permutation-constructed groups also accept any cycle-notation spelling;
  // products accept "(left,right)" recursively.
  std::optional<int> find_element(const std::string& label) const;

  // Indices of the generators the construction was based on (empty for
  // from_table). Used by the semidirect "generator images" action syntax.
  const std::vector<int>& construction_generators() const { return gens_; }

  // Permutation degree if built from permutations.
  std::optional<int> permutation_degree() const { return perm_degree_; }

 private:
  FiniteGroup() = default;
  void finish_tables();  // computes inv_, builds label lookup

  int n_ = 0;
  std::vector<int> mul_;  // row-major n_ x n_
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<int> gens_;

  // Extra structure for label parsing.
  std::optional<int> perm_degree_;
  std::vector<std::vector<int>> perm_images_;  // per element, when permutation-built
  GroupPtr factor_left_, factor_right_;        // when (semi)direct product

  std::vector<std::pair<std::string, int>> label_index_;  // sorted by label
};

// Canonical disjoint-cycle label for a permutation ("()" for the identity).
// Compact digit form for degree <= 10, comma-separated points otherwise.
std::string cycle_label(const std::vector<int>& images);

// Parses cycle notation ("(01)(23)", "(0 1)(2 3)", "(0,1)", "()") into a
// permutation of {0..degree-1}. Throws ParseError on malformed input.
std::vector<int> parse_cycles(int degree, const std::string& text);

// Subgroup of a shared parent group: the sorted element list plus O(1)
// membership and position lookup. Construction checks closure.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup generated(GroupPtr parent, const std::vector<int>& gens);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const FiniteGroup& group() const { return *parent_; }
  const GroupPtr& group_ptr() const { return parent_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<int>& elements() const { return elements_; }
  bool contains(int g) const { return pos_[g] >= 0; }
  // Position of g within elements(), -1 if absent.
  int pos(int g) const { return pos_[g]; }
  int index_in_group() const { return group().order() / order(); }

  bool is_normal() const;
  bool subset_of(const Subgroup& other) const;
  Subgroup conjugated_by(int g) const;  // { g s g^-1 }
  Subgroup intersect(const Subgroup& other) const;

  // Deterministic small generating set: greedily absorbs the least element
  // not yet generated.
  std::vector<int> small_generating_set() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;  // sorted ascending, always contains 0
  std::vector<int> pos_;       // group order sized; -1 outside
};

// Left coset decomposition G = union of rep(i)*S. Representatives are the
// minimal element index in each coset, listed in increasing order, so
// rep(0) == 0.
class CosetDecomposition {
 public:
  explicit CosetDecomposition(Subgroup s);

  int count() const { return static_cast<int>(reps_.size()); }  // [G:S]
  int rep(int i) const { return reps_[i]; }
  const std::vector<int>& reps() const { return reps_; }
  const Subgroup& subgroup() const { return s_; }
  // The unique (i, t) with g = rep(i) * t and t in S.
  std::pair<int, int> decompose(int g) const { return where_[g]; }
  int coset_of(int g) const { return where_[g].first; }

 private:
  Subgroup s_;
  std::vector<int> reps_;
  std::vector<std::pair<int, int>> where_;
};

// Centralizer of s inside `within`.
Subgroup centralizer(const Subgroup& within, int s);
Subgroup whole_centralizer(const GroupPtr& g, int s);
Subgroup center(const GroupPtr& g);

// Conjugacy classes as sorted element lists, ordered by least member
// (so the identity class {0} comes first).
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// All normal subgroups, computed as the join-closure of normal closures of
// single conjugacy classes (no full subgroup enumeration). Sorted by
// (order, elements). Throws SizeLimitError past max_count.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       size_t max_count = 4096);

// Every subgroup, by iterated one-element extensions. Meant for small
// groups (tests and exhaustive checks); sorted like normal_subgroups.
std::vector<Subgroup> all_subgroups(const GroupPtr& g,
                                    size_t max_count = 65536);

// Exhaustively re-checks the group axioms from the raw table. O(n^3);
// intended for tests on small groups.
bool verify_group_axioms(const FiniteGroup& g);

}  // namespace galdef
