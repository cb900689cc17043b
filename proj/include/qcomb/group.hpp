#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qcomb/perm.hpp"

namespace qcomb {

/// 0/1 matrix of an orbital (orbit of the group action on ordered pairs).
using OrbitalMatrix = std::vector<std::vector<int>>;

/// A group-invariant partition of the point set into equal-size cells.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // cells sorted, ordered by minimum
};

/**
 * A finite permutation group, fully materialized as its element list.
 *
 * Elements are produced by breadth-first closure over the generators:
 * identity first, then discovery order. The table is immutable after
 * generation and safe to share between threads.
 */
class GroupTable {
 public:
  /// Closure of the generators; throws CapExceededError past order_cap.
  static GroupTable generate(int degree, const std::vector<Permutation>& generators,
                             long order_cap = 1'000'000);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(int idx) const { return elements_[idx]; }
  const std::vector<int>& generator_indices() const { return generator_indices_; }
  int identity_index() const { return 0; }

  /// Index of a permutation in the table, or -1 if absent.
  int index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  /// Index of element(i) * element(j).
  int mul(int i, int j) const;
  int inv(int i) const;

  /// Least common multiple of element orders.
  long exponent() const;

  bool is_transitive() const;
  std::vector<std::vector<int>> orbits() const;

  /// Orbits of the action on ordered pairs as 0/1 matrices. Pairwise
  /// disjoint, summing to the all-ones matrix; ordered by the smallest
  /// lexicographic pair each contains.
  std::vector<OrbitalMatrix> orbitals() const;

  /// Minimal non-trivial block system of a transitive group, grown from the
  /// seed pair {0, p} with the smallest p that yields one; nullopt when the
  /// action is primitive. Throws NotTransitiveError otherwise.
  std::optional<BlockSystem> block_system() const;

 private:
  GroupTable() = default;

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> generator_indices_;
  std::unordered_map<std::string, int> index_;  // packed image key -> index
  std::vector<int> inverse_;
  std::vector<int> mul_table_;  // full table when order is small, else empty

  static std::string key_of(const std::vector<int>& images);
};

/// True iff a^5 = b^2 = (ab)^3 = id and <a, b> is the whole group.
bool verify_presentation(const GroupTable& g, const Permutation& a, const Permutation& b);

/// Cyclic group of order n in its regular action on {0, ..., n-1}.
GroupTable cyclic_group(int n);

/// Symmetric group on n points (n! elements; keep n small).
GroupTable symmetric_group(int n, long order_cap = 1'000'000);

/**
 * Wreath product inner wr_X outer acting on functions X -> Sigma.
 *
 * Points are functions f: {0..|X|-1} -> {0..|Sigma|-1} enumerated in
 * mixed-radix order with f(0) the most significant digit. The result has
 * order |inner|^|X| * |outer| and degree |Sigma|^|X|.
 */
GroupTable wreath_action(const GroupTable& inner, const GroupTable& outer,
                         long order_cap = 1'000'000);

/// Reads one generator per line in 1-based cycle notation.
std::vector<Permutation> parse_generator_lines(const std::string& text, int degree);

}  // namespace qcomb
