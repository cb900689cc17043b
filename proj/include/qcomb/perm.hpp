#pragma once

#include <string>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

/// A permutation of {0, ..., n-1}, stored as its image table.
/// Composition follows function application: (g*h)(i) = g(h(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  /// Parses 1-based cycle notation, e.g. "(1 2 3)(4 5)". "()" is the identity.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation compose(const Permutation& other) const;  // (this*other)(i) = this(other(i))
  Permutation inverse() const;
  long order() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    return a.compose(b);
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  /// 1-based disjoint-cycle form; fixed points omitted, identity is "()".
  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

}  // namespace qcomb
