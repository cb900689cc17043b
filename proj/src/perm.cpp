#include "qcomb/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcomb {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw DomainError("image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle string: " + text);
    auto close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced cycle string: " + text);
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    std::string tok;
    while (in >> tok) {
      int p;
      try {
        p = std::stoi(tok);
      } catch (const std::exception&) {
        throw ParseError("bad point in cycle string: " + tok);
      }
      if (p < 1 || p > degree) throw ParseError("point out of range: " + tok);
      cycle.push_back(p - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw DimensionMismatchError("degree mismatch in composition");
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[i] = images_[other.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Permutation(std::move(img));
}

long Permutation::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(degree(), false);
  long result = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    out << '(' << (i + 1);
    seen[i] = true;
    for (int j = images_[i]; j != i; j = images_[j]) {
      out << ' ' << (j + 1);
      seen[j] = true;
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace qcomb
