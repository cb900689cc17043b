#include "qcomb/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

namespace qcomb {

namespace {

constexpr long kMulTableLimit = 4096;  // precompute full table up to this order

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::string GroupTable::key_of(const std::vector<int>& images) {
  std::string key;
  key.reserve(images.size() * sizeof(int));
  for (int v : images)
    key.append(reinterpret_cast<const char*>(&v), sizeof(int));
  return key;
}

GroupTable GroupTable::generate(int degree, const std::vector<Permutation>& generators,
                                long order_cap) {
  if (degree < 0) throw DomainError("negative degree");
  for (const auto& g : generators)
    if (g.degree() != degree) throw DimensionMismatchError("generator degree mismatch");

  GroupTable table;
  table.degree_ = degree;
  Permutation id = Permutation::identity(degree);
  table.elements_.push_back(id);
  table.index_.emplace(key_of(id.images()), 0);

  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int wi = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation p = table.elements_[wi] * g;
      std::string key = key_of(p.images());
      if (table.index_.count(key)) continue;
      if (static_cast<long>(table.elements_.size()) >= order_cap)
        throw CapExceededError("group closure exceeded order cap");
      int idx = static_cast<int>(table.elements_.size());
      table.index_.emplace(std::move(key), idx);
      table.elements_.push_back(std::move(p));
      frontier.push_back(idx);
    }
  }

  for (const auto& g : generators)
    table.generator_indices_.push_back(table.index_of(g));

  const int n = table.order();
  table.inverse_.resize(n);
  for (int i = 0; i < n; ++i)
    table.inverse_[i] = table.index_of(table.elements_[i].inverse());

  if (static_cast<long>(n) <= kMulTableLimit) {
    table.mul_table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table.mul_table_[static_cast<std::size_t>(i) * n + j] =
            table.index_of(table.elements_[i] * table.elements_[j]);
  }
  return table;
}

int GroupTable::index_of(const Permutation& p) const {
  auto it = index_.find(key_of(p.images()));
  return it == index_.end() ? -1 : it->second;
}

int GroupTable::mul(int i, int j) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(i) * order() + j];
  return index_of(elements_[i] * elements_[j]);
}

int GroupTable::inv(int i) const { return inverse_[i]; }

long GroupTable::exponent() const {
  long e = 1;
  for (const auto& g : elements_) e = std::lcm(e, g.order());
  return e;
}

bool GroupTable::is_transitive() const {
  return degree_ > 0 && orbits().size() == 1;
}

std::vector<std::vector<int>> GroupTable::orbits() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(degree_, false);
  for (int start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int gi : generator_indices_) {
        int image = elements_[gi](orbit[k]);
        if (!seen[image]) {
          seen[image] = true;
          orbit.push_back(image);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

std::vector<OrbitalMatrix> GroupTable::orbitals() const {
  const int n = degree_;
  std::vector<std::vector<int>> assigned(n, std::vector<int>(n, -1));
  std::vector<OrbitalMatrix> result;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (assigned[i][j] >= 0) continue;
      int id = static_cast<int>(result.size());
      OrbitalMatrix mat(n, std::vector<int>(n, 0));
      std::vector<std::pair<int, int>> frontier{{i, j}};
      assigned[i][j] = id;
      mat[i][j] = 1;
      while (!frontier.empty()) {
        auto [p, q] = frontier.back();
        frontier.pop_back();
        for (int gi : generator_indices_) {
          int ip = elements_[gi](p);
          int iq = elements_[gi](q);
          if (assigned[ip][iq] < 0) {
            assigned[ip][iq] = id;
            mat[ip][iq] = 1;
            frontier.emplace_back(ip, iq);
          }
        }
      }
      result.push_back(std::move(mat));
    }
  }
  return result;
}

std::optional<BlockSystem> GroupTable::block_system() const {
  if (!is_transitive()) throw NotTransitiveError("block systems need a transitive action");
  const int n = degree_;
  if (n <= 2) return std::nullopt;  // no room for a non-trivial partition

  for (int seed = 1; seed < n; ++seed) {
    // finest congruence identifying 0 and seed, by closing under generators
    UnionFind uf(n);
    uf.unite(0, seed);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int gi : generator_indices_) {
        const Permutation& g = elements_[gi];
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            if (uf.find(a) == uf.find(b) && uf.unite(g(a), g(b))) changed = true;
      }
    }
    std::vector<std::vector<int>> cells(n);
    for (int x = 0; x < n; ++x) cells[uf.find(x)].push_back(x);
    std::vector<std::vector<int>> blocks;
    for (auto& c : cells)
      if (!c.empty()) blocks.push_back(std::move(c));
    if (blocks.size() > 1 && blocks.size() < static_cast<std::size_t>(n)) {
      std::sort(blocks.begin(), blocks.end(),
                [](const auto& a, const auto& b) { return a.front() < b.front(); });
      return BlockSystem{std::move(blocks)};
    }
  }
  return std::nullopt;
}

bool verify_presentation(const GroupTable& g, const Permutation& a, const Permutation& b) {
  if (a.degree() != g.degree() || b.degree() != g.degree()) return false;
  if (g.index_of(a) < 0 || g.index_of(b) < 0) return false;
  Permutation id = Permutation::identity(g.degree());
  Permutation a5 = a * a * a * a * a;
  Permutation ab = a * b;
  if (a5 != id || b * b != id || ab * ab * ab != id) return false;
  GroupTable span = GroupTable::generate(g.degree(), {a, b},
                                         static_cast<long>(g.order()) + 1);
  return span.order() == g.order();
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  if (n == 1) return GroupTable::generate(1, {});
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return GroupTable::generate(n, {Permutation(std::move(img))});
}

GroupTable symmetric_group(int n, long order_cap) {
  if (n < 1) throw DomainError("symmetric group needs n >= 1");
  if (n == 1) return GroupTable::generate(1, {});
  std::vector<Permutation> gens;
  {
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.emplace_back(std::move(cycle));
  }
  if (n > 2) {
    std::vector<int> swap01(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    gens.emplace_back(std::move(swap01));
  }
  return GroupTable::generate(n, gens, order_cap);
}

GroupTable wreath_action(const GroupTable& inner, const GroupTable& outer,
                         long order_cap) {
  const int s = inner.degree();
  const int x = outer.degree();
  if (s < 1 || x < 1) throw DomainError("wreath product needs non-empty point sets");

  double points = std::pow(static_cast<double>(s), x);
  double order = std::pow(static_cast<double>(inner.order()), x) * outer.order();
  if (points > 1e7 || order > static_cast<double>(order_cap))
    throw CapExceededError("wreath product exceeds cap");
  const long npoints = std::lround(points);

  // digits of point p in base s, f(0) most significant
  auto digits_of = [&](long p) {
    std::vector<int> f(x);
    for (int i = x - 1; i >= 0; --i) {
      f[i] = static_cast<int>(p % s);
      p /= s;
    }
    return f;
  };
  auto point_of = [&](const std::vector<int>& f) {
    long p = 0;
    for (int i = 0; i < x; ++i) p = p * s + f[i];
    return p;
  };

  std::vector<Permutation> gens;
  // inner generator acting on one coordinate
  for (int gi : inner.generator_indices()) {
    const Permutation& gamma = inner.element(gi);
    for (int coord = 0; coord < x; ++coord) {
      std::vector<int> img(npoints);
      for (long p = 0; p < npoints; ++p) {
        auto f = digits_of(p);
        f[coord] = gamma(f[coord]);
        img[p] = static_cast<int>(point_of(f));
      }
      gens.emplace_back(std::move(img));
    }
  }
  // outer generator permuting coordinates: f'(j) = f(sigma^{-1}(j))
  for (int gi : outer.generator_indices()) {
    Permutation sigma_inv = outer.element(gi).inverse();
    std::vector<int> img(npoints);
    for (long p = 0; p < npoints; ++p) {
      auto f = digits_of(p);
      std::vector<int> moved(x);
      for (int j = 0; j < x; ++j) moved[j] = f[sigma_inv(j)];
      img[p] = static_cast<int>(point_of(moved));
    }
    gens.emplace_back(std::move(img));
  }
  return GroupTable::generate(static_cast<int>(npoints), gens, order_cap);
}

std::vector<Permutation> parse_generator_lines(const std::string& text, int degree) {
  std::vector<Permutation> gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    gens.push_back(Permutation::from_cycles(line, degree));
  }
  return gens;
}

}  // namespace qcomb
