#include "mackey/completion.hpp"

#include <numeric>

namespace mackey {

Pi0 pi0_objects(const FinPermCat& c) {
  const std::size_t m = c.objects();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mor f = 0; f < c.morphisms(); ++f) {
    auto a = find(c.dom(f)), b = find(c.cod(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Pi0 p;
  p.component_of.assign(m, 0);
  std::vector<std::size_t> number(m, m);
  for (Obj x = 0; x < m; ++x) {
    const auto root = find(x);
    if (number[root] == m) {
      number[root] = p.representative.size();
      p.representative.push_back(x);
    }
    p.component_of[x] = number[root];
  }
  const std::size_t k = p.representative.size();
  p.monoid.size = k;
  p.monoid.table.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      p.monoid.table[i * k + j] = p.component_of[c.osum(p.representative[i], p.representative[j])];
  return p;
}

std::shared_ptr<const AbelianGroup> group_completion(const CommMonoid& m) {
  const std::size_t k = m.size;
  Matrix rel;
  Vec unit(k, 0);
  unit[0] = 1;
  rel.push_back(unit);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x; y < k; ++y) {
      Vec row(k, 0);
      row[x] += 1;
      row[y] += 1;
      row[m.add(x, y)] -= 1;
      rel.push_back(std::move(row));
    }
  return std::make_shared<const AbelianGroup>(k, std::move(rel));
}

Homomorphism induced_map_on_completions(const LaxFunctor& f) {
  const Pi0 ps = pi0_objects(*f.source);
  const Pi0 pt = pi0_objects(*f.target);
  auto gs = group_completion(ps.monoid);
  auto gt = group_completion(pt.monoid);
  Matrix m = zero_matrix(ps.monoid.size, pt.monoid.size);
  for (std::size_t i = 0; i < ps.monoid.size; ++i) m[i][pt.component_of[f.obj[ps.representative[i]]]] = 1;
  return Homomorphism(std::move(gs), std::move(gt), std::move(m));
}

}  // namespace mackey
