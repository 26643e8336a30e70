#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <vector>

#include "subdiv/fincat.hpp"

namespace subdiv {

namespace {

// Build a one-object category from a group multiplication table.
// mult[a][b] is the product "a after b"; element 0 must be the unit.
FinCategory from_group_table(const std::vector<std::vector<MorphismId>>& mult) {
  const MorphismId n = static_cast<MorphismId>(mult.size());
  std::vector<Arrow> arrows(n, Arrow{0, 0});
  std::vector<std::array<MorphismId, 3>> comps;
  for (MorphismId a = 1; a < n; ++a)
    for (MorphismId b = 1; b < n; ++b) comps.push_back({a, b, mult[a][b]});
  return FinCategory(1, std::move(arrows), comps);
}

}  // namespace

FinCategory cyclic_group(int n) {
  assert(n >= 1);
  std::vector<std::vector<MorphismId>> mult(n, std::vector<MorphismId>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = static_cast<MorphismId>((a + b) % n);
  return from_group_table(mult);
}

FinCategory dihedral_group(int n) {
  assert(n >= 1);
  // r^k -> k, s r^k -> n + k; relations r^n = s^2 = 1, s r = r^-1 s.
  const int sz = 2 * n;
  auto enc = [&](bool flip, int k) { return static_cast<MorphismId>((flip ? n : 0) + k); };
  std::vector<std::vector<MorphismId>> mult(sz, std::vector<MorphismId>(sz));
  for (int a = 0; a < sz; ++a) {
    bool fa = a >= n;
    int ka = a % n;
    for (int b = 0; b < sz; ++b) {
      bool fb = b >= n;
      int kb = b % n;
      // (s^fa r^ka)(s^fb r^kb) = s^(fa^fb) r^(kb + ka * (-1)^fb)
      int k = fb ? (kb - ka % n + n) % n : (ka + kb) % n;
      mult[a][b] = enc(fa != fb, k);
    }
  }
  return from_group_table(mult);
}

FinCategory klein_four() {
  std::vector<std::vector<MorphismId>> mult(4, std::vector<MorphismId>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mult[a][b] = static_cast<MorphismId>(a ^ b);
  return from_group_table(mult);
}

FinCategory quaternion_group() {
  // 1 -> 0, -1 -> 1, i -> 2, -i -> 3, j -> 4, -j -> 5, k -> 6, -k -> 7.
  // axis 0 is the scalar; axis_mult gives (axis, extra sign) of products.
  static const int axis_mult[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mult[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mult[a][b]: extra minus in e_a * e_b (i*j = k, j*i = -k, x*x = -1).
  auto enc = [](int axis, int sign) {
    return static_cast<MorphismId>(axis == 0 ? sign : 2 * axis + sign);
  };
  auto dec_axis = [](int id) { return id < 2 ? 0 : id / 2; };
  auto dec_sign = [](int id) { return id < 2 ? id : id % 2; };
  std::vector<std::vector<MorphismId>> mult(8, std::vector<MorphismId>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int axis = axis_mult[dec_axis(a)][dec_axis(b)];
      int sign = dec_sign(a) ^ dec_sign(b) ^ sign_mult[dec_axis(a)][dec_axis(b)];
      mult[a][b] = enc(axis, sign);
    }
  return from_group_table(mult);
}

FinCategory frobenius21() {
  // Z/7 x| Z/3 with b a b^-1 = a^2; element a^i b^j -> 3*i + j.
  static const int pow2[3] = {1, 2, 4};
  std::vector<std::vector<MorphismId>> mult(21, std::vector<MorphismId>(21));
  for (int i1 = 0; i1 < 7; ++i1)
    for (int j1 = 0; j1 < 3; ++j1)
      for (int i2 = 0; i2 < 7; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          int i = (i1 + i2 * pow2[j1]) % 7;
          int j = (j1 + j2) % 3;
          mult[3 * i1 + j1][3 * i2 + j2] = static_cast<MorphismId>(3 * i + j);
        }
  return from_group_table(mult);
}

FinCategory alternating4() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // Lexicographic generation puts the identity first.
  std::map<std::array<int, 4>, MorphismId> index;
  for (MorphismId i = 0; i < 12; ++i) index[perms[i]] = i;
  std::vector<std::vector<MorphismId>> mult(12, std::vector<MorphismId>(12));
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) {
      std::array<int, 4> ab;
      for (int x = 0; x < 4; ++x) ab[x] = perms[a][perms[b][x]];
      mult[a][b] = index[ab];
    }
  return from_group_table(mult);
}

FinCategory dicyclic(int n) {
  assert(n >= 1);
  // Order 4n: a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1; a^i b^j -> 2n*j + i.
  const int two_n = 2 * n;
  auto enc = [&](int i, int j) { return static_cast<MorphismId>(two_n * j + i); };
  std::vector<std::vector<MorphismId>> mult(4 * n, std::vector<MorphismId>(4 * n));
  for (int i1 = 0; i1 < two_n; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < two_n; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = i1 + (j1 ? two_n - i2 : i2) + (j1 && j2 ? n : 0);
          mult[enc(i1, j1)][enc(i2, j2)] = enc(i % two_n, (j1 + j2) % 2);
        }
  return from_group_table(mult);
}

FinCategory metacyclic(int m, int n, int r) {
  assert(m >= 1 && n >= 1 && r >= 0);
  // a^m = 1, b^n = 1, b a b^-1 = a^r; needs r^n = 1 mod m. a^i b^j -> m*j + i.
  std::vector<int> rpow(n, 1);
  for (int j = 1; j < n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  assert((rpow[n - 1] * r) % m == 1 % m);
  auto enc = [&](int i, int j) { return static_cast<MorphismId>(m * j + i); };
  std::vector<std::vector<MorphismId>> mult(m * n, std::vector<MorphismId>(m * n));
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          mult[enc(i1, j1)][enc(i2, j2)] =
              enc((i1 + i2 * rpow[j1]) % m, (j1 + j2) % n);
  return from_group_table(mult);
}

FinCategory pair_groupoid(int n) {
  assert(n >= 1);
  const ObjectId N = static_cast<ObjectId>(n);
  auto enc = [&](ObjectId i, ObjectId j) -> MorphismId {
    if (i == j) return i;
    return N + i * (N - 1) + (j > i ? j - 1 : j);
  };
  std::vector<Arrow> arrows(static_cast<std::size_t>(N) * N);
  for (ObjectId i = 0; i < N; ++i)
    for (ObjectId j = 0; j < N; ++j) arrows[enc(i, j)] = {i, j};
  std::vector<std::array<MorphismId, 3>> comps;
  for (ObjectId i = 0; i < N; ++i)
    for (ObjectId j = 0; j < N; ++j)
      for (ObjectId k = 0; k < N; ++k) {
        if (i == j || j == k) continue;
        comps.push_back({enc(j, k), enc(i, j), enc(i, k)});
      }
  return FinCategory(N, std::move(arrows), comps);
}

FinCategory discrete(int n) {
  assert(n >= 0);
  std::vector<Arrow> arrows;
  for (ObjectId o = 0; o < static_cast<ObjectId>(n); ++o) arrows.push_back({o, o});
  return FinCategory(static_cast<ObjectId>(n), std::move(arrows), {});
}

FinCategory poset_interval(int n) {
  assert(n >= 0);
  const ObjectId N = static_cast<ObjectId>(n) + 1;
  std::map<std::pair<ObjectId, ObjectId>, MorphismId> enc;
  std::vector<Arrow> arrows;
  for (ObjectId i = 0; i < N; ++i) {
    enc[{i, i}] = i;
    arrows.push_back({i, i});
  }
  for (ObjectId i = 0; i < N; ++i)
    for (ObjectId j = i + 1; j < N; ++j) {
      enc[{i, j}] = static_cast<MorphismId>(arrows.size());
      arrows.push_back({i, j});
    }
  std::vector<std::array<MorphismId, 3>> comps;
  for (ObjectId i = 0; i < N; ++i)
    for (ObjectId j = i + 1; j < N; ++j)
      for (ObjectId k = j + 1; k < N; ++k)
        comps.push_back({enc[{j, k}], enc[{i, j}], enc[{i, k}]});
  return FinCategory(N, std::move(arrows), comps);
}

FinCategory zigzag(int k) {
  assert(k >= 0);
  const ObjectId N = static_cast<ObjectId>(k) + 1;
  std::vector<Arrow> arrows;
  for (ObjectId o = 0; o < N; ++o) arrows.push_back({o, o});
  for (int j = 0; j < k; ++j) {
    ObjectId a = static_cast<ObjectId>(j), b = static_cast<ObjectId>(j) + 1;
    if (j % 2 == 0)
      arrows.push_back({a, b});
    else
      arrows.push_back({b, a});
  }
  return FinCategory(N, std::move(arrows), {});
}

FinCategory vertex_group_groupoid(const FinCategory& group, int n) {
  assert(group.object_count() == 1);
  assert(n >= 1);
  const ObjectId N = static_cast<ObjectId>(n);
  const MorphismId M = group.morphism_count();

  // Morphism (i, j, v): i -> j carrying group element v; (i, i, 0) = id.
  std::map<std::tuple<ObjectId, ObjectId, MorphismId>, MorphismId> enc;
  std::vector<Arrow> arrows;
  for (ObjectId i = 0; i < N; ++i) {
    enc[{i, i, 0}] = i;
    arrows.push_back({i, i});
  }
  for (ObjectId i = 0; i < N; ++i)
    for (ObjectId j = 0; j < N; ++j)
      for (MorphismId v = 0; v < M; ++v) {
        if (i == j && v == 0) continue;
        enc[{i, j, v}] = static_cast<MorphismId>(arrows.size());
        arrows.push_back({i, j});
      }

  std::vector<std::array<MorphismId, 3>> comps;
  for (const auto& [key1, m1] : enc)
    for (const auto& [key2, m2] : enc) {
      auto [i, j, v] = key1;
      auto [j2, k, w] = key2;
      if (j != j2) continue;
      comps.push_back({m2, m1, enc[{i, k, group.compose(w, v)}]});
    }
  return FinCategory(N, std::move(arrows), comps);
}

}  // namespace subdiv
