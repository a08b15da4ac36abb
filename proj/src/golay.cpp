#include "eqlines/golay.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace eqlines {

namespace {

constexpr PointSet kAll = (PointSet{1} << 24) - 1;

PointSet with_parity(PointSet w) { return (__builtin_popcount(w) & 1) ? (w | (PointSet{1} << 23)) : w; }

std::unordered_map<PointSet, PointSet> five_map(const std::vector<PointSet>& blocks) {
  std::unordered_map<PointSet, PointSet> m;
  m.reserve(blocks.size() * 56);
  for (PointSet b : blocks) {
    const auto pts = points_of(b);
    if (pts.size() < 5) continue;
    const size_t k = pts.size();
    std::vector<int> idx(5);
    std::function<void(size_t, size_t, PointSet)> rec = [&](size_t start, size_t depth, PointSet acc) {
      if (depth == 5) {
        m.emplace(acc, b);
        return;
      }
      for (size_t i = start; i < k; ++i) rec(i + 1, depth + 1, acc | (PointSet{1} << (pts[i] - 1)));
    };
    rec(0, 0, 0);
  }
  return m;
}

}  // namespace

std::array<PointSet, 12> golay_generator_rows() {
  // Coefficients of g(x), bit i = coefficient of x^i.
  const PointSet g = (1U << 11) | (1U << 10) | (1U << 6) | (1U << 5) | (1U << 4) | (1U << 2) | 1U;
  std::array<PointSet, 12> rows{};
  for (int i = 0; i < 12; ++i) rows[i] = with_parity(g << i);
  return rows;
}

uint64_t golay_generator_hash() {
  uint64_t h = 14695981039346656037ULL;
  for (PointSet r : golay_generator_rows()) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (r >> (8 * byte)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::vector<PointSet> golay_codewords() {
  const auto rows = golay_generator_rows();
  std::vector<PointSet> words;
  words.reserve(4096);
  for (uint32_t m = 0; m < 4096; ++m) {
    PointSet w = 0;
    for (int i = 0; i < 12; ++i) {
      if ((m >> i) & 1U) w ^= rows[i];
    }
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<PointSet> golay_octads() {
  std::vector<PointSet> out;
  for (PointSet w : golay_codewords()) {
    if (__builtin_popcount(w) == 8) out.push_back(w);
  }
  return out;
}

std::vector<int> points_of(PointSet s) {
  std::vector<int> pts;
  for (int k = 0; k < 24; ++k) {
    if ((s >> k) & 1U) pts.push_back(k + 1);
  }
  return pts;
}

PointSet set_of(const std::vector<int>& points) {
  PointSet s = 0;
  for (int p : points) s |= PointSet{1} << (p - 1);
  return s;
}

size_t steiner_coverage(const std::vector<PointSet>& blocks) {
  std::unordered_map<PointSet, int> count;
  count.reserve(blocks.size() * 56);
  for (PointSet b : blocks) {
    const auto pts = points_of(b);
    const size_t k = pts.size();
    std::function<void(size_t, size_t, PointSet)> rec = [&](size_t start, size_t depth, PointSet acc) {
      if (depth == 5) {
        ++count[acc];
        return;
      }
      for (size_t i = start; i < k; ++i) rec(i + 1, depth + 1, acc | (PointSet{1} << (pts[i] - 1)));
    };
    rec(0, 0, 0);
  }
  size_t once = 0;
  for (const auto& [s, c] : count) once += c == 1 ? 1 : 0;
  return once;
}

std::optional<std::array<int, 25>> embed_blocks(const std::vector<PointSet>& design,
                                                const std::vector<PointSet>& wanted) {
  const auto five = five_map(design);
  std::vector<int> order;
  for (PointSet b : wanted) {
    for (int p : points_of(b)) {
      if (std::find(order.begin(), order.end(), p) == order.end()) order.push_back(p);
    }
  }
  std::array<int, 25> img{};
  PointSet used = 0;

  // Block forced by the first five assigned points of `b`, 0 if fewer assigned.
  auto forced = [&](PointSet b) -> PointSet {
    PointSet acc = 0;
    int have = 0;
    for (int p : points_of(b)) {
      if (img[p] == 0) continue;
      acc |= PointSet{1} << (img[p] - 1);
      if (++have == 5) break;
    }
    if (have < 5) return 0;
    const auto it = five.find(acc);
    return it == five.end() ? kAll + 1 : it->second;
  };
  auto consistent = [&](PointSet b) {
    const PointSet o = forced(b);
    if (o == 0) return true;
    if (o == kAll + 1) return false;
    for (int p : points_of(b)) {
      if (img[p] != 0 && !((o >> (img[p] - 1)) & 1U)) return false;
    }
    return true;
  };

  std::function<bool(size_t)> dfs = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    const int p = order[idx];
    PointSet cand = kAll & ~used;
    for (PointSet b : wanted) {
      if (!((b >> (p - 1)) & 1U)) continue;
      const PointSet o = forced(b);
      if (o == kAll + 1) return false;
      if (o != 0) cand &= o;
    }
    for (; cand; cand &= cand - 1) {
      const int c = __builtin_ctz(cand) + 1;
      img[p] = c;
      used |= PointSet{1} << (c - 1);
      bool ok = true;
      for (PointSet b : wanted) {
        if (((b >> (p - 1)) & 1U) && !consistent(b)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(idx + 1)) return true;
      img[p] = 0;
      used &= ~(PointSet{1} << (c - 1));
    }
    return false;
  };

  // Prefer the identity when it already works.
  bool identity = true;
  for (PointSet b : wanted) identity = identity && std::binary_search(design.begin(), design.end(), b);
  if (identity) {
    for (int p = 1; p <= 24; ++p) img[p] = p;
    return img;
  }
  if (!dfs(0)) return std::nullopt;
  int next = 1;
  for (int p = 1; p <= 24; ++p) {
    if (img[p] != 0) continue;
    while ((used >> (next - 1)) & 1U) ++next;
    img[p] = next;
    used |= PointSet{1} << (next - 1);
  }
  for (PointSet b : wanted) {
    PointSet image = 0;
    for (int p : points_of(b)) image |= PointSet{1} << (img[p] - 1);
    if (!std::binary_search(design.begin(), design.end(), image)) return std::nullopt;
  }
  return img;
}

}  // namespace eqlines
