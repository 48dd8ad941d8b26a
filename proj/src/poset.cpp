#include "anglekit/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace anglekit {

GradedPoset::GradedPoset(std::size_t n, const std::vector<Cover>& covers, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (n == 0) throw Error("poset must be nonempty");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != n) throw Error("poset label count mismatch");
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [a, b] : covers) {
    if (a >= n || b >= n || a == b) throw Error("invalid cover relation");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (auto& v : up_) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw Error("duplicate cover relation");
  }
  for (auto& v : down_) std::sort(v.begin(), v.end());

  std::vector<std::size_t> minima, maxima;
  for (std::size_t i = 0; i < n; ++i) {
    if (down_[i].empty()) minima.push_back(i);
    if (up_[i].empty()) maxima.push_back(i);
  }
  if (minima.size() != 1) throw Error("poset needs a unique minimum");
  if (maxima.size() != 1) throw Error("poset needs a unique maximum");
  bottom_ = minima[0];
  top_ = maxima[0];

  // Topological order (Kahn), ranks from the minimum.
  std::vector<std::size_t> indeg(n), order;
  for (std::size_t i = 0; i < n; ++i) indeg[i] = down_[i].size();
  std::queue<std::size_t> ready;
  ready.push(bottom_);
  ranks_.assign(n, 0);
  while (!ready.empty()) {
    std::size_t x = ready.front();
    ready.pop();
    order.push_back(x);
    for (auto y : up_[x]) {
      ranks_[y] = std::max(ranks_[y], ranks_[x] + 1);
      if (--indeg[y] == 0) ready.push(y);
    }
  }
  if (order.size() != n) throw Error("cover relation has a cycle");
  for (auto [a, b] : covers)
    if (ranks_[b] != ranks_[a] + 1) throw Error("poset is not graded");

  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t x = *it;
    reach_[x][x >> 6] |= std::uint64_t(1) << (x & 63);
    for (auto y : up_[x])
      for (std::size_t w = 0; w < words; ++w) reach_[x][w] |= reach_[y][w];
  }
  // A cover must not be implied by a longer path.
  for (auto [a, b] : covers)
    for (auto c : up_[a])
      if (c != b && leq(c, b)) throw Error("cover relation is not a transitive reduction");

  by_rank_.assign(ranks_[top_] + 1, {});
  for (std::size_t i = 0; i < n; ++i) by_rank_[ranks_[i]].push_back(i);
}

const std::vector<std::size_t>& GradedPoset::elements_of_rank(std::size_t k) const {
  static const std::vector<std::size_t> empty;
  return k < by_rank_.size() ? by_rank_[k] : empty;
}

std::vector<GradedPoset::Cover> GradedPoset::covers() const {
  std::vector<Cover> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b : up_[a]) out.emplace_back(a, b);
  return out;
}

std::vector<std::size_t> GradedPoset::rank_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_rank_) out.push_back(level.size());
  return out;
}

GradedPoset GradedPoset::chain(std::size_t n) {
  std::vector<Cover> c;
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(i, i + 1);
  return GradedPoset(n + 1, c);
}

GradedPoset GradedPoset::boolean(std::size_t n) {
  const std::size_t size = std::size_t(1) << n;
  std::vector<Cover> c;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < size; ++s) {
    std::string l = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) l += std::to_string(i + 1);
      else c.emplace_back(s, s | (std::size_t(1) << i));
    }
    labels.push_back(l + "}");
  }
  return GradedPoset(size, c, labels);
}

GradedPoset GradedPoset::product(const GradedPoset& other) const {
  const std::size_t m = other.size();
  std::vector<Cover> c;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < m; ++b) {
      labels.push_back("(" + labels_[a] + "," + other.labels_[b] + ")");
      for (auto a2 : up_[a]) c.emplace_back(a * m + b, a2 * m + b);
      for (auto b2 : other.up_[b]) c.emplace_back(a * m + b, a * m + b2);
    }
  return GradedPoset(size() * m, c, labels);
}

GradedPoset GradedPoset::dual() const {
  std::vector<Cover> c;
  for (auto [a, b] : covers()) c.emplace_back(b, a);
  return GradedPoset(size(), c, labels_);
}

GradedPoset GradedPoset::induced(const std::vector<bool>& keep) const {
  if (keep.size() != size() || !keep[bottom_] || !keep[top_]) throw Error("induced poset must keep both bounds");
  std::vector<std::size_t> index(size(), size()), kept;
  for (std::size_t i = 0; i < size(); ++i)
    if (keep[i]) {
      index[i] = kept.size();
      kept.push_back(i);
    }
  std::vector<Cover> c;
  std::vector<std::string> labels;
  for (auto a : kept) {
    labels.push_back(labels_[a]);
    for (auto b : kept) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (auto x : kept)
        if (x != a && x != b && less(a, x) && less(x, b)) {
          cover = false;
          break;
        }
      if (cover) c.emplace_back(index[a], index[b]);
    }
  }
  return GradedPoset(kept.size(), c, labels);
}

GradedPoset GradedPoset::with_new_bottom(const std::string& label) const {
  std::vector<Cover> c = covers();
  for (auto& [a, b] : c) {
    ++a;
    ++b;
  }
  c.emplace_back(0, bottom_ + 1);
  std::vector<std::string> labels{label};
  labels.insert(labels.end(), labels_.begin(), labels_.end());
  return GradedPoset(size() + 1, c, labels);
}

bool GradedPoset::is_isomorphic(const GradedPoset& other) const {
  if (size() != other.size() || rank_sizes() != other.rank_sizes()) return false;
  const std::size_t n = size();
  auto signature = [](const GradedPoset& p, std::size_t x) {
    return std::make_tuple(p.rank(x), p.up_[x].size(), p.down_[x].size());
  };
  std::vector<std::size_t> map(n, n), inverse(n, n);
  std::vector<std::size_t> order;
  for (const auto& level : by_rank_) order.insert(order.end(), level.begin(), level.end());

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (inverse[y] != n || signature(*this, x) != signature(other, y)) continue;
      bool ok = true;
      for (auto lo : down_[x])
        if (!std::binary_search(other.down_[y].begin(), other.down_[y].end(), map[lo])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[x] = y;
      inverse[y] = x;
      if (assign(k + 1)) return true;
      map[x] = n;
      inverse[y] = n;
    }
    return false;
  };
  return assign(0);
}

GradedPoset pyramid_operator(const GradedPoset& p) { return p.product(GradedPoset::chain(1)); }

GradedPoset delete_coatoms(const GradedPoset& p) {
  if (p.rank() < 2) throw Error("deleting coatoms needs rank at least 2");
  std::vector<bool> keep(p.size(), true);
  for (auto x : p.elements_of_rank(p.rank() - 1)) keep[x] = false;
  return p.induced(keep);
}

GradedPoset prism_operator(const GradedPoset& p) { return delete_coatoms(pyramid_operator(p)); }

}  // namespace anglekit
