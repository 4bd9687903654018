#include "sspb/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sspb {

void ArnmsConfig::validate() const {
  if (stages < 1) throw std::invalid_argument("arnms: stages must be >= 1");
  if (static_cast<int>(thresholds.size()) != stages)
    throw std::invalid_argument("arnms: need exactly one threshold per stage");
  for (double o : thresholds)
    if (!(o > 0.0 && o <= 1.0))
      throw std::invalid_argument("arnms: thresholds must lie in (0, 1]");
  for (std::size_t s = 1; s < thresholds.size(); ++s)
    if (!(thresholds[s] < thresholds[s - 1]))
      throw std::invalid_argument("arnms: thresholds must be strictly decreasing");
  if (output_size < 1) throw std::invalid_argument("arnms: output_size must be >= 1");
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  if (a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h) return 1.0;
  const double iw = std::min(a.x2(), b.x2()) - std::max(a.x, b.x);
  const double ih = std::min(a.y2(), b.y2()) - std::max(a.y, b.y);
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  return inter / (a.area() + b.area() - inter);
}

namespace {

// Input indices sorted by descending score; equal scores keep input order.
std::vector<int> score_order(const std::vector<ScoredBox>& boxes) {
  std::vector<int> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return boxes[a].score > boxes[b].score; });
  return order;
}

}  // namespace

std::vector<ScoredBox> greedy_nms(const std::vector<ScoredBox>& boxes,
                                  double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw std::invalid_argument("greedy_nms: threshold must lie in (0, 1]");
  std::vector<ScoredBox> kept;
  for (int idx : score_order(boxes)) {
    bool suppressed = false;
    for (const auto& k : kept) {
      if (iou(k.box, boxes[idx].box) > threshold) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(boxes[idx]);
  }
  return kept;
}

std::vector<ScoredBox> arnms(const std::vector<ScoredBox>& boxes,
                             const ArnmsConfig& cfg) {
  cfg.validate();
  std::vector<int> pool = score_order(boxes);
  std::vector<ScoredBox> out;
  const int per_stage = cfg.output_size / cfg.stages;

  for (int s = 0; s < cfg.stages; ++s) {
    if (pool.empty() || static_cast<int>(out.size()) >= cfg.output_size) break;
    const bool last = (s + 1 == cfg.stages);
    const int quota = last ? cfg.output_size - static_cast<int>(out.size()) : per_stage;
    if (quota <= 0) continue;
    const double thr = cfg.thresholds[s];

    if (thr >= 1.0) {
      // IoU can never exceed 1: nothing suppressed, survivors = pool prefix.
      const int emit = std::min<int>(quota, static_cast<int>(pool.size()));
      for (int i = 0; i < emit; ++i) out.push_back(boxes[pool[i]]);
      pool.erase(pool.begin(), pool.begin() + emit);
      continue;
    }

    // Greedy pass in score order. Only the first `quota` survivors can be
    // emitted and everything unemitted returns to the pool, so the pass may
    // stop once the quota is filled.
    std::vector<int> emitted;
    std::vector<int> rest;
    std::size_t i = 0;
    for (; i < pool.size() && static_cast<int>(emitted.size()) < quota; ++i) {
      const int idx = pool[i];
      bool suppressed = false;
      for (int k : emitted) {
        if (iou(boxes[k].box, boxes[idx].box) > thr) {
          suppressed = true;
          break;
        }
      }
      if (suppressed)
        rest.push_back(idx);
      else
        emitted.push_back(idx);
    }
    for (int k : emitted) out.push_back(boxes[k]);
    rest.insert(rest.end(), pool.begin() + i, pool.end());
    pool = std::move(rest);  // both parts are already in score order
  }
  return out;
}

}  // namespace sspb
