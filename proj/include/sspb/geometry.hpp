#pragma once

#include <vector>

namespace sspb {

// Axis-aligned box in continuous pixel coordinates, (x, y) = top-left corner.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double x2() const { return x + w; }
  double y2() const { return y + h; }
  double area() const { return w * h; }
  bool valid() const { return w > 0.0 && h > 0.0; }
};

struct ScoredBox {
  BoundingBox box;
  double score = 0.0;
};

// Multi-stage NMS schedule. Thresholds must be strictly decreasing and in
// (0, 1]; a threshold of 1 keeps every box since suppression fires only on
// IoU strictly greater than the threshold.
struct ArnmsConfig {
  int stages = 3;
  std::vector<double> thresholds = {1.0, 0.7, 0.5};
  int output_size = 10000;

  void validate() const;  // throws std::invalid_argument on a bad config
};

// Intersection over union of two boxes. Total function: disjoint boxes give 0.
double iou(const BoundingBox& a, const BoundingBox& b);

// Standard greedy NMS. Boxes are visited in descending score order (ties by
// input index, lower first); a box is kept iff its IoU with every previously
// kept box is <= threshold. Returns kept boxes in visit order.
std::vector<ScoredBox> greedy_nms(const std::vector<ScoredBox>& boxes,
                                  double threshold);

// Average-recall NMS: runs cfg.stages greedy passes with decreasing
// thresholds over the pool of not-yet-emitted boxes, emitting the
// floor(N/S) best survivors per stage (the last stage tops the output up
// to N). Suppressed boxes re-enter the pool for later stages, so the
// output size is min(N, |boxes|).
std::vector<ScoredBox> arnms(const std::vector<ScoredBox>& boxes,
                             const ArnmsConfig& cfg);

}  // namespace sspb
