#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sspb/geometry.hpp"
#include "sspb/selection.hpp"

namespace sspb {

// Per-pixel edge magnitude and undirected orientation in [0, pi), row-major.
struct EdgeMap {
  int width = 0;
  int height = 0;
  std::vector<float> magnitude;    // height * width
  std::vector<float> orientation;  // height * width

  float mag(int x, int y) const { return magnitude[static_cast<std::size_t>(y) * width + x]; }
  float ori(int x, int y) const { return orientation[static_cast<std::size_t>(y) * width + x]; }
};

inline constexpr int kOrientationBins = 4;

// One (H+1)x(W+1) exclusive-prefix integral image per orientation bin.
struct OrientationIntegrals {
  int width = 0;
  int height = 0;
  std::array<std::vector<double>, kOrientationBins> channels;

  // Sum of magnitudes over the half-open pixel rectangle [x0,x1) x [y0,y1).
  double rect_sum(int channel, int x0, int y0, int x1, int y1) const {
    const auto& I = channels[channel];
    const int stride = width + 1;
    return I[static_cast<std::size_t>(y1) * stride + x1] -
           I[static_cast<std::size_t>(y0) * stride + x1] -
           I[static_cast<std::size_t>(y1) * stride + x0] +
           I[static_cast<std::size_t>(y0) * stride + x0];
  }
};

// Rectangle in coordinates normalized to the enlarged-box frame ([0,1]^2).
struct NormRect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

inline constexpr int kBevStripes = 8;
inline constexpr int kBevSegments = 5;
inline constexpr int kBevBinsPerSide = kBevStripes * kBevSegments;
inline constexpr int kBevBinsPerLayout = 4 * kBevBinsPerSide;

// 160 stripe-segment bins hugging the four sides of the enlarged box.
struct BevLayout {
  double stripe_fraction = 0.0;  // P: band thickness relative to enlarged side
  std::vector<NormRect> bins;    // fixed enumeration order, see build_bev_layout
};

inline constexpr double kBevEnlargement = 0.10;
inline constexpr std::array<double, 7> kBevStripeFractions = {
    0.16, 0.18, 0.22, 0.24, 0.28, 0.32, 0.36};

// The seven-layout bank used by the full descriptor (1120 bins, 4480 dims).
struct BevBank {
  std::vector<BevLayout> layouts;
  std::optional<BinSelection> selection;  // indices into the flat bin order

  int total_bins() const;
  int descriptor_dim() const;  // 4 dims per selected (or all) bins
};

// Accumulate each edgel's magnitude into one of 4 equal orientation bins over
// [0, pi) and build the integral images.
OrientationIntegrals quantize_orientations(const EdgeMap& edges);

// Scale width and height by (1 + fraction) around the box center.
BoundingBox enlarge_box(const BoundingBox& box, double fraction = kBevEnlargement);

// Bins for one P value. Per side, a band of thickness P (normalized) anchored
// at the enlarged-box edge extending inward is cut into 8 stripes parallel to
// the side (outermost first), each split into 5 segments along the side
// (left-to-right / top-to-bottom). Side order: top, right, bottom, left.
BevLayout build_bev_layout(double stripe_fraction);

// All seven paper layouts, no selection.
BevBank make_bev_bank();

// Pool the 4 orientation sums of every selected bin (all bins when no
// selection), concatenate in enumeration order and l2-normalize. Bin
// rectangles are snapped to integer pixel edges and clipped to the image;
// a box that misses the image entirely yields an all-zero descriptor.
std::vector<double> extract_bev(const BoundingBox& box,
                                const OrientationIntegrals& integrals,
                                const BevBank& bank);

}  // namespace sspb
