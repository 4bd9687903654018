#include "sspb/edge_bev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sspb {

int BevBank::total_bins() const {
  int n = 0;
  for (const auto& l : layouts) n += static_cast<int>(l.bins.size());
  return n;
}

int BevBank::descriptor_dim() const {
  const int bins = selection ? selection->count() : total_bins();
  return bins * kOrientationBins;
}

OrientationIntegrals quantize_orientations(const EdgeMap& edges) {
  const int w = edges.width;
  const int h = edges.height;
  OrientationIntegrals out;
  out.width = w;
  out.height = h;
  const int stride = w + 1;
  for (auto& ch : out.channels) ch.assign(static_cast<std::size_t>(h + 1) * stride, 0.0);

  constexpr double pi = std::numbers::pi;
  constexpr double bin_width = pi / kOrientationBins;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double ori = edges.ori(x, y);
      if (ori < 0.0 || ori >= pi) {
        ori = std::fmod(ori, pi);
        if (ori < 0.0) ori += pi;
      }
      int bin = static_cast<int>(ori / bin_width);
      if (bin >= kOrientationBins) bin = kOrientationBins - 1;
      out.channels[bin][static_cast<std::size_t>(y + 1) * stride + (x + 1)] = edges.mag(x, y);
    }
  }
  for (auto& I : out.channels) {
    for (int y = 1; y <= h; ++y) {
      const std::size_t row = static_cast<std::size_t>(y) * stride;
      const std::size_t prev = row - stride;
      for (int x = 1; x <= w; ++x)
        I[row + x] += I[row + x - 1] + I[prev + x] - I[prev + x - 1];
    }
  }
  return out;
}

BoundingBox enlarge_box(const BoundingBox& box, double fraction) {
  const double dw = box.w * fraction;
  const double dh = box.h * fraction;
  return {box.x - dw / 2, box.y - dh / 2, box.w + dw, box.h + dh};
}

BevLayout build_bev_layout(double stripe_fraction) {
  if (!(stripe_fraction > 0.0 && stripe_fraction < 1.0))
    throw std::invalid_argument("bev layout: stripe fraction must lie in (0, 1)");
  const double P = stripe_fraction;
  const double thick = P / kBevStripes;
  const double seg = 1.0 / kBevSegments;

  BevLayout layout;
  layout.stripe_fraction = P;
  layout.bins.reserve(kBevBinsPerLayout);
  for (int side = 0; side < 4; ++side) {
    for (int s = 0; s < kBevStripes; ++s) {
      for (int d = 0; d < kBevSegments; ++d) {
        const double lo = d * seg;
        const double hi = (d + 1) * seg;
        NormRect r;
        switch (side) {
          case 0:  // top: stripes stack downward from the outer edge
            r = {lo, s * thick, hi, (s + 1) * thick};
            break;
          case 1:  // right: stripes stack leftward
            r = {1.0 - (s + 1) * thick, lo, 1.0 - s * thick, hi};
            break;
          case 2:  // bottom: stripes stack upward
            r = {lo, 1.0 - (s + 1) * thick, hi, 1.0 - s * thick};
            break;
          default:  // left: stripes stack rightward
            r = {s * thick, lo, (s + 1) * thick, hi};
            break;
        }
        layout.bins.push_back(r);
      }
    }
  }
  return layout;
}

BevBank make_bev_bank() {
  BevBank bank;
  bank.layouts.reserve(kBevStripeFractions.size());
  for (double P : kBevStripeFractions) bank.layouts.push_back(build_bev_layout(P));
  return bank;
}

namespace {

inline int snap(double v, int limit) {
  int p = static_cast<int>(std::lround(v));
  if (p < 0) p = 0;
  if (p > limit) p = limit;
  return p;
}

}  // namespace

std::vector<double> extract_bev(const BoundingBox& box,
                                const OrientationIntegrals& integrals,
                                const BevBank& bank) {
  const BoundingBox big = enlarge_box(box);
  std::vector<double> desc;
  desc.reserve(bank.descriptor_dim());

  auto pool_bin = [&](const NormRect& r) {
    const int x0 = snap(big.x + r.x0 * big.w, integrals.width);
    const int x1 = snap(big.x + r.x1 * big.w, integrals.width);
    const int y0 = snap(big.y + r.y0 * big.h, integrals.height);
    const int y1 = snap(big.y + r.y1 * big.h, integrals.height);
    if (x1 <= x0 || y1 <= y0) {
      desc.insert(desc.end(), kOrientationBins, 0.0);
      return;
    }
    for (int c = 0; c < kOrientationBins; ++c)
      desc.push_back(integrals.rect_sum(c, x0, y0, x1, y1));
  };

  if (bank.selection) {
    // Flat bin index -> (layout, bin) via the fixed per-layout size.
    for (int flat : bank.selection->kept) {
      const int layout = flat / kBevBinsPerLayout;
      const int bin = flat % kBevBinsPerLayout;
      pool_bin(bank.layouts[layout].bins[bin]);
    }
  } else {
    for (const auto& layout : bank.layouts)
      for (const auto& r : layout.bins) pool_bin(r);
  }

  double norm2 = 0.0;
  for (double v : desc) norm2 += v * v;
  if (norm2 > 0.0) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : desc) v *= inv;
  }
  return desc;
}

}  // namespace sspb
