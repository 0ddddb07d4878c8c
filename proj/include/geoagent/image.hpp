#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace geoagent::imgproc {

/// Interleaved 8-bit pixel buffer (3 channels). Decoding and encoding go
/// through OpenCV's codecs; all resampling is done by the kernels below.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 3;
  std::vector<std::uint8_t> pixels;

  static Image make(int width, int height, int channels = 3);
  bool empty() const { return width <= 0 || height <= 0; }
};

Image load_image(const std::filesystem::path& path);
std::vector<std::uint8_t> encode_png(const Image& image);
Image decode_image(const std::vector<std::uint8_t>& bytes);
void save_png(const Image& image, const std::filesystem::path& path);

/// Bilinear resampling, center-aligned sample grid. The _serial variant is
/// the reference implementation; the parallel one splits output rows across
/// OpenMP threads and must produce byte-identical results.
Image resize_bilinear_serial(const Image& src, int out_width, int out_height);
Image resize_bilinear(const Image& src, int out_width, int out_height);

/// Copy of the half-open rectangle [x1, x2) x [y1, y2); caller clamps.
Image crop(const Image& src, int x1, int y1, int x2, int y2);

/// Output dimensions for scaling (w, h) uniformly so area fits the budget.
/// Identity when already within budget; floor rounding keeps each side
/// within 1 px of the exact scaled size.
std::pair<int, int> fit_to_budget(int width, int height, long long budget_pixels);

}  // namespace geoagent::imgproc
