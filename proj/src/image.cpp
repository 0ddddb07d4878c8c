#include "geoagent/image.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace geoagent::imgproc {

Image Image::make(int width, int height, int channels) {
  if (width < 1 || height < 1 || (channels != 1 && channels != 3)) {
    throw std::invalid_argument("invalid image dimensions");
  }
  Image img;
  img.width = width;
  img.height = height;
  img.channels = channels;
  img.pixels.assign(static_cast<size_t>(width) * height * channels, 0);
  return img;
}

Image load_image(const std::filesystem::path& path) {
  cv::Mat mat = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (mat.empty()) {
    throw std::runtime_error("unreadable image: " + path.string());
  }
  Image img = Image::make(mat.cols, mat.rows, 3);
  if (mat.isContinuous()) {
    std::copy(mat.data, mat.data + img.pixels.size(), img.pixels.begin());
  } else {
    for (int y = 0; y < mat.rows; ++y) {
      const auto* row = mat.ptr<std::uint8_t>(y);
      std::copy(row, row + static_cast<size_t>(mat.cols) * 3,
                img.pixels.begin() + static_cast<size_t>(y) * mat.cols * 3);
    }
  }
  return img;
}

std::vector<std::uint8_t> encode_png(const Image& image) {
  if (image.empty()) throw std::invalid_argument("cannot encode empty image");
  cv::Mat mat(image.height, image.width, image.channels == 3 ? CV_8UC3 : CV_8UC1,
              const_cast<std::uint8_t*>(image.pixels.data()));
  std::vector<std::uint8_t> bytes;
  if (!cv::imencode(".png", mat, bytes)) {
    throw std::runtime_error("png encode failed");
  }
  return bytes;
}

Image decode_image(const std::vector<std::uint8_t>& bytes) {
  cv::Mat mat = cv::imdecode(bytes, cv::IMREAD_COLOR);
  if (mat.empty()) throw std::runtime_error("image decode failed");
  Image img = Image::make(mat.cols, mat.rows, 3);
  for (int y = 0; y < mat.rows; ++y) {
    const auto* row = mat.ptr<std::uint8_t>(y);
    std::copy(row, row + static_cast<size_t>(mat.cols) * 3,
              img.pixels.begin() + static_cast<size_t>(y) * mat.cols * 3);
  }
  return img;
}

void save_png(const Image& image, const std::filesystem::path& path) {
  const auto bytes = encode_png(image);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for write: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("png write failed: " + path.string());
}

namespace {

// One output row of the bilinear kernel. Kept as a free function so the
// serial and OpenMP drivers share the exact same arithmetic.
void resize_row(const Image& src, Image& dst, int oy, double sx, double sy) {
  const int c = src.channels;
  const double fy = (oy + 0.5) * sy - 0.5;
  int y0 = static_cast<int>(std::floor(fy));
  double wy = fy - y0;
  int y1 = y0 + 1;
  y0 = std::clamp(y0, 0, src.height - 1);
  y1 = std::clamp(y1, 0, src.height - 1);
  const std::uint8_t* row0 = src.pixels.data() + static_cast<size_t>(y0) * src.width * c;
  const std::uint8_t* row1 = src.pixels.data() + static_cast<size_t>(y1) * src.width * c;
  std::uint8_t* out = dst.pixels.data() + static_cast<size_t>(oy) * dst.width * c;
  for (int ox = 0; ox < dst.width; ++ox) {
    const double fx = (ox + 0.5) * sx - 0.5;
    int x0 = static_cast<int>(std::floor(fx));
    double wx = fx - x0;
    int x1 = x0 + 1;
    x0 = std::clamp(x0, 0, src.width - 1);
    x1 = std::clamp(x1, 0, src.width - 1);
    for (int ch = 0; ch < c; ++ch) {
      const double top = row0[x0 * c + ch] * (1.0 - wx) + row0[x1 * c + ch] * wx;
      const double bot = row1[x0 * c + ch] * (1.0 - wx) + row1[x1 * c + ch] * wx;
      const double val = top * (1.0 - wy) + bot * wy;
      out[ox * c + ch] = static_cast<std::uint8_t>(std::lround(std::clamp(val, 0.0, 255.0)));
    }
  }
}

void check_resize_args(const Image& src, int out_width, int out_height) {
  if (src.empty()) throw std::invalid_argument("cannot resize empty image");
  if (out_width < 1 || out_height < 1) throw std::invalid_argument("invalid resize target");
}

}  // namespace

Image resize_bilinear_serial(const Image& src, int out_width, int out_height) {
  check_resize_args(src, out_width, out_height);
  if (out_width == src.width && out_height == src.height) return src;
  Image dst = Image::make(out_width, out_height, src.channels);
  const double sx = static_cast<double>(src.width) / out_width;
  const double sy = static_cast<double>(src.height) / out_height;
  for (int oy = 0; oy < out_height; ++oy) {
    resize_row(src, dst, oy, sx, sy);
  }
  return dst;
}

Image resize_bilinear(const Image& src, int out_width, int out_height) {
  check_resize_args(src, out_width, out_height);
  if (out_width == src.width && out_height == src.height) return src;
  Image dst = Image::make(out_width, out_height, src.channels);
  const double sx = static_cast<double>(src.width) / out_width;
  const double sy = static_cast<double>(src.height) / out_height;
#pragma omp parallel for schedule(static)
  for (int oy = 0; oy < out_height; ++oy) {
    resize_row(src, dst, oy, sx, sy);
  }
  return dst;
}

Image crop(const Image& src, int x1, int y1, int x2, int y2) {
  if (src.empty()) throw std::invalid_argument("cannot crop empty image");
  if (x1 < 0 || y1 < 0 || x2 > src.width || y2 > src.height || x1 >= x2 || y1 >= y2) {
    throw std::invalid_argument("crop rectangle out of bounds");
  }
  Image dst = Image::make(x2 - x1, y2 - y1, src.channels);
  const int c = src.channels;
  for (int y = y1; y < y2; ++y) {
    const auto* row = src.pixels.data() + (static_cast<size_t>(y) * src.width + x1) * c;
    std::copy(row, row + static_cast<size_t>(dst.width) * c,
              dst.pixels.begin() + static_cast<size_t>(y - y1) * dst.width * c);
  }
  return dst;
}

std::pair<int, int> fit_to_budget(int width, int height, long long budget_pixels) {
  if (width < 1 || height < 1) throw std::invalid_argument("zero-area image");
  if (budget_pixels < 1) throw std::invalid_argument("budget must be >= 1");
  const long long area = static_cast<long long>(width) * height;
  if (area <= budget_pixels) return {width, height};
  const double scale = std::sqrt(static_cast<double>(budget_pixels) / area);
  int out_w = std::max(1, static_cast<int>(std::floor(width * scale)));
  int out_h = std::max(1, static_cast<int>(std::floor(height * scale)));
  // floor(w*s) * floor(h*s) <= budget except when a side was clamped to 1.
  while (static_cast<long long>(out_w) * out_h > budget_pixels) {
    if (out_w >= out_h && out_w > 1) {
      --out_w;
    } else if (out_h > 1) {
      --out_h;
    } else {
      break;
    }
  }
  return {out_w, out_h};
}

}  // namespace geoagent::imgproc
