#include "geoagent/tools.hpp"

#include "geoagent/util.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace geoagent::tools {

ImageRef ImageRef::make(std::string path, int width, int height, double scale_to_original) {
  if (width < 1 || height < 1) throw std::invalid_argument("image dimensions must be >= 1");
  if (scale_to_original < 1.0) {
    throw std::invalid_argument("scale_to_original must be >= 1");
  }
  return ImageRef{std::move(path), width, height, scale_to_original};
}

ImageStore::ImageStore(std::filesystem::path root) : root_(std::move(root)) {
  std::filesystem::create_directories(root_ / "images");
}

std::string ImageStore::put(const imgproc::Image& image) {
  const auto bytes = imgproc::encode_png(image);
  const std::string rel = "images/" + util::sha256_hex(bytes) + ".png";
  const auto path = root_ / rel;
  if (!std::filesystem::exists(path)) {
    util::write_file_atomic(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                                   bytes.size()));
  }
  return rel;
}

imgproc::Image ImageStore::get(const std::string& rel_path) const {
  return imgproc::load_image(root_ / rel_path);
}

std::filesystem::path ImageStore::resolve(const std::string& rel_path) const {
  return root_ / rel_path;
}

ImageRef downsample_to_budget(const std::filesystem::path& source_path,
                              long long budget_pixels, ImageStore& store) {
  if (budget_pixels < 1) throw std::invalid_argument("budget must be >= 1");
  imgproc::Image src = imgproc::load_image(source_path);
  const auto [out_w, out_h] = imgproc::fit_to_budget(src.width, src.height, budget_pixels);
  if (out_w == src.width && out_h == src.height) {
    const std::string rel = store.put(src);
    return ImageRef::make(rel, src.width, src.height, 1.0);
  }
  imgproc::Image scaled = imgproc::resize_bilinear(src, out_w, out_h);
  const std::string rel = store.put(scaled);
  const double scale = static_cast<double>(src.width) / out_w;
  return ImageRef::make(rel, out_w, out_h, scale);
}

std::variant<ImageRef, ToolFailure> crop_and_zoom(const std::filesystem::path& source_path,
                                                  const ImageRef& presented,
                                                  const protocol::BBox& bbox,
                                                  const ZoomConfig& config,
                                                  ImageStore& store) {
  if (bbox.x1 >= bbox.x2 || bbox.y1 >= bbox.y2) {
    return ToolFailure{"invalid bbox"};
  }
  // Clamp to the presented frame; the model addresses the image it saw.
  const int cx1 = std::clamp(bbox.x1, 0, presented.width);
  const int cy1 = std::clamp(bbox.y1, 0, presented.height);
  const int cx2 = std::clamp(bbox.x2, 0, presented.width);
  const int cy2 = std::clamp(bbox.y2, 0, presented.height);
  const long long clamped_area = static_cast<long long>(cx2 - cx1) * (cy2 - cy1);
  if (cx1 >= cx2 || cy1 >= cy2) {
    return ToolFailure{"empty after clamp"};
  }
  if (clamped_area < config.min_region_px) {
    return ToolFailure{"degenerate region"};
  }

  imgproc::Image src = imgproc::load_image(source_path);
  const double s = presented.scale_to_original;
  int sx1 = static_cast<int>(std::floor(cx1 * s));
  int sy1 = static_cast<int>(std::floor(cy1 * s));
  int sx2 = static_cast<int>(std::ceil(cx2 * s));
  int sy2 = static_cast<int>(std::ceil(cy2 * s));
  sx1 = std::clamp(sx1, 0, src.width - 1);
  sy1 = std::clamp(sy1, 0, src.height - 1);
  sx2 = std::clamp(sx2, sx1 + 1, src.width);
  sy2 = std::clamp(sy2, sy1 + 1, src.height);

  imgproc::Image region = imgproc::crop(src, sx1, sy1, sx2, sy2);

  // Longer side meets the zoom target but never exceeds the region's own
  // source resolution; magnification comes from returning source pixels
  // for a box the model saw downsampled.
  const int longer = std::max(region.width, region.height);
  int out_w = region.width;
  int out_h = region.height;
  if (longer > config.zoom_target) {
    const double k = static_cast<double>(config.zoom_target) / longer;
    out_w = std::max(1, static_cast<int>(std::lround(region.width * k)));
    out_h = std::max(1, static_cast<int>(std::lround(region.height * k)));
  }
  const auto [bw, bh] = imgproc::fit_to_budget(out_w, out_h, config.pixel_budget);
  out_w = bw;
  out_h = bh;

  imgproc::Image out =
      (out_w == region.width && out_h == region.height)
          ? std::move(region)
          : imgproc::resize_bilinear(region, out_w, out_h);
  const double scale_back = static_cast<double>(sx2 - sx1) / out.width;
  const std::string rel = store.put(out);
  return ImageRef::make(rel, out.width, out.height, std::max(1.0, scale_back));
}

std::variant<std::vector<SearchResult>, ToolFailure> search_web(SearchProvider& provider,
                                                                const std::string& query,
                                                                int limit) {
  if (util::trim(query).empty()) {
    return ToolFailure{"empty query"};
  }
  try {
    auto results = provider.search(query, limit);
    if (limit >= 0 && results.size() > static_cast<size_t>(limit)) {
      results.resize(static_cast<size_t>(limit));
    }
    return results;
  } catch (const std::exception&) {
    return ToolFailure{"search unavailable"};
  }
}

std::string render_search_observation(const std::vector<SearchResult>& results,
                                      size_t snippet_cap) {
  if (results.empty()) return "No results found.";
  std::ostringstream out;
  for (size_t i = 0; i < results.size(); ++i) {
    std::string snippet = results[i].snippet;
    if (snippet.size() > snippet_cap) {
      snippet.resize(snippet_cap);
      snippet += "...";
    }
    out << (i + 1) << ". " << results[i].title << "\n"
        << "   " << snippet << "\n"
        << "   " << results[i].url << "\n";
  }
  return out.str();
}

}  // namespace geoagent::tools
