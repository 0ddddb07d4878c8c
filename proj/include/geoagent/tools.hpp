#pragma once

#include "geoagent/image.hpp"
#include "geoagent/protocol.hpp"
#include "geoagent/providers.hpp"

#include <filesystem>
#include <string>
#include <variant>

namespace geoagent::tools {

/// An image as presented to the model: where its bytes live, its presented
/// dimensions, and the ratio mapping presented coordinates back to source
/// pixels (always >= 1; the presented image is never larger than the
/// source).
struct ImageRef {
  std::string path;  // relative to the image store root
  int width = 0;
  int height = 0;
  double scale_to_original = 1.0;

  static ImageRef make(std::string path, int width, int height, double scale_to_original);
};

struct ToolFailure {
  std::string reason;
  bool operator==(const ToolFailure&) const = default;
};

/// Content-addressed PNG store; derived images land in <root>/images/ named
/// by the SHA-256 of their encoded bytes, so identical content writes once.
class ImageStore {
 public:
  explicit ImageStore(std::filesystem::path root);

  /// Stores the image and returns its relative path ("images/<hash>.png").
  std::string put(const imgproc::Image& image);
  imgproc::Image get(const std::string& rel_path) const;
  std::filesystem::path resolve(const std::string& rel_path) const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
};

struct ZoomConfig {
  int zoom_target = 768;           // longer side of the magnified crop
  long long pixel_budget = 2'000'000;
  int min_region_px = 16;          // clamped area below this is degenerate
};

/// Scales the source image so its area fits the budget (identity when it
/// already does), stores the result, and records scale_to_original.
ImageRef downsample_to_budget(const std::filesystem::path& source_path,
                              long long budget_pixels, ImageStore& store);

/// Crop-and-zoom over a bbox given in the presented image's frame. The crop
/// is taken from the original-resolution source (via scale_to_original) and
/// resampled so its longer side meets the zoom target without fabricating
/// detail beyond the region's source resolution; the result is re-budgeted.
std::variant<ImageRef, ToolFailure> crop_and_zoom(const std::filesystem::path& source_path,
                                                  const ImageRef& presented,
                                                  const protocol::BBox& bbox,
                                                  const ZoomConfig& config,
                                                  ImageStore& store);

/// Search executor: empty queries and provider errors come back as
/// ToolFailure values the loop can surface as observations.
std::variant<std::vector<SearchResult>, ToolFailure> search_web(SearchProvider& provider,
                                                                const std::string& query,
                                                                int limit = 10);

/// Numbered text block the model sees as the search observation; snippets
/// are truncated to snippet_cap characters.
std::string render_search_observation(const std::vector<SearchResult>& results,
                                      size_t snippet_cap = 500);

}  // namespace geoagent::tools
