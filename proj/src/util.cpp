#include "geoagent/util.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace geoagent::util {

namespace {

// Latin-1 supplement and Latin Extended-A letters folded to ASCII.
// Keyed by the Unicode code point; covers the place-name alphabets the
// manifests actually contain (ö, ß, é, ñ, ã, ř, ...).
const std::unordered_map<char32_t, std::string_view>& diacritic_table() {
  static const std::unordered_map<char32_t, std::string_view> table = {
      {0xC0, "a"}, {0xC1, "a"}, {0xC2, "a"}, {0xC3, "a"}, {0xC4, "a"}, {0xC5, "a"},
      {0xC6, "ae"}, {0xC7, "c"}, {0xC8, "e"}, {0xC9, "e"}, {0xCA, "e"}, {0xCB, "e"},
      {0xCC, "i"}, {0xCD, "i"}, {0xCE, "i"}, {0xCF, "i"}, {0xD0, "d"}, {0xD1, "n"},
      {0xD2, "o"}, {0xD3, "o"}, {0xD4, "o"}, {0xD5, "o"}, {0xD6, "o"}, {0xD8, "o"},
      {0xD9, "u"}, {0xDA, "u"}, {0xDB, "u"}, {0xDC, "u"}, {0xDD, "y"}, {0xDE, "th"},
      {0xDF, "ss"},
      {0xE0, "a"}, {0xE1, "a"}, {0xE2, "a"}, {0xE3, "a"}, {0xE4, "a"}, {0xE5, "a"},
      {0xE6, "ae"}, {0xE7, "c"}, {0xE8, "e"}, {0xE9, "e"}, {0xEA, "e"}, {0xEB, "e"},
      {0xEC, "i"}, {0xED, "i"}, {0xEE, "i"}, {0xEF, "i"}, {0xF0, "d"}, {0xF1, "n"},
      {0xF2, "o"}, {0xF3, "o"}, {0xF4, "o"}, {0xF5, "o"}, {0xF6, "o"}, {0xF8, "o"},
      {0xF9, "u"}, {0xFA, "u"}, {0xFB, "u"}, {0xFC, "u"}, {0xFD, "y"}, {0xFE, "th"},
      {0xFF, "y"},
      {0x100, "a"}, {0x101, "a"}, {0x102, "a"}, {0x103, "a"}, {0x104, "a"}, {0x105, "a"},
      {0x106, "c"}, {0x107, "c"}, {0x108, "c"}, {0x109, "c"}, {0x10C, "c"}, {0x10D, "c"},
      {0x10E, "d"}, {0x10F, "d"}, {0x110, "d"}, {0x111, "d"},
      {0x112, "e"}, {0x113, "e"}, {0x116, "e"}, {0x117, "e"}, {0x118, "e"}, {0x119, "e"},
      {0x11A, "e"}, {0x11B, "e"}, {0x11E, "g"}, {0x11F, "g"}, {0x122, "g"}, {0x123, "g"},
      {0x12A, "i"}, {0x12B, "i"}, {0x130, "i"}, {0x131, "i"},
      {0x136, "k"}, {0x137, "k"}, {0x139, "l"}, {0x13A, "l"}, {0x141, "l"}, {0x142, "l"},
      {0x143, "n"}, {0x144, "n"}, {0x147, "n"}, {0x148, "n"},
      {0x14C, "o"}, {0x14D, "o"}, {0x150, "o"}, {0x151, "o"}, {0x152, "oe"}, {0x153, "oe"},
      {0x154, "r"}, {0x155, "r"}, {0x158, "r"}, {0x159, "r"},
      {0x15A, "s"}, {0x15B, "s"}, {0x15E, "s"}, {0x15F, "s"}, {0x160, "s"}, {0x161, "s"},
      {0x162, "t"}, {0x163, "t"}, {0x164, "t"}, {0x165, "t"},
      {0x16A, "u"}, {0x16B, "u"}, {0x16E, "u"}, {0x16F, "u"}, {0x170, "u"}, {0x171, "u"},
      {0x172, "u"}, {0x173, "u"},
      {0x179, "z"}, {0x17A, "z"}, {0x17B, "z"}, {0x17C, "z"}, {0x17D, "z"}, {0x17E, "z"},
  };
  return table;
}

// Decodes one UTF-8 code point starting at `i`; falls back to the raw byte
// on malformed input so normalization stays total.
char32_t decode_utf8(std::string_view s, size_t& i) {
  const auto byte = [&](size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && i + 1 < s.size()) {
    char32_t cp = (b0 & 0x1F) << 6 | (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && i + 2 < s.size()) {
    char32_t cp = (b0 & 0x0F) << 12 | (byte(i + 1) & 0x3F) << 6 | (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && i + 3 < s.size()) {
    char32_t cp = (b0 & 0x07) << 18 | (byte(i + 1) & 0x3F) << 12 |
                  (byte(i + 2) & 0x3F) << 6 | (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  i += 1;
  return b0;
}

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

std::string sha256_hex(std::string_view text) {
  return sha256_hex(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  static const char* alphabet =
      "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  size_t i = 0;
  for (; i + 3 <= bytes.size(); i += 3) {
    std::uint32_t n = bytes[i] << 16 | bytes[i + 1] << 8 | bytes[i + 2];
    out.push_back(alphabet[n >> 18]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back(alphabet[n & 63]);
  }
  if (i + 1 == bytes.size()) {
    std::uint32_t n = bytes[i] << 16;
    out.push_back(alphabet[n >> 18]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.append("==");
  } else if (i + 2 == bytes.size()) {
    std::uint32_t n = bytes[i] << 16 | bytes[i + 1] << 8;
    out.push_back(alphabet[n >> 18]);
    out.push_back(alphabet[(n >> 12) & 63]);
    out.push_back(alphabet[(n >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  bool pending_space = false;
  while (i < text.size()) {
    const size_t start = i;
    char32_t cp = decode_utf8(text, i);
    std::string piece;
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (std::isspace(static_cast<unsigned char>(c))) {
        pending_space = true;
        continue;
      }
      piece.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (auto it = diacritic_table().find(cp); it != diacritic_table().end()) {
      piece = it->second;
    } else {
      // Code points outside the folded range pass through unchanged.
      piece = std::string(text.substr(start, i - start));
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out += piece;
  }
  return out;
}

bool contains_normalized(std::string_view haystack, std::string_view needle) {
  const std::string h = normalize_text(haystack);
  const std::string n = normalize_text(needle);
  if (n.empty()) return false;
  size_t pos = 0;
  while ((pos = h.find(n, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !is_token_char(h[pos - 1]);
    const size_t end = pos + n.size();
    const bool right_ok = end == h.size() || !is_token_char(h[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string trim(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

}  // namespace geoagent::util
