#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace geoagent::chat {

struct ContentPart {
  enum class Kind { text, image };
  Kind kind = Kind::text;
  std::string text;        // kind == text
  std::string image_path;  // kind == image; absolute or store-resolved path

  static ContentPart make_text(std::string text);
  static ContentPart make_image(std::string path);
};

struct ChatMessage {
  std::string role;  // system | user | assistant | tool
  std::vector<ContentPart> parts;

  static ChatMessage text(std::string role, std::string content);
  size_t text_chars() const;
  size_t image_count() const;
};

struct Sampling {
  double temperature = 0.7;
  int max_new_tokens = 2048;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  Sampling sampling;
  std::string sample_id;       // harness routing metadata; not sent on the wire
  bool tools_enabled = true;
};

struct ChatResponse {
  bool ok = false;
  std::string text;
  std::optional<long long> total_tokens;  // provider-reported usage, if any
  std::string error;
};

class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

/// Deterministic client replaying canned turn outputs per sample id (key
/// "*" is the fallback script). When a script runs out, the last output
/// repeats, which makes never-answering policies one-liners in fixtures.
class ScriptedChatClient : public ChatClient {
 public:
  explicit ScriptedChatClient(std::map<std::string, std::vector<std::string>> scripts);
  static ScriptedChatClient from_file(const std::filesystem::path& script_file);

  ChatResponse complete(const ChatRequest& request) override;

 private:
  std::map<std::string, std::vector<std::string>> scripts_;
  std::map<std::string, size_t> cursors_;
  std::mutex mutex_;
};

/// OpenAI-style chat completions client. Messages carry text parts and
/// base64 PNG data URLs for image parts; usage.total_tokens is surfaced
/// when the provider reports it.
class HttpChatClient : public ChatClient {
 public:
  HttpChatClient(std::string base_url, std::string model, std::string api_key,
                 std::string path = "/v1/chat/completions");

  ChatResponse complete(const ChatRequest& request) override;

 private:
  std::string base_url_;
  std::string model_;
  std::string api_key_;
  std::string path_;
};

}  // namespace geoagent::chat
