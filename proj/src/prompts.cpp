#include "geoagent/prompts.hpp"

#include "geoagent/util.hpp"

#include <stdexcept>

namespace geoagent::prompts {

std::string render_system_prompt() {
  std::string text = kSystemPrompt;
  const std::string digest = util::sha256_hex(text);
  if (digest != kSystemPromptSha256) {
    throw std::runtime_error("system prompt asset corrupt: checksum " + digest);
  }
  return text;
}

const char* const kUserQuestion =
    "Where was this image taken? Identify the location as precisely as you can "
    "(street or landmark if possible, otherwise city, province/state and country).";

const char* const kForcedAnswerRequest =
    "You have reached the interaction limit and tools are now disabled. "
    "Give your final location prediction now. Place your internal reasoning inside "
    "<think>...</think>, followed by the <answer>...</answer>.";

const char* const kVerifierPromptTemplate =
    "You are verifying a geolocalization answer.\n"
    "Ground-truth {level}: {name}\n"
    "Model answer: {answer}\n"
    "Does the model answer refer to this {level} (directly or via an unambiguous "
    "alias or containing place name)? Reply with exactly one word: yes or no.";

const char* const kExtractorPromptTemplate =
    "Extract the single most specific location mentioned as the final prediction "
    "in the answer below. Reply with only that location string, formatted as a "
    "comma-separated address (most specific part first). If the answer names no "
    "location, reply with exactly NONE.\n"
    "Answer: {answer}";

const char* const kJudgePrompt =
    "Classify this image for a geolocalization benchmark.\n"
    "Reply with exactly one word:\n"
    "NON_LOCALIZABLE - generic content with no geographic clues (close-up food, "
    "plain interiors, bare landscapes, single objects or animals).\n"
    "LANDMARK - an iconic landmark or globally recognizable site that makes the "
    "location obvious.\n"
    "LOCALIZABLE - everything else: the image has geographic or cultural clues "
    "but is not trivially recognizable.";

const char* const kProposerRegionsPrompt =
    "You are preparing a tool-use reasoning trace for geolocalizing this image. "
    "Propose regions worth magnifying (signs, vehicles, architecture, vegetation, "
    "terrain). Reply with JSON only:\n"
    "{\"regions\": [{\"bbox_2d\": [x1, y1, x2, y2], \"rationale\": \"...\"}]}\n"
    "Coordinates are pixels on the image as shown. Propose 1 to 4 regions.";

const char* const kProposerQueriesPrompt =
    "Based on the visual clues so far, propose web searches that would confirm or "
    "refine the location hypothesis. Reply with JSON only:\n"
    "{\"queries\": [{\"query\": \"...\", \"rationale\": \"...\"}]}\n"
    "Propose 1 to 3 queries.";

const char* const kProposerFinalPrompt =
    "Now give the final judgement. Reply with JSON only:\n"
    "{\"reasoning\": \"...\", \"answer\": \"<the predicted location>\"}";

std::string fill_template(std::string templ, const std::string& key,
                          const std::string& value) {
  const std::string token = "{" + key + "}";
  size_t pos = 0;
  while ((pos = templ.find(token, pos)) != std::string::npos) {
    templ.replace(pos, token.size(), value);
    pos += value.size();
  }
  return templ;
}

}  // namespace geoagent::prompts
