#pragma once

#include <string>

namespace geoagent::prompts {

/// The model-facing system prompt defining the tool protocol. Whitespace is
/// significant; the rendered text is verified against kSystemPromptSha256.
extern const char* const kSystemPrompt;
inline constexpr const char* kSystemPromptSha256 =
    "13ff62ee04372ffbc4bddc6b3030c1863ef01f1323ca2ec224d00e1036e40123";

/// Returns the system prompt after checking the pinned checksum. Throws
/// std::runtime_error when the embedded asset does not match.
std::string render_system_prompt();

/// Default user question attached to each sample image.
extern const char* const kUserQuestion;

/// Extra user turn issued when a cap is hit and a final answer is forced.
extern const char* const kForcedAnswerRequest;

/// Yes/no adjudication prompt for level verification. Placeholders:
/// {level}, {name}, {answer}.
extern const char* const kVerifierPromptTemplate;

/// Address extraction prompt. Placeholder: {answer}.
extern const char* const kExtractorPromptTemplate;

/// Localizability judge prompt; answer constrained to one of
/// LOCALIZABLE / NON_LOCALIZABLE / LANDMARK.
extern const char* const kJudgePrompt;

/// Curation proposer prompts, issued in order: regions, queries, final.
extern const char* const kProposerRegionsPrompt;
extern const char* const kProposerQueriesPrompt;
extern const char* const kProposerFinalPrompt;

std::string fill_template(std::string templ, const std::string& key,
                          const std::string& value);

}  // namespace geoagent::prompts
