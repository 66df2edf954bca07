#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finestyle {

enum class ErrorCode {
  // treebank
  UnbalancedBrackets,
  EmptyNode,
  EmptySentence,
  // morphology
  UnknownPOS,
  NoHeadNoun,
  // lexicon
  MalformedLine,
  DuplicateKey,
  MissingFile,
  ParseError,
  NoSynonyms,
  // transfers
  Inapplicable,
  MissingAgent,
  NoApplicableTransfer,
  UnknownTransfer,
  // analysis / metrics
  EmptyGroup,
  EmptyInput,
  EmptyCorpus,
  LengthMismatch,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this type; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

// A transfer whose structural precondition is absent. Not a failure of the
// pipeline; batch drivers count these as skips.
[[noreturn]] inline void inapplicable(const std::string& why) {
  fail(ErrorCode::Inapplicable, why);
}

}  // namespace finestyle
