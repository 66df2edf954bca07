#include "finestyle/error.hpp"

namespace finestyle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnbalancedBrackets: return "UnbalancedBrackets";
    case ErrorCode::EmptyNode: return "EmptyNode";
    case ErrorCode::EmptySentence: return "EmptySentence";
    case ErrorCode::UnknownPOS: return "UnknownPOS";
    case ErrorCode::NoHeadNoun: return "NoHeadNoun";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateKey: return "DuplicateKey";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSynonyms: return "NoSynonyms";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::MissingAgent: return "MissingAgent";
    case ErrorCode::NoApplicableTransfer: return "NoApplicableTransfer";
    case ErrorCode::UnknownTransfer: return "UnknownTransfer";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& detail) {
  std::string what(to_string(code));
  if (!detail.empty()) {
    what += ": ";
    what += detail;
  }
  throw Error(code, what);
}

}  // namespace finestyle
