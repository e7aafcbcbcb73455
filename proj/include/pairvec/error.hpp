#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pairvec {

// All library failures carry a stable machine-readable code alongside the
// human message; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

enum class CheckpointErrorCode {
  bad_magic = 10,
  bad_version = 11,
  bad_shape = 12,
  bad_checksum = 13,
  truncated = 14,
};

class CheckpointError : public Error {
 public:
  CheckpointError(CheckpointErrorCode code, const std::string& msg)
      : Error(code_name(code), msg), code_(code) {}

  CheckpointErrorCode checkpoint_code() const { return code_; }

  static const char* code_name(CheckpointErrorCode code) {
    switch (code) {
      case CheckpointErrorCode::bad_magic: return "bad_magic";
      case CheckpointErrorCode::bad_version: return "bad_version";
      case CheckpointErrorCode::bad_shape: return "bad_shape";
      case CheckpointErrorCode::bad_checksum: return "bad_checksum";
      case CheckpointErrorCode::truncated: return "truncated";
    }
    return "checkpoint";
  }

 private:
  CheckpointErrorCode code_;
};

}  // namespace pairvec
