// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace plc {

enum class Errc {
  kDivisorContainsZero,
  kDomainViolation,
  kBranchCutViolation,
  kPoleProximity,
  kBadBuilderParams,
  kParseError,
  kSchemaError,
  kNoTailLemma,
  kMissingGrowthAttestation,
  kStatusNotCertified,
  kUnreachable,
  kIo,
  kUsage,
  kInternal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, std::string path = {})
      : std::runtime_error(msg), code_(code), path_(std::move(path)) {}

  Errc code() const { return code_; }
  // JSON pointer for schema errors, subtree path for expression errors.
  const std::string& path() const { return path_; }

 private:
  Errc code_;
  std::string path_;
};

}  // namespace plc
