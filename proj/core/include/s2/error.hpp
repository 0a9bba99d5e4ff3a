// Copyright 2026 The s2oiqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef S2_ERROR_HPP_
#define S2_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace s2 {

enum class ErrorKind {
  kInvalidArgument,
  kDecode,
  kUnsupportedFormat,
  kShape,
  kAspect,
  kDepth,
  kSchema,
  kCorruptFile,
  kMissingFeature,
  kIo,
  kConvergence,
  kDegenerateInput,
};

const char* error_kind_name(ErrorKind kind);

// Base of every error thrown by the library. The CLI maps kind() onto its
// exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define S2_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(Kind, what) {}    \
  };

S2_DEFINE_ERROR(InvalidArgument, ErrorKind::kInvalidArgument)
S2_DEFINE_ERROR(DecodeError, ErrorKind::kDecode)
S2_DEFINE_ERROR(UnsupportedFormat, ErrorKind::kUnsupportedFormat)
S2_DEFINE_ERROR(ShapeError, ErrorKind::kShape)
S2_DEFINE_ERROR(AspectError, ErrorKind::kAspect)
S2_DEFINE_ERROR(DepthError, ErrorKind::kDepth)
S2_DEFINE_ERROR(SchemaError, ErrorKind::kSchema)
S2_DEFINE_ERROR(CorruptFile, ErrorKind::kCorruptFile)
S2_DEFINE_ERROR(MissingFeature, ErrorKind::kMissingFeature)
S2_DEFINE_ERROR(IoError, ErrorKind::kIo)
S2_DEFINE_ERROR(ConvergenceError, ErrorKind::kConvergence)
S2_DEFINE_ERROR(DegenerateInput, ErrorKind::kDegenerateInput)

#undef S2_DEFINE_ERROR

}  // namespace s2

#endif  // S2_ERROR_HPP_
