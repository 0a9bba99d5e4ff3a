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

#include "s2/error.hpp"

namespace s2 {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDecode: return "DecodeError";
    case ErrorKind::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::kShape: return "ShapeError";
    case ErrorKind::kAspect: return "AspectError";
    case ErrorKind::kDepth: return "DepthError";
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kCorruptFile: return "CorruptFile";
    case ErrorKind::kMissingFeature: return "MissingFeature";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kConvergence: return "ConvergenceError";
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
  }
  return "Error";
}

}  // namespace s2
