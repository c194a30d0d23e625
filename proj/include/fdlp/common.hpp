// fdlp/common.hpp
//
// Copyright 2026  FDLP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FDLP_COMMON_HPP
#define FDLP_COMMON_HPP

#include <stdexcept>
#include <string>

namespace fdlp {

// Error categories map 1:1 onto the CLI exit codes.
enum class ErrorCode { validation = 1, io = 2, numerical = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg)
      : Error(ErrorCode::validation, msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(ErrorCode::io, msg) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg)
      : Error(ErrorCode::numerical, msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

}  // namespace fdlp

#endif  // FDLP_COMMON_HPP
