// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_VERSION_HPP_
#define MCQ_VERSION_HPP_

namespace mcq {

inline constexpr const char* kSoftwareName = "mcqeval";
inline constexpr const char* kSoftwareVersion = "1.0.0";

}  // namespace mcq

#endif  // MCQ_VERSION_HPP_
