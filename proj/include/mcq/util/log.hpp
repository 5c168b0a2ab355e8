// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_UTIL_LOG_HPP_
#define MCQ_UTIL_LOG_HPP_

#include <cstdio>

namespace mcq {

#define MCQ_WARN(...)                    \
  do {                                   \
    std::fprintf(stderr, "[warn] ");     \
    std::fprintf(stderr, __VA_ARGS__);   \
    std::fprintf(stderr, "\n");          \
  } while (0)

#define MCQ_INFO(...)                    \
  do {                                   \
    std::fprintf(stderr, "[info] ");     \
    std::fprintf(stderr, __VA_ARGS__);   \
    std::fprintf(stderr, "\n");          \
  } while (0)

}  // namespace mcq

#endif  // MCQ_UTIL_LOG_HPP_
