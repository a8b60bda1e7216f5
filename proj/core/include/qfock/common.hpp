#pragma once

#include <stdexcept>
#include <string>

namespace qfock {

// Precondition violations on user-facing input. The CLI maps these to exit 2.
#define QFOCK_REQUIRE(cond, msg)                     \
  do {                                               \
    if (!(cond)) throw std::invalid_argument(msg);   \
  } while (0)

// Internal invariants. These stay on in release builds: a failure here means
// a bug, and silently wrong polynomials are worse than an abort.
#define QFOCK_CHECK(cond, msg)                       \
  do {                                               \
    if (!(cond)) throw std::logic_error(msg);        \
  } while (0)

}  // namespace qfock
