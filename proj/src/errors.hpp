#pragma once

#include <stdexcept>

namespace symspan {

// An operation refused to start because it would exceed the configured
// memory budget. Surfaced to callers instead of attempting the allocation.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Signals a bug in this library,
// not a usage mistake.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace symspan
