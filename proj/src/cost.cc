#include "swapbribery/cost.h"

#include "swapbribery/errors.h"

namespace swapbribery {

Cost::Cost(std::int64_t value) : value_(value) {
  if (value < 0) {
    throw ParameterError("negative cost " + std::to_string(value));
  }
}

std::int64_t Cost::value() const {
  if (forbidden()) throw InfeasibleError("cost is FORBIDDEN");
  return value_;
}

Cost& Cost::operator+=(Cost other) {
  if (forbidden() || other.forbidden()) {
    value_ = kForbidden;
  } else {
    value_ = CheckedAdd(value_, other.value_);
  }
  return *this;
}

std::string Cost::ToString() const {
  return forbidden() ? std::string("x") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, Cost cost) {
  return os << cost.ToString();
}

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in cost addition");
  }
  return out;
}

std::int64_t CheckedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

}  // namespace swapbribery
