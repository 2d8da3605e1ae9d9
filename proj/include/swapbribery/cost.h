#ifndef SWAPBRIBERY_COST_H_
#define SWAPBRIBERY_COST_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace swapbribery {

// A nonnegative integer price, or FORBIDDEN. FORBIDDEN absorbs addition and
// orders above every integer. Integer addition is overflow-checked.
class Cost {
 public:
  constexpr Cost() = default;
  explicit Cost(std::int64_t value);

  static constexpr Cost Forbidden() { return Cost(kForbidden, Tag{}); }
  static constexpr Cost Zero() { return Cost(); }

  constexpr bool forbidden() const { return value_ == kForbidden; }
  constexpr bool finite() const { return value_ != kForbidden; }

  // Throws InfeasibleError when forbidden.
  std::int64_t value() const;

  Cost& operator+=(Cost other);
  friend Cost operator+(Cost a, Cost b) { return a += b; }

  friend constexpr bool operator==(Cost a, Cost b) = default;
  friend constexpr std::strong_ordering operator<=>(Cost a, Cost b) {
    if (a.forbidden() || b.forbidden()) {
      return static_cast<int>(a.forbidden()) <=> static_cast<int>(b.forbidden());
    }
    return a.value_ <=> b.value_;
  }

  // "x" for FORBIDDEN, the decimal value otherwise.
  std::string ToString() const;

 private:
  struct Tag {};
  static constexpr std::int64_t kForbidden = -1;
  constexpr Cost(std::int64_t raw, Tag) : value_(raw) {}

  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Cost cost);

// a + b on raw integers, throwing OverflowError on wraparound.
std::int64_t CheckedAdd(std::int64_t a, std::int64_t b);
std::int64_t CheckedMul(std::int64_t a, std::int64_t b);

}  // namespace swapbribery

#endif  // SWAPBRIBERY_COST_H_
