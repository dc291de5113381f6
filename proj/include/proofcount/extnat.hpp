#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace pc {

// Naturals extended with omega. Arithmetic follows the counting semantics:
// 0 * omega = 0, n * omega = omega for n > 0, n + omega = omega.
// Finite arithmetic saturates at a large cap instead of overflowing; a
// saturated value stays finite and is reported as such.
class ExtNat {
public:
  static constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() - 1;

  constexpr ExtNat() : v_(0) {}
  constexpr ExtNat(std::uint64_t v) : v_(v > kCap ? kCap : v) {}
  static constexpr ExtNat omega() {
    ExtNat e;
    e.v_ = kOmega;
    return e;
  }

  constexpr bool is_omega() const { return v_ == kOmega; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr std::uint64_t value() const { return v_; }  // finite only

  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.v_ != b.v_; }
  // omega is the top element
  friend constexpr bool operator<(ExtNat a, ExtNat b) {
    if (a.is_omega()) return false;
    if (b.is_omega()) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a == b || a < b; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_omega() || b.is_omega()) return omega();
    std::uint64_t s = a.v_ + b.v_;
    if (s < a.v_ || s > kCap) s = kCap;
    ExtNat e;
    e.v_ = s;
    return e;
  }
  friend constexpr ExtNat operator*(ExtNat a, ExtNat b) {
    if (a.is_zero() || b.is_zero()) return ExtNat(0);
    if (a.is_omega() || b.is_omega()) return omega();
    if (a.v_ > kCap / b.v_) return ExtNat(kCap);
    return ExtNat(a.v_ * b.v_);
  }
  ExtNat& operator+=(ExtNat b) { return *this = *this + b; }
  ExtNat& operator*=(ExtNat b) { return *this = *this * b; }

  std::string str() const { return is_omega() ? "w" : std::to_string(v_); }

private:
  static constexpr std::uint64_t kOmega = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

}  // namespace pc
