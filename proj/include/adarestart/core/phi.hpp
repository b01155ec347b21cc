#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adarestart {

// Normalizer matching the sublinear rate of the inner algorithm: t for
// averaged saddle-point methods, (t+1)^2 for accelerated gradient.
class PhiFunction {
 public:
  enum class Kind { Linear, ShiftedSquare };

  constexpr PhiFunction() = default;
  constexpr explicit PhiFunction(Kind kind) : kind_(kind) {}

  static constexpr PhiFunction linear() { return PhiFunction(Kind::Linear); }
  static constexpr PhiFunction shifted_square() { return PhiFunction(Kind::ShiftedSquare); }

  constexpr Kind kind() const { return kind_; }

  constexpr double operator()(double t) const {
    switch (kind_) {
      case Kind::Linear:
        return t;
      case Kind::ShiftedSquare:
        return (t + 1.0) * (t + 1.0);
    }
    return t;
  }

  std::string_view name() const {
    return kind_ == Kind::Linear ? "linear" : "shifted-square";
  }

  static PhiFunction parse(std::string_view name) {
    if (name == "linear") return linear();
    if (name == "shifted-square") return shifted_square();
    throw std::invalid_argument("unknown phi function: " + std::string(name));
  }

  friend constexpr bool operator==(PhiFunction a, PhiFunction b) { return a.kind_ == b.kind_; }

 private:
  Kind kind_ = Kind::Linear;
};

}  // namespace adarestart
