#include "tilepad/math_activity.hpp"

#include <utility>

namespace tilepad::math {

bool valid(const Equation& eq) {
  const bool operands = eq.a >= 0 && eq.a <= 9 && eq.b >= 0 && eq.b <= 9;
  return operands && (eq.op == Op::Plus || eq.a >= eq.b);
}

Equation make_equation(int a, Op op, int b) {
  Equation eq{a, op, b};
  if (!valid(eq)) {
    throw std::invalid_argument("invalid equation " + to_string(eq));
  }
  return eq;
}

std::string to_string(const Equation& eq) {
  return std::to_string(eq.a) + (eq.op == Op::Plus ? "+" : "-") + std::to_string(eq.b);
}

int eval_equation(const Equation& eq) {
  return eq.op == Op::Plus ? eq.a + eq.b : eq.a - eq.b;
}

std::optional<int> MathState::answer() const {
  if (number_answer) {
    return number_answer;
  }
  if (answer_tiles > 0) {
    return answer_tiles;
  }
  return std::nullopt;
}

Verdict check_answer(const MathState& state) {
  if (!state.equation) {
    throw std::logic_error("no equation set");
  }
  const auto answer = state.answer();
  if (!answer) {
    throw NoAnswerError();
  }
  return *answer == eval_equation(*state.equation) ? Verdict::Correct : Verdict::Incorrect;
}

namespace {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t draw() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

 private:
  std::uint64_t state_;
};

}  // namespace

Equation generate_equation(std::uint64_t seed, int difficulty) {
  if (difficulty != 1 && difficulty != 2) {
    throw std::invalid_argument("difficulty must be 1 or 2");
  }
  Lcg lcg(seed);
  const std::uint32_t range = difficulty == 1 ? 6 : 10;
  Equation eq;
  eq.a = static_cast<int>(lcg.draw() % range);
  eq.b = static_cast<int>(lcg.draw() % range);
  if (difficulty == 2 && lcg.draw() % 2 == 1) {
    eq.op = Op::Minus;
    if (eq.a < eq.b) {
      std::swap(eq.a, eq.b);
    }
  }
  return eq;
}

}  // namespace tilepad::math
