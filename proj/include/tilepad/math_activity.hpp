#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tilepad::math {

enum class Op { Plus, Minus };

struct Equation {
  int a = 0;
  Op op = Op::Plus;
  int b = 0;

  friend bool operator==(const Equation&, const Equation&) = default;
};

// Throws std::invalid_argument unless operands are in 0..9 and a >= b for
// subtraction.
Equation make_equation(int a, Op op, int b);
bool valid(const Equation& eq);

std::string to_string(const Equation& eq);  // "3+4"

int eval_equation(const Equation& eq);

struct MathState {
  std::optional<Equation> equation;
  int answer_tiles = 0;
  std::optional<int> number_answer;
  bool checked = false;

  // The number tile wins over the asteroid count.
  std::optional<int> answer() const;
};

enum class Verdict { Correct, Incorrect };

class NoAnswerError : public std::runtime_error {
 public:
  NoAnswerError() : std::runtime_error("no answer placed") {}
};

// Incorrect deliberately carries no expected value. Throws NoAnswerError when
// neither asteroids nor a number tile were placed, std::logic_error when no
// equation is set.
Verdict check_answer(const MathState& state);

// Deterministic equation for (seed, difficulty). The recurrence is the 64-bit
// LCG x' = 6364136223846793005 * x + 1442695040888963407 (mod 2^64), started
// from x = seed; each draw advances once and uses the high 32 bits.
//   difficulty 1: a = draw % 6, b = draw % 6, op Plus
//   difficulty 2: a = draw % 10, b = draw % 10, op = (draw % 2 ? Minus : Plus),
//                 operands swapped if Minus and a < b
Equation generate_equation(std::uint64_t seed, int difficulty);

}  // namespace tilepad::math
