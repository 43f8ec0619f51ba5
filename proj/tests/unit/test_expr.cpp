#include <doctest.h>

#include "oddzeta/expr.hpp"
#include "oddzeta/zeta.hpp"

using namespace oddzeta;

TEST_CASE("expressions") {
  const Bits bits{200};
  CHECK(render_decimal(evaluate_expr("pi", bits), Digits{20}) == "3.1415926535897932385");
  CHECK(render_decimal(evaluate_expr("zeta3", bits), Digits{20}) == "1.2020569031595942854");
  CHECK(render_decimal(evaluate_expr("2^10/4", bits), Digits{10}) == "256.0000000");
  CHECK(render_decimal(evaluate_expr(" ( 3 * 4 ) / -6 ", bits), Digits{10}) == "-2.000000000");
  CHECK(overlaps(evaluate_expr("pi^-2", bits), HReal::from_int(1, bits) / pow(pi(bits), 2)));
  const HReal ratio = evaluate_expr("zeta3/pi^3", bits);
  CHECK(overlaps(ratio, zeta_direct(3, Digits{40}).value / pow(pi(bits), 3)));
  for (const char* bad : {"", "pi +1", "zeta1", "zeta", "pi^x", "(pi", "sin(1)", "pi pi"}) {
    CHECK_THROWS_AS(evaluate_expr(bad, bits), std::invalid_argument);
  }
}
