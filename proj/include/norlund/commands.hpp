#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "norlund/rational.hpp"
#include "norlund/verify.hpp"

namespace norlund {

enum class Family { kBernoulli, kEuler };
enum class Method { kClosed, kDet, kSeries, kAll };
enum class Format { kJson, kCsv, kLatex, kPlain };

/// Each parser throws std::invalid_argument on an unknown token.
Family parse_family(const std::string& token);
Method parse_method(const std::string& token);
Format parse_format(const std::string& token);

const char* to_token(Family family);
const char* to_token(Method method);

struct EvalRequest {
  Family family = Family::kBernoulli;
  Natural n = 0;
  Rational alpha = Rational(1);
  /// Absent x: the closed route reports the coefficient list, the
  /// determinant and series routes evaluate at x = 0.
  std::optional<Rational> x;
  Method method = Method::kAll;
  Format format = Format::kPlain;
};

/// A scalar (single item) or an ascending coefficient list.
struct EvalValue {
  std::vector<Rational> items;
  bool is_list = false;
};

struct EvalResult {
  EvalRequest request;
  EvalValue value;
  /// Populated only when method = all.
  std::optional<EvalValue> closed;
  std::optional<EvalValue> det;
  std::optional<EvalValue> series;
  std::optional<bool> agreement;
};

/// Computes the requested value(s); pure, no output.
EvalResult cmd_eval(const EvalRequest& req);

/// Renders an eval result in the request's format.
void render_eval(const EvalResult& result, std::ostream& os);

/// Largest n_max accepted by cmd_table.
inline constexpr Natural kTableRowCap = 64;

/// Emits rows n = 0..n_max of Bernoulli numbers (x = 0) or
/// integer-normalized Euler numbers. Throws std::invalid_argument past the
/// row cap.
void cmd_table(Family family, Natural n_max, const Rational& alpha,
               Format format, std::ostream& os);

/// Runs the verification harness, printing one line per property and a
/// summary. Returns 0 when every property passed, 2 otherwise.
int cmd_verify(const VerifyOptions& opts, std::ostream& os);

}  // namespace norlund
