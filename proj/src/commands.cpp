#include "norlund/commands.hpp"

#include <stdexcept>

#include "json.hpp"
#include "norlund/closed_forms.hpp"
#include "norlund/determinant.hpp"
#include "norlund/polynomial.hpp"
#include "norlund/series.hpp"

namespace norlund {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

Family parse_family(const std::string& token) {
  if (token == "bernoulli") return Family::kBernoulli;
  if (token == "euler") return Family::kEuler;
  throw std::invalid_argument("unknown family '" + token + "'");
}

Method parse_method(const std::string& token) {
  if (token == "closed") return Method::kClosed;
  if (token == "det") return Method::kDet;
  if (token == "series") return Method::kSeries;
  if (token == "all") return Method::kAll;
  throw std::invalid_argument("unknown method '" + token + "'");
}

Format parse_format(const std::string& token) {
  if (token == "json") return Format::kJson;
  if (token == "csv") return Format::kCsv;
  if (token == "latex") return Format::kLatex;
  if (token == "plain") return Format::kPlain;
  throw std::invalid_argument("unknown format '" + token + "'");
}

const char* to_token(Family family) {
  return family == Family::kBernoulli ? "bernoulli" : "euler";
}

const char* to_token(Method method) {
  switch (method) {
    case Method::kClosed:
      return "closed";
    case Method::kDet:
      return "det";
    case Method::kSeries:
      return "series";
    case Method::kAll:
      return "all";
  }
  return "all";
}

namespace {

EvalValue scalar(Rational v) {
  EvalValue out;
  out.items.push_back(std::move(v));
  return out;
}

EvalValue closed_value(const EvalRequest& req) {
  Polynomial p = req.family == Family::kBernoulli
                     ? bernoulli_polynomial(req.n, req.alpha)
                     : euler_polynomial(req.n, req.alpha);
  if (req.x) return scalar(p(*req.x));
  EvalValue out;
  out.items = p.coefficients();
  out.is_list = true;
  return out;
}

Rational det_value(const EvalRequest& req, const Rational& x) {
  return req.family == Family::kBernoulli
             ? bernoulli_from_determinant(req.n, req.alpha, x)
             : euler_from_determinant(req.n, req.alpha, x);
}

Rational series_value(const EvalRequest& req, const Rational& x) {
  return req.family == Family::kBernoulli
             ? bernoulli_from_series(req.n, req.alpha, x)
             : euler_from_series(req.n, req.alpha, x);
}

}  // namespace

EvalResult cmd_eval(const EvalRequest& req) {
  EvalResult result;
  result.request = req;
  const Rational x0 = req.x.value_or(Rational(0));

  switch (req.method) {
    case Method::kClosed:
      result.value = closed_value(req);
      break;
    case Method::kDet:
      result.value = scalar(det_value(req, x0));
      break;
    case Method::kSeries:
      result.value = scalar(series_value(req, x0));
      break;
    case Method::kAll: {
      EvalValue closed = closed_value(req);
      // With x absent the closed route reports coefficients; its point
      // value at 0 is the constant coefficient, which sits at index 0
      // either way.
      Rational closed_at_point = closed.items[0];
      Rational det = det_value(req, x0);
      Rational series = series_value(req, x0);
      result.agreement = (closed_at_point == det && closed_at_point == series);
      result.value = scalar(closed_at_point);
      result.closed = std::move(closed);
      result.det = scalar(std::move(det));
      result.series = scalar(std::move(series));
      break;
    }
  }
  return result;
}

namespace {

std::string joined(const EvalValue& v) {
  std::string out;
  for (std::size_t i = 0; i < v.items.size(); ++i) {
    if (i > 0) out += ' ';
    out += v.items[i].str();
  }
  return out;
}

ordered_json value_json(const EvalValue& v) {
  if (!v.is_list) return v.items[0].str();
  ordered_json arr = ordered_json::array();
  for (const Rational& r : v.items) arr.push_back(r.str());
  return arr;
}

void render_eval_json(const EvalResult& result, std::ostream& os) {
  const EvalRequest& req = result.request;
  ordered_json j;
  j["family"] = to_token(req.family);
  j["n"] = req.n;
  j["alpha"] = req.alpha.str();
  j["x"] = req.x ? ordered_json(req.x->str()) : ordered_json(nullptr);
  j["method"] = to_token(req.method);
  j["value"] = value_json(result.value);
  if (result.closed) {
    ordered_json per;
    per["closed"] = value_json(*result.closed);
    per["det"] = value_json(*result.det);
    per["series"] = value_json(*result.series);
    j["per_method"] = per;
  } else {
    j["per_method"] = nullptr;
  }
  j["agreement"] =
      result.agreement ? ordered_json(*result.agreement) : ordered_json(nullptr);
  os << j.dump() << "\n";
}

void render_eval_plain(const EvalResult& result, std::ostream& os) {
  os << joined(result.value) << "\n";
  if (result.closed) {
    os << "closed: " << joined(*result.closed) << "\n";
    os << "det: " << joined(*result.det) << "\n";
    os << "series: " << joined(*result.series) << "\n";
    os << "agreement: " << (*result.agreement ? "true" : "false") << "\n";
  }
}

void render_eval_csv(const EvalResult& result, std::ostream& os) {
  os << "method,value\n";
  if (result.closed) {
    os << "closed," << joined(*result.closed) << "\n";
    os << "det," << joined(*result.det) << "\n";
    os << "series," << joined(*result.series) << "\n";
    os << "agreement," << (*result.agreement ? "true" : "false") << "\n";
  } else {
    os << to_token(result.request.method) << "," << joined(result.value)
       << "\n";
  }
}

void render_eval_latex(const EvalResult& result, std::ostream& os) {
  if (result.closed) {
    os << "value & " << joined(result.value) << " \\\\\n";
    os << "closed & " << joined(*result.closed) << " \\\\\n";
    os << "det & " << joined(*result.det) << " \\\\\n";
    os << "series & " << joined(*result.series) << " \\\\\n";
    os << "agreement & " << (*result.agreement ? "true" : "false") << " \\\\\n";
    return;
  }
  if (result.value.is_list) {
    for (std::size_t k = 0; k < result.value.items.size(); ++k) {
      os << "x^{" << k << "} & " << result.value.items[k] << " \\\\\n";
    }
    return;
  }
  os << "value & " << joined(result.value) << " \\\\\n";
}

}  // namespace

void render_eval(const EvalResult& result, std::ostream& os) {
  switch (result.request.format) {
    case Format::kJson:
      render_eval_json(result, os);
      break;
    case Format::kCsv:
      render_eval_csv(result, os);
      break;
    case Format::kLatex:
      render_eval_latex(result, os);
      break;
    case Format::kPlain:
      render_eval_plain(result, os);
      break;
  }
}

void cmd_table(Family family, Natural n_max, const Rational& alpha,
               Format format, std::ostream& os) {
  if (n_max > kTableRowCap) {
    throw std::invalid_argument("table: n_max " + std::to_string(n_max) +
                                " exceeds cap " + std::to_string(kTableRowCap));
  }
  std::vector<Rational> values(n_max + 1);
  for (Natural n = 0; n <= n_max; ++n) {
    values[n] = family == Family::kBernoulli ? bernoulli_number(n, alpha)
                                             : euler_number(n, alpha);
  }

  switch (format) {
    case Format::kJson: {
      ordered_json j;
      j["family"] = to_token(family);
      j["alpha"] = alpha.str();
      ordered_json rows = ordered_json::array();
      for (Natural n = 0; n <= n_max; ++n) {
        ordered_json row;
        row["n"] = n;
        row["value"] = values[n].str();
        rows.push_back(row);
      }
      j["rows"] = rows;
      os << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      os << "n,value\n";
      for (Natural n = 0; n <= n_max; ++n) {
        os << n << "," << values[n] << "\n";
      }
      break;
    case Format::kLatex:
      for (Natural n = 0; n <= n_max; ++n) {
        os << n << " & " << values[n] << " \\\\\n";
      }
      break;
    case Format::kPlain:
      for (Natural n = 0; n <= n_max; ++n) {
        os << n << " " << values[n] << "\n";
      }
      break;
  }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& os) {
  VerifyReport report = run_verification(opts);
  std::size_t failed = 0;
  for (const PropertyResult& p : report.properties) {
    if (p.passed) {
      os << "PASS " << p.name << "\n";
    } else {
      ++failed;
      os << "FAIL " << p.name << ": " << p.detail << "\n";
    }
  }
  os << report.properties.size() << " properties, "
     << (report.properties.size() - failed) << " passed, " << failed
     << " failed\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace norlund
