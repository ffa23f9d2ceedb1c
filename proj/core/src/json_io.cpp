#include "starban/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "starban/spaces.hpp"

namespace starban::json_io {

using num::Complex;
using num::Matrix;

ordered_json complex_to_json(Complex z) {
  return ordered_json::array({z.real(), z.imag()});
}

ordered_json vector_to_json(const std::vector<Complex>& v) {
  ordered_json out = ordered_json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  ordered_json entries = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      entries.push_back(complex_to_json(m(r, c)));
  out["entries"] = std::move(entries);
  return out;
}

Matrix matrix_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols, entries");
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const ordered_json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw std::invalid_argument("matrix JSON entry count does not match shape");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c, ++k) {
      const ordered_json& e = entries.at(k);
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix JSON entries must be [re, im] pairs");
      m(r, c) = Complex{e.at(0).get<double>(), e.at(1).get<double>()};
    }
  return m;
}

ordered_json certificate_to_json(const tensornorms::NormCertificate& c) {
  ordered_json out;
  out["value"] = c.value;
  ordered_json pairs = ordered_json::array();
  for (const tensornorms::ElementaryPair& p : c.upper_witness) {
    ordered_json pair;
    pair["left"] = vector_to_json(p.left);
    pair["right"] = vector_to_json(p.right);
    pairs.push_back(std::move(pair));
  }
  out["upper_witness"] = std::move(pairs);
  out["lower_witness"] = matrix_to_json(c.lower_witness);
  out["gap"] = c.gap;
  return out;
}

ordered_json witness_to_json(const tensornorms::CorrectionWitness& w) {
  ordered_json out;
  out["element"] = matrix_to_json(w.element.coeffs);
  out["projective"] = w.projective.value;
  out["hilbert"] = w.hilbert;
  out["injective"] = w.injective;
  out["ratio"] = w.ratio;
  out["upper_witness"] = certificate_to_json(w.projective)["upper_witness"];
  out["lower_witness"] = matrix_to_json(w.projective.lower_witness);
  out["strict_contraction"] = w.strict_contraction;
  out["note"] = w.note;
  return out;
}

ordered_json suite_report_to_json(const suites::SuiteReport& report) {
  ordered_json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["max_dim"] = report.max_dim;
  out["samples"] = report.samples;
  out["passed"] = report.passed();
  out["total_checks"] = report.total_checks();
  out["total_failures"] = report.total_failures();
  ordered_json checks = ordered_json::array();
  for (const suites::CheckResult& c : report.checks) {
    ordered_json check;
    check["check"] = c.name;
    check["passed"] = c.failures == 0;
    ordered_json details;
    details["checks"] = c.checks;
    details["failures"] = c.failures;
    details["counterexamples"] = c.counterexamples;
    if (!c.note.empty()) details["note"] = c.note;
    check["details"] = std::move(details);
    checks.push_back(std::move(check));
  }
  out["checks"] = std::move(checks);
  return out;
}

ordered_json dim_functor_to_json(const convolution::DimFunctor& f) {
  ordered_json support = ordered_json::object();
  for (const auto& [degree, obj] : f.support)
    support[std::to_string(degree)] = starcomp::to_string(obj);
  ordered_json out;
  out["support"] = std::move(support);
  return out;
}

namespace {

starcomp::CompletedObj completed_obj_from_string(const std::string& s) {
  if (s == "inf") return starcomp::CompletedObj::inf();
  if (s.rfind("fin:", 0) == 0) {
    const std::string digits = s.substr(4);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad completed object: " + s);
    return starcomp::CompletedObj::fin(std::stoull(digits));
  }
  throw std::invalid_argument("bad completed object: " + s);
}

}  // namespace

convolution::DimFunctor dim_functor_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("support") || !j.at("support").is_object())
    throw std::invalid_argument("functor JSON needs a support object");
  convolution::DimFunctor f;
  for (const auto& [key, value] : j.at("support").items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("functor degree must be a nonnegative integer: " +
                                  key);
    if (!value.is_string())
      throw std::invalid_argument("functor values must be strings");
    f.set(std::stoull(key), completed_obj_from_string(value.get<std::string>()));
  }
  return f;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

// Number scanner shared by both coordinate formats.
double parse_number(const std::string& text, std::size_t& pos) {
  const std::size_t start = pos;
  std::size_t end = pos;
  if (end < text.size() && (text[end] == '+' || text[end] == '-')) ++end;
  bool any = false;
  while (end < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '.' ||
          text[end] == 'e' || text[end] == 'E' ||
          ((text[end] == '+' || text[end] == '-') && end > start &&
           (text[end - 1] == 'e' || text[end - 1] == 'E')))) {
    any = true;
    ++end;
  }
  if (!any) throw spaces::parse_error("expected a number", start);
  try {
    const double value = std::stod(text.substr(start, end - start));
    pos = end;
    return value;
  } catch (const std::exception&) {
    throw spaces::parse_error("malformed number", start);
  }
}

void skip_ws(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

}  // namespace

std::vector<Complex> complex_list_from_text(const std::string& text) {
  std::string body = text;
  std::size_t lead = 0;
  skip_ws(body, lead);
  if (lead < body.size() && body[lead] == '@')
    body = read_text_file(body.substr(lead + 1));

  std::vector<Complex> out;
  std::size_t pos = 0;
  skip_ws(body, pos);
  bool bracketed = false;
  if (pos < body.size() && body[pos] == '[') {
    bracketed = true;
    ++pos;
  }
  skip_ws(body, pos);
  bool expect_item = pos < body.size() && body[pos] != ']';
  while (expect_item) {
    skip_ws(body, pos);
    if (pos < body.size() && body[pos] == '(') {
      ++pos;
      skip_ws(body, pos);
      const double re = parse_number(body, pos);
      skip_ws(body, pos);
      if (pos >= body.size() || body[pos] != ',')
        throw spaces::parse_error("expected ',' inside a pair", pos);
      ++pos;
      skip_ws(body, pos);
      const double im = parse_number(body, pos);
      skip_ws(body, pos);
      if (pos >= body.size() || body[pos] != ')')
        throw spaces::parse_error("expected ')'", pos);
      ++pos;
      out.push_back(Complex{re, im});
    } else {
      out.push_back(Complex{parse_number(body, pos), 0.0});
    }
    skip_ws(body, pos);
    if (pos < body.size() && body[pos] == ',') {
      ++pos;
      continue;
    }
    expect_item = false;
  }
  skip_ws(body, pos);
  if (bracketed) {
    if (pos >= body.size() || body[pos] != ']')
      throw spaces::parse_error("expected ']'", pos);
    ++pos;
    skip_ws(body, pos);
  }
  if (pos != body.size())
    throw spaces::parse_error("trailing input after coordinate list", pos);
  return out;
}

}  // namespace starban::json_io
