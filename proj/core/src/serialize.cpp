#include "symfn/serialize.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace symfn {

namespace {

using ordered_json = nlohmann::ordered_json;

long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw std::invalid_argument("value component does not fit a 64-bit integer");
  }
  return z.get_si();
}

ordered_json value_row(const QComplex& v) {
  return ordered_json::array({to_long_checked(v.re.get_num()), to_long_checked(v.re.get_den()),
                              to_long_checked(v.im.get_num()), to_long_checked(v.im.get_den())});
}

}  // namespace

int decimal_digits_for(mpfr_prec_t precision_bits) {
  return static_cast<int>(std::ceil(static_cast<double>(precision_bits) * 0.301));
}

std::string to_json(const SymmetricFunction& f) {
  ordered_json j;
  j["modulus"] = f.modulus();
  j["parity"] = f.parity() == Parity::odd ? "odd" : "even";
  ordered_json values = ordered_json::array();
  for (const QComplex& v : f.values()) values.push_back(value_row(v));
  j["values"] = std::move(values);
  return j.dump();
}

SymmetricFunction symmetric_function_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  const int modulus = j.at("modulus").get<int>();
  const std::string parity_name = j.at("parity").get<std::string>();
  if (parity_name != "odd" && parity_name != "even") {
    throw std::invalid_argument("parity must be 'odd' or 'even'");
  }
  const Parity parity = parity_name == "odd" ? Parity::odd : Parity::even;
  std::vector<QComplex> values;
  for (const auto& row : j.at("values")) {
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument("each value row must be [re_num, re_den, im_num, im_den]");
    }
    if (row[1].get<long>() == 0 || row[3].get<long>() == 0) {
      throw std::invalid_argument("value denominators must be nonzero");
    }
    mpq_class re(mpz_class(row[0].get<long>()), mpz_class(row[1].get<long>()));
    mpq_class im(mpz_class(row[2].get<long>()), mpz_class(row[3].get<long>()));
    values.emplace_back(std::move(re), std::move(im));
  }
  return SymmetricFunction(modulus, parity, std::move(values));
}

std::string to_json(const LValue& v, int significant_digits) {
  ordered_json j;
  j["value_re"] = v.value.re.decimal(significant_digits);
  j["value_im"] = v.value.im.decimal(significant_digits);
  j["error_bound"] = v.error_bound.decimal(3);
  j["method"] = std::string(method_name(v.method));
  j["terms_used"] = v.terms_used;
  return j.dump();
}

std::string to_json(const HRational& h) {
  ordered_json j;
  j["order"] = h.order();
  ordered_json coeffs = ordered_json::array();
  for (const mpq_class& c : h.numerator()) {
    coeffs.push_back(ordered_json::array(
        {to_long_checked(c.get_num()), to_long_checked(c.get_den())}));
  }
  j["numerator"] = std::move(coeffs);
  return j.dump();
}

}  // namespace symfn
