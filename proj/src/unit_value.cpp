#include "wls/unit_value.hpp"

#include <cctype>

#include "wls/error.hpp"

namespace wls {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void check_range(const mpq_class& q) {
  if (q < 0 || q > 1) throw InvalidArgument("value " + q.get_str() + " is outside [0,1]");
}

}  // namespace

UnitValue::UnitValue(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
  check_range(q_);
}

UnitValue::UnitValue(mpq_class q) : q_(std::move(q)) {
  q_.canonicalize();
  check_range(q_);
}

UnitValue UnitValue::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    q = mpq_class(w * scale + mpz_class(std::string(frac), 10), scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed value '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(s), 10));
  }
  q.canonicalize();
  if (q > 1) throw ParseError("value '" + std::string(text) + "' exceeds 1");
  return UnitValue(std::move(q), Unchecked{});
}

}  // namespace wls
