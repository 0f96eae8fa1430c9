#include "superweyl/json_io.hpp"

namespace superweyl {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer in rational encoding");
}

Json rational_json(const mpq_class& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

mpq_class rational_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num,den]");
  mpz_class den = integer_from(j[1]);
  if (sgn(den) <= 0) throw std::invalid_argument("denominator must be positive");
  mpq_class q(integer_from(j[0]), den);
  q.canonicalize();
  return q;
}

}  // namespace

void to_json(Json& j, const GaussianRational& x) {
  j = Json::object();
  j["re"] = rational_json(x.re());
  j["im"] = rational_json(x.im());
}

void from_json(const Json& j, GaussianRational& x) {
  x = GaussianRational(rational_from(j.at("re")), rational_from(j.at("im")));
}

}  // namespace superweyl
