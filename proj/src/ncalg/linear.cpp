#include "homcheck/ncalg/linear.hpp"

namespace homcheck {

NcPoly concat(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, va] : a)
    for (const auto& [wb, vb] : b) out.add(wa + wb, va * vb);
  return out;
}

std::string coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  std::string s = c.to_string();
  bool atomic = s.find_first_of("+-/", 1) == std::string::npos;
  return atomic ? s + " * " : "(" + s + ") * ";
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (out.empty()) {
      out = t;
    } else if (!t.empty() && t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

namespace {

std::string render(const Scalar& c, const std::string& body, bool body_is_unit) {
  if (body_is_unit) {
    std::string s = c.to_string();
    bool atomic = s.find_first_of("+-/", 1) == std::string::npos;
    return atomic ? s : "(" + s + ")";
  }
  return coefficient_prefix(c) + body;
}

}  // namespace

std::string format(const NcPoly& p, const Alphabet& a) {
  std::vector<std::string> terms;
  for (const auto& [w, c] : p) terms.push_back(render(c, a.format(w), w.empty()));
  return join_terms(terms);
}

template <std::size_t K>
std::string format(const TensorPoly<K>& t, const std::array<const Alphabet*, K>& alphabets) {
  std::vector<std::string> terms;
  for (const auto& [k, c] : t) {
    std::string body;
    for (std::size_t i = 0; i < K; ++i) {
      if (i) body += " @ ";
      body += alphabets[i]->format(k[i]);
    }
    terms.push_back(render(c, body, false));
  }
  return join_terms(terms);
}

template std::string format<2>(const TensorPoly<2>&, const std::array<const Alphabet*, 2>&);
template std::string format<3>(const TensorPoly<3>&, const std::array<const Alphabet*, 3>&);
template std::string format<4>(const TensorPoly<4>&, const std::array<const Alphabet*, 4>&);

}  // namespace homcheck
