#include "limcyc/appendix.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "appendix_data.hpp"

namespace limcyc {

namespace {

// Corrected bracket on u^5: -((g+15)(g+1)v^6 + (g-1)(g-15)v^4 - (g^2-1)v^2).
constexpr const char* kH11 = R"(
8*u^6*v^5 + (g^2-1)*u^5*v^8 - ((g+15)*(g+1)*v^6 + (g-1)*(g-15)*v^4 - (g^2-1)*v^2)*u^5
+ (-4*g*(g-1)*v^9 + 12*(g+1)^2*v^7 - 16*(g^2-1)*v^5 + 12*(g-1)^2*v^3 - 4*g*(g+1)*v)*u^4
+ (g*(g^2-1)*v^10 - g*(5*g^2+27)*v^8 + 10*g*(g^2-1)*v^6 - 10*g*(g^2-1)*v^4 + g*(5*g^2+27)*v^2
   - g*(g^2-1))*u^3
+ (4*g*(g+1)*v^9 - 12*(g-1)^2*v^7 + 16*(g^2-1)*v^5 - 12*(g+1)^2*v^3 + 4*g*(g-1)*v)*u^2
+ (-(g^2-1)*v^8 + (g-1)*(g-15)*v^6 + (g+15)*(g+1)*v^4 - (g^2-1)*v^2)*u - 8*v^5
)";

const std::map<std::string, std::string>& derived_sources() {
  static const std::map<std::string, std::string> m = {
      {"H11", kH11},
      {"Fd", "g*v^2 - 2*u*v + v^2 - g + 1"},
      {"Fn", "g*u*v^2 - u^2*v - g*u + v"},
      {"F1", "((g-1)*v^2 - g - 1)*u^2 + (g+1)*v^2 - g + 1"},
      {"F2", "g*v^2 - 2*u*v + v^2 - g + 1"},
      {"Fnum", "(g-1)*(u^2*v^2+1) - g*(u^2+v^2) + 4*u*v - u^2 - v^2"},
      {"Gnum", "2*u*(v^2-1)^2*(g^2-1)*(g*u*v^2-u^2*v-g*u+v)*(u*v-1)*(u-v)"},
      // H21 * (v(v^2-1)(u^2-1))^2 / (v(v^2-1)^2(u^2-1)) with N = (uv^2+u-2v)(2uv-v^2-1).
      {"H21", "u*(g*v*(v^2-1)*(u^2-1) - (u*v^2+u-2*v)*(2*u*v-v^2-1))^2"
              " + (u*v^2+u-2*v)*(2*u*v-v^2-1)*(u*v-1)^2*(u-v)^2"},
  };
  return m;
}

const ExactPoly U = ExactPoly::variable(Var::U);
const ExactPoly V = ExactPoly::variable(Var::V);

struct Spec {
  const char* name;
  const char* label;
  std::function<ExactPoly()> make;
};

ExactPoly at(const char* poly, Var var, long value) { return build_appendix(poly).substitute(var, BigRational(value)); }

const std::vector<Spec>& specs() {
  static const std::vector<Spec> s = {
      {"R1_v1", "R1(u, v=1)", [] { return at("R1", Var::V, 1); }},
      {"R1_vu", "R1(u, v=u)", [] { return build_appendix("R1").substitute(Var::V, U); }},
      {"R1_u74", "R1(u=74, v)", [] { return at("R1", Var::U, 74); }},
      {"R1_u76", "R1(u=76, v)", [] { return at("R1", Var::U, 76); }},
      {"R1_v2", "R1(u, v=2)", [] { return at("R1", Var::V, 2); }},
      {"R2_v1", "R2(u, v=1)", [] { return at("R2", Var::V, 1); }},
      {"R2_vu", "R2(u, v=u)", [] { return build_appendix("R2").substitute(Var::V, U); }},
      {"R2_u76", "R2(u=76, v)", [] { return at("R2", Var::U, 76); }},
      {"H3_76_3", "H3(u=76, v=3, γ)", [] { return at("H3", Var::U, 76).substitute(Var::V, BigRational(3)); }},
      {"H3_76_4", "H3(u=76, v=4, γ)", [] { return at("H3", Var::U, 76).substitute(Var::V, BigRational(4)); }},
      {"H3_g2", "H3(v, γ=2), u=v^2",
       [] { return at("H3", Var::G, 2).substitute(Var::U, V * V); }},
      {"H31_v1", "H31(u, v=1)", [] { return at("H31", Var::V, 1); }},
      {"H31_vu", "H31(u, v=u)", [] { return build_appendix("H31").substitute(Var::V, U); }},
      {"H31_u76", "H31(u=76, v)", [] { return at("H31", Var::U, 76); }},
      {"R1_uv2", "R1(u=v^2, v)", [] { return build_appendix("R1").substitute(Var::U, V * V); }},
  };
  return s;
}

}  // namespace

std::vector<std::string> appendix_names() {
  std::vector<std::string> out;
  for (const auto& s : appendix_data::general()) out.emplace_back(s.name);
  for (const auto& [k, v] : derived_sources()) out.push_back(k);
  return out;
}

ExactPoly build_appendix(const std::string& name) {
  static std::map<std::string, ExactPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& s : appendix_data::general())
    if (s.name == name) return cache[name] = ExactPoly::parse(s.text);
  auto& d = derived_sources();
  if (auto it = d.find(name); it != d.end()) return cache[name] = ExactPoly::parse(it->second);
  throw Error(ErrorKind::DomainError, "unknown appendix polynomial: " + name);
}

std::vector<AppendixDisplay> appendix_displays() {
  std::map<std::string_view, std::string_view> text;
  for (const auto& s : appendix_data::displays()) text[s.name] = s.text;
  std::vector<AppendixDisplay> out;
  for (const auto& s : specs())
    out.push_back({s.name, s.label, ExactPoly::parse(text.at(s.name)), s.make()});
  return out;
}

}  // namespace limcyc
