#include "lsreg/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace lsreg {

nlohmann::ordered_json to_json(const CartesianState& st) {
  nlohmann::ordered_json j;
  j["q"] = st.q;
  j["p"] = st.p;
  return j;
}

nlohmann::ordered_json to_json(const SphereState& sp) {
  nlohmann::ordered_json j;
  j["xi"] = sp.xi;
  j["eta"] = sp.eta;
  j["sign"] = (sp.sign == EnergySign::Negative) ? "neg" : "pos";
  return j;
}

namespace {

template <std::size_t N>
std::array<double, N> fixed_array(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != N) {
    throw std::invalid_argument(std::string("expected \"") + key +
                                "\" to be an array of " + std::to_string(N) +
                                " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = j.at(key).at(i).get<double>();
  return out;
}

}  // namespace

CartesianState cartesian_from_json(const nlohmann::json& j) {
  return {fixed_array<3>(j, "q"), fixed_array<3>(j, "p")};
}

SphereState sphere_from_json(const nlohmann::json& j) {
  SphereState sp;
  sp.xi = fixed_array<4>(j, "xi");
  sp.eta = fixed_array<4>(j, "eta");
  const std::string sign = j.value("sign", "neg");
  if (sign == "neg") {
    sp.sign = EnergySign::Negative;
  } else if (sign == "pos") {
    sp.sign = EnergySign::Positive;
  } else {
    throw std::invalid_argument("\"sign\" must be \"neg\" or \"pos\"");
  }
  return sp;
}

bool is_sphere_json(const nlohmann::json& j) {
  return j.is_object() && j.contains("xi");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace lsreg
