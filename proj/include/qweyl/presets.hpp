// Built-in braidings (flip, standard d=2 Drinfeld-Jimbo, super-flip) and the
// R-matrix file format: a JSON document with fields `dim`, optional `q`, and
// `entries` holding sparse records {k,l,i,j,value} in the Scalar grammar.
#pragma once

#include "qweyl/hecke.hpp"

#include <nlohmann/json.hpp>

namespace qweyl {

inline Braiding preset_flip(int d) {
  if (d < 1 || d > 4) throw std::invalid_argument("flip preset: need 1 <= d <= 4");
  return Braiding{d, flip_matrix(d), Scalar(1)};
}

// Standard U_q(sl(2)) Hecke symmetry in braid form.
inline Braiding preset_standard_d2() {
  Scalar q = Scalar::var(VQ);
  ScalarMatrix m(4, 4);
  m.at(0, 0) = q;                  // R^{11}_{11}
  m.at(3, 3) = q;                  // R^{22}_{22}
  m.at(1, 1) = q - q.inv();        // R^{12}_{12}
  m.at(2, 1) = Scalar(1);          // R^{21}_{12}
  m.at(1, 2) = Scalar(1);          // R^{12}_{21}
  return Braiding{2, std::move(m), q};
}

// Super-flip on V_{m|n}: R(x_i (x) x_j) = (-1)^{p_i p_j} x_j (x) x_i.
inline Braiding preset_superflip(int m, int n) {
  int d = m + n;
  if (d < 1 || d > 4) throw std::invalid_argument("superflip preset: need 1 <= m+n <= 4");
  auto parity = [&](int i) { return i >= m ? 1 : 0; };
  ScalarMatrix mat(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      mat.at(j * d + i, i * d + j) =
          (parity(i) && parity(j)) ? Scalar(-1) : Scalar(1);
  return Braiding{d, std::move(mat), Scalar(1)};
}

// Accepts "flip:d=2" / "flip:2", "std:d=2", "superflip:1|1".
inline Braiding braiding_preset(const std::string& name) {
  auto after_colon = [&](size_t pos) { return name.substr(pos + 1); };
  if (name.rfind("flip", 0) == 0) {
    std::string arg = name.size() > 4 ? after_colon(4) : "2";
    if (arg.rfind("d=", 0) == 0) arg = arg.substr(2);
    return preset_flip(std::stoi(arg));
  }
  if (name == "std" || name == "std:d=2" || name == "std:2")
    return preset_standard_d2();
  if (name.rfind("superflip", 0) == 0) {
    std::string arg = name.size() > 9 ? after_colon(9) : "1|1";
    auto bar = arg.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("superflip preset: expected m|n");
    return preset_superflip(std::stoi(arg.substr(0, bar)),
                            std::stoi(arg.substr(bar + 1)));
  }
  throw std::invalid_argument("unknown braiding preset: " + name);
}

inline Braiding braiding_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("R-matrix file: need fields 'dim' and 'entries'");
  int d = j.at("dim").get<int>();
  if (d < 1 || d > 4)
    throw std::invalid_argument("R-matrix file: dim must be between 1 and 4");
  Braiding r;
  r.dim = d;
  r.mat = ScalarMatrix(d * d, d * d);
  if (j.contains("q") && !j.at("q").is_null())
    r.hecke_q = parse_scalar(j.at("q").get<std::string>(), {VQ, VH});
  std::vector<bool> seen(size_t(d) * d * d * d, false);
  for (const auto& e : j.at("entries")) {
    int k = e.at("k").get<int>(), l = e.at("l").get<int>();
    int i = e.at("i").get<int>(), jj = e.at("j").get<int>();
    for (int idx : {k, l, i, jj})
      if (idx < 1 || idx > d)
        throw std::invalid_argument("R-matrix file: index out of range");
    size_t flat = size_t(((k - 1) * d + (l - 1)) * d * d + (i - 1) * d + (jj - 1));
    if (seen[flat]) throw std::invalid_argument("R-matrix file: duplicate entry");
    seen[flat] = true;
    r.mat.at((k - 1) * d + (l - 1), (i - 1) * d + (jj - 1)) =
        parse_scalar(e.at("value").get<std::string>(), {VQ, VH});
  }
  return r;
}

inline nlohmann::json braiding_to_json(const Braiding& r) {
  nlohmann::json j;
  j["dim"] = r.dim;
  if (r.hecke_q) j["q"] = r.hecke_q->str();
  auto entries = nlohmann::json::array();
  for (int k = 0; k < r.dim; ++k)
    for (int l = 0; l < r.dim; ++l)
      for (int i = 0; i < r.dim; ++i)
        for (int jj = 0; jj < r.dim; ++jj) {
          const Scalar& v = r.entry(k, l, i, jj);
          if (v.is_zero()) continue;
          entries.push_back({{"k", k + 1}, {"l", l + 1}, {"i", i + 1},
                             {"j", jj + 1}, {"value", v.str()}});
        }
  j["entries"] = std::move(entries);
  return j;
}

} // namespace qweyl
