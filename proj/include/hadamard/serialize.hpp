#pragma once

#include <string>

#include <json.hpp>

#include "hadamard/gale.hpp"
#include "hadamard/kontsevich.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/projective.hpp"
#include "hadamard/quadric.hpp"
#include "hadamard/rnc.hpp"
#include "hadamard/scalar.hpp"

namespace hadamard {

// ordered_json keeps insertion order, so identical runs serialize to
// byte-identical reports
using json = nlohmann::ordered_json;

// scalar encodings: "num/den" strings for rationals, "num/den+num/den i" for
// gaussian rationals, [re, im] number pairs for complex floats
inline json encode(const Rational& a) { return to_string(a); }
inline json encode(const GaussianRational& a) { return to_string(a); }
inline json encode(const Complex& a) { return json::array({a.real(), a.imag()}); }

template <class K>
K decode_scalar(const json& j) {
  if constexpr (std::is_same_v<K, Rational>) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return rational_from_string(j.get<std::string>());
  } else if constexpr (std::is_same_v<K, GaussianRational>) {
    if (j.is_number_integer()) return GaussianRational(j.get<long>());
    return gaussian_from_string(j.get<std::string>());
  } else {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2)
      throw std::invalid_argument("complex scalar: expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
}

template <class K>
json encode(const Matrix<K>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Matrix<K> decode_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix<K> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) m(i, c) = decode_scalar<K>(j[i][c]);
  }
  return m;
}

template <class K>
json encode(const Point<K>& p) {
  json coords = json::array();
  for (const K& c : p.coords) coords.push_back(encode(c));
  return coords;
}

template <class K>
Point<K> decode_point(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point: expected coordinate array");
  std::vector<K> c;
  for (const json& e : j) c.push_back(decode_scalar<K>(e));
  return Point<K>(std::move(c));
}

// point configurations are plain arrays of coordinate arrays
template <class K>
json encode(const PointConfig<K>& cfg) {
  json pts = json::array();
  for (const Point<K>& p : cfg.points()) pts.push_back(encode(p));
  return pts;
}

template <class K>
PointConfig<K> decode_config(const json& j, const Tolerance& tol = {}) {
  if (!j.is_array()) throw std::invalid_argument("configuration: expected array of points");
  std::vector<Point<K>> pts;
  for (const json& e : j) pts.push_back(decode_point<K>(e));
  return PointConfig<K>(std::move(pts), tol);
}

template <class K>
json encode(const SplitConfig<K>& cfg) {
  json j;
  j["r"] = cfg.r();
  j["s"] = cfg.s();
  j["split_index"] = cfg.split();
  j["points"] = encode(cfg.config());
  return j;
}

template <class K>
SplitConfig<K> decode_split_config(const json& j, const Tolerance& tol = {}) {
  if (!j.is_object() || !j.contains("points") || !j.contains("split_index"))
    throw std::invalid_argument("split configuration: expected {split_index, points}");
  return SplitConfig<K>(decode_config<K>(j["points"], tol), j["split_index"].get<int>(), tol);
}

// quadratic forms serialize as their full symmetric matrix
template <class K>
json encode(const QuadraticForm<K>& q) {
  return encode(q.gram());
}

template <class K>
QuadraticForm<K> decode_form(const json& j, const Tolerance& tol = {}) {
  return QuadraticForm<K>(decode_matrix<K>(j), tol);
}

template <class K>
json encode(const QuadricSystem<K>& sys) {
  json j;
  j["dimension"] = sys.proj_dim;
  json basis = json::array();
  for (const QuadraticForm<K>& q : sys.basis) basis.push_back(encode(q));
  j["basis"] = std::move(basis);
  return j;
}

inline json encode(const RncParam& par) {
  json j;
  auto vec = [](const std::vector<Complex>& v) {
    json a = json::array();
    for (const Complex& x : v) a.push_back(encode(x));
    return a;
  };
  j["base_point"] = vec(par.base_point);
  j["nodes"] = vec(par.nodes);
  j["roots"] = vec(par.roots);
  j["real_field"] = par.real_field;
  return j;
}

inline json encode(const Rank2Certificate& cert) {
  json j;
  j["field"] = cert.param.real_field ? "real" : "complex";
  j["size"] = cert.matrix.rows();
  j["matrix"] = encode(cert.matrix);
  j["ortho_residual"] = cert.ortho_residual;
  j["hadamard_sigma_ratio"] = cert.hadamard_sigma_ratio;
  j["param"] = encode(cert.param);
  return j;
}

template <class K>
json encode(const VerifierReport<K>& report) {
  json j;
  j["m"] = report.m;
  j["backend"] = backend_name(report.backend);
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  json hist;
  for (const auto& [r, count] : report.histogram) hist[std::to_string(r)] = count;
  j["rank_histogram"] = std::move(hist);
  j["rank3_count"] = report.rank_count(3);
  j["rank1_count"] = report.rank_count(1);
  j["rejections"] = report.total_rejections;
  auto encode_events = [](const std::vector<RankViolation<K>>& events) {
    json list = json::array();
    for (const RankViolation<K>& v : events) {
      json e;
      e["trial"] = v.trial;
      e["seed"] = v.seed;
      e["rank"] = v.observed_rank;
      e["matrix"] = encode(v.matrix);
      list.push_back(std::move(e));
    }
    return list;
  };
  j["violations"] = encode_events(report.violations);
  j["suspicious"] = encode_events(report.suspicious);
  return j;
}

}  // namespace hadamard
