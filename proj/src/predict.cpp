// SPDX-License-Identifier: Apache-2.0
#include "docdeg/predict.hpp"

#include <array>
#include <json.hpp>
#include <stdexcept>

#include "docdeg/csv.hpp"
#include "docdeg/errors.hpp"
#include "docdeg/ols.hpp"

namespace docdeg {

Eigen::MatrixXd design_matrix(std::span<const PageRecord> records) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(records.size()), 3);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const auto& f = records[static_cast<std::size_t>(i)].features;
    x.row(i) << 1.0, double(f.bsfl), double(f.bsfh);
  }
  return x;
}

Eigen::VectorXd response_vector(std::span<const PageRecord> records) {
  Eigen::VectorXd y(static_cast<Eigen::Index>(records.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i)
    y(i) = double(records[static_cast<std::size_t>(i)].suspects);
  return y;
}

RegressionModel fit(std::span<const PageRecord> records) {
  if (records.size() < 3) throw InsufficientData();
  const auto solution = ols(design_matrix(records), response_vector(records));
  RegressionModel m;
  m.beta0 = solution.coefficients(0);
  m.beta_bsfl = solution.coefficients(1);
  m.beta_bsfh = solution.coefficients(2);
  m.r_squared = solution.r_squared;
  m.n = static_cast<std::int64_t>(records.size());
  return m;
}

double predict_suspects(const RegressionModel& model, const PageFeatures& f) {
  return model.beta0 + model.beta_bsfl * double(f.bsfl) + model.beta_bsfh * double(f.bsfh);
}

WorkEstimate work_cost(std::int64_t e, std::int64_t f_plus, std::int64_t f_minus) {
  if (e < 0 || f_plus < 0 || f_minus < 0)
    throw std::invalid_argument("work counts must be non-negative");
  return {double(e) + kFalsePositiveWeight * double(f_plus) + double(f_minus), e, f_plus,
          f_minus};
}

WorkEstimate WorkEstimate::operator+(const WorkEstimate& o) const {
  return work_cost(e + o.e, f_plus + o.f_plus, f_minus + o.f_minus);
}

std::string scatter_export(std::span<const ScatterPoint> points) {
  std::string out = "label,x,y\n";
  for (const auto& p : points)
    out += csv::quote(p.label) + ',' + csv::format_double(p.x) + ',' +
           csv::format_double(p.y) + '\n';
  return out;
}

std::vector<ScatterPoint> scatter_import(const std::string& text) {
  const auto rows = csv::parse(text);
  if (rows.empty() || rows.front() != csv::Row{"label", "x", "y"})
    throw ParseError(ParseError::Kind::malformed, "scatter CSV: bad header");
  std::vector<ScatterPoint> points;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 3)
      throw ParseError(ParseError::Kind::malformed, "scatter CSV: expected 3 columns");
    points.push_back({rows[i][0], csv::to_double(rows[i][1], "x"),
                      csv::to_double(rows[i][2], "y")});
  }
  return points;
}

namespace {

constexpr std::array<const char*, 8> kRecordColumns = {
    "page_id",   "bsfl",   "bsfh",      "total_black_clusters", "total_black_pixels",
    "suspects", "false_pos", "false_neg"};

std::int64_t count_field(const std::string& s, const char* what) {
  const auto v = csv::to_int(s, what);
  if (v < 0)
    throw ParseError(ParseError::Kind::malformed,
                     std::string("records CSV: negative ") + what);
  return v;
}

}  // namespace

std::vector<PageRecord> records_from_csv(const std::string& text,
                                         const FeatureFiller& fill_features) {
  const auto rows = csv::parse(text);
  if (rows.empty() || rows.front() != csv::Row(kRecordColumns.begin(), kRecordColumns.end()))
    throw ParseError(ParseError::Kind::malformed, "records CSV: bad header");

  std::vector<PageRecord> records;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != kRecordColumns.size())
      throw ParseError(ParseError::Kind::malformed,
                       "records CSV: row " + std::to_string(i) + " has wrong column count");
    PageRecord rec;
    rec.page_id = r[0];
    const bool blank = r[1].empty() && r[2].empty() && r[3].empty() && r[4].empty();
    if (blank && fill_features) {
      rec.features = fill_features(rec.page_id);
    } else {
      rec.features.bsfl = count_field(r[1], "bsfl");
      rec.features.bsfh = count_field(r[2], "bsfh");
      rec.features.total_black_clusters = count_field(r[3], "total_black_clusters");
      rec.features.total_black_pixels = count_field(r[4], "total_black_pixels");
    }
    rec.suspects = count_field(r[5], "suspects");
    rec.false_pos = count_field(r[6], "false_pos");
    rec.false_neg = count_field(r[7], "false_neg");
    records.push_back(std::move(rec));
  }
  return records;
}

std::string records_to_csv(std::span<const PageRecord> records) {
  std::string out;
  for (std::size_t i = 0; i < kRecordColumns.size(); ++i)
    out += std::string(i ? "," : "") + kRecordColumns[i];
  out += '\n';
  for (const auto& r : records) {
    out += csv::quote(r.page_id);
    for (const auto v : {r.features.bsfl, r.features.bsfh, r.features.total_black_clusters,
                         r.features.total_black_pixels, r.suspects, r.false_pos, r.false_neg})
      out += ',' + std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string model_to_json(const RegressionModel& m) {
  const nlohmann::ordered_json j = {{"beta0", m.beta0},
                                    {"beta_bsfl", m.beta_bsfl},
                                    {"beta_bsfh", m.beta_bsfh},
                                    {"r_squared", m.r_squared},
                                    {"n", m.n}};
  return j.dump(2) + "\n";
}

RegressionModel model_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RegressionModel m;
    m.beta0 = j.at("beta0").get<double>();
    m.beta_bsfl = j.at("beta_bsfl").get<double>();
    m.beta_bsfh = j.at("beta_bsfh").get<double>();
    m.r_squared = j.at("r_squared").get<double>();
    m.n = j.at("n").get<std::int64_t>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(ParseError::Kind::malformed, std::string("model JSON: ") + e.what());
  }
}

}  // namespace docdeg
