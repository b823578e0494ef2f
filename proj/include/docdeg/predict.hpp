// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "docdeg/cluster.hpp"

namespace docdeg {

/// One page's speckle features joined with counts from an external OCR run.
/// false_pos: words the engine accepted but got wrong.
/// false_neg: words the engine flagged but got right.
struct PageRecord {
  std::string page_id;
  PageFeatures features;
  std::int64_t suspects = 0;
  std::int64_t false_pos = 0;
  std::int64_t false_neg = 0;

  friend bool operator==(const PageRecord&, const PageRecord&) = default;
};

/// suspects ~ beta0 + beta_bsfl * bsfl + beta_bsfh * bsfh
struct RegressionModel {
  double beta0 = 0;
  double beta_bsfl = 0;
  double beta_bsfh = 0;
  double r_squared = 0;
  std::int64_t n = 0;
};

/// Columns [1, bsfl, bsfh], one row per record.
Eigen::MatrixXd design_matrix(std::span<const PageRecord> records);
Eigen::VectorXd response_vector(std::span<const PageRecord> records);

/// Throws InsufficientData (< 3 rows) or DegenerateDesign (rank < 3).
RegressionModel fit(std::span<const PageRecord> records);

double predict_suspects(const RegressionModel& model, const PageFeatures& f);

/// Correction work C = E + 0.7 F+ + F-.
struct WorkEstimate {
  double cost = 0;
  std::int64_t e = 0;
  std::int64_t f_plus = 0;
  std::int64_t f_minus = 0;

  WorkEstimate operator+(const WorkEstimate& o) const;
};

constexpr double kFalsePositiveWeight = 0.7;

/// Throws std::invalid_argument for negative counts.
WorkEstimate work_cost(std::int64_t e, std::int64_t f_plus, std::int64_t f_minus);

struct ScatterPoint {
  std::string label;
  double x = 0;
  double y = 0;

  friend bool operator==(const ScatterPoint&, const ScatterPoint&) = default;
};

/// `label,x,y` with a header row; order preserved, doubles round-trip.
std::string scatter_export(std::span<const ScatterPoint> points);
std::vector<ScatterPoint> scatter_import(const std::string& text);

// Records CSV:
// page_id,bsfl,bsfh,total_black_clusters,total_black_pixels,suspects,false_pos,false_neg
// Blank feature cells are filled by `fill_features(page_id)` when given,
// otherwise they are a parse error.
using FeatureFiller = std::function<PageFeatures(const std::string& page_id)>;
std::vector<PageRecord> records_from_csv(const std::string& text,
                                         const FeatureFiller& fill_features = {});
std::string records_to_csv(std::span<const PageRecord> records);

// Model JSON: {beta0, beta_bsfl, beta_bsfh, r_squared, n}
std::string model_to_json(const RegressionModel& model);
RegressionModel model_from_json(const std::string& text);

}  // namespace docdeg
