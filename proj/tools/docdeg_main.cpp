// SPDX-License-Identifier: Apache-2.0
//
// docdeg: degrade bi-level pages, measure their speckle statistics, and
// predict OCR suspect counts from them.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unistd.h>
#include <vector>

#include "docdeg/docdeg.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadArguments = 2,
  kParseFailure = 3,
  kUnsupportedImage = 4,
  kDegenerateRegression = 5,
};

struct CommonOptions {
  int bin_width = 10;
  int connectivity = 8;
  bool deterministic = false;
};

docdeg::Connectivity connectivity_of(const CommonOptions& o) {
  return o.connectivity == 4 ? docdeg::Connectivity::four : docdeg::Connectivity::eight;
}

std::string read_text(const std::string& path) {
  const auto bytes = docdeg::read_file(path);
  return {bytes.begin(), bytes.end()};
}

// Temp file in the destination directory, then rename over the target.
void write_atomic(const std::string& path, const void* data, std::size_t size) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw std::runtime_error("write failed for " + path);
    }
  }
  fs::rename(tmp, target);
}

void write_atomic(const std::string& path, const std::string& text) {
  write_atomic(path, text.data(), text.size());
}

void write_atomic(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  write_atomic(path, bytes.data(), bytes.size());
}

std::string page_id_of(const std::string& path) { return fs::path(path).stem().string(); }

ordered_json features_json(const docdeg::PageFeatures& f) {
  return {{"bsfl", f.bsfl},
          {"bsfh", f.bsfh},
          {"total_black_clusters", f.total_black_clusters},
          {"total_black_pixels", f.total_black_pixels}};
}

ordered_json delta_json(const docdeg::AnalysisDelta& d) {
  ordered_json bins = ordered_json::array();
  for (const auto& b : d.bins)
    bins.push_back({{"bin_lower", b.lower}, {"bin_upper", b.lower + d.bin_width - 1},
                    {"delta", b.delta}});
  return {{"bsfl", d.bsfl},
          {"bsfh", d.bsfh},
          {"total_clusters", d.total_clusters},
          {"black_pixels", d.black_pixels},
          {"histogram", bins}};
}

ordered_json work_json(const docdeg::WorkEstimate& w) {
  return {{"e", w.e}, {"f_plus", w.f_plus}, {"f_minus", w.f_minus}, {"cost", w.cost}};
}

ordered_json report_header(const CommonOptions& o) {
  ordered_json j;
  j["tool"] = {{"name", docdeg::kToolName}, {"version", docdeg::kVersion}};
  if (!o.deterministic) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["metadata"] = {{"timestamp", buf}};
  }
  j["connectivity"] = o.connectivity;
  j["bin_width"] = o.bin_width;
  return j;
}

// Shared body of `compare` and `degrade --report`.
ordered_json page_report(const std::string& before_path, const docdeg::BiLevelImage& before,
                         const std::string& after_path, const docdeg::BiLevelImage& after,
                         const CommonOptions& o,
                         const std::optional<docdeg::RegressionModel>& model,
                         const std::vector<std::int64_t>& counts) {
  const auto conn = connectivity_of(o);
  const auto a = docdeg::analyze(before, conn);
  const auto b = docdeg::analyze(after, conn);
  const auto fa = docdeg::features(a), fb = docdeg::features(b);
  ordered_json page;
  page["before"] = {{"image", before_path}, {"features", features_json(fa)}};
  page["after"] = {{"image", after_path}, {"features", features_json(fb)}};
  page["delta"] = delta_json(docdeg::compare(a, b, o.bin_width));
  if (model)
    page["predicted_suspects"] = {{"before", docdeg::predict_suspects(*model, fa)},
                                  {"after", docdeg::predict_suspects(*model, fb)}};
  if (counts.size() == 3)
    page["work"] = work_json(docdeg::work_cost(counts[0], counts[1], counts[2]));
  return page;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_deterministic) {
  cmd->add_option("--bin-width", o.bin_width, "Histogram bin width in pixels")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--connectivity", o.connectivity, "Black connectivity (4 or 8)")
      ->check(CLI::IsMember({4, 8}));
  if (with_deterministic)
    cmd->add_flag("--deterministic", o.deterministic, "Omit timestamps from reports");
}

int run(int argc, char** argv) {
  CLI::App app{"Controlled degradation and speckle analysis of bi-level page images",
               docdeg::kToolName};
  app.set_version_flag("--version", docdeg::kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  std::optional<std::uint64_t> seed;

  // gen
  std::string spec_path, gen_out;
  auto* gen = app.add_subcommand("gen", "Synthesize a perfect page as PBM");
  gen->add_option("--spec", spec_path, "Page spec JSON (defaults if omitted)")
      ->check(CLI::ExistingFile);
  gen->add_option("-o,--out", gen_out, "Output PBM")->required();
  gen->add_option("--seed", seed, "Override the spec seed");

  // analyze
  std::string analyze_in, csv_out, hist_out, page_id;
  auto* analyze = app.add_subcommand("analyze", "Black/white cluster analysis");
  analyze->add_option("image", analyze_in, "PBM or TIFF image")->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--csv", csv_out, "Features CSV output (stdout if omitted)");
  analyze->add_option("--histogram", hist_out, "Histogram CSV output");
  analyze->add_option("--page-id", page_id, "Page id (default: file stem)");
  add_common(analyze, common, false);

  // degrade
  std::string degrade_in, recipe_path, degrade_out, report_out, model_path;
  std::vector<std::int64_t> counts;
  auto* degrade = app.add_subcommand("degrade", "Apply a degradation recipe");
  degrade->add_option("image", degrade_in, "PBM or TIFF image")->required()
      ->check(CLI::ExistingFile);
  degrade->add_option("--recipe", recipe_path, "Recipe JSON")->required()
      ->check(CLI::ExistingFile);
  degrade->add_option("-o,--out", degrade_out, "Output PBM")->required();
  degrade->add_option("--seed", seed, "Override the recipe seed");
  degrade->add_option("--report", report_out, "Also write a before/after JSON report");
  degrade->add_option("--model", model_path, "Model JSON for predicted suspects in the report")
      ->check(CLI::ExistingFile);
  degrade->add_option("--counts", counts, "E F+ F- for a work estimate in the report")
      ->expected(3);
  add_common(degrade, common, true);

  // compare
  std::string cmp_a, cmp_b, cmp_out;
  auto* compare = app.add_subcommand("compare", "Compare the cluster analyses of two images");
  compare->add_option("before", cmp_a, "Reference image")->required()->check(CLI::ExistingFile);
  compare->add_option("after", cmp_b, "Degraded image")->required()->check(CLI::ExistingFile);
  compare->add_option("-o,--out", cmp_out, "Report JSON (stdout if omitted)");
  compare->add_option("--model", model_path, "Model JSON for predicted suspects")
      ->check(CLI::ExistingFile);
  compare->add_option("--counts", counts, "E F+ F- for a work estimate")->expected(3);
  add_common(compare, common, true);

  // fit
  std::string records_path, fit_out, image_dir;
  auto* fitcmd = app.add_subcommand("fit", "Fit suspects ~ BSFL + BSFH");
  fitcmd->add_option("records", records_path, "Records CSV")->required()
      ->check(CLI::ExistingFile);
  fitcmd->add_option("-o,--out", fit_out, "Model JSON")->required();
  fitcmd->add_option("--image-dir", image_dir,
                     "Directory of <page_id>.pbm used to fill blank feature cells")
      ->check(CLI::ExistingDirectory);
  add_common(fitcmd, common, false);

  // predict
  std::string predict_in, predict_out;
  auto* predict = app.add_subcommand("predict", "Predict suspects for an image or records CSV");
  predict->add_option("--model", model_path, "Model JSON")->required()
      ->check(CLI::ExistingFile);
  predict->add_option("input", predict_in, "Image, or records CSV for predicted-vs-actual")
      ->required()->check(CLI::ExistingFile);
  predict->add_option("-o,--out", predict_out, "Output (stdout if omitted)");
  add_common(predict, common, false);

  // cost
  std::int64_t e = 0, f_plus = 0, f_minus = 0;
  auto* cost = app.add_subcommand("cost", "Correction work C = E + 0.7 F+ + F-");
  cost->add_option("e", e, "Errors")->required();
  cost->add_option("f_plus", f_plus, "False positives")->required();
  cost->add_option("f_minus", f_minus, "False negatives")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kBadArguments;
  }

  auto emit = [](const std::string& path, const std::string& text) {
    if (path.empty())
      std::cout << text;
    else
      write_atomic(path, text);
  };
  auto load_model = [&]() -> std::optional<docdeg::RegressionModel> {
    if (model_path.empty()) return std::nullopt;
    return docdeg::model_from_json(read_text(model_path));
  };
  const auto conn = connectivity_of(common);

  if (*gen) {
    auto spec = spec_path.empty() ? docdeg::PageSpec{}
                                  : docdeg::page_spec_from_json(read_text(spec_path));
    if (seed) spec.seed = *seed;
    write_atomic(gen_out, docdeg::write_pbm(docdeg::generate(spec)));
  } else if (*analyze) {
    const auto img = docdeg::load_image(analyze_in);
    const auto a = docdeg::analyze(img, conn);
    const auto id = page_id.empty() ? page_id_of(analyze_in) : page_id;
    emit(csv_out, docdeg::features_csv_header() +
                      docdeg::features_csv_row(id, docdeg::features(a)));
    if (!hist_out.empty()) write_atomic(hist_out, docdeg::histogram_csv(a, common.bin_width));
  } else if (*degrade) {
    auto recipe = docdeg::recipe_from_json(read_text(recipe_path));
    if (seed) recipe.seed = *seed;
    const auto before = docdeg::load_image(degrade_in);
    const auto after = docdeg::degraded(before, recipe);
    write_atomic(degrade_out, docdeg::write_pbm(after));
    if (!report_out.empty()) {
      auto report = report_header(common);
      report["seed"] = recipe.seed;
      auto page = page_report(degrade_in, before, degrade_out, after, common, load_model(),
                              counts);
      page["recipe"] = ordered_json::parse(docdeg::recipe_to_json(recipe));
      report["pages"] = ordered_json::array({page});
      write_atomic(report_out, report.dump(2) + "\n");
    }
  } else if (*compare) {
    auto report = report_header(common);
    report["pages"] = ordered_json::array(
        {page_report(cmp_a, docdeg::load_image(cmp_a), cmp_b, docdeg::load_image(cmp_b),
                     common, load_model(), counts)});
    emit(cmp_out, report.dump(2) + "\n");
  } else if (*fitcmd) {
    docdeg::FeatureFiller filler;
    if (!image_dir.empty())
      filler = [&](const std::string& id) {
        const auto path = (fs::path(image_dir) / (id + ".pbm")).string();
        return docdeg::features(docdeg::analyze(docdeg::load_image(path), conn));
      };
    const auto records = docdeg::records_from_csv(read_text(records_path), filler);
    write_atomic(fit_out, docdeg::model_to_json(docdeg::fit(records)));
  } else if (*predict) {
    const auto model = *load_model();
    if (fs::path(predict_in).extension() == ".csv") {
      const auto records = docdeg::records_from_csv(read_text(predict_in));
      std::vector<docdeg::ScatterPoint> points;
      for (const auto& r : records)
        points.push_back({r.page_id, double(r.suspects),
                          docdeg::predict_suspects(model, r.features)});
      emit(predict_out, docdeg::scatter_export(points));
    } else {
      const auto f = docdeg::features(docdeg::analyze(docdeg::load_image(predict_in), conn));
      const ordered_json j = {{"page_id", page_id_of(predict_in)},
                              {"features", features_json(f)},
                              {"predicted_suspects", docdeg::predict_suspects(model, f)}};
      emit(predict_out, j.dump(2) + "\n");
    }
  } else if (*cost) {
    std::cout << docdeg::csv::format_double(docdeg::work_cost(e, f_plus, f_minus).cost) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const docdeg::UnsupportedFeature& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kUnsupportedImage;
  } catch (const docdeg::ParseError& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kParseFailure;
  } catch (const docdeg::DegenerateDesign& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kDegenerateRegression;
  } catch (const docdeg::InsufficientData& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kDegenerateRegression;
  } catch (const docdeg::LayoutError& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::invalid_argument& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "docdeg: " << e.what() << "\n";
    return kFailure;
  }
}
