// Batch fragility experiments: for each (image, method, attack) cell,
// generate a zero-watermark from the pristine carrier, attack the carrier,
// verify, and record the metrics.  Cell order is fixed by the sorted
// corpus, the method list, and the suite order; per-cell failures land in
// the report instead of aborting the run.
#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "dqzw/attacks.hpp"
#include "dqzw/pipeline.hpp"
#include "dqzw/synthetic.hpp"

namespace dqzw {

inline nlohmann::json attack_spec_to_json(const AttackSpec& spec) {
  nlohmann::json j;
  j["kind"] = attack_kind_name(spec.kind);
  switch (spec.kind) {
    case AttackKind::gaussian_noise:
      j["variance"] = spec.variance;
      j["seed"] = spec.seed;
      break;
    case AttackKind::jpeg_compress:
      j["quality"] = spec.quality;
      break;
    case AttackKind::rotate:
      j["angle"] = spec.angle;
      break;
    case AttackKind::center_crop:
      j["area_fraction"] = spec.area_fraction;
      break;
    case AttackKind::brighten:
      j["delta"] = spec.delta;
      break;
    case AttackKind::pixel_edit:
      j["x"] = spec.px_x;
      j["y"] = spec.px_y;
      j["channel"] = spec.px_channel;
      j["value"] = spec.px_value;
      break;
  }
  return j;
}

inline AttackSpec attack_spec_from_json(const nlohmann::json& j) {
  AttackSpec spec;
  try {
    spec.kind = attack_kind_from_name(j.at("kind").get<std::string>());
    spec.variance = j.value("variance", spec.variance);
    spec.seed = j.value("seed", spec.seed);
    spec.quality = j.value("quality", spec.quality);
    spec.angle = j.value("angle", spec.angle);
    spec.area_fraction = j.value("area_fraction", spec.area_fraction);
    spec.delta = j.value("delta", spec.delta);
    spec.px_x = j.value("x", spec.px_x);
    spec.px_y = j.value("y", spec.px_y);
    spec.px_channel = j.value("channel", spec.px_channel);
    spec.px_value = j.value("value", spec.px_value);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed attack spec: ") + e.what());
  }
  return spec;
}

inline std::vector<AttackSpec> load_attack_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open attack suite: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("attack suite is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw FormatError("attack suite must be a JSON array");
  std::vector<AttackSpec> suite;
  for (const nlohmann::json& item : j) suite.push_back(attack_spec_from_json(item));
  return suite;
}

struct ExperimentCell {
  std::string image;
  Method method = Method::lu;
  std::string attack;  // "none" for the identity row
  MetricsReport metrics;
  std::string error;  // nonempty when this cell failed
};

struct ExperimentConfig {
  std::vector<std::string> corpus;  // carrier image paths
  std::vector<AttackSpec> suite;    // empty: one identity row per cell
  std::vector<Method> methods;
  std::string watermark_path;  // empty: deterministic synthetic watermark
  GenerateConfig base;         // method is overwritten per cell
  double ber_threshold = 0.0;
};

namespace detail {

inline std::string format_psnr(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

inline std::vector<ExperimentCell> run_experiment(const ExperimentConfig& cfg) {
  std::vector<std::string> corpus = cfg.corpus;
  std::sort(corpus.begin(), corpus.end());

  std::vector<ExperimentCell> cells;
  for (const std::string& path : corpus) {
    const RgbImage carrier_raw = load_image(path);
    const std::string name = std::filesystem::path(path).filename().string();
    const RgbImage watermark = cfg.watermark_path.empty()
                                   ? synthetic_watermark(cfg.base.size > 0 ? cfg.base.size
                                                                           : carrier_raw.width)
                                   : load_image(cfg.watermark_path);
    for (Method method : cfg.methods) {
      GenerateConfig gen_cfg = cfg.base;
      gen_cfg.method = method;
      GenerateResult generated;
      std::string gen_error;
      RgbImage carrier;  // the image actually protected (after any resize)
      try {
        generated = generate(carrier_raw, watermark, gen_cfg);
        carrier = gen_cfg.size > 0 ? resize_bicubic(carrier_raw, gen_cfg.size, gen_cfg.size)
                                   : carrier_raw;
      } catch (const Error& e) {
        gen_error = e.what();
      }

      auto run_cell = [&](const std::string& label, const AttackSpec* spec) {
        ExperimentCell cell;
        cell.image = name;
        cell.method = method;
        cell.attack = label;
        if (!gen_error.empty()) {
          cell.error = gen_error;
        } else {
          try {
            const RgbImage suspect = spec ? apply_attack(carrier, *spec) : carrier;
            cell.metrics = verify(suspect, generated.zw, generated.key, watermark,
                                  cfg.ber_threshold)
                               .metrics;
          } catch (const Error& e) {
            cell.error = e.what();
          }
        }
        cells.push_back(std::move(cell));
      };

      if (cfg.suite.empty()) {
        run_cell("none", nullptr);
      } else {
        for (const AttackSpec& spec : cfg.suite) run_cell(spec.label(), &spec);
      }
    }
  }
  return cells;
}

inline nlohmann::json experiment_report_json(const std::vector<ExperimentCell>& cells) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ExperimentCell& cell : cells) {
    nlohmann::json row;
    row["image"] = cell.image;
    row["method"] = method_name(cell.method);
    row["attack"] = cell.attack;
    if (cell.error.empty()) {
      row["psnr"] = std::isinf(cell.metrics.psnr) ? nlohmann::json("inf")
                                                  : nlohmann::json(cell.metrics.psnr);
      row["ssim"] = cell.metrics.ssim;
      row["ber"] = cell.metrics.ber;
      row["nc"] = cell.metrics.nc;
      row["authentic"] = cell.metrics.authentic;
    } else {
      row["error"] = cell.error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_experiment_reports(const std::vector<ExperimentCell>& cells,
                                     const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);

  std::ofstream csv(dir / "report.csv");
  if (!csv) throw IoError("cannot write report.csv in " + out_dir);
  csv << "image,method,attack,ber,nc,psnr,ssim,authentic,error\n";
  for (const ExperimentCell& cell : cells) {
    csv << cell.image << ',' << method_name(cell.method) << ',' << cell.attack << ',';
    if (cell.error.empty()) {
      csv << cell.metrics.ber << ',' << cell.metrics.nc << ','
          << detail::format_psnr(cell.metrics.psnr) << ',' << cell.metrics.ssim << ','
          << (cell.metrics.authentic ? "true" : "false") << ',';
    } else {
      csv << ",,,,,\"" << cell.error << '"';
    }
    csv << '\n';
  }

  std::ofstream json_out(dir / "report.json");
  if (!json_out) throw IoError("cannot write report.json in " + out_dir);
  json_out << experiment_report_json(cells).dump(2) << "\n";
}

}  // namespace dqzw
