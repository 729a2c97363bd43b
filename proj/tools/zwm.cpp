// zwm: zero-watermark generation, verification, attack simulation, and
// batch experiments over dual quaternion matrix factorizations.
//
// Exit codes: 0 authentic / success, 1 not authentic, 2 usage error,
// 3 processing error.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "dqzw/experiment.hpp"
#include "dqzw/pipeline.hpp"

namespace {

constexpr int kExitAuthentic = 0;
constexpr int kExitNotAuthentic = 1;
constexpr int kExitUsage = 2;
constexpr int kExitProcessing = 3;

struct GenerateArgs {
  std::string method = "lu";
  std::string carrier, watermark, zw_out, key_out;
  int arnold_k = 10;
  std::vector<std::int64_t> arnold_matrix = {1, 1, 1, 2};
  int size = 0;
};

struct VerifyArgs {
  std::string method;
  std::string suspect, zw, key, watermark_ref;
  std::string report, recovered_out;
  double ber_threshold = 0.0;
};

struct AttackArgs {
  std::string type = "gaussian";
  std::string in, out;
  double variance = 0.01;
  std::uint64_t seed = 0;
  int quality = 10;
  double angle = 3.0;
  double fraction = 0.25;
  int delta = 30;
  int px_x = 0, px_y = 0, px_channel = 0, px_value = -1;
};

struct ExperimentArgs {
  std::string corpus, suite, out;
  std::string methods = "lu,qr,svd";
  std::string watermark;
  int size = 0;
  double ber_threshold = 0.0;
};

int run_generate(const GenerateArgs& args) {
  dqzw::GenerateConfig cfg;
  cfg.method = dqzw::method_from_name(args.method);
  if (args.arnold_matrix.size() != 4)
    throw dqzw::BadParameters("--arnold-matrix expects four integers a,b,c,d");
  cfg.arnold = {args.arnold_matrix[0], args.arnold_matrix[1], args.arnold_matrix[2],
                args.arnold_matrix[3], args.arnold_k, 0};
  cfg.size = args.size;

  const dqzw::RgbImage carrier = dqzw::load_image(args.carrier);
  const dqzw::RgbImage watermark = dqzw::load_image(args.watermark);
  const dqzw::GenerateResult result = dqzw::generate(carrier, watermark, cfg);
  dqzw::save_zero_watermark(result.zw, args.zw_out);
  dqzw::save_key_file(result.key, args.key_out);
  std::cout << "zero-watermark (" << args.method << ", " << result.zw.m << "x" << result.zw.n
            << ") written to " << args.zw_out << ", key to " << args.key_out << "\n";
  return kExitAuthentic;
}

int run_verify(const VerifyArgs& args) {
  const dqzw::ZeroWatermark zw = dqzw::load_zero_watermark(args.zw);
  const dqzw::KeyFile key = dqzw::load_key_file(args.key);
  if (!args.method.empty() && dqzw::method_from_name(args.method) != zw.method)
    throw dqzw::BadParameters("--method disagrees with the zero-watermark file");
  const dqzw::RgbImage suspect = dqzw::load_image(args.suspect);
  const dqzw::RgbImage reference = dqzw::load_image(args.watermark_ref);

  const dqzw::VerifyResult result =
      dqzw::verify(suspect, zw, key, reference, args.ber_threshold);
  if (!args.recovered_out.empty()) dqzw::save_png(result.recovered, args.recovered_out);

  const dqzw::MetricsReport& m = result.metrics;
  std::cout << "method " << dqzw::method_name(zw.method) << "  BER " << m.ber << "  NC "
            << m.nc << "  PSNR " << dqzw::detail::format_psnr(m.psnr) << "  SSIM " << m.ssim
            << "  -> " << (m.authentic ? "AUTHENTIC" : "NOT AUTHENTIC") << "\n";

  if (!args.report.empty()) {
    nlohmann::json j;
    j["psnr"] = std::isinf(m.psnr) ? nlohmann::json("inf") : nlohmann::json(m.psnr);
    j["ssim"] = m.ssim;
    j["ber"] = m.ber;
    j["nc"] = m.nc;
    j["authentic"] = m.authentic;
    j["method"] = dqzw::method_name(zw.method);
    j["attack"] = nullptr;
    std::ofstream out(args.report);
    if (!out) throw dqzw::IoError("cannot write report: " + args.report);
    out << j.dump(2) << "\n";
  }
  return m.authentic ? kExitAuthentic : kExitNotAuthentic;
}

int run_attack(const AttackArgs& args) {
  dqzw::AttackSpec spec;
  spec.kind = dqzw::attack_kind_from_name(args.type);
  spec.variance = args.variance;
  spec.seed = args.seed;
  spec.quality = args.quality;
  spec.angle = args.angle;
  spec.area_fraction = args.fraction;
  spec.delta = args.delta;
  spec.px_x = args.px_x;
  spec.px_y = args.px_y;
  spec.px_channel = args.px_channel;
  spec.px_value = args.px_value;

  const dqzw::RgbImage img = dqzw::load_image(args.in);
  dqzw::save_png(dqzw::apply_attack(img, spec), args.out);
  std::cout << spec.label() << " applied, written to " << args.out << "\n";
  return kExitAuthentic;
}

int run_experiment_cmd(const ExperimentArgs& args) {
  dqzw::ExperimentConfig cfg;
  for (const auto& entry : std::filesystem::directory_iterator(args.corpus)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (ext == ".png" || ext == ".bmp") cfg.corpus.push_back(entry.path().string());
  }
  if (cfg.corpus.empty())
    throw dqzw::BadParameters("no .png/.bmp images found in corpus: " + args.corpus);
  cfg.suite = dqzw::load_attack_suite(args.suite);

  std::stringstream methods(args.methods);
  std::string token;
  while (std::getline(methods, token, ','))
    if (!token.empty()) cfg.methods.push_back(dqzw::method_from_name(token));
  if (cfg.methods.empty()) throw dqzw::BadParameters("--methods selected no methods");

  cfg.watermark_path = args.watermark;
  cfg.base.size = args.size;
  cfg.ber_threshold = args.ber_threshold;

  const std::vector<dqzw::ExperimentCell> cells = dqzw::run_experiment(cfg);
  dqzw::write_experiment_reports(cells, args.out);
  std::size_t failed = 0;
  for (const dqzw::ExperimentCell& cell : cells)
    if (!cell.error.empty()) ++failed;
  std::cout << cells.size() << " cells written to " << args.out << "/report.{csv,json}";
  if (failed > 0) std::cout << " (" << failed << " cells errored)";
  std::cout << "\n";
  return kExitAuthentic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fragile zero-watermarking over dual quaternion matrix factorizations"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Generate a zero-watermark and key file");
  generate->add_option("--method", gen.method, "Factorization: lu, qr, or svd")
      ->check(CLI::IsMember({"lu", "qr", "svd"}));
  generate->add_option("--carrier", gen.carrier, "Carrier image (PNG/BMP)")->required();
  generate->add_option("--watermark", gen.watermark, "Watermark image (PNG/BMP)")->required();
  generate->add_option("--zw-out", gen.zw_out, "Zero-watermark output path")->required();
  generate->add_option("--key-out", gen.key_out, "Key file output path")->required();
  generate->add_option("--arnold-k", gen.arnold_k, "Arnold iteration count (default 10)");
  generate->add_option("--arnold-matrix", gen.arnold_matrix, "Arnold matrix a,b,c,d")
      ->delimiter(',')
      ->expected(4);
  generate->add_option("--size", gen.size, "Resize the carrier to this square side first");

  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "Verify a suspect image against a zero-watermark");
  verify->add_option("--method", ver.method, "Expected method (cross-checked with the file)")
      ->check(CLI::IsMember({"lu", "qr", "svd"}));
  verify->add_option("--suspect", ver.suspect, "Image to verify")->required();
  verify->add_option("--zw", ver.zw, "Zero-watermark file")->required();
  verify->add_option("--key", ver.key, "Key file")->required();
  verify->add_option("--watermark-ref", ver.watermark_ref, "Original watermark image")->required();
  verify->add_option("--report", ver.report, "Write a JSON metrics report here");
  verify->add_option("--recovered-out", ver.recovered_out, "Write the recovered watermark PNG here");
  verify->add_option("--ber-threshold", ver.ber_threshold,
                     "Authenticity BER threshold (default 0: strictly fragile)");

  AttackArgs att;
  CLI::App* attack = app.add_subcommand("attack", "Apply a tampering attack to an image");
  attack->add_option("--type", att.type, "gaussian, jpeg, rotate, crop, brighten, or pixel")
      ->required()
      ->check(CLI::IsMember({"gaussian", "jpeg", "rotate", "crop", "brighten", "pixel"}));
  attack->add_option("--in", att.in, "Input image")->required();
  attack->add_option("--out", att.out, "Output PNG")->required();
  attack->add_option("--variance", att.variance, "Gaussian noise variance on [0,1] (default 0.01)");
  attack->add_option("--seed", att.seed, "Gaussian noise seed (default 0)");
  attack->add_option("--quality", att.quality, "JPEG quality 1..100 (default 10)");
  attack->add_option("--angle", att.angle, "Counterclockwise rotation in degrees (default 3)");
  attack->add_option("--fraction", att.fraction, "Cropped central area fraction (default 0.25)");
  attack->add_option("--delta", att.delta, "Brightening offset (default +30)");
  attack->add_option("--px-x", att.px_x, "Pixel edit x");
  attack->add_option("--px-y", att.px_y, "Pixel edit y");
  attack->add_option("--px-channel", att.px_channel, "Pixel edit channel 0..2");
  attack->add_option("--px-value", att.px_value, "Pixel edit value 0..255, or -1 to nudge by one");

  ExperimentArgs exp;
  CLI::App* experiment = app.add_subcommand("experiment", "Run an attack suite over a corpus");
  experiment->add_option("--corpus", exp.corpus, "Directory of carrier images")->required();
  experiment->add_option("--suite", exp.suite, "Attack suite JSON file")->required();
  experiment->add_option("--methods", exp.methods, "Comma-separated methods (default lu,qr,svd)");
  experiment->add_option("--out", exp.out, "Output directory for report.{csv,json}")->required();
  experiment->add_option("--watermark", exp.watermark,
                         "Watermark image (default: deterministic synthetic watermark)");
  experiment->add_option("--size", exp.size, "Resize carriers to this square side first");
  experiment->add_option("--ber-threshold", exp.ber_threshold, "Authenticity BER threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (verify->parsed()) return run_verify(ver);
    if (attack->parsed()) return run_attack(att);
    if (experiment->parsed()) return run_experiment_cmd(exp);
  } catch (const dqzw::BadParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitProcessing;
  }
  return kExitUsage;
}
