#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef PICOQED_CLI_PATH
#error "PICOQED_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(PICOQED_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.stdout_text.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path;
}

std::string doublet_csv() {
  std::string text = "wavelength_nm,intensity\n";
  for (double lam = 340.0; lam <= 430.0001; lam += 0.125) {
    const double y = std::exp(-0.5 * std::pow((lam - 372.0) / 4.0, 2)) +
                     0.9 * std::exp(-0.5 * std::pow((lam - 392.0) / 4.0, 2));
    text += std::to_string(lam) + "," + std::to_string(y) + "\n";
  }
  return text;
}

}  // namespace

TEST_CASE("exit codes: success, domain error, usage error") {
  CHECK(run_cli("convert --value 382 --from nm --to cm-1").exit_code == 0);
  // Inverting conversion of zero: domain error -> 1.
  CHECK(run_cli("convert --value 0 --from nm --to cm-1").exit_code == 1);
  // Unknown subcommand and unknown flag: usage errors -> 2.
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("convert --value 1 --from nm --to cm-1 --frob").exit_code ==
        2);
  CHECK(run_cli("--help").exit_code == 0);

  const auto err = run_cli("convert --value 0 --from nm --to cm-1", true);
  CHECK(err.stdout_text.find("error:") != std::string::npos);
}

TEST_CASE("convert output value") {
  const auto r = run_cli("convert --value 382 --from nm --to cm-1");
  const double v = std::stod(r.stdout_text);
  CHECK(std::abs(v - 26178.01) < 0.5);
  const auto r8 =
      run_cli("--precision 8 convert --value 382 --from nm --to cm-1");
  CHECK(r8.stdout_text.find("26178.01") != std::string::npos);
}

TEST_CASE("analyze on an empty file is a parse failure") {
  const auto path = write_temp("picoqed_empty.csv", "# only a comment\n");
  const auto r = run_cli("analyze --input " + path.string() +
                             " --model rabi-nsqrtn --omega0 26196",
                         true);
  CHECK(r.exit_code == 1);
  CHECK(r.stdout_text.find("error:") != std::string::npos);
}

TEST_CASE("same request twice gives byte-identical output") {
  const auto path = write_temp("picoqed_doublet.csv", doublet_csv());
  const std::vector<std::string> requests = {
      "convert --value 382 --from nm --to ev --json",
      "jc-ladder --omega-mode 26196 --omega-atom 26196 --g 1372 --n-max 4",
      "collective --omega0 26196 --coupling 1372 --model tavis-cummings",
      "simulate mollow --rabi 20 --gamma 1 --grid 301 --tau-steps 2001 "
      "--json",
      "analyze --input " + path.string() +
          " --model rabi-nsqrtn --omega0 26196 --json",
  };
  for (const auto& req : requests) {
    const auto a = run_cli(req);
    const auto b = run_cli(req);
    CHECK(a.exit_code == 0);
    CHECK(a.stdout_text == b.stdout_text);
    CHECK(!a.stdout_text.empty());
  }
}

TEST_CASE("every subcommand emits strict JSON under --json") {
  const auto spectrum = write_temp("picoqed_doublet.csv", doublet_csv());
  std::string ox_text, neu_text;
  for (double lam = 330.0; lam <= 500.0001; lam += 0.1) {
    const double o = std::exp(-0.5 * std::pow((lam - 376.0) / 9.0, 2)) +
                     std::exp(-0.5 * std::pow((lam - 440.0) / 11.0, 2));
    const double n = 1.2 * std::exp(-0.5 * std::pow((lam - 398.0) / 5.0, 2));
    ox_text += std::to_string(lam) + "," + std::to_string(o) + "\n";
    neu_text += std::to_string(lam) + "," + std::to_string(n) + "\n";
  }
  const auto ox = write_temp("picoqed_ox.csv", ox_text);
  const auto neu = write_temp("picoqed_neu.csv", neu_text);
  const auto scaling = write_temp(
      "picoqed_scaling.csv",
      "0.0125,5.002795\n0.025,5.007906\n0.05,5.022361\n0.1,5.063246\n");

  const std::vector<std::string> requests = {
      "convert --value 382 --from nm --to cm-1",
      "geometry --d-nm 0.25 --r-nm 0.063",
      "purcell --lambda-nm 380 --n 1 --q 7 --volume-nm3 1.546e-3",
      "jc-ladder --omega-mode 26196 --omega-atom 26196 --g 1372",
      "doublet --omega0 26196 --omega 1372",
      "collective --omega0 26196 --coupling 1372",
      "collective --omega0 26196 --coupling 1372 --model tavis-cummings",
      "eta --splitting 9590 --omega0 382nm",
      "mollow --omega0 382nm --omega-prime 1450 --orders 3",
      "mollow-spectrum --rabi 20 --gamma 1 --grid-points 301",
      "simulate mollow --rabi 20 --gamma 1 --grid 301 --tau-steps 2001",
      "simulate g2 --rabi 5 --gamma 1 --tau-steps 2001",
      "analyze --input " + spectrum.string() +
          " --model rabi-nsqrtn --omega0 26196",
      "delta-a --oxidized " + ox.string() + " --neutral " + neu.string() +
          " --dark 398nm",
      "distance --c-mm 0.1 --calibration 0.93",
      "fit-scaling --input " + scaling.string() + " --law csqrtc",
  };
  for (const auto& req : requests) {
    const auto r = run_cli(req + " --json");
    CHECK(r.exit_code == 0);
    // Strict parse: throws on any malformed output.
    const auto parsed = nlohmann::json::parse(r.stdout_text);
    CHECK(parsed.is_object());
  }
}

TEST_CASE("analyze JSON carries the contract keys") {
  const auto path = write_temp("picoqed_doublet.csv", doublet_csv());
  const auto r = run_cli("analyze --input " + path.string() +
                         " --model rabi-nsqrtn --omega0 26196 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  for (const char* key :
       {"model", "omega0_cm1", "coupling_cm1", "eta", "regime", "matches",
        "rms_residual_cm1"})
    CHECK(j.contains(key));
  CHECK(j["model"] == "rabi-nsqrtn");
  CHECK(std::abs(j["coupling_cm1"].get<double>() - 1371.52) < 5.0);
  CHECK(j["matches"].size() == 2);
}

TEST_CASE("simulate mollow summary reports the triplet") {
  const auto r = run_cli(
      "simulate mollow --rabi 20 --gamma 1 --grid 601 --json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  REQUIRE(j["peaks"].size() == 3);
  CHECK(std::abs(j["peaks"][1]["position_cm1"].get<double>()) < 0.2);
  CHECK(std::abs(std::abs(j["peaks"][0]["position_cm1"].get<double>()) -
                 20.0) < 0.2);
  CHECK(j["central_to_sideband_ratio"].get<double>() ==
        doctest::Approx(3.0).epsilon(0.1));
}
