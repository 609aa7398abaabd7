#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <sphmax/sphmax.hpp>

using namespace sphmax;

namespace {

Report sample_report() {
    Report rep;
    rep.experiment = "unit-sample";
    rep.params["n"] = "2";
    rep.params["measure"] = "sphere";
    rep.scalars["alpha"] = 1.5;
    rep.scalars["beta"] = std::numeric_limits<double>::infinity();
    rep.fits["line"] = LineFit{-1.0, 0.25, 0.999};
    rep.columns = {"t", "value"};
    rep.add_row({0.5, 1.0 / 3.0});
    rep.add_row({0.25, std::numeric_limits<double>::quiet_NaN()});
    return rep;
}

}  // namespace

TEST_CASE("csv uses a header row, dot decimals, divergent tags") {
    Report rep = sample_report();
    const std::string csv = rep.to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,value");
    std::getline(in, line);
    CHECK(line == "0.5,0.3333333333333333");
    std::getline(in, line);
    CHECK(line == "0.25,divergent");
}

TEST_CASE("scalar-only reports serialize as key,value pairs") {
    Report rep = sample_report();
    rep.columns.clear();
    rep.rows.clear();
    const std::string csv = rep.to_csv();
    CHECK(csv.find("quantity,value") == 0);
    CHECK(csv.find("alpha,1.5") != std::string::npos);
    CHECK(csv.find("beta,divergent") != std::string::npos);
}

TEST_CASE("json has sorted keys, tagged non-finite values, full structure") {
    Report rep = sample_report();
    const auto j = rep.to_json();
    CHECK(j["experiment"] == "unit-sample");
    CHECK(j["scalars"]["alpha"] == 1.5);
    CHECK(j["scalars"]["beta"] == "divergent");
    CHECK(j["fits"]["line"]["slope"] == -1.0);
    CHECK(j["rows"][1][1] == "divergent");

    const std::string dump = j.dump(2);
    CHECK(dump.find("\"experiment\"") < dump.find("\"params\""));
    CHECK(dump.find("\"params\"") < dump.find("\"scalars\""));
}

TEST_CASE("round-trip double formatting") {
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(2.0) == "2");
    CHECK(std::stod(format_double(pi)) == pi);
    CHECK(std::stod(format_double(1e-300)) == 1e-300);
}

TEST_CASE("write emits both files under the experiment stem") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "sphmax_report_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    Report rep = sample_report();
    rep.write(dir.string());
    CHECK(fs::exists(dir / "unit-sample.json"));
    CHECK(fs::exists(dir / "unit-sample.csv"));
    std::ifstream jf(dir / "unit-sample.json");
    std::stringstream buf;
    buf << jf.rdbuf();
    CHECK(buf.str() == rep.to_json().dump(2) + "\n");
    fs::remove_all(dir);
}
