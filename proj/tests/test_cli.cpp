#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + CATAXI_CLI + "' " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cataxi_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("datasets lists the built-in tables") {
  const Run r = run("datasets");
  CHECK(r.status == 0);
  CHECK(r.out.find("ws\t12x8") != std::string::npos);
  CHECK(r.out.find("rodent\t28x9") != std::string::npos);
}

TEST_CASE("analyze brand table as json") {
  const Run r = run("analyze --dataset ws --method both -k 4");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["tca"]["dimensions"].size() == 4);
  CHECK(std::abs(doc["tca"]["dimensions"][1]["qsr"]["overall"].get<double>() - 0.7299) < 1e-4);
  CHECK(std::abs(doc["ca"]["dimensions"][0]["sigma"].get<double>() - 0.0910) < 5e-5);
}

TEST_CASE("analyze text output and output file") {
  const fs::path out = scratch("report.txt");
  const Run r = run("analyze --dataset ws --format text -o '" + out.string() + "'");
  CHECK(r.status == 0);
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("(100.00, 52.05)") != std::string::npos);
  CHECK(text.find("72.99") != std::string::npos);
}

TEST_CASE("analyze rodent flags quasi blocks") {
  const Run r = run("analyze --dataset rodent --method ca -k 2");
  REQUIRE(r.status == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(doc["block_structure"]["sigma1"].get<double>() - 0.864) < 0.001);
  CHECK(doc["block_structure"]["quasi_two_blocks"] == true);
}

TEST_CASE("input errors exit with code 2") {
  const fs::path bad = scratch("zero_col.csv");
  write(bad, ",x,y,z\na,1,0,2\nb,3,0,1\n");
  Run r = run("analyze '" + bad.string() + "'");
  CHECK(r.status == 2);
  CHECK(r.out.find("ZeroMarginal") != std::string::npos);
  CHECK(r.out.find("'y'") != std::string::npos);

  r = run("analyze");
  CHECK(r.status == 2);
  r = run("analyze --dataset nope");
  CHECK(r.status == 2);
  r = run("residuals --dataset ws --step 12");
  CHECK(r.status == 2);
  CHECK(r.out.find("IndexOutOfRange") != std::string::npos);
  r = run("analyze --dataset ws --strategy enumeration", "CA_MAX_ENUM=4");
  CHECK(r.status == 2);
  CHECK(r.out.find("EnumerationTooLarge") != std::string::npos);
  r = run("analyze --dataset ws", "CA_MAX_ENUM=zero");
  CHECK(r.status == 2);
  r = run("analyze --dataset ws --method tca -k 2", "CA_MAX_ENUM=4");
  CHECK(r.status == 0);
}

TEST_CASE("user csv, with and without header") {
  const fs::path with = scratch("t.csv");
  write(with, ",a,b,c\nx,5,1,0\ny,1,4,2\nz,0,2,6\n");
  CHECK(run("analyze '" + with.string() + "' -k 2").status == 0);
  const fs::path without = scratch("t_noheader.csv");
  write(without, "5,1,0\n1,4,2\n0,2,6\n");
  const Run r = run("analyze '" + without.string() + "' --no-header -k 1");
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["table"]["row_labels"][0] == "R1");
}

TEST_CASE("residual dumps") {
  Run r = run("residuals --dataset ws --method tcov --step 1 --scale 1e4 --digits 0");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("Nokia,60,5,-12,-12,-11,8,-12,-27,129") != std::string::npos);
  CHECK(r.out.find("b1,194,44,-4,-10,-18,-23,-86,-98,") != std::string::npos);
  r = run("residuals --dataset ws --method tca-density --step 1 --scale 100 --digits 0 --margin-digits 1");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("Nokia,39,2,-6,-6,-6,4,-7,-34,9.3") != std::string::npos);
  r = run("residuals --dataset ws --method tcov --step 0 --scale 1e4 --digits 0");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("label,innovative,leader") == 0);
}

TEST_CASE("map export") {
  const fs::path dir = scratch("maps");
  fs::remove_all(dir);
  Run r = run("export-maps --dataset ws --out-dir '" + dir.string() + "'");
  REQUIRE(r.status == 0);
  for (const char* f : {"ca-map", "tca-map", "tcov-map", "ca-contrib", "ca-contrib-squared"}) {
    CHECK(fs::exists(dir / (std::string(f) + ".csv")));
  }
  std::ifstream in(dir / "tcov-map.csv");
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "label,kind,dim1,dim2");
  bool nokia = false;
  while (std::getline(in, line)) {
    if (line.rfind("Nokia,row,", 0) == 0) {
      nokia = true;
      const auto c1 = line.find(',', 10);
      const double x = std::stod(line.substr(10, c1 - 10));
      const double y = std::stod(line.substr(c1 + 1));
      CHECK(std::round(x * 1e4) == 129);
      CHECK(std::round(y * 1e4) == 65);
    }
  }
  CHECK(nokia);

  CHECK(run("export-maps --dataset ws -k 1 --out-dir '" + dir.string() + "'").status == 2);
  const fs::path indep = scratch("indep.csv");
  write(indep, ",a,b\nx,1,2\ny,2,4\n");
  CHECK(run("export-maps '" + indep.string() + "' --out-dir '" + dir.string() + "'").status == 2);
}

TEST_CASE("seriate") {
  Run r = run("seriate --dataset ws --by marginals");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("label,trusted,efficient,rapport,leader,relevant,solution,innovative,essential") == 0);
  CHECK(r.out.find("row-wise Nokia,rapport -> leader: 318 < 350") != std::string::npos);
  CHECK(r.out.find("violations") != std::string::npos);

  const fs::path sorted = scratch("robinson.csv");
  write(sorted, ",a,b,c\nx,9,5,3\ny,5,4,2\nz,3,2,1\n");
  r = run("seriate '" + sorted.string() + "'");
  CHECK(r.status == 0);
  CHECK(r.out.find("\n0 violations") != std::string::npos);

  r = run("seriate --dataset rodent --by axis");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("label,rod1,rod2,rod6,rod8,rod3,rod5,rod9,rod4,rod7\n24,") == 0);
}

TEST_CASE("22x15 binary table runs end to end") {
  std::string text = "actor";
  for (int j = 0; j < 15; ++j) text += ",e" + std::to_string(j + 1);
  text += "\n";
  for (int i = 0; i < 22; ++i) {
    text += "w" + std::to_string(i + 1);
    // each row attends a contiguous run of events so every margin is positive
    for (int j = 0; j < 15; ++j) text += (j >= i % 11 && j < i % 11 + 5) ? ",1" : ",0";
    text += "\n";
  }
  const fs::path p = scratch("binary.csv");
  write(p, text);
  const Run r = run("analyze '" + p.string() + "' --method both -k 3");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["tca"]["dimensions"].size() == 3);
  CHECK(j["ca"]["dimensions"].size() == 3);
  CHECK(run("analyze '" + p.string() + "' --format text -k 2").status == 0);
}
