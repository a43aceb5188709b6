#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "icost_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (workdir() / name).string(); }

int run(const std::string& args) {
  const std::string cmd = std::string(ICOST_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  REQUIRE(out.good());
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

// Shared 40-row dataset most cases reuse; generated once through the CLI.
const std::string& data_csv() {
  static const std::string path = [] {
    std::string p = path_of("data.csv");
    REQUIRE(run("synth --seed 7 --majority 30 --minority 10 --overlap 0.4 --out " + p) == 0);
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("synth writes a deterministic csv") {
  std::string again = path_of("data_again.csv");
  CHECK(run("synth --seed 7 --majority 30 --minority 10 --overlap 0.4 --out " + again) == 0);
  CHECK(slurp(again) == slurp(data_csv()));

  std::vector<std::string> lines = lines_of(slurp(data_csv()));
  REQUIRE(lines.size() == 41);
  CHECK(lines[0] == "f0,f1,class");
  std::size_t minority = 0;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].rfind(",minority") == lines[i].size() - 9) ++minority;
  CHECK(minority == 10);

  CHECK(run("synth --overlap 2 --out " + path_of("bad.csv")) == 2);
  CHECK(run("synth --generator moons --out " + path_of("bad.csv")) == 2);
}

TEST_CASE("train then predict round trip") {
  std::string model = path_of("model.json");
  CHECK(run("train " + data_csv() + " --learner logreg --seed 3 --out " + model) == 0);

  json doc = json::parse(slurp(model));
  CHECK(doc.at("format") == "icost-model");
  CHECK(doc.at("version") == 1);
  CHECK(doc.at("model").at("kind") == "logreg");
  CHECK(doc.at("cost").at("algorithm") == "neighborhood");

  std::string preds = path_of("preds.csv");
  CHECK(run("predict --model " + model + " " + data_csv() + " --out " + preds) == 0);
  std::vector<std::string> lines = lines_of(slurp(preds));
  REQUIRE(lines.size() == 41);
  CHECK(lines[0] == "prediction,score");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const bool maj = lines[i].rfind("majority,", 0) == 0;
    const bool min = lines[i].rfind("minority,", 0) == 0;
    CHECK((maj || min));
  }

  // Same model, same input, same bytes.
  std::string preds2 = path_of("preds2.csv");
  CHECK(run("predict --model " + model + " " + data_csv() + " --out " + preds2) == 0);
  CHECK(slurp(preds2) == slurp(preds));
}

TEST_CASE("predict rejects rows that do not match the model") {
  std::string model = path_of("model.json");  // written by the previous case
  REQUIRE(fs::exists(model));

  std::string wide = path_of("wide.csv");
  spit(wide, "a,b,c,d,class\n1,2,3,4,majority\n");
  CHECK(run("predict --model " + model + " " + wide) == 2);

  CHECK(run("predict --model " + path_of("absent.json") + " " + data_csv()) == 2);
  CHECK(run("predict " + data_csv()) == 2);  // --model is required
}

TEST_CASE("evaluate writes a deterministic report and summary") {
  std::string report = path_of("report.json");
  std::string summary = path_of("summary.csv");
  CHECK(run("evaluate " + data_csv() + " --folds 2 --repeats 2 --seed 5 --out " + report +
            " --summary " + summary) == 0);

  json doc = json::parse(slurp(report));
  CHECK(doc.at("folds").size() == 4);
  CHECK(doc.at("dataset").at("n") == 40);
  CHECK(doc.at("dataset").at("positive") == "minority");
  CHECK(doc.at("plan").at("seed") == 5);

  std::vector<std::string> lines = lines_of(slurp(summary));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("dataset,learner,algorithm,type,", 0) == 0);

  std::string report2 = path_of("report2.json");
  CHECK(run("evaluate " + data_csv() + " --folds 2 --repeats 2 --seed 5 --out " + report2 +
            " --summary " + path_of("summary2.csv")) == 0);
  CHECK(slurp(report2) == slurp(report));
}

TEST_CASE("a config file provides the base and flags override it") {
  std::string plan = path_of("plan.json");
  spit(plan, json{{"dataset", data_csv()},
                  {"n_folds", 2},
                  {"n_repeats", 1},
                  {"seed", 9},
                  {"learner", json{{"kind", "svm"}, {"epochs", 30}}}}
                 .dump());

  std::string r1 = path_of("cfg1.json");
  CHECK(run("evaluate --config " + plan + " --out " + r1 + " --summary ''") == 0);
  json doc1 = json::parse(slurp(r1));
  CHECK(doc1.at("plan").at("seed") == 9);
  CHECK(doc1.at("plan").at("learner").at("kind") == "svm");
  CHECK(doc1.at("plan").at("learner").at("epochs") == 30);
  CHECK(doc1.at("folds").size() == 2);

  std::string r2 = path_of("cfg2.json");
  CHECK(run("evaluate --config " + plan + " --repeats 2 --seed 10 --out " + r2 +
            " --summary ''") == 0);
  json doc2 = json::parse(slurp(r2));
  CHECK(doc2.at("plan").at("seed") == 10);
  CHECK(doc2.at("plan").at("n_repeats") == 2);
  CHECK(doc2.at("plan").at("learner").at("kind") == "svm");
  CHECK(doc2.at("folds").size() == 4);

  std::string bad = path_of("bad_plan.json");
  spit(bad, R"({"folds": 2})");
  CHECK(run("evaluate --config " + bad + " --out " + path_of("never.json")) == 2);
}

TEST_CASE("gridsearch reports every tried cell") {
  std::string report = path_of("grid.json");
  std::string summary = path_of("grid.csv");
  CHECK(run("gridsearch " + data_csv() + " --algorithm original --folds 2 --repeats 1 --seed 4" +
            " --out " + report + " --summary " + summary) == 0);

  json doc = json::parse(slurp(report));
  CHECK(doc.at("cells").size() == 5);
  CHECK(doc.at("ir") == 3.0);
  CHECK(doc.at("best_index").get<std::size_t>() < 5);
  CHECK(lines_of(slurp(summary)).size() == 6);

  CHECK(run("gridsearch " + data_csv() + " --type gen --out " + path_of("never.json")) == 2);
}

TEST_CASE("analyze summarizes profiles, costs, and weights") {
  std::string out = path_of("analysis.json");
  CHECK(run("analyze " + data_csv() + " --out " + out) == 0);
  json doc = json::parse(slurp(out));
  CHECK(doc.at("algorithm") == "neighborhood");
  CHECK(doc.at("ir") == 3.0);
  CHECK(doc.at("positive") == "minority");
  std::size_t total = doc.at("categories").at("pure").get<std::size_t>() +
                      doc.at("categories").at("safe").get<std::size_t>() +
                      doc.at("categories").at("border").get<std::size_t>();
  CHECK(total == 10);  // one profile per minority instance
  CHECK(doc.at("resolved_costs").at("cfb") == 3.0);
  CHECK(doc.at("weights").at("min") == 1.0);

  std::string mst_out = path_of("analysis_mst.json");
  CHECK(run("analyze " + data_csv() + " --algorithm mst --out " + mst_out) == 0);
  json mst = json::parse(slurp(mst_out));
  CHECK(mst.contains("mst_total_weight"));
  CHECK(mst.at("resolved_costs").at("cfl") == 3.0);
  CHECK(mst.at("resolved_costs").at("cfn") == 1.5);
}

TEST_CASE("exit codes separate validation failures from success") {
  CHECK(run("--help") == 0);
  CHECK(run("") == 2);                                       // a subcommand is required
  CHECK(run("evaluate " + path_of("absent.csv")) == 2);      // missing input file
  CHECK(run("evaluate " + data_csv() + " --algorithm dbscan") == 2);
  CHECK(run("evaluate " + data_csv() + " --learner mlp") == 2);
  CHECK(run("evaluate " + data_csv() + " --cost-factor 1,2,4 --out " + path_of("x.json")) == 2);
  CHECK(run("evaluate " + data_csv() + " --folds 1 --out " + path_of("x.json")) == 2);
  CHECK(run("synth --bogus-flag 1") == 2);
}

TEST_CASE("named cost factors flow through to the saved model") {
  std::string model = path_of("named_model.json");
  CHECK(run("train " + data_csv() + " --cost-factor '{\"cfb\":4,\"cfs\":2,\"cfp\":1}' --out " +
            model) == 0);
  json doc = json::parse(slurp(model));
  CHECK(doc.at("cost").at("cost_factor").at("cfb") == 4.0);
  CHECK(doc.at("cost").at("cost_factor").at("cfs") == 2.0);
  CHECK(doc.at("cost").at("cost_factor").at("cfp") == 1.0);
}
