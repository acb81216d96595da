// polyrank: enumeration, analysis and sampling of complete eigenstructures of
// rectangular matrix polynomials with bounded rank.
//
// Exit codes: 0 success, 2 usage / input error, 3 numerical diagnostic failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyrank/polyrank.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
  int m = 0, n = 0, r = 0, d = 1, a = -1;
  int trials = 100;
  std::uint64_t seed = 42;
  double tolValue = 1e-8;
  double delta = 1e-6;
  std::string splitSpec;
  bool fullRank = false;
  bool asJson = false;
  bool asCsv = false;
  std::string outPath;
};

polyrank::ToleranceProfile makeTol(const CommonOpts& o) {
  polyrank::ToleranceProfile tol;
  tol.relRankTol = o.tolValue;
  return tol;
}

std::optional<std::vector<int>> parseSplit(const std::string& spec, int r, int d, int rdMinusA) {
  if (spec.empty()) return std::nullopt;
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("--split: expected comma-separated integers");
    }
  }
  if (out.size() == 1 && r != 1) {
    // single integer shorthand: total factor degree, balanced across columns
    return polyrank::balancedComposition(out.front(), r, d);
  }
  (void)rdMinusA;
  return out;
}

void emit(const std::string& text, const std::string& outPath) {
  std::cout << text;
  if (!outPath.empty()) polyrank::writeTextFile(outPath, text);
}

std::string enumerateTable(const std::vector<polyrank::GenericStructure>& structures) {
  std::ostringstream os;
  os << "a\tright\tleft\tcodim\n";
  for (const auto& K : structures)
    os << K.a << "\t" << polyrank::indexListToString(K.signature.rightMinimalIndices) << "\t"
       << polyrank::indexListToString(K.signature.leftMinimalIndices) << "\t" << K.codim << "\n";
  return os.str();
}

int cmdEnumerate(const CommonOpts& o) {
  if (o.fullRank) {
    const auto K = polyrank::genericFullRank(o.m, o.n, o.d);
    if (o.asJson) {
      emit(polyrank::toJson(K).dump(2) + "\n", o.outPath);
    } else {
      std::ostringstream os;
      os << "right\tleft\tnote\n";
      os << polyrank::indexListToString(K.signature.rightMinimalIndices) << "\t"
         << polyrank::indexListToString(K.signature.leftMinimalIndices) << "\t";
      if (K.squareRegular)
        os << "regular, " << K.n * K.d << " simple eigenvalues\n";
      else
        os << "full rank " << K.signature.rank << "\n";
      emit(os.str(), o.outPath);
    }
    return kExitOk;
  }
  const auto structures = polyrank::genericStructures(o.m, o.n, o.r, o.d);
  if (o.asJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& K : structures) j.push_back(polyrank::toJson(K));
    emit(nlohmann::json{{"m", o.m}, {"n", o.n}, {"r", o.r}, {"d", o.d}, {"structures", j}}.dump(2) +
             "\n",
         o.outPath);
  } else {
    emit(enumerateTable(structures), o.outPath);
  }
  return kExitOk;
}

int cmdCodim(const CommonOpts& o) {
  if (o.a >= 0) {
    const long c = polyrank::genericCodimension(o.m, o.n, o.r, o.d, o.a);
    if (o.asJson)
      emit(nlohmann::json{{"a", o.a}, {"codim", c}}.dump(2) + "\n", o.outPath);
    else
      emit(std::to_string(c) + "\n", o.outPath);
    return kExitOk;
  }
  std::ostringstream os;
  nlohmann::json rows = nlohmann::json::array();
  os << "a\tcodim\n";
  for (int a = 0; a <= o.r * o.d; ++a) {
    const long c = polyrank::genericCodimension(o.m, o.n, o.r, o.d, a);
    os << a << "\t" << c << "\n";
    rows.push_back({{"a", a}, {"codim", c}});
  }
  if (o.asJson)
    emit(rows.dump(2) + "\n", o.outPath);
  else
    emit(os.str(), o.outPath);
  return kExitOk;
}

int cmdAnalyze(const CommonOpts& o, const std::string& path) {
  const polyrank::MatrixPolynomial P = polyrank::readPolynomialFile(path);
  const auto sig = polyrank::completeEigenstructure(P, makeTol(o), o.seed);
  emit(polyrank::toJson(sig).dump(2) + "\n", o.outPath);
  return kExitOk;
}

int cmdRealize(const CommonOpts& o) {
  const auto tol = makeTol(o);
  if (o.fullRank) {
    const auto K = polyrank::genericFullRank(o.m, o.n, o.d);
    const auto P = polyrank::realize(K, o.seed, tol);
    emit(polyrank::toJson(P).dump(2) + "\n", o.outPath);
    std::cerr << "verified full-rank generic structure\n";
    return kExitOk;
  }
  auto split = parseSplit(o.splitSpec, o.r, o.d, 0);
  int a = o.a;
  if (a < 0) {
    if (!split.has_value())
      throw std::invalid_argument("realize: need -a or --split to pick a structure");
    int sum = 0;
    for (int v : *split) sum += v;
    a = o.r * o.d - sum;
  }
  const auto K = polyrank::genericStructure(o.m, o.n, o.r, o.d, a);
  const auto P = polyrank::realize(K, o.seed, tol, split);
  emit(polyrank::toJson(P).dump(2) + "\n", o.outPath);
  std::cerr << "verified structure a=" << K.a << " right "
            << polyrank::indexListToString(K.signature.rightMinimalIndices) << " left "
            << polyrank::indexListToString(K.signature.leftMinimalIndices) << "\n";
  return kExitOk;
}

int cmdSweep(const CommonOpts& o) {
  polyrank::SweepConfig config;
  config.m = o.m;
  config.n = o.n;
  config.r = o.r;
  config.d = o.d;
  config.trials = o.trials;
  config.seed = o.seed;
  config.fullRank = o.fullRank;
  config.tol = makeTol(o);
  if (o.a >= 0 && o.splitSpec.empty() && !o.fullRank)
    config.split = polyrank::balancedComposition(o.r * o.d - o.a, o.r, o.d);
  else
    config.split = parseSplit(o.splitSpec, o.r, o.d, 0);
  const auto report = polyrank::runSweep(config);
  if (o.asCsv) {
    emit(polyrank::sweepCsv(report), o.outPath);
  } else if (o.asJson) {
    emit(polyrank::sweepJson(report).dump(2) + "\n", o.outPath);
  } else {
    std::ostringstream os;
    os << "trials " << config.trials << ", histogram:";
    for (const auto& [a, count] : report.histogram) os << " a=" << a << ":" << count;
    os << ", unmatched " << report.unmatched << ", failures " << report.failures.size() << "\n";
    emit(os.str(), o.outPath);
  }
  return kExitOk;
}

int cmdPerturb(const CommonOpts& o) {
  polyrank::PerturbConfig config;
  config.m = o.m;
  config.n = o.n;
  config.d = o.d;
  config.delta = o.delta;
  config.trials = o.trials;
  config.seed = o.seed;
  config.tol = makeTol(o);
  const auto report = polyrank::runPerturb(config);
  if (report.deltaAboveThreshold)
    std::cerr << "warning: delta " << config.delta << " is not below the companion recovery "
              << "threshold " << report.threshold << "\n";
  if (o.asJson) {
    emit(polyrank::perturbJson(report).dump(2) + "\n", o.outPath);
  } else {
    std::ostringstream os;
    os << "trials " << config.trials << ", delta " << config.delta << ", max ratio "
       << report.maxRatio << ", bound " << report.bound << ", pivot failures "
       << report.pivotFailures << "\n";
    emit(os.str(), o.outPath);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic eigenstructures of bounded-rank matrix polynomials"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string analyzePath;

  auto addShape = [&](CLI::App* cmd, bool needRank) {
    cmd->add_option("-m", o.m, "rows")->required();
    cmd->add_option("-n", o.n, "columns")->required();
    auto* ropt = cmd->add_option("-r", o.r, "normal rank");
    if (needRank) ropt->required();
    cmd->add_option("-d,--grade", o.d, "grade")->required();
  };
  auto addSeed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "RNG seed")->envname("POLYRANK_SEED");
  };
  auto addTol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tolValue, "relative rank tolerance");
  };
  auto addOutput = [&](CLI::App* cmd, bool withCsv) {
    cmd->add_flag("--json", o.asJson, "JSON output");
    if (withCsv) cmd->add_flag("--csv", o.asCsv, "CSV output");
    cmd->add_option("--out", o.outPath, "also write the output to PATH");
  };

  auto* enumerateCmd = app.add_subcommand("enumerate", "list the generic structures");
  addShape(enumerateCmd, false);
  enumerateCmd->add_flag("--full-rank", o.fullRank, "full-rank family instead of bounded rank");
  addOutput(enumerateCmd, false);

  auto* codimCmd = app.add_subcommand("codim", "orbit closure codimensions");
  addShape(codimCmd, true);
  codimCmd->add_option("-a", o.a, "structure index (all if omitted)");
  addOutput(codimCmd, false);

  auto* analyzeCmd = app.add_subcommand("analyze", "eigenstructure of a polynomial JSON file");
  analyzeCmd->add_option("path", analyzePath, "polynomial JSON file")->required();
  addSeed(analyzeCmd);
  addTol(analyzeCmd);
  addOutput(analyzeCmd, false);

  auto* realizeCmd = app.add_subcommand("realize", "sample a polynomial with a generic structure");
  addShape(realizeCmd, false);
  realizeCmd->add_option("-a", o.a, "structure index");
  realizeCmd->add_option("--split", o.splitSpec,
                         "factor column degrees, comma separated (sum rd-a)");
  realizeCmd->add_flag("--full-rank", o.fullRank, "realize the full-rank family");
  addSeed(realizeCmd);
  addTol(realizeCmd);
  addOutput(realizeCmd, false);

  auto* sweepCmd = app.add_subcommand("sweep", "classify random bounded-rank samples");
  addShape(sweepCmd, false);
  sweepCmd->add_option("-a", o.a, "target structure (balanced split)");
  sweepCmd->add_option("--split", o.splitSpec, "factor column degrees, comma separated");
  sweepCmd->add_flag("--full-rank", o.fullRank, "sweep dense full-rank samples");
  sweepCmd->add_option("--trials", o.trials, "number of trials");
  addSeed(sweepCmd);
  addTol(sweepCmd);
  addOutput(sweepCmd, true);

  auto* perturbCmd = app.add_subcommand("perturb", "companion recovery perturbation study");
  perturbCmd->add_option("-m", o.m, "rows")->required();
  perturbCmd->add_option("-n", o.n, "columns")->required();
  perturbCmd->add_option("-d,--grade", o.d, "grade")->required();
  perturbCmd->add_option("--delta", o.delta, "perturbation size");
  perturbCmd->add_option("--trials", o.trials, "number of trials");
  addSeed(perturbCmd);
  addTol(perturbCmd);
  addOutput(perturbCmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (enumerateCmd->parsed()) return cmdEnumerate(o);
    if (codimCmd->parsed()) return cmdCodim(o);
    if (analyzeCmd->parsed()) return cmdAnalyze(o, analyzePath);
    if (realizeCmd->parsed()) return cmdRealize(o);
    if (sweepCmd->parsed()) return cmdSweep(o);
    if (perturbCmd->parsed()) return cmdPerturb(o);
  } catch (const polyrank::NumericalDiagnosticError& e) {
    std::cerr << "numerical diagnostic: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const polyrank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
