// toricfan: validate fans, decide rational ellipticity, emit Cox quotient
// presentations, and generate named example fans.
//
// Exit codes: 0 ok, 1 parse error, 2 invalid fan, 3 classification
// precondition failed, 4 bad generator spec.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/generators.hpp"
#include "toric/io.hpp"

namespace fs = std::filesystem;
using namespace toric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitGenerator = 4;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot write '" << output_path << "'\n";
    std::exit(kExitParse);
  }
  out << text;
}

int exit_code_for(const ToricError& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
      return kExitParse;
    case ErrorKind::PreconditionFailed:
    case ErrorKind::NotComplete:
    case ErrorKind::NotElliptic:
      return kExitPrecondition;
    case ErrorKind::InvalidDimension:
    case ErrorKind::InvalidWeights:
    case ErrorKind::InvalidSpec:
    case ErrorKind::ConeNotFound:
      return kExitGenerator;
    default:
      return kExitInvalid;
  }
}

int cmd_validate(const std::string& input, const std::string& output,
                 const std::string& format) {
  Fan fan;
  try {
    fan = parse_fan_file(input);
  } catch (const ToricError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  ValidationReport rep = validate_report(fan);
  emit(format == "structured" ? validation_json(rep) : validation_text(rep),
       output);
  return rep.valid() && rep.complete ? kExitOk : kExitInvalid;
}

int cmd_classify(const std::string& input, const std::string& output,
                 const std::string& format) {
  Fan fan;
  try {
    fan = parse_fan_file(input);
  } catch (const ToricError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  try {
    ClassificationReport rep = build_classification_report(fan);
    emit(format == "structured" ? report_json(rep) : report_text(rep), output);
    return kExitOk;
  } catch (const ToricError& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  }
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    // Allow "label=value" sugar for single entries.
    std::size_t eq = item.find('=');
    std::string val = eq == std::string::npos ? item : item.substr(eq + 1);
    std::size_t pos = 0;
    long long x = std::stoll(val, &pos);
    if (pos != val.size())
      throw ToricError(ErrorKind::InvalidSpec, "bad integer '" + item + "'");
    out.push_back(x);
  }
  return out;
}

BottTowerSpec parse_bott_spec(const std::string& s) {
  BottTowerSpec spec;
  std::istringstream is(s);
  std::string stage_str;
  std::size_t earlier = 0;
  while (std::getline(is, stage_str, ';')) {
    BottStage stage;
    std::size_t colon = stage_str.find(':');
    std::string dim_str = stage_str.substr(0, colon);
    std::size_t pos = 0;
    long long d = std::stoll(dim_str, &pos);
    if (pos != dim_str.size() || d < 1)
      throw ToricError(ErrorKind::InvalidSpec,
                       "bad stage dimension '" + dim_str + "'");
    stage.fiber_dim = static_cast<std::size_t>(d);
    if (colon != std::string::npos) {
      std::istringstream bs(stage_str.substr(colon + 1));
      std::string vec_str;
      while (std::getline(bs, vec_str, '|')) {
        auto vec = parse_int_list(vec_str);
        if (vec.size() != earlier)
          throw ToricError(ErrorKind::InvalidSpec,
                           "degree vector '" + vec_str + "' needs " +
                               std::to_string(earlier) + " entries");
        stage.degrees.push_back(std::move(vec));
      }
      if (stage.degrees.size() != stage.fiber_dim)
        throw ToricError(ErrorKind::InvalidSpec,
                         "expected " + std::to_string(stage.fiber_dim) +
                             " degree vectors in stage '" + stage_str + "'");
    }
    earlier += stage.fiber_dim;
    spec.stages.push_back(std::move(stage));
  }
  return spec;
}

int cmd_generate(const std::string& kind,
                 const std::vector<std::string>& params,
                 const std::string& output) {
  try {
    Fan fan;
    auto need = [&](std::size_t n) {
      if (params.size() != n)
        throw ToricError(ErrorKind::InvalidSpec,
                         kind + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "projective") {
      need(1);
      long long n = std::stoll(params[0]);
      if (n < 0) throw ToricError(ErrorKind::InvalidDimension, "negative dim");
      fan = projective_space(static_cast<std::size_t>(n));
    } else if (kind == "weighted") {
      need(1);
      fan = weighted_projective(parse_int_list(params[0]));
    } else if (kind == "hirzebruch") {
      need(1);
      fan = hirzebruch(std::stoll(params[0]));
    } else if (kind == "product") {
      need(2);
      fan = product(parse_fan_file(params[0]), parse_fan_file(params[1]));
    } else if (kind == "bott") {
      need(1);
      fan = generalized_bott_fan(parse_bott_spec(params[0]));
    } else if (kind == "stardiv") {
      need(2);
      Fan base = parse_fan_file(params[0]);
      auto idx = parse_int_list(params[1]);
      RaySet cone;
      for (long long i : idx) {
        if (i < 0) throw ToricError(ErrorKind::ConeNotFound, "negative index");
        cone.push_back(static_cast<std::size_t>(i));
      }
      std::sort(cone.begin(), cone.end());
      fan = star_subdivision(ValidatedFan::validate(base), cone);
    } else {
      throw ToricError(ErrorKind::InvalidSpec, "unknown kind '" + kind + "'");
    }
    emit(write_fan_document(fan), output);
    return kExitOk;
  } catch (const ToricError& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitParse : kExitGenerator;
  } catch (const std::exception& e) {
    std::cerr << "InvalidSpec: " << e.what() << "\n";
    return kExitGenerator;
  }
}

int cmd_batch(const std::string& dir, const std::string& output,
              const std::string& format) {
  std::vector<fs::path> files;
  try {
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path());
  } catch (const fs::filesystem_error& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }
  std::sort(files.begin(), files.end());

  std::ostringstream os;
  if (format != "structured")
    os << "file\tstatus\telliptic\tblocks\n";
  nlohmann::json summary = nlohmann::json::array();
  for (const fs::path& p : files) {
    std::string status = "ok";
    std::string elliptic = "-";
    std::string blocks = "-";
    try {
      Fan fan = parse_fan_file(p.string());
      ClassificationReport rep = build_classification_report(fan);
      elliptic = rep.classification->elliptic ? "yes" : "no";
      if (rep.classification->elliptic) {
        std::ostringstream bs;
        for (std::size_t i = 0; i < rep.classification->block_dims.size(); ++i)
          bs << (i ? "," : "") << rep.classification->block_dims[i];
        blocks = bs.str();
      }
    } catch (const ToricError& e) {
      switch (exit_code_for(e)) {
        case kExitParse: status = "parse-error"; break;
        case kExitPrecondition: status = "precondition"; break;
        default: status = "invalid"; break;
      }
    }
    if (format == "structured") {
      nlohmann::json row;
      row["file"] = p.filename().string();
      row["status"] = status;
      row["elliptic"] = elliptic;
      row["block_dims"] = blocks;
      summary.push_back(row);
    } else {
      os << p.filename().string() << "\t" << status << "\t" << elliptic << "\t"
         << blocks << "\n";
    }
  }
  emit(format == "structured" ? summary.dump(2) + "\n" : os.str(), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational ellipticity classifier for simplicial toric fans"};
  app.require_subcommand(1);

  std::string input, output, format = "text", dir, kind;
  std::vector<std::string> params;

  auto add_io = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("--input,-i", input, "fan document")->required();
    cmd->add_option("--output,-o", output, "write report to file");
    cmd->add_option("--format,-f", format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "check fan axioms");
  add_io(validate, true);
  CLI::App* classify = app.add_subcommand("classify", "full classification");
  add_io(classify, true);
  CLI::App* generate = app.add_subcommand("generate", "emit a named fan");
  generate->add_option("kind", kind,
                       "projective|weighted|product|bott|hirzebruch|stardiv")
      ->required();
  generate->add_option("params", params, "generator parameters");
  add_io(generate, false);
  CLI::App* batch = app.add_subcommand("batch", "classify a directory");
  batch->add_option("dir", dir, "directory of fan documents")->required();
  add_io(batch, false);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(input, output, format);
  if (classify->parsed()) return cmd_classify(input, output, format);
  if (generate->parsed()) return cmd_generate(kind, params, output);
  return cmd_batch(dir, output, format);
}
