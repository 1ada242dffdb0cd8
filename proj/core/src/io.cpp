#include "toric/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace toric {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw ToricError(ErrorKind::ParseError,
                   "line " + std::to_string(line) + ": " + msg);
}

Int parse_int(const std::string& tok, std::size_t line) {
  try {
    return Int(tok);
  } catch (const std::exception&) {
    parse_fail(line, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

Fan parse_fan_document(std::istream& in) {
  Fan fan;
  bool saw_dim = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "name") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t start = rest.find_first_not_of(" \t");
      fan.name = start == std::string::npos ? "" : rest.substr(start);
    } else if (key == "dim") {
      long long d;
      if (!(ls >> d) || d < 0) parse_fail(lineno, "dim needs a nonnegative integer");
      fan.dim = static_cast<std::size_t>(d);
      saw_dim = true;
    } else if (key == "ray") {
      if (!saw_dim) parse_fail(lineno, "ray before dim");
      IntVec v;
      std::string tok;
      while (ls >> tok) v.push_back(parse_int(tok, lineno));
      if (v.size() != fan.dim)
        parse_fail(lineno, "ray has " + std::to_string(v.size()) +
                               " entries, expected " + std::to_string(fan.dim));
      fan.rays.push_back(std::move(v));
    } else if (key == "cone") {
      RaySet c;
      long long i;
      while (ls >> i) {
        if (i < 0) parse_fail(lineno, "negative ray index");
        c.push_back(static_cast<std::size_t>(i));
      }
      if (!ls.eof()) parse_fail(lineno, "cone indices must be integers");
      if (c.empty()) parse_fail(lineno, "empty cone");
      fan.max_cones.push_back(std::move(c));
    } else {
      parse_fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!saw_dim) parse_fail(lineno, "missing dim");
  if (fan.rays.empty()) parse_fail(lineno, "missing rays");
  if (fan.max_cones.empty()) parse_fail(lineno, "missing cones");
  return fan;
}

Fan parse_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ToricError(ErrorKind::ParseError, "cannot open '" + path + "'");
  return parse_fan_document(in);
}

std::string write_fan_document(const Fan& fan) {
  std::ostringstream os;
  if (!fan.name.empty()) os << "name " << fan.name << "\n";
  os << "dim " << fan.dim << "\n";
  for (const IntVec& v : fan.rays) {
    os << "ray";
    for (const Int& x : v) os << " " << x;
    os << "\n";
  }
  for (const RaySet& c : fan.max_cones) {
    os << "cone";
    for (RayIndex i : c) os << " " << i;
    os << "\n";
  }
  return os.str();
}

ClassificationReport build_classification_report(const Fan& fan) {
  ClassificationReport rep;
  rep.name = fan.name;
  rep.validation = validate_report(fan);
  if (!rep.validation.valid())
    throw ToricError(ErrorKind::PreconditionFailed,
                     rep.validation.failures.empty()
                         ? "fan is invalid"
                         : rep.validation.failures.front());
  ValidatedFan vf = ValidatedFan::validate(fan);
  rep.classification = classify(vf);  // throws PreconditionFailed if needed
  rep.betti = betti_numbers(vf);
  if (rep.classification->elliptic) {
    rep.quotient = quotient_presentation(vf);
    rep.degrees = rational_homotopy_degrees(*rep.classification);
  }
  return rep;
}

namespace {

std::string join_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

json set_json(const VertexSet& s) {
  json a = json::array();
  for (std::size_t v : s) a.push_back(v);
  return a;
}

json validation_to_json(const ValidationReport& rep) {
  json j;
  j["structural_ok"] = rep.structural_ok;
  j["simplicial"] = rep.simplicial;
  j["fan_axiom_ok"] = rep.fan_axiom_ok;
  j["complete"] = rep.complete;
  j["smooth"] = rep.smooth;
  j["simply_connected"] = rep.simply_connected;
  json mult = json::object();
  for (const auto& [c, m] : rep.multiplicities) mult[std::to_string(c)] = m.str();
  j["multiplicities"] = mult;
  j["failures"] = rep.failures;
  return j;
}

void validation_to_text(const ValidationReport& rep, std::ostream& os) {
  os << "structural_ok " << (rep.structural_ok ? "true" : "false") << "\n";
  os << "simplicial " << (rep.simplicial ? "true" : "false") << "\n";
  os << "fan_axiom_ok " << (rep.fan_axiom_ok ? "true" : "false") << "\n";
  os << "complete " << (rep.complete ? "true" : "false") << "\n";
  os << "smooth " << (rep.smooth ? "true" : "false") << "\n";
  os << "simply_connected " << (rep.simply_connected ? "true" : "false")
     << "  # underlying-space criterion: rays generate Z^n\n";
  os << "multiplicities";
  for (const auto& [c, m] : rep.multiplicities) os << " " << c << ":" << m;
  os << "\n";
  for (const std::string& f : rep.failures) os << "failure " << f << "\n";
}

}  // namespace

std::string validation_text(const ValidationReport& rep) {
  std::ostringstream os;
  validation_to_text(rep, os);
  return os.str();
}

std::string validation_json(const ValidationReport& rep) {
  return validation_to_json(rep).dump(2) + "\n";
}

std::string report_text(const ClassificationReport& rep) {
  std::ostringstream os;
  if (!rep.name.empty()) os << "name " << rep.name << "\n";
  validation_to_text(rep.validation, os);
  if (rep.classification) {
    const Classification& c = *rep.classification;
    os << "elliptic " << (c.elliptic ? "true" : "false") << "\n";
    if (c.elliptic) {
      os << "blocks";
      for (const VertexSet& b : c.blocks) os << " " << join_set(b);
      os << "\n";
      os << "block_dims";
      for (std::size_t d : c.block_dims) os << " " << d;
      os << "\n";
    } else {
      os << "reason " << c.reason << "\n";
    }
  }
  if (!rep.betti.empty()) {
    os << "betti_even";
    for (long long b : rep.betti) os << " " << b;
    os << "\n";
  }
  if (rep.quotient) {
    const QuotientPresentation& q = *rep.quotient;
    os << "y_ambient_dim " << q.y.ambient_dim << "\n";
    os << "y_removed";
    for (const VertexSet& s : q.y.removed_subspaces) os << " " << join_set(s);
    os << "\n";
    if (q.y.product_factors) {
      os << "y_factors";  // Y = product of C^{n_i+1} - {0}
      for (std::size_t ni : *q.y.product_factors) os << " " << (ni + 1);
      os << "\n";
    }
    os << "g_free_rank " << q.group.free_rank << "\n";
    os << "g_torsion";
    for (const Int& t : q.group.torsion) os << " " << t;
    os << "\n";
    for (std::size_t i = 0; i < q.group.weights.size(); ++i) {
      os << "weight " << i;
      for (const Int& x : q.group.weights[i]) os << " " << x;
      os << "\n";
    }
    for (std::size_t c = 0; c < q.stabilizers.size(); ++c) {
      os << "stabilizer " << c;
      for (const Int& t : q.stabilizers[c]) os << " " << t;
      os << "\n";
    }
    os << "smooth_case " << (q.smooth_case ? "true" : "false") << "\n";
  }
  if (rep.degrees) {
    os << "homotopy_even";
    for (std::size_t d : rep.degrees->even) os << " " << d;
    os << "\n";
    os << "homotopy_odd";
    for (std::size_t d : rep.degrees->odd) os << " " << d;
    os << "\n";
  }
  return os.str();
}

std::string report_json(const ClassificationReport& rep) {
  json j;
  j["name"] = rep.name;
  j["validation"] = validation_to_json(rep.validation);
  if (rep.classification) {
    const Classification& c = *rep.classification;
    json jc;
    jc["elliptic"] = c.elliptic;
    if (c.elliptic) {
      json blocks = json::array();
      for (const VertexSet& b : c.blocks) blocks.push_back(set_json(b));
      jc["blocks"] = blocks;
      jc["block_dims"] = c.block_dims;
    } else {
      jc["reason"] = c.reason;
    }
    j["classification"] = jc;
  }
  j["betti_even"] = rep.betti;
  if (rep.quotient) {
    const QuotientPresentation& q = *rep.quotient;
    json jq;
    jq["y_ambient_dim"] = q.y.ambient_dim;
    json removed = json::array();
    for (const VertexSet& s : q.y.removed_subspaces) removed.push_back(set_json(s));
    jq["y_removed"] = removed;
    if (q.y.product_factors) {
      json factors = json::array();
      for (std::size_t ni : *q.y.product_factors) factors.push_back(ni + 1);
      jq["y_factors"] = factors;
    }
    jq["g_free_rank"] = q.group.free_rank;
    json tors = json::array();
    for (const Int& t : q.group.torsion) tors.push_back(t.str());
    jq["g_torsion"] = tors;
    json weights = json::array();
    for (const IntVec& w : q.group.weights) {
      json row = json::array();
      for (const Int& x : w) row.push_back(x.str());
      weights.push_back(row);
    }
    jq["weights"] = weights;
    json stabs = json::array();
    for (const auto& s : q.stabilizers) {
      json row = json::array();
      for (const Int& t : s) row.push_back(t.str());
      stabs.push_back(row);
    }
    jq["stabilizers"] = stabs;
    jq["smooth_case"] = q.smooth_case;
    j["quotient"] = jq;
  }
  if (rep.degrees) {
    j["homotopy_even"] = rep.degrees->even;
    j["homotopy_odd"] = rep.degrees->odd;
  }
  return j.dump(2) + "\n";
}

}  // namespace toric
