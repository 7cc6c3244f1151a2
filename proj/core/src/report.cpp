#include "cohomog/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cohomog {

namespace {

const char* roman(int case_number) {
  switch (case_number) {
    case 1:
      return "I";
    case 2:
      return "II";
    case 3:
      return "III";
    default:
      return "?";
  }
}

std::string series_str(const PoincareSeries& s) {
  std::ostringstream out;
  for (int d = 0; d <= s.truncation(); ++d) {
    if (d) out << ", ";
    out << to_string(s.coeff(d));
  }
  return out.str();
}

}  // namespace

std::string text_report(const ActionSpec& spec, const RingPresentation& pres,
                        const VerificationReport* verification) {
  std::ostringstream out;
  out << "spec: " << spec.name << "\n";
  out << "classification: " << case_tag_name(pres.case_tag);
  if (pres.legs_swapped) out << " (legs swapped)";
  out << "\n";
  if (pres.dihedral) out << "k = " << pres.dihedral->k << "\n";
  if (pres.trichotomy)
    out << "trichotomy: case " << roman(pres.trichotomy->case_number) << "\n";
  if (pres.sphere_degree > 0)
    out << "sphere degree " << pres.sphere_degree << "\n";
  out << "generators:";
  if (pres.generators.empty()) out << " (none above degree 0)";
  for (const auto& g : pres.generators)
    out << " " << g.name << "(" << g.degree << ")";
  out << "\n";
  if (!pres.relations.empty()) out << "relations: " << pres.relations << "\n";
  out << "series: " << series_str(pres.series) << "\n";

  if (verification) {
    out << "verification: " << (verification->verdict() ? "pass" : "FAIL")
        << " over degrees 0.." << verification->truncation << "\n";
    for (const auto& row : verification->rows) {
      if (row.match && row.exactness_defect == 0) continue;
      out << "  degree " << row.degree << ": oracle "
          << (row.degree % 2 == 0 ? row.mv_even : row.mv_odd)
          << " presentation "
          << (row.degree % 2 == 0 ? row.pres_even : row.pres_odd)
          << (row.match ? "" : "  MISMATCH");
      if (row.exactness_defect != 0)
        out << "  exactness defect " << row.exactness_defect;
      out << "\n";
    }
    int checks = 0, failures = 0;
    for (const auto& s : verification->spotchecks) {
      ++checks;
      if (!s.pass) {
        ++failures;
        out << "  spot-check FAIL: " << s.name << " (" << s.detail << ")\n";
      }
    }
    out << "spot-checks: " << checks - failures << "/" << checks
        << " passed\n";
    for (const auto& f : verification->freeness) {
      out << "freeness (" << f.leg << " leg): "
          << (!f.checked ? f.detail : f.pass ? "pass" : "FAIL, " + f.detail)
          << "\n";
    }
  }
  return out.str();
}

std::string machine_report(const ActionSpec& spec,
                           const RingPresentation& pres,
                           const VerificationReport* verification) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["case"] = case_tag_name(pres.case_tag);
  j["legs_swapped"] = pres.legs_swapped;
  j["k"] = pres.dihedral ? nlohmann::json(pres.dihedral->k)
                         : nlohmann::json(nullptr);
  j["trichotomy"] = pres.trichotomy
                        ? nlohmann::json(pres.trichotomy->case_number)
                        : nlohmann::json(nullptr);
  j["generators"] = nlohmann::json::array();
  for (const auto& g : pres.generators)
    j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
  j["sphere_degree"] = pres.sphere_degree;
  j["series"] = nlohmann::json::array();
  for (int d = 0; d <= pres.series.truncation(); ++d)
    j["series"].push_back(to_string(pres.series.coeff(d)));

  if (verification) {
    nlohmann::json v;
    v["rows"] = nlohmann::json::array();
    for (const auto& row : verification->rows)
      v["rows"].push_back({{"degree", row.degree},
                           {"mv_even", row.mv_even},
                           {"mv_odd", row.mv_odd},
                           {"pres_even", row.pres_even},
                           {"pres_odd", row.pres_odd},
                           {"match", row.match},
                           {"exactness_defect", row.exactness_defect}});
    v["spotchecks"] = nlohmann::json::array();
    for (const auto& s : verification->spotchecks)
      v["spotchecks"].push_back(
          {{"name", s.name}, {"detail", s.detail}, {"pass", s.pass}});
    v["freeness"] = nlohmann::json::array();
    for (const auto& f : verification->freeness)
      v["freeness"].push_back({{"leg", f.leg},
                               {"checked", f.checked},
                               {"pass", f.pass},
                               {"detail", f.detail}});
    v["verdict"] = verification->verdict() ? "pass" : "fail";
    j["verification"] = v;
  } else {
    j["verification"] = nullptr;
  }
  return j.dump(2) + "\n";
}

int run(const std::string& path, const RunOptions& options,
        std::ostream& out_stream, std::ostream& err) {
  ActionSpec spec;
  try {
    spec = parse_spec_file(path);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  int N = options.max_degree;
  ValidationReport validation = validate(spec, N);
  if (!validation.passed()) {
    err << "validation failed: " << validation.first_failure() << "\n";
    return kExitValidationFailure;
  }

  RingPresentation pres;
  try {
    pres = present(spec, N);
  } catch (const std::exception& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitValidationFailure;
  }

  std::optional<VerificationReport> verification;
  if (options.verify)
    verification =
        full_verification(spec, pres, N, options.trials, options.seed);

  const VerificationReport* vptr =
      verification ? &*verification : nullptr;
  std::string report = options.format == RunOptions::Format::Machine
                           ? machine_report(spec, pres, vptr)
                           : text_report(spec, pres, vptr);
  if (options.out.empty()) {
    out_stream << report;
  } else {
    std::ofstream f(options.out);
    if (!f) {
      err << "cannot write '" << options.out << "'\n";
      return kExitValidationFailure;
    }
    f << report;
  }

  if (verification && !verification->verdict()) {
    err << "verification mismatch";
    int d = verification->first_mismatch_degree();
    if (d >= 0) err << " at degree " << d;
    err << "\n";
    return kExitVerificationMismatch;
  }
  return kExitSuccess;
}

}  // namespace cohomog
