#include "tanglerep/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tanglerep {

namespace {

using ojson = nlohmann::ordered_json;

ojson suite_to_json(const SuiteOutcome& s) {
  ojson checks = ojson::array();
  for (const CheckResult& r : s.results)
    checks.push_back(ojson{{"name", r.name}, {"pass", r.pass}});
  return ojson{{"suite", s.suite}, {"m", s.m},       {"n", s.n},
               {"field", s.field_label},             {"checks", checks},
               {"all_pass", all_pass(s.results)}};
}

ojson dims_to_json(const DimsRow& r) {
  return ojson{{"m", r.m},
               {"n", r.n},
               {"f", r.f},
               {"field", r.field_label},
               {"dim_total", r.dim_total},
               {"dim_algebra", r.dim_algebra},
               {"dim_ideal", r.dim_ideal},
               {"dim_W", r.dim_w},
               {"dim_quotient", r.dim_quotient},
               {"dim_HT", r.dim_ht}};
}

ojson duality_to_json(const DualityReport& r) {
  return ojson{{"m", r.m},
               {"n", r.n},
               {"f", r.f},
               {"field", r.field_label},
               {"dim_total", r.dim_total},
               {"dim_algebra", r.dim_algebra},
               {"dim_ideal", r.dim_ideal},
               {"dim_W", r.dim_w},
               {"dim_quotient", r.dim_quotient},
               {"dim_HT", r.dim_ht},
               {"dim_image_phi_f", r.dim_image},
               {"dim_commutant_quotient", r.dim_commutant},
               {"surjective", r.surjective},
               {"truncation_match", r.truncation_match},
               {"hom_vanishing", r.hom_vanishing}};
}

const char* yn(bool b) { return b ? "true" : "false"; }

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i];
      if (i + 1 < row.size())
        out << std::string(width[i] - row[i].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

} // namespace

std::string envelope_json(const ReportEnvelope& e) {
  ojson j{{"version", kToolVersion}, {"config", e.config}};
  ojson suites = ojson::array();
  for (const SuiteOutcome& s : e.suites) suites.push_back(suite_to_json(s));
  j["suites"] = suites;
  ojson dims = ojson::array();
  for (const DimsRow& r : e.dims) dims.push_back(dims_to_json(r));
  j["dims"] = dims;
  ojson jobs = ojson::array();
  for (const DualityReport& r : e.reports) jobs.push_back(duality_to_json(r));
  j["jobs"] = jobs;
  ojson notes = ojson::array();
  for (const std::string& n : e.notes) notes.push_back(n);
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string envelope_csv(const ReportEnvelope& e) {
  std::ostringstream out;
  if (!e.suites.empty()) {
    out << "suite,m,n,field,check,pass\n";
    for (const SuiteOutcome& s : e.suites)
      for (const CheckResult& r : s.results)
        out << s.suite << ',' << s.m << ',' << s.n << ',' << s.field_label
            << ',' << r.name << ',' << yn(r.pass) << '\n';
  }
  if (!e.dims.empty()) {
    out << "m,n,f,field,dim_total,dim_algebra,dim_ideal,dim_W,dim_quotient,"
           "dim_HT\n";
    for (const DimsRow& r : e.dims)
      out << r.m << ',' << r.n << ',' << r.f << ',' << r.field_label << ','
          << r.dim_total << ',' << r.dim_algebra << ',' << r.dim_ideal << ','
          << r.dim_w << ',' << r.dim_quotient << ',' << r.dim_ht << '\n';
  }
  if (!e.reports.empty()) {
    out << "m,n,f,field,dim_total,dim_algebra,dim_ideal,dim_W,dim_quotient,"
           "dim_HT,dim_image_phi_f,dim_commutant_quotient,surjective,"
           "truncation_match,hom_vanishing\n";
    for (const DualityReport& r : e.reports)
      out << r.m << ',' << r.n << ',' << r.f << ',' << r.field_label << ','
          << r.dim_total << ',' << r.dim_algebra << ',' << r.dim_ideal << ','
          << r.dim_w << ',' << r.dim_quotient << ',' << r.dim_ht << ','
          << r.dim_image << ',' << r.dim_commutant << ','
          << yn(r.surjective) << ',' << yn(r.truncation_match) << ','
          << yn(r.hom_vanishing) << '\n';
  }
  for (const std::string& n : e.notes) out << "# " << n << '\n';
  return out.str();
}

std::string envelope_table(const ReportEnvelope& e) {
  std::ostringstream out;
  out << "version " << kToolVersion << "\n";
  out << "config  " << e.config << "\n";
  if (!e.suites.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"suite", "m", "n", "field", "passed", "failed"});
    for (const SuiteOutcome& s : e.suites) {
      long passed = 0, failed = 0;
      for (const CheckResult& r : s.results) (r.pass ? passed : failed)++;
      rows.push_back({s.suite, std::to_string(s.m), std::to_string(s.n),
                      s.field_label, std::to_string(passed),
                      std::to_string(failed)});
    }
    out << render_columns(rows);
    for (const SuiteOutcome& s : e.suites)
      for (const CheckResult& r : s.results)
        if (!r.pass)
          out << "FAIL " << s.suite << " m=" << s.m << " n=" << s.n << " "
              << s.field_label << ": " << r.name << "\n";
  }
  if (!e.dims.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"m", "n", "f", "field", "total", "algebra", "ideal", "W",
                    "quotient", "HT"});
    for (const DimsRow& r : e.dims)
      rows.push_back({std::to_string(r.m), std::to_string(r.n),
                      std::to_string(r.f), r.field_label,
                      std::to_string(r.dim_total),
                      std::to_string(r.dim_algebra),
                      std::to_string(r.dim_ideal), std::to_string(r.dim_w),
                      std::to_string(r.dim_quotient),
                      std::to_string(r.dim_ht)});
    out << render_columns(rows);
  }
  if (!e.reports.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"m", "n", "f", "field", "total", "algebra", "ideal", "W",
                    "quotient", "HT", "image", "commutant", "surjective",
                    "truncation", "hom0"});
    for (const DualityReport& r : e.reports)
      rows.push_back({std::to_string(r.m), std::to_string(r.n),
                      std::to_string(r.f), r.field_label,
                      std::to_string(r.dim_total),
                      std::to_string(r.dim_algebra),
                      std::to_string(r.dim_ideal), std::to_string(r.dim_w),
                      std::to_string(r.dim_quotient),
                      std::to_string(r.dim_ht), std::to_string(r.dim_image),
                      std::to_string(r.dim_commutant), yn(r.surjective),
                      yn(r.truncation_match), yn(r.hom_vanishing)});
    out << render_columns(rows);
  }
  for (const std::string& n : e.notes) out << "note: " << n << "\n";
  return out.str();
}

} // namespace tanglerep
