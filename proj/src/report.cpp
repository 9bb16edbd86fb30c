#include "z4seq/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "z4seq/galois_ring.hpp"

namespace z4seq {

namespace {

std::string two_class_name(int two_class) {
  return std::string(label_name(static_cast<ClassLabel>(two_class)));
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

// D0..D3, P, Q, R in label order.
std::array<std::size_t, 7> class_sizes(const CyclotomicSystem& s) {
  std::array<std::size_t, 7> counts{};
  for (ClassLabel l : s.labels()) ++counts[static_cast<std::size_t>(l)];
  return counts;
}

}  // namespace

Json system_summary_json(const CyclotomicSystem& s) {
  Json j;
  j["p"] = s.p();
  j["q"] = s.q();
  j["g"] = s.g();
  j["h"] = s.h();
  j["e"] = s.e();
  j["case"] = std::string(case_name(s.case_tag()));
  j["two_class"] = two_class_name(locate_two(s));
  Json sizes;
  const auto counts = class_sizes(s);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    sizes[std::string(label_name(static_cast<ClassLabel>(i)))] = counts[i];
  }
  j["class_sizes"] = sizes;
  return j;
}

std::string system_summary_text(const CyclotomicSystem& s) {
  std::ostringstream os;
  os << "p=" << s.p() << "\nq=" << s.q() << "\ng=" << s.g() << "\nh=" << s.h()
     << "\ne=" << s.e() << "\ncase=" << case_name(s.case_tag())
     << "\ntwo_class=" << two_class_name(locate_two(s)) << "\nclass_sizes=";
  const auto counts = class_sizes(s);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    os << (i ? " " : "") << label_name(static_cast<ClassLabel>(i)) << ':' << counts[i];
  }
  os << '\n';
  return os.str();
}

Json analysis_json(const AnalysisReport& r) {
  Json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["case"] = std::string(case_name(r.case_tag));
  j["two_class"] = two_class_name(r.two_class);
  j["ring_degree"] = r.ring_degree;
  j["rho"] = to_string(r.rho);
  j["rho_in_z4"] = r.rho_in_z4;
  j["lc_formula"] = r.lc_formula;
  j["lc_dft"] = r.lc_dft_count;
  j["lc_rs"] = r.lc_reeds_sloane;
  j["agree"] = r.agree;
  return j;
}

std::string sweep_csv_header(bool timing) {
  return timing ? "p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error,seconds"
                : "p,q,case,two_class,lc_formula,lc_dft,lc_rs,agree,error";
}

std::string sweep_csv_row(const SweepRow& row, bool timing) {
  std::ostringstream os;
  os << row.p << ',' << row.q << ',';
  if (row.report) {
    const auto& r = *row.report;
    os << case_name(r.case_tag) << ',' << two_class_name(r.two_class) << ',' << r.lc_formula
       << ',' << r.lc_dft_count << ',' << r.lc_reeds_sloane << ',' << (r.agree ? "true" : "false")
       << ',';
  } else {
    // Error text may carry commas; keep the column count fixed.
    std::string err = row.error;
    for (char& c : err) {
      if (c == ',' || c == '\n' || c == '"') c = ';';
    }
    os << ",,,,,false," << err;
  }
  if (timing) os << ',' << seconds_text(row.seconds);
  return os.str();
}

Json sweep_row_json(const SweepRow& row, bool timing) {
  Json j;
  if (row.report) {
    j = analysis_json(*row.report);
    j["error"] = nullptr;
  } else {
    j["p"] = row.p;
    j["q"] = row.q;
    j["agree"] = false;
    j["error"] = row.error;
  }
  if (timing) j["seconds"] = row.seconds;
  return j;
}

std::string sweep_row_text(const SweepRow& row, bool timing) {
  std::ostringstream os;
  os << "p=" << row.p << " q=" << row.q;
  if (row.report) {
    const auto& r = *row.report;
    os << ' ' << case_name(r.case_tag) << " two=" << two_class_name(r.two_class)
       << " r=" << r.ring_degree << " lc=" << r.lc_formula << '/' << r.lc_dft_count << '/'
       << r.lc_reeds_sloane << ' ' << (r.agree ? "AGREE" : "DISAGREE");
  } else {
    os << " error: " << row.error;
  }
  if (timing) os << " t=" << seconds_text(row.seconds);
  return os.str();
}

}  // namespace z4seq
