#include "vfbound/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "vfbound/errors.hpp"

namespace vfbound {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidArgument("bad number '" + s + "' in report CSV");
  return v;
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string checks_field(const std::vector<NamedCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    if (!out.empty()) out += ';';
    out += c.name + "=" + to_string(c.status);
  }
  return out;
}

std::vector<NamedCheck> parse_checks(const std::string& field) {
  std::vector<NamedCheck> out;
  std::istringstream in(field);
  std::string item;
  while (std::getline(in, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("bad check entry '" + item + "'");
    out.push_back({item.substr(0, eq), check_status_from_string(item.substr(eq + 1))});
  }
  return out;
}

void append_estimate(std::vector<std::string>& row, const Estimate& e) {
  row.push_back(fmt_double(e.value));
  row.push_back(fmt_double(e.std_error));
  row.push_back(std::to_string(e.count));
  row.push_back(std::to_string(e.seed));
}

void append_bound(std::vector<std::string>& row, const BoundCheck& b) {
  row.push_back(b.applicable ? "1" : "0");
  row.push_back(fmt_double(b.lhs));
  row.push_back(fmt_double(b.rhs));
  row.push_back(fmt_double(b.margin));
  row.push_back(to_string(b.status));
}

class RowReader {
 public:
  explicit RowReader(const std::vector<std::string>& f) : f_(f) {}
  const std::string& str() { return f_.at(i_++); }
  double num() { return parse_double(str()); }
  bool flag() { return str() == "1"; }
  Estimate estimate() {
    Estimate e;
    e.value = num();
    e.std_error = num();
    e.count = std::stoull(str());
    e.seed = std::stoull(str());
    return e;
  }
  BoundCheck bound() {
    BoundCheck b;
    b.applicable = flag();
    b.lhs = num();
    b.rhs = num();
    b.margin = num();
    b.status = check_status_from_string(str());
    return b;
  }

 private:
  const std::vector<std::string>& f_;
  std::size_t i_ = 0;
};

}  // namespace

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "spec", "family", "n", "num_vertices", "num_facets", "count_method", "transformed", "john_gap", "r", "R",
      "M", "M_se", "M_count", "M_seed", "Mstar", "Mstar_se", "Mstar_count", "Mstar_seed", "pointwise_min",
      "trivial_product", "trivial_product_se", "lemma4_applicable", "lemma4_lhs", "lemma4_rhs", "lemma4_margin",
      "lemma4_status", "eq1_applicable", "eq1_lhs", "eq1_rhs", "eq1_margin", "eq1_status", "chain_lhs",
      "chain_rhs_factor", "chain_derived_rhs", "empirical_c", "checks", "passed", "error"};
  return cols;
}

void write_report_csv(std::ostream& out, const std::vector<InstanceReport>& reports) {
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : reports) {
    std::vector<std::string> row{r.spec, r.family, std::to_string(r.n), fmt_double(r.num_vertices),
                                 fmt_double(r.num_facets), to_string(r.count_method), r.transformed ? "1" : "0",
                                 fmt_double(r.john_gap), fmt_double(r.r), fmt_double(r.R)};
    append_estimate(row, r.m_est);
    append_estimate(row, r.mstar_est);
    row.push_back(fmt_double(r.pointwise_min));
    row.push_back(fmt_double(r.trivial_product));
    row.push_back(fmt_double(r.trivial_product_se));
    append_bound(row, r.lemma4);
    append_bound(row, r.eq1);
    row.push_back(fmt_double(r.chain_lhs));
    row.push_back(fmt_double(r.chain_rhs_factor));
    row.push_back(fmt_double(r.chain_derived_rhs));
    row.push_back(fmt_double(r.empirical_c));
    row.push_back(checks_field(r.checks));
    row.push_back(r.passed() ? "1" : "0");
    std::string error = r.error;
    std::replace(error.begin(), error.end(), '\n', ' ');
    row.push_back(std::move(error));
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quote(row[i]);
    out << '\n';
  }
}

std::vector<InstanceReport> parse_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("report CSV is empty");
  if (split_csv_line(line) != report_columns()) throw InvalidArgument("report CSV header does not match");
  std::vector<InstanceReport> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != report_columns().size()) throw InvalidArgument("report CSV row has wrong field count");
    RowReader rd(fields);
    InstanceReport r;
    r.spec = rd.str();
    r.family = rd.str();
    r.n = std::stoi(rd.str());
    r.num_vertices = rd.num();
    r.num_facets = rd.num();
    r.count_method = count_method_from_string(rd.str());
    r.transformed = rd.flag();
    r.john_gap = rd.num();
    r.r = rd.num();
    r.R = rd.num();
    r.m_est = rd.estimate();
    r.mstar_est = rd.estimate();
    r.pointwise_min = rd.num();
    r.trivial_product = rd.num();
    r.trivial_product_se = rd.num();
    r.lemma4 = rd.bound();
    r.eq1 = rd.bound();
    r.chain_lhs = rd.num();
    r.chain_rhs_factor = rd.num();
    r.chain_derived_rhs = rd.num();
    r.empirical_c = rd.num();
    r.checks = parse_checks(rd.str());
    rd.str();  // "passed" is derived from checks and error
    r.error = rd.str();
    out.push_back(std::move(r));
  }
  return out;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw InvalidArgument("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace vfbound
