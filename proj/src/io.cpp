#include "concave/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace concave {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace {

void append_rows(std::string& out, const std::vector<Complex>& pts, const char* kind, bool skip_closing) {
  const std::size_t n = skip_closing && pts.size() > 1 ? pts.size() - 1 : pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    out += format_double(pts[i].real());
    out += ',';
    out += format_double(pts[i].imag());
    out += ',';
    out += kind;
    out += '\n';
  }
}

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw IoError("malformed number in CSV: '" + std::string(s) + "'");
  return v;
}

nlohmann::json points_json(const std::vector<Complex>& pts) {
  auto arr = nlohmann::json::array();
  for (const Complex& z : pts) arr.push_back({z.real(), z.imag()});
  return arr;
}

std::vector<Complex> points_from_json(const nlohmann::json& arr) {
  std::vector<Complex> out;
  for (const auto& e : arr) out.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return out;
}

std::string svg_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string svg_polyline(const std::vector<Complex>& pts, const char* style) {
  std::string out = "  <polyline fill=\"none\" " + std::string(style) + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += svg_num(pts[i].real()) + "," + svg_num(-pts[i].imag());
  }
  out += "\"/>\n";
  return out;
}

}  // namespace

std::string region_csv(const RegionSample* hankel, const RegionSample* omega) {
  std::string out = "re,im,kind\n";
  if (hankel) {
    append_rows(out, hankel->points, "cloud", false);
    append_rows(out, hankel->boundary, "boundary", true);
  }
  if (omega) append_rows(out, omega->boundary, "omega_boundary", true);
  return out;
}

std::vector<CsvPoint> parse_region_csv(std::string_view text) {
  std::vector<CsvPoint> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (header) {
      if (line != "re,im,kind") throw IoError("region CSV: missing header");
      header = false;
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw IoError("region CSV: expected 3 columns");
    rows.push_back({{parse_number(line.substr(0, c1)), parse_number(line.substr(c1 + 1, c2 - c1 - 1))},
                    std::string(line.substr(c2 + 1))});
  }
  if (header) throw IoError("region CSV: empty document");
  return rows;
}

nlohmann::json region_json(const RegionSample& region) {
  nlohmann::json j;
  j["meta"] = {{"kind", region.meta.kind},
               {"p", region.meta.p},
               {"resolution", region.meta.resolution},
               {"bins", region.meta.bins},
               {"seed", region.meta.seed}};
  j["points"] = points_json(region.points);
  j["boundary"] = points_json(region.boundary);
  return j;
}

RegionSample region_from_json(const nlohmann::json& j) {
  RegionSample r;
  const auto& m = j.at("meta");
  r.meta = {m.at("kind").get<std::string>(), m.at("p").get<double>(), m.at("resolution").get<std::int64_t>(),
            m.at("bins").get<std::int64_t>(), m.at("seed").get<std::uint64_t>()};
  r.points = points_from_json(j.at("points"));
  r.boundary = points_from_json(j.at("boundary"));
  return r;
}

std::string region_svg(const RegionSample* hankel, const RegionSample* omega) {
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"-1.5 -1.5 3 3\">\n";
  out += "  <rect x=\"-1.5\" y=\"-1.5\" width=\"3\" height=\"3\" fill=\"white\"/>\n";
  out += "  <line x1=\"-1.5\" y1=\"0\" x2=\"1.5\" y2=\"0\" stroke=\"#bbbbbb\" stroke-width=\"0.004\"/>\n";
  out += "  <line x1=\"0\" y1=\"-1.5\" x2=\"0\" y2=\"1.5\" stroke=\"#bbbbbb\" stroke-width=\"0.004\"/>\n";
  out += "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888888\" stroke-width=\"0.006\" "
         "stroke-dasharray=\"0.03,0.02\"/>\n";
  if (hankel) {
    out += "  <g fill=\"#4682b4\" fill-opacity=\"0.45\">\n";
    for (const Complex& z : hankel->points)
      out += "    <circle cx=\"" + svg_num(z.real()) + "\" cy=\"" + svg_num(-z.imag()) + "\" r=\"0.006\"/>\n";
    out += "  </g>\n";
    if (!hankel->boundary.empty())
      out += svg_polyline(hankel->boundary, "stroke=\"#1f3f66\" stroke-width=\"0.005\" stroke-opacity=\"0.7\"");
  }
  if (omega) out += svg_polyline(omega->boundary, "stroke=\"#c0392b\" stroke-width=\"0.01\"");
  out += "</svg>\n";
  return out;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "p,one_over_3p,lower_bound,m_estimate,upper_bound,outer_upper\n";
  for (const auto& r : rows) {
    out += format_double(r.p) + ',' + format_double(r.one_over_3p) + ',' + format_double(r.lower) + ',' +
           format_double(r.m_estimate) + ',' + format_double(r.upper) + ',' + format_double(r.outer_upper) + '\n';
  }
  return out;
}

std::string bounds_table(const std::vector<BoundsRow>& rows) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%6s %10s %12s %12s %12s %12s\n", "p", "1/(3p)", "lower", "M(p)~", "upper",
                "1/(3p)+2/3");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%6.3f %10.6f %12.6f %12.6f %12.6f %12.6f\n", r.p, r.one_over_3p, r.lower,
                  r.m_estimate, r.upper, r.outer_upper);
    out += buf;
  }
  return out;
}

nlohmann::json verify_json(const VerifyReport& report) {
  nlohmann::json j;
  j["p_values"] = report.p_values;
  j["seed"] = report.seed;
  j["samples"] = report.n_random;
  auto fams = nlohmann::json::array();
  for (const auto& f : report.families) {
    fams.push_back({{"name", f.name},
                    {"samples", f.samples},
                    {"worst_residual", f.worst_residual},
                    {"tolerance", f.tolerance},
                    {"pass", f.pass}});
  }
  j["families"] = std::move(fams);
  j["pass"] = report.pass();
  return j;
}

nlohmann::json extremal_json(const ExtremalReport& r) {
  const ParamTriple& s = r.arg_sigma;
  nlohmann::json j;
  j["p"] = r.p;
  j["m_estimate"] = r.m_estimate;
  j["arg_sigma"] = {{"moduli", {std::abs(s.x0), std::abs(s.x1), std::abs(s.x2)}},
                    {"arguments", {std::arg(s.x0), std::arg(s.x1), std::arg(s.x2)}}};
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["slice_value"] = r.slice_value;
  j["sigma2_slope"] = r.sigma2_slope;
  j["iterations"] = r.iterations;
  j["grid"] = r.grid;
  j["seed"] = r.seed;
  return j;
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace concave
