#include "orthoframes/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orthoframes/errors.hpp"

namespace orthoframes {

std::string psi_to_csv(const SynthesizedFunction& psi, std::size_t count) {
  const Interval s = psi.effective_support();
  std::vector<double> xs(count);
  std::vector<Complex> ys(count);
  const double step = s.length() / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = s.lo + step * static_cast<double>(i);
    ys[i] = psi.evaluate(xs[i]);
  }
  return samples_to_csv(xs, ys);
}

std::string samples_to_csv(const std::vector<double>& xs, const std::vector<Complex>& ys) {
  std::ostringstream os;
  os << "x,psi_re,psi_im\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    os << format_double(xs[i]) << ',' << format_double(ys[i].real()) << ','
       << format_double(ys[i].imag()) << '\n';
  return os.str();
}

std::string gram_to_json(const GramReport& report) {
  std::ostringstream os;
  os << "{\n  \"method\": \"" << report.method << "\",\n";
  os << "  \"norm_sq\": " << format_double(report.norm_sq) << ",\n";
  os << "  \"max_offdiag\": " << format_double(report.max_offdiag) << ",\n";
  os << "  \"entries\": [\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const GramEntry& e = report.entries[i];
    os << "    {\"n1\": " << e.n1 << ", \"n2\": " << e.n2 << ", \"re\": "
       << format_double(e.value.real()) << ", \"im\": " << format_double(e.value.imag()) << '}'
       << (i + 1 < report.entries.size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string samples_to_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                           const std::string& title) {
  const double W = 800, H = 400, pad = 40;
  double xmin = xs.front(), xmax = xs.back();
  double ymin = *std::min_element(ys.begin(), ys.end());
  double ymax = *std::max_element(ys.begin(), ys.end());
  if (ymax - ymin < 1e-12) {
    ymax += 1.0;
    ymin -= 1.0;
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title
     << "</text>\n<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double px = pad + (xs[i] - xmin) / (xmax - xmin) * (W - 2 * pad);
    const double py = H - pad - (ys[i] - ymin) / (ymax - ymin) * (H - 2 * pad);
    os << format_double(px) << ',' << format_double(py) << ' ';
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file: " + path);
  f << content;
}

double round12(double v) {
  return std::strtod(format_double(v).c_str(), nullptr);
}

}  // namespace orthoframes
