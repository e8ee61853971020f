#include "dualbraid/io.hpp"

#include <sstream>

namespace dualbraid {

using nlohmann::json;

json to_json(const Simple& s) { return json{{"n", s.strands()}, {"blocks", s.blocks()}}; }

Simple simple_from_json(const json& j) {
  return Simple::from_blocks(j.at("blocks").get<std::vector<std::vector<int>>>(), j.at("n").get<int>());
}

json to_json(const NormalForm& x) {
  json factors = json::array();
  for (const auto& f : x.factors()) factors.push_back(to_json(f));
  return json{{"n", x.strands()}, {"inf", x.infimum()}, {"factors", factors}};
}

NormalForm normal_form_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Simple> factors;
  for (const auto& f : j.at("factors")) {
    factors.push_back(simple_from_json(f));
    if (factors.back().strands() != n) throw std::invalid_argument("factor strand count mismatch");
  }
  return NormalForm::from_factors(n, j.at("inf").get<long>(), factors);
}

json to_json(const PeriodicClass& c) { return json{{"kind", to_string(c.kind)}, {"m", c.m}}; }

json to_json(const ConjugacyCertificate& cert) {
  return json{{"n", cert.n},
              {"k", cert.k},
              {"target", cert.target},
              {"gamma", to_json(cert.gamma)},
              {"verified", cert.verified}};
}

json non_conjugacy_json(const std::string& reason) {
  return json{{"conjugate", false}, {"reason", reason}};
}

std::string sss_table_jsonl(const SssTable& table) {
  std::string out = json{{"n", table.n}, {"d", table.d}, {"count", table.elements.size()}}.dump();
  out += '\n';
  for (const auto& x : table.elements) {
    out += to_json(x).dump();
    out += '\n';
  }
  return out;
}

std::string chord_diagram_svg(const Simple& s) {
  const int n = s.strands();
  const int step = 40, margin = 30;
  const int width = 2 * margin + step * (n - 1);
  const int base = margin + step * n / 2 + 10;
  const int height = base + 30;
  auto x_of = [&](int p) { return margin + step * (p - 1); };

  std::ostringstream svg;
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width=")" << width
      << R"(" height=")" << height << R"(" viewBox="0 0 )" << width << ' ' << height << R"(">)"
      << '\n'
      << "  <title>" << s.to_string() << "</title>\n"
      << R"(  <line x1="0" y1=")" << base << R"(" x2=")" << width << R"(" y2=")" << base
      << R"(" stroke="black" stroke-width="1"/>)" << '\n';
  auto arc = [&](int p, int q) {
    const int x1 = x_of(std::min(p, q)), x2 = x_of(std::max(p, q));
    const int rise = (x2 - x1) / 2;
    svg << R"(  <path d="M )" << x1 << ' ' << base << " C " << x1 << ' ' << base - rise << ' '
        << x2 << ' ' << base - rise << ' ' << x2 << ' ' << base
        << R"(" fill="none" stroke="black" stroke-width="1.5"/>)" << '\n';
  };
  for (const auto& block : s.blocks()) {
    if (block.size() < 2) continue;
    // block is descending
    for (std::size_t k = 0; k + 1 < block.size(); ++k) arc(block[k + 1], block[k]);
    if (block.size() > 2) arc(block.back(), block.front());
  }
  for (int p = 1; p <= n; ++p) {
    svg << R"(  <circle cx=")" << x_of(p) << R"(" cy=")" << base << R"(" r="3" fill="black"/>)"
        << '\n'
        << R"(  <text x=")" << x_of(p) << R"(" y=")" << base + 18
        << R"(" font-family="sans-serif" font-size="12" text-anchor="middle">)" << p << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dualbraid
