#include "tristar/landau.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tristar {

double transformation_strain(const LandauParams& p) {
  if (p.C == 0.0) throw std::domain_error("transformation strain undefined for C == 0");
  double disc = p.B * p.B - 4.0 * p.C * p.A * (p.T - p.Tc);
  if (disc < 0.0)
    throw std::domain_error("no real minimum: B^2 - 4CA(T - Tc) < 0");
  return (-p.B + std::sqrt(disc)) / (2.0 * p.C);
}

double upper_transition_temperature(const LandauParams& p) {
  if (p.A * p.C == 0.0)
    throw std::domain_error("superheating temperature undefined for A*C == 0");
  return p.Tc + 2.0 * p.B * p.B / (9.0 * p.A * p.C);
}

double energy_offset(const LandauParams& p) {
  double e = transformation_strain(p);
  double e2 = e * e;
  return -(p.A / 2.0 * (p.T - p.Tc) * e2 + p.B / 3.0 * e2 * e + p.C / 4.0 * e2 * e2);
}

double landau_energy(double e1, double e2, double e3, const LandauParams& p) {
  double r2 = e2 * e2 + e3 * e3;
  return p.A1 / 2.0 * e1 * e1 + p.A / 2.0 * (p.T - p.Tc) * r2 +
         p.B / 3.0 * (e2 * e2 * e2 - 3.0 * e2 * e3 * e3) + p.C / 4.0 * r2 * r2 +
         energy_offset(p);
}

void validate(const LandauParams& p) {
  if (!(p.C > 0.0)) throw std::invalid_argument("Landau parameters: need C > 0");
  if (!(p.B < 0.0)) throw std::invalid_argument("Landau parameters: need B < 0");
  if (!(p.T < upper_transition_temperature(p)))
    throw std::invalid_argument("Landau parameters: need T < T0 for three minima");
}

LandauParams load_landau_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
  LandauParams p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, eq, value;
    std::istringstream ls(line);
    if (!(ls >> key)) continue;  // blank line
    if (!(ls >> eq >> value) || eq != "=")
      throw std::invalid_argument("parameter file line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
    double v;
    try {
      size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter file line " + std::to_string(lineno) +
                                  ": bad number '" + value + "'");
    }
    if (key == "A1")
      p.A1 = v;
    else if (key == "A")
      p.A = v;
    else if (key == "B")
      p.B = v;
    else if (key == "C")
      p.C = v;
    else if (key == "T")
      p.T = v;
    else if (key == "Tc")
      p.Tc = v;
    else
      throw std::invalid_argument("parameter file line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
  }
  return p;
}

}  // namespace tristar
