#include "cqsres/render.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include <unistd.h>

namespace cqsres {

namespace {

using nlohmann::json;

constexpr const char* kBold = "\x1b[1m";
constexpr const char* kReset = "\x1b[0m";

std::string bold(const std::string& s, bool color) {
  return color ? kBold + s + kReset : s;
}

// Big integers fall back to strings so no JSON consumer silently rounds.
json jint(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

json jints(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(jint(x));
  return a;
}

std::string tuple_text(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

// Nonzero lower-triangular entries, source ascending and target descending,
// as "E2->E1: 2, E2->E0: 2" or "none".
std::string triangular_text(const std::vector<std::vector<Int>>& m) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 1; i < m.size(); ++i)
    for (std::size_t j = i; j-- > 0;) {
      if (m[i][j] == 0) continue;
      if (any) os << ", ";
      os << 'E' << i << "->E" << j << ": " << m[i][j];
      any = true;
    }
  return any ? os.str() : "none";
}

json triangular_json(const std::vector<std::vector<Int>>& m) {
  json a = json::array();
  for (std::size_t i = 1; i < m.size(); ++i)
    for (std::size_t j = i; j-- > 0;) {
      if (m[i][j] == 0) continue;
      a.push_back(json::array({i, j, jint(m[i][j])}));
    }
  return a;
}

json quiver_json(const Quiver& q) {
  json o;
  o["ranks"] = jints(q.ranks);
  o["hom"] = triangular_json(q.hom);
  o["arrows"] = triangular_json(q.arrows);
  return o;
}

}  // namespace

bool use_color(Color mode) {
  if (mode == Color::Always) return true;
  if (mode == Color::Never) return false;
  if (const char* env = std::getenv("CQSRES_COLOR")) {
    std::string v = env;
    if (v == "always") return true;
    if (v == "never") return false;
  }
  return isatty(1) != 0;
}

std::string format_component_text(const ComponentReport& rep, std::size_t index,
                                  bool color) {
  std::ostringstream os;
  std::string head = "component " + std::to_string(index);
  if (rep.artin) head += " [Artin]";
  os << bold(head, color) << '\n';
  if (rep.du_val)
    os << "  note: Du Val case, conventional zero fraction [0]\n";
  os << "  zero fraction: " << format_hj(rep.zf.k) << '\n';
  os << "  dimension: " << rep.dimension << '\n';
  os << "  delta: " << tuple_text(rep.delta.delta) << '\n';
  os << "  M-resolution: " << print_chain(rep.m_res) << '\n';
  os << "  N-resolution: " << print_chain(rep.n_res) << '\n';
  os << "  ranks: " << tuple_text(rep.quiver.ranks) << '\n';
  os << "  hom: " << triangular_text(rep.quiver.hom) << '\n';
  os << "  arrows: " << triangular_text(rep.quiver.arrows) << '\n';
  return os.str();
}

std::string format_components_text(const Fraction& f,
                                   const std::vector<ComponentReport>& reports,
                                   bool color) {
  std::ostringstream os;
  os << bold("fraction: " + format_fraction(f) + " = " + format_hj(hj_expand(f)), color)
     << '\n';
  os << "dual: " << format_fraction(make_fraction(f.delta, f.delta - f.omega)) << " = "
     << format_hj(hj_dual(f)) << '\n';
  os << "components: " << reports.size() << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    os << '\n' << format_component_text(reports[i], i + 1, color);
  }
  return os.str();
}

std::string format_quiver_text(const Quiver& q) {
  std::ostringstream os;
  os << "ranks: " << tuple_text(q.ranks) << '\n';
  os << "hom: " << triangular_text(q.hom) << '\n';
  os << "arrows: " << triangular_text(q.arrows) << '\n';
  return os.str();
}

std::string format_dolgachev_text(const DolgachevReport& rep, bool color) {
  std::ostringstream os;
  os << bold("p: " + rep.p.str() + ", q: " + rep.q.str(), color) << '\n';
  os << "target: " << format_fraction(rep.m_res.target) << " = "
     << format_hj(hj_expand(rep.m_res.target)) << '\n';
  os << "delta: " << tuple_text(rep.delta) << '\n';
  os << "M-resolution: " << print_chain(rep.m_res) << '\n';
  os << "M-resolution (cf): " << print_chain_cf(rep.m_res) << '\n';
  os << "N-resolution: " << print_chain(rep.n_res) << '\n';
  os << "N-resolution (cf): " << print_chain_cf(rep.n_res) << '\n';
  os << format_quiver_text(rep.quiver);
  os << "gram (quoted): [[" << rep.gram_quoted[0][0] << ", " << rep.gram_quoted[0][1]
     << "], [" << rep.gram_quoted[1][0] << ", " << rep.gram_quoted[1][1] << "]]\n";
  return os.str();
}

std::string components_to_json(const Fraction& f,
                               const std::vector<ComponentReport>& reports) {
  json o;
  o["fraction"] = format_fraction(f);
  o["expansion"] = jints(hj_expand(f));
  o["dual"] = jints(hj_dual(f));
  json comps = json::array();
  for (const ComponentReport& rep : reports) {
    json c;
    c["zero_fraction"] = jints(rep.zf.k);
    c["dimension"] = jint(rep.dimension);
    c["delta"] = jints(rep.delta.delta);
    c["eps"] = jints(rep.delta.eps);
    c["m_resolution"] = print_chain(rep.m_res);
    c["n_resolution"] = print_chain(rep.n_res);
    c["artin"] = rep.artin;
    c["du_val"] = rep.du_val;
    c["quiver"] = quiver_json(rep.quiver);
    comps.push_back(std::move(c));
  }
  o["components"] = std::move(comps);
  return o.dump(2) + "\n";
}

std::string quiver_to_json(const Quiver& q) { return quiver_json(q).dump(2) + "\n"; }

std::string dolgachev_to_json(const DolgachevReport& rep) {
  json o;
  o["p"] = jint(rep.p);
  o["q"] = jint(rep.q);
  o["target"] = format_fraction(rep.m_res.target);
  o["delta"] = jints(rep.delta);
  o["m_resolution"] = print_chain(rep.m_res);
  o["m_resolution_cf"] = print_chain_cf(rep.m_res);
  o["n_resolution"] = print_chain(rep.n_res);
  o["n_resolution_cf"] = print_chain_cf(rep.n_res);
  o["quiver"] = quiver_json(rep.quiver);
  o["gram_quoted"] = json::array(
      {json::array({jint(rep.gram_quoted[0][0]), jint(rep.gram_quoted[0][1])}),
       json::array({jint(rep.gram_quoted[1][0]), jint(rep.gram_quoted[1][1])})});
  return o.dump(2) + "\n";
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < q.ranks.size(); ++i)
    os << "  E" << i << " [label=\"E" << i << " (rank " << q.ranks[i] << ")\"];\n";
  for (std::size_t i = 1; i < q.arrows.size(); ++i)
    for (std::size_t j = i; j-- > 0;) {
      const Int& m = q.arrows[i][j];
      if (m == 0) continue;
      if (m <= 6) {
        for (Int t = 0; t < m; ++t) os << "  E" << i << " -> E" << j << ";\n";
      } else {
        os << "  E" << i << " -> E" << j << " [label=\"" << m << "\"];\n";
      }
    }
  os << "}\n";
  return os.str();
}

}  // namespace cqsres
