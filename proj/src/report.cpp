#include "limcyc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace limcyc {

namespace {

std::string branch_name(UpperBranch b) {
  switch (b) {
    case UpperBranch::LeftAsymptote: return "left_asymptote";
    case UpperBranch::RightAsymptote: return "right_asymptote";
    case UpperBranch::Infinite: return "infinite";
  }
  return "?";
}

Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

void emit(const Json& j, int indent, int depth, std::string& out) {
  auto pad = [&](int d) {
    if (indent > 0) {
      out += '\n';
      out.append(static_cast<size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        emit(it.value(), indent, depth + 1, out);
      }
      pad(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        pad(depth + 1);
        emit(v, indent, depth + 1, out);
      }
      pad(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: out += format_double(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  // keep a float marker so readers do not retype the value as an integer
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  out += '\n';
  return out;
}

AnalysisReport analyze(const SystemParams& p) {
  auto t0 = std::chrono::steady_clock::now();
  require_node(p);
  AnalysisReport r;
  r.params = p;
  r.validation = validate_for_cycles(p);
  r.discriminants = discriminants(p);
  r.regime = classify_regime(p);
  if (r.validation.ok) {
    r.domain = domain(p);
    r.search = find_cycles(p);
    r.domain = r.search.domain;
    for (const auto& root : r.search.roots) r.roots.push_back({root, iterate_stability(p, root.y0_star)});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json to_json(const SystemParams& p) {
  return Json{{"gamma_l", p.gamma_l}, {"gamma_r", p.gamma_r}, {"alpha_l", p.alpha_l}, {"alpha_r", p.alpha_r}, {"b", p.b}};
}

Json to_json(const SuccessorDomain& d) {
  return Json{{"y0_min", num(d.y0_min)},
              {"y0_max", num(d.y0_max)},
              {"upper_branch", branch_name(d.active_upper_branch)},
              {"empty", d.empty()}};
}

Json to_json(const CycleRoot& r) {
  Json j{{"y0_star", r.y0_star},
         {"multiplicity", r.multiplicity},
         {"stability", to_string(r.stability)},
         {"d_residual", num(r.d_residual)},
         {"d_prime", num(r.dprime)}};
  if (r.multiplicity == 2) j["d_second"] = num(r.d_second);
  j["t"] = num(r.t);
  j["s"] = num(r.s);
  return j;
}

Json to_json(const AnalysisReport& r, bool timings) {
  Json j;
  j["params"] = to_json(r.params);
  j["cycles_possible"] = r.validation.ok;
  if (!r.validation.ok) j["reason"] = r.validation.reason;
  j["domain"] = r.validation.ok ? to_json(r.domain) : Json(nullptr);
  j["discriminants"] = Json{{"delta1", num(r.discriminants.delta1)},
                            {"delta2", num(r.discriminants.delta2)},
                            {"delta3", num(r.discriminants.delta3)}};
  Json cycles = Json::array();
  for (const auto& a : r.roots) {
    Json c = to_json(a.root);
    c["iterate_verdict"] = to_string(a.probe.verdict);
    cycles.push_back(c);
  }
  j["count"] = r.search.total_multiplicity();
  j["cycles"] = cycles;
  j["continuum"] = r.search.continuum;
  j["mirrored"] = r.search.mirrored;
  j["failures"] = r.search.failures;
  Json regime{{"tag", r.regime.tag}, {"exact", r.regime.exact}, {"count", r.regime.count}};
  regime["stability"] = r.regime.stability ? Json(to_string(*r.regime.stability)) : Json(nullptr);
  j["regime"] = regime;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

Json to_json(const BifurcationReport& r, bool include_rows) {
  Json j;
  j["b_m"] = num(r.b_m);
  j["b_bar"] = num(r.b_bar);
  j["b_M"] = num(r.b_M);
  j["b_tilde"] = r.b_tilde ? num(*r.b_tilde) : Json(nullptr);
  Json folds = Json::array();
  for (const auto& f : r.folds)
    folds.push_back(Json{{"b", f.b},
                         {"y0", f.y0},
                         {"d_residual", num(f.d_residual)},
                         {"d_prime_residual", num(f.dprime_residual)},
                         {"d_second", num(f.d_second)}});
  j["folds"] = folds;
  Json regimes = Json::array();
  for (const auto& g : r.regimes)
    regimes.push_back(Json{{"b_from", g.b_from}, {"b_to", g.b_to}, {"count", g.count}, {"signature", g.signature}});
  j["regimes"] = regimes;
  if (include_rows) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json roots = Json::array();
      for (const auto& c : row.roots) roots.push_back(to_json(c));
      Json jr{{"b", row.b}, {"count", row.count}, {"roots", roots}};
      if (!row.error.empty()) jr["error"] = row.error;
      rows.push_back(jr);
    }
    j["rows"] = rows;
  }
  return j;
}

Json to_json(const VerifyReport& r, bool timings) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    Json facts = Json::object();
    for (const auto& [k, v] : c.facts) {
      if (facts.contains(k)) {
        if (!facts[k].is_array()) facts[k] = Json::array({facts[k]});
        facts[k].push_back(v);
      } else {
        facts[k] = v;
      }
    }
    jc["facts"] = facts;
    if (timings) jc["seconds"] = c.seconds;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["notes"] = r.notes;
  if (timings) j["seconds"] = r.seconds;
  return j;
}

std::string scan_csv(const BifurcationReport& r) {
  std::ostringstream os;
  os << "b,count,y0_1,mult_1,stab_1,y0_2,mult_2,stab_2\n";
  for (const auto& row : r.rows) {
    os << format_double(row.b) << ',' << row.count;
    for (size_t i = 0; i < 2; ++i) {
      if (i < row.roots.size())
        os << ',' << format_double(row.roots[i].y0_star) << ',' << row.roots[i].multiplicity << ','
           << to_string(row.roots[i].stability);
      else
        os << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

std::string orbit_csv(const OrbitTrace& o) {
  std::ostringstream os;
  os << "t,x,y\n";
  for (const auto& s : o.samples) os << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.y) << '\n';
  return os.str();
}

}  // namespace limcyc
