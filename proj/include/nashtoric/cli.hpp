#pragma once

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nashtoric/json_io.hpp"

namespace nashtoric {

struct RunConfig {
  enum class Command { expand, analyze, verify, iterate };
  enum class Format { json, text };

  Command command = Command::analyze;
  std::optional<std::vector<Int>> cf_terms;
  std::optional<Fraction> pq;
  std::optional<std::pair<LatticeVector, LatticeVector>> cone;
  Mode mode = Mode::normalized;
  Int char_p = 0;
  int max_r = 2;
  long long max_a = 2;
  int max_steps = 10;
  Format format = Format::json;
  int workers = 1;
  std::optional<std::string> out_file;
};

inline Int parse_integer(const std::string& token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '-' || token[i] == '+')) ++i;
  bool any = false;
  for (std::size_t k = i; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k])))
      throw std::invalid_argument("invalid integer '" + token + "'");
    any = true;
  }
  if (!any) throw std::invalid_argument("invalid integer '" + token + "'");
  return Int(token);
}

inline std::vector<Int> parse_term_list(const std::string& spec) {
  std::vector<Int> terms;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) terms.push_back(parse_integer(token));
  if (terms.empty()) throw std::invalid_argument("invalid term list '" + spec + "'");
  return terms;
}

inline Fraction parse_fraction(const std::string& spec) {
  auto slash = spec.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= spec.size())
    throw std::invalid_argument("invalid fraction '" + spec + "'");
  return {parse_integer(spec.substr(0, slash)), parse_integer(spec.substr(slash + 1))};
}

/// "a,b;c,d" -> rays (a,b) and (c,d).
inline std::pair<LatticeVector, LatticeVector> parse_cone_spec(const std::string& spec) {
  auto semi = spec.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("invalid cone '" + spec + "'");
  auto ray = [&](const std::string& part) {
    std::vector<Int> c = parse_term_list(part);
    if (c.size() != 2) throw std::invalid_argument("invalid cone ray '" + part + "'");
    return LatticeVector{c[0], c[1]};
  };
  return {ray(spec.substr(0, semi)), ray(spec.substr(semi + 1))};
}

namespace detail {

inline std::string terms_to_string(const std::vector<Int>& terms) {
  std::string s = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ",";
    s += terms[i].str();
  }
  return s + "]";
}

inline std::string vec_to_string(const LatticeVector& v) {
  return "(" + v.x.str() + "," + v.y.str() + ")";
}

inline void render_analysis_text(const AnalysisReport& report, std::ostream& out) {
  out << "surface P/Q = " << report.p << "/" << report.q;
  if (report.cf) out << "  cf = " << terms_to_string(report.cf->terms());
  out << "  mode = " << to_string(report.mode) << "  char = " << report.char_p << "\n";
  if (!report.cf) out << "already smooth; nothing to do\n";
  for (const auto& vr : report.vertices) {
    out << "vertex " << vr.cone.vertex_index << ": cone " << vec_to_string(vr.cone.gen1) << " "
        << vec_to_string(vr.cone.gen2) << "  det = " << det2(vr.cone.gen1, vr.cone.gen2);
    if (vr.chart) {
      out << "  minimal gens {";
      bool first = true;
      for (const auto& g : vr.chart->minimal_generators) {
        if (!first) out << ", ";
        out << vec_to_string(g);
        first = false;
      }
      out << "}";
    }
    if (vr.saturation) {
      out << "  saturated = " << (vr.saturation->saturated ? "yes" : "no");
      if (vr.saturation->witness) out << "  witness " << vec_to_string(*vr.saturation->witness);
      if (vr.saturation->witness_multiple) out << " x" << *vr.saturation->witness_multiple;
    }
    out << "  smooth = " << (vr.smooth ? "yes" : "no") << "\n";
  }
  out << "all charts smooth: " << (report.all_smooth ? "yes" : "no") << "\n";
  out << "classification pattern: " << (report.predicate_verdict ? "smooth" : "not smooth") << "\n";
  out << "consistent: " << (report.consistent ? "yes" : "no") << "\n";
}

inline void render_verification_text(const VerificationSummary& summary, std::ostream& out) {
  out << "verify mode = " << to_string(summary.mode) << "  r <= " << summary.max_r
      << "  a <= " << summary.max_a << "\n";
  out << "checked " << summary.total_checked << " continued fractions\n";
  if (summary.mismatches.empty()) {
    out << "mismatches: none\n";
  } else {
    out << "mismatches: " << summary.mismatches.size() << "\n";
    for (const auto& terms : summary.mismatches) out << "  " << terms_to_string(terms) << "\n";
  }
}

inline void render_resolution_text(const ResolutionNode& node, int indent, std::ostream& out) {
  for (int i = 0; i < indent; ++i) out << "  ";
  out << node.p << "/" << node.q << (node.smooth ? "  smooth" : "") << "\n";
  for (const auto& c : node.children) render_resolution_text(c, indent + 1, out);
}

}  // namespace detail

/// Executes one configured command. Exit status: 0 on success, 1 on usage or
/// domain errors, 2 when a report comes back inconsistent or a verification
/// finds mismatches.
inline int run(const RunConfig& config, std::ostream& out_stream, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* out = &out_stream;
    if (config.out_file) {
      file.open(*config.out_file);
      if (!file) throw std::invalid_argument("cannot open output file '" + *config.out_file + "'");
      out = &file;
    }
    const bool json = config.format == RunConfig::Format::json;

    int inputs = (config.cf_terms ? 1 : 0) + (config.pq ? 1 : 0) + (config.cone ? 1 : 0);
    if (config.command == RunConfig::Command::verify) {
      if (inputs != 0) throw std::invalid_argument("verify takes no input spec");
    } else if (inputs != 1) {
      throw std::invalid_argument("exactly one input spec is required");
    }

    auto resolve_pq = [&]() -> Fraction {
      if (config.pq) return *config.pq;
      if (config.cone) {
        NormalForm nf = normal_form(Cone2(config.cone->first, config.cone->second));
        return {nf.p, nf.q};
      }
      Fraction f = evaluate(ContinuedFraction(*config.cf_terms));
      return f;
    };

    switch (config.command) {
      case RunConfig::Command::expand: {
        Fraction f = resolve_pq();
        if (f.q == 1 && f.p == 0) {
          if (json) {
            Json j;
            j["p"] = json_int(f.p);
            j["q"] = json_int(f.q);
            j["command"] = "expand";
            j["note"] = "already smooth";
            *out << j.dump(2) << "\n";
          } else {
            *out << "P/Q = 0/1: already smooth; no continued fraction\n";
          }
          return 0;
        }
        ContinuedFraction cf = hj_expand(f.p, f.q);
        ConvergentTable table(cf);
        if (json) {
          Json j;
          j["command"] = "expand";
          j["p"] = json_int(f.p);
          j["q"] = json_int(f.q);
          j["cf"] = json_terms(cf.terms());
          Json conv;
          Json ps = Json::array();
          for (int i = -1; i <= cf.r(); ++i) ps.push_back(table.p(i).str());
          Json qs = Json::array();
          for (int i = 0; i <= cf.r(); ++i) qs.push_back(table.q(i).str());
          conv["p"] = ps;  // starts at index -1
          conv["q"] = qs;  // starts at index 0
          j["convergents"] = conv;
          j["hilbert_basis"] = json_vectors(hilbert_basis(cf));
          *out << j.dump(2) << "\n";
        } else {
          *out << "P/Q = " << f.p << "/" << f.q << "\n";
          *out << "cf: " << detail::terms_to_string(cf.terms()) << "\n";
          *out << "hilbert basis:";
          for (const auto& v : hilbert_basis(cf)) *out << " " << detail::vec_to_string(v);
          *out << "\n";
        }
        return 0;
      }
      case RunConfig::Command::analyze: {
        AnalysisReport report =
            config.cf_terms
                ? analyze(ContinuedFraction(*config.cf_terms), config.mode, config.char_p)
                : (config.cone ? analyze_cone(Cone2(config.cone->first, config.cone->second),
                                              config.mode, config.char_p)
                               : analyze_pq(config.pq->p, config.pq->q, config.mode, config.char_p));
        if (json) {
          Json j = json_analysis(report);
          j["command"] = "analyze";
          *out << j.dump(2) << "\n";
        } else {
          detail::render_analysis_text(report, *out);
        }
        return report.consistent ? 0 : 2;
      }
      case RunConfig::Command::verify: {
        VerificationSummary summary =
            verify_classification(config.max_r, config.max_a, config.mode, config.workers);
        if (json) {
          Json j = json_verification(summary);
          j["command"] = "verify";
          *out << j.dump(2) << "\n";
        } else {
          detail::render_verification_text(summary, *out);
        }
        return summary.mismatches.empty() ? 0 : 2;
      }
      case RunConfig::Command::iterate: {
        Fraction f = resolve_pq();
        ResolutionTrace trace = iterate_normalized(f.p, f.q, config.max_steps);
        if (json) {
          Json j = json_resolution(trace, config.max_steps);
          j["command"] = "iterate";
          *out << j.dump(2) << "\n";
        } else {
          *out << "depth = " << trace.depth
               << "  complete = " << (trace.complete ? "yes" : "no") << "\n";
          detail::render_resolution_text(trace.root, 0, *out);
        }
        return 0;
      }
    }
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nashtoric
