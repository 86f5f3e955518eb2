#pragma once

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfbasis/surfbasis.hpp"

namespace surfbasis::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kInputError = 1, kContractError = 2 };

// Theorem or contract failures are 2; anything wrong with the input is 1.
inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TheoremViolation:
    case ErrorKind::PreconditionFailed:
    case ErrorKind::RankDeficit:
    case ErrorKind::UniverseMismatch:
    case ErrorKind::NonTermination:
      return kContractError;
    default:
      return kInputError;
  }
}

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

inline int report_error(const Output& o, const Error& e) {
  if (o.json)
    o.out << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << '\n';
  else
    o.err << "error: " << e.what() << '\n';
  return exit_code_for(e.kind());
}

template <class F>
int guarded(const Output& o, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return report_error(o, e);
  }
}

inline std::vector<int> walk_edges(const Face& f) {
  std::vector<int> out;
  for (const auto& st : f.walk) out.push_back(st.dart.edge);
  return out;
}

inline std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

struct Summary {
  int vertices = 0, edges = 0, faces = 0, chi = 0;
  Surface surface;
};

inline Summary summarize(const EmbeddedGraph& eg, const FaceSet& fs) {
  Summary s;
  s.vertices = eg.graph().vertex_count();
  s.edges = eg.graph().edge_count();
  s.faces = static_cast<int>(fs.size());
  s.chi = euler_characteristic(eg, fs);
  s.surface = surface_of(is_orientable(eg), s.chi);
  return s;
}

inline void write_summary_line(std::ostream& os, const Summary& s) {
  os << "faces: " << s.faces << ", chi: " << s.chi << ", surface: " << s.surface.describe() << '\n';
}

inline json summary_json(const Summary& s) {
  return {{"vertices", s.vertices},
          {"edges", s.edges},
          {"faces", s.faces},
          {"chi", s.chi},
          {"orientable", s.surface.orientable},
          {"genus", s.surface.genus}};
}

inline int cmd_validate(const std::string& path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    const auto problems = validate(eg);
    if (o.json) {
      o.out << json{{"valid", problems.empty()}, {"violations", problems}}.dump(2) << '\n';
    } else {
      o.out << "valid: " << (problems.empty() ? "true" : "false") << '\n';
      for (const auto& p : problems) o.out << "violation: " << p << '\n';
    }
    return problems.empty() ? kOk : kInputError;
  });
}

inline int cmd_faces(const std::string& path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    require_valid(eg);
    const auto fs = trace_faces(eg);
    const auto s = summarize(eg, fs);
    if (o.json) {
      json faces = json::array();
      for (const auto& f : fs.faces) faces.push_back({{"walk", walk_edges(f)}, {"boundary", f.boundary.ones()}});
      auto j = summary_json(s);
      j["face_walks"] = faces;
      o.out << j.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < fs.size(); ++i)
        o.out << "face " << i << ": walk [" << join(walk_edges(fs.faces[i])) << "] boundary ["
              << join(fs.faces[i].boundary.ones()) << "]\n";
      write_summary_line(o.out, s);
    }
    return kOk;
  });
}

inline int cmd_euler(const std::string& path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    require_valid(eg);
    const auto s = summarize(eg, trace_faces(eg));
    if (o.json)
      o.out << summary_json(s).dump(2) << '\n';
    else
      o.out << "vertices: " << s.vertices << ", edges: " << s.edges << ", faces: " << s.faces << ", chi: " << s.chi
            << '\n';
    return kOk;
  });
}

inline int cmd_surface(const std::string& path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    require_valid(eg);
    const auto s = summarize(eg, trace_faces(eg));
    if (o.json)
      o.out << summary_json(s).dump(2) << '\n';
    else
      write_summary_line(o.out, s);
    return kOk;
  });
}

struct BasisReport {
  CycleBasis basis;
  std::string method;
  std::string case_tag;  // replacement case on the chi = 0 route
  int chi = 0;
  std::string basis_number;  // exact value or an upper bound, as text
};

// Route by method; the auto route follows the Euler characteristic.
inline BasisReport compute_basis(const EmbeddedGraph& eg, const std::string& method) {
  require_valid(eg);
  BasisReport r;
  r.chi = euler_characteristic(eg);
  std::string m = method;
  if (m == "auto") {
    if (r.chi == 2) m = "maclane";
    else if (r.chi == 0 || r.chi == 1) m = "three";
    else m = "face";
  }
  r.method = m;
  if (m == "maclane") {
    r.basis = maclane_basis(eg);
    r.basis_number = "<= 2";
  } else if (m == "face") {
    r.basis = face_basis(eg).basis;
    r.basis_number = "<= " + std::to_string(r.basis.sparsity(static_cast<std::size_t>(eg.graph().edge_count())));
  } else if (m == "three") {
    if (r.chi == 0) {
      auto res = three_basis(eg);
      r.basis = std::move(res.basis);
      r.case_tag = case_name(res.witness.case_tag);
    } else if (r.chi == 1) {
      r.basis = three_basis_projective(eg);
      r.case_tag = "projective";
    } else {
      throw Error(ErrorKind::WrongChi, "method three needs chi 0 or 1, got " + std::to_string(r.chi));
    }
    // A 2-basis exists only for planar graphs, so a certificate of
    // non-planarity makes 3 exact.
    if (eg.graph().vertex_count() <= kMaxPlanarityVertices) {
      const auto p = is_planar(eg.graph());
      r.basis_number = p.planar ? "<= 3 (graph is planar)"
                                : "3 (exact: " + std::string(kuratowski_name(p.kind)) + " subdivision on " +
                                      std::to_string(p.kuratowski.size()) + " edges)";
    } else {
      r.basis_number = "<= 3";
    }
  } else {
    throw Error(ErrorKind::DomainError, "unknown method '" + method + "'");
  }
  return r;
}

inline int cmd_basis(const std::string& path, const std::string& method, const std::string& output_path,
                     const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    const auto r = compute_basis(eg, method);
    const auto check = verify_basis(eg.graph(), r.basis.elements);
    if (!check.is_basis) throw Error(ErrorKind::TheoremViolation, "computed set is not a basis");
    if (!output_path.empty())
      io::write_file(output_path, io::serialize_basis(eg.name(), eg.graph().edge_count(), r.basis));
    if (o.json) {
      json j{{"method", r.method},   {"chi", r.chi},          {"dimension", check.dimension},
             {"betti", check.betti}, {"sparsity", check.sparsity}, {"is_basis", check.is_basis},
             {"basis_number", r.basis_number}};
      j["case"] = r.case_tag.empty() ? json(nullptr) : json(r.case_tag);
      if (output_path.empty()) j["basis"] = json::parse(io::serialize_basis(eg.name(), eg.graph().edge_count(), r.basis));
      o.out << j.dump(2) << '\n';
    } else {
      o.out << "method: " << r.method << (r.case_tag.empty() ? "" : " (" + r.case_tag + ")") << '\n'
            << "chi: " << r.chi << '\n'
            << "dimension: " << check.dimension << " (betti " << check.betti << ")\n"
            << "sparsity: " << check.sparsity << '\n'
            << "basis number: " << r.basis_number << '\n';
      if (output_path.empty()) o.out << io::serialize_basis(eg.name(), eg.graph().edge_count(), r.basis);
    }
    return kOk;
  });
}

inline int cmd_verify(const std::string& graph_path, const std::string& basis_path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(graph_path);
    const auto bf = io::parse_basis(io::read_file(basis_path));
    if (bf.edge_count != eg.graph().edge_count())
      throw Error(ErrorKind::UniverseMismatch, "basis is over " + std::to_string(bf.edge_count) +
                                                   " edges, graph has " + std::to_string(eg.graph().edge_count()));
    const auto c = verify_basis(eg.graph(), bf.basis.elements);
    if (o.json) {
      o.out << json{{"is_basis", c.is_basis}, {"dimension", c.dimension}, {"rank", c.rank},
                    {"betti", c.betti},       {"sparsity", c.sparsity},   {"all_even", c.all_even}}
                   .dump(2)
            << '\n';
    } else {
      o.out << "is_basis: " << (c.is_basis ? "true" : "false") << '\n'
            << "dimension: " << c.dimension << ", rank: " << c.rank << ", betti: " << c.betti << '\n'
            << "all even: " << (c.all_even ? "true" : "false") << '\n'
            << "sparsity: " << c.sparsity << '\n';
    }
    return c.is_basis ? kOk : kContractError;
  });
}

inline json planarity_json(const PlanarityResult& p) {
  json j{{"planar", p.planar}};
  if (p.planar) {
    json rot = json::array();
    for (const auto& r : p.embedding->rotation()) {
      json darts = json::array();
      for (const auto& d : r) darts.push_back({d.edge, d.end});
      rot.push_back(darts);
    }
    j["rotation"] = rot;
  } else {
    j["certificate"] = kuratowski_name(p.kind);
    j["certificate_edges"] = p.kuratowski;
  }
  return j;
}

inline void write_planarity(std::ostream& os, const PlanarityResult& p) {
  os << "planar: " << (p.planar ? "true" : "false") << '\n';
  if (p.planar) {
    const auto& rot = p.embedding->rotation();
    for (std::size_t v = 0; v < rot.size(); ++v) {
      os << "rotation " << v << ":";
      for (const auto& d : rot[v]) os << ' ' << d.edge << ':' << d.end;
      os << '\n';
    }
  } else {
    os << "certificate: " << kuratowski_name(p.kind) << " subdivision, edges [";
    for (std::size_t i = 0; i < p.kuratowski.size(); ++i) os << (i ? " " : "") << p.kuratowski[i];
    os << "]\n";
  }
}

inline int cmd_oracle(const std::string& path, int max_k, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    const auto& g = eg.graph();
    const auto bf = brute_force_basis_number(g, max_k);
    const auto p = is_planar(g);
    if (o.json) {
      auto j = planarity_json(p);
      j["basis_number"] = bf.k;
      j["betti"] = betti(g);
      json elems = json::array();
      for (const auto& v : bf.basis.elements) elems.push_back(v.ones());
      j["witness"] = elems;
      o.out << j.dump(2) << '\n';
    } else {
      o.out << "basis number: " << bf.k << " (betti " << betti(g) << ")\n";
      for (const auto& v : bf.basis.elements) o.out << "witness: [" << join(v.ones()) << "]\n";
      write_planarity(o.out, p);
    }
    return kOk;
  });
}

inline int cmd_planar(const std::string& path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = io::load_embedded_graph(path);
    const auto p = is_planar(eg.graph());
    if (o.json)
      o.out << planarity_json(p).dump(2) << '\n';
    else
      write_planarity(o.out, p);
    return kOk;
  });
}

inline constexpr std::int64_t kDefaultThreshold = 64;
inline constexpr std::int64_t kDefaultFitRange = 1'000'000;

inline int cmd_bound(std::int64_t genus, std::int64_t g0, const Output& o) {
  return guarded(o, [&] {
    const auto t = recursion_bound(genus, g0);
    const std::int64_t hi = std::max(genus, kDefaultFitRange);
    const double m = fit_constant(sample_range(hi, g0), g0);
    const double l = genus >= 2 ? std::log2(static_cast<double>(genus)) : 0.0;
    if (o.json) {
      o.out << json{{"genus", genus},       {"g0", g0},
                    {"trace", t.genus},     {"steps", t.steps},
                    {"stalled", t.stalled}, {"final_bound", t.final_bound},
                    {"fit_range_max", hi},  {"M", m},
                    {"log2_g_squared", l * l}}
                   .dump(2)
            << '\n';
    } else {
      o.out << "step  g\n";
      for (std::size_t i = 0; i < t.genus.size(); ++i) o.out << i << "  " << t.genus[i] << '\n';
      o.out << "steps: " << t.steps << (t.stalled ? " (stopped: rounding no longer decreases g)" : "") << '\n'
            << "final bound: " << t.final_bound << '\n'
            << "M over [2, " << hi << "]: " << m << '\n';
      if (genus >= 2)
        o.out << "M*log2(g)^2 = " << m * l * l << ", final bound <= M*log2(g)^2: "
              << (static_cast<double>(t.final_bound) <= m * l * l ? "true" : "false") << '\n';
    }
    return kOk;
  });
}

inline int cmd_randgen(const RandomEmbeddingOptions& opt, const std::string& output_path, const Output& o) {
  return guarded(o, [&] {
    const auto eg = random_embedding(opt);
    std::optional<bool> planar;
    if (opt.target_chi == 0 && eg.graph().vertex_count() <= kMaxPlanarityVertices)
      planar = is_planar(eg.graph()).planar;
    const auto text = io::serialize_embedded_graph(eg, planar);
    if (output_path.empty()) {
      o.out << text;
    } else {
      io::write_file(output_path, text);
      if (o.json)
        o.out << json{{"output", output_path}, {"name", eg.name()}, {"chi", opt.target_chi}}.dump(2) << '\n';
      else
        o.out << "wrote " << output_path << " (" << eg.name() << ", chi " << opt.target_chi << ")\n";
    }
    return kOk;
  });
}

}  // namespace surfbasis::cli
