#pragma once

#include <Eigen/Dense>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "signedlab/matrix.hpp"
#include "signedlab/minor.hpp"
#include "signedlab/rational.hpp"
#include "signedlab/sap.hpp"
#include "signedlab/signed_graph.hpp"
#include "signedlab/theorem.hpp"
#include "signedlab/wide_separation.hpp"
#include "signedlab/wide_two_path.hpp"

namespace signedlab {

using nlohmann::json;

// Interchange format: {"n": int, "edges": [[u, v, "even"|"odd"], ...]},
// vertices 1-based.
inline json graph_to_json(const SignedGraph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.v, to_string(e.parity)});
  return j;
}

inline SignedGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json must be {\"n\": int, \"edges\": [[u,v,parity],...]}");
  int n = j.at("n").get<int>();
  std::vector<Edge> es;
  for (const auto& row : j.at("edges")) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("each edge must be [u, v, \"even\"|\"odd\"]");
    es.emplace_back(row[0].get<int>(), row[1].get<int>(), parity_from_string(row[2].get<std::string>()));
  }
  return SignedGraph(n, std::move(es));
}

// Dense row-major matrix: entries numeric or exact rational strings "p/q".
inline Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw std::invalid_argument("matrix json must be {\"n\": int, \"entries\": [[..],..]}");
  const auto& rows = j.at("entries");
  int n = static_cast<int>(rows.size());
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix entries must be square");
    for (int c = 0; c < n; ++c) {
      const auto& v = r[static_cast<std::size_t>(c)];
      if (v.is_string())
        m(i, c) = static_cast<double>(parse_rational(v.get<std::string>()));
      else
        m(i, c) = v.get<double>();
    }
  }
  return m;
}

inline RationalMatrix rational_matrix_from_json(const json& j) {
  const auto& rows = j.at("entries");
  int n = static_cast<int>(rows.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) {
      const auto& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (v.is_string())
        m.at(i, c) = parse_rational(v.get<std::string>());
      else if (v.is_number_integer())
        m.at(i, c) = Rational(v.get<long long>());
      else
        throw std::invalid_argument("exact matrix entries must be integers or \"p/q\" strings");
    }
  return m;
}

inline json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int c = 0; c < m.cols(); ++c) r.push_back(m(i, c));
    rows.push_back(std::move(r));
  }
  return json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

inline json rational_matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (int c = 0; c < m.cols; ++c) r.push_back(rational_to_string(m.at(i, c)));
    rows.push_back(std::move(r));
  }
  return json{{"n", m.rows}, {"entries", std::move(rows)}};
}

inline json embedding_to_json(const MinorEmbedding& e) {
  json j;
  j["mode"] = to_string(e.mode);
  j["branch_sets"] = e.branch_sets;
  j["edge_map"] = e.edge_map;
  j["resign_set"] = e.resign_set;
  return j;
}

inline json separation_to_json(const WideSeparation& w) {
  json j;
  j["c4_vertices"] = w.c4_vertices;
  j["c4_edges"] = w.c4_edges;
  j["g1"] = {{"vertices", w.g1_vertices}, {"edges", w.g1_edges}};
  j["g2"] = {{"vertices", w.g2_vertices}, {"edges", w.g2_edges}};
  j["attachments"] = {{"g1", {w.c4_vertices[0], w.c4_vertices[2]}},
                      {"g2", {w.c4_vertices[1], w.c4_vertices[3]}}};
  return j;
}

inline const char* to_string(TraceStepKind k) {
  switch (k) {
    case TraceStepKind::BaseTriangle: return "base_triangle";
    case TraceStepKind::BaseK4i: return "base_k4i";
    case TraceStepKind::AddParallel: return "add_parallel";
    case TraceStepKind::GlueTriangle: return "glue_triangle";
    default: return "glue_k4i";
  }
}

inline json trace_to_json(const Wide2PathTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    json st;
    st["op"] = to_string(s.kind);
    switch (s.kind) {
      case TraceStepKind::BaseTriangle:
        st["parity"] = to_string(s.p1);
        break;
      case TraceStepKind::BaseK4i:
        break;
      case TraceStepKind::AddParallel:
        st["slot"] = s.slot;
        st["cycle_parity"] = to_string(s.p1);
        break;
      case TraceStepKind::GlueTriangle:
        st["slot"] = s.slot;
        st["triangle_parity"] = to_string(s.p1);
        st["new_side"] = s.new_side;
        break;
      case TraceStepKind::GlueK4i:
        st["slot"] = s.slot;
        st["p1"] = to_string(s.p1);
        st["p2"] = to_string(s.p2);
        break;
    }
    steps.push_back(std::move(st));
  }
  return json{{"steps", std::move(steps)}};
}

inline Wide2PathTrace trace_from_json(const json& j) {
  Wide2PathTrace t;
  for (const auto& st : j.at("steps")) {
    TraceStep s;
    std::string op = st.at("op").get<std::string>();
    if (op == "base_triangle") {
      s.kind = TraceStepKind::BaseTriangle;
      s.p1 = parity_from_string(st.at("parity").get<std::string>());
    } else if (op == "base_k4i") {
      s.kind = TraceStepKind::BaseK4i;
    } else if (op == "add_parallel") {
      s.kind = TraceStepKind::AddParallel;
      s.slot = st.at("slot").get<int>();
      s.p1 = parity_from_string(st.at("cycle_parity").get<std::string>());
    } else if (op == "glue_triangle") {
      s.kind = TraceStepKind::GlueTriangle;
      s.slot = st.at("slot").get<int>();
      s.p1 = parity_from_string(st.at("triangle_parity").get<std::string>());
      s.new_side = st.at("new_side").get<int>();
    } else if (op == "glue_k4i") {
      s.kind = TraceStepKind::GlueK4i;
      s.slot = st.at("slot").get<int>();
      s.p1 = parity_from_string(st.at("p1").get<std::string>());
      s.p2 = parity_from_string(st.at("p2").get<std::string>());
    } else {
      throw std::invalid_argument("unknown trace step op: " + op);
    }
    t.steps.push_back(s);
  }
  return t;
}

inline json certificate_to_json(const NullityCertificate& c) {
  json j;
  j["matrix"] = matrix_to_json(c.a);
  j["nullity"] = c.nullity;
  j["residual"] = c.residual;
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  j["restart"] = c.restart;
  json kernel = json::array();
  for (int col = 0; col < c.kernel.cols(); ++col) {
    json v = json::array();
    for (int r = 0; r < c.kernel.rows(); ++r) v.push_back(c.kernel(r, col));
    kernel.push_back(std::move(v));
  }
  j["kernel"] = std::move(kernel);
  return j;
}

inline json sap_report_to_json(const SapReport& r) {
  json j;
  j["dimension"] = r.dimension;
  j["tol"] = r.tol;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(matrix_to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

inline json theorem_row_to_json(const TheoremRow& r) {
  json j;
  j["key"] = r.key_hex;
  j["n"] = r.n;
  j["e"] = r.e;
  j["in_scope"] = r.in_scope;
  const char* names[4] = {"K3eq", "K4e", "K4o", "K23e"};
  for (int i = 0; i < 4; ++i) {
    j["strict"][names[i]] = r.strict_found[i];
    j["weak"][names[i]] = r.weak_found[i];
  }
  j["forbidden_strict_clear"] = r.forbidden_strict_clear;
  j["forbidden_weak_clear"] = r.forbidden_weak_clear;
  j["weak_strict_divergent"] = r.weak_strict_divergent;
  j["w4o_class"] = r.w4o_class;
  j["partial_wide_2_path"] = r.partial_wide;
  j["completion_added_edges"] = r.completion_added_edges;
  j["structure_ok"] = r.structure_ok;
  j["has_k4_shape"] = r.has_k4_shape;
  j["has_w4_shape"] = r.has_w4_shape;
  j["has_k23_shape"] = r.has_k23_shape;
  j["k4_lemma_applies"] = r.k4_lemma_applies;
  j["k4_lemma_ok"] = r.k4_lemma_ok;
  j["k4_hypothesis_divergent"] = r.k4_hypothesis_divergent;
  j["k23_lemma_applies"] = r.k23_lemma_applies;
  j["k23_lemma_ok"] = r.k23_lemma_ok;
  j["contracts_to_w4o"] = r.contracts_to_w4o;
  j["contraction_lemma_ok"] = r.contraction_lemma_ok;
  j["w4_lemma_ok"] = r.w4_lemma_ok;
  j["m_search"] = r.m_search;
  j["xi_search"] = r.xi_search_flag;
  j["verdict"] = r.verdict;
  j["anomalies"] = r.anomalies;
  return j;
}

inline std::string theorem_csv_header() {
  return "key,n,e,in_scope,k3eq_strict,k4e_strict,k4o_strict,k23e_strict,"
         "k3eq_weak,k4e_weak,k4o_weak,k23e_weak,forbidden_strict_clear,forbidden_weak_clear,"
         "weak_strict_divergent,w4o_class,partial_wide_2_path,completion_added_edges,structure_ok,"
         "has_k4_shape,has_w4_shape,has_k23_shape,k4_lemma_applies,k4_lemma_ok,"
         "k4_hypothesis_divergent,k23_lemma_applies,k23_lemma_ok,contracts_to_w4o,"
         "contraction_lemma_ok,w4_lemma_ok,m_search,xi_search,verdict,anomalies";
}

inline std::string theorem_row_to_csv(const TheoremRow& r) {
  std::ostringstream os;
  auto b = [](bool v) { return v ? "1" : "0"; };
  os << r.key_hex << ',' << r.n << ',' << r.e << ',' << b(r.in_scope);
  for (int i = 0; i < 4; ++i) os << ',' << b(r.strict_found[i]);
  for (int i = 0; i < 4; ++i) os << ',' << b(r.weak_found[i]);
  os << ',' << b(r.forbidden_strict_clear) << ',' << b(r.forbidden_weak_clear) << ','
     << b(r.weak_strict_divergent) << ',' << b(r.w4o_class) << ',' << b(r.partial_wide) << ','
     << r.completion_added_edges << ',' << b(r.structure_ok) << ',' << b(r.has_k4_shape) << ','
     << b(r.has_w4_shape) << ',' << b(r.has_k23_shape) << ',' << b(r.k4_lemma_applies) << ','
     << b(r.k4_lemma_ok) << ',' << b(r.k4_hypothesis_divergent) << ',' << b(r.k23_lemma_applies)
     << ',' << b(r.k23_lemma_ok) << ',' << b(r.contracts_to_w4o) << ','
     << b(r.contraction_lemma_ok) << ',' << b(r.w4_lemma_ok) << ',' << r.m_search << ','
     << r.xi_search_flag << ',' << r.verdict << ',' << '"' << r.anomalies << '"';
  return os.str();
}

inline json theorem_summary_to_json(const TheoremReport& rep) {
  json j;
  j["spec"] = {{"n_max", rep.spec.n_max},
               {"e_max", rep.spec.e_max},
               {"max_parallel", rep.spec.max_parallel},
               {"require_two_connected", rep.spec.require_two_connected}};
  j["budgets"] = {{"m_restarts", rep.budgets.m_restarts},
                  {"xi_restarts", rep.budgets.xi_restarts},
                  {"target_nullity", rep.budgets.target_nullity}};
  j["seed"] = rep.seed;
  j["total"] = rep.total;
  j["agree"] = rep.agree;
  j["disagree"] = rep.disagree;
  j["exempt"] = rep.exempt;
  j["inconclusive"] = rep.inconclusive;
  j["weak_strict_divergences"] = rep.weak_strict_divergences;
  j["k4_hypothesis_divergences"] = rep.k4_hypothesis_divergences;
  j["numeric_inconclusive"] = rep.numeric_inconclusive;
  return j;
}

// CSV: one row per class, stable column order. JSON: summary plus rows (all of
// them when include_rows, otherwise just the rows that carry anomalies).
inline void report_emit(const TheoremReport& rep, const std::string& csv_path,
                        const std::string& json_path, bool include_rows = false) {
  {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path);
    csv << theorem_csv_header() << '\n';
    for (const auto& r : rep.rows) csv << theorem_row_to_csv(r) << '\n';
  }
  {
    json j;
    j["summary"] = theorem_summary_to_json(rep);
    json rows = json::array();
    for (const auto& r : rep.rows)
      if (include_rows || !r.anomalies.empty() || r.verdict == "disagree" ||
          r.verdict == "inconclusive")
        rows.push_back(theorem_row_to_json(r));
    j["rows"] = std::move(rows);
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot open " + json_path);
    out << j.dump(2) << '\n';
  }
}

}  // namespace signedlab
