// Command-line surface: exact Tutte/random-cluster evaluation, sign
// dispatch, plane classification, polynomial specializations, gadget
// construction, and the sign-oracle min-cut reduction.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "tutte/gadgets.hpp"
#include "tutte/graph_io.hpp"
#include "tutte/plane.hpp"
#include "tutte/reduction.hpp"
#include "tutte/sign.hpp"
#include "tutte/tutte_eval.hpp"

using json = nlohmann::json;
using namespace tutte;

namespace {

Rational parse_rat(const std::string& s) { return Rational::parse(s); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

WeightFunction weights_for(const GraphFile& file, const std::string& gamma,
                           const std::string& weights_csv) {
  if (!weights_csv.empty()) {
    auto parts = split_commas(weights_csv);
    if (static_cast<int>(parts.size()) != file.graph.edge_count())
      throw std::invalid_argument("--weights needs one rational per edge");
    WeightFunction w;
    for (int i = 0; i < file.graph.edge_count(); ++i)
      w.set(file.graph.edges()[i].id, parse_rat(parts[i]));
    return w;
  }
  if (gamma.empty() && !file.explicit_weights.empty()) {
    // all edges must have explicit weights in this case
    WeightFunction w;
    for (const auto& e : file.graph.edges()) {
      auto it = file.explicit_weights.find(e.id);
      if (it == file.explicit_weights.end())
        throw std::invalid_argument("graph file leaves edges unweighted; pass --gamma");
      w.set(e.id, it->second);
    }
    return w;
  }
  if (gamma.empty()) throw std::invalid_argument("pass --gamma or per-edge weights");
  return file.weights_with_default(parse_rat(gamma));
}

json poly_json(const UniPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return json{{"coefficients_low_to_high", coeffs}, {"pretty", p.str()}};
}

json sign_json(const SignReport& r) {
  json out{{"sign", to_string(r.sign)}, {"method", r.method}};
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  if (r.value) out["value"] = r.value->str();
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact random-cluster Tutte polynomial toolkit"};
  app.require_subcommand(1);

  // ---- eval
  std::string graph_path, q_text, gamma_text, weights_csv;
  auto* eval = app.add_subcommand("eval", "exact Z(G;q,gamma)");
  eval->add_option("--graph", graph_path)->required();
  eval->add_option("--q", q_text)->required();
  eval->add_option("--gamma", gamma_text);
  eval->add_option("--weights", weights_csv, "comma-separated per-edge rationals");
  eval->callback([&] {
    GraphFile f = load_graph_file(graph_path);
    Rational z = z_multivariate(f.graph, parse_rat(q_text), weights_for(f, gamma_text, weights_csv));
    std::cout << z.str() << "\n";
  });

  // ---- sign
  std::string x_text, y_text, method = "auto";
  auto* sign = app.add_subcommand("sign", "sign of Z at a plane point");
  sign->add_option("--graph", graph_path)->required();
  sign->add_option("--x", x_text)->required();
  sign->add_option("--y", y_text)->required();
  sign->add_option("--method", method)->check(CLI::IsMember({"auto", "fp", "exact"}));
  sign->callback([&] {
    GraphFile f = load_graph_file(graph_path);
    PlanePoint p{parse_rat(x_text), parse_rat(y_text)};
    SignReport r;
    if (method == "exact") {
      Rational z = z_multivariate(f.graph, p.q(), WeightFunction(f.graph, p.gamma()));
      r = {sign_of(z), "exact-fallback", "", z};
    } else {
      r = sign_dispatch(f.graph, p);
      if (method == "fp" && r.method == "exact-fallback")
        throw std::invalid_argument("no polynomial-time sign rule at this point");
    }
    std::cout << sign_json(r).dump() << "\n";
  });

  // ---- classify
  auto* classify_cmd = app.add_subcommand("classify", "region and status of a plane point");
  classify_cmd->add_option("--x", x_text)->required();
  classify_cmd->add_option("--y", y_text)->required();
  classify_cmd->callback([&] {
    PlanePoint p{parse_rat(x_text), parse_rat(y_text)};
    PointClass c = classify(p);
    json out{{"x", p.x.str()},
             {"y", p.y.str()},
             {"q", p.q().str()},
             {"region", to_string(c.region)},
             {"status", to_string(c.status)}};
    std::cout << out.dump() << "\n";
  });

  // ---- map
  std::string xmin, xmax, ymin, ymax, step, format = "csv";
  auto* map_cmd = app.add_subcommand("map", "classify a lattice of points");
  map_cmd->add_option("--xmin", xmin)->required();
  map_cmd->add_option("--xmax", xmax)->required();
  map_cmd->add_option("--ymin", ymin)->required();
  map_cmd->add_option("--ymax", ymax)->required();
  map_cmd->add_option("--step", step)->required();
  map_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  map_cmd->callback([&] {
    auto rows = scan_grid(parse_rat(xmin), parse_rat(xmax), parse_rat(ymin), parse_rat(ymax),
                          parse_rat(step));
    std::cout << (format == "csv" ? grid_to_csv(rows) : grid_to_json(rows));
    if (format == "json") std::cout << "\n";
  });

  // ---- chromatic / flow
  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial P(G;q)");
  chrom->add_option("--graph", graph_path)->required();
  chrom->callback([&] {
    GraphFile f = load_graph_file(graph_path);
    std::cout << poly_json(chromatic_poly(f.graph)).dump() << "\n";
  });
  auto* flow = app.add_subcommand("flow", "flow polynomial F(G;q)");
  flow->add_option("--graph", graph_path)->required();
  flow->callback([&] {
    GraphFile f = load_graph_file(graph_path);
    std::cout << poly_json(flow_poly(f.graph)).dump() << "\n";
  });

  // ---- gadget
  std::string lemma, out_path, q_opt, delta_text = "0";
  int n_opt = 4;
  auto* gadget_cmd = app.add_subcommand("gadget", "construct and certify a shift gadget");
  gadget_cmd->add_option("--lemma", lemma, "xlefttoyup|shiftB1..B4|triangle1|triangle2|3227g1|"
                                           "F|F2|stretchCD|Fq12|Eq01|Eq12|diamond|gamma-n|petersen")
      ->required();
  gadget_cmd->add_option("--x", x_text);
  gadget_cmd->add_option("--y", y_text);
  gadget_cmd->add_option("--q", q_opt);
  gadget_cmd->add_option("--n", n_opt);
  gadget_cmd->add_option("--delta", delta_text);
  gadget_cmd->add_option("--out", out_path, "write the gadget graph file here");
  gadget_cmd->callback([&] {
    json out;
    auto emit_gadget = [&](const Gadget& gd) {
      std::string text = graph_to_string(gd.graph, &gd.weights, gd.s, gd.t);
      if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << text;
      } else {
        out["gadget"] = text;
      }
    };
    if (lemma == "gamma-n") {
      GammaNResult r = gamma_n_gadget(n_opt, parse_rat(q_opt), parse_rat(delta_text));
      out["implemented_weight"] = r.implemented.str();
      emit_gadget(r.gadget);
    } else if (lemma == "petersen") {
      PetersenResult r = petersen_gadget(parse_rat(q_opt), parse_rat(delta_text));
      out["implemented_weight"] = r.w.str();
      emit_gadget(r.gadget);
    } else if (lemma == "diamond") {
      PlanePoint p{parse_rat(x_text), parse_rat(y_text)};
      DiamondTrace trace = diamond_iterate(p);
      json pts = json::array();
      for (const auto& pt : trace.points) pts.push_back({{"x", pt.x.str()}, {"y", pt.y.str()}});
      out["trace"] = pts;
      out["collinear_exceptions"] = trace.collinear_exceptions;
      out["hit_x_minus_one"] = trace.hit_x_minus_one;
      out["expr"] = trace.expr->leaf_count() <= 64 ? trace.expr->str() : "(large)";
      if (trace.expr->leaf_count() <= 4096) emit_gadget(trace.expr->expand());
    } else {
      PlanePoint p{parse_rat(x_text), parse_rat(y_text)};
      auto results = construct(p, lemma);
      json pts = json::array();
      for (const auto& r : results) {
        json row{{"x", r.point.x.str()}, {"y", r.point.y.str()}};
        if (r.expr) row["leaves"] = r.expr->leaf_count();
        pts.push_back(row);
      }
      out["points"] = pts;
      emit_gadget(results[0].gadget);
    }
    std::cout << out.dump() << "\n";
  });

  // ---- mincut
  int s_vertex = 0, t_vertex = 1;
  std::string mode_text = "idealized";
  auto* mincut = app.add_subcommand("mincut", "count minimum (s,t)-cuts via the sign oracle");
  mincut->add_option("--graph", graph_path)->required();
  mincut->add_option("--s", s_vertex)->required();
  mincut->add_option("--t", t_vertex)->required();
  mincut->add_option("--q", q_text)->required();
  mincut->add_option("--mode", mode_text)->check(CLI::IsMember({"idealized", "gadget"}));
  mincut->callback([&] {
    GraphFile f = load_graph_file(graph_path);
    ReductionMode mode =
        mode_text == "idealized" ? ReductionMode::Idealized : ReductionMode::Gadgetized;
    ReductionReport r = count_min_cuts_via_sign(f.graph, s_vertex, t_vertex, parse_rat(q_text),
                                                exact_sign_oracle(), mode);
    json out{{"k", r.count.k},
             {"C", r.count.c},
             {"queries", r.oracle_queries},
             {"mode", mode_text},
             {"final_bracket", {r.bracket_lo.str(), r.bracket_hi.str()}},
             {"params",
              {{"M", r.params.M.str()},
               {"h", r.params.h},
               {"delta", r.params.delta.str()},
               {"eps_lo", r.params.eps_lo.str()},
               {"eps_hi", r.params.eps_hi.str()},
               {"rho", r.params.rho.str()},
               {"precision", r.params.precision.str()}}}};
    std::cout << out.dump() << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
