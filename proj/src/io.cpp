#include "semimetric/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "semimetric/error.hpp"

namespace semimetric::io {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

void only_keys(const Json& obj, const std::set<std::string>& allowed, const char* what) {
  if (!obj.is_object()) malformed(std::string(what) + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) malformed(std::string("unknown key \"") + key + "\" in " + what);
  }
}

std::vector<std::string> string_list(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_array()) {
    malformed(std::string("\"") + key + "\" must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : obj.at(key)) {
    if (!v.is_string()) malformed(std::string("\"") + key + "\" must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::vector<Rational>> rational_rows(const Json& obj, const char* key) {
  const Json& rows = obj.at(key);
  if (!rows.is_array()) malformed(std::string("\"") + key + "\" must be an array of arrays");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) malformed(std::string("\"") + key + "\" rows must be arrays");
    auto& r = out.emplace_back();
    for (const auto& v : row) {
      if (!v.is_string()) malformed(std::string("\"") + key + "\" entries must be rational strings");
      r.push_back(parse_rational(v.get<std::string>()));
    }
  }
  return out;
}

Json labels_json(const LabelSet& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

Json pairs_json(const std::vector<LabelPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

Json bijection_json(const Bijection& phi) {
  Json out = Json::array();
  for (const auto& [from, to] : phi.map) out.push_back(Json::array({from, to}));
  return out;
}

std::string join(const LabelSet& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
  return out + "}";
}

std::string pairs_text(const std::vector<LabelPair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += (i ? " " : "") + std::string("(") + pairs[i].first + "," + pairs[i].second + ")";
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

SemimetricSpace parse_space(std::string_view text) {
  const Json doc = parse_json(text);
  only_keys(doc, {"points", "sq_dists", "coords"}, "space file");
  auto labels = string_list(doc, "points");
  const bool has_matrix = doc.contains("sq_dists");
  const bool has_coords = doc.contains("coords");
  if (has_matrix == has_coords) malformed("space file needs exactly one of \"sq_dists\" or \"coords\"");
  if (has_coords) return from_rational_points(rational_rows(doc, "coords"), std::move(labels));
  return validate_space(std::move(labels), rational_rows(doc, "sq_dists"));
}

SemimetricSpace load_space(const std::filesystem::path& path) { return parse_space(read_file(path)); }

Json space_to_json(const SemimetricSpace& space) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(to_string(space.sq(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"points", labels_json(space.labels())}, {"sq_dists", std::move(rows)}};
}

BipartiteGraph parse_graph(std::string_view text) {
  const Json doc = parse_json(text);
  only_keys(doc, {"part_a", "part_b", "edges"}, "graph file");
  auto a = string_list(doc, "part_a");
  auto b = string_list(doc, "part_b");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) malformed("\"edges\" must be an array");
  std::vector<LabelPair> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      malformed("each edge must be a pair of labels");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return BipartiteGraph::create(std::move(a), std::move(b), std::move(edges));
}

BipartiteGraph load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

Json graph_to_json(const BipartiteGraph& graph) {
  return Json{{"part_a", labels_json(graph.part_a)},
              {"part_b", labels_json(graph.part_b)},
              {"edges", pairs_json(graph.edges)}};
}

Json to_json(const ClassificationReport& r) {
  Json out{{"method", std::string(to_string(r.method))},
           {"sr", r.sr},
           {"wr", r.wr},
           {"ubpp", r.ubpp}};
  if (r.sr_witness) {
    out["sr_witness"] = Json::array({r.sr_witness->first.name(), r.sr_witness->second.name()});
  }
  if (r.wr_witness) {
    out["wr_witness"] = Json::array({(*r.wr_witness)[0], (*r.wr_witness)[1], (*r.wr_witness)[2]});
  }
  if (r.ubpp_witness) {
    out["ubpp_witness"] = Json{{"a", labels_json(r.ubpp_witness->a)},
                               {"b", labels_json(r.ubpp_witness->b)},
                               {"pairs", pairs_json(r.ubpp_witness->pairs)}};
  }
  if (r.fourpoint_witness) {
    const auto& w = *r.fourpoint_witness;
    Json fw{{"failed", std::string(to_string(w.failed))}, {"subset", labels_json(w.subset)}};
    if (w.signature) fw["signature"] = w.signature->to_string();
    if (w.similarity) fw["bijection"] = bijection_json(*w.similarity);
    out["fourpoint_witness"] = std::move(fw);
  }
  return out;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "method: " << to_string(r.method) << "\n";
  out << "sr: " << flag(r.sr);
  if (r.sr_witness) {
    out << "  witness: " << r.sr_witness->first.name() << " and " << r.sr_witness->second.name()
        << " at equal distance";
  }
  out << "\nwr: " << flag(r.wr);
  if (r.wr_witness) {
    const auto& t = *r.wr_witness;
    out << "  witness: d(" << t[1] << "," << t[0] << ") = d(" << t[1] << "," << t[2] << ")";
  }
  out << "\nubpp: " << flag(r.ubpp) << "\n";
  if (r.ubpp_witness) {
    out << "  split: A = " << join(r.ubpp_witness->a) << ", B = " << join(r.ubpp_witness->b)
        << ", best proximity pairs " << pairs_text(r.ubpp_witness->pairs) << "\n";
  }
  if (r.fourpoint_witness) {
    const auto& w = *r.fourpoint_witness;
    out << "  four-point failure: " << to_string(w.failed) << " on " << join(w.subset);
    if (w.signature) out << ", signature " << w.signature->to_string();
    out << "\n";
  }
  return out.str();
}

Json to_json(const SimilarityVerdict& v) {
  Json out{{"kind", std::string(to_string(v.kind))}};
  if (v.ratio_sq) out["ratio_sq"] = to_string(*v.ratio_sq);
  if (v.witness) out["bijection"] = bijection_json(*v.witness);
  Json table = Json::array();
  for (const auto& [a, b] : v.value_table) table.push_back(Json::array({to_string(a), to_string(b)}));
  out["value_table"] = std::move(table);
  return out;
}

std::string to_text(const SimilarityVerdict& v) {
  std::ostringstream out;
  out << "kind: " << to_string(v.kind) << "\n";
  if (v.ratio_sq) out << "ratio_sq: " << to_string(*v.ratio_sq) << "\n";
  if (v.witness) {
    out << "bijection:\n";
    for (const auto& [from, to] : v.witness->map) out << "  " << from << " -> " << to << "\n";
  }
  if (!v.value_table.empty()) {
    out << "matched squared distances:\n";
    for (const auto& [a, b] : v.value_table) out << "  " << to_string(a) << " -> " << to_string(b) << "\n";
  }
  return out.str();
}

Json to_json(const Certificate& c) {
  Json out = Json::object();
  for (const auto& check : c.checks) out[check.name] = check.passed;
  out["all_passed"] = c.all_passed();
  return out;
}

std::string to_text(const Certificate& c) {
  std::ostringstream out;
  for (const auto& check : c.checks) out << check.name << ": " << flag(check.passed) << "\n";
  out << "all_passed: " << flag(c.all_passed()) << "\n";
  return out.str();
}

Json to_json(const ConjectureVerdict& v) {
  Json out{{"stars_literal", v.stars_literal},
           {"stars_positive_part", v.stars_positive_part},
           {"realizable", v.realizable}};
  if (v.witness) out["witness"] = space_to_json(*v.witness);
  return out;
}

std::string to_text(const ConjectureVerdict& v) {
  std::ostringstream out;
  out << "stars (every component): " << flag(v.stars_literal) << "\n";
  out << "stars (isolated A-vertices ignored): " << flag(v.stars_positive_part) << "\n";
  out << "realizable as a weakly rigid nearest-point graph: " << flag(v.realizable) << "\n";
  if (v.witness) out << "witness: " << space_to_json(*v.witness).dump() << "\n";
  return out.str();
}

Json to_json(const ConjectureScan& scan) {
  Json rows = Json::array();
  for (const auto& row : scan.rows) {
    rows.push_back(Json{{"graph", graph_to_json(row.graph)},
                        {"stars_literal", row.verdict.stars_literal},
                        {"stars_positive_part", row.verdict.stars_positive_part},
                        {"realizable", row.verdict.realizable}});
  }
  return Json{{"graphs", scan.rows.size()},
              {"agree_literal", scan.agree_literal},
              {"agree_positive_part", scan.agree_positive_part},
              {"rows", std::move(rows)}};
}

std::string to_text(const ConjectureScan& scan) {
  std::ostringstream out;
  out << "|A| |B| realizable stars_literal stars_positive_part edges\n";
  for (const auto& row : scan.rows) {
    out << row.graph.part_a.size() << "   " << row.graph.part_b.size() << "   "
        << (row.verdict.realizable ? "yes" : "no ") << "        "
        << (row.verdict.stars_literal ? "yes" : "no ") << "           "
        << (row.verdict.stars_positive_part ? "yes" : "no ") << "                 "
        << pairs_text(row.graph.edges) << "\n";
  }
  out << "graphs: " << scan.rows.size() << "\n";
  out << "agree (literal reading): " << scan.agree_literal << "\n";
  out << "agree (isolated A-vertices ignored): " << scan.agree_positive_part << "\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) malformed("cannot write " + path.string());
  out << text;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace semimetric::io
