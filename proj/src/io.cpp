#include "colorlie/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace colorlie {

namespace {

using Json = nlohmann::ordered_json;

GroupElement parse_degree(const GradingGroup& group, const Json& j) {
  if (j.is_string()) return group.parse(j.get<std::string>());
  if (!j.is_array()) throw Error("degree must be an array of integers or a string");
  std::vector<long> exps;
  for (const auto& v : j) exps.push_back(v.get<long>());
  return group.element(std::move(exps));
}

SparseVec parse_terms(const ColorLieAlgebra& L, const Json& terms, unsigned conductor) {
  SparseVec out;
  for (const auto& term : terms) {
    int k = L.index(term.at("out").get<std::string>());
    Scalar c = Scalar::parse(term.at("coeff").get<std::string>(), conductor);
    sparse_add(out, k, c);
  }
  return out;
}

}  // namespace

AlgebraDefinition parse_definition(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("definition parse error: ") + e.what());
  }
  try {
    GradingGroup group;
    const auto& jg = j.at("group");
    group.free_rank = jg.at("free_rank").get<int>();
    for (const auto& n : jg.at("torsion")) group.torsion.push_back(n.get<long>());
    group.validate();

    unsigned conductor = group.default_conductor();
    std::vector<std::vector<std::optional<Scalar>>> table(
        group.generators(), std::vector<std::optional<Scalar>>(group.generators()));
    if (j.contains("bicharacter")) {
      const auto& jb = j.at("bicharacter");
      if (jb.contains("conductor")) conductor = jb.at("conductor").get<unsigned>();
      if (jb.contains("table")) {
        const auto& jt = jb.at("table");
        if (static_cast<int>(jt.size()) != group.generators())
          throw Error("bicharacter table has wrong shape");
        for (int i = 0; i < group.generators(); ++i) {
          if (static_cast<int>(jt[i].size()) != group.generators())
            throw Error("bicharacter table has wrong shape");
          for (int k = 0; k < group.generators(); ++k)
            if (!jt[i][k].is_null())
              table[i][k] = Scalar::parse(jt[i][k].get<std::string>(), conductor);
        }
      }
    }
    Bicharacter bichar(group, conductor, std::move(table));

    std::vector<std::string> names;
    std::vector<GroupElement> degrees;
    for (const auto& b : j.at("basis")) {
      names.push_back(b.at("name").get<std::string>());
      degrees.push_back(b.contains("degree") ? parse_degree(group, b.at("degree"))
                                             : group.identity());
    }

    // two passes: a bracketless algebra resolves names, then the real one
    ColorLieAlgebra lookup(names, degrees, bichar, {});
    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
      for (const auto& e : j.at("brackets")) {
        BracketEntry entry;
        entry.left = lookup.index(e.at("left").get<std::string>());
        entry.right = lookup.index(e.at("right").get<std::string>());
        entry.terms = parse_terms(lookup, e.at("terms"), conductor);
        entries.push_back(std::move(entry));
      }
    }

    AlgebraDefinition def{j.value("name", std::string{}),
                          ColorLieAlgebra(std::move(names), std::move(degrees), std::move(bichar),
                                          std::move(entries)),
                          {},
                          std::nullopt};
    const ColorLieAlgebra& L = def.algebra;
    GroupElement e = group.identity();

    if (j.contains("deformation")) {
      for (const auto& layer : j.at("deformation")) {
        int order = layer.at("order").get<int>();
        Cochain mu;
        mu.arity = 2;
        mu.degree = e;
        for (const auto& v : layer.at("values")) {
          IndexTuple tuple{L.index(v.at("left").get<std::string>()),
                           L.index(v.at("right").get<std::string>())};
          accumulate(L, mu, tuple, parse_terms(L, v.at("terms"), conductor));
        }
        Module ad = Module::adjoint(L);
        auto check = check_cochain(L, ad, mu);
        if (!check.ok()) throw ValidationError("deformation layer " + std::to_string(order), check);
        def.deformation.emplace_back(order, std::move(mu));
      }
    }

    if (j.contains("cocycle")) {
      Cochain omega;
      omega.arity = 2;
      omega.degree = e;
      for (const auto& v : j.at("cocycle")) {
        IndexTuple tuple{L.index(v.at("left").get<std::string>()),
                         L.index(v.at("right").get<std::string>())};
        Scalar c = Scalar::parse(v.at("coeff").get<std::string>(), conductor);
        accumulate(L, omega, tuple, SparseVec{{0, c}});
      }
      Module triv = Module::trivial(L);
      auto check = check_cochain(L, triv, omega);
      if (!check.ok()) throw ValidationError("cocycle section", check);
      def.cocycle = std::move(omega);
    }
    return def;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("definition structure error: ") + e.what());
  }
}

AlgebraDefinition load_definition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_definition(buffer.str());
}

std::string render_definition(const AlgebraDefinition& def) {
  const ColorLieAlgebra& L = def.algebra;
  const GradingGroup& group = L.group();
  Json j;
  if (!def.name.empty()) j["name"] = def.name;
  j["group"] = Json{{"free_rank", group.free_rank}, {"torsion", group.torsion}};

  Json table = Json::array();
  for (int i = 0; i < group.generators(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < group.generators(); ++k) row.push_back(L.bicharacter().entry(i, k).str());
    table.push_back(std::move(row));
  }
  j["bicharacter"] = Json{{"conductor", L.conductor()}, {"table", std::move(table)}};

  Json basis = Json::array();
  for (int i = 0; i < L.dim(); ++i)
    basis.push_back(Json{{"name", L.name(i)}, {"degree", L.degree(i).exps()}});
  j["basis"] = std::move(basis);

  Json brackets = Json::array();
  for (const auto& entry : L.declared_brackets()) {
    Json terms = Json::array();
    for (const auto& [k, c] : entry.terms)
      terms.push_back(Json{{"out", L.name(k)}, {"coeff", c.str()}});
    brackets.push_back(Json{{"left", L.name(entry.left)},
                            {"right", L.name(entry.right)},
                            {"terms", std::move(terms)}});
  }
  j["brackets"] = std::move(brackets);

  if (!def.deformation.empty()) {
    Json layers = Json::array();
    for (const auto& [order, mu] : def.deformation) {
      Json values = Json::array();
      for (const auto& [tuple, vec] : mu.values) {
        Json terms = Json::array();
        for (const auto& [k, c] : vec) terms.push_back(Json{{"out", L.name(k)}, {"coeff", c.str()}});
        values.push_back(Json{{"left", L.name(tuple[0])},
                              {"right", L.name(tuple[1])},
                              {"terms", std::move(terms)}});
      }
      layers.push_back(Json{{"order", order}, {"values", std::move(values)}});
    }
    j["deformation"] = std::move(layers);
  }

  if (def.cocycle) {
    Json values = Json::array();
    for (const auto& [tuple, vec] : def.cocycle->values)
      values.push_back(Json{{"left", L.name(tuple[0])},
                            {"right", L.name(tuple[1])},
                            {"coeff", vec.begin()->second.str()}});
    j["cocycle"] = std::move(values);
  }
  return j.dump(2) + "\n";
}

}  // namespace colorlie
