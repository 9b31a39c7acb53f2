#include "kirk/io.hpp"

#include <fstream>
#include <sstream>

namespace kirk {

namespace {

int parse_component_key(const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used == key.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw InvalidInput("component key '" + key + "' is not an integer");
}

template <class T>
T get_field(const Json& j, const char* name, const char* context) {
  if (!j.is_object() || !j.contains(name))
    throw InvalidInput(std::string(context) + ": missing field '" + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception&) {
    throw InvalidInput(std::string(context) + ": field '" + name + "' has the wrong type");
  }
}

int sign_value(const Json& j, const char* context) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(context) + ": sign must be 1 or -1");
  const auto s = j.get<long long>();
  if (s != 1 && s != -1) throw InvalidInput(std::string(context) + ": sign must be 1 or -1");
  return static_cast<int>(s);
}

}  // namespace

LinkMapPresentation presentation_from_json(const Json& j) {
  const int n = get_field<int>(j, "n", "presentation");
  LinkMapPresentation p(n);
  if (!j.contains("components")) return p;
  const Json& comps = j.at("components");
  if (!comps.is_object()) throw InvalidInput("presentation: 'components' must be an object");
  for (const auto& [key, list] : comps.items()) {
    const int i = parse_component_key(key);
    if (i < 1 || i > n)
      throw InvalidInput("presentation: component " + key + " outside 1.." + std::to_string(n));
    if (!list.is_array())
      throw InvalidInput("presentation: component " + key + " must list singularities");
    for (const Json& s : list) {
      if (!s.is_object() || !s.contains("sign"))
        throw InvalidInput("presentation: singularity without sign on component " + key);
      const int sign = sign_value(s.at("sign"), "presentation");
      const auto word = get_field<std::string>(s, "word", "presentation");
      try {
        p.add(i, sign, parse_word(word, n, i));
      } catch (const InvalidInput& e) {
        throw InvalidInput("presentation: component " + key + ", word '" + word + "': " + e.what());
      }
    }
  }
  return p;
}

Json to_json(const LinkMapPresentation& p) {
  Json comps = Json::object();
  for (int i = 1; i <= p.n(); ++i) {
    if (p.component(i).empty()) continue;
    Json list = Json::array();
    for (const Singularity& s : p.component(i))
      list.push_back({{"sign", s.sign}, {"word", s.word.to_string()}});
    comps[std::to_string(i)] = list;
  }
  return {{"n", p.n()}, {"components", comps}};
}

DiagramSpec diagram_from_json(const Json& j) {
  DiagramSpec d;
  d.n = get_field<int>(j, "n", "diagram");
  for (const Json& a : get_field<Json>(j, "arcs", "diagram"))
    d.arcs.push_back({get_field<std::string>(a, "id", "arc"), get_field<int>(a, "component", "arc")});
  const Json base = get_field<Json>(j, "base_arcs", "diagram");
  if (!base.is_object()) throw InvalidInput("diagram: 'base_arcs' must be an object");
  for (const auto& [key, arc] : base.items()) {
    if (!arc.is_string()) throw InvalidInput("diagram: base arc must be an arc id");
    d.base_arcs[parse_component_key(key)] = arc.get<std::string>();
  }
  if (j.contains("crossings"))
    for (const Json& x : j.at("crossings"))
      d.crossings.push_back({get_field<std::string>(x, "over", "crossing"),
                             get_field<std::string>(x, "under_in", "crossing"),
                             get_field<std::string>(x, "under_out", "crossing"),
                             sign_value(get_field<Json>(x, "sign", "crossing"), "crossing")});
  d.validate();
  return d;
}

Json to_json(const DiagramSpec& d) {
  Json arcs = Json::array();
  for (const Arc& a : d.arcs) arcs.push_back({{"id", a.id}, {"component", a.component}});
  Json base = Json::object();
  for (const auto& [c, id] : d.base_arcs) base[std::to_string(c)] = id;
  Json crossings = Json::array();
  for (const Crossing& x : d.crossings)
    crossings.push_back({{"over", x.over},
                         {"under_in", x.under_in},
                         {"under_out", x.under_out},
                         {"sign", x.sign}});
  return {{"n", d.n}, {"arcs", arcs}, {"base_arcs", base}, {"crossings", crossings}};
}

CrossSection cross_section_from_json(const Json& j) {
  CrossSection cs;
  cs.diagram = diagram_from_json(j.contains("diagram") ? j.at("diagram") : j);
  if (!j.contains("singularities")) return cs;
  const Json& sings = j.at("singularities");
  if (!sings.is_object()) throw InvalidInput("cross-section: 'singularities' must be an object");
  for (const auto& [key, list] : sings.items()) {
    const int i = parse_component_key(key);
    if (i < 1 || i > cs.n())
      throw InvalidInput("cross-section: component " + key + " outside 1.." + std::to_string(cs.n()));
    if (!list.is_array()) throw InvalidInput("cross-section: singularities must be a list");
    auto& out = cs.singularities[i];
    for (const Json& s : list) {
      CrossSectionSingularity cs_sing;
      cs_sing.sign = sign_value(get_field<Json>(s, "sign", "singularity"), "singularity");
      for (const Json& step : get_field<Json>(s, "loop", "singularity")) {
        if (!step.is_array() || step.size() != 2 || !step[0].is_string())
          throw InvalidInput("cross-section: loop steps are [arc id, sign] pairs");
        cs_sing.loop.crossings.emplace_back(step[0].get<std::string>(),
                                            sign_value(step[1], "loop step"));
        cs.diagram.component_of(step[0].get<std::string>());
      }
      out.push_back(std::move(cs_sing));
    }
  }
  return cs;
}

Json to_json(const CrossSection& cs) {
  Json j = to_json(cs.diagram);
  Json sings = Json::object();
  for (const auto& [i, list] : cs.singularities) {
    Json arr = Json::array();
    for (const auto& s : list) {
      Json loop = Json::array();
      for (const auto& [arc, sign] : s.loop.crossings) loop.push_back({arc, sign});
      arr.push_back({{"sign", s.sign}, {"loop", loop}});
    }
    sings[std::to_string(i)] = arr;
  }
  j["singularities"] = sings;
  return j;
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const Term& t : p.terms())
    out.push_back({{"indices", t.monomial.indices()}, {"coeff", t.coeff}});
  return out;
}

Json to_json(const Residue& r) { return {{"value", r.value}, {"modulus", r.modulus}}; }

Json to_json(const KEntry& e) {
  Json moduli = Json::array();
  for (const auto& [m, mod] : e.moduli)
    moduli.push_back({{"indices", m.indices()}, {"modulus", mod}});
  return {{"rho", e.rho},
          {"payload", e.payload.to_string()},
          {"payload_terms", to_json(e.payload)},
          {"moduli", moduli}};
}

Json to_json(const std::vector<KPair>& pairs) {
  Json out = Json::array();
  for (const KPair& p : pairs)
    out.push_back({{"rho", p.rho}, {"kappa_tilde", to_json(p.residue)}});
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace kirk
