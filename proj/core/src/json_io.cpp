#include "subdiv/json_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include "subdiv/errors.hpp"

namespace subdiv {

Json category_to_json(const FinCategory& c) {
  Json j;
  j["objects"] = c.object_count();
  Json morphs = Json::array();
  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    morphs.push_back({{"id", m}, {"dom", c.dom(m)}, {"cod", c.cod(m)}});
  }
  j["morphisms"] = std::move(morphs);
  Json idents = Json::array();
  for (ObjectId o = 0; o < c.object_count(); ++o) idents.push_back(c.identity(o));
  j["identities"] = std::move(idents);
  Json comps = Json::array();
  for (MorphismId g = 0; g < c.morphism_count(); ++g) {
    if (c.is_identity(g)) continue;
    for (MorphismId f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) continue;
      MorphismId gf = c.try_compose(g, f);
      if (gf != kNoMorphism) comps.push_back({g, f, gf});
    }
  }
  j["composition"] = std::move(comps);
  return j;
}

namespace {

FinCategory category_from_plain(const Json& j) {
  if (!j.contains("objects") || !j.contains("morphisms")) {
    throw Error("category document needs \"objects\" and \"morphisms\"");
  }
  std::size_t n_obj = j.at("objects").get<std::size_t>();
  const Json& morphs = j.at("morphisms");
  std::vector<Arrow> arrows(morphs.size());
  for (const Json& m : morphs) {
    std::size_t id = m.at("id").get<std::size_t>();
    if (id >= arrows.size()) throw Error("morphism id out of range");
    arrows[id] = Arrow{m.at("dom").get<ObjectId>(), m.at("cod").get<ObjectId>()};
  }
  if (j.contains("identities")) {
    const Json& idents = j.at("identities");
    if (idents.size() != n_obj) throw Error("identities list has wrong length");
    for (std::size_t o = 0; o < n_obj; ++o) {
      if (idents[o].get<std::size_t>() != o) {
        throw Error("identities must be the morphisms 0..objects-1 in order");
      }
    }
  }
  std::vector<std::array<MorphismId, 3>> comps;
  if (j.contains("composition")) {
    for (const Json& t : j.at("composition")) {
      if (!t.is_array() || t.size() != 3) throw Error("composition entries are [g, f, gf] triples");
      comps.push_back({t[0].get<MorphismId>(), t[1].get<MorphismId>(), t[2].get<MorphismId>()});
    }
  }
  return FinCategory(n_obj, arrows, comps);
}

FinCategory category_from_builder(const Json& j) {
  std::string name = j.at("builder").get<std::string>();
  auto arg = [&](const char* key, int fallback) {
    return j.contains(key) ? j.at(key).get<int>() : fallback;
  };
  if (name == "cyclic") return cyclic_group(arg("n", 2));
  if (name == "dihedral") return dihedral_group(arg("n", 3));
  if (name == "klein_four") return klein_four();
  if (name == "quaternion") return quaternion_group();
  if (name == "frobenius21") return frobenius21();
  if (name == "pair") return pair_groupoid(arg("n", 2));
  if (name == "discrete") return discrete(arg("n", 1));
  if (name == "interval") return poset_interval(arg("n", 1));
  if (name == "zigzag") return zigzag(arg("n", 2));
  if (name == "vertex_group") {
    if (!j.contains("group")) throw Error("vertex_group builder needs a \"group\" subdocument");
    FinCategory g = category_from_json(j.at("group"));
    return vertex_group_groupoid(g, arg("n", 2));
  }
  if (name == "coproduct") {
    if (!j.contains("parts")) throw Error("coproduct builder needs a \"parts\" array");
    std::vector<FinCategory> parts;
    for (const Json& p : j.at("parts")) parts.push_back(category_from_json(p));
    std::vector<const FinCategory*> ptrs;
    for (const FinCategory& p : parts) ptrs.push_back(&p);
    return coproduct(ptrs).cat;
  }
  throw Error("unknown builder \"" + name + "\"");
}

}  // namespace

FinCategory category_from_json(const Json& j) {
  if (!j.is_object()) throw Error("category document must be a JSON object");
  if (j.contains("builder")) return category_from_builder(j);
  if (j.contains("category")) return category_from_json(j.at("category"));
  return category_from_plain(j);
}

Json functor_to_json(const Functor& f) {
  Json j;
  j["objects"] = f.objects;
  j["morphisms"] = f.morphisms;
  return j;
}

Functor functor_from_json(const Json& j) {
  const Json& doc = j.contains("functor") ? j.at("functor") : j;
  Functor f;
  f.objects = doc.at("objects").get<std::vector<ObjectId>>();
  f.morphisms = doc.at("morphisms").get<std::vector<MorphismId>>();
  return f;
}

Json sd_to_json(const SdCategory& sd) {
  Json j;
  j["category"] = category_to_json(sd.category());
  Json index;
  if (sd.truncation() == kFullSubdivision) {
    index["truncation"] = "full";
  } else {
    index["truncation"] = sd.truncation();
  }
  Json objs = Json::array();
  for (ObjectId o = 0; o < sd.category().object_count(); ++o) {
    const Simplex& x = sd.simplex(o);
    objs.push_back({{"id", o}, {"base", x.base}, {"chain", x.chain}});
  }
  index["objects"] = std::move(objs);
  j["index"] = std::move(index);
  return j;
}

std::string to_dot(const FinCategory& c) {
  std::ostringstream out;
  out << "digraph category {\n";
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    out << "  o" << o << " [label=\"" << o << "\"];\n";
  }
  for (MorphismId m = c.object_count(); m < c.morphism_count(); ++m) {
    out << "  o" << c.dom(m) << " -> o" << c.cod(m) << " [label=\"" << m << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SdCategory& sd) {
  const FinCategory& c = sd.category();
  std::ostringstream out;
  out << "digraph subdivision {\n";
  for (ObjectId o = 0; o < c.object_count(); ++o) {
    const Simplex& x = sd.simplex(o);
    out << "  o" << o << " [label=\"" << x.base;
    for (MorphismId f : x.chain) out << "|" << f;
    out << "\"];\n";
  }
  for (MorphismId m = c.object_count(); m < c.morphism_count(); ++m) {
    out << "  o" << c.dom(m) << " -> o" << c.cod(m) << " [label=\"{";
    bool first = true;
    for (int v : subset_elements(sd.subset(m))) {
      if (!first) out << ",";
      out << v;
      first = false;
    }
    out << "}\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {
Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}
}  // namespace

FinCategory load_category_file(const std::string& path) {
  return category_from_json(parse_file(path));
}

Functor load_functor_file(const std::string& path) {
  return functor_from_json(parse_file(path));
}

}  // namespace subdiv
