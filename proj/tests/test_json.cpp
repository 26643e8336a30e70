#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "subdiv/fincat.hpp"
#include "subdiv/json_io.hpp"
#include "subdiv/subdivision.hpp"

using namespace subdiv;

TEST_CASE("category documents round-trip") {
  for (const FinCategory& c :
       {dihedral_group(3), pair_groupoid(3), zigzag(2),
        vertex_group_groupoid(cyclic_group(2), 2), poset_interval(2)}) {
    const Json doc = category_to_json(c);
    CHECK(category_from_json(doc) == c);
  }
}

TEST_CASE("category document layout") {
  const FinCategory d3 = dihedral_group(3);
  const Json doc = category_to_json(d3);
  CHECK(doc["objects"] == 1);
  CHECK(doc["identities"] == Json::array({0}));
  REQUIRE(doc["morphisms"].size() == 6);
  CHECK(doc["morphisms"][4]["id"] == 4);
  CHECK(doc["morphisms"][4]["dom"] == 0);
  CHECK(doc["morphisms"][4]["cod"] == 0);
  CHECK(doc["composition"].size() == 25);  // non-identity pairs only

  const Json p2 = category_to_json(pair_groupoid(2));
  CHECK(p2["identities"] == Json::array({0, 1}));
}

TEST_CASE("builder shorthand") {
  CHECK(category_from_json({{"builder", "dihedral"}, {"n", 3}}) == dihedral_group(3));
  CHECK(category_from_json({{"builder", "cyclic"}, {"n", 5}}) == cyclic_group(5));
  CHECK(category_from_json({{"builder", "klein_four"}}) == klein_four());
  CHECK(category_from_json({{"builder", "quaternion"}}) == quaternion_group());
  CHECK(category_from_json({{"builder", "pair"}, {"n", 3}}) == pair_groupoid(3));
  CHECK(category_from_json({{"builder", "zigzag"}, {"n", 2}}) == zigzag(2));

  Json cp;
  cp["builder"] = "coproduct";
  cp["parts"] = Json::array({Json{{"builder", "cyclic"}, {"n", 3}},
                             Json{{"builder", "pair"}, {"n", 2}}});
  const FinCategory z3 = cyclic_group(3);
  const FinCategory p2 = pair_groupoid(2);
  CHECK(category_from_json(cp) == coproduct({&z3, &p2}).cat);

  // wrapped documents are unwrapped
  Json wrapped;
  wrapped["category"] = Json{{"builder", "cyclic"}, {"n", 4}};
  CHECK(category_from_json(wrapped) == cyclic_group(4));
}

TEST_CASE("functor documents round-trip") {
  const Functor conj{{0}, {0, 2, 1, 3, 5, 4}};
  CHECK(functor_from_json(functor_to_json(conj)) == conj);
}

TEST_CASE("subdivision document") {
  const SdCategory sd = build_sd(pair_groupoid(2));
  const Json doc = sd_to_json(sd);
  CHECK(doc["index"]["truncation"] == 2);
  REQUIRE(doc["index"]["objects"].size() == 6);
  CHECK(doc["index"]["objects"][4]["base"] == 0);
  CHECK(doc["index"]["objects"][4]["chain"].size() == 2);
  CHECK(category_from_json(doc["category"]) == sd.category());

  const SdCategory full = build_sd(zigzag(2), kFullSubdivision);
  CHECK(sd_to_json(full)["index"]["truncation"] == "full");
}

TEST_CASE("canonical dump is stable and newline-terminated") {
  const Json doc = category_to_json(dihedral_group(3));
  const std::string a = dump_json(doc);
  const std::string b = dump_json(category_to_json(dihedral_group(3)));
  CHECK(a == b);
  REQUIRE(!a.empty());
  CHECK(a.back() == '\n');
  CHECK(a.rfind("{\n  \"objects\":", 0) == 0);
}

TEST_CASE("dot output") {
  CHECK(to_dot(pair_groupoid(2)).find("digraph") != std::string::npos);
  CHECK(to_dot(build_sd(cyclic_group(2))).find("digraph") != std::string::npos);
}

TEST_CASE("file loading") {
  const std::string path = "/tmp/subdiv_test_cat.json";
  {
    std::ofstream out(path);
    out << dump_json(category_to_json(dihedral_group(3)));
  }
  CHECK(load_category_file(path) == dihedral_group(3));
  std::remove(path.c_str());

  const std::string fpath = "/tmp/subdiv_test_fun.json";
  const Functor conj{{0}, {0, 2, 1, 3, 5, 4}};
  {
    std::ofstream out(fpath);
    out << dump_json(functor_to_json(conj));
  }
  CHECK(load_functor_file(fpath) == conj);
  std::remove(fpath.c_str());

  CHECK_THROWS(load_category_file("/tmp/subdiv_no_such_file.json"));
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS(category_from_json(Json::object()));
  CHECK_THROWS(category_from_json({{"builder", "octonion"}}));
  CHECK_THROWS(functor_from_json(Json::object()));
}
