#include <algorithm>

#include "doctest.h"
#include "mfm/model.hpp"

using namespace mfm;

namespace {

MfmModel toy_plant() {
  MfmModel m;
  m.name = "ToyPlant";
  m = add_vertex(m, Vertex{"Faucet1", FunctionType{"source"}, StateLabel{"No"}});
  m = add_vertex(m, Vertex{"Pipe1", FunctionType{"transport"}, StateLabel{"No"}});
  m = add_edge(m, Edge{"Faucet1", "Pipe1", RelationType{"influencer"}, true});
  return m;
}

bool has_invariant(const std::vector<ModelDiagnostic>& ds, const std::string& inv,
                   const std::string& subject) {
  return std::any_of(ds.begin(), ds.end(), [&](const ModelDiagnostic& d) {
    return d.invariant == inv && d.subject == subject;
  });
}

}  // namespace

TEST_CASE("labels and names enforce their lexical rules") {
  CHECK_THROWS_AS(FunctionType{"Source"}, Error);
  CHECK_THROWS_AS(RelationType{"Influencer"}, Error);
  CHECK_THROWS_AS(StateLabel{"high"}, Error);
  CHECK(FunctionType{"source"}.label == "source");
  CHECK(StateLabel{"High"}.label == "High");
}

TEST_CASE("builders keep the input model untouched") {
  MfmModel empty;
  empty.name = "Plant";
  MfmModel one = add_vertex(empty, Vertex{"Tank1", FunctionType{"storage"}, std::nullopt});
  CHECK(empty.vertices.empty());
  REQUIRE(one.vertices.size() == 1);
  CHECK(one.find_vertex("Tank1") != nullptr);
  CHECK(one.find_vertex("Tank2") == nullptr);
  CHECK(one.stateless());
  CHECK_FALSE(toy_plant().stateless());
}

TEST_CASE("add_vertex and add_edge reject malformed elements") {
  MfmModel m = toy_plant();
  CHECK_THROWS_AS(add_vertex(m, Vertex{"pipe2", FunctionType{"transport"}, std::nullopt}), Error);
  CHECK_THROWS_AS(add_vertex(m, Vertex{"Faucet1", FunctionType{"source"}, std::nullopt}), Error);
  CHECK_THROWS_AS(add_edge(m, Edge{"Faucet1", "Ghost", RelationType{"influencer"}, true}), Error);
  CHECK_THROWS_AS(add_edge(m, Edge{"Pipe1", "Pipe1", RelationType{"influencer"}, false}), Error);
  CHECK_THROWS_AS(add_edge(m, Edge{"Faucet1", "Pipe1", RelationType{"influencer"}, false}), Error);
  // Same endpoints under a different relation are a distinct edge.
  CHECK_NOTHROW(add_edge(m, Edge{"Faucet1", "Pipe1", RelationType{"participant"}, false}));
}

TEST_CASE("validate reports each broken invariant with its subject") {
  CHECK(validate(toy_plant()).empty());

  // Bypass the builders to assemble broken models directly.
  MfmModel m;
  m.name = "Broken";
  m.vertices.push_back(Vertex{"badname", FunctionType{"source"}, std::nullopt});
  m.vertices.push_back(Vertex{"Tank1", FunctionType{"storage"}, StateLabel{"High"}});
  m.vertices.push_back(Vertex{"Tank1", FunctionType{"storage"}, StateLabel{"Low"}});
  m.vertices.push_back(Vertex{"Pump1", FunctionType{"source"}, std::nullopt});
  m.vertices.push_back(Vertex{"Pump1", FunctionType{"source"}, std::nullopt});
  m.edges.push_back(Edge{"Tank1", "Ghost", RelationType{"influencer"}, true});
  m.edges.push_back(Edge{"Tank1", "Tank1", RelationType{"influencer"}, false});
  m.edges.push_back(Edge{"badname", "Tank1", RelationType{"participant"}, false});
  m.edges.push_back(Edge{"badname", "Tank1", RelationType{"participant"}, false});

  auto ds = validate(m);
  CHECK(has_invariant(ds, "invalid-identifier", "badname"));
  CHECK(has_invariant(ds, "duplicate-vertex-name", "Pump1"));
  CHECK(has_invariant(ds, "multiple-state", "Tank1"));
  CHECK(has_invariant(ds, "unknown-endpoint", "Tank1 -> Ghost"));
  CHECK(has_invariant(ds, "self-loop", "Tank1 -> Tank1"));
  CHECK(has_invariant(ds, "duplicate-edge", "badname -> Tank1"));
}

TEST_CASE("registry validation flags unknown vocabulary") {
  TypeRegistry reg;
  for (const char* fn : {"source", "transport", "sink", "storage", "balance", "barrier"})
    CHECK(reg.has_function(fn));
  CHECK(reg.has_relation("influencer"));
  CHECK(reg.has_relation("participant"));
  CHECK_FALSE(reg.has_function("reactor"));

  MfmModel m;
  m.name = "Plant";
  m = add_vertex(m, Vertex{"Core1", FunctionType{"reactor"}, std::nullopt});
  m = add_vertex(m, Vertex{"Tank1", FunctionType{"storage"}, std::nullopt});
  m = add_edge(m, Edge{"Core1", "Tank1", RelationType{"feeds"}, true});

  auto ds = validate(m, reg);
  CHECK(has_invariant(ds, "unknown-function-type", "Core1"));
  CHECK(has_invariant(ds, "unknown-relation-type", "Core1 -> Tank1"));
  CHECK(validate(m).empty());  // registry-free validation skips vocabulary

  reg.register_function("reactor");
  reg.register_relation("feeds");
  CHECK(validate(m, reg).empty());
}
