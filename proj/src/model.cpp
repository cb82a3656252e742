#include "mfm/model.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mfm/fol.hpp"

namespace mfm {

FunctionType::FunctionType(std::string l) : label(std::move(l)) {
  if (!is_lower_identifier(label))
    throw Error(ErrorCode::InvalidIdentifier,
                "function type must match [a-z][A-Za-z0-9_]*: '" + label + "'");
}

RelationType::RelationType(std::string l) : label(std::move(l)) {
  if (!is_lower_identifier(label))
    throw Error(ErrorCode::InvalidIdentifier,
                "relation type must match [a-z][A-Za-z0-9_]*: '" + label + "'");
}

StateLabel::StateLabel(std::string l) : label(std::move(l)) {
  if (!is_upper_identifier(label))
    throw Error(ErrorCode::InvalidIdentifier,
                "state label must match [A-Z][A-Za-z0-9_]*: '" + label + "'");
}

const Vertex* MfmModel::find_vertex(const std::string& name) const {
  for (const Vertex& v : vertices)
    if (v.name == name) return &v;
  return nullptr;
}

bool MfmModel::stateless() const {
  return std::none_of(vertices.begin(), vertices.end(),
                      [](const Vertex& v) { return v.state.has_value(); });
}

TypeRegistry::TypeRegistry()
    : functions_{"source", "transport", "sink", "storage", "balance", "barrier"},
      relations_{"influencer", "participant"} {}

void TypeRegistry::register_function(const std::string& label) {
  FunctionType check(label);
  functions_.insert(check.label);
}

void TypeRegistry::register_relation(const std::string& label) {
  RelationType check(label);
  relations_.insert(check.label);
}

bool TypeRegistry::has_function(const std::string& label) const {
  return functions_.count(label) != 0;
}

bool TypeRegistry::has_relation(const std::string& label) const {
  return relations_.count(label) != 0;
}

MfmModel add_vertex(const MfmModel& model, Vertex v) {
  if (!is_upper_identifier(v.name))
    throw Error(ErrorCode::InvalidIdentifier,
                "vertex name must match [A-Z][A-Za-z0-9_]*: '" + v.name + "'");
  if (model.find_vertex(v.name))
    throw Error(ErrorCode::DuplicateVertexName,
                "vertex '" + v.name + "' already declared");
  MfmModel out = model;
  out.vertices.push_back(std::move(v));
  return out;
}

MfmModel add_edge(const MfmModel& model, Edge e) {
  if (!model.find_vertex(e.from))
    throw Error(ErrorCode::UnknownEndpoint, "unknown edge source '" + e.from + "'");
  if (!model.find_vertex(e.to))
    throw Error(ErrorCode::UnknownEndpoint, "unknown edge target '" + e.to + "'");
  if (e.from == e.to)
    throw Error(ErrorCode::SelfLoopEdge, "self loop on '" + e.from + "'");
  for (const Edge& other : model.edges)
    if (other.from == e.from && other.to == e.to && other.relation == e.relation)
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge " + e.from + " -> " + e.to + " (" +
                      e.relation.label + ")");
  MfmModel out = model;
  out.edges.push_back(std::move(e));
  return out;
}

std::vector<ModelDiagnostic> validate(const MfmModel& model) {
  std::vector<ModelDiagnostic> out;
  auto flag = [&](std::string invariant, std::string subject, std::string message) {
    out.push_back({std::move(invariant), std::move(subject), std::move(message)});
  };

  // Duplicate names double as the multiple-state case: a vertex can only end
  // up with two states by being declared twice.
  std::map<std::string, const Vertex*> seen;
  for (const Vertex& v : model.vertices) {
    if (!is_upper_identifier(v.name))
      flag("invalid-identifier", v.name, "vertex name is not an identifier");
    auto [it, inserted] = seen.emplace(v.name, &v);
    if (!inserted) {
      const Vertex& first = *it->second;
      if (first.state && v.state && first.state != v.state)
        flag("multiple-state", v.name,
             "vertex declared with states " + first.state->label + " and " +
                 v.state->label);
      else
        flag("duplicate-vertex-name", v.name, "vertex declared twice");
    }
  }

  std::set<std::tuple<std::string, std::string, std::string>> triples;
  for (const Edge& e : model.edges) {
    std::string subject = e.from + " -> " + e.to;
    if (!seen.count(e.from))
      flag("unknown-endpoint", subject, "edge source '" + e.from + "' not declared");
    if (!seen.count(e.to))
      flag("unknown-endpoint", subject, "edge target '" + e.to + "' not declared");
    if (e.from == e.to) flag("self-loop", subject, "edge endpoints coincide");
    if (!triples.insert({e.from, e.to, e.relation.label}).second)
      flag("duplicate-edge", subject,
           "edge repeated with relation " + e.relation.label);
  }
  return out;
}

std::vector<ModelDiagnostic> validate(const MfmModel& model,
                                      const TypeRegistry& registry) {
  std::vector<ModelDiagnostic> out = validate(model);
  for (const Vertex& v : model.vertices)
    if (!registry.has_function(v.function.label))
      out.push_back({"unknown-function-type", v.name,
                     "function type '" + v.function.label + "' not registered"});
  for (const Edge& e : model.edges)
    if (!registry.has_relation(e.relation.label))
      out.push_back({"unknown-relation-type", e.from + " -> " + e.to,
                     "relation type '" + e.relation.label + "' not registered"});
  return out;
}

}  // namespace mfm
