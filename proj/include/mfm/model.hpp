#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mfm/error.hpp"

namespace mfm {

/// MFM function type label (source, transport, ...). Open set: built-ins are
/// always recognized, anything else must be registered in a TypeRegistry
/// before a model using it passes validation.
struct FunctionType {
  std::string label;

  explicit FunctionType(std::string l);
  auto operator<=>(const FunctionType&) const = default;
};

/// Relation type label (influencer, participant, ...); same lexical rule and
/// open-set policy as FunctionType.
struct RelationType {
  std::string label;

  explicit RelationType(std::string l);
  auto operator<=>(const RelationType&) const = default;
};

/// State of a vertex at one time point (High, Low, No, ...). Distinct labels
/// are mutually exclusive on one vertex.
struct StateLabel {
  std::string label;

  explicit StateLabel(std::string l);
  auto operator<=>(const StateLabel&) const = default;
};

struct Vertex {
  std::string name;
  FunctionType function;
  std::optional<StateLabel> state;

  auto operator<=>(const Vertex&) const = default;
};

/// Directed edge; carries_flow marks that a flow direction from->to is
/// declared alongside the relation.
struct Edge {
  std::string from;
  std::string to;
  RelationType relation;
  bool carries_flow = false;

  auto operator<=>(const Edge&) const = default;
};

struct MfmModel {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  const Vertex* find_vertex(const std::string& name) const;
  bool stateless() const;

  auto operator<=>(const MfmModel&) const = default;
};

/// Known function and relation labels. Built-ins are pre-registered;
/// register_* extends the set. Validation against a registry flags unknown
/// labels, validation without one skips that check.
class TypeRegistry {
 public:
  TypeRegistry();  // seeds the built-ins

  void register_function(const std::string& label);
  void register_relation(const std::string& label);

  bool has_function(const std::string& label) const;
  bool has_relation(const std::string& label) const;

  const std::set<std::string>& functions() const { return functions_; }
  const std::set<std::string>& relations() const { return relations_; }

 private:
  std::set<std::string> functions_;
  std::set<std::string> relations_;
};

// Pure builders: the input model is untouched, the returned copy contains the
// new element. Violated preconditions raise Error.
MfmModel add_vertex(const MfmModel& model, Vertex v);
MfmModel add_edge(const MfmModel& model, Edge e);

/// One violated invariant: which one, on which element, and a readable
/// message.
struct ModelDiagnostic {
  std::string invariant;
  std::string subject;
  std::string message;

  auto operator<=>(const ModelDiagnostic&) const = default;
};

std::vector<ModelDiagnostic> validate(const MfmModel& model);
std::vector<ModelDiagnostic> validate(const MfmModel& model,
                                      const TypeRegistry& registry);

}  // namespace mfm
