#pragma once

#include "tralg/extension.hpp"
#include "tralg/transient.hpp"
#include "tralg/truth_table.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tralg
{

struct gate
{
  std::string output;
  /// Set for named primitives, which are evaluated in closed form; other
  /// gates go through the prefix-lattice DP.
  std::optional<primitive> kind;
  truth_table function;
  std::vector<std::string> inputs;
  std::size_t line = 0;
};

/// Combinational gate network. Gates are stored in topological order.
class netlist
{
public:
  /// Line-oriented text:
  ///
  ///   input x;              (several names may be comma-separated)
  ///   inv = NOT(x);         NOT, AND, OR, XOR, NAND, NOR, XNOR or tt:<hex>/<n>
  ///   output out;
  ///
  /// '#' and '//' start comments. Gates may be declared in any order; cycles,
  /// undefined wires, redefinitions and arity mismatches are rejected with
  /// parse_error carrying the offending line.
  static netlist parse( std::string_view text );

  [[nodiscard]] const std::vector<std::string>& inputs() const noexcept { return inputs_; }
  [[nodiscard]] const std::vector<gate>& gates() const noexcept { return gates_; }
  [[nodiscard]] const std::vector<std::string>& outputs() const noexcept { return outputs_; }

  /// Primary inputs in declaration order, then gate outputs in evaluation order.
  [[nodiscard]] std::vector<std::string> wires() const;

private:
  std::vector<std::string> inputs_;
  std::vector<gate> gates_;
  std::vector<std::string> outputs_;
};

enum class hazard_class
{
  clean,
  static_hazard,
  dynamic_hazard
};

[[nodiscard]] std::string_view hazard_name( hazard_class h ) noexcept;

/// clean when at most one change; otherwise static when the wire ends where it
/// started and dynamic when it does not.
[[nodiscard]] hazard_class classify( const transient& t ) noexcept;

using assignment = std::map<std::string, transient, std::less<>>;

/// Lines "<input> = <transient literal>"; '#' starts a comment.
[[nodiscard]] assignment parse_assignment( std::string_view text );

struct wire_report
{
  std::string name;
  transient value;
  hazard_class classification = hazard_class::clean;
};

/// Wire transients from gate-by-gate propagation. Each gate applies its own
/// extension, so a wire's transient bounds from above what the composed
/// function of the inputs would produce (extensions do not compose).
struct hazard_report
{
  std::vector<wire_report> wires;

  [[nodiscard]] const wire_report* find( std::string_view name ) const noexcept;
  /// One line per wire: "name transient classification".
  [[nodiscard]] std::string to_text() const;
};

/// Extension of one gate on its input transients.
[[nodiscard]] transient evaluate_gate( const gate& g, const transient_vector& inputs,
                                       const evaluation_budget& budget = {} );

/// Throws std::invalid_argument when a primary input is unassigned or an
/// assigned name is not a primary input.
[[nodiscard]] hazard_report propagate( const netlist& n, const assignment& inputs,
                                       const evaluation_budget& budget = {} );

} // namespace tralg
