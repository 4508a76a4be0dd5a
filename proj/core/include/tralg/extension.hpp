#pragma once

#include "tralg/g_class.hpp"
#include "tralg/transient.hpp"
#include "tralg/truth_table.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tralg
{

/// Limits on exhaustive work. Path counts grow as a multinomial in the
/// number of input changes.
struct evaluation_budget
{
  std::uint64_t max_paths = 1'000'000;
  std::uint64_t max_states = 100'000'000;
};

/// Vertex of the transient digraph: a prefix of the input vector together with
/// f evaluated at the prefix's last letters.
struct path_state
{
  transient_vector prefix;
  bool lambda = false;

  /// Changes consumed per coordinate.
  [[nodiscard]] std::vector<std::uint32_t> consumed() const { return prefix.deltas(); }

  friend bool operator==( const path_state&, const path_state& ) = default;
};

/// Directed path from alpha(x) to x, one state per prefix.
using digraph_path = std::vector<path_state>;

struct cost_report
{
  transient extension;
  std::uint64_t cost = 0;
  digraph_path optimal_path;
  /// Number of enumerated paths; filled by the brute-force evaluator only.
  std::uint64_t paths_enumerated = 0;
};

/// m! / (m_1! ... m_n!), or nullopt when it does not fit in 64 bits.
[[nodiscard]] std::optional<std::uint64_t> multinomial( std::span<const std::uint32_t> parts );

/// Number of prefixes of x, i.e. prod (delta_i + 1); nullopt on overflow.
[[nodiscard]] std::optional<std::uint64_t> prefix_count( const transient_vector& x );

/// Enumerates every path of the transient digraph and keeps the first one (in
/// lowest-coordinate-first order) whose contracted output is longest.
/// Throws budget_exceeded when the path count exceeds budget.max_paths and
/// inconsistency_error if the enumerated count differs from the multinomial.
[[nodiscard]] cost_report extension_bruteforce( const truth_table& f, const transient_vector& x,
                                                const evaluation_budget& budget = {} );

/// 0/1-weighted shortest path over the prefix lattice. Among optimal arcs the
/// lowest coordinate is taken, so the reported path is the lexicographically
/// least optimal path. Throws budget_exceeded past budget.max_states.
[[nodiscard]] cost_report extension_dp( const truth_table& f, const transient_vector& x,
                                        const evaluation_budget& budget = {} );

/// Closed-form evaluation for functions of class G, linear in l(x).
[[nodiscard]] transient extension_formula( const g_decomposition& d, const transient_vector& x );

enum class pure_kind
{
  xor_kind,
  or_kind,
  and_kind
};

/// Cost of a proper vector for pure XOR, OR or AND (any arity). Throws
/// std::invalid_argument when x is not proper.
[[nodiscard]] std::uint64_t cost_formula( pure_kind kind, const transient_vector& x );

/// Path obtained by consuming the changes of x in the given coordinate order.
[[nodiscard]] digraph_path path_from_order( const truth_table& f, const transient_vector& x,
                                            std::span<const unsigned> order );

/// lambda along the path as a binary word.
[[nodiscard]] std::string lambda_word( const digraph_path& p );
/// Number of arcs whose endpoints carry equal lambda.
[[nodiscard]] std::uint64_t path_cost( const digraph_path& p );

/// Prefix lattice of x with f's labels and cost-to-go, shared by the DP
/// evaluator and the walk searches.
class prefix_digraph
{
public:
  prefix_digraph( const truth_table& f, const transient_vector& x, std::uint64_t max_states );

  [[nodiscard]] std::size_t size() const noexcept { return cost_to_go_.size(); }
  [[nodiscard]] unsigned arity() const noexcept { return x_.arity(); }
  [[nodiscard]] const transient_vector& vector() const noexcept { return x_; }
  [[nodiscard]] const truth_table& function() const noexcept { return f_; }

  [[nodiscard]] static constexpr std::size_t initial() noexcept { return 0; }
  [[nodiscard]] std::size_t final_state() const noexcept { return size() - 1; }

  [[nodiscard]] std::uint32_t consumed( std::size_t state, unsigned coordinate ) const noexcept
  {
    return static_cast<std::uint32_t>( ( state / strides_[coordinate] ) % radices_[coordinate] );
  }
  [[nodiscard]] bool can_advance( std::size_t state, unsigned coordinate ) const noexcept
  {
    return consumed( state, coordinate ) + 1u < radices_[coordinate];
  }
  [[nodiscard]] std::size_t advance( std::size_t state, unsigned coordinate ) const noexcept
  {
    return state + strides_[coordinate];
  }

  /// Cube point omega(prefix).
  [[nodiscard]] vertex point( std::size_t state ) const noexcept;
  [[nodiscard]] bool lambda( std::size_t state ) const noexcept { return f_( point( state ) ); }

  /// Minimum cost from `state` to x.
  [[nodiscard]] std::uint32_t cost_to_go( std::size_t state ) const noexcept { return cost_to_go_[state]; }
  [[nodiscard]] std::uint32_t optimal_cost() const noexcept { return cost_to_go_[initial()]; }

  /// The arc state -> advance(state, i) lies on some optimal continuation.
  [[nodiscard]] bool tight( std::size_t state, unsigned coordinate ) const noexcept;

  [[nodiscard]] path_state state( std::size_t index ) const;

private:
  truth_table f_;
  transient_vector x_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint32_t> radices_;
  std::vector<std::uint32_t> cost_to_go_;
};

} // namespace tralg
