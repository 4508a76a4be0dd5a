#pragma once

#include "tralg/extension.hpp"
#include "tralg/transient.hpp"
#include "tralg/truth_table.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tralg
{

/// Nonempty sequence of cube points, consecutive points adjacent.
class walk
{
public:
  /// Throws std::invalid_argument on an empty sequence, a point outside the
  /// cube or a step that does not change exactly one coordinate.
  walk( unsigned arity, std::vector<vertex> vertices );

  /// "2,6,4,5" or, when every point is a single digit, "2645".
  static walk parse( std::string_view text, unsigned arity );

  [[nodiscard]] unsigned arity() const noexcept { return arity_; }
  [[nodiscard]] const std::vector<vertex>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t size() const noexcept { return vertices_.size(); }
  [[nodiscard]] vertex front() const noexcept { return vertices_.front(); }
  [[nodiscard]] vertex back() const noexcept { return vertices_.back(); }

  /// Coordinate changed by step j (between vertices j and j+1).
  [[nodiscard]] unsigned step_coordinate( std::size_t j ) const;

  /// Number of steps between points with equal f-values.
  [[nodiscard]] std::uint64_t cost( const truth_table& f ) const;

  /// w^1 o w^2 o ... o w^r.
  [[nodiscard]] transient_vector vector() const;

  /// Comma-separated positional point numbers.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==( const walk&, const walk& ) = default;
  friend auto operator<=>( const walk&, const walk& ) = default;

private:
  unsigned arity_;
  std::vector<vertex> vertices_;
};

/// The n-cube labelled by f.
class function_cube
{
public:
  explicit function_cube( truth_table f );

  [[nodiscard]] const truth_table& function() const noexcept { return f_; }
  [[nodiscard]] unsigned arity() const noexcept { return f_.arity(); }

  /// The edge from v in the given coordinate joins points with different values.
  [[nodiscard]] bool live( vertex v, unsigned coordinate ) const noexcept
  {
    return f_( v ) != f_( flip_coordinate( v, coordinate, arity() ) );
  }

  /// Coordinates whose edge at v is live, as an n-bit set (bit k = coordinate k).
  [[nodiscard]] std::uint32_t live_coordinates( vertex v ) const noexcept;

  [[nodiscard]] bool is_focus( vertex v ) const noexcept;
  [[nodiscard]] std::vector<vertex> foci() const;

  struct edge
  {
    vertex low;
    vertex high;
    unsigned coordinate;
    bool live;
  };
  /// Every cube edge, ordered by lower endpoint then coordinate.
  [[nodiscard]] std::vector<edge> edges() const;

  /// Text edge list "u v live|dead" with a '#' header; `live_only` keeps L_f.
  [[nodiscard]] std::string edge_list( bool live_only = false ) const;

private:
  truth_table f_;
};

[[nodiscard]] std::vector<vertex> foci( const truth_table& f );

/// omega of every state. Throws std::invalid_argument unless each state is a
/// successor of the previous one.
[[nodiscard]] walk walk_of_path( const digraph_path& p );

/// Prefixes w^1, w^1 o w^2, ... labelled by f.
[[nodiscard]] digraph_path path_of_walk( const truth_table& f, const walk& w );

/// Every coordinate has a live edge incident to some point of the walk.
[[nodiscard]] bool is_complete( const walk& w, const truth_table& f );

/// Six points on the 3-cube such that every window of four changes all three
/// coordinates. Throws std::invalid_argument on other shapes.
[[nodiscard]] bool is_alternating( const walk& w );

struct optimal_walk_set
{
  std::uint64_t cost = 0;
  /// All optimal walks in lexicographic order, or only the least one when truncated.
  std::vector<walk> walks;
  bool truncated = false;
};

inline constexpr std::uint64_t default_walk_cap = 10'000;

[[nodiscard]] optimal_walk_set optimal_walks( const truth_table& f, const transient_vector& x,
                                              std::uint64_t max_walks = default_walk_cap,
                                              const evaluation_budget& budget = {} );

/// Lexicographically least complete optimal walk for x, if any. Exact: the
/// optimal sub-lattice is searched with the set of covered coordinates as
/// extra state. At most 4'000'000 prefixes.
[[nodiscard]] std::optional<walk> complete_optimal_walk( const truth_table& f, const transient_vector& x,
                                                         const evaluation_budget& budget = {} );

} // namespace tralg
