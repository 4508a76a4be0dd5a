#pragma once

#include "tralg/truth_table.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tralg
{

/// Renaming, input complementation and output complementation.
///
/// Applied to f it yields g(y) = c ^ f(w), where u = y ^ input_mask and
/// w has coordinate permutation[i] equal to u_i. Variable i of g therefore
/// feeds input permutation[i] of f.
struct npn_transform
{
  std::vector<unsigned> permutation;
  vertex input_mask = 0;
  bool output_complement = false;

  static npn_transform identity( unsigned arity );

  [[nodiscard]] unsigned arity() const noexcept { return static_cast<unsigned>( permutation.size() ); }

  /// apply(apply(f, t), t.inverse()) == f.
  [[nodiscard]] npn_transform inverse() const;

  /// Moves coordinate i of `v` to coordinate permutation[i].
  [[nodiscard]] vertex permute( vertex v ) const noexcept;

  friend bool operator==( const npn_transform&, const npn_transform& ) = default;
};

/// apply(apply(f, first), then) == apply(f, compose(first, then)).
[[nodiscard]] npn_transform compose( const npn_transform& first, const npn_transform& then );

[[nodiscard]] truth_table apply_transform( const truth_table& f, const npn_transform& t );

inline constexpr unsigned max_canonical_arity = 5;

/// Visits all n! * 2^n * 2 transforms of the given arity.
void for_each_npn_transform( unsigned arity, const std::function<void( const npn_transform& )>& visit );

/// Numerically least table over the whole NPN orbit of f; arity <= 5.
[[nodiscard]] truth_table npn_canonical( const truth_table& f );

/// Canonical table together with a transform mapping f onto it.
struct canonical_form
{
  truth_table representative;
  npn_transform transform;
};
[[nodiscard]] canonical_form npn_canonical_form( const truth_table& f );

/// Orbit of f under all transforms, sorted and deduplicated.
[[nodiscard]] std::vector<truth_table> npn_orbit( const truth_table& f );

/// Class partition of all 2^(2^n) functions of arity n <= 4.
struct npn_partition
{
  unsigned arity = 0;
  /// class_of[table value] indexes `representatives`.
  std::vector<std::uint32_t> class_of;
  /// Canonical representatives in increasing order.
  std::vector<truth_table> representatives;
  std::vector<std::uint32_t> class_sizes;
};
[[nodiscard]] npn_partition npn_classes( unsigned arity );

} // namespace tralg
