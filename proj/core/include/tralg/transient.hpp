#pragma once

#include "tralg/bits.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tralg
{

/// Nonempty word of alternating 0's and 1's, stored as its first letter and
/// its number of changes. The letter string is only a serialization.
class transient
{
public:
  static constexpr std::uint32_t max_changes = ( std::uint32_t{ 1 } << 31 ) - 2u;

  /// The single-letter transient "0".
  constexpr transient() noexcept = default;

  /// Throws std::out_of_range when `changes` exceeds max_changes.
  transient( bool start, std::uint32_t changes );

  /// Strictly alternating letter string, e.g. "0101".
  static transient from_letters( std::string_view letters );

  /// Accepts either a letter string or the angle form "<b;k>".
  static transient parse( std::string_view literal );

  [[nodiscard]] bool alpha() const noexcept { return start_; }
  [[nodiscard]] bool omega() const noexcept { return start_ != ( ( changes_ & 1u ) != 0 ); }
  [[nodiscard]] std::uint32_t changes() const noexcept { return changes_; }
  [[nodiscard]] std::uint32_t length() const noexcept { return changes_ + 1u; }

  /// Number of 0 letters.
  [[nodiscard]] std::uint32_t zeros() const noexcept;
  /// Number of 1 letters.
  [[nodiscard]] std::uint32_t units() const noexcept { return length() - zeros(); }

  /// At least one change.
  [[nodiscard]] bool proper() const noexcept { return changes_ >= 1; }

  /// Letter at 0-based position i < length().
  [[nodiscard]] bool letter( std::uint32_t i ) const noexcept { return start_ != ( ( i & 1u ) != 0 ); }

  [[nodiscard]] std::string letters() const;
  [[nodiscard]] std::string angle() const;

  [[nodiscard]] transient successor() const;
  [[nodiscard]] transient complemented() const noexcept;

  /// The prefix with `changes` changes; `changes` must not exceed changes().
  [[nodiscard]] transient prefix( std::uint32_t changes ) const;

  /// True iff this is a (nonempty) prefix of `other`. A transient is a prefix of itself.
  [[nodiscard]] bool is_prefix_of( const transient& other ) const noexcept
  {
    return start_ == other.start_ && changes_ <= other.changes_;
  }

  friend bool operator==( const transient&, const transient& ) = default;
  friend auto operator<=>( const transient&, const transient& ) = default;

private:
  bool start_ = false;
  std::uint32_t changes_ = 0;
};

/// Removes every letter equal to its predecessor. Throws std::invalid_argument
/// on an empty word or on characters other than '0' and '1'.
[[nodiscard]] transient contract( std::string_view word );
[[nodiscard]] transient contract( std::span<const bool> word );

/// Concatenation followed by contraction.
[[nodiscard]] transient circ( const transient& s, const transient& t );

[[nodiscard]] inline transient complement( const transient& t ) noexcept { return t.complemented(); }

/// Ordered tuple of n >= 1 transients.
class transient_vector
{
public:
  transient_vector() = default;
  explicit transient_vector( std::vector<transient> components );
  transient_vector( std::initializer_list<transient> components );

  /// Single-letter components spelling the cube point `v`.
  static transient_vector from_vertex( vertex v, unsigned arity );

  /// The vector <alpha; deltas[0], ..., deltas[n-1]>.
  static transient_vector from_angle( vertex alpha, std::span<const std::uint32_t> deltas );

  /// Comma-separated transient literals, or the vector angle form "<v;d1,...,dn>"
  /// where v is a cube point in positional encoding.
  static transient_vector parse( std::string_view literal );

  [[nodiscard]] unsigned arity() const noexcept { return static_cast<unsigned>( components_.size() ); }
  [[nodiscard]] const transient& operator[]( unsigned i ) const { return components_[i]; }
  [[nodiscard]] const std::vector<transient>& components() const noexcept { return components_; }
  [[nodiscard]] auto begin() const noexcept { return components_.begin(); }
  [[nodiscard]] auto end() const noexcept { return components_.end(); }

  [[nodiscard]] std::uint64_t length() const noexcept;
  [[nodiscard]] std::uint64_t changes() const noexcept;
  [[nodiscard]] std::vector<std::uint32_t> deltas() const;

  /// Componentwise first letters as a cube point; arity must be <= max_vertex_arity.
  [[nodiscard]] vertex alpha() const;
  [[nodiscard]] vertex omega() const;

  [[nodiscard]] bool proper() const noexcept;

  /// The vector with component i extended by one letter.
  [[nodiscard]] transient_vector successor( unsigned i ) const;
  /// All n successors, in coordinate order.
  [[nodiscard]] std::vector<transient_vector> successors() const;

  /// Componentwise prefix test; throws std::invalid_argument on arity mismatch.
  [[nodiscard]] bool is_prefix_of( const transient_vector& other ) const;

  /// Comma-separated letter strings.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==( const transient_vector&, const transient_vector& ) = default;
  friend auto operator<=>( const transient_vector&, const transient_vector& ) = default;

private:
  std::vector<transient> components_;
};

/// Componentwise circ.
[[nodiscard]] transient_vector circ( const transient_vector& s, const transient_vector& t );
/// Componentwise circ with the single-letter vector spelling `v`.
[[nodiscard]] transient_vector circ( const transient_vector& s, vertex v );

} // namespace tralg
