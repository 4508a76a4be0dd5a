#pragma once

#include "tralg/bits.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tralg
{

inline constexpr unsigned max_table_arity = 8;

/// Boolean function of n <= 8 variables as a 2^n-entry value table indexed by
/// positional cube points (x_1 most significant).
class truth_table
{
public:
  /// Constant 0 of the given arity (1..8).
  explicit truth_table( unsigned arity );

  /// `hex` holds the 2^n value bits, most significant digit first; bit i of
  /// the number is the value at cube point i.
  static truth_table from_hex( std::string_view hex, unsigned arity );

  /// Literal "tt:<hex>/<arity>".
  static truth_table parse( std::string_view literal );

  template<typename Fn>
  static truth_table from_function( unsigned arity, Fn&& fn )
  {
    truth_table t( arity );
    for ( vertex v = 0; v < t.size(); ++v )
    {
      t.set( v, static_cast<bool>( fn( v ) ) );
    }
    return t;
  }

  [[nodiscard]] unsigned arity() const noexcept { return arity_; }
  [[nodiscard]] std::uint32_t size() const noexcept { return std::uint32_t{ 1 } << arity_; }

  [[nodiscard]] bool operator()( vertex v ) const noexcept { return ( words_[v >> 6] >> ( v & 63u ) ) & 1u; }

  /// Checked lookup; throws std::invalid_argument on arity mismatch.
  [[nodiscard]] bool evaluate( vertex v ) const;
  [[nodiscard]] bool evaluate( std::span<const bool> point ) const;

  void set( vertex v, bool value );

  [[nodiscard]] std::string hex() const;
  [[nodiscard]] std::string literal() const { return "tt:" + hex() + "/" + std::to_string( arity_ ); }

  [[nodiscard]] truth_table complemented() const;
  [[nodiscard]] std::uint32_t count_ones() const noexcept;

  /// True iff flipping coordinate k (0-based) changes the value somewhere.
  [[nodiscard]] bool depends_on( unsigned k ) const;
  [[nodiscard]] std::vector<unsigned> support() const;
  [[nodiscard]] bool depends_on_all() const { return support().size() == arity_; }

  /// Restriction to the listed coordinates (in order); the others are fixed at 0.
  [[nodiscard]] truth_table project( std::span<const unsigned> coordinates ) const;

  /// Table as a number; tables of equal arity order numerically.
  friend std::strong_ordering operator<=>( const truth_table& a, const truth_table& b ) noexcept;
  friend bool operator==( const truth_table& a, const truth_table& b ) noexcept = default;

  /// Up to 64 value bits as an integer; requires arity <= 6.
  [[nodiscard]] std::uint64_t bits64() const;

private:
  unsigned arity_;
  std::array<std::uint64_t, 4> words_{};
};

enum class primitive
{
  not_gate,
  and_gate,
  or_gate,
  xor_gate,
  nand_gate,
  nor_gate,
  xnor_gate
};

[[nodiscard]] std::string_view primitive_name( primitive p ) noexcept;
[[nodiscard]] std::optional<primitive> primitive_from_name( std::string_view name ) noexcept;

/// NOT requires arity 1; the others accept any arity >= 1.
[[nodiscard]] truth_table make_primitive( primitive p, unsigned arity );

} // namespace tralg
