#pragma once

#include "tralg/cube.hpp"
#include "tralg/transient.hpp"
#include "tralg/truth_table.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tralg
{

/// t_1 t_2 for an even-length t, t_1 t_2 t_3 for an odd one; t must be proper.
[[nodiscard]] transient characteristic( const transient& t );
/// Componentwise characteristic transient; x must be proper.
[[nodiscard]] transient_vector characteristic_vector( const transient_vector& x );

/// Every component has 1 or 2 changes.
[[nodiscard]] bool is_minimal( const transient_vector& x ) noexcept;

/// All 4^n minimal vectors, ordered by starting point, then by change
/// pattern with x_1 most significant.
[[nodiscard]] std::vector<transient_vector> minimal_vectors( unsigned arity );

/// Lazily yields the prolongations of a minimal vector obtained by adding
/// 0..extra_pairs pairs of changes to each component independently, in
/// order of increasing total added pairs; (b+1)^n vectors in all.
class prolongation_generator
{
public:
  prolongation_generator( transient_vector minimal, unsigned extra_pairs );

  [[nodiscard]] std::optional<transient_vector> next();

private:
  transient_vector minimal_;
  unsigned extra_pairs_;
  unsigned total_ = 0;
  std::vector<unsigned> pairs_;
  bool started_ = false;
  bool exhausted_ = false;
};

[[nodiscard]] std::vector<transient_vector> prolongations( const transient_vector& minimal, unsigned extra_pairs );

enum class convenience_status
{
  convenient_certified,
  unknown,
  inconvenient_witnessed
};

[[nodiscard]] std::string_view status_name( convenience_status s ) noexcept;

struct certified_vector
{
  transient_vector minimal;
  std::uint64_t cost = 0;
  walk witness;
};

struct inconvenience_witness
{
  transient_vector minimal;
  transient_vector prolongation;
  std::uint64_t minimal_cost = 0;
  std::uint64_t prolongation_cost = 0;
};

struct convenience_verdict
{
  truth_table function;
  /// Coordinates (0-based) the function depends on; the analysis runs on the
  /// projection onto them.
  std::vector<unsigned> support;
  /// Projection onto the support; empty for constant functions.
  std::optional<truth_table> projected{};
  convenience_status status = convenience_status::unknown;

  /// One complete optimal walk per minimal vector that has one.
  std::vector<certified_vector> certificates{};
  /// Minimal vectors whose optimal walks are all incomplete.
  std::vector<transient_vector> uncertified{};
  std::optional<inconvenience_witness> witness{};

  unsigned prolongation_budget = 0;
  std::uint64_t prolongations_checked = 0;
};

inline constexpr unsigned default_prolongation_budget = 2;
inline constexpr unsigned max_convenience_arity = 5;

/// Certifies through complete optimal walks on every minimal vector; failing
/// that, compares costs over prolongations up to `extra_pairs` per component.
/// Degenerate functions are analysed on their support.
[[nodiscard]] convenience_verdict decide_convenience( const truth_table& f,
                                                      unsigned extra_pairs = default_prolongation_budget );

/// Direct check of cost equality between every minimal vector and each of its
/// prolongations within the budget. Returns the first mismatch.
[[nodiscard]] std::optional<inconvenience_witness> find_cost_mismatch( const truth_table& f, unsigned extra_pairs );

/// The multi-line text record of a verdict.
[[nodiscard]] std::string to_text( const convenience_verdict& v );

/// S_{2,3}(x1..x4) + x0 x1 x2 x3 x4 on the coordinates (x0, x1, x2, x3, x4).
[[nodiscard]] truth_table s23_plus_and5();

/// Six-point alternating walk on the 3-cube whose first three steps cost
/// nothing and whose total cost is at most one.
[[nodiscard]] bool is_alternating_shortcut( const truth_table& f, const walk& w );

struct lemma_shortcut_report
{
  std::vector<vertex> foci;
  /// Starting points within distance 1 of a focus.
  std::vector<vertex> near_focus;
  /// Starting points covered by a walk satisfying is_alternating_shortcut, with that walk.
  std::vector<std::pair<vertex, walk>> alternating_walks;
  /// Minimal vectors covered by either shortcut that were confirmed to have a
  /// complete optimal walk.
  std::size_t confirmed = 0;
  /// Covered minimal vectors without one; empty when both shortcuts hold.
  std::vector<transient_vector> violations;
};

/// Arity-3 only.
[[nodiscard]] lemma_shortcut_report check_lemma_shortcuts( const truth_table& f );

} // namespace tralg
