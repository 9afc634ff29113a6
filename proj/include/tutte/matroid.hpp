#ifndef TUTTE_MATROID_HPP
#define TUTTE_MATROID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Binary matroid given by a 0/1 matrix over GF(2).  Rows are stored as
/// column bitmasks (ground sets up to 64 elements).  Columns carry stable
/// labels so weight functions can follow elements across minors and duals.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  /// rows_bits[i] bit j = entry (i, j); labels default to 0..cols-1.
  BinaryMatroid(int cols, std::vector<std::uint64_t> rows_bits);
  BinaryMatroid(int cols, std::vector<std::uint64_t> rows_bits, std::vector<EdgeId> labels);

  int ground_size() const { return cols_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<EdgeId>& labels() const { return labels_; }
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool entry(int row, int col) const { return rows_[row] >> col & 1; }

  /// GF(2) rank of the chosen columns (Gaussian elimination).
  int rank(const std::vector<int>& columns) const;
  int rank_mask(std::uint64_t column_mask) const;
  int full_rank() const;

  bool is_loop(int col) const;                  // zero column
  bool is_coloop(int col) const;                // rank drops when removed
  /// Columns forming a size-2 circuit with col (equal nonzero columns).
  int parallel_partner(int col) const;          // -1 when none

  BinaryMatroid delete_element(int col) const;
  BinaryMatroid contract_element(int col) const;  // contracting a loop deletes it
  /// Standard-form dual: row-reduce to [I | D] (up to column order), dual
  /// is represented by [D^T | I] on the complementary positions.
  BinaryMatroid dual() const;

  /// Text format: "matrix <rows> <cols>" then rows of 0/1 strings.
  static BinaryMatroid parse(const std::string& text);
  std::string to_text() const;

 private:
  int cols_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<EdgeId> labels_;
};

/// Vertex-edge incidence matrix over GF(2); a loop edge becomes a zero
/// column.  Column labels are the graph's edge ids.
BinaryMatroid cycle_matroid(const Multigraph& g);

/// Z~(M;q,gamma) = sum over subsets A of q^{-r(A)} prod_{e in A} gamma_e.
/// Enumeration oracle; requires q != 0 and ground set <= the cap.
Rational z_tilde(const BinaryMatroid& m, const Rational& q, const WeightFunction& w,
                 int enum_cap = 20);

/// Same value by deletion-contraction with loop and coloop factors.
Rational z_tilde_delcon(const BinaryMatroid& m, const Rational& q, const WeightFunction& w);

}  // namespace tutte

#endif
