#include "tutte/matroid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tutte {

BinaryMatroid::BinaryMatroid(int cols, std::vector<std::uint64_t> rows_bits)
    : BinaryMatroid(cols, std::move(rows_bits), {}) {}

BinaryMatroid::BinaryMatroid(int cols, std::vector<std::uint64_t> rows_bits,
                             std::vector<EdgeId> labels)
    : cols_(cols), rows_(std::move(rows_bits)), labels_(std::move(labels)) {
  if (cols < 0 || cols > 63) throw std::invalid_argument("ground set must have 0..63 elements");
  if (labels_.empty()) {
    labels_.resize(cols_);
    std::iota(labels_.begin(), labels_.end(), 0);
  }
  if (static_cast<int>(labels_.size()) != cols_)
    throw std::invalid_argument("label count must match column count");
  std::uint64_t valid = cols_ == 0 ? 0 : (~0ull >> (64 - cols_));
  for (auto& r : rows_) r &= valid;
}

int BinaryMatroid::rank_mask(std::uint64_t column_mask) const {
  // Eliminate on the masked columns only.
  std::vector<std::uint64_t> work;
  work.reserve(rows_.size());
  for (std::uint64_t r : rows_)
    if ((r &= column_mask)) work.push_back(r);
  int rank = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!work[i]) continue;
    std::uint64_t pivot = work[i] & ~(work[i] - 1);  // lowest set bit
    ++rank;
    for (std::size_t j = i + 1; j < work.size(); ++j)
      if (work[j] & pivot) work[j] ^= work[i];
  }
  return rank;
}

int BinaryMatroid::rank(const std::vector<int>& columns) const {
  std::uint64_t mask = 0;
  for (int c : columns) {
    if (c < 0 || c >= cols_) throw std::invalid_argument("unknown column");
    mask |= 1ull << c;
  }
  return rank_mask(mask);
}

int BinaryMatroid::full_rank() const {
  return cols_ == 0 ? 0 : rank_mask(~0ull >> (64 - cols_));
}

bool BinaryMatroid::is_loop(int col) const {
  for (std::uint64_t r : rows_)
    if (r >> col & 1) return false;
  return true;
}

bool BinaryMatroid::is_coloop(int col) const {
  std::uint64_t all = cols_ == 0 ? 0 : (~0ull >> (64 - cols_));
  return rank_mask(all & ~(1ull << col)) == full_rank() - 1;
}

int BinaryMatroid::parallel_partner(int col) const {
  if (is_loop(col)) return -1;
  for (int c = 0; c < cols_; ++c) {
    if (c == col) continue;
    bool same = true;
    for (std::uint64_t r : rows_)
      if ((r >> col & 1) != (r >> c & 1)) {
        same = false;
        break;
      }
    if (same) return c;
  }
  return -1;
}

namespace {

BinaryMatroid drop_column(int cols, const std::vector<std::uint64_t>& rows,
                          const std::vector<EdgeId>& labels, int col) {
  std::vector<std::uint64_t> out_rows;
  out_rows.reserve(rows.size());
  std::uint64_t low = (1ull << col) - 1;
  for (std::uint64_t r : rows) {
    std::uint64_t nr = (r & low) | ((r >> 1) & ~low);
    out_rows.push_back(nr);
  }
  std::vector<EdgeId> out_labels;
  out_labels.reserve(labels.size() - 1);
  for (int c = 0; c < cols; ++c)
    if (c != col) out_labels.push_back(labels[c]);
  return BinaryMatroid(cols - 1, std::move(out_rows), std::move(out_labels));
}

}  // namespace

BinaryMatroid BinaryMatroid::delete_element(int col) const {
  if (col < 0 || col >= cols_) throw std::invalid_argument("unknown column");
  return drop_column(cols_, rows_, labels_, col);
}

BinaryMatroid BinaryMatroid::contract_element(int col) const {
  if (col < 0 || col >= cols_) throw std::invalid_argument("unknown column");
  if (is_loop(col)) return delete_element(col);
  // Pivot so the column has a single 1, then remove that row and column.
  std::vector<std::uint64_t> work = rows_;
  std::size_t pivot_row = 0;
  while (!(work[pivot_row] >> col & 1)) ++pivot_row;
  for (std::size_t i = 0; i < work.size(); ++i)
    if (i != pivot_row && (work[i] >> col & 1)) work[i] ^= work[pivot_row];
  work.erase(work.begin() + pivot_row);
  return drop_column(cols_, work, labels_, col);
}

BinaryMatroid BinaryMatroid::dual() const {
  // Row-reduce to find pivot columns and the expansion of every non-pivot
  // column over them.
  std::vector<std::uint64_t> rref = rows_;
  std::vector<int> pivot_cols;
  std::size_t row = 0;
  for (int col = 0; col < cols_ && row < rref.size(); ++col) {
    std::size_t pr = row;
    while (pr < rref.size() && !(rref[pr] >> col & 1)) ++pr;
    if (pr == rref.size()) continue;
    std::swap(rref[row], rref[pr]);
    for (std::size_t i = 0; i < rref.size(); ++i)
      if (i != row && (rref[i] >> col & 1)) rref[i] ^= rref[row];
    pivot_cols.push_back(col);
    ++row;
  }
  int r = static_cast<int>(pivot_cols.size());

  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivot_cols) is_pivot[c] = 1;

  // Dual has one row per non-pivot column: identity there, D^T on pivots.
  std::vector<std::uint64_t> dual_rows;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::uint64_t dr = 1ull << c;
    for (int i = 0; i < r; ++i)
      if (rref[i] >> c & 1) dr |= 1ull << pivot_cols[i];
    dual_rows.push_back(dr);
  }
  return BinaryMatroid(cols_, std::move(dual_rows), labels_);
}

BinaryMatroid BinaryMatroid::parse(const std::string& text) {
  std::istringstream in(text);
  std::string keyword;
  int rows, cols;
  if (!(in >> keyword >> rows >> cols) || keyword != "matrix" || rows < 0 || cols < 0)
    throw std::invalid_argument("matroid file: expected 'matrix <rows> <cols>'");
  std::vector<std::uint64_t> bits(rows, 0);
  for (int i = 0; i < rows; ++i) {
    std::string line;
    if (!(in >> line) || static_cast<int>(line.size()) != cols)
      throw std::invalid_argument("matroid file: bad row " + std::to_string(i));
    for (int j = 0; j < cols; ++j) {
      if (line[j] == '1')
        bits[i] |= 1ull << j;
      else if (line[j] != '0')
        throw std::invalid_argument("matroid file: rows must be 0/1 strings");
    }
  }
  return BinaryMatroid(cols, std::move(bits));
}

std::string BinaryMatroid::to_text() const {
  std::ostringstream os;
  os << "matrix " << rows_.size() << " " << cols_ << "\n";
  for (std::uint64_t r : rows_) {
    for (int c = 0; c < cols_; ++c) os << (r >> c & 1 ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

BinaryMatroid cycle_matroid(const Multigraph& g) {
  std::vector<std::uint64_t> rows(g.vertex_count(), 0);
  std::vector<EdgeId> labels;
  int col = 0;
  for (const auto& e : g.edges()) {
    if (e.u != e.v) {
      rows[e.u] |= 1ull << col;
      rows[e.v] |= 1ull << col;
    }
    labels.push_back(e.id);
    ++col;
  }
  return BinaryMatroid(col, std::move(rows), std::move(labels));
}

Rational z_tilde(const BinaryMatroid& m, const Rational& q, const WeightFunction& w,
                 int enum_cap) {
  if (q.is_zero()) throw std::invalid_argument("z_tilde needs q != 0");
  if (m.ground_size() > enum_cap) throw std::invalid_argument("z_tilde enumeration cap exceeded");
  int n = m.ground_size();
  Rational total(0);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    Rational term = q.pow(-m.rank_mask(mask));
    for (int c = 0; c < n; ++c)
      if (mask >> c & 1) term *= w.at(m.labels()[c]);
    total += term;
  }
  return total;
}

Rational z_tilde_delcon(const BinaryMatroid& m, const Rational& q, const WeightFunction& w) {
  if (q.is_zero()) throw std::invalid_argument("z_tilde needs q != 0");
  if (m.ground_size() == 0) return Rational(1);
  // Loops and coloops peel off as exact factors.
  for (int c = 0; c < m.ground_size(); ++c) {
    if (m.is_loop(c))
      return (Rational(1) + w.at(m.labels()[c])) * z_tilde_delcon(m.delete_element(c), q, w);
    if (m.is_coloop(c))
      return (Rational(1) + w.at(m.labels()[c]) / q) *
             z_tilde_delcon(m.contract_element(c), q, w);
  }
  // Everything is normal, so element 0 lies in a circuit.
  Rational gamma = w.at(m.labels()[0]);
  return z_tilde_delcon(m.delete_element(0), q, w) +
         (gamma / q) * z_tilde_delcon(m.contract_element(0), q, w);
}

}  // namespace tutte
