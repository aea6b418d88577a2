#pragma once
#include <functional>
#include <map>

#include "nh/neighbor.hpp"
#include "nh/tables.hpp"

namespace nh {

struct ColumnOptions {
  int threads = 1;
  // Deterministic re-check: every admissible code with (code & (stride-1)) ==
  // stride-1 is reclassified through the full neighbor construction. Power of
  // two; 0 disables.
  u64 spot_stride = u64(1) << 17;
  // Probe fired at the first appearance of each class in this column (class
  // index, stream code); return false to stop the column early. Honored
  // inline only when threads == 1; otherwise fired after the merge.
  std::function<bool(int, u64)> on_first;
};

struct ColumnResult {
  std::vector<i64> counts;        // size N+1, 1-based by table class index
  std::map<int, u64> first_code;  // class index -> smallest witnessing code
  i64 lines = 0;                  // admissible codes classified
  bool aborted = false;           // on_first requested a stop
};

// One column of the 2-neighbor operator: classify every 2-neighbor of the
// lattice with the given (reduced) Gram matrix against the table.
ColumnResult t2_column(const MatI& gram, const FingerprintTable& table,
                       const ColumnOptions& opt = {});

struct ClassRec {
  int index = 0;   // table index
  int parent = 0;  // table index of the class whose column found it (0 = seed)
  u64 code = 0;    // stream code of the discovering line (0 = seed)
  MatI gram;       // reduced Gram of the representative
};

// State of a 2-neighbor walk over a genus.
struct Atlas {
  int n = 0;
  std::vector<ClassRec> classes;            // discovery order
  std::vector<int> processed;               // columns done, processing order
  std::map<int, std::vector<i64>> columns;  // class index -> counts (size N+1)
  bool complete = false;

  const ClassRec* find_class(int index) const;
  // Assembled operator, T(i-1, j-1) = #neighbors of class j in class i.
  MatI matrix(const FingerprintTable& table) const;
};

struct ExploreOptions {
  int threads = 1;
  bool discovery_only = false;  // stop once every table class has a witness
  std::string cache_path;       // checkpoint file, rewritten per column; "" = off
  bool resume = true;           // reuse a compatible checkpoint when present
  u64 spot_stride = u64(1) << 17;
  std::function<void(const std::string&)> log;
};

// Breadth-first 2-neighbor walk from seed_lattice(n) until every discovered
// class has its column computed (or, in discovery mode, until every table
// class has a witness).
Atlas explore(int n, const FingerprintTable& table, const ExploreOptions& opt = {});

// Graph utilities for a square nonnegative count matrix (loops ignored).
bool graph_connected(const MatI& T);
bool graph_complete(const MatI& T);
int graph_diameter(const MatI& T);  // -1 when disconnected

// Masses proportional to 1/|Aut|, scaled so that the anchor class (1-based)
// has the given value; checks that T * diag(p) is symmetric and that every
// entry comes out integral.
std::vector<Int> mass_vector(const MatI& T, int anchor_index, const Int& anchor_value);
// The unique primitive integral mass vector (content 1, entry 1 positive).
std::vector<Int> mass_vector_primitive(const MatI& T);
// Detailed balance p_i * T(j,i) == p_j * T(i,j) for all pairs.
bool mass_symmetric(const MatI& T, const std::vector<Int>& p);

}  // namespace nh
