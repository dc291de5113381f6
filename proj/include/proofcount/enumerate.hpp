#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "proofcount/pse_gen.hpp"
#include "proofcount/term.hpp"

namespace pc {

// Brute-force generation of normal fair proofs by size, independent of the
// equation solver. Terms of a goal are produced top-down from the head forms
// of normal terms: introductions, mu (per logic mode), namings at bottom,
// and hypothesis spines driven by elim lists. Work is shared through a memo
// keyed by the goal up to context renaming.
class Enumerator {
public:
  explicit Enumerator(Mode mode) : mode_(mode) {}

  // Number of proofs of size <= k (cumulative). Exact over ExtNat (finite
  // saturation aside); every individual count at bounded size is finite.
  ExtNat cumulative(const Goal& g, int k);

  // All proofs of size <= k, alpha-canonical, deterministic order.
  std::vector<Term> terms(const Goal& g, int k);

  // d(1..k_max): proofs of size exactly k. Index 0 unused (zero).
  std::vector<ExtNat> by_size(const Goal& g, int k_max);

private:
  struct Prod {
    std::vector<Goal> children;
    int min_size = 1;
    // builds the term from one child term per child goal
    enum class Tag { Lam, Pair, Inj1, Inj2, Mu, ExFalso, Named, Spine } tag;
    std::string binder;              // Lam, Mu, ExFalso, Named
    // Spine payload
    std::string head;
    std::vector<ElimStep> steps;
    bool star = true;
    std::string bv1, bv2;            // case binders
  };

  struct Entry {
    Goal canon;
    bool prods_ready = false;
    std::vector<Prod> prods;
    std::map<int, ExtNat> counts;
    std::map<int, std::vector<Term>> terms;
  };

  Mode mode_;
  // unique_ptr for pointer stability across recursive insertions
  std::unordered_map<std::string, std::unique_ptr<Entry>> memo_;

  Entry& entry(const Goal& g, std::vector<std::pair<std::string, std::string>>* canon_to_actual,
               std::string* key_out);
  void build_prods(Entry& e);
  ExtNat cumulative_key(const std::string& key, int k);
  const std::vector<Term>& terms_key(const std::string& key, int k);
  Term assemble(const Prod& p, const std::vector<Term>& kids) const;
};

// Renames bound variables to readable names (x0, x1, ... / a0, a1, ... by
// namespace), avoiding the free names of t.
Term prettify(const Term& t);

}  // namespace pc
