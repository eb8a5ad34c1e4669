#include "posetzeta/families.hpp"

#include <numeric>
#include <stdexcept>

namespace pz {

LabeledPoset ak_poset(unsigned k, unsigned n) {
  if (k == 0 || n == 0) {
    throw std::invalid_argument("ak_poset: k and n must be >= 1");
  }
  std::vector<std::string> ids;
  std::vector<LabeledPoset::Label> labels;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (unsigned i = 1; i <= k; ++i) {
    ids.push_back("c" + std::to_string(i));
    labels.push_back(i == 1 ? 1 : 0);
    if (i > 1) {
      less.emplace_back(i - 2, i - 1);
    }
  }
  const std::size_t top = ids.size();
  ids.push_back("x");
  labels.push_back(0);
  less.emplace_back(top - 1, top);
  for (unsigned i = 1; i < n; ++i) {
    ids.push_back("u" + std::to_string(i));
    labels.push_back(1);
    less.emplace_back(ids.size() - 1, top);
  }
  return LabeledPoset(std::move(ids), std::move(labels), less);
}

namespace {

Index ohno_index(unsigned k, unsigned n) {
  std::vector<unsigned> parts{k + 1};
  parts.insert(parts.end(), n - 1, 1u);
  return Index(std::move(parts));
}

} // namespace

bool verify_ohno(unsigned k, unsigned n) {
  const ZetaCombination lhs = decompose(ak_poset(k, n));
  const ZetaCombination rhs = Rational(factorial(n - 1)) * decompose(zigzag_poset(ohno_index(k, n)));
  return lhs == rhs;
}

Integer ak_antichain_factor(unsigned k, unsigned n) {
  const LabeledPoset x = ak_poset(k, n);
  LabeledPoset ordered = x;
  for (unsigned i = 1; i + 1 < n; ++i) {
    ordered = refine(ordered, "u" + std::to_string(i), "u" + std::to_string(i + 1));
  }
  const Integer whole = count_linear_extensions(x);
  const Integer part = count_linear_extensions(ordered);
  if (whole % part != 0) {
    throw std::logic_error("ak_antichain_factor: extension counts are not commensurate");
  }
  return whole / part;
}

LabeledPoset mt_poset(const std::vector<unsigned>& ks, unsigned k) {
  if (ks.empty()) {
    throw std::invalid_argument("mt_poset: need at least one branch");
  }
  if (k == 0) {
    throw std::invalid_argument("mt_poset: the joint exponent must be >= 1");
  }
  std::vector<std::string> ids;
  std::vector<LabeledPoset::Label> labels;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  std::vector<std::size_t> branch_tops;
  for (std::size_t b = 0; b < ks.size(); ++b) {
    if (ks[b] == 0) {
      throw std::invalid_argument("mt_poset: branch exponents must be >= 1");
    }
    for (unsigned i = 1; i <= ks[b]; ++i) {
      ids.push_back("b" + std::to_string(b + 1) + "_" + std::to_string(i));
      labels.push_back(i == 1 ? 1 : 0);
      if (i > 1) {
        less.emplace_back(ids.size() - 2, ids.size() - 1);
      }
    }
    branch_tops.push_back(ids.size() - 1);
  }
  const std::size_t first_top = ids.size();
  for (unsigned i = 1; i <= k; ++i) {
    ids.push_back("c" + std::to_string(i));
    labels.push_back(0);
    if (i > 1) {
      less.emplace_back(ids.size() - 2, ids.size() - 1);
    }
  }
  for (std::size_t t : branch_tops) {
    less.emplace_back(t, first_top);
  }
  return LabeledPoset(std::move(ids), std::move(labels), less);
}

BradleyZhouReport verify_bradley_zhou(const std::vector<unsigned>& ks, unsigned k, long M) {
  BradleyZhouReport report;
  report.decomposition = decompose(mt_poset(ks, k));
  const std::size_t weight = std::accumulate(ks.begin(), ks.end(), std::size_t{0}) + k;
  report.homogeneous = is_homogeneous(report.decomposition, weight, ks.size());
  report.from_series = mt_series_eval(ks, k, M);
  report.from_decomposition = combination_eval(report.decomposition, M);
  report.numeric_agreement = agree_within_bounds(report.from_series, report.from_decomposition);
  return report;
}

std::string KmtShape::to_string() const {
  return "(" + p.to_string() + ";" + q.to_string() + ";" + r.to_string() + ")";
}

namespace {

// Branch vertices named top-down: prefix1 is the top of the branch.
void add_branch(const Index& seq, const std::string& prefix, std::vector<std::string>& ids,
                std::vector<LabeledPoset::Label>& labels,
                std::vector<std::pair<std::size_t, std::size_t>>& less,
                std::optional<std::size_t>& top) {
  const LabeledPoset chain = vertical_diagram(seq, prefix);
  const std::size_t base = ids.size();
  const std::size_t len = chain.size();
  for (std::size_t v = 0; v < len; ++v) {
    ids.push_back(prefix + std::to_string(len - v));
    labels.push_back(chain.label(v));
    if (v > 0) {
      less.emplace_back(base + v - 1, base + v);
    }
  }
  top = len == 0 ? std::nullopt : std::optional<std::size_t>(base + len - 1);
}

} // namespace

LabeledPoset kmt_poset(const KmtShape& shape) {
  std::vector<std::string> ids;
  std::vector<LabeledPoset::Label> labels;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  std::optional<std::size_t> q_top;
  std::optional<std::size_t> r_top;
  add_branch(shape.q, "y", ids, labels, less, q_top);
  add_branch(shape.r, "z", ids, labels, less, r_top);
  const LabeledPoset top_chain = vertical_diagram(shape.p, "x");
  const std::size_t base = ids.size();
  for (std::size_t v = 0; v < top_chain.size(); ++v) {
    ids.push_back(top_chain.id(v));
    labels.push_back(top_chain.label(v));
    if (v > 0) {
      less.emplace_back(base + v - 1, base + v);
    }
  }
  if (!top_chain.empty()) {
    if (q_top) {
      less.emplace_back(*q_top, base);
    }
    if (r_top) {
      less.emplace_back(*r_top, base);
    }
  }
  return LabeledPoset(std::move(ids), std::move(labels), less);
}

bool KmtDerivation::steps_hold() const {
  for (const auto& s : steps) {
    if (!s.identity_holds) {
      return false;
    }
  }
  return true;
}

bool KmtDerivation::terms_hold() const {
  for (const auto& t : terms) {
    if (!t.collapses || t.binomial_coefficient != t.observed_interleavings) {
      return false;
    }
  }
  return true;
}

namespace {

Index tail_of(const Index& seq) {
  return Index(std::vector<unsigned>(seq.parts().begin() + 1, seq.parts().end()));
}

Index with_front(unsigned first, const Index& rest) {
  std::vector<unsigned> parts{first};
  parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
  return Index(std::move(parts));
}

Index with_back(const Index& seq, unsigned last) {
  std::vector<unsigned> parts = seq.parts();
  parts.push_back(last);
  return Index(std::move(parts));
}

RefinementStep record_step(const LabeledPoset& x, const std::string& lower, const std::string& upper) {
  RefinementStep step;
  step.poset = x;
  step.lower = lower;
  step.upper = upper;
  step.identity_holds = refinement_identity_check_words(x, x.vertex(lower), x.vertex(upper));
  return step;
}

// Starting from `start`, in which the bullet `mover` at the bottom of the
// other branch's top segment already lies above the bottom `scan_prefix{len}`
// of the scanned branch's top segment, split on where `mover` falls among
// scan_prefix{len} < ... < scan_prefix1 (< x1).
void scan_branch(const KmtShape& shape, const LabeledPoset& start, bool q_side,
                 KmtDerivation& out) {
  const Index& scanned = q_side ? shape.q : shape.r;
  const Index& moved = q_side ? shape.r : shape.q;
  const std::string scan_prefix = q_side ? "y" : "z";
  const std::string move_prefix = q_side ? "z" : "y";
  const unsigned len = scanned[0];
  const unsigned moved_len = moved[0];
  const std::string mover = move_prefix + std::to_string(moved_len);

  LabeledPoset current = start;
  for (unsigned j = 0; j < len; ++j) {
    LabeledPoset xj;
    if (j + 1 < len) {
      const std::string below = scan_prefix + std::to_string(j + 1);
      out.steps.push_back(record_step(current, below, mover));
      xj = refine(current, below, mover);
      current = refine(current, mover, below);
    } else {
      xj = current;
    }

    KmtTerm term;
    term.from_q_branch = q_side;
    term.j = j;
    term.binomial_coefficient = binomial(moved_len - 1 + j, j);
    // White vertices above the mover: scan_prefix1..j and move_prefix1..(moved_len-1).
    LabeledPoset::Mask whites = 0;
    for (unsigned i = 1; i <= j; ++i) {
      whites |= LabeledPoset::Mask{1} << xj.vertex(scan_prefix + std::to_string(i));
    }
    for (unsigned i = 1; i < moved_len; ++i) {
      whites |= LabeledPoset::Mask{1} << xj.vertex(move_prefix + std::to_string(i));
    }
    term.observed_interleavings = count_linear_extensions(restrict_to(xj, whites));

    const Index new_p = with_back(shape.p, moved_len + j);
    const Index new_scanned = with_front(len - j, tail_of(scanned));
    const Index new_moved = tail_of(moved);
    term.reduced = q_side ? KmtShape{new_p, new_scanned, new_moved}
                          : KmtShape{new_p, new_moved, new_scanned};
    const WordCombination reduced_words =
        Rational(term.binomial_coefficient) * decompose_words(kmt_poset(term.reduced));
    term.collapses = decompose_words(xj) == reduced_words;
    term.poset = std::move(xj);
    out.rhs_words += reduced_words;
    out.terms.push_back(std::move(term));
  }
}

} // namespace

KmtDerivation derive_kmt_relation(const KmtShape& shape) {
  if (shape.q.empty() || shape.r.empty()) {
    throw std::invalid_argument("derive_kmt_relation: both lower branches must be nonempty");
  }
  KmtDerivation out;
  out.shape = shape;
  out.poset = kmt_poset(shape);
  out.lhs_words = decompose_words(out.poset);

  const std::string y = "y" + std::to_string(shape.q[0]);
  const std::string z = "z" + std::to_string(shape.r[0]);
  out.steps.push_back(record_step(out.poset, y, z));
  scan_branch(shape, refine(out.poset, y, z), true, out);
  scan_branch(shape, refine(out.poset, z, y), false, out);
  return out;
}

std::pair<ZetaCombination, ZetaCombination> kmt_relation_lhs_rhs(const KmtShape& shape) {
  const KmtDerivation d = derive_kmt_relation(shape);
  if (!d.poset.is_admissible()) {
    throw std::invalid_argument("kmt_relation_lhs_rhs: poset of shape " + shape.to_string() +
                                " is not admissible");
  }
  return {decompose(d.poset), to_indices(d.rhs_words)};
}

} // namespace pz
