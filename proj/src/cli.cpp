#include "posetzeta/cli.hpp"

#include "posetzeta/families.hpp"
#include "posetzeta/finite_sums.hpp"
#include "posetzeta/io.hpp"
#include "posetzeta/numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace pz::cli {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// {cases, passed, failed, first_failure} accumulator.
class Report {
public:
  void check(bool ok, const std::string& what) {
    ++cases_;
    if (ok) {
      ++passed_;
    } else if (!first_failure_) {
      first_failure_ = what;
    }
  }

  bool ok() const { return passed_ == cases_; }

  json to_json() const {
    json j{{"cases", cases_}, {"passed", passed_}, {"failed", cases_ - passed_}};
    j["first_failure"] = first_failure_ ? json(*first_failure_) : json(nullptr);
    return j;
  }

private:
  long cases_ = 0;
  long passed_ = 0;
  std::optional<std::string> first_failure_;
};

// Every nonempty index of weight w, in lexicographic order of compositions.
void compositions(unsigned w, std::vector<unsigned>& prefix, std::vector<Index>& out) {
  if (w == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned first = 1; first <= w; ++first) {
    prefix.push_back(first);
    compositions(w - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Index> indices_up_to(unsigned max_weight) {
  std::vector<Index> out;
  std::vector<unsigned> prefix;
  for (unsigned w = 1; w <= max_weight; ++w) {
    compositions(w, prefix, out);
  }
  return out;
}

std::string approx_json(const ApproxValue& v) {
  return "{\"value\":" + to_decimal(v.value) + ",\"error_bound\":" + to_decimal(v.error_bound, 6) + "}";
}

std::vector<unsigned> parse_parts(const std::string& text) {
  return parse_index(text).parts();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric calculus of 2-labeled posets and multiple zeta values",
               "posetzeta"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = 0;
  app.add_option("--jobs", jobs, "worker threads for numeric evaluation (default: POSETZETA_JOBS or 1)");

  std::function<int()> action;

  // transpose
  std::string index_text;
  auto* transpose_cmd = app.add_subcommand("transpose", "print the transpose k* of an index");
  transpose_cmd->add_option("index", index_text, "comma-separated index, e.g. 2,3")->required();
  transpose_cmd->callback([&] {
    action = [&] {
      out << transpose(parse_index(index_text)).to_string() << "\n";
      return kSuccess;
    };
  });

  // fsum
  long n_value = 0;
  auto* fsum_cmd = app.add_subcommand("fsum", "exact finite multiple harmonic sum s_k(N)");
  fsum_cmd->add_option("index", index_text)->required();
  fsum_cmd->add_option("N", n_value)->required();
  fsum_cmd->callback([&] {
    action = [&] {
      const Index k = parse_index(index_text);
      if (n_value <= 0) {
        throw ParseError("N must be a positive integer");
      }
      out << to_fraction_string(harmonic_sum(k, n_value)) << "\n";
      return kSuccess;
    };
  });

  // duality-check / zigzag-check
  unsigned kmax = 4;
  long nmax = 6;
  auto add_battery = [&](const std::string& name, const std::string& help, bool zigzag) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("kmax,--kmax", kmax, "largest index weight");
    cmd->add_option("nmax,--nmax", nmax, "largest N");
    cmd->callback([&, zigzag] {
      action = [&, zigzag] {
        if (kmax == 0 || nmax <= 0) {
          throw ParseError("kmax and nmax must be positive");
        }
        Report report;
        for (const Index& k : indices_up_to(kmax)) {
          for (long N = 1; N <= nmax; ++N) {
            const Rational expected = harmonic_sum(zigzag ? k : transpose(k), N);
            const Rational got = zigzag ? zigzag_integral_exact(k, N) : duality_lhs(k, N);
            report.check(got == expected, "k=" + k.to_string() + " N=" + std::to_string(N));
          }
        }
        out << report.to_json().dump() << "\n";
        return report.ok() ? kSuccess : kVerificationFailed;
      };
    });
  };
  add_battery("duality-check", "binomial duality of finite sums over all small indices", false);
  add_battery("zigzag-check", "iterated-integral evaluation of finite sums over all small indices", true);

  // decompose
  std::string poset_path;
  auto* decompose_cmd = app.add_subcommand("decompose", "MZV expansion of an admissible poset file");
  decompose_cmd->add_option("poset", poset_path, "poset JSON file")->required();
  decompose_cmd->callback([&] {
    action = [&] {
      const LabeledPoset x = parse_poset(read_file(poset_path));
      if (!x.is_admissible()) {
        throw ParseError("poset is not admissible");
      }
      out << combination_to_json(decompose(x)) << "\n";
      return kSuccess;
    };
  });

  // star-relation
  long trunc = 100000;
  bool trunc_given = false;
  auto* star_cmd = app.add_subcommand("star-relation",
                                      "integral minus series expansion of zeta-star(k)");
  star_cmd->add_option("index", index_text)->required();
  auto* star_trunc = star_cmd->add_option("--trunc", trunc, "also report the numeric residual");
  star_cmd->callback([&, star_trunc] {
    trunc_given = star_trunc->count() > 0;
    action = [&] {
      const ZetaCombination relation = derive_star_relation(parse_index(index_text));
      out << combination_to_json(relation) << "\n";
      if (trunc_given) {
        err << "residual " << approx_json(combination_eval(relation, trunc, jobs)) << "\n";
      }
      return kSuccess;
    };
  });

  // eval
  std::string eval_target;
  auto* eval_cmd = app.add_subcommand("eval", "numeric value of zeta(k) or of a combination file");
  eval_cmd->add_option("target", eval_target, "index like 2,1 or a combination JSON file")->required();
  eval_cmd->add_option("--trunc", trunc, "truncation point M");
  eval_cmd->callback([&] {
    action = [&] {
      if (trunc <= 0) {
        throw ParseError("--trunc must be positive");
      }
      ApproxValue v;
      if (eval_target.ends_with(".json") || std::filesystem::is_regular_file(eval_target)) {
        v = combination_eval(parse_combination(read_file(eval_target)), trunc, jobs);
      } else {
        v = mzv_eval(parse_index(eval_target), trunc);
      }
      out << approx_json(v) << "\n";
      return kSuccess;
    };
  });

  // verify ak|mt|kmt
  auto* verify_cmd = app.add_subcommand("verify", "check a family identity");
  verify_cmd->require_subcommand(1);
  unsigned ak_k = 1;
  unsigned ak_n = 1;
  auto* ak_cmd = verify_cmd->add_subcommand("ak", "Arakawa-Kaneko poset against zeta-star");
  ak_cmd->add_option("--k", ak_k)->required();
  ak_cmd->add_option("--n", ak_n)->required();
  ak_cmd->callback([&] {
    action = [&] {
      if (ak_k == 0 || ak_n == 0) {
        throw ParseError("--k and --n must be positive");
      }
      Report report;
      const std::string tag = "k=" + std::to_string(ak_k) + " n=" + std::to_string(ak_n);
      report.check(verify_ohno(ak_k, ak_n), "ohno " + tag);
      report.check(ak_antichain_factor(ak_k, ak_n) == factorial(ak_n - 1), "antichain factor " + tag);
      out << report.to_json().dump() << "\n";
      return report.ok() ? kSuccess : kVerificationFailed;
    };
  });

  std::string mt_ks = "1,1";
  unsigned mt_k = 2;
  long family_trunc = 2000;
  auto* mt_cmd = verify_cmd->add_subcommand("mt", "Mordell-Tornheim poset against its series");
  mt_cmd->add_option("--ks", mt_ks)->required();
  mt_cmd->add_option("--k", mt_k)->required();
  mt_cmd->add_option("--trunc", family_trunc);
  mt_cmd->callback([&] {
    action = [&] {
      if (mt_k == 0) {
        throw ParseError("--k must be positive");
      }
      const auto ks = parse_parts(mt_ks);
      const BradleyZhouReport bz = verify_bradley_zhou(ks, mt_k, family_trunc);
      Report report;
      report.check(bz.homogeneous, "weight/depth homogeneity");
      report.check(bz.numeric_agreement, "series vs decomposition");
      json j = report.to_json();
      j["decomposition"] = json::parse(combination_to_json(bz.decomposition));
      out << j.dump() << "\n";
      return report.ok() ? kSuccess : kVerificationFailed;
    };
  });

  std::string kmt_p;
  std::string kmt_q;
  std::string kmt_r;
  bool show_steps = false;
  auto* kmt_cmd = verify_cmd->add_subcommand("kmt", "root-system relation via refinements");
  kmt_cmd->add_option("--p", kmt_p, "top chain (may be omitted)");
  kmt_cmd->add_option("--q", kmt_q)->required();
  kmt_cmd->add_option("--r", kmt_r)->required();
  kmt_cmd->add_option("--trunc", family_trunc);
  kmt_cmd->add_flag("--show-steps", show_steps);
  kmt_cmd->callback([&] {
    action = [&] {
      const KmtShape shape{kmt_p.empty() ? Index{} : parse_index(kmt_p), parse_index(kmt_q),
                           parse_index(kmt_r)};
      const KmtDerivation d = derive_kmt_relation(shape);
      Report report;
      report.check(d.identity_holds(), "lhs == rhs " + shape.to_string());
      for (std::size_t i = 0; i < d.steps.size(); ++i) {
        report.check(d.steps[i].identity_holds, "refinement step " + std::to_string(i));
      }
      for (const auto& t : d.terms) {
        const std::string tag = std::string(t.from_q_branch ? "q" : "r") + "-side j=" + std::to_string(t.j);
        report.check(t.binomial_coefficient == t.observed_interleavings, "interleavings " + tag);
        report.check(t.collapses, "collapse " + tag);
      }
      if (!shape.p.empty() && shape.p[0] >= 2) {
        const ApproxValue series = kmt_series_eval(shape.p, shape.q, shape.r, family_trunc);
        const ApproxValue integral = combination_eval(decompose(d.poset), family_trunc, jobs);
        report.check(agree_within_bounds(series, integral), "series vs decomposition");
      }
      json j = report.to_json();
      if (show_steps) {
        json steps = json::array();
        for (const auto& s : d.steps) {
          json step{{"poset", json::parse(poset_to_json(s.poset))},
                    {"lower", s.lower},
                    {"upper", s.upper},
                    {"identity_holds", s.identity_holds}};
          if (s.poset.is_admissible()) {
            step["decomposition"] = json::parse(combination_to_json(decompose(s.poset)));
          }
          steps.push_back(step);
        }
        j["steps"] = steps;
        json terms = json::array();
        for (const auto& t : d.terms) {
          json term{{"branch", t.from_q_branch ? "q" : "r"},
                    {"j", t.j},
                    {"poset", json::parse(poset_to_json(t.poset))},
                    {"reduced", t.reduced.to_string()},
                    {"binomial", t.binomial_coefficient.get_str()},
                    {"interleavings", t.observed_interleavings.get_str()}};
          if (t.poset.is_admissible()) {
            term["decomposition"] = json::parse(combination_to_json(decompose(t.poset)));
          }
          terms.push_back(term);
        }
        j["terms"] = terms;
      }
      out << j.dump() << "\n";
      return report.ok() ? kSuccess : kVerificationFailed;
    };
  });

  // export-dot
  std::string sidecar_path;
  auto* dot_cmd = app.add_subcommand("export-dot", "Hasse diagram of a poset file in DOT");
  dot_cmd->add_option("poset", poset_path)->required();
  dot_cmd->add_option("--sidecar", sidecar_path, "also write the poset under the DOT node names");
  dot_cmd->callback([&] {
    action = [&] {
      const LabeledPoset x = parse_poset(read_file(poset_path));
      out << poset_to_dot(x);
      if (!sidecar_path.empty()) {
        std::ofstream side(sidecar_path);
        if (!side) {
          throw ParseError("cannot write '" + sidecar_path + "'");
        }
        side << dot_sidecar_json(x) << "\n";
      }
      return kSuccess;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}

} // namespace pz::cli
