// wittlang: command-line front end. Every command prints a summary (or a
// JSON/CSV report) and exits 0 iff all of its checks pass.
//
// Exit codes: 0 pass, 1 a check failed, 2 bad input, 3 size cap exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wittlang/wittlang.hpp"

using namespace wittlang;
using io::json;

namespace {

struct Options {
  int p = 2;
  int r = 1;
  std::string modulus;
  int n = 1;
  int d = 1;
  std::uint64_t base_q = 0;
  int work_degree = 2;
  int dmax = 4;
  std::string order;
  std::string target = "s3";
  std::uint64_t sample = 0;
  std::uint64_t seed = 0x5eed;
  std::string out;
  std::string format = "text";
  bool check_det_hom = false;
  bool punctured = false;
  std::int64_t nu_bound = 2;
  bool alpha = false;
  std::string gamma = "lang-self";
  bool tame = false;
  std::uint64_t q = 4;
};

constexpr std::uint64_t kDefaultSample = 10000;

class Report {
 public:
  Report(std::string command, const Options& o) : command_(std::move(command)) {
    body_["command"] = command_;
    body_["version"] = io::kVersion;
    body_["seed"] = o.seed;
    body_["config"] = {{"p", o.p},         {"r", o.r},
                       {"modulus", o.modulus}, {"n", o.n},
                       {"d", o.d},         {"base_q", o.base_q},
                       {"work_degree", o.work_degree}, {"dmax", o.dmax},
                       {"order", o.order}, {"target", o.target},
                       {"sample", o.sample}, {"format", o.format},
                       {"cap", size_cap()}};
    body_["checks"] = json::array();
  }

  void check(const std::string& name, bool ok, const std::string& detail) {
    passed_ = passed_ && ok;
    body_["checks"].push_back({{"name", name}, {"passed", ok}, {"detail", detail}});
    lines_.push_back(std::string(ok ? "PASS " : "FAIL ") + name + ": " + detail);
  }

  void note(const std::string& line) { lines_.push_back(line); }
  json& results() { return body_["results"]; }
  bool passed() const { return passed_; }

  json finish() {
    body_["passed"] = passed_;
    return body_;
  }

  std::string text() const {
    std::ostringstream out;
    out << "wittlang " << command_ << " (version " << io::kVersion << ")\n";
    for (const auto& l : lines_) out << "  " << l << '\n';
    out << "result: " << (passed_ ? "PASS" : "FAIL") << '\n';
    return out.str();
  }

 private:
  std::string command_;
  json body_ = json::object();
  std::vector<std::string> lines_;
  bool passed_ = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

FieldPtr field_from(const Options& o) {
  if (o.modulus.empty()) return gf::make_field(o.p, o.r);
  std::vector<int> m;
  for (const auto& t : split(o.modulus, ',')) {
    try {
      m.push_back(std::stoi(t));
    } catch (const std::exception&) {
      throw SpecError("modulus must be a comma-separated list of integers, constant term first");
    }
  }
  gf::FieldSpec spec{o.p, o.r, m};
  gf::validate(spec);
  return gf::make_field(spec);
}

std::string shape_name(int n, int d, std::uint64_t q) {
  return "L_{" + std::to_string(n) + "," + std::to_string(d) + "}(F_" + std::to_string(q) + ")";
}

// Exhaustive when there are at most 2^16 checks and no sample size was asked for.
bool exhaustive(std::uint64_t checks, const Options& o) { return o.sample == 0 && checks <= kExhaustivePairCap; }

std::uint64_t sample_size(const Options& o) { return o.sample > 0 ? o.sample : kDefaultSample; }

std::uint64_t square(std::uint64_t x) { return x > UINT32_MAX ? UINT64_MAX : x * x; }

// Runs check(i, j) over all pairs or over a seeded sample; returns the count and
// whether every call succeeded.
template <class Check>
std::pair<std::uint64_t, bool> over_pairs(std::size_t size, const Options& o, Check check) {
  std::uint64_t done = 0;
  if (exhaustive(square(size), o)) {
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        ++done;
        if (!check(i, j)) return {done, false};
      }
    return {done, true};
  }
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick(0, size - 1);
  for (std::uint64_t t = 0; t < sample_size(o); ++t) {
    ++done;
    if (!check(pick(rng), pick(rng))) return {done, false};
  }
  return {done, true};
}

std::string mode(std::uint64_t checks, const Options& o) { return exhaustive(checks, o) ? "exhaustive" : "sampled"; }

// ---------------------------------------------------------------------------

void cmd_enumerate_punctured(const Options& o, const FieldPtr& field, Report& rep) {
  const auto elems = enumerate_punctured(field, o.n, o.d, o.nu_bound);
  const std::uint64_t expected = group_order(*field, o.n, o.d) * static_cast<std::uint64_t>(2 * o.nu_bound + 1);
  rep.check("cardinality", elems.size() == expected,
            std::to_string(elems.size()) + " elements of Z x " + shape_name(o.n, o.d, field->size()) +
                " with |nu| <= " + std::to_string(o.nu_bound));
  const auto id = punctured_identity(field, o.n, o.d);
  bool inv_ok = true;
  for (const auto& a : elems) inv_ok = inv_ok && punctured_mul(a, punctured_inv(a)) == id && punctured_mul(id, a) == a;
  rep.check("identity-inverse", inv_ok, "all elements");
  const auto [pairs, ok] = over_pairs(elems.size(), o, [&](std::size_t i, std::size_t j) {
    const auto ab = punctured_mul(elems[i], elems[j]);
    return ab.nu == elems[i].nu + elems[j].nu && ab.body == lmul(elems[i].body, elems[j].body);
  });
  rep.check("componentwise-law", ok, std::to_string(pairs) + " pairs, " + mode(square(elems.size()), o));
  rep.results() = {{"count", elems.size()}};
}

int cmd_enumerate(const Options& o, Report& rep, std::string& csv) {
  const FieldPtr field = field_from(o);
  if (o.punctured) {
    cmd_enumerate_punctured(o, field, rep);
    return 0;
  }
  const std::uint64_t expected = group_order(*field, o.n, o.d);
  const auto elems = enumerate_group(field, o.n, o.d);
  rep.check("cardinality", elems.size() == expected,
            std::to_string(elems.size()) + " elements of " + shape_name(o.n, o.d, field->size()));
  std::vector<bool> seen(expected, false);
  bool distinct = true;
  for (const auto& a : elems) {
    const auto k = index_of(a);
    distinct = distinct && k < expected && !seen[k];
    if (k < expected) seen[k] = true;
  }
  rep.check("distinct", distinct, "index map is a bijection");
  const auto id = TruncElem::identity(field, o.n, o.d);
  bool inv_ok = true;
  for (const auto& a : elems) {
    const auto b = linv(a);
    inv_ok = inv_ok && lmul(a, id) == a && lmul(id, a) == a && lmul(a, b).is_identity() && lmul(b, a).is_identity();
  }
  rep.check("identity-inverse", inv_ok, "all elements");

  const std::uint64_t size = elems.size();
  const std::uint64_t triples = size > 0x28000 ? UINT64_MAX : size * size * size;
  std::uint64_t assoc = 0;
  bool assoc_ok = true;
  if (exhaustive(triples, o)) {
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const auto ab = lmul(a, b);
        for (const auto& c : elems) {
          ++assoc;
          assoc_ok = assoc_ok && lmul(ab, c) == lmul(a, lmul(b, c));
        }
      }
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (std::uint64_t t = 0; t < sample_size(o) && assoc_ok; ++t, ++assoc) {
      const auto& a = elems[pick(rng)];
      const auto& b = elems[pick(rng)];
      const auto& c = elems[pick(rng)];
      assoc_ok = lmul(lmul(a, b), c) == lmul(a, lmul(b, c));
    }
  }
  rep.check("associativity", assoc_ok, std::to_string(assoc) + " triples, " + mode(triples, o));

  if (o.check_det_hom) {
    const auto [pairs, ok] = over_pairs(elems.size(), o, [&](std::size_t i, std::size_t j) {
      return det_map(lmul(elems[i], elems[j])) == lmul(det_map(elems[i]), det_map(elems[j]));
    });
    rep.check("det-homomorphism", ok,
              std::to_string(pairs) + " pairs, " + (exhaustive(square(size), o) ? "all pairs" : "sampled"));
  }

  json out = {{"count", size}, {"field", io::to_json(field->spec())}, {"n", o.n}, {"d", o.d}};
  constexpr std::uint64_t kListLimit = 4096;
  if (size <= kListLimit) {
    json list = json::array();
    for (const auto& a : elems) list.push_back(io::to_json(a));
    out["elements"] = std::move(list);
  } else {
    out["elements_omitted"] = true;
  }
  rep.results() = std::move(out);

  std::ostringstream c;
  c << "index,element\n";
  for (const auto& a : elems) c << index_of(a) << ",\"" << a.to_string() << "\"\n";
  csv = c.str();
  return 0;
}

void cmd_lang_alpha(const Options& o, Report& rep) {
  const std::uint64_t q = o.base_q != 0 ? o.base_q : static_cast<std::uint64_t>(o.p);
  const FieldPtr base = gf::make_field_of_size(q);
  Isogeny iso;
  if (o.gamma == "lang-self") {
    iso = Isogeny::lang_self(o.n, o.d);
  } else if (o.gamma == "det") {
    iso = Isogeny::table("det", o.n, o.d, 1, o.d, [](const TruncElem& h) { return det_map(h); });
  } else {
    throw DomainError("unknown --gamma '" + o.gamma + "' (expected lang-self or det)");
  }
  const auto r = step2_alpha_report(iso, base, o.work_degree);
  const std::string where = "over F_" + std::to_string(r.work_size);
  rep.check("cover-homomorphism", r.cover_homomorphism, "gamma = " + r.isogeny + " " + where);
  rep.check("cover-frobenius", r.cover_frobenius_equivariant, "gamma commutes with Frobenius");
  rep.check("lifts", r.all_lifted, std::to_string(r.rational_points) + " rational points lifted " + where);
  rep.check("alpha-in-gamma", r.all_in_gamma && r.well_defined, "values lie in Gamma, independent of the lift");
  rep.check("alpha-homomorphism", r.homomorphic, "on all pairs of rational points");
  rep.check("alpha-surjective", r.surjective, "image = Gamma, |Gamma| = " + std::to_string(r.gamma_size));
  json values = json::array();
  for (const auto& [x, a] : r.values) values.push_back({{"x", x.to_string()}, {"alpha", a.to_string()}});
  rep.results() = {{"isogeny", r.isogeny},
                   {"base_q", r.base_q},
                   {"work_degree", r.work_degree},
                   {"work_size", r.work_size},
                   {"rational_points", r.rational_points},
                   {"gamma_size", r.gamma_size},
                   {"values", std::move(values)}};
}

int cmd_lang(const Options& o, Report& rep) {
  if (o.alpha) {
    cmd_lang_alpha(o, rep);
    return 0;
  }
  const FieldPtr field = field_from(o);
  const std::uint64_t q = o.base_q != 0 ? o.base_q : static_cast<std::uint64_t>(o.p);
  const auto ctx = make_lang_context(field, q, o.n, o.d);
  const auto kernel = lang_kernel(ctx);
  const auto stats = lang_fibers(ctx);
  std::set<TruncElem> k(kernel.begin(), kernel.end());
  std::set<TruncElem> rational;
  for (const auto& x : enumerate_group(field, o.n, o.d)) {
    if (is_rational(x, q)) rational.insert(x);
  }
  rep.check("kernel", k == rational,
            "kernel size " + std::to_string(kernel.size()) + " = F_" + std::to_string(q) + "-points of " +
                shape_name(o.n, o.d, field->size()));
  rep.check("fibers", stats.uniform() && stats.min_fiber == kernel.size() &&
                          stats.kernel_size * stats.fiber_count == stats.group_size,
            std::to_string(stats.fiber_count) + " fibers of size " + std::to_string(stats.min_fiber));
  rep.results() = io::lang_report(stats, kernel);
  return 0;
}

int cmd_s3(const Options& o, Report& rep) {
  TransvectionTarget t;
  if (o.target == "s3") {
    t = build_s3_f2();
  } else if (o.target == "sl2") {
    t = build_sl2_f2();
  } else {
    throw DomainError("unknown --target '" + o.target + "' (expected s3 or sl2)");
  }
  const auto order = o.order.empty() ? default_order(t) : parse_order(t, split(o.order, ','));
  rep.check("transvections", transvections_have_order_p(t), "every generator has order p");
  const auto img = theta_image(t, o.d, order);
  const auto generated = matrix_closure(*t.field, t.transvections());
  std::string order_text;
  for (std::size_t i : order) order_text += (order_text.empty() ? "" : ",") + t.names[i];
  rep.check("image", img.image == generated,
            "image of " + std::to_string(img.domain_size) + " elements under order " + order_text + " has size " +
                std::to_string(img.image.size()) + ", generated group " + std::to_string(generated.size()));
  if (o.target == "s3") rep.check("image-is-s3", img.image.size() == 6, "|S_3| = 6");
  const GroupTable gamma = matrix_group_table(t.field, img.image);
  rep.check("quasi-p", quasi_p_check(gamma, t.field->p()), "image generated by its p-subgroups");
  json sigs = json::array();
  std::map<std::string, int> tally;
  for (const auto& s : all_subgroups(gamma)) ++tally[to_string(signature(gamma, s))];
  for (const auto& [sig, count] : tally) sigs.push_back({{"signature", sig}, {"count", count}});
  rep.note("subgroups of the image: " + std::to_string(std::accumulate(
                                            tally.begin(), tally.end(), 0,
                                            [](int acc, const auto& kv) { return acc + kv.second; })));
  json out = io::to_json(t, img);
  out["target"] = io::to_json(t);
  out["subgroup_signatures"] = std::move(sigs);
  rep.results() = std::move(out);
  return 0;
}

int cmd_covers(const Options& o, Report& rep, std::string& csv) {
  if (o.tame) {
    const auto t = tame_count(o.q);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t k = 1; k <= o.q - 1; ++k) {
      if ((o.q - 1) % k == 0) divisors.push_back(k);
    }
    std::string text;
    for (auto v : t) text += (text.empty() ? "" : ",") + std::to_string(v);
    rep.check("tame", t == divisors, "cyclic subgroup orders of F_" + std::to_string(o.q) + "^x: {" + text + "}");
    rep.results() = {{"q", o.q}, {"orders", t}};
    std::ostringstream c;
    c << "order\n";
    for (auto v : t) c << v << '\n';
    csv = c.str();
    return 0;
  }
  const auto rows = match_filtrations(o.p, o.dmax);
  for (const auto& row : rows) {
    rep.check("D=" + std::to_string(row.degree), row.equal(),
              "covers " + std::to_string(row.as_count) + ", index-p subgroups " + std::to_string(row.witt_count));
  }
  rep.results() = {{"p", o.p}, {"rows", io::to_json(rows)}};
  csv = io::to_csv(rows);
  return 0;
}

int cmd_hopf(const Options& o, Report& rep) {
  const FieldPtr field = field_from(o);
  const auto gens = all_generators(o.n, o.d);
  int coassoc = 0, counit = 0, primitive = 0, level_one = 0;
  for (const auto& g : gens) {
    coassoc += coassociative(field, o.n, o.d, g) ? 1 : 0;
    counit += counit_law(field, o.n, o.d, g) ? 1 : 0;
    if (g.lambda == 1) {
      ++level_one;
      const auto x = HopfMonomial::generator(o.n, o.d, g);
      const auto one = HopfMonomial::unit(o.n, o.d);
      TensorPoly expected(field);
      expected.add_term({x, one}, field->one());
      expected.add_term({one, x}, field->one());
      primitive += comult(field, o.n, o.d, g) == expected ? 1 : 0;
    }
  }
  const auto total = static_cast<int>(gens.size());
  rep.check("coassociativity", coassoc == total, std::to_string(coassoc) + "/" + std::to_string(total) + " generators");
  rep.check("counit", counit == total, std::to_string(counit) + "/" + std::to_string(total) + " generators");
  rep.check("primitive", primitive == level_one,
            std::to_string(primitive) + "/" + std::to_string(level_one) + " level-one generators primitive");

  const std::uint64_t size = group_order(*field, o.n, o.d);
  std::vector<TruncElem> elems;
  std::mt19937_64 rng(o.seed);
  const bool full = exhaustive(square(size), o);
  if (full) {
    elems = enumerate_group(field, o.n, o.d);
  } else {
    const std::uint64_t k = std::min<std::uint64_t>(sample_size(o), size);
    for (std::uint64_t i = 0; i < k; ++i) elems.push_back(random_element(field, o.n, o.d, rng));
  }
  std::vector<TensorPoly> tensors;
  for (const auto& g : gens) tensors.push_back(comult(field, o.n, o.d, g));
  std::uint64_t pairs = 0;
  bool pairing_ok = true;
  auto check_pair = [&](const TruncElem& a, const TruncElem& b) {
    const auto ab = lmul(a, b);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (evaluate_raw(HopfMonomial::generator(o.n, o.d, gens[i]), ab) != evaluate_tensor(tensors[i], a, b)) {
        return false;
      }
    }
    return true;
  };
  if (full) {
    for (const auto& a : elems)
      for (const auto& b : elems) {
        ++pairs;
        pairing_ok = pairing_ok && check_pair(a, b);
      }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (std::uint64_t t = 0; t < sample_size(o); ++t) {
      ++pairs;
      pairing_ok = pairing_ok && check_pair(elems[pick(rng)], elems[pick(rng)]);
    }
  }
  rep.check("pairing", pairing_ok,
            std::to_string(pairs) + " pairs x " + std::to_string(gens.size()) + " generators, " +
                (full ? "exhaustive" : "sampled"));
  bool antipode_ok = true;
  for (const auto& a : elems)
    for (const auto& g : gens) antipode_ok = antipode_ok && antipode_check(HopfMonomial::generator(o.n, o.d, g), a);
  rep.check("antipode", antipode_ok, std::to_string(elems.size()) + " elements");

  json comults = json::array();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    comults.push_back({{"generator", to_string(gens[i])}, {"comult", io::to_json(tensors[i])}});
  }
  rep.results() = {{"generators", gens.size()}, {"pairs", pairs}, {"comultiplication", std::move(comults)}};
  return 0;
}

void emit(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(path);
  if (!f) throw SpecError("cannot write " + path);
  f << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-level computations with truncated matrix power series groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--p", o.p, "characteristic");
  app.add_option("--r", o.r, "field degree over F_p");
  app.add_option("--modulus", o.modulus, "field modulus, comma-separated, constant term first");
  app.add_option("--n", o.n, "matrix size");
  app.add_option("--d", o.d, "truncation level");
  app.add_option("--base-q", o.base_q, "base field size for the Lang map (default p)");
  app.add_option("--work-degree", o.work_degree, "starting [F_{q^m} : F_q] for the lift search");
  app.add_option("--dmax", o.dmax, "largest conductor bound");
  app.add_option("--order", o.order, "theta composition order, e.g. 13,23,12");
  app.add_option("--target", o.target, "s3 or sl2");
  app.add_option("--sample", o.sample, "sample size; forces sampled checks");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "enumerate L_{n,d}(F_q) and verify the group axioms");
  enumerate->add_flag("--check-det-hom", o.check_det_hom, "verify det is a homomorphism");
  enumerate->add_flag("--punctured", o.punctured, "enumerate Z x L_{n,d} instead");
  enumerate->add_option("--nu-bound", o.nu_bound, "|nu| bound for --punctured");
  auto* lang_cmd = app.add_subcommand("lang", "Lang map kernel and fibers");
  lang_cmd->add_flag("--alpha", o.alpha, "evaluate the induced map alpha on rational points");
  lang_cmd->add_option("--gamma", o.gamma, "lang-self or det");
  auto* s3 = app.add_subcommand("s3", "theta image of L_{3,1}(F_2) in a transvection target");
  auto* covers = app.add_subcommand("covers", "count Z/p-covers against index-p subgroups");
  covers->add_flag("--tame", o.tame, "cyclic subgroup orders of F_q^x");
  covers->add_option("--q", o.q, "field size for --tame");
  auto* hopf = app.add_subcommand("hopf", "coalgebra laws and pairing with the group law");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::string command;
  for (auto* sub : {enumerate, lang_cmd, s3, covers, hopf}) {
    if (sub->parsed()) command = sub->get_name();
  }
  Report rep(command, o);
  std::string csv;
  try {
    if (command == "enumerate") cmd_enumerate(o, rep, csv);
    if (command == "lang") cmd_lang(o, rep);
    if (command == "s3") cmd_s3(o, rep);
    if (command == "covers") cmd_covers(o, rep, csv);
    if (command == "hopf") cmd_hopf(o, rep);
  } catch (const VerificationError& e) {
    rep.check("verification", false, e.what());
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (o.format == "json") {
      emit(rep.finish().dump(2) + "\n", o.out);
    } else if (o.format == "csv") {
      if (csv.empty()) throw SpecError("csv output is available for enumerate and covers only");
      emit(csv, o.out);
    } else {
      std::cout << rep.text();
      if (!o.out.empty()) emit(rep.finish().dump(2) + "\n", o.out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rep.passed() ? 0 : 1;
}
