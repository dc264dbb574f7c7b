// disc-val: discriminants of hypersurfaces over discrete valuation rings,
// special-fiber singularity analysis, and the theorem-verification harness.
//
// Every command prints a single JSON document on stdout and a short human
// summary on stderr (suppressed by --quiet / --json-only).
//
// Exit codes: 0 success; 1 computation error; 2 usage error; 3 verify-suite
// failures; 4 verify suite with every instance skipped.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "discval/constructions.hpp"
#include "discval/json_io.hpp"
#include "discval/parse.hpp"
#include "discval/verify.hpp"

using namespace discval;

namespace {

struct CommonFlags {
  bool quiet = false;
  bool json_only = false;
  bool silent() const { return quiet || json_only; }
};

void emit(const json& doc, const CommonFlags& flags, const std::string& note) {
  std::cout << doc.dump(2) << "\n";
  if (!flags.silent() && !note.empty()) std::cerr << note << "\n";
}

i64 parse_prime_after_colon(const std::string& spec, const std::string& kind) {
  auto pos = spec.find(':');
  if (pos == std::string::npos) throw InvalidInputError(kind + " spec needs a prime, e.g. " + kind + ":5");
  return static_cast<i64>(std::stoll(spec.substr(pos + 1)));
}

FqRing parse_field_spec(const std::string& spec) {
  if (spec.rfind("Fq:", 0) != 0) throw InvalidInputError("field spec must look like Fq:7 or Fq:7^2");
  std::string body = spec.substr(3);
  auto caret = body.find('^');
  i64 p = static_cast<i64>(std::stoll(body.substr(0, caret)));
  int m = (caret == std::string::npos) ? 1 : std::stoi(body.substr(caret + 1));
  return build_extension_field(p, m);
}

// run fn over the DVR named by the spec
template <typename Fn>
int with_dvr(const std::string& spec, Fn&& fn) {
  if (spec.rfind("Zp:", 0) == 0) return fn(PLocalRing(parse_prime_after_colon(spec, "Zp")));
  if (spec.rfind("Fpt:", 0) == 0) return fn(TLocalRing(parse_prime_after_colon(spec, "Fpt")));
  throw InvalidInputError("ring spec must be Zp:<p> or Fpt:<p>, got '" + spec + "'");
}

// run fn over any coefficient ring the disc command accepts
template <typename Fn>
int with_disc_ring(const std::string& spec, Fn&& fn) {
  if (spec == "ZZ") return fn(ZZRing{});
  if (spec == "QQ") return fn(QQRing{});
  return with_dvr(spec, fn);
}

std::vector<PointProj> parse_points(const FqRing& field, const std::string& text, int nvars) {
  std::vector<PointProj> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    std::string chunk = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!chunk.empty()) {
      std::vector<FqElem> coords;
      std::size_t p0 = 0;
      while (p0 <= chunk.size()) {
        auto p1 = chunk.find(':', p0);
        std::string c = chunk.substr(p0, p1 == std::string::npos ? std::string::npos : p1 - p0);
        coords.push_back(field.from_int(std::stoll(c)));
        if (p1 == std::string::npos) break;
        p0 = p1 + 1;
      }
      if (static_cast<int>(coords.size()) != nvars)
        throw InvalidInputError("point '" + chunk + "' has " + std::to_string(coords.size()) +
                                " coordinates, expected " + std::to_string(nvars));
      out.push_back(normalize_point(field, coords));
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discriminant valuations of hypersurfaces over discrete valuation rings"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_flag("--quiet", flags.quiet, "suppress the human-readable summary on stderr");
  app.add_flag("--json-only", flags.json_only, "alias of --quiet");

  // ---- disc ----
  auto* disc_cmd = app.add_subcommand("disc", "discriminant and its valuation")->fallthrough();
  std::string disc_ring = "Zp:5", disc_poly;
  int disc_vars = 3, disc_degree = 0;
  std::size_t max_matrix = kDefaultMaxMacaulaySize;
  disc_cmd->add_option("--ring", disc_ring, "ZZ, QQ, Zp:<p> or Fpt:<p>");
  disc_cmd->add_option("--vars", disc_vars, "number of variables (n+1)")->required();
  disc_cmd->add_option("--degree", disc_degree, "expected degree (checked when given)");
  disc_cmd->add_option("--max-matrix", max_matrix, "Macaulay matrix size limit");
  disc_cmd->add_option("poly", disc_poly, "homogeneous form")->required();

  // ---- singular ----
  auto* sing_cmd = app.add_subcommand("singular", "singular locus of a hypersurface over F_q")->fallthrough();
  std::string sing_field = "Fq:7", sing_poly;
  int sing_vars = 3, mmax = 4;
  long long max_enum = 1LL << 24;
  sing_cmd->add_option("--field", sing_field, "Fq:<p>");
  sing_cmd->add_option("--vars", sing_vars, "number of variables (n+1)")->required();
  sing_cmd->add_option("--mmax", mmax, "extension-degree bound for closed points");
  sing_cmd->add_option("--max-enum", max_enum, "point enumeration budget");
  sing_cmd->add_option("poly", sing_poly, "homogeneous form")->required();

  // ---- classify ----
  auto* cls_cmd = app.add_subcommand("classify", "full valuation-1 equivalence report")->fallthrough();
  std::string cls_ring = "Zp:5", cls_poly;
  int cls_vars = 3, cls_mmax = 4;
  long long cls_max_enum = 1LL << 24;
  std::size_t cls_max_matrix = kDefaultMaxMacaulaySize;
  cls_cmd->add_option("--ring", cls_ring, "Zp:<p> or Fpt:<p>");
  cls_cmd->add_option("--vars", cls_vars, "number of variables (n+1)")->required();
  cls_cmd->add_option("--mmax", cls_mmax, "extension-degree bound");
  cls_cmd->add_option("--max-enum", cls_max_enum, "point enumeration budget");
  cls_cmd->add_option("--max-matrix", cls_max_matrix, "Macaulay matrix size limit");
  cls_cmd->add_option("poly", cls_poly, "homogeneous form over the DVR")->required();

  // ---- vmin ----
  auto* vmin_cmd = app.add_subcommand("vmin", "minimum discriminant valuation over lifts")->fallthrough();
  std::string vmin_field = "Fq:7", vmin_ring, vmin_poly;
  int vmin_vars = 3, vmin_trials = 64;
  std::uint64_t vmin_seed = 1;
  bool exact_quadric = false;
  std::size_t vmin_max_matrix = kDefaultMaxMacaulaySize;
  vmin_cmd->add_option("--field", vmin_field, "Fq:<p> (residue data)");
  vmin_cmd->add_option("--ring", vmin_ring, "DVR for the lifts (default Zp:<p>)");
  vmin_cmd->add_option("--vars", vmin_vars, "number of variables (n+1)")->required();
  vmin_cmd->add_flag("--exact-quadric", exact_quadric, "exact path (quadrics, n <= 4)");
  vmin_cmd->add_option("--trials", vmin_trials, "sampled lifts");
  vmin_cmd->add_option("--seed", vmin_seed, "sampling seed");
  vmin_cmd->add_option("--max-matrix", vmin_max_matrix, "Macaulay matrix size limit");
  vmin_cmd->add_option("poly", vmin_poly, "residue form over F_p")->required();

  // ---- make ----
  auto* make_cmd = app.add_subcommand("make", "construct example families")->fallthrough();
  make_cmd->require_subcommand(1);

  auto* mk_lemma = make_cmd->add_subcommand("lemma93", "form with a prescribed finite singular set")->fallthrough();
  std::string mk_field = "Fq:101", mk_points;
  int mk_vars = 3, mk_degree = 5, mk_attempts = 200, mk_mmax = 4;
  std::uint64_t mk_seed = 1;
  mk_lemma->add_option("--field", mk_field, "Fq:<p>");
  mk_lemma->add_option("--vars", mk_vars, "number of variables (n+1)");
  mk_lemma->add_option("--degree", mk_degree, "degree d (needs r <= (d-1)/2)");
  mk_lemma->add_option("--points", mk_points, "prescribed points, e.g. '1:0:0;0:1:0'")->required();
  mk_lemma->add_option("--seed", mk_seed, "search seed");
  mk_lemma->add_option("--attempts", mk_attempts, "search budget");
  mk_lemma->add_option("--mmax", mk_mmax, "extension bound for verification");

  auto* mk_line = make_cmd->add_subcommand("line-family", "x2 * prod (x1 - c_i x0) + g")->fallthrough();
  std::string lf_field = "Fq:7", lf_cs, lf_g;
  int lf_vars = 3, lf_degree = 3;
  mk_line->add_option("--field", lf_field, "Fq:<p>");
  mk_line->add_option("--vars", lf_vars, "number of variables (n+1)");
  mk_line->add_option("--degree", lf_degree, "degree d");
  mk_line->add_option("--cs", lf_cs, "comma-separated distinct residues c_1..c_{d-1}")->required();
  mk_line->add_option("--g", lf_g, "smooth form in x3..xn (n >= 3)");

  auto* mk_quadric = make_cmd->add_subcommand("quadric", "quadric normal forms")->fallthrough();
  std::string qk_kind = "smooth-split", qk_ring = "", qk_field = "Fq:7";
  int qk_n = 3;
  mk_quadric->add_option("--kind", qk_kind, "smooth-split | sum-squares | char2-odp");
  mk_quadric->add_option("--n", qk_n, "projective dimension n");
  mk_quadric->add_option("--ring", qk_ring, "emit over a DVR instead of a field");
  mk_quadric->add_option("--field", qk_field, "Fq:<p>");

  auto* mk_wei = make_cmd->add_subcommand("weierstrass", "Weierstrass cubic + classical discriminant")->fallthrough();
  std::string w_ring = "Zp:5", w_a1 = "0", w_a2 = "0", w_a3 = "0", w_a4 = "0", w_a6 = "0";
  mk_wei->add_option("--ring", w_ring, "Zp:<p> or Fpt:<p>");
  mk_wei->add_option("--a1", w_a1);
  mk_wei->add_option("--a2", w_a2);
  mk_wei->add_option("--a3", w_a3);
  mk_wei->add_option("--a4", w_a4);
  mk_wei->add_option("--a6", w_a6);

  // ---- verify ----
  auto* ver_cmd = app.add_subcommand("verify", "run a theorem-verification suite")->fallthrough();
  std::string ver_suite, ver_ring = "";
  SuiteOptions sopts;
  ver_cmd->add_option("--suite", ver_suite, "one of: prop3_1 degree_scaling smooth_criterion thm1_1 thm6_1 thm9_4a thm9_4b thm9_4c thm9_4d prop3_3 prop5_1 lemma9_1 cor8_6")->required();
  ver_cmd->add_option("--trials", sopts.trials, "instances per family (0 = suite default)");
  ver_cmd->add_option("--seed", sopts.seed, "master seed");
  ver_cmd->add_option("--ring", ver_ring, "DVR for ring-parametrized suites (Zp:<p> or Fpt:<p>)");
  ver_cmd->add_option("--mmax", sopts.mmax, "extension-degree bound");
  ver_cmd->add_option("--max-matrix", sopts.max_matrix, "Macaulay matrix size limit");
  ver_cmd->add_option("--max-enum", sopts.max_enum, "point enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*disc_cmd) {
      return with_disc_ring(disc_ring, [&](auto ring) {
        auto f = parse_poly(ring, disc_vars, disc_poly);
        if (disc_degree > 0 && (!f.is_homogeneous(disc_degree) || f.degree() != disc_degree))
          throw InvalidInputError("polynomial is not homogeneous of degree " + std::to_string(disc_degree));
        auto r = discriminant(f, {max_matrix});
        json j = to_json(ring, r);
        emit(j, flags, "disc: value " + ring.str(r.value) +
                            (r.has_valuation ? ", valuation " + r.valuation.str() : ""));
        return 0;
      });
    }
    if (*sing_cmd) {
      FqRing field = parse_field_spec(sing_field);
      auto f = parse_poly(field, sing_vars, sing_poly);
      auto rep = analyze_singular_locus(f, {mmax, max_enum});
      emit(to_json(field, rep), flags,
           "singular locus: dimension " + std::to_string(rep.dimension) +
               (rep.dimension == 0 ? ", " + std::to_string(rep.r) + " closed point(s)" : ""));
      return 0;
    }
    if (*cls_cmd) {
      return with_dvr(cls_ring, [&](auto ring) {
        auto f = parse_poly(ring, cls_vars, cls_poly);
        auto rep = check_theorem_1_1(f, {cls_mmax, cls_max_enum}, {cls_max_matrix});
        emit(to_json(ring.residue_field(), rep), flags,
             "v(Delta) = " + rep.valuation.str() + ", regular: " + regularity_str(rep.regular) +
                 ", single nondegenerate double point: " + (rep.nondeg_single_point ? "yes" : "no"));
        return 0;
      });
    }
    if (*vmin_cmd) {
      FqRing field = parse_field_spec(vmin_field);
      if (field.m != 1) throw InvalidInputError("vmin needs a prime residue field");
      auto fbar = parse_poly(field, vmin_vars, vmin_poly);
      std::string rspec = vmin_ring.empty() ? "Zp:" + std::to_string(field.p) : vmin_ring;
      return with_dvr(rspec, [&](auto ring) {
        json j;
        j["schema"] = 1;
        std::string note;
        if (exact_quadric) {
          Valuation v = vmin_exact_quadric(fbar, ring);
          j["mode"] = "exact_quadric";
          j["vmin"] = to_json(v);
          note = "vmin = " + v.str() + " (exact quadric path)";
        } else {
          auto res = vmin_sample(fbar, vmin_trials, ring, vmin_seed, {vmin_max_matrix});
          j["mode"] = "sampled";
          j["vmin_upper_bound"] = to_json(res.bound);
          j["trials"] = res.trials;
          note = "vmin <= " + res.bound.str() + " after " + std::to_string(res.trials) + " trials";
        }
        emit(j, flags, note);
        return 0;
      });
    }
    if (*mk_lemma) {
      FqRing field = parse_field_spec(mk_field);
      auto pts = parse_points(field, mk_points, mk_vars);
      auto witness = isolated_singularities_example(mk_vars, mk_degree, pts, field, mk_seed,
                                                    mk_attempts, {mk_mmax, 1LL << 24});
      json j;
      j["schema"] = 1;
      if (!witness) {
        j["found"] = false;
        emit(j, flags, "no witness found; enlarge the field or change the seed");
        return 1;
      }
      j["found"] = true;
      j["poly"] = witness->form.str();
      j["attempts"] = witness->attempts;
      j["verification"] = to_json(field, analyze_singular_locus(witness->form, {mk_mmax, 1LL << 24}));
      emit(j, flags, "witness: " + witness->form.str());
      return 0;
    }
    if (*mk_line) {
      FqRing field = parse_field_spec(lf_field);
      std::vector<i64> cs;
      std::size_t start = 0;
      while (start <= lf_cs.size()) {
        auto end = lf_cs.find(',', start);
        std::string c = lf_cs.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!c.empty()) cs.push_back(std::stoll(c));
        if (end == std::string::npos) break;
        start = end + 1;
      }
      std::optional<MPoly<FqRing>> g;
      if (!lf_g.empty()) g = parse_poly(field, lf_vars, lf_g);
      auto h = line_singular_family(lf_vars, lf_degree, cs, field, g);
      json j;
      j["schema"] = 1;
      j["poly"] = h.str();
      j["verification"] = to_json(field, analyze_singular_locus(h, {4, 1LL << 24}));
      emit(j, flags, "line family: " + h.str());
      return 0;
    }
    if (*mk_quadric) {
      QuadricKind kind;
      if (qk_kind == "smooth-split") kind = QuadricKind::SmoothSplit;
      else if (qk_kind == "sum-squares") kind = QuadricKind::SumSquares;
      else if (qk_kind == "char2-odp") kind = QuadricKind::Char2OddOdpAffine;
      else throw InvalidInputError("unknown quadric kind '" + qk_kind + "'");
      json j;
      j["schema"] = 1;
      std::string poly;
      if (!qk_ring.empty()) {
        with_dvr(qk_ring, [&](auto ring) {
          poly = quadric_normal_form(kind, qk_n, ring).str();
          return 0;
        });
      } else {
        FqRing field = parse_field_spec(qk_field);
        poly = quadric_normal_form(kind, qk_n, field).str();
      }
      j["poly"] = poly;
      emit(j, flags, poly);
      return 0;
    }
    if (*mk_wei) {
      return with_dvr(w_ring, [&](auto ring) {
        auto a1 = parse_ring_elem(ring, w_a1);
        auto a2 = parse_ring_elem(ring, w_a2);
        auto a3 = parse_ring_elem(ring, w_a3);
        auto a4 = parse_ring_elem(ring, w_a4);
        auto a6 = parse_ring_elem(ring, w_a6);
        auto wc = weierstrass_cubic(ring, a1, a2, a3, a4, a6);
        json j;
        j["schema"] = 1;
        j["poly"] = wc.form.str();
        j["classical_discriminant"] = ring.str(wc.classical_discriminant);
        j["classical_valuation"] = to_json(ring.valuation(wc.classical_discriminant));
        auto r = discriminant(wc.form);
        j["macaulay_valuation"] = to_json(r.valuation);
        emit(j, flags, "classical disc " + ring.str(wc.classical_discriminant) + " (valuation " +
                            ring.valuation(wc.classical_discriminant).str() + ")");
        return 0;
      });
    }
    if (*ver_cmd) {
      if (!ver_ring.empty()) {
        if (ver_ring.rfind("Zp:", 0) == 0) {
          sopts.ring_kind = "Zp";
          sopts.prime = parse_prime_after_colon(ver_ring, "Zp");
        } else if (ver_ring.rfind("Fpt:", 0) == 0) {
          sopts.ring_kind = "Fpt";
          sopts.prime = parse_prime_after_colon(ver_ring, "Fpt");
        } else {
          throw InvalidInputError("verify --ring must be Zp:<p> or Fpt:<p>");
        }
      }
      VerifyReport rep = run_suite(ver_suite, sopts);
      emit(to_json(rep), flags,
           "suite " + rep.suite + ": " + std::to_string(rep.passed) + "/" +
               std::to_string(rep.instances) + " passed, " + std::to_string(rep.failures.size()) +
               " failed, " + std::to_string(rep.skipped.size()) + " skipped");
      if (!rep.ok()) return 3;
      if (rep.all_skipped()) return 4;
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
