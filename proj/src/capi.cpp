#include "joinlink.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "joinlink/enhanced.hpp"
#include "joinlink/error.hpp"
#include "joinlink/json_io.hpp"
#include "joinlink/newton.hpp"
#include "joinlink/seifert.hpp"
#include "joinlink/winding.hpp"
#include "joinlink/zeta.hpp"

struct jl_poly {
  jl::MixedPolynomial value;
};

namespace {

using jl::json;

thread_local std::string g_error_code;
thread_local std::string g_error_message;

void set_error(const std::string& code, const std::string& message) {
  g_error_code = code;
  g_error_message = message;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f and converts exceptions into the thread-local error slots.  The
// wrapped value is the function's pointer result, or nullptr on failure.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const jl::Error& e) {
    set_error(e.code(), e.what());
  } catch (const std::exception& e) {
    set_error(jl::errcode::internal, e.what());
  }
  return nullptr;
}

json parse_json_text(const char* text, const char* what) {
  if (!text) jl::fail(jl::errcode::bad_input, std::string(what) + " is null");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    jl::fail(jl::errcode::syntax, std::string(what) + ": " + e.what());
  }
}

json parse_request(const char* text) {
  json rq = parse_json_text(text, "request");
  if (!rq.is_object() || !rq.contains("op") || !rq["op"].is_string())
    jl::fail(jl::errcode::bad_input, "request must be an object with \"op\"");
  return rq;
}

json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

mpz_class mpz_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      jl::fail(jl::errcode::bad_input, std::string(what) + ": bad integer literal");
    return v;
  }
  jl::fail(jl::errcode::bad_input,
           std::string(what) + " must be an integer or decimal string");
}

long long_field(const json& rq, const char* key) {
  if (!rq.contains(key) || !rq[key].is_number_integer())
    jl::fail(jl::errcode::bad_input, std::string("missing integer \"") + key + "\"");
  return static_cast<long>(rq[key].get<long long>());
}

long long_field_or(const json& rq, const char* key, long fallback) {
  if (!rq.contains(key)) return fallback;
  if (!rq[key].is_number_integer())
    jl::fail(jl::errcode::bad_input, std::string("\"") + key + "\" must be an integer");
  return static_cast<long>(rq[key].get<long long>());
}

std::vector<long> long_list_field(const json& rq, const char* key) {
  if (!rq.contains(key) || !rq[key].is_array())
    jl::fail(jl::errcode::bad_input, std::string("missing array \"") + key + "\"");
  std::vector<long> out;
  for (const auto& v : rq[key]) {
    if (!v.is_number_integer())
      jl::fail(jl::errcode::bad_input, std::string("\"") + key + "\" entries must be integers");
    out.push_back(static_cast<long>(v.get<long long>()));
  }
  return out;
}

/* ---- Newton reports ---- */

json face_to_json(const jl::Face& f) {
  return json{{"normal", f.normal}, {"points", f.points}, {"dim", f.dim}};
}

json boundary_json(const jl::MixedPolynomial& p) {
  jl::NewtonPolytope np = jl::newton_polytope(p);
  json faces = json::array();
  for (const auto& f : jl::compact_faces(np)) faces.push_back(face_to_json(f));
  return json{{"n", np.n},
              {"generators", np.generators},
              {"vertices", np.vertices},
              {"convenient", jl::is_convenient(p)},
              {"faces", faces}};
}

const char* verdict_name(jl::Verdict v) {
  switch (v) {
    case jl::Verdict::ExactlyNondegenerate: return "ExactlyNondegenerate";
    case jl::Verdict::NoWitnessFound: return "NoWitnessFound";
    case jl::Verdict::DegenerateWitness: return "DegenerateWitness";
  }
  return "NoWitnessFound";
}

json nondegeneracy_json(const jl::MixedPolynomial& p, const json& opts) {
  if (!opts.is_object())
    jl::fail(jl::errcode::bad_input, "options must be a JSON object");
  jl::SearchBudget budget;
  budget.samples = static_cast<int>(long_field_or(opts, "samples", budget.samples));
  budget.iters = static_cast<int>(long_field_or(opts, "iters", budget.iters));
  if (opts.contains("radius_min")) budget.radius_min = opts["radius_min"].get<double>();
  if (opts.contains("radius_max")) budget.radius_max = opts["radius_max"].get<double>();
  if (opts.contains("tolerance")) budget.tolerance = opts["tolerance"].get<double>();
  std::uint64_t seed = 0;
  if (opts.contains("seed")) seed = opts["seed"].get<std::uint64_t>();

  int degenerate = 0;
  json reports = json::array();
  for (const auto& r : jl::check_strong_nondegeneracy(p, budget, seed)) {
    json jr{{"face", face_to_json(r.face)},
            {"verdict", verdict_name(r.verdict)},
            {"probabilistic", r.verdict == jl::Verdict::NoWitnessFound},
            {"samples_used", r.samples_used},
            {"descent_iters_used", r.descent_iters_used},
            {"surjectivity_targets", r.surjectivity_targets},
            {"surjectivity_hits", r.surjectivity_hits},
            {"witness", nullptr},
            {"witness_residual", nullptr}};
    if (r.witness) {
      jr["witness"] = jl::point_to_json(*r.witness);
      jr["witness_residual"] = r.witness_residual;
    }
    if (r.verdict == jl::Verdict::DegenerateWitness) degenerate++;
    reports.push_back(std::move(jr));
  }
  return json{{"seed", seed},
              {"samples", budget.samples},
              {"reports", reports},
              {"degenerate_count", degenerate}};
}

json degree_json(const jl::MixedPolynomial& p, double eps, int samples,
                 int max_halvings) {
  jl::DegreeResult r = jl::mapping_degree_auto(
      p, eps, samples <= 0 ? 64 : samples, max_halvings < 0 ? 6 : max_halvings);
  return json{{"degree", r.degree},
              {"eps", eps},
              {"radius_used", r.radius_used},
              {"samples", r.samples},
              {"stable", r.stable}};
}

/* ---- Seifert operations ---- */

json form_json(const jl::SeifertForm& f) {
  json j{{"matrix", jl::imat_to_json(f.entries())}, {"rank", f.rank()}, {"k", nullptr}};
  if (f.k()) j["k"] = *f.k();
  return j;
}

jl::SeifertForm form_from_json(const json& v) {
  std::optional<int> k;
  const json* m = &v;
  if (v.is_object()) {
    if (!v.contains("matrix"))
      jl::fail(jl::errcode::bad_input, "expected a matrix or a form with \"matrix\"");
    m = &v["matrix"];
    if (v.contains("k") && v["k"].is_number_integer()) k = v["k"].get<int>();
  }
  return jl::SeifertForm::relaxed(jl::imat_from_json(*m), k);
}

jl::SeifertForm form_field(const json& rq, const char* key) {
  if (!rq.contains(key))
    jl::fail(jl::errcode::bad_input, std::string("missing matrix \"") + key + "\"");
  return form_from_json(rq[key]);
}

const char* status_name(jl::CongruenceStatus s) {
  switch (s) {
    case jl::CongruenceStatus::CongruentWitness: return "CongruentWitness";
    case jl::CongruenceStatus::DistinguishedByInvariant:
      return "DistinguishedByInvariant";
    case jl::CongruenceStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

json invariants_json(const jl::CongruenceInvariants& inv) {
  json smith = json::array();
  for (const auto& v : inv.smith) smith.push_back(mpz_to_json(v));
  return json{{"det", mpz_to_json(inv.det)},
              {"smith", smith},
              {"inertia",
               {{"positive", inv.symmetrized.positive},
                {"negative", inv.symmetrized.negative},
                {"zero", inv.symmetrized.zero}}},
              {"alexander", jl::intpoly_to_json(inv.alexander)}};
}

// The congruence verdict certifies form equivalence only; reading it as a
// classification of the underlying links additionally needs the fiber
// parameter k to be at least 3, which bare matrix inputs cannot attest.
const char* kKWarning =
    "congruence of forms implies equivalence of the underlying links only "
    "for fiber parameter k >= 3; matrix inputs carry no k";

json congruent_json(const jl::SeifertForm& a, const jl::SeifertForm& b,
                    const jl::CongruenceLimits& limits) {
  jl::CongruenceVerdict v = jl::check_congruent(a, b, limits);
  json j{{"status", status_name(v.status)},
         {"witness", nullptr},
         {"separating", nullptr},
         {"warnings", json::array({kKWarning})}};
  if (v.witness) j["witness"] = jl::imat_to_json(*v.witness);
  if (v.separating)
    j["separating"] = {{"invariant", v.separating->name},
                       {"a", v.separating->value_a},
                       {"b", v.separating->value_b}};
  return j;
}

json seifert_op(const json& rq) {
  const std::string op = rq["op"].get<std::string>();
  if (op == "lambda") {
    long m = long_field(rq, "m");
    json j = form_json(jl::lambda_matrix(m));
    j["m"] = m;
    return j;
  }
  if (op == "tensor") {
    jl::SeifertForm a = form_field(rq, "a");
    jl::SeifertForm b = form_field(rq, "b");
    int n = static_cast<int>(long_field(rq, "n"));
    int m = static_cast<int>(long_field(rq, "m"));
    return form_json(jl::join_tensor(a, n, b, m));
  }
  if (op == "brieskorn") {
    std::vector<long> exps = long_list_field(rq, "exponents");
    json j = form_json(jl::brieskorn_form(exps));
    j["exponents"] = exps;
    j["n"] = exps.size();
    return j;
  }
  if (op == "extend") {
    jl::SeifertForm a = form_field(rq, "a");
    if (!rq.contains("b") || !rq["b"].is_array())
      jl::fail(jl::errcode::bad_input, "missing border row \"b\"");
    std::vector<mpz_class> b;
    for (const auto& v : rq["b"]) b.push_back(mpz_from_json(v, "border entry"));
    int eps = static_cast<int>(long_field(rq, "eps"));
    return form_json(jl::extend_form(a, b, eps));
  }
  if (op == "charpoly") {
    jl::SeifertForm a = form_field(rq, "a");
    bool alternate = rq.contains("alternate") && rq["alternate"].get<bool>();
    return json{{"charpoly", jl::intpoly_to_json(jl::monodromy_charpoly(a, alternate))}};
  }
  if (op == "invariants") {
    return invariants_json(jl::congruence_invariants(form_field(rq, "a")));
  }
  if (op == "congruent") {
    jl::SeifertForm a = form_field(rq, "a");
    jl::SeifertForm b = form_field(rq, "b");
    jl::CongruenceLimits limits;
    limits.depth = static_cast<int>(long_field_or(rq, "depth", limits.depth));
    limits.state_cap = static_cast<size_t>(
        long_field_or(rq, "state_cap", static_cast<long>(limits.state_cap)));
    return congruent_json(a, b, limits);
  }
  jl::fail(jl::errcode::bad_input, "unknown seifert op \"" + op + "\"");
}

/* ---- zeta operations ---- */

json divisor_json(const jl::Divisor& d) {
  return json{{"num", jl::intpoly_to_json(d.num())},
              {"den", jl::intpoly_to_json(d.den())}};
}

jl::IntPoly intpoly_field_or(const json& rq, const char* key, jl::IntPoly fallback) {
  if (!rq.contains(key)) return fallback;
  return jl::intpoly_from_json(rq[key]);
}

jl::ZetaFunction zeta_from_request(const json& rq) {
  if (rq.contains("charpolys")) {
    if (!rq["charpolys"].is_array())
      jl::fail(jl::errcode::bad_input, "\"charpolys\" must be an array of coefficient arrays");
    std::vector<jl::IntPoly> ps;
    for (const auto& v : rq["charpolys"]) ps.push_back(jl::intpoly_from_json(v));
    return jl::zeta_from_charpolys(std::move(ps));
  }
  if (rq.contains("charpoly")) {
    int n = static_cast<int>(long_field_or(rq, "n", 2));
    return jl::zeta_from_middle_charpoly(jl::intpoly_from_json(rq["charpoly"]), n);
  }
  jl::fail(jl::errcode::bad_input, "need \"charpolys\" or \"charpoly\"");
}

json zeta_json(const jl::ZetaFunction& z) {
  json ps = json::array();
  for (const auto& p : z.charpolys) ps.push_back(jl::intpoly_to_json(p));
  return json{{"charpolys", ps}, {"divisor", divisor_json(z.divisor)}};
}

json zeta_op(const json& rq) {
  const std::string op = rq["op"].get<std::string>();
  if (op == "join") {
    if (!rq.contains("num1") || !rq.contains("num2"))
      jl::fail(jl::errcode::bad_input, "join needs \"num1\" and \"num2\"");
    jl::Divisor d1(jl::intpoly_from_json(rq["num1"]),
                   intpoly_field_or(rq, "den1", jl::IntPoly::constant(1)));
    jl::Divisor d2(jl::intpoly_from_json(rq["num2"]),
                   intpoly_field_or(rq, "den2", jl::IntPoly::constant(1)));
    return divisor_json(jl::divisor_join(d1, d2));
  }
  if (op == "from_charpolys") return zeta_json(zeta_from_request(rq));
  if (op == "reduced") return divisor_json(jl::reduced_zeta(zeta_from_request(rq)));
  if (op == "composed_product") {
    if (!rq.contains("p") || !rq.contains("q"))
      jl::fail(jl::errcode::bad_input, "composed_product needs \"p\" and \"q\"");
    return json{{"coeffs", jl::intpoly_to_json(jl::composed_product(
                               jl::intpoly_from_json(rq["p"]),
                               jl::intpoly_from_json(rq["q"])))}};
  }
  jl::fail(jl::errcode::bad_input, "unknown zeta op \"" + op + "\"");
}

/* ---- enhanced operations ---- */

json enhanced_json(const jl::EnhancedMilnor& e) {
  auto [signed_mu, lambda] = e.display();
  return json{{"mu", e.mu},
              {"lambda", e.lambda},
              {"k", e.k},
              {"display", {signed_mu, lambda}}};
}

json enhanced_op(const json& rq) {
  const std::string op = rq["op"].get<std::string>();
  if (op == "join") {
    jl::EnhancedMilnor e1(long_field(rq, "mu1"),
                          static_cast<int>(long_field(rq, "lambda1")),
                          long_field_or(rq, "k1", 0));
    jl::EnhancedMilnor e2(long_field(rq, "mu2"),
                          static_cast<int>(long_field(rq, "lambda2")),
                          long_field_or(rq, "k2", 0));
    std::optional<long> k;
    if (rq.contains("k")) k = long_field(rq, "k");
    return enhanced_json(jl::join_enhanced(e1, e2, k));
  }
  if (op == "brieskorn")
    return enhanced_json(jl::brieskorn_enhanced(long_list_field(rq, "exponents")));
  if (op == "witness") {
    jl::JoinWitness w = jl::witness(long_field(rq, "ell"), long_field(rq, "k"));
    json j = enhanced_json(w.invariant);
    j["polynomial"] = w.polynomial.text();
    j["vars"] = w.variable_count;
    j["recipe"] = w.recipe == jl::WitnessRecipe::EvenCase ? "even" : "odd";
    j["p"] = w.p;
    j["brieskorn_tail"] = w.brieskorn_tail;
    return j;
  }
  if (op == "base_cases") {
    json cases = json::array();
    for (const auto& c : jl::base_cases(long_field_or(rq, "p", 1))) {
      json j = enhanced_json(c.invariant);
      j["name"] = c.name;
      j["polynomial"] = c.polynomial.text();
      cases.push_back(std::move(j));
    }
    return json{{"cases", cases}};
  }
  jl::fail(jl::errcode::bad_input, "unknown enhanced op \"" + op + "\"");
}

/* ---- pipeline ---- */

jl::MixedPolynomial poly_from_step_value(const json& v) {
  if (v.is_object() && v.contains("poly")) return jl::poly_from_json(v["poly"]);
  if (v.is_object() && v.contains("terms")) return jl::poly_from_json(v);
  jl::fail(jl::errcode::bad_input, "step input is not a polynomial result");
}

jl::MixedPolynomial poly_from_args_or_input(const json& args,
                                            const std::vector<json>& inputs) {
  if (!inputs.empty()) return poly_from_step_value(inputs[0]);
  if (args.contains("source"))
    return jl::parse_poly(args["source"].get<std::string>(),
                          static_cast<int>(long_field_or(args, "vars", 0)));
  jl::fail(jl::errcode::bad_input, "need a polynomial input or \"source\"");
}

const json& pipeline_input(const std::vector<json>& inputs, size_t i,
                           const char* op) {
  if (i >= inputs.size())
    jl::fail(jl::errcode::bad_input,
             std::string(op) + " needs " + std::to_string(i + 1) + " input(s)");
  return inputs[i];
}

jl::IntPoly charpoly_from_step_value(const json& v) {
  if (v.is_object() && v.contains("charpoly"))
    return jl::intpoly_from_json(v["charpoly"]);
  if (v.is_array()) return jl::intpoly_from_json(v);
  jl::fail(jl::errcode::bad_input, "step input is not a charpoly result");
}

jl::Divisor divisor_from_step_value(const json& v) {
  const json* d = &v;
  if (v.is_object() && v.contains("divisor")) d = &v["divisor"];
  if (d->is_object() && d->contains("num") && d->contains("den"))
    return jl::divisor_of(jl::intpoly_from_json((*d)["num"]),
                          jl::intpoly_from_json((*d)["den"]));
  jl::fail(jl::errcode::bad_input, "step input is not a divisor result");
}

jl::ZetaFunction zeta_from_step(const json& args, const std::vector<json>& inputs) {
  if (inputs.empty()) return zeta_from_request(args);
  const json& v = inputs[0];
  if (v.is_object() && v.contains("charpolys")) return zeta_from_request(v);
  json rq{{"charpoly", jl::intpoly_to_json(charpoly_from_step_value(v))}};
  if (args.contains("n")) rq["n"] = args["n"];
  return zeta_from_request(rq);
}

json pipeline_op(const std::string& op, const json& args,
                 const std::vector<json>& inputs) {
  if (op == "parse") {
    jl::MixedPolynomial p = poly_from_args_or_input(args, inputs);
    return json{{"poly", jl::poly_to_json(p)}, {"text", p.text()}, {"n", p.nvars()}};
  }
  if (op == "newton_boundary")
    return boundary_json(poly_from_args_or_input(args, inputs));
  if (op == "nondegeneracy")
    return nondegeneracy_json(poly_from_args_or_input(args, inputs), args);
  if (op == "degree") {
    double eps = args.value("eps", 1e-2);
    return degree_json(poly_from_args_or_input(args, inputs), eps,
                       static_cast<int>(long_field_or(args, "samples", 0)),
                       static_cast<int>(long_field_or(args, "max_halvings", -1)));
  }
  if (op == "lambda_matrix" || op == "brieskorn_form" || op == "extend_form" ||
      op == "tensor" || op == "join_tensor" || op == "charpoly" ||
      op == "monodromy_charpoly" || op == "invariants" ||
      op == "congruence_invariants" || op == "congruent" ||
      op == "check_congruent") {
    json rq = args;
    if (op == "lambda_matrix") rq["op"] = "lambda";
    else if (op == "brieskorn_form") rq["op"] = "brieskorn";
    else if (op == "extend_form") rq["op"] = "extend";
    else if (op == "join_tensor") rq["op"] = "tensor";
    else if (op == "monodromy_charpoly") rq["op"] = "charpoly";
    else if (op == "congruence_invariants") rq["op"] = "invariants";
    else if (op == "check_congruent") rq["op"] = "congruent";
    else rq["op"] = op;
    const std::string resolved = rq["op"].get<std::string>();
    if (resolved == "tensor" || resolved == "congruent") {
      if (!inputs.empty()) rq["a"] = pipeline_input(inputs, 0, op.c_str());
      if (inputs.size() > 1) rq["b"] = pipeline_input(inputs, 1, op.c_str());
      if (resolved == "tensor") {
        // Variable counts default to the inputs' own bookkeeping.
        for (size_t i = 0; i < 2 && i < inputs.size(); ++i) {
          const char* key = i == 0 ? "n" : "m";
          if (!rq.contains(key) && inputs[i].is_object() && inputs[i].contains("n"))
            rq[key] = inputs[i]["n"];
        }
      }
    } else if (!inputs.empty()) {
      rq["a"] = inputs[0];
    }
    return seifert_op(rq);
  }
  if (op == "zeta_from_charpolys") return zeta_json(zeta_from_step(args, inputs));
  if (op == "reduced_zeta")
    return divisor_json(jl::reduced_zeta(zeta_from_step(args, inputs)));
  if (op == "divisor_join") {
    jl::Divisor a = divisor_from_step_value(pipeline_input(inputs, 0, "divisor_join"));
    jl::Divisor b = divisor_from_step_value(pipeline_input(inputs, 1, "divisor_join"));
    return divisor_json(jl::divisor_join(a, b));
  }
  if (op == "composed_product") {
    json rq = args;
    rq["op"] = op;
    if (inputs.size() > 0) rq["p"] = jl::intpoly_to_json(charpoly_from_step_value(inputs[0]));
    if (inputs.size() > 1) rq["q"] = jl::intpoly_to_json(charpoly_from_step_value(inputs[1]));
    return zeta_op(rq);
  }
  if (op == "zeta_join") {
    json rq = args;
    rq["op"] = "join";
    if (inputs.size() > 0) {
      jl::Divisor a = divisor_from_step_value(inputs[0]);
      rq["num1"] = jl::intpoly_to_json(a.num());
      rq["den1"] = jl::intpoly_to_json(a.den());
    }
    if (inputs.size() > 1) {
      jl::Divisor b = divisor_from_step_value(inputs[1]);
      rq["num2"] = jl::intpoly_to_json(b.num());
      rq["den2"] = jl::intpoly_to_json(b.den());
    }
    return zeta_op(rq);
  }
  if (op == "join_enhanced" || op == "brieskorn_enhanced" || op == "witness" ||
      op == "base_cases") {
    json rq = args;
    if (op == "join_enhanced") rq["op"] = "join";
    else if (op == "brieskorn_enhanced") rq["op"] = "brieskorn";
    else rq["op"] = op;
    return enhanced_op(rq);
  }
  jl::fail(jl::errcode::bad_input, "unknown pipeline op \"" + op + "\"");
}

// A failing step (malformed step object, dangling input reference, or an
// operation error) aborts the run; the partial results computed so far are
// kept in the reply next to the failing step's error.
json run_pipeline(const json& steps) {
  if (!steps.is_array())
    jl::fail(jl::errcode::bad_input, "pipeline must be a JSON array of steps");
  json results = json::array();
  for (size_t i = 0; i < steps.size(); ++i) {
    std::string op = "?";
    try {
      const json& step = steps[i];
      if (!step.is_object() || !step.contains("op") || !step["op"].is_string())
        jl::fail(jl::errcode::bad_input,
                 "step " + std::to_string(i) + " must be an object with \"op\"");
      op = step["op"].get<std::string>();
      std::vector<json> inputs;
      if (step.contains("inputs")) {
        if (!step["inputs"].is_array())
          jl::fail(jl::errcode::bad_input,
                   "step " + std::to_string(i) + ": \"inputs\" must be an array");
        for (const auto& ref : step["inputs"]) {
          if (!ref.is_number_integer())
            jl::fail(jl::errcode::bad_input,
                     "step " + std::to_string(i) + ": input references must be integers");
          long idx = static_cast<long>(ref.get<long long>());
          if (idx < 0 || idx >= static_cast<long>(i))
            jl::fail(jl::errcode::bad_input,
                     "step " + std::to_string(i) + " references result " +
                         std::to_string(idx) + " which does not exist yet");
          inputs.push_back(results[static_cast<size_t>(idx)]);
        }
      }
      results.push_back(pipeline_op(op, step.value("args", json::object()), inputs));
    } catch (const jl::Error& e) {
      return json{{"results", results},
                  {"error",
                   {{"step", i}, {"op", op}, {"code", e.code()}, {"message", e.what()}}}};
    }
  }
  return json{{"results", results}};
}

char* reply(const json& j) { return dup_string(j.dump()); }

}  // namespace

extern "C" {

const char* jl_version(void) { return "0.1.0"; }

const char* jl_error_code(void) { return g_error_code.c_str(); }

const char* jl_error_message(void) { return g_error_message.c_str(); }

void jl_string_free(char* s) { std::free(s); }

jl_poly* jl_poly_parse(const char* source, int declared_vars) {
  return guarded([&]() -> jl_poly* {
    if (!source) jl::fail(jl::errcode::bad_input, "source is null");
    return new jl_poly{jl::parse_poly(source, declared_vars)};
  });
}

jl_poly* jl_poly_from_json(const char* text) {
  return guarded([&]() -> jl_poly* {
    return new jl_poly{jl::poly_from_json(parse_json_text(text, "polynomial"))};
  });
}

void jl_poly_free(jl_poly* p) { delete p; }

int jl_poly_vars(const jl_poly* p) { return p ? p->value.nvars() : 0; }

char* jl_poly_text(const jl_poly* p) {
  return guarded([&]() -> char* {
    if (!p) jl::fail(jl::errcode::bad_input, "polynomial handle is null");
    return dup_string(p->value.text());
  });
}

char* jl_poly_to_json(const jl_poly* p) {
  return guarded([&]() -> char* {
    if (!p) jl::fail(jl::errcode::bad_input, "polynomial handle is null");
    return reply(jl::poly_to_json(p->value));
  });
}

char* jl_newton_boundary(const jl_poly* p) {
  return guarded([&]() -> char* {
    if (!p) jl::fail(jl::errcode::bad_input, "polynomial handle is null");
    return reply(boundary_json(p->value));
  });
}

char* jl_newton_nondegeneracy(const jl_poly* p, const char* options) {
  return guarded([&]() -> char* {
    if (!p) jl::fail(jl::errcode::bad_input, "polynomial handle is null");
    json opts = options ? parse_json_text(options, "options") : json::object();
    return reply(nondegeneracy_json(p->value, opts));
  });
}

char* jl_mapping_degree(const jl_poly* p, double eps, int samples,
                        int max_halvings) {
  return guarded([&]() -> char* {
    if (!p) jl::fail(jl::errcode::bad_input, "polynomial handle is null");
    return reply(degree_json(p->value, eps, samples, max_halvings));
  });
}

char* jl_seifert(const char* request) {
  return guarded([&]() -> char* { return reply(seifert_op(parse_request(request))); });
}

char* jl_zeta(const char* request) {
  return guarded([&]() -> char* { return reply(zeta_op(parse_request(request))); });
}

char* jl_enhanced(const char* request) {
  return guarded([&]() -> char* { return reply(enhanced_op(parse_request(request))); });
}

char* jl_pipeline(const char* steps) {
  return guarded([&]() -> char* {
    return reply(run_pipeline(parse_json_text(steps, "pipeline")));
  });
}

}  // extern "C"
