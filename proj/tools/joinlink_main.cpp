// Command-line front end.  All mathematics goes through the C API in
// joinlink.h; this file only parses arguments, shuttles JSON, and stamps the
// run manifest.

#include <openssl/evp.h>

#include <chrono>
#include <climits>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "joinlink.h"
#include <nlohmann/json.hpp>

using json = nlohmann::json;

namespace {

struct ApiError {
  std::string code;
  std::string message;
};

// Converts a C API reply into JSON, surfacing the thread-local error slots
// as an ApiError when the call failed.
json api(char* raw) {
  if (!raw) throw ApiError{jl_error_code(), jl_error_message()};
  json j = json::parse(raw);
  jl_string_free(raw);
  return j;
}

struct PolyHandle {
  jl_poly* p = nullptr;
  ~PolyHandle() { jl_poly_free(p); }
  PolyHandle() = default;
  PolyHandle(const PolyHandle&) = delete;
  PolyHandle& operator=(const PolyHandle&) = delete;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* digits = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(digits[md[i] >> 4]);
    hex.push_back(digits[md[i] & 0xf]);
  }
  return hex;
}

// Reads a file (or standard input for "-"), recording its digest in the
// manifest input list.
std::string read_input(const std::string& path, json& inputs) {
  std::string content;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    content = buf.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ApiError{"BadInput", "cannot read input file " + path};
    std::ostringstream buf;
    buf << f.rdbuf();
    content = buf.str();
  }
  inputs.push_back({{"path", path}, {"sha256", sha256_hex(content)}});
  return content;
}

json read_json_input(const std::string& path, json& inputs) {
  const std::string content = read_input(path, inputs);
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    throw ApiError{"SyntaxError", path + ": " + e.what()};
  }
}

json parse_json_flag(const std::string& text, const std::string& flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ApiError{"SyntaxError", flag + ": " + e.what()};
  }
}

void print_doc(const json& doc, int indent) {
  const std::string text = indent < 0 ? doc.dump() : doc.dump(indent);
  std::fputs(text.c_str(), stdout);
  std::fputs("\n", stdout);
}

// Charpoly files hold either an array of coefficient arrays, or one flat
// coefficient list meaning the middle charpoly of a two-variable fibration.
json charpolys_request(const std::string& op, const json& file, long n) {
  json rq{{"op", op}};
  const bool flat = file.is_array() && !file.empty() && !file[0].is_array();
  if (flat) {
    rq["charpoly"] = file;
    if (n > 0) rq["n"] = n;
  } else {
    rq["charpolys"] = file;
  }
  return rq;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"exact invariants of mixed-polynomial singularities of join type"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", jl_version());

  long long seed = 0;
  int json_indent = 2;
  bool quiet = false;
  app.add_option("--seed", seed, "random seed echoed in the manifest")
      ->capture_default_str();
  app.add_option("--json-indent", json_indent,
                 "output indent; negative prints compact JSON")
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "suppress the timing line on standard error");

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse a polynomial expression");
  std::string parse_source;
  int parse_vars = 0;
  cmd_parse->add_option("source", parse_source, "expression text")->required();
  cmd_parse->add_option("--vars", parse_vars, "declared variable count (0 infers)");

  // newton
  auto* cmd_newton =
      app.add_subcommand("newton", "Newton boundary, faces, non-degeneracy");
  std::string newton_source, newton_file;
  bool newton_faces = false, newton_convenient = false, newton_nondeg = false;
  long newton_samples = 256;
  cmd_newton->add_option("source", newton_source, "expression text");
  cmd_newton->add_option("--file", newton_file, "polynomial JSON file");
  cmd_newton->add_flag("--faces", newton_faces, "list the compact faces");
  cmd_newton->add_flag("--convenient", newton_convenient, "report convenience");
  cmd_newton->add_flag("--nondegenerate", newton_nondeg,
                       "run the per-face non-degeneracy search");
  cmd_newton->add_option("--samples", newton_samples,
                         "random starts per face for --nondegenerate")
      ->capture_default_str();

  // degree
  auto* cmd_degree = app.add_subcommand("degree", "winding number on a small circle");
  std::string degree_poly;
  double degree_eps = 1e-2;
  long degree_samples = 0, degree_halvings = -1;
  cmd_degree->add_option("--poly", degree_poly, "1-variable expression")->required();
  cmd_degree->add_option("--eps", degree_eps, "circle radius")->capture_default_str();
  cmd_degree->add_option("--samples", degree_samples, "initial samples (0 = 64)");
  cmd_degree->add_option("--max-halvings", degree_halvings,
                         "radius halvings on a near-zero sample (negative = 6)");

  // seifert
  auto* cmd_seifert = app.add_subcommand("seifert", "integer Seifert form algebra");
  cmd_seifert->require_subcommand(1);
  auto* sf_lambda = cmd_seifert->add_subcommand("lambda", "building-block form of z^m");
  long lambda_m = 0;
  sf_lambda->add_option("-m,--m", lambda_m, "exponent, nonzero")->required();
  auto* sf_tensor = cmd_seifert->add_subcommand("tensor", "signed tensor product");
  std::string tensor_a, tensor_b;
  long tensor_n = 0, tensor_m = 0;
  sf_tensor->add_option("--n", tensor_n, "variable count of the first factor")->required();
  sf_tensor->add_option("--m", tensor_m, "variable count of the second factor")->required();
  sf_tensor->add_option("fileA", tensor_a, "first matrix JSON file")->required();
  sf_tensor->add_option("fileB", tensor_b, "second matrix JSON file")->required();
  auto* sf_brieskorn = cmd_seifert->add_subcommand("brieskorn", "full Brieskorn form");
  std::vector<long> seifert_exponents;
  sf_brieskorn->add_option("exponents", seifert_exponents, "exponents, each >= 2")
      ->required()
      ->expected(-1);
  auto* sf_extend = cmd_seifert->add_subcommand("extend", "bordered extension");
  std::string extend_file;
  std::vector<long> extend_b;
  int extend_eps = 1;
  sf_extend->add_option("file", extend_file, "matrix JSON file")->required();
  sf_extend->add_option("--b", extend_b, "border row entries")->expected(-1);
  sf_extend->add_option("--eps", extend_eps, "corner entry, +1 or -1")
      ->capture_default_str();
  auto* sf_congruent = cmd_seifert->add_subcommand("congruent", "congruence search");
  std::string congruent_a, congruent_b;
  long congruent_depth = 8, congruent_cap = 1000000;
  sf_congruent->add_option("--depth", congruent_depth, "total elementary moves")
      ->capture_default_str();
  sf_congruent->add_option("--state-cap", congruent_cap,
                           "explored states per direction")
      ->capture_default_str();
  sf_congruent->add_option("fileA", congruent_a, "first matrix JSON file")->required();
  sf_congruent->add_option("fileB", congruent_b, "second matrix JSON file")->required();
  auto* sf_charpoly = cmd_seifert->add_subcommand("charpoly", "monodromy charpoly");
  std::string charpoly_file;
  bool charpoly_alternate = false;
  sf_charpoly->add_option("file", charpoly_file, "matrix JSON file")->required();
  sf_charpoly->add_flag("--alternate", charpoly_alternate,
                        "use the transposed convention");
  auto* sf_invariants =
      cmd_seifert->add_subcommand("invariants", "congruence invariants");
  std::string invariants_file;
  sf_invariants->add_option("file", invariants_file, "matrix JSON file")->required();

  // zeta
  auto* cmd_zeta = app.add_subcommand("zeta", "zeta divisors and the join");
  cmd_zeta->require_subcommand(1);
  auto* zt_join = cmd_zeta->add_subcommand("join", "join of two divisors");
  std::string join_num1, join_den1 = "[1]", join_num2, join_den2 = "[1]";
  zt_join->add_option("--num1", join_num1, "numerator coefficients, constant first")
      ->required();
  zt_join->add_option("--den1", join_den1, "denominator coefficients")
      ->capture_default_str();
  zt_join->add_option("--num2", join_num2, "numerator coefficients")->required();
  zt_join->add_option("--den2", join_den2, "denominator coefficients")
      ->capture_default_str();
  auto* zt_from = cmd_zeta->add_subcommand(
      "from-charpolys", "assemble a zeta function from charpolys");
  std::string from_file;
  long from_n = 0;
  zt_from->add_option("file", from_file, "JSON coefficient list(s)")->required();
  zt_from->add_option("--n", from_n,
                      "middle placement for a flat coefficient list (default 2)");
  auto* zt_reduced = cmd_zeta->add_subcommand("reduced", "reduced zeta divisor");
  std::string reduced_file;
  long reduced_n = 0;
  zt_reduced->add_option("file", reduced_file, "JSON coefficient list(s)")->required();
  zt_reduced->add_option("--n", reduced_n,
                         "middle placement for a flat coefficient list (default 2)");

  // enhanced
  auto* cmd_enhanced =
      app.add_subcommand("enhanced", "enhanced Milnor number arithmetic");
  cmd_enhanced->require_subcommand(1);
  auto* en_join = cmd_enhanced->add_subcommand("join", "join two invariants");
  long en_mu1 = 0, en_lambda1 = 0, en_k1 = 0, en_mu2 = 0, en_lambda2 = 0, en_k2 = 0;
  long en_k = LONG_MIN;
  en_join->add_option("--mu1", en_mu1)->required();
  en_join->add_option("--lambda1", en_lambda1)->required();
  en_join->add_option("--k1", en_k1);
  en_join->add_option("--mu2", en_mu2)->required();
  en_join->add_option("--lambda2", en_lambda2)->required();
  en_join->add_option("--k2", en_k2);
  en_join->add_option("--k", en_k, "explicit k for the result");
  auto* en_brieskorn =
      cmd_enhanced->add_subcommand("brieskorn", "invariant of a Brieskorn polynomial");
  std::vector<long> en_exponents;
  en_brieskorn->add_option("exponents", en_exponents, "exponents, each >= 2")
      ->required()
      ->expected(-1);
  auto* en_witness =
      cmd_enhanced->add_subcommand("witness", "realize (ell, 1) by a join polynomial");
  long witness_ell = 0, witness_k = 0;
  en_witness->add_option("--ell", witness_ell, "target mu, >= 1")->required();
  en_witness->add_option("--k", witness_k, "fiber parameter, >= 2")->required();

  // pipeline
  auto* cmd_pipeline =
      app.add_subcommand("pipeline", "run a JSON list of steps");
  std::string pipeline_file;
  cmd_pipeline->add_option("file", pipeline_file, "script file, or - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (dynamic_cast<const CLI::CallForHelp*>(&e) ||
        dynamic_cast<const CLI::CallForAllHelp*>(&e) ||
        dynamic_cast<const CLI::CallForVersion*>(&e))
      return app.exit(e);
    std::fprintf(stderr, "%s\n", e.what());
    CLI::App* where = &app;
    while (!where->get_subcommands().empty())
      where = where->get_subcommands().front();
    std::fputs(where->help().c_str(), stderr);
    return 2;
  }

  json inputs = json::array();
  json command = json::array();
  for (int i = 0; i < argc; ++i) command.push_back(argv[i]);

  const auto manifest = [&]() {
    return json{{"command", command},
                {"seed", seed},
                {"version", jl_version()},
                {"inputs", inputs}};
  };
  const auto finish = [&](const json& doc, int code) {
    print_doc(doc, json_indent);
    if (!quiet) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      std::fprintf(stderr, "wall_ms %lld\n", static_cast<long long>(ms));
    }
    return code;
  };

  int exit_code = 0;
  json result;
  try {
    if (*cmd_parse) {
      PolyHandle h;
      h.p = jl_poly_parse(parse_source.c_str(), parse_vars);
      if (!h.p) throw ApiError{jl_error_code(), jl_error_message()};
      char* text = jl_poly_text(h.p);
      if (!text) throw ApiError{jl_error_code(), jl_error_message()};
      result = json{{"text", std::string(text)}, {"n", jl_poly_vars(h.p)}};
      jl_string_free(text);
      result["poly"] = api(jl_poly_to_json(h.p));
    } else if (*cmd_newton) {
      if (newton_source.empty() == newton_file.empty())
        throw ApiError{"BadInput", "newton needs exactly one of SOURCE or --file"};
      PolyHandle h;
      if (!newton_file.empty()) {
        const json pj = read_json_input(newton_file, inputs);
        h.p = jl_poly_from_json(pj.dump().c_str());
      } else {
        h.p = jl_poly_parse(newton_source.c_str(), 0);
      }
      if (!h.p) throw ApiError{jl_error_code(), jl_error_message()};
      const bool everything = !newton_faces && !newton_convenient && !newton_nondeg;
      if (everything || newton_faces || newton_convenient) {
        json b = api(jl_newton_boundary(h.p));
        if (everything || newton_faces) {
          result["n"] = b["n"];
          result["generators"] = b["generators"];
          result["vertices"] = b["vertices"];
          result["faces"] = b["faces"];
        }
        if (everything || newton_convenient) result["convenient"] = b["convenient"];
      }
      if (newton_nondeg) {
        const json opts{{"seed", seed}, {"samples", newton_samples}};
        result["nondegeneracy"] = api(jl_newton_nondegeneracy(h.p, opts.dump().c_str()));
      }
    } else if (*cmd_degree) {
      PolyHandle h;
      h.p = jl_poly_parse(degree_poly.c_str(), 0);
      if (!h.p) throw ApiError{jl_error_code(), jl_error_message()};
      result = api(jl_mapping_degree(h.p, degree_eps, static_cast<int>(degree_samples),
                                     static_cast<int>(degree_halvings)));
    } else if (*cmd_seifert) {
      json rq;
      if (*sf_lambda) {
        rq = {{"op", "lambda"}, {"m", lambda_m}};
      } else if (*sf_tensor) {
        rq = {{"op", "tensor"},
              {"a", read_json_input(tensor_a, inputs)},
              {"b", read_json_input(tensor_b, inputs)},
              {"n", tensor_n},
              {"m", tensor_m}};
      } else if (*sf_brieskorn) {
        rq = {{"op", "brieskorn"}, {"exponents", seifert_exponents}};
      } else if (*sf_extend) {
        rq = {{"op", "extend"},
              {"a", read_json_input(extend_file, inputs)},
              {"b", extend_b},
              {"eps", extend_eps}};
      } else if (*sf_congruent) {
        rq = {{"op", "congruent"},
              {"a", read_json_input(congruent_a, inputs)},
              {"b", read_json_input(congruent_b, inputs)},
              {"depth", congruent_depth},
              {"state_cap", congruent_cap}};
      } else if (*sf_charpoly) {
        rq = {{"op", "charpoly"},
              {"a", read_json_input(charpoly_file, inputs)},
              {"alternate", charpoly_alternate}};
      } else {
        rq = {{"op", "invariants"}, {"a", read_json_input(invariants_file, inputs)}};
      }
      result = api(jl_seifert(rq.dump().c_str()));
    } else if (*cmd_zeta) {
      json rq;
      if (*zt_join) {
        rq = {{"op", "join"},
              {"num1", parse_json_flag(join_num1, "--num1")},
              {"den1", parse_json_flag(join_den1, "--den1")},
              {"num2", parse_json_flag(join_num2, "--num2")},
              {"den2", parse_json_flag(join_den2, "--den2")}};
      } else if (*zt_from) {
        rq = charpolys_request("from_charpolys", read_json_input(from_file, inputs),
                               from_n);
      } else {
        rq = charpolys_request("reduced", read_json_input(reduced_file, inputs),
                               reduced_n);
      }
      result = api(jl_zeta(rq.dump().c_str()));
    } else if (*cmd_enhanced) {
      json rq;
      if (*en_join) {
        rq = {{"op", "join"},     {"mu1", en_mu1}, {"lambda1", en_lambda1},
              {"k1", en_k1},      {"mu2", en_mu2}, {"lambda2", en_lambda2},
              {"k2", en_k2}};
        if (en_k != LONG_MIN) rq["k"] = en_k;
      } else if (*en_brieskorn) {
        rq = {{"op", "brieskorn"}, {"exponents", en_exponents}};
      } else {
        rq = {{"op", "witness"}, {"ell", witness_ell}, {"k", witness_k}};
      }
      result = api(jl_enhanced(rq.dump().c_str()));
    } else if (*cmd_pipeline) {
      const json script = read_json_input(pipeline_file, inputs);
      result = api(jl_pipeline(script.dump().c_str()));
      if (result.contains("error")) exit_code = 1;
    }
  } catch (const ApiError& e) {
    const json doc{{"manifest", manifest()},
                   {"error", {{"code", e.code}, {"message", e.message}}}};
    return finish(doc, 1);
  }

  const json doc{{"manifest", manifest()}, {"result", result}};
  return finish(doc, exit_code);
}
