// Copyright 2026 The nonstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nonstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nonstab/circuits.hpp"
#include "nonstab/decoder.hpp"
#include "nonstab/families.hpp"
#include "nonstab/fourier_code.hpp"
#include "nonstab/oracle.hpp"
#include "nonstab/serialization.hpp"

namespace nonstab::cli {

namespace {

using serialization::CodeBundle;
using serialization::json;
using serialization::to_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  // global
  unsigned threads = 1;
  std::string max_errors = "10000000";
  std::string max_group = "65536";
  // shared by subcommands
  std::string input;
  std::string name;
  std::size_t n = 0;
  std::uint32_t q = 2;
  std::size_t d = 0;
  std::optional<std::uint64_t> seed;
  std::string alpha = "1/10";
  std::size_t trials = 1000;
  std::string order = "weight-lex";
  std::string c, dvec, u;
  std::size_t top = 8;
  bool emit_circuit = false;
  std::size_t member = 0;
  std::string error;
  std::optional<std::size_t> t;
};

Limits limits_from(const Options& o) {
  Limits limits;
  try {
    limits.max_errors = BigInt(o.max_errors);
    limits.max_group = BigInt(o.max_group);
  } catch (const std::exception&) {
    throw UsageError("budget flags must be integers");
  }
  if (limits.max_errors <= 0 || limits.max_group <= 0) throw UsageError("budget flags must be positive");
  limits.threads = std::max(1u, o.threads);
  return limits;
}

json read_json(const Options& o, std::istream& in) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  } else {
    std::ifstream file(o.input);
    if (!file) throw UsageError("cannot open " + o.input);
    std::ostringstream os;
    os << file.rdbuf();
    text = os.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

CodeBundle read_bundle(const Options& o, std::istream& in) {
  auto j = read_json(o, in);
  try {
    return serialization::bundle_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed code bundle: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed code bundle: ") + e.what());
  }
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw UsageError("zero denominator");
      return Rational(BigInt(text.substr(0, slash)), den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    return Rational(BigInt(digits.empty() ? "0" : digits), galois::power(10, static_cast<unsigned>(text.size() - dot - 1)));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("cannot parse '" + text + "' as a rational");
  }
}

galois::FieldVector parse_vector(const std::string& text, std::size_t size, std::uint32_t q, const char* what) {
  if (text.empty()) return galois::FieldVector(size, q);
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError(std::string("--") + what + " must be a comma-separated integer list");
    }
  }
  if (values.size() != size) {
    throw UsageError(std::string("--") + what + " needs " + std::to_string(size) + " entries");
  }
  return galois::FieldVector::from_signed(values, q);
}

fourier::CodeParams params_of(const fourier::FourierDescription& code, std::size_t d) {
  return {code.spec().n(), fourier::code_dimension(code), d, code.spec().q()};
}

// ---------------------------------------------------------------- family

CodeBundle named_family(const Options& o, const Limits& limits, json& extra) {
  const auto& name = o.name;
  if (name == "d2") {
    if (o.n == 0) throw UsageError("family d2 needs --n");
    auto code = families::distance2_family(o.n, o.q);
    return {code, params_of(code, 2), "distance-2 family on the cyclic spec"};
  }
  if (name == "code15") {
    auto code = families::code_15_8_3();
    return {code, params_of(code, 3), "eight 7/8-subsets of {1..15} on the 15-qubit cyclic spec"};
  }
  if (name == "subspace33" || name == "subspace31") {
    auto family = families::subspace_family(5, 3, 2, limits);
    std::size_t n = 33;
    std::string provenance = "3-dimensional subspaces of GF(2)^5 as subsets of {1..32}";
    if (name == "subspace31") {
      family = families::puncture(family, 32);
      n = 31;
      provenance += ", punctured at 32";
    }
    auto code = families::family_to_B(family, n, limits);
    return {code, params_of(code, 3), provenance};
  }
  if (name == "alpha-good") {
    if (!o.seed) throw UsageError("family alpha-good needs --seed");
    if (o.n == 0) throw UsageError("family alpha-good needs --n");
    auto alpha = parse_rational(o.alpha);
    if (alpha <= 0 || alpha >= Rational(1, 2)) throw UsageError("--alpha must lie in (0, 1/2)");
    auto R = families::search_alpha_good(o.n, alpha, *o.seed, o.trials, limits);
    if (!R) throw std::runtime_error("no alpha-good matrix found in " + std::to_string(o.trials) + " trials");
    auto spec = families::alpha_good_spec(*R);
    const Rational scaled = alpha * o.n;
    const auto k = static_cast<std::size_t>(
        BigInt(boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled)));
    fourier::FourierDescription code(spec, {galois::FieldVector(spec.r(), spec.q())});
    extra = json{{"R", to_json(*R)}, {"alpha", o.alpha}, {"seed", static_cast<std::uint64_t>(*o.seed)}, {"purity_target", k}};
    return {code, params_of(code, k + 1), "stabilizer state from a random alpha-good matrix"};
  }
  throw UsageError("unknown family '" + name + "' (d2, code15, subspace33, subspace31, alpha-good)");
}

int cmd_family(const Options& o, std::ostream& out) {
  auto limits = limits_from(o);
  json extra;
  auto bundle = named_family(o, limits, extra);
  auto j = to_json(bundle);
  if (!extra.is_null()) j["alpha_good"] = std::move(extra);
  out << j.dump(2) << "\n";
  return kPass;
}

// ---------------------------------------------------------------- verify / oracle

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  auto limits = limits_from(o);
  auto bundle = read_bundle(o, in);
  const auto& spec = bundle.code.spec();
  const std::size_t d = o.d ? o.d : bundle.claimed.d;
  if (d == 0) throw UsageError("verify needs --d or a claimed distance in the bundle");

  auto actual = params_of(bundle.code, d);
  json j{{"command", "verify"}, {"label", serialization::params_label(actual)},
         {"params", {{"n", actual.n}, {"K", actual.K.str()}, {"d", actual.d}, {"q", actual.q}}}};

  auto validation = gottesman::validate(spec);
  if (!validation.ok) {
    j["pass"] = false;
    j["witness"] = json{{"kind", "invalid-spec"}, {"violations", validation.violations}};
    out << j.dump(2) << "\n";
    return kFail;
  }
  if (bundle.claimed.K != 0 && bundle.claimed.K != actual.K) {
    j["pass"] = false;
    j["witness"] = json{{"kind", "dimension-mismatch"}, {"claimed", bundle.claimed.K.str()}, {"actual", actual.K.str()}};
    out << j.dump(2) << "\n";
    return kFail;
  }
  auto report = fourier::verify_distance(bundle.code, d, limits);
  auto r = to_json(report);
  j["pass"] = report.pass;
  j["counts"] = r["counts"];
  if (!report.pass) j["witness"] = r["witness"];
  out << j.dump(2) << "\n";
  return report.pass ? kPass : kFail;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out) {
  auto limits = limits_from(o);
  auto bundle = read_bundle(o, in);
  const std::size_t d = o.d ? o.d : bundle.claimed.d;
  if (d == 0) throw UsageError("oracle needs --d or a claimed distance in the bundle");
  auto basis = oracle::code_basis(bundle.code, limits);
  auto ortho = oracle::orthonormality_check(basis);
  auto report = oracle::kl_check(basis, bundle.code.spec().group(), d, limits);
  auto actual = params_of(bundle.code, d);
  json j{{"command", "oracle"}, {"label", serialization::params_label(actual)}};
  auto r = to_json(report);
  j["pass"] = report.pass && ortho.pass;
  j["counts"] = r["counts"];
  j["counts"]["basis_states"] = basis.size();
  if (!ortho.pass) {
    j["witness"] = json{{"kind", "not-orthonormal"},
                        {"first", ortho.first},
                        {"second", ortho.second},
                        {"value", {ortho.value.real(), ortho.value.imag()}}};
  } else if (!report.pass) {
    j["witness"] = r["witness"];
    j["witness"]["kind"] = "knill-laflamme";
  }
  out << j.dump(2) << "\n";
  return j["pass"].get<bool>() ? kPass : kFail;
}

// ---------------------------------------------------------------- greedy

int cmd_greedy(const Options& o, std::istream& in, std::ostream& out) {
  auto limits = limits_from(o);
  if (o.d == 0) throw UsageError("greedy needs --d");
  fourier::GreedyOrder order;
  if (o.order == "weight-lex") {
    order = fourier::GreedyOrder::WeightLex;
  } else if (o.order == "lex") {
    order = fourier::GreedyOrder::Lexicographic;
  } else {
    throw UsageError("--order must be weight-lex or lex");
  }
  std::optional<gottesman::GottesmanSpec> spec;
  std::string source;
  if (o.name == "cyclic" || o.name == "laflamme") {
    if (o.n == 0) throw UsageError("greedy --spec " + o.name + " needs --n");
    spec = families::cyclic_spec(o.n, o.name == "laflamme" ? 2 : o.q);
    source = o.name + " spec";
  } else if (o.name.empty()) {
    auto j = read_json(o, in);
    try {
      spec = serialization::spec_from_json(j.contains("spec") ? j.at("spec") : j);
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed spec: ") + e.what());
    }
    source = "input spec";
  } else {
    throw UsageError("unknown spec '" + o.name + "' (cyclic, laflamme)");
  }
  auto result = fourier::greedy_construct(*spec, o.d, order, {}, limits);
  CodeBundle bundle{result.code, params_of(result.code, o.d), "greedy packing over the " + source};
  auto j = to_json(bundle);
  j["greedy"] = json{{"order", o.order},
                     {"forbidden_size", result.forbidden_size},
                     {"guaranteed", result.guaranteed.str()},
                     {"floor_bound", result.floor_bound.str()},
                     {"size", result.code.size()}};
  out << j.dump(2) << "\n";
  return kPass;
}

// ---------------------------------------------------------------- encode-sim

int cmd_encode(const Options& o, std::istream& in, std::ostream& out) {
  std::optional<families::SumZeroForm> form;
  if (o.n != 0) {
    form = families::cyclic_sum_zero_form(o.n, o.q);
  } else {
    auto j = read_json(o, in);
    try {
      form = serialization::sum_zero_form_from_json(j);
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed sum-zero form: ") + e.what());
    }
  }
  const auto n = form->n();
  families::Message message;
  if (!o.u.empty()) {
    if (!o.c.empty() || !o.dvec.empty()) throw UsageError("give either --u or --c/--dmsg");
    message = families::index_to_message(*form, parse_vector(o.u, n, form->q, "u"));
  } else {
    message = {parse_vector(o.c, n, form->q, "c"), parse_vector(o.dvec, n, form->q, "dmsg")};
  }
  auto encoder = circuits::build_encoder(*form);
  auto output = circuits::simulate(encoder.circuit, circuits::encoder_input(encoder, message));
  json j{{"command", "encode-sim"}};
  j["message"] = json{{"c", to_json(message.c)}, {"d", to_json(message.d)}};
  j["u"] = to_json(families::message_to_index(*form, message));
  oracle::SparseState data(form->q, n);
  try {
    data = circuits::data_register(encoder, output, message);
  } catch (const std::logic_error& e) {
    j["pass"] = false;
    j["witness"] = json{{"kind", "dirty-registers"}, {"detail", e.what()}};
    out << j.dump(2) << "\n";
    return kFail;
  }
  double fid = oracle::fidelity(data, oracle::closed_form_codeword(*form, message));
  std::vector<oracle::SparseState::Entry> entries(data.entries().begin(), data.entries().end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return std::abs(a.second) > std::abs(b.second) + 1e-12; });
  json top = json::array();
  for (std::size_t i = 0; i < std::min(o.top, entries.size()); ++i) {
    const auto& [index, amp] = entries[i];
    top.push_back(json{{"x", data.word_of(index)}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  const bool pass = fid >= 1 - 1e-10;
  j["pass"] = pass;
  j["fidelity"] = fid;
  j["ancilla_clean"] = true;
  j["support"] = data.support_size();
  j["gates"] = encoder.circuit.gates().size();
  j["top"] = std::move(top);
  if (o.emit_circuit) j["circuit"] = to_json(encoder.circuit);
  out << j.dump(2) << "\n";
  return pass ? kPass : kFail;
}

// ---------------------------------------------------------------- decode-sim

int cmd_decode(const Options& o, std::istream& in, std::ostream& out) {
  auto limits = limits_from(o);
  auto bundle = read_bundle(o, in);
  const auto& code = bundle.code;
  const auto& group = code.spec().group();
  if (o.member >= code.size()) throw UsageError("--member out of range");
  if (o.error.empty()) throw UsageError("decode-sim needs --error '{\"a\":[...],\"b\":[...]}'");
  weyl::WeylElement error;
  try {
    error = serialization::element_from_json(json::parse(o.error), group);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed --error: ") + e.what());
  }
  const std::size_t t = o.t ? *o.t : (bundle.claimed.d > 0 ? (bundle.claimed.d - 1) / 2 : 0);
  const auto& u = code.members()[o.member];
  auto original = oracle::codeword(code, u, limits);
  auto corrupted = oracle::apply(group, error, original);
  json j{{"command", "decode-sim"}, {"original_u", to_json(u)}, {"error", to_json(error)}, {"t", t}};
  try {
    auto result = decoder::decode(corrupted, code, t, limits);
    double fid = oracle::fidelity(result.state, original);
    const bool pass = fid >= 1 - 1e-9;
    j["pass"] = pass;
    j["recovered_u"] = to_json(result.correction.u);
    j["applied_correction"] = to_json(group.inverse(result.correction.error));
    j["fidelity"] = fid;
    j["candidates_checked"] = result.correction.candidates_checked;
    out << j.dump(2) << "\n";
    return pass ? kPass : kFail;
  } catch (const decoder::NoSolution& e) {
    j["pass"] = false;
    j["witness"] = json{{"kind", "no-solution"}, {"detail", e.what()}};
    out << j.dump(2) << "\n";
    return kFail;
  }
}

// ---------------------------------------------------------------- table

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  auto limits = limits_from(o);
  struct Row {
    std::string name;
    std::size_t n;
    std::uint32_t q;
  };
  const std::vector<Row> rows{{"d2", 5, 2},         {"d2", 7, 2},          {"d2", 5, 3},
                              {"code15", 15, 2},    {"subspace33", 33, 2}, {"subspace31", 31, 2}};
  int status = kPass;
  out << "n,q,K,d,lower_bound,upper_bound,source\n";
  for (const auto& row : rows) {
    Options local = o;
    local.name = row.name;
    local.n = row.n;
    local.q = row.q;
    json extra;
    auto bundle = named_family(local, limits, extra);
    auto report = fourier::verify_distance(bundle.code, bundle.claimed.d, limits);
    if (!report.pass) {
      err << "error: " << row.name << " failed verification at d = " << bundle.claimed.d << "\n";
      status = kFail;
      continue;
    }
    // lower: greedy packing against the (d-1)-sphere; upper: sphere packing at t
    const int n = static_cast<int>(row.n);
    const int d = static_cast<int>(bundle.claimed.d);
    const Rational lower(galois::power(row.q, row.n), galois::error_sphere_count(n, row.q, d - 1));
    const Rational upper = fourier::bounds(n, row.q, (d - 1) / 2).upper;
    out << row.n << "," << row.q << "," << bundle.claimed.K << "," << d << "," << lower << "," << upper << ","
        << row.name << "\n";
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, encode and decode Fourier-described quantum codes", "nonstab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "worker threads for the oracle");
  app.add_option("--max-errors", o.max_errors, "cap on enumerated errors");
  app.add_option("--max-group", o.max_group, "cap on #S and explicit state dimension");

  auto* family = app.add_subcommand("family", "emit a named construction as a code bundle");
  family->add_option("name,--name", o.name, "d2, code15, subspace33, subspace31, alpha-good")->required();
  family->add_option("--n", o.n, "length (d2) or matrix size (alpha-good)");
  family->add_option("--q", o.q, "field size");
  family->add_option("--seed", o.seed, "random seed (alpha-good)");
  family->add_option("--alpha", o.alpha, "rate parameter, e.g. 1/10 (alpha-good)");
  family->add_option("--trials", o.trials, "random matrices to try (alpha-good)");

  auto* verify = app.add_subcommand("verify", "algebraic distance check of a code bundle");
  verify->add_option("--input", o.input, "bundle file (default stdin)");
  verify->add_option("--d", o.d, "distance to verify (default: claimed)");

  auto* kl = app.add_subcommand("oracle", "Knill-Laflamme check on explicit codewords");
  kl->add_option("--input", o.input, "bundle file (default stdin)");
  kl->add_option("--d", o.d, "distance to check (default: claimed)");

  auto* greedy = app.add_subcommand("greedy", "greedy packing of character indices");
  greedy->add_option("--spec", o.name, "cyclic or laflamme (default: spec JSON on input)");
  greedy->add_option("--input", o.input, "spec or bundle file (default stdin)");
  greedy->add_option("--n", o.n, "length");
  greedy->add_option("--q", o.q, "field size");
  greedy->add_option("--d", o.d, "target distance")->required();
  greedy->add_option("--order", o.order, "weight-lex or lex");

  auto* encode = app.add_subcommand("encode-sim", "simulate the encoder for a sum-zero form");
  encode->add_option("--input", o.input, "sum-zero form JSON {q, D} (default stdin)");
  encode->add_option("--n", o.n, "use the cyclic form of this length instead of input");
  encode->add_option("--q", o.q, "field size");
  encode->add_option("--c", o.c, "message c, comma-separated");
  encode->add_option("--dmsg", o.dvec, "message d, comma-separated");
  encode->add_option("--u", o.u, "character index instead of (c, d)");
  encode->add_option("--top", o.top, "amplitudes to print");
  encode->add_flag("--circuit", o.emit_circuit, "include the circuit JSON");

  auto* decode = app.add_subcommand("decode-sim", "corrupt a codeword and decode it");
  decode->add_option("--input", o.input, "bundle file (default stdin)");
  decode->add_option("--member", o.member, "position in B of the transmitted codeword");
  decode->add_option("--error", o.error, "error as JSON {phase, a, b}")->required();
  decode->add_option("--t", o.t, "correction radius (default: floor((d-1)/2))");

  auto* table = app.add_subcommand("table", "parameter and bounds table as CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (family->parsed()) return cmd_family(o, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (kl->parsed()) return cmd_oracle(o, in, out);
    if (greedy->parsed()) return cmd_greedy(o, in, out);
    if (encode->parsed()) return cmd_encode(o, in, out);
    if (decode->parsed()) return cmd_decode(o, in, out);
    if (table->parsed()) return cmd_table(o, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace nonstab::cli
