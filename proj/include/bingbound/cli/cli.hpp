#pragma once

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bingbound/bounds/bounds.hpp"

namespace bingbound::cli {

enum ExitCode { kOk = 0, kParseError = 2, kComputeError = 3, kIoError = 4 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::Io: return kIoError;
    default: return kComputeError;
  }
}

enum class Format { Json, Csv, Text };

struct Config {
  std::string catalog_path;
  std::string tau_table_path;
  Format format = Format::Text;
  int precision = 12;
  unsigned jobs = 1;
};

using Json = nlohmann::ordered_json;

namespace detail {

struct Context {
  Config config;
  KnotCatalog catalog = KnotCatalog::shipped();
};

inline std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline std::string inline_text(const Json& v) {
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + inline_text(x);
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + inline_text(x);
    return s;
  }
  return scalar_text(v);
}

inline void write_text(const Json& record, std::ostream& out) {
  for (const auto& [key, v] : record.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << ":\n";
      for (const auto& x : v) out << "  " << inline_text(x) << '\n';
    } else {
      out << key << ": " << inline_text(v) << '\n';
    }
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string csv_value(const Json& v) {
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ";") + inline_text(x);
    return s;
  }
  return inline_text(v);
}

inline void write_csv(const Json& record, std::ostream& out, bool header) {
  if (header) {
    bool first = true;
    for (const auto& [key, v] : record.items()) {
      out << (first ? "" : ",") << csv_field(key);
      first = false;
    }
    out << '\n';
  }
  bool first = true;
  for (const auto& [key, v] : record.items()) {
    out << (first ? "" : ",") << csv_field(csv_value(v));
    first = false;
  }
  out << '\n';
}

inline Json invariants_record(const KnotExpression& e, Context& ctx) {
  const Inertia at_minus_one = signature_at(e, ctx.catalog, Rational(1, 2));
  const AlexanderPolynomial delta = alexander(e, ctx.catalog);
  const GenusThreeCertificate g3 = g3_certify(e, ctx.catalog);
  SignatureFunction f = signature_function(e, ctx.catalog);
  Json r;
  r["expression"] = to_string(e);
  r["signature"] = at_minus_one.signature();
  r["nullity"] = at_minus_one.nullity();
  r["alexander"] = delta.to_string();
  r["g3"] = {{"lower", g3.lower}, {"upper", g3.upper}, {"status", to_string(g3.status())}};
  Json jumps = Json::array();
  for (auto& j : f.jumps) jumps.push_back(describe_theta(j.at, ctx.config.precision));
  r["jump_count"] = f.jumps.size();
  r["jumps"] = std::move(jumps);
  Json plateaus = Json::array();
  for (const auto& p : f.plateaus) plateaus.push_back(p.signature);
  r["plateaus"] = std::move(plateaus);
  return r;
}

inline Json signature_function_json(SignatureFunction& f, int digits) {
  Json r;
  Json jumps = Json::array();
  for (auto& j : f.jumps) {
    Json x;
    x["theta"] = describe_theta(j.at, digits);
    x["signature"] = j.signature;
    x["nullity"] = j.nullity;
    if (!j.at.is_rational())
      x["polynomial"] = Polynomial::from_integers(j.at.defining.primitive_integer()).to_string("t");
    jumps.push_back(std::move(x));
  }
  Json plateaus = Json::array();
  for (const auto& p : f.plateaus)
    plateaus.push_back({{"sample", format_rational(p.sample)}, {"signature", p.signature}});
  r["jumps"] = std::move(jumps);
  r["plateaus"] = std::move(plateaus);
  return r;
}

inline Json reduce_record(const KnotExpression& e, unsigned n) {
  const Reduction red = reduce_to_companion(n, e);
  Json r;
  r["expression"] = to_string(e);
  r["n"] = n;
  r["companion"] = to_string(red.companion);
  r["b_steps"] = red.trace.count(CoveringRule::B);
  r["a_steps"] = red.trace.count(CoveringRule::A);
  Json steps = Json::array();
  for (std::size_t i = 0; i < red.trace.steps.size(); ++i) {
    const RewriteStep& s = red.trace.steps[i];
    steps.push_back({{"step", i + 1},
                     {"rule", to_string(s.rule)},
                     {"marked", s.marked},
                     {"tree_after", s.tree_after},
                     {"knot_after", s.knot_after}});
  }
  r["steps"] = std::move(steps);
  return r;
}

inline std::vector<NuInvariant> parse_nus(const std::vector<std::string>& names) {
  std::vector<NuInvariant> out;
  for (const auto& n : names) out.push_back(parse_nu(n));
  return out;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open batch file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find("//"); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(b, e - b + 1));
  }
  return lines;
}

struct Outcome {
  Json record;
  int code = kOk;
};

inline Outcome guarded(const std::string& text, const std::function<Json(const KnotExpression&)>& body) {
  try {
    return {body(parse_expression(text)), kOk};
  } catch (const Error& e) {
    Json r;
    r["expression"] = text;
    r["error"] = e.what();
    return {r, exit_code_for(e.kind())};
  }
}

/// Evaluates every input, `jobs` at a time, and writes records in input order.
inline int emit(const std::vector<std::string>& inputs, const std::function<Json(const KnotExpression&)>& body,
                const Context& ctx, std::ostream& out, std::ostream& err) {
  std::vector<Outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) results[i] = guarded(inputs[i], body);
  };
  const unsigned threads = std::min<std::size_t>(ctx.config.jobs, std::max<std::size_t>(inputs.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int code = kOk;
  bool header = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& o = results[i];
    if (o.code != kOk) {
      err << "error: " << inputs[i] << ": " << o.record["error"].get<std::string>() << '\n';
      if (code == kOk) code = o.code;
    }
    switch (ctx.config.format) {
      case Format::Json:
        out << (inputs.size() == 1 ? o.record.dump(2) : o.record.dump()) << '\n';
        break;
      case Format::Csv:
        write_csv(o.record, out, header && o.code == kOk);
        if (o.code == kOk) header = false;
        break;
      case Format::Text:
        if (i > 0) out << '\n';
        write_text(o.record, out);
        break;
    }
  }
  return code;
}

}  // namespace detail

/// Full command-line entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Context ctx;
  CLI::App app{"Genus bounds for iterated Bing doubles and knot signature invariants", "bingbound"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tau-table", ctx.config.tau_table_path, "tau table file (IDENTIFIER INTEGER per line)");
  app.add_option("--catalog", ctx.config.catalog_path, "extra catalog entries (JSON)");
  app.add_option("--precision", ctx.config.precision, "digits for algebraic jump enclosures")->check(CLI::Range(6, 200));
  app.add_option("--jobs", ctx.config.jobs, "parallel workers for batch runs")->check(CLI::Range(1u, 1024u));

  std::string expression, batch, csv_path, trace_path;
  unsigned n = 1;
  std::vector<std::string> nu_names;

  auto* inv = app.add_subcommand("invariants", "signature, Alexander polynomial, g3 and signature-function summary");
  inv->add_option("expression", expression, "knot expression");
  inv->add_option("--batch", batch, "file with one expression per line");

  auto* sf = app.add_subcommand("signature-function", "Levine-Tristram signature function as CSV");
  sf->add_option("expression", expression, "knot expression")->required();
  sf->add_option("--csv", csv_path, "write the CSV here instead of stdout");

  auto* bb = app.add_subcommand("bing-bound", "genus bounds for B_n(K)");
  bb->add_option("expression", expression, "knot expression");
  bb->add_option("--batch", batch, "file with one expression per line");
  bb->add_option("-n", n, "iteration depth")->required()->check(CLI::Range(1u, 24u));
  bb->add_option("--nu", nu_names, "sigma | sigma_p:a/p | tau (repeatable)");
  bb->add_option("--trace", trace_path, "write the rewrite trace as JSON lines");

  auto* rd = app.add_subcommand("reduce", "companion knot and rewrite trace");
  rd->add_option("expression", expression, "knot expression")->required();
  rd->add_option("-n", n, "iteration depth")->required()->check(CLI::Range(1u, 24u));

  auto* rp = app.add_subcommand("report", "full report with every built-in nu");
  rp->add_option("expression", expression, "knot expression");
  rp->add_option("--batch", batch, "file with one expression per line");
  rp->add_option("-n", n, "iteration depth")->check(CLI::Range(1u, 24u));
  rp->add_option("--nu", nu_names, "sigma | sigma_p:a/p | tau (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  ctx.config.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  try {
    if (!ctx.config.catalog_path.empty()) ctx.catalog.load_catalog_file(ctx.config.catalog_path);
    std::string tau_path = ctx.config.tau_table_path;
    if (tau_path.empty())
      if (const char* env = std::getenv("BINGBOUND_TAU_TABLE")) tau_path = env;
    if (!tau_path.empty()) ctx.catalog.load_tau_table_file(tau_path);
    for (const auto& w : ctx.catalog.warnings()) err << "warning: " << w << '\n';

    auto inputs = [&]() -> std::vector<std::string> {
      if (!batch.empty() && !expression.empty())
        throw Error(ErrorKind::Parse, "give either an expression or --batch, not both");
      if (!batch.empty()) return detail::read_lines(batch);
      if (expression.empty()) throw Error(ErrorKind::Parse, "missing knot expression");
      return {expression};
    };

    if (*inv) {
      return detail::emit(
          inputs(), [&](const KnotExpression& e) { return detail::invariants_record(e, ctx); }, ctx, out, err);
    }
    if (*sf) {
      const KnotExpression e = parse_expression(expression);
      SignatureFunction f = signature_function(e, ctx.catalog, InertiaMethod::Auto, ctx.config.jobs > 1);
      if (!csv_path.empty()) {
        std::ofstream file(csv_path);
        if (!file) throw Error(ErrorKind::Io, "cannot write '" + csv_path + "'");
        file << f.to_csv(ctx.config.precision);
        if (!file) throw Error(ErrorKind::Io, "write to '" + csv_path + "' failed");
        out << "wrote " << f.plateaus.size() << " plateaus and " << f.jumps.size() << " jumps to " << csv_path << '\n';
      } else if (ctx.config.format == Format::Json) {
        Json r = detail::signature_function_json(f, ctx.config.precision);
        r = Json{{"expression", to_string(e)}, {"jumps", r["jumps"]}, {"plateaus", r["plateaus"]}};
        out << r.dump(2) << '\n';
      } else {
        out << f.to_csv(ctx.config.precision);
      }
      return kOk;
    }
    if (*bb || *rp) {
      if (nu_names.empty()) nu_names = *bb ? std::vector<std::string>{"sigma"}
                                           : std::vector<std::string>{"sigma", "sigma_p:1/3", "tau"};
      const std::vector<NuInvariant> nus = detail::parse_nus(nu_names);
      const std::vector<std::string> in = inputs();
      if (!trace_path.empty()) {
        if (in.size() != 1) throw Error(ErrorKind::Parse, "--trace needs a single expression");
        std::ofstream file(trace_path);
        if (!file) throw Error(ErrorKind::Io, "cannot write '" + trace_path + "'");
        reduce_to_companion(n, parse_expression(in.front())).trace.write_jsonl(file);
        if (!file) throw Error(ErrorKind::Io, "write to '" + trace_path + "' failed");
      }
      return detail::emit(
          in, [&](const KnotExpression& e) { return to_json(full_report(e, n, nus, ctx.catalog)); }, ctx, out, err);
    }
    if (*rd) {
      return detail::emit({expression}, [&](const KnotExpression& e) { return detail::reduce_record(e, n); }, ctx,
                          out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kOk;
}

}  // namespace bingbound::cli
