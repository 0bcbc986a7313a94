#include <c2/automata.hpp>
#include <c2/category.hpp>
#include <c2/chaos.hpp>
#include <c2/cli.hpp>
#include <c2/errors.hpp>
#include <c2/functor.hpp>
#include <c2/report.hpp>
#include <c2/stream.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

namespace c2::cli {

namespace {

constexpr std::size_t inline_bit_limit = 4096;

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_inline(const std::string& arg) {
  return !arg.empty() && arg.find_first_not_of("01()") == std::string::npos;
}

/// Inline literal, file path, or "-" for stdin.
std::string load_text(const std::string& arg, std::istream& in) {
  if (arg == "-")
    return read_all(in);
  if (looks_inline(arg)) {
    const auto bits = static_cast<std::size_t>(
        std::count_if(arg.begin(), arg.end(), [](char c) { return c == '0' || c == '1'; }));
    if (bits > inline_bit_limit)
      throw usage_error(fmt::format("inline input has {} bits; the limit is {}, pass a file",
                                    bits, inline_bit_limit));
    return arg;
  }
  std::ifstream file(arg);
  if (!file)
    throw usage_error("'" + arg + "' is neither a bit literal nor a readable file");
  return read_all(file);
}

BitStream load_stream(const std::string& arg, std::istream& in) {
  return parse_stream(load_text(arg, in));
}

Bit parse_single_bit(const std::string& text) {
  const BitString b = parse_bits(text);
  if (b.size() != 1)
    throw parse_error("expected a single bit, got '" + text + "'");
  return b.front();
}

/// Length to materialize: the flag when given, else the stream's horizon.
std::size_t resolve_length(std::optional<std::size_t> flag, const BitStream& s) {
  if (flag)
    return *flag;
  if (s.horizon() == BitStream::unbounded)
    throw usage_error("--length is required for periodic input");
  return s.horizon();
}

/// Key/value output for the small commands. Plain output is just the
/// primary value; the structured formats carry every field.
struct Emitter {
  std::ostream& out;
  OutputFormat format;
  std::string command;

  void emit(const std::string& plain,
            const std::vector<std::pair<std::string, std::string>>& fields) const {
    switch (format) {
    case OutputFormat::plain:
      out << plain << '\n';
      break;
    case OutputFormat::csv:
      out << "schema_version,command,key,value\n";
      for (const auto& [k, v] : fields)
        out << schema_version << ',' << command << ',' << k << ',' << v << '\n';
      break;
    case OutputFormat::json_lines: {
      nlohmann::ordered_json j;
      j["schema_version"] = schema_version;
      j["command"] = command;
      for (const auto& [k, v] : fields)
        j[k] = v;
      out << j.dump() << '\n';
      break;
    }
    }
  }
};

std::string cycle_text(const CycleReport& r) {
  if (!r.detected)
    return fmt::format("not-detected cn>={}", r.cycle_number);
  return fmt::format("detected preperiod={} period={} cn={}", r.preperiod_length,
                     to_string(r.period), r.cycle_number);
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Binary category computation: C2 operator algebra, categorial automata, "
               "chain/string correspondence and chaos analysis",
               "c2cat"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  std::optional<std::size_t> length;
  std::optional<std::size_t> horizon;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "plain, csv or json-lines")
        ->check(CLI::IsMember({"plain", "csv", "json-lines"}));
  };

  // compose / apply
  std::string op_a, op_b;
  auto* compose_cmd = app.add_subcommand("compose", "Compose two operators (outer . inner)");
  compose_cmd->add_option("outer", op_a, "0, 1, i0 or i1")->required();
  compose_cmd->add_option("inner", op_b, "0, 1, i0 or i1")->required();
  add_common(compose_cmd);

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a bit");
  apply_cmd->add_option("operator", op_a)->required();
  apply_cmd->add_option("bit", op_b)->required();
  add_common(apply_cmd);

  // validate
  std::string chain_text;
  std::optional<std::string> objects_text;
  auto* validate_cmd = app.add_subcommand("validate", "Validate and fold a chain s0:u1...un");
  validate_cmd->add_option("chain", chain_text)->required();
  validate_cmd->add_option("--objects", objects_text,
                           "explicit object sequence s0..sn instead of the derived one");
  add_common(validate_cmd);

  // metric
  std::vector<std::string> metric_inputs;
  std::optional<std::string> prefix_word;
  auto* metric_cmd = app.add_subcommand("metric", "Prefix distance between two streams");
  metric_cmd->add_option("streams", metric_inputs, "X Y (or just X with --prefix)")
      ->required()
      ->expected(1, 2);
  metric_cmd->add_option("--prefix", prefix_word, "test whether this word is a prefix of X");
  metric_cmd->add_option("--horizon", horizon);
  add_common(metric_cmd);

  // cycle
  std::string stream_arg;
  auto* cycle_cmd = app.add_subcommand("cycle", "Detect an eventual cycle");
  cycle_cmd->add_option("stream", stream_arg)->required();
  cycle_cmd->add_option("--horizon", horizon);
  add_common(cycle_cmd);

  // rule
  std::string rule_text;
  auto* rule_cmd = app.add_subcommand("rule", "Classify a 12-bit rule code");
  rule_cmd->add_option("--classify", rule_text)->required();
  add_common(rule_cmd);

  // pi
  std::string s0_text = "0";
  std::string program_arg;
  std::string pi_rule_text = pi_rule.bits();
  auto* pi_cmd = app.add_subcommand("pi", "Run a rule in recurrent wiring over a program");
  pi_cmd->add_option("--s0", s0_text);
  pi_cmd->add_option("--program", program_arg)->required();
  pi_cmd->add_option("--rule", pi_rule_text);
  pi_cmd->add_option("--length", length, "output bits (default: program bits + 1)");
  add_common(pi_cmd);

  // shift
  std::optional<std::size_t> shift_by;
  std::string shift_rule_text = shift_rule.bits();
  auto* shift_cmd =
      app.add_subcommand("shift", "Apply a rule in parallel wiring, or drop bits with --by");
  shift_cmd->add_option("stream", stream_arg)->required();
  auto* by_opt = shift_cmd->add_option("--by", shift_by, "drop this many leading bits");
  by_opt->excludes(shift_cmd->add_option("--rule", shift_rule_text));
  shift_cmd->add_option("--length", length);
  add_common(shift_cmd);

  // bernoulli
  std::size_t steps = 1;
  bool use_oracle = false;
  auto* bern_cmd = app.add_subcommand("bernoulli", "Iterate the doubling map as a shift");
  bern_cmd->add_option("stream", stream_arg)->required();
  bern_cmd->add_option("--steps", steps)->required();
  bern_cmd->add_option("--length", length);
  bern_cmd->add_flag("--oracle", use_oracle, "use exact rational doubling instead");
  add_common(bern_cmd);

  // compress / decompress
  auto* compress_cmd = app.add_subcommand("compress", "Emit a morphic compression certificate");
  compress_cmd->add_option("stream", stream_arg)->required();
  compress_cmd->add_option("--length", length);
  add_common(compress_cmd);

  std::string cert_arg;
  auto* decompress_cmd = app.add_subcommand("decompress", "Reproduce a string from a certificate");
  decompress_cmd->add_option("certificate", cert_arg, "file or -")->required();
  add_common(decompress_cmd);

  // analyze / demo
  std::optional<std::string> analyze_input;
  std::optional<double> p0;
  double critical = default_critical_value;
  bool series = false;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Transition matrices, independence and LZ76 of a string");
  analyze_cmd->add_option("stream", analyze_input, "stream (omit to sample with --p0/--seed)");
  analyze_cmd->add_option("--p0", p0);
  analyze_cmd->add_option("--seed", seed);
  analyze_cmd->add_option("--length", length);
  analyze_cmd->add_option("--critical", critical);
  analyze_cmd->add_flag("--series", series, "emit a two-column frequency series instead");
  add_common(analyze_cmd);

  double demo_p0 = 0.5;
  auto* demo_cmd = app.add_subcommand("demo", "End-to-end chaos demonstration");
  demo_cmd->add_option("--p0", demo_p0);
  demo_cmd->add_option("--length", length)->required();
  demo_cmd->add_option("--seed", seed)->required();
  demo_cmd->add_option("--critical", critical);
  demo_cmd->add_flag("--series", series, "emit a two-column frequency series instead");
  add_common(demo_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_failure;
  }

  try {
    const OutputFormat format = parse_format(format_name);
    auto* sub = app.get_subcommands().front();
    const Emitter emit{out, format, sub->get_name()};

    if (sub == compose_cmd) {
      const Operator r = compose(parse_operator(op_a), parse_operator(op_b));
      emit.emit(to_string(r), {{"outer", op_a}, {"inner", op_b}, {"result", to_string(r)}});
    } else if (sub == apply_cmd) {
      const Bit r = apply_operator(parse_operator(op_a), parse_single_bit(op_b));
      const std::string v(1, to_char(r));
      emit.emit(v, {{"operator", op_a}, {"origin", op_b}, {"target", v}});
    } else if (sub == validate_cmd) {
      const auto colon = chain_text.find(':');
      if (colon != 1)
        throw parse_error("chain must look like s0:u1u2...un");
      FiniteChain chain;
      chain.initial = parse_single_bit(chain_text.substr(0, 1));
      chain.fundaments = parse_operators(std::string_view(chain_text).substr(2));
      if (objects_text) {
        chain.objects = parse_bits(*objects_text);
      } else {
        // Identities keep the current object so a misplaced one shows up
        // as an invalid link instead of aborting the derivation.
        Bit s = chain.initial;
        chain.objects.push_back(s);
        for (Operator u : chain.fundaments) {
          if (!u.is_identity())
            s = apply_operator(u, s);
          chain.objects.push_back(s);
        }
      }
      const ChainValidation v = validate_chain(chain);
      if (v.valid) {
        const std::string folded = to_string(fold_chain(chain));
        emit.emit(fmt::format("valid objects={} fold={}", to_string(chain.objects), folded),
                  {{"chain", chain_text},
                   {"valid", "true"},
                   {"objects", to_string(chain.objects)},
                   {"fold", folded}});
        return ok;
      }
      emit.emit(fmt::format("invalid at index {}: {}", v.first_invalid, v.reason),
                {{"chain", chain_text},
                 {"valid", "false"},
                 {"first_invalid", std::to_string(v.first_invalid)},
                 {"reason", v.reason}});
      return domain_failure;
    } else if (sub == metric_cmd) {
      if (prefix_word) {
        if (metric_inputs.size() != 1)
          throw usage_error("--prefix takes exactly one stream");
        const BitStream x = load_stream(metric_inputs[0], in);
        const bool r = is_prefix(parse_bits(*prefix_word), x);
        emit.emit(r ? "true" : "false",
                  {{"word", *prefix_word}, {"stream", metric_inputs[0]}, {"is_prefix", r ? "true" : "false"}});
      } else {
        if (metric_inputs.size() != 2)
          throw usage_error("metric needs two streams");
        const BitStream x = load_stream(metric_inputs[0], in);
        const BitStream y = load_stream(metric_inputs[1], in);
        const std::size_t h =
            horizon ? *horizon : std::min({x.horizon(), y.horizon(), inline_bit_limit});
        const Distance d = prefix_metric(x, y, h);
        const char* kind = d.kind == Distance::Kind::zero    ? "zero"
                           : d.kind == Distance::Kind::exact ? "exact"
                                                             : "at_most";
        emit.emit(to_string(d), {{"horizon", std::to_string(h)},
                                 {"kind", kind},
                                 {"exponent", std::to_string(d.exponent)},
                                 {"distance", to_string(d)}});
      }
    } else if (sub == cycle_cmd) {
      const BitStream x = load_stream(stream_arg, in);
      const std::size_t h = horizon ? *horizon : std::min(x.horizon(), inline_bit_limit);
      const CycleReport r = detect_cycle(x, h);
      emit.emit(cycle_text(r), {{"horizon", std::to_string(h)},
                                {"detected", r.detected ? "true" : "false"},
                                {"preperiod_length", std::to_string(r.preperiod_length)},
                                {"period", to_string(r.period)},
                                {"cycle_number", std::to_string(r.cycle_number)}});
    } else if (sub == rule_cmd) {
      const RuleCode12 rule = parse_rule(rule_text);
      const BooleanFunctionId fn = boolean_table(rule);
      emit.emit(fn.label(), {{"rule", rule.bits()},
                             {"function", fn.name},
                             {"id", std::to_string(fn.id)},
                             {"label", fn.label()}});
    } else if (sub == pi_cmd) {
      const RuleCode12 rule = parse_rule(pi_rule_text);
      const BitStream program = load_stream(program_arg, in);
      std::size_t n = 0;
      if (length)
        n = *length;
      else if (program.horizon() == BitStream::unbounded)
        throw usage_error("--length is required for a periodic program");
      else
        n = program.horizon() + 1;
      const std::string s = to_string(apply_pi(rule, parse_single_bit(s0_text), program, n));
      emit.emit(s, {{"rule", rule.bits()}, {"s0", s0_text}, {"length", std::to_string(n)}, {"output", s}});
    } else if (sub == shift_cmd) {
      const BitStream x = load_stream(stream_arg, in);
      if (shift_by) {
        const std::string s = to_string(shift(x, *shift_by));
        emit.emit(s, {{"by", std::to_string(*shift_by)}, {"output", s}});
      } else {
        const RuleCode12 rule = parse_rule(shift_rule_text);
        std::size_t n = 0;
        if (length)
          n = *length;
        else if (x.horizon() == BitStream::unbounded)
          n = 1; // periodic output keeps its shape regardless
        else if (x.horizon() < 2)
          throw usage_error("parallel wiring needs at least two input bits");
        else
          n = x.horizon() - 1;
        const std::string s = to_string(apply_shift_rule(rule, x, n));
        emit.emit(s, {{"rule", rule.bits()}, {"output", s}});
      }
    } else if (sub == bern_cmd) {
      if (use_oracle) {
        const BitString bits = parse_bits(load_text(stream_arg, in));
        const std::string s = to_string(dyadic_doubling_oracle(bits, steps));
        emit.emit(s, {{"steps", std::to_string(steps)}, {"output", s}});
      } else {
        const BitStream x = load_stream(stream_arg, in);
        std::size_t n = 0;
        if (length)
          n = *length;
        else if (x.form() == BitStream::Form::periodic)
          n = 1;
        else if (x.horizon() <= steps)
          throw usage_error("stream is too short for the requested steps");
        else
          n = x.horizon() - steps;
        const auto orbit = iterate_bernoulli(x, steps, n);
        std::string plain;
        std::vector<std::pair<std::string, std::string>> fields;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
          const std::string s = to_string(orbit[k]);
          plain += (k ? "\n" : "") + fmt::format("{} {}", k, s);
          fields.emplace_back("S" + std::to_string(k), s);
        }
        emit.emit(plain, fields);
      }
    } else if (sub == compress_cmd) {
      const BitStream x = load_stream(stream_arg, in);
      const std::size_t n = resolve_length(length, x);
      const CompressionCertificate cert = morphic_compress(x, n);
      if (format == OutputFormat::plain) {
        out << to_record(cert);
      } else {
        emit.emit({}, {{"rule", cert.rule.bits()},
                       {"s0", std::string(1, to_char(cert.program.s0))},
                       {"operators", to_string(cert.program.operators)},
                       {"prefix_length", std::to_string(cert.reproduced_prefix_length)},
                       {"digest", fmt::format("fnv1a64:{:016x}", cert.digest)}});
      }
    } else if (sub == decompress_cmd) {
      std::string text;
      if (cert_arg == "-") {
        text = read_all(in);
      } else {
        std::ifstream file(cert_arg);
        if (!file)
          throw usage_error("cannot read certificate '" + cert_arg + "'");
        text = read_all(file);
      }
      const std::string s = to_string(decompress(parse_certificate(text)));
      emit.emit(s, {{"output", s}});
    } else if (sub == analyze_cmd) {
      BitStream x;
      if (analyze_input) {
        x = load_stream(*analyze_input, in);
      } else {
        if (!p0 || !length)
          throw usage_error("analyze needs a stream, or --p0, --seed and --length");
        x = sample_random_string(*p0, *length, seed);
      }
      const std::size_t n = resolve_length(length, x);
      if (series)
        out << frequency_series(x, n);
      else
        out << render(analyze(x, n, critical), format);
    } else if (sub == demo_cmd) {
      if (series)
        out << frequency_series(sample_random_string(demo_p0, *length, seed), *length);
      else
        out << render(chaos_demonstration(demo_p0, *length, seed, critical), format);
    }
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_failure;
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_failure;
  } catch (const rule_length_error& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_failure;
  } catch (const rule_alphabet_error& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_failure;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return domain_failure;
  }
  return ok;
}

std::vector<Coverage> operation_coverage() {
  return {
      {"apply_operator", {"c2cat", "apply", "1", "0"}},
      {"compose", {"c2cat", "compose", "1", "1"}},
      {"validate_chain", {"c2cat", "validate", "0:00010011001"}},
      {"fold_chain", {"c2cat", "validate", "0:11"}},
      {"is_prefix", {"c2cat", "metric", "--prefix", "000", "000011101110"}},
      {"prefix_metric", {"c2cat", "metric", "(01)", "0100", "--horizon", "4"}},
      {"cycle_stream", {"c2cat", "cycle", "1(10)", "--horizon", "64"}},
      {"detect_cycle", {"c2cat", "cycle", "0(0101)", "--horizon", "64"}},
      {"shift", {"c2cat", "shift", "1(10)", "--by", "1"}},
      {"parse_rule", {"c2cat", "rule", "--classify", "000011100111"}},
      {"boolean_table", {"c2cat", "rule", "--classify", "000011101110"}},
      {"apply_pi", {"c2cat", "pi", "--s0", "0", "--program", "00010011001"}},
      {"apply_shift_rule", {"c2cat", "shift", "101000"}},
      {"iterate_bernoulli", {"c2cat", "bernoulli", "1100", "--steps", "2"}},
      {"dyadic_doubling_oracle", {"c2cat", "bernoulli", "101000", "--steps", "2", "--oracle"}},
      {"chain_to_string", {"c2cat", "pi", "--s0", "1", "--program", "111"}},
      {"string_to_chain", {"c2cat", "compress", "0101"}},
      {"morphic_compress", {"c2cat", "compress", "000011101110"}},
      {"sample_random_string", {"c2cat", "analyze", "--p0", "0.5", "--seed", "3", "--length", "2000"}},
      {"enacting_program", {"c2cat", "analyze", "0110100110010110"}},
      {"estimate_transitions", {"c2cat", "analyze", "0110100110010110", "--format", "csv"}},
      {"independence_test", {"c2cat", "analyze", "--p0", "0.5", "--seed", "4", "--length", "5000"}},
      {"lz76_complexity", {"c2cat", "analyze", "0110100110010110", "--format", "json-lines"}},
      {"chaos_demonstration", {"c2cat", "demo", "--p0", "0.5", "--length", "2000", "--seed", "7"}},
  };
}

} // namespace c2::cli
