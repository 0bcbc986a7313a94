#include <c2/automata.hpp>
#include <c2/category.hpp>
#include <c2/chaos.hpp>
#include <c2/errors.hpp>
#include <c2/functor.hpp>
#include <c2/report.hpp>
#include <c2/stream.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace c2;

namespace {

py::dict matrix(const auto& m) {
  py::list counts;
  for (const auto& row : m.counts)
    counts.append(py::make_tuple(row[0], row[1]));
  py::dict d;
  d["counts"] = counts;
  return d;
}

py::dict independence(const IndependenceTest& t) {
  py::dict d;
  d["table"] = matrix(t.table);
  d["sample_count"] = t.sample_count;
  d["degenerate"] = t.degenerate;
  d["statistic"] = t.statistic;
  d["critical_value"] = t.critical_value;
  d["rejected"] = t.rejected;
  return d;
}

std::string shown(const BitStream& s) {
  return to_string(s.materialize(s.horizon()));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Operator algebra, automata and statistics on binary strings";
  py::register_exception<c2::error>(m, "C2Error");

  m.def("apply_operator",
        [](const std::string& op, int bit) {
          return to_int(apply_operator(parse_operator(op), to_bit(bit != 0)));
        },
        py::arg("op"), py::arg("bit"));
  m.def("compose",
        [](const std::string& outer, const std::string& inner) {
          return to_string(compose(parse_operator(outer), parse_operator(inner)));
        },
        py::arg("outer"), py::arg("inner"));
  m.def("validate_chain",
        [](const std::string& chain, std::optional<std::string> objects) {
          if (chain.size() < 2 || chain[1] != ':')
            throw parse_error("chain must look like s0:u1u2...un");
          FiniteChain c;
          c.initial = parse_bits(chain.substr(0, 1)).front();
          c.fundaments = parse_operators(chain.substr(2));
          c.objects = objects ? parse_bits(*objects) : FiniteChain::derive(c.initial, c.fundaments).objects;
          const auto r = validate_chain(c);
          return py::make_tuple(r.valid, r.first_invalid, r.reason);
        },
        py::arg("chain"), py::arg("objects") = py::none(),
        "Returns (valid, first_invalid, reason) for 's0:u1u2...'.");
  m.def("fold_chain", [](const std::string& chain) { return to_string(fold_chain(parse_chain(chain))); });

  m.def("prefix_metric",
        [](const std::string& x, const std::string& y, std::size_t horizon) {
          return to_string(prefix_metric(parse_stream(x), parse_stream(y), horizon));
        },
        py::arg("x"), py::arg("y"), py::arg("horizon"));
  m.def("detect_cycle",
        [](const std::string& x, std::size_t horizon) {
          const auto r = detect_cycle(parse_stream(x), horizon);
          py::dict d;
          d["detected"] = r.detected;
          d["preperiod_length"] = r.preperiod_length;
          d["period"] = to_string(r.period);
          d["cycle_number"] = r.cycle_number;
          return d;
        },
        py::arg("x"), py::arg("horizon"));
  m.def("shift",
        [](const std::string& x, std::size_t k) { return to_string(shift(parse_stream(x), k)); },
        py::arg("x"), py::arg("k"));

  m.def("boolean_table", [](const std::string& rule) { return boolean_table(parse_rule(rule)).label(); });
  m.def("pi",
        [](int s0, const std::string& program, const std::string& rule) {
          const BitString p = parse_bits(program);
          return shown(apply_pi(parse_rule(rule), to_bit(s0 != 0), BitStream::finite(p), p.size() + 1));
        },
        py::arg("s0"), py::arg("program"), py::arg("rule") = pi_rule.bits());
  m.def("iterate_bernoulli",
        [](const std::string& x, std::size_t steps, std::size_t length) {
          std::vector<std::string> out;
          for (const BitStream& s : iterate_bernoulli(parse_stream(x), steps, length))
            out.push_back(to_string(s.materialize(length)));
          return out;
        },
        py::arg("x"), py::arg("steps"), py::arg("length"),
        "First `length` bits of S_0..S_steps under the shift rule.");

  m.def("chain_to_string", [](int s0, const std::string& operators) {
    return shown(chain_to_string({to_bit(s0 != 0), parse_bits(operators)}));
  });
  m.def("string_to_chain", [](const std::string& s) {
    const BitString bits = parse_bits(s);
    const MorphicProgram p = string_to_chain(BitStream::finite(bits), bits.size());
    return py::make_tuple(to_int(p.s0), to_string(p.operators));
  });
  m.def("morphic_compress", [](const std::string& s) {
    const BitString bits = parse_bits(s);
    return to_record(morphic_compress(BitStream::finite(bits), bits.size()));
  });
  m.def("decompress", [](const std::string& record) { return shown(decompress(parse_certificate(record))); });

  m.def("sample_random_string",
        [](double p0, std::size_t length, std::uint64_t seed) {
          return shown(sample_random_string(p0, length, seed));
        },
        py::arg("p0"), py::arg("length"), py::arg("seed"));
  m.def("transitions", [](const std::string& s) {
    const BitStream x = BitStream::finite(parse_bits(s));
    const auto t = estimate_transitions(enacting_program(x, x.horizon()), x, x.horizon());
    py::dict d;
    d["object"] = matrix(t.object);
    d["fundament"] = matrix(t.fundament);
    d["joint"] = matrix(t.joint);
    d["sample_count"] = t.sample_count;
    d["joint_is_deterministic"] = t.joint_is_deterministic();
    return d;
  });
  m.def("independence_test",
        [](const std::string& s, double critical_value) {
          const BitString bits = parse_bits(s);
          return independence(independence_test(BitStream::finite(bits), bits.size(), critical_value));
        },
        py::arg("s"), py::arg("critical_value") = default_critical_value);
  m.def("lz76_complexity", [](const std::string& s) {
    const BitString bits = parse_bits(s);
    return lz76_complexity(BitStream::finite(bits), bits.size());
  });
  m.def("demo",
        [](double p0, std::size_t length, std::uint64_t seed, const std::string& format) {
          return render(chaos_demonstration(p0, length, seed), parse_format(format));
        },
        py::arg("p0"), py::arg("length"), py::arg("seed"), py::arg("format") = "json-lines");
}
