#include "ultra/circuit.hpp"
#include "ultra/error.hpp"

namespace ultra {

namespace {

const char* op_name(ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return "add";
    case ArithOp::sub:
      return "sub";
    case ArithOp::mul:
      return "mul";
  }
  return "?";
}

ArithOp op_from_name(const std::string& name) {
  if (name == "add") return ArithOp::add;
  if (name == "sub") return ArithOp::sub;
  if (name == "mul") return ArithOp::mul;
  throw ParseError("unknown SLP op \"" + name + "\"");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::uint32_t node_index(const Json& j) {
  if (!j.is_number_unsigned()) throw ParseError("SLP operand must be a non-negative integer");
  const auto v = j.get<std::uint64_t>();
  if (v > UINT32_MAX) throw ParseError("SLP operand out of range");
  return static_cast<std::uint32_t>(v);
}

Rational constant(const Json& j) {
  if (!j.is_string()) throw ParseError("circuit constants are strings like \"3\" or \"-1/2\"");
  return parse_rational(j.get<std::string>());
}

std::vector<std::uint64_t> exponents(const Json& j) {
  if (!j.is_array()) throw ParseError("exponent vector must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw ParseError("exponents must be non-negative integers");
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

}  // namespace

Json slp_to_json(const Slp& prog) {
  Json ops = Json::array();
  for (const auto& ins : prog.ops()) {
    Json o;
    o["op"] = op_name(ins.op);
    o["l"] = ins.left;
    o["r"] = ins.right;
    ops.push_back(std::move(o));
  }
  Json j;
  j["ops"] = std::move(ops);
  if (prog.has_explicit_output()) j["out"] = prog.output();
  return j;
}

Slp slp_from_json(const Json& j) {
  const Json& ops = field(j, "ops");
  if (!ops.is_array()) throw ParseError("\"ops\" must be an array");
  std::vector<SlpInstruction> out;
  for (const auto& o : ops) {
    const Json& name = field(o, "op");
    if (!name.is_string()) throw ParseError("\"op\" must be a string");
    out.push_back({op_from_name(name.get<std::string>()), node_index(field(o, "l")), node_index(field(o, "r"))});
  }
  std::optional<std::uint32_t> output;
  if (j.contains("out")) output = node_index(j.at("out"));
  try {
    return Slp(std::move(out), output);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json circuit_to_json(const AdditiveCircuit& c) {
  Json gates = Json::array();
  for (const Gate& g : c.gates) {
    Json o;
    o["c"] = to_string(g.c);
    o["d"] = to_string(g.d);
    o["m"] = g.m;
    o["mp"] = g.mp;
    gates.push_back(std::move(o));
  }
  Json j;
  j["s"] = c.s();
  j["gates"] = std::move(gates);
  Json fin;
  fin["c"] = to_string(c.final.c);
  fin["m"] = c.final.m;
  j["final"] = std::move(fin);
  return j;
}

AdditiveCircuit circuit_from_json(const Json& j) {
  const Json& s = field(j, "s");
  if (!s.is_number_unsigned()) throw ParseError("\"s\" must be a non-negative integer");
  const Json& gates = field(j, "gates");
  if (!gates.is_array()) throw ParseError("\"gates\" must be an array");
  AdditiveCircuit c;
  for (const auto& g : gates) {
    c.gates.push_back({constant(field(g, "c")), constant(field(g, "d")), exponents(field(g, "m")),
                       exponents(field(g, "mp"))});
  }
  if (s.get<std::uint64_t>() != c.gates.size()) throw ParseError("\"s\" does not match the number of gates");
  const Json& fin = field(j, "final");
  c.final = {constant(field(fin, "c")), exponents(field(fin, "m"))};
  try {
    c.check_shape(CoefficientRing::rationals);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  return c;
}

}  // namespace ultra
