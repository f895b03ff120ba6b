#include "monopole/reference.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>

#include "monopole/errors.hpp"

#ifndef MONOPOLE_DATA_DIR
#define MONOPOLE_DATA_DIR "data"
#endif

namespace monopole {

namespace {

struct Derivative {
  bool momentum = true;
  char index = 'i';
};

struct Field {
  char i = 'i';
  char j = 'j';
  int derivative = -1;  // index letter of dq^k, or -1
};

Derivative parse_derivative(const std::string& s) {
  static const std::regex re(R"(^(p_|q\^)([a-z])$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ConfigError("reference table: bad derivative '" + s + "'");
  return {m[1] == "p_", m[2].str()[0]};
}

Field parse_field(const std::string& s) {
  static const std::regex re(R"(^(?:dq\^([a-z]) )?beta_([a-z])([a-z])$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ConfigError("reference table: bad field factor '" + s + "'");
  Field f;
  f.i = m[2].str()[0];
  f.j = m[3].str()[0];
  if (m[1].matched) f.derivative = m[1].str()[0];
  return f;
}

void expand_term(const io::json& term, BidiffOperator& out) {
  const GaussianRational coeff = io::gaussian_from_json(term.at("coeff"));
  std::vector<Field> fields;
  std::vector<Derivative> left;
  std::vector<Derivative> right;
  std::vector<char> letters;
  auto note = [&letters](char c) {
    if (std::find(letters.begin(), letters.end(), c) == letters.end()) letters.push_back(c);
  };
  for (const auto& f : term.at("field")) {
    fields.push_back(parse_field(f.get<std::string>()));
    note(fields.back().i);
    note(fields.back().j);
    if (fields.back().derivative >= 0) note(static_cast<char>(fields.back().derivative));
  }
  for (const auto& d : term.at("left")) {
    left.push_back(parse_derivative(d.get<std::string>()));
    note(left.back().index);
  }
  for (const auto& d : term.at("right")) {
    right.push_back(parse_derivative(d.get<std::string>()));
    note(right.back().index);
  }

  std::size_t combos = 1;
  for (std::size_t t = 0; t < letters.size(); ++t) combos *= 3;
  std::map<char, int> value;
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    for (char l : letters) {
      value[l] = static_cast<int>(rest % 3);
      rest /= 3;
    }
    RadialFunction factor = RadialFunction::constant(coeff);
    for (const Field& f : fields) {
      RadialFunction b = beta(value[f.i], value[f.j]);
      if (f.derivative >= 0) b = b.diff(value[static_cast<char>(f.derivative)]);
      factor = factor * b;
    }
    if (factor.is_zero()) continue;
    DerivKey lk{};
    DerivKey rk{};
    for (const Derivative& d : left) ++lk[(d.momentum ? 0 : 3) + value[d.index]];
    for (const Derivative& d : right) ++rk[(d.momentum ? 0 : 3) + value[d.index]];
    out.add(lk, rk, factor);
  }
}

}  // namespace

std::string default_data_dir() { return MONOPOLE_DATA_DIR; }

std::vector<BidiffOperator> load_operator_table(const io::json& table) {
  std::vector<BidiffOperator> ops;
  for (const auto& entry : table.at("orders")) {
    const int order = entry.at("order").get<int>();
    if (order < 0) throw ConfigError("reference table: negative order");
    if (static_cast<std::size_t>(order) >= ops.size()) ops.resize(static_cast<std::size_t>(order) + 1);
    for (const auto& term : entry.at("terms")) expand_term(term, ops[static_cast<std::size_t>(order)]);
  }
  return ops;
}

std::vector<BidiffOperator> load_operator_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open reference table '" + path + "'");
  io::json table;
  try {
    table = io::json::parse(in);
  } catch (const io::json::parse_error& e) {
    throw ConfigError("reference table '" + path + "': " + e.what());
  }
  return load_operator_table(table);
}

}  // namespace monopole
