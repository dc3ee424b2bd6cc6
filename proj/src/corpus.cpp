#include "pifit/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pifit {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("corpus line " + std::to_string(line) + ": " + msg);
}

/// Split a gens= payload on commas that sit between cycles (i.e. outside
/// parentheses commas never occur; cycles use spaces), so a plain split works.
std::vector<std::string> split_gens(const std::string& payload, int line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(payload);
  while (std::getline(in, cur, ',')) {
    cur = trim(cur);
    if (cur.empty()) fail(line, "empty generator entry");
    out.push_back(cur);
  }
  if (out.empty()) fail(line, "gens= lists no generators");
  return out;
}

}  // namespace

std::vector<GroupDefinition> parse_corpus(const std::string& text) {
  std::vector<GroupDefinition> defs;
  std::map<std::string, int> names;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "expected 'name: ...'");
    GroupDefinition def;
    def.line = lineno;
    def.name = trim(line.substr(0, colon));
    if (def.name.empty()) fail(lineno, "empty group name");
    if (names.count(def.name)) fail(lineno, "duplicate group name '" + def.name + "'");
    names[def.name] = lineno;

    std::string rest = trim(line.substr(colon + 1));
    if (rest.rfind("product=", 0) == 0) {
      std::string payload = trim(rest.substr(8));
      auto star = payload.find('*');
      if (star == std::string::npos) fail(lineno, "product= needs the form a*b");
      std::string a = trim(payload.substr(0, star));
      std::string b = trim(payload.substr(star + 1));
      if (a.empty() || b.empty()) fail(lineno, "product= needs two operand names");
      def.product = {a, b};
    } else {
      std::istringstream fields(rest);
      std::string field;
      bool saw_degree = false, saw_gens = false;
      while (std::getline(fields, field, ';')) {
        field = trim(field);
        if (field.empty()) continue;
        if (field.rfind("degree=", 0) == 0) {
          try {
            def.degree = std::stoul(trim(field.substr(7)));
          } catch (const std::exception&) {
            fail(lineno, "malformed degree");
          }
          saw_degree = true;
        } else if (field.rfind("gens=", 0) == 0) {
          def.generators = split_gens(trim(field.substr(5)), lineno);
          saw_gens = true;
        } else {
          fail(lineno, "unknown field '" + field + "'");
        }
      }
      if (!saw_degree || !saw_gens) fail(lineno, "record needs degree= and gens=");
      if (def.degree == 0) fail(lineno, "degree must be positive");
    }
    defs.push_back(std::move(def));
  }
  return defs;
}

Corpus build_corpus(const std::vector<GroupDefinition>& defs, const GenOptions& opt) {
  Corpus corpus;
  auto lookup = [&](const std::string& name, int line) -> GroupPtr {
    for (const auto& ng : corpus)
      if (ng.name == name) return ng.group;
    fail(line, "product operand '" + name + "' is not defined above");
  };
  for (const auto& def : defs) {
    try {
      GroupPtr g;
      if (def.product) {
        g = Group::direct_product(*lookup(def.product->first, def.line),
                                  *lookup(def.product->second, def.line), def.name, opt);
      } else {
        std::vector<Perm> gens;
        for (const auto& text : def.generators) gens.push_back(parse_perm(text, def.degree));
        g = Group::generate(std::move(gens), def.name, opt);
      }
      corpus.push_back({def.name, std::move(g)});
    } catch (const ParseError& e) {
      fail(def.line, std::string(e.what()) + " (group '" + def.name + "')");
    } catch (const CapError& e) {
      throw CapError("group '" + def.name + "' (corpus line " + std::to_string(def.line) +
                     "): " + e.what());
    }
  }
  return corpus;
}

Corpus load_corpus_file(const std::string& path, const GenOptions& opt) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return build_corpus(parse_corpus(buf.str()), opt);
}

const std::string& default_corpus_text() {
  static const std::string text =
      "# Default verification corpus.\n"
      "# Record format: name: degree=<n>; gens=<cycles>[,<cycles>...]\n"
      "#            or: name: product=<a>*<b>\n"
      "S3: degree=3; gens=(1 2),(1 2 3)\n"
      "S4: degree=4; gens=(1 2),(1 2 3 4)\n"
      "A4: degree=4; gens=(1 2 3),(1 2)(3 4)\n"
      "V4: degree=4; gens=(1 2)(3 4),(1 3)(2 4)\n"
      "Q8: degree=8; gens=(1 3 2 4)(5 7 6 8),(1 5 2 6)(3 8 4 7)\n"
      "D8: degree=4; gens=(1 2 3 4),(1 3)\n"
      "C12: degree=7; gens=(1 2 3 4)(5 6 7)\n"
      "SL23: degree=8; gens=(3 4 5)(6 8 7),(1 3 2 6)(4 5 8 7)\n"
      "F21: degree=7; gens=(1 2 3 4 5 6 7),(2 3 5)(4 7 6)  # C7 : C3, Frobenius of order 21\n"
      "S3xS3: product=S3*S3\n"
      "A5: degree=5; gens=(1 2 3 4 5),(1 2 3)\n"
      "C7: degree=7; gens=(1 2 3 4 5 6 7)\n"
      "A5xC7: product=A5*C7\n";
  return text;
}

Corpus default_corpus(const GenOptions& opt) {
  return build_corpus(parse_corpus(default_corpus_text()), opt);
}

const NamedGroup& find_group(const Corpus& corpus, const std::string& name) {
  for (const auto& ng : corpus)
    if (ng.name == name) return ng;
  throw DomainError("unknown group '" + name + "' (not in corpus)");
}

}  // namespace pifit
