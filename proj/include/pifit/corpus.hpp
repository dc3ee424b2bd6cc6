#ifndef PIFIT_CORPUS_HPP
#define PIFIT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pifit/group.hpp"

namespace pifit {

/// One corpus record: either generators at a fixed degree or a direct
/// product of two previously defined groups.
struct GroupDefinition {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;                        // cycle strings
  std::optional<std::pair<std::string, std::string>> product;  // product=<a>*<b>
  int line = 0;
};

struct NamedGroup {
  std::string name;
  GroupPtr group;
};
using Corpus = std::vector<NamedGroup>;

/// Record format, one per line: `name: degree=<n>; gens=<cycles>[,<cycles>...]`
/// or `name: product=<a>*<b>`. `#` starts a comment; names must be unique.
std::vector<GroupDefinition> parse_corpus(const std::string& text);

/// Build groups in declaration order; products resolve after their
/// operands. Errors carry line numbers and group names.
Corpus build_corpus(const std::vector<GroupDefinition>& defs, const GenOptions& opt = {});

Corpus load_corpus_file(const std::string& path, const GenOptions& opt = {});

/// The corpus shipped with the tool (identical to data/default_corpus.txt).
const std::string& default_corpus_text();
Corpus default_corpus(const GenOptions& opt = {});

const NamedGroup& find_group(const Corpus& corpus, const std::string& name);

}  // namespace pifit

#endif
