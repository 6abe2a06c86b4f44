#include "dtag/printer.hpp"

#include <algorithm>
#include <sstream>

namespace dtag {

std::string canonical_print(const Theory& t) {
  std::ostringstream out;
  bool first_block = true;
  for (const NodeName& name : t.source_order()) {
    if (!first_block) out << '\n';
    first_block = false;

    std::vector<const Sentence*> sorted;
    for (const Sentence& s : *t.node(name)) sorted.push_back(&s);
    std::sort(sorted.begin(), sorted.end(),
              [](const Sentence* a, const Sentence* b) { return a->path < b->path; });

    out << name.str() << ":\n";
    for (const Sentence* s : sorted) {
      out << "  " << s->path.str() << " == " << s->rvalue.str() << '\n';
    }
    out << ".\n";
  }
  return out.str();
}

}  // namespace dtag
