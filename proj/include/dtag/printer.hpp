#ifndef DTAG_PRINTER_HPP_
#define DTAG_PRINTER_HPP_

#include <string>

#include "dtag/theory.hpp"

namespace dtag {

/// Canonical pretty-print: one node per block in source order, sentences
/// sorted by path, two-space indent, '==' for every sentence, closing '.'
/// on its own line. Re-parsing the output yields an equal Theory (the
/// '='/'==' distinction is not preserved).
std::string canonical_print(const Theory& t);

}  // namespace dtag

#endif  // DTAG_PRINTER_HPP_
