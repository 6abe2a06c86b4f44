#include "dtag/atoms.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace dtag {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-';
}

}  // namespace

Atom::Atom(std::string text) : text_(std::move(text)) {
  if (!valid(text_)) {
    throw std::invalid_argument("not a valid atom: '" + text_ + "'");
  }
}

bool Atom::valid(std::string_view text) {
  if (text.empty()) return false;
  const unsigned char first = static_cast<unsigned char>(text.front());
  if (!std::islower(first) && !std::isdigit(first)) return false;
  for (char c : text) {
    if (!is_word_char(c)) return false;
  }
  return true;
}

NodeName::NodeName(std::string text) : text_(std::move(text)) {
  if (!valid(text_)) {
    throw std::invalid_argument("not a valid node name: '" + text_ + "'");
  }
}

bool NodeName::valid(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isupper(static_cast<unsigned char>(text.front()))) return false;
  for (char c : text) {
    if (!is_word_char(c) && c != '+') return false;
  }
  return true;
}

NodeName NodeName::derived(std::string text) {
  if (text.empty() || !std::isupper(static_cast<unsigned char>(text.front()))) {
    throw std::invalid_argument("derived node name must be uppercase-initial: '" + text + "'");
  }
  return NodeName(Unchecked{}, std::move(text));
}

Path Path::of(std::initializer_list<std::string_view> attrs) {
  std::vector<Atom> v;
  v.reserve(attrs.size());
  for (auto a : attrs) v.emplace_back(std::string(a));
  return Path(std::move(v));
}

bool Path::prefix_of(const Path& q) const {
  if (size() > q.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (attrs_[i] != q.attrs_[i]) return false;
  }
  return true;
}

Path Path::concat(const Path& ext) const {
  std::vector<Atom> v = attrs_;
  v.insert(v.end(), ext.attrs_.begin(), ext.attrs_.end());
  return Path(std::move(v));
}

Path Path::append(const Atom& attr) const {
  std::vector<Atom> v = attrs_;
  v.push_back(attr);
  return Path(std::move(v));
}

Path Path::suffix(std::size_t from) const {
  if (from >= attrs_.size()) return Path{};
  return Path(std::vector<Atom>(attrs_.begin() + static_cast<long>(from), attrs_.end()));
}

std::string Path::str() const {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < attrs_.size(); ++i) {
    if (i) out << ' ';
    out << attrs_[i].str();
  }
  out << '>';
  return out.str();
}

}  // namespace dtag
