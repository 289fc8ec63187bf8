#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tvbrep/error.hpp"

namespace tvbrep {

// Ordered, immutable list of indeterminate names shared by every element of a
// polynomial ring. The order fixes the monomial order and serialization.
class Variables {
 public:
  Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}
  Variables(std::initializer_list<std::string> names) : Variables(std::vector<std::string>(names)) {}
  explicit Variables(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!valid_name(names[i])) throw ParseError("invalid variable name '" + names[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names[j] == names[i]) throw ParseError("duplicate variable name '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
  }
  bool contains(const std::string& name) const { return index_of(name).has_value(); }

  // Comma-joined, as used inside ring descriptors.
  std::string joined() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ",";
      out += (*names_)[i];
    }
    return out;
  }

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

  static bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace tvbrep
