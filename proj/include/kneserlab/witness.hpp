#pragma once

#include <string>
#include <utility>
#include <vector>

namespace kneserlab {

// A failed check together with the subspaces needed to reproduce it.
struct Violation {
  std::string check;
  std::string detail;
  std::vector<std::pair<std::string, std::vector<std::string>>> spaces;  // name -> canonical rows
};

template <class Space>
std::pair<std::string, std::vector<std::string>> named(std::string name, const Space& x) {
  return {std::move(name), x.serialize()};
}

}  // namespace kneserlab
