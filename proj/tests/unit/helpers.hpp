#pragma once

#include <vector>

#include "fe/multipoly.hpp"
#include "fe/symreal.hpp"

namespace fe::test {

inline MultiPoly var(std::size_t nvars, std::size_t k) { return MultiPoly::variable(nvars, k); }
inline MultiPoly cst(std::size_t nvars, const SymReal& c) { return MultiPoly::constant(nvars, c); }
inline Rational q(long p, long r) { return Rational(BigInt(p), BigInt(r)); }

inline TablePtr algebraic(std::vector<std::string> names) {
  return SymbolTable::create(std::move(names), IndependenceMode::Algebraic);
}
inline TablePtr qlinear(std::vector<std::string> names) {
  return SymbolTable::create(std::move(names), IndependenceMode::QLinear);
}

}  // namespace fe::test
