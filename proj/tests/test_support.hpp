#pragma once

#include "arquiver/derived.hpp"
#include "arquiver/oracle.hpp"

namespace arqtest {

using namespace arq;

inline Quiver q1() {  // single sink at 0
  QuiverData d;
  d.points = {Rat(0)};
  d.first_index_parity = Parity::Even;
  return Quiver::validate(std::move(d));
}

inline Quiver q01_odd() {  // source 0, sink 1
  QuiverData d;
  d.points = {Rat(0), Rat(1)};
  d.first_index_parity = Parity::Odd;
  return Quiver::validate(std::move(d));
}

inline Quiver q0123_even() {  // sinks 0 and 2, sources 1 and 3
  QuiverData d;
  d.points = {Rat(0), Rat(1), Rat(2), Rat(3)};
  d.first_index_parity = Parity::Even;
  return Quiver::validate(std::move(d));
}

inline Interval iv(const std::string& s) { return parse_interval(s); }

}  // namespace arqtest
