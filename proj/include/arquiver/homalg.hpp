#pragma once

#include <optional>

#include "arquiver/interval.hpp"

namespace arq {

struct HomResult {
  int dim = 0;                     // 0 or 1
  std::optional<Interval> witness; // image support I /\ J when dim == 1
};

// dim Hom(M_I, M_J): 1 iff K = I /\ J is nonempty, up-closed in I and
// down-closed in J (in the quiver order); the witness is K.
HomResult hom_dim(const Quiver& q, const Interval& I, const Interval& J);

struct KernelCokernel {
  std::vector<Interval> kernel;    // components of I minus K (at most 2)
  std::vector<Interval> cokernel;  // components of J minus K (at most 2)
};

// Kernel and cokernel supports of a nonzero map M_I -> M_J. A kernel splits
// in two exactly when the image pinches at an interior source (dually for
// cokernels at a sink); combined component count never exceeds 2.
KernelCokernel kernel_cokernel(const Quiver& q, const Interval& I, const Interval& J);

struct MiddleTerm {
  enum class Kind { Indec, Pair } kind = Kind::Indec;
  Interval first;
  Interval second;  // meaningful only for Pair
};

struct ExtResult {
  int dim = 0;  // 0 or 1
  std::optional<MiddleTerm> middle;
};

// dim Ext^1(M_W, M_V), classifying short exact sequences V >-> E ->> W.
// Nonzero exactly when (i) Hom(V, W) = k and the spliced intervals
// (lo V, hi W), (lo W, hi V) are distinct from V and W, middle = the pair;
// or (ii) the supports are disjoint with union an interval U and M_V embeds
// in M_U, middle = U.
ExtResult ext_with_middle(const Quiver& q, const Interval& W, const Interval& V);

enum class NoSequenceReason { Projective, Injective, Simple, Bar };

struct ARSequence {
  int type_tag = 0;  // 1..16
  Interval v1, v2, v3, v4;
  bool contains(const Interval& I) const { return I == v1 || I == v2 || I == v3 || I == v4; }
  int role_of(const Interval& I) const {
    if (I == v1) return 1;
    if (I == v2) return 2;
    if (I == v3) return 3;
    return 4;
  }
};

struct ARQuery {
  std::optional<ARSequence> sequence;
  std::optional<NoSequenceReason> reason;  // set when sequence is absent
};

// The unique almost split sequence V1 >-> V2 (+) V3 ->> V4 containing M_I,
// or the reason none exists (projective / injective / simple / bar).
ARQuery ar_sequence(const Quiver& q, const Interval& I);

}  // namespace arq
