#pragma once

#include "cotorlab/module.hpp"

namespace testsupport {

// Same structure constants, unit and grading; labels and augmentation may differ
// (a coalgebra does not remember the augmentation of the algebra it came from).
inline bool same_algebra(const cotorlab::Algebra& a, const cotorlab::Algebra& b) {
    return a.field() == b.field() && a.dim() == b.dim() &&
           a.structure_constants() == b.structure_constants() && a.unit() == b.unit() &&
           a.grading() == b.grading();
}

template <class M>
bool same_module(const M& a, const M& b) {
    return same_algebra(a.algebra(), b.algebra()) && a.actions() == b.actions() &&
           a.grading() == b.grading();
}

}  // namespace testsupport
