#pragma once

#include "pjts/model.hpp"

namespace pjts {

LinOp l_op(const TripleSystem& V, const Element& x, const Element& y);
LinOp q_op(const TripleSystem& V, const Element& x);
LinOp bergman(const TripleSystem& V, const Element& x, const Element& y);
LinOp dual_bergman(const TripleSystem& V, const Element& x, const Element& y);
double trace_form(const TripleSystem& V, const Element& x, const Element& y);

}  // namespace pjts
