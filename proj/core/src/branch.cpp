#include "k3fib/branch.hpp"

#include "k3fib/errors.hpp"

namespace k3fib {

BranchData branch_data(const RAlgebra& r) {
  BranchData data;
  data.complete = r.tau.split;
  for (const TauPoint& p : r.tau.points) {
    const FibreAlgebra fibre = fibre_at(r, p.location);
    if (!fibre.cone_value)
      throw_internal("unigonal fibre carries no cone value");
    BranchPoint bp;
    bp.location = p.location;
    bp.multiplicity = p.multiplicity;
    bp.cone_value = *fibre.cone_value;
    bp.cone_ok = !bp.cone_value.is_zero();
    data.disjoint = data.disjoint && bp.cone_ok;
    data.points.push_back(std::move(bp));
  }
  return data;
}

}  // namespace k3fib
