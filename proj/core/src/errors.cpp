#include "k3fib/errors.hpp"

namespace k3fib {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "parse_error";
    case Errc::schema_violation: return "schema_violation";
    case Errc::sigma_not_injective: return "sigma_not_injective";
    case Errc::non_cyclic_cokernel: return "non_cyclic_cokernel";
    case Errc::beta_degenerate: return "beta_degenerate";
    case Errc::degenerate_fibre: return "degenerate_fibre";
    case Errc::not_isolated: return "not_isolated";
    case Errc::unit_leading_required: return "unit_leading_required";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace k3fib
