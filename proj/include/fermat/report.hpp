#pragma once

#include <optional>
#include <string>

#include "fermat/nat.hpp"

namespace fermat {

enum class Method { naive, digit_dp, closed_form, oracle };

// Result of a p-rank computation.  genus is absent for curves whose genus is
// not modeled here (the two function-field towers below).
struct PRankReport {
  Nat gamma;
  std::optional<Nat> genus;
  Method method = Method::naive;
  std::optional<bool> supersingular;
  std::string notes;
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::digit_dp: return "digit_dp";
    case Method::closed_form: return "closed_form";
    case Method::oracle: return "oracle";
  }
  return "?";
}

}  // namespace fermat
