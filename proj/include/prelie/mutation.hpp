#pragma once

namespace prelie::testing {

/// Deliberate defects that the verification suite must detect. Production
/// code paths consult active_mutant() at exactly one place per mutant.
enum class Mutant {
  none,
  bernoulli_b1_sign,    // B_1 = +1/2 instead of -1/2
  c_coefficient_sign,   // c(1,1) negated
  admissibility_order,  // block maxima compared with > instead of <
};

Mutant active_mutant();

/// Installs a mutant for the lifetime of the object. Not thread-safe; meant
/// for single-threaded mutation smoke tests only.
class ScopedMutant {
 public:
  explicit ScopedMutant(Mutant m);
  ~ScopedMutant();
  ScopedMutant(const ScopedMutant&) = delete;
  ScopedMutant& operator=(const ScopedMutant&) = delete;

 private:
  Mutant previous_;
};

}  // namespace prelie::testing
