#ifndef MINUS_ONE_FIXTURES_HPP
#define MINUS_ONE_FIXTURES_HPP

// Default test points per family: interior points of each admissible region,
// away from denominator zeros. Reports name them so runs are reproducible.

#include <string>
#include <vector>

#include "minus_one/family.hpp"

namespace minus_one {

inline std::vector<std::string> fixture_points(FamilyId id) {
  switch (id) {
    case FamilyId::continuous_bannai_ito:
      return {"alpha=1/4,beta=1,gamma=1/4,delta=1/2", "alpha=1/2,beta=1/3,gamma=1,delta=1/4",
              "alpha=1,beta=1,gamma=1/2,delta=1/2"};
    case FamilyId::continuous_minus1_hahn_1:
    case FamilyId::continuous_minus1_hahn_2:
      return {"alpha=1/4,beta=1,gamma=1/2", "alpha=1/2,beta=1/3,gamma=1/4", "alpha=1,beta=1/2,gamma=1/2"};
    case FamilyId::big_minus1_jacobi:
      return {"alpha=1,beta=2,c=1/2", "alpha=1/2,beta=3/2,c=3/10", "alpha=2,beta=1,c=1/4"};
    case FamilyId::chihara:
      return {"alpha=1/2,beta=3/2,gamma=1/4", "alpha=1,beta=1/2,gamma=1/2", "alpha=0,beta=1,gamma=3/4"};
    case FamilyId::generalized_symmetric_bannai_ito:
      return {"a=1/2+1/2i,b=1/2-1/2i,c=1", "a=1,b=1,c=1", "a=1/2,b=3/2,c=2"};
    case FamilyId::little_minus1_jacobi:
      return {"alpha=1,beta=2", "alpha=1/2,beta=3/2", "alpha=2,beta=1"};
    case FamilyId::generalized_gegenbauer:
      return {"alpha=1/2,beta=3/2", "alpha=0,beta=1", "alpha=1,beta=1/2"};
    case FamilyId::minus1_meixner_pollaczek:
      return {"alpha=3/4,gamma=1/2", "alpha=1,gamma=1/4", "alpha=1/2,gamma=1"};
    case FamilyId::symmetric_bannai_ito:
      return {"a=1/2,b=3/2", "a=1,b=1", "a=3/4,b=2"};
    case FamilyId::special_little_minus1_jacobi:
      return {"alpha=3/2", "alpha=1", "alpha=2"};
    case FamilyId::gegenbauer:
      return {"alpha=1/2", "alpha=3/2", "alpha=1"};
    case FamilyId::generalized_hermite:
      return {"alpha=3/4", "alpha=1", "alpha=1/2"};
    case FamilyId::hermite:
      return {""};
    case FamilyId::continuous_complementary_bannai_ito:
      return {"a1=1/2,b1=1,a2=1,b2=1/2", "a1=3/4,b1=1/2,a2=1,b2=0", "a1=1,b1=1/3,a2=3/2,b2=1/4"};
    case FamilyId::wilson:
      return {"a=1/2,b=1,c=3/2,d=2"};
    case FamilyId::continuous_dual_hahn:
      return {"a=1/2,b=1,c=3/2"};
    case FamilyId::little_q_jacobi_dilated:
      return {"a=1/2,b=1/3,q=-1/2,sign=1"};
    case FamilyId::continuous_q_hahn:
      return {"a=1/2,b=1/3,phi=1,q=-1/2"};
    case FamilyId::q_meixner_pollaczek:
      return {"a=1/2,phi=1,q=-1/2"};
    case FamilyId::big_q_jacobi:
      return {"a=1/2,b=1/3,c=1/4,q=-1/2"};
  }
  return {};
}

}  // namespace minus_one

#endif
