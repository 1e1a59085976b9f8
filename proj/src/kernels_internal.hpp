#pragma once

#include "iqmis/kernels.hpp"

namespace iqmis::kernels {

extern const Ops scalar_ops;

#ifdef IQMIS_WITH_AVX2
extern const Ops avx2_ops;
#endif

}  // namespace iqmis::kernels
