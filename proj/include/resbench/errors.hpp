#pragma once

#include <stdexcept>

namespace resbench {

// Base type for every error the benchmark raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define RESBENCH_ERROR_TYPE(NAME) \
  struct NAME : Error {           \
    using Error::Error;           \
  }

RESBENCH_ERROR_TYPE(VertexOutOfRange);
RESBENCH_ERROR_TYPE(DisconnectedSubgraph);
RESBENCH_ERROR_TYPE(DisconnectedGraph);
RESBENCH_ERROR_TYPE(TooLarge);
RESBENCH_ERROR_TYPE(NonCliffordGate);
RESBENCH_ERROR_TYPE(LengthMismatch);
RESBENCH_ERROR_TYPE(EmptyCounts);
RESBENCH_ERROR_TYPE(NoPath);
RESBENCH_ERROR_TYPE(WrongArity);
RESBENCH_ERROR_TYPE(NotAnEdge);
RESBENCH_ERROR_TYPE(SingularCalibration);
RESBENCH_ERROR_TYPE(WidthMismatch);
RESBENCH_ERROR_TYPE(GroupTooLarge);
RESBENCH_ERROR_TYPE(ConstantSeries);
RESBENCH_ERROR_TYPE(EmptySeries);
RESBENCH_ERROR_TYPE(IoError);
RESBENCH_ERROR_TYPE(ConfigError);

#undef RESBENCH_ERROR_TYPE

}  // namespace resbench
