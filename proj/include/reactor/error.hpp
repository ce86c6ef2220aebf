#pragma once

#include <stdexcept>
#include <string>

namespace reactor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REACTOR_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// reactor-core
REACTOR_DEFINE_ERROR(InvalidKey);
REACTOR_DEFINE_ERROR(InvalidHandlerSet);
REACTOR_DEFINE_ERROR(ReactorStopped);
REACTOR_DEFINE_ERROR(UnhandledEventKind);
REACTOR_DEFINE_ERROR(NoDrawHandler);

// tracing
REACTOR_DEFINE_ERROR(NotTracing);
REACTOR_DEFINE_ERROR(DuplicateColumn);
REACTOR_DEFINE_ERROR(UnknownColumn);
REACTOR_DEFINE_ERROR(MalformedTable);

// scene
REACTOR_DEFINE_ERROR(NegativeDimension);
REACTOR_DEFINE_ERROR(NonPositiveSize);
REACTOR_DEFINE_ERROR(InvalidColor);
REACTOR_DEFINE_ERROR(MalformedScene);

// engine
REACTOR_DEFINE_ERROR(NoTickHandler);
REACTOR_DEFINE_ERROR(DuplicateHandler);
REACTOR_DEFINE_ERROR(ScriptExhaustedInNestedSession);
REACTOR_DEFINE_ERROR(EngineReentrancy);
REACTOR_DEFINE_ERROR(NoActiveSession);

// protocol / scenarios / cli
REACTOR_DEFINE_ERROR(MalformedMessage);
REACTOR_DEFINE_ERROR(UnknownScenario);
REACTOR_DEFINE_ERROR(BadParameter);
REACTOR_DEFINE_ERROR(MalformedScript);

#undef REACTOR_DEFINE_ERROR

}  // namespace reactor
