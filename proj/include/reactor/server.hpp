#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace reactor {

inline constexpr std::uint16_t kDefaultPort = 8642;

/// WebSocket server for live sessions at ws://<host>:<port>/session.
///
/// Each connection can run one scenario at a time on its own engine thread;
/// messages follow the grammar in reactor/protocol.hpp.
class Server {
 public:
  /// Binds and listens immediately. Port 0 picks a free port.
  explicit Server(std::uint16_t port, const std::string& address = "0.0.0.0");
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  std::uint16_t port() const;

  /// Serves on a background thread until stop().
  void start();
  /// Serves on the calling thread until stop() is called from elsewhere.
  void run();
  /// Interrupts every running session and stops serving.
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace reactor
