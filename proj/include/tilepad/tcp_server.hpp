#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "tilepad/facts.hpp"
#include "tilepad/session.hpp"

namespace tilepad::protocol {

// Local TCP transport for the line protocol. Each accepted connection gets
// its own thread and Session; only the fact table is shared (copied per
// connection).
class TcpServer {
 public:
  // Binds and listens immediately; port 0 picks a free port.
  TcpServer(const std::string& host, std::uint16_t port, facts::FactStore facts,
            SessionConfig config = {});
  ~TcpServer();

  TcpServer(const TcpServer&) = delete;
  TcpServer& operator=(const TcpServer&) = delete;

  std::uint16_t port() const { return port_; }

  // Accepts connections until stop() is called.
  void run();
  void stop();

 private:
  void serve_connection(int fd);

  int listen_fd_ = -1;
  std::uint16_t port_ = 0;
  facts::FactStore facts_;
  SessionConfig config_;
  std::atomic<bool> stopping_{false};
  std::mutex mutex_;
  std::set<int> clients_;
  std::vector<std::thread> workers_;
};

}  // namespace tilepad::protocol
