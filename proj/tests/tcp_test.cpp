#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <string>
#include <thread>

#include "doctest.h"
#include "tilepad/tcp_server.hpp"

using namespace tilepad;

namespace {

int connect_to(std::uint16_t port) {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  ::inet_pton(AF_INET, "127.0.0.1", &addr.sin_addr);
  REQUIRE(::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) == 0);
  return fd;
}

std::string read_lines(int fd, int count) {
  std::string got;
  char buf[1024];
  while (std::count(got.begin(), got.end(), '\n') < count) {
    const ssize_t n = ::recv(fd, buf, sizeof(buf), 0);
    if (n <= 0) break;
    got.append(buf, static_cast<std::size_t>(n));
  }
  return got;
}

}  // namespace

TEST_CASE("tcp transport: independent sessions per connection") {
  protocol::TcpServer server("127.0.0.1", 0, facts::FactStore{});
  std::thread loop([&] { server.run(); });

  const int a = connect_to(server.port());
  const int b = connect_to(server.port());
  const std::string place = "{\"type\":\"place\",\"tile\":\"rocket\",\"col\":2,\"row\":0}\n";
  ::send(a, place.data(), place.size(), 0);
  ::send(a, place.data(), place.size(), 0);
  ::send(b, place.data(), place.size(), 0);
  const std::string from_a = read_lines(a, 2);
  const std::string from_b = read_lines(b, 1);
  CHECK(from_a.find("\"seq\":1,") != std::string::npos);
  CHECK(from_a.find("\"seq\":2,\"events\":[],\"diagnostics\":[\"Overlap((2,0))\"]") !=
        std::string::npos);
  CHECK(from_b.starts_with("{\"type\":\"step\",\"seq\":1,"));

  const std::string partial = "{\"type\":";
  ::send(b, partial.data(), partial.size(), 0);
  ::shutdown(b, SHUT_WR);
  CHECK(read_lines(b, 1).starts_with("{\"type\":\"error\",\"code\":\"partial\""));

  ::close(a);
  ::close(b);
  server.stop();
  loop.join();
}
