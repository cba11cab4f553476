#include "pal2v/delay.hpp"

#include <cerrno>
#include <cstring>

#include <fmt/format.h>

#if defined(__linux__)
#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/ip.h>
#include <netinet/ip_icmp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>
#endif

namespace pal2v {

#if defined(__linux__)
namespace {

constexpr const char* kReplayHint = "; rerun with --offline FILE to replay a recorded trace";

class Socket {
 public:
  Socket(int fd, bool raw) : fd_(fd), raw_(raw) {}
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  int fd() const noexcept { return fd_; }
  bool raw() const noexcept { return raw_; }

 private:
  int fd_;
  bool raw_;
};

// Unprivileged ping sockets first, raw sockets as a fallback for root.
Socket open_icmp_socket() {
  int fd = ::socket(AF_INET, SOCK_DGRAM, IPPROTO_ICMP);
  if (fd >= 0) return Socket(fd, false);
  const int dgram_errno = errno;
  fd = ::socket(AF_INET, SOCK_RAW, IPPROTO_ICMP);
  if (fd >= 0) return Socket(fd, true);
  throw ProberUnavailable(fmt::format("live ICMP probing unavailable ({}){}",
                                      std::strerror(dgram_errno), kReplayHint));
}

sockaddr_in resolve(const std::string& host) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  addrinfo* found = nullptr;
  if (const int rc = ::getaddrinfo(host.c_str(), nullptr, &hints, &found); rc != 0 || !found) {
    throw ProbeError(fmt::format("cannot resolve host '{}': {}", host, ::gai_strerror(rc)));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, found->ai_addr, sizeof(addr));
  ::freeaddrinfo(found);
  return addr;
}

std::uint16_t checksum(const std::vector<unsigned char>& bytes) {
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
    sum += static_cast<std::uint32_t>(bytes[i] << 8 | bytes[i + 1]);
  }
  if (bytes.size() % 2 != 0) sum += static_cast<std::uint32_t>(bytes.back() << 8);
  while (sum >> 16) sum = (sum & 0xffff) + (sum >> 16);
  return htons(static_cast<std::uint16_t>(~sum));
}

std::vector<unsigned char> echo_request(std::uint16_t id, std::uint16_t seq, int payload) {
  std::vector<unsigned char> packet(sizeof(icmphdr) + static_cast<std::size_t>(payload));
  for (std::size_t i = sizeof(icmphdr); i < packet.size(); ++i) {
    packet[i] = static_cast<unsigned char>(i & 0xff);
  }
  icmphdr header{};
  header.type = ICMP_ECHO;
  header.un.echo.id = htons(id);
  header.un.echo.sequence = htons(seq);
  std::memcpy(packet.data(), &header, sizeof(header));
  const std::uint16_t sum = checksum(packet);
  std::memcpy(packet.data() + offsetof(icmphdr, checksum), &sum, sizeof(sum));
  return packet;
}

// True when `bytes` holds an echo reply carrying `seq`.
bool is_reply(const unsigned char* bytes, std::size_t size, bool raw, std::uint16_t id,
              std::uint16_t seq) {
  if (raw) {
    if (size < sizeof(iphdr)) return false;
    const std::size_t ip_len = static_cast<std::size_t>(bytes[0] & 0x0f) * 4;
    if (size < ip_len) return false;
    bytes += ip_len;
    size -= ip_len;
  }
  if (size < sizeof(icmphdr)) return false;
  icmphdr header{};
  std::memcpy(&header, bytes, sizeof(header));
  if (header.type != ICMP_ECHOREPLY || ntohs(header.un.echo.sequence) != seq) return false;
  // Datagram ping sockets rewrite the identifier, so only raw sockets check it.
  return !raw || ntohs(header.un.echo.id) == id;
}

}  // namespace

DelayProbeReport IcmpProber::probe(const ProbeRequest& request) {
  Socket sock = open_icmp_socket();
  const sockaddr_in target = resolve(request.host);
  const auto id = static_cast<std::uint16_t>(::getpid() & 0xffff);

  DelayProbeReport report;
  report.host = request.host;
  report.packet_size = request.size_bytes;
  std::vector<unsigned char> buffer(65536);

  for (int i = 0; i < request.count; ++i) {
    const auto seq = static_cast<std::uint16_t>(i + 1);
    const auto packet = echo_request(id, seq, request.size_bytes);
    const auto start = std::chrono::steady_clock::now();
    const auto deadline = start + timeout_;
    if (::sendto(sock.fd(), packet.data(), packet.size(), 0,
                 reinterpret_cast<const sockaddr*>(&target), sizeof(target)) < 0) {
      if (errno == EPERM || errno == EACCES) {
        throw ProberUnavailable(
            fmt::format("sending ICMP echo not permitted ({}){}", std::strerror(errno), kReplayHint));
      }
      throw ProbeError(fmt::format("cannot reach '{}': {}", request.host, std::strerror(errno)));
    }
    ++report.sent;

    for (;;) {
      const auto now = std::chrono::steady_clock::now();
      if (now >= deadline) break;
      pollfd pfd{sock.fd(), POLLIN, 0};
      const auto wait =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count() + 1;
      const int ready = ::poll(&pfd, 1, static_cast<int>(wait));
      if (ready < 0 && errno == EINTR) continue;
      if (ready <= 0) break;
      const ssize_t got = ::recv(sock.fd(), buffer.data(), buffer.size(), 0);
      if (got < 0) break;
      if (is_reply(buffer.data(), static_cast<std::size_t>(got), sock.raw(), id, seq)) {
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        report.delays_ms.push_back(elapsed.count());
        ++report.received;
        break;
      }
    }
  }
  return report;
}

#else

DelayProbeReport IcmpProber::probe(const ProbeRequest&) {
  throw ProberUnavailable(
      "live ICMP probing is only implemented on Linux; rerun with --offline FILE to replay a "
      "recorded trace");
}

#endif

}  // namespace pal2v
