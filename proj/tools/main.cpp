#include <iostream>
#include <string>
#include <vector>

#include "hiccup/cli.hpp"

#ifdef HICCUP_WITH_FETCH
#include <stdexcept>

#include "httplib.h"

namespace {

std::string fetch_over_https(const std::string& url) {
  const std::string scheme_host = "https://oeis.org";
  if (url.rfind(scheme_host, 0) != 0) {
    throw std::runtime_error("refusing to fetch outside oeis.org: " + url);
  }
  httplib::Client client(scheme_host);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const auto response = client.Get(url.substr(scheme_host.size()));
  if (!response) {
    throw std::runtime_error("fetch failed: " + httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw std::runtime_error("fetch failed: HTTP " + std::to_string(response->status) + " for " + url);
  }
  return response->body;
}

}  // namespace
#endif

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
#ifdef HICCUP_WITH_FETCH
  return hiccup::cli::run(args, std::cout, std::cerr, fetch_over_https);
#else
  return hiccup::cli::run(args, std::cout, std::cerr);
#endif
}
