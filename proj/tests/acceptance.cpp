#include <cstdio>
#include <string>

#include <json.hpp>

#include "meshk0/meshk0.h"

int main() {
  char* out = nullptr;
  meshk0_status status = meshk0_verify(8, 6, 0, 20240611, nullptr, 0, &out);
  if (status != MESHK0_OK && status != MESHK0_ERR_MISMATCH) {
    std::fprintf(stderr, "verification could not run: %s\n", meshk0_last_error());
    return 2;
  }
  nlohmann::json report = nlohmann::json::parse(out);
  meshk0_string_free(out);

  for (const auto& c : report["criteria"]) {
    std::printf("%s criterion %d: %s (%ld checks, %ld failures, %.2fs)\n", c["passed"].get<bool>() ? "PASS" : "FAIL",
                c["id"].get<int>(), c["title"].get<std::string>().c_str(), c["checks"].get<long>(),
                c["failures"].get<long>(), c["seconds"].get<double>());
    for (const auto& sample : c["samples"]) std::printf("    %s\n", sample.get<std::string>().c_str());
  }
  return report["passed"].get<bool>() ? 0 : 1;
}
